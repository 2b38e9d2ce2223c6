//! Exact linear maps with tracked tensor-leg shapes.
//!
//! A [`LinearMap`] is a `rows × cols` matrix over one exact field. Columns
//! are the images of domain basis vectors. Tensor factors are tracked as
//! leg shapes: the basis of `V ⊗ W` is ordered row-major, `(i, j) ↦
//! i·dim(W) + j`, and every structure map in the crate is expressed in
//! this one convention.
//!
//! Entries are stored column-sparse (explicit zeros are never kept), which
//! is what makes the braiding checks on six-fold tensor powers of a
//! six-dimensional Hopf algebra tractable. Semantically the maps are
//! plain dense matrices: `entry(r, c)` is defined everywhere and equality
//! is entrywise.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::scalar::{FieldSpec, Scalar};

/// Errors from linear-map operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinError {
    /// Composition with mismatched shapes; carries both shapes.
    Shape {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    /// Inversion of a non-square map.
    NotSquare { rows: usize, cols: usize },
    /// Inversion of a singular map; carries the rank found.
    Singular { rank: usize },
    /// Operands live over different fields.
    FieldMismatch { lhs: FieldSpec, rhs: FieldSpec },
}

impl fmt::Display for LinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinError::Shape { op, lhs, rhs } => write!(
                f,
                "{op}: shape mismatch, left is {}x{}, right is {}x{}",
                lhs.0, lhs.1, rhs.0, rhs.1
            ),
            LinError::NotSquare { rows, cols } => {
                write!(f, "cannot invert non-square {rows}x{cols} map")
            }
            LinError::Singular { rank } => write!(f, "not invertible (rank {rank})"),
            LinError::FieldMismatch { lhs, rhs } => {
                write!(f, "field mismatch: {lhs} vs {rhs}")
            }
        }
    }
}

/// Sparse column: `(row, coeff)` pairs sorted by row, no zero coeffs.
pub type SparseCol = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct LinearMap {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<SparseCol>,
    leg_in: Vec<usize>,
    leg_out: Vec<usize>,
}

impl PartialEq for LinearMap {
    /// Entrywise equality; leg shapes are bookkeeping and do not count.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for LinearMap {}

fn product(dims: &[usize]) -> usize {
    dims.iter().product()
}

impl LinearMap {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        LinearMap {
            field,
            rows,
            cols,
            data: vec![Vec::new(); cols],
            leg_in: vec![cols],
            leg_out: vec![rows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for j in 0..n {
            m.data[j].push((j, field.one()));
        }
        m
    }

    /// Builds from a dense row-major grid; zeros are dropped.
    pub fn from_rows(field: FieldSpec, grid: &[Vec<Scalar>]) -> Self {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        for (i, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i} in dense grid");
        }
        let mut m = Self::zero(field, rows, cols);
        for (i, row) in grid.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    assert_eq!(v.field(), field, "entry field mismatch at ({i},{j})");
                    m.data[j].push((i, v.clone()));
                }
            }
        }
        m
    }

    /// Builds from integer entries over the given field.
    pub fn from_int_rows(field: FieldSpec, grid: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> = grid
            .iter()
            .map(|row| row.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, &dense)
    }

    /// Column-oriented constructor; each column must be sorted by row and
    /// free of zero coefficients.
    pub fn from_cols(field: FieldSpec, rows: usize, cols: Vec<SparseCol>) -> Self {
        let n = cols.len();
        for col in &cols {
            debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0), "unsorted column");
            debug_assert!(col.iter().all(|(r, v)| *r < rows && !v.is_zero()));
        }
        LinearMap {
            field,
            rows,
            cols: n,
            data: cols,
            leg_in: vec![n],
            leg_out: vec![rows],
        }
    }

    /// A single column, i.e. an element of the codomain as a map from k.
    pub fn column_vector(field: FieldSpec, coeffs: &[Scalar]) -> Self {
        let col: SparseCol = coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        let mut m = Self::from_cols(field, coeffs.len(), vec![col]);
        m.leg_in = vec![1];
        m
    }

    /// A single row, i.e. a functional on the domain.
    pub fn row_vector(field: FieldSpec, coeffs: &[Scalar]) -> Self {
        let cols = coeffs
            .iter()
            .map(|v| {
                if v.is_zero() {
                    Vec::new()
                } else {
                    vec![(0usize, v.clone())]
                }
            })
            .collect();
        let mut m = Self::from_cols(field, 1, cols);
        m.leg_out = vec![1];
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn leg_shape_in(&self) -> &[usize] {
        &self.leg_in
    }

    pub fn leg_shape_out(&self) -> &[usize] {
        &self.leg_out
    }

    /// Overrides leg shapes; products must match the matrix dimensions.
    pub fn with_legs(mut self, leg_in: Vec<usize>, leg_out: Vec<usize>) -> Self {
        assert_eq!(product(&leg_in), self.cols, "leg_in product != cols");
        assert_eq!(product(&leg_out), self.rows, "leg_out product != rows");
        self.leg_in = leg_in;
        self.leg_out = leg_out;
        self
    }

    pub fn col(&self, j: usize) -> &SparseCol {
        &self.data[j]
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.data[c]
            .iter()
            .find(|(row, _)| *row == r)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero_map(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .data
                .iter()
                .enumerate()
                .all(|(j, col)| col.len() == 1 && col[0].0 == j && col[0].1.is_one())
    }

    /// Index of the first column where the two maps differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(0);
        }
        (0..self.cols).find(|&j| self.data[j] != other.data[j])
    }

    /// Dense copy of one column.
    pub fn dense_col(&self, j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.rows];
        for (r, v) in &self.data[j] {
            out[*r] = v.clone();
        }
        out
    }

    /// Matrix product `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, LinError> {
        if self.field != other.field {
            return Err(LinError::FieldMismatch {
                lhs: self.field,
                rhs: other.field,
            });
        }
        if self.cols != other.rows {
            return Err(LinError::Shape {
                op: "compose",
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let mut data = Vec::with_capacity(other.cols);
        for j in 0..other.cols {
            data.push(self.apply_col(&other.data[j]));
        }
        Ok(LinearMap {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data,
            leg_in: other.leg_in.clone(),
            leg_out: self.leg_out.clone(),
        })
    }

    /// Applies the map to a sparse vector (sorted, no zeros).
    pub fn apply_col(&self, v: &SparseCol) -> SparseCol {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (k, s) in v {
            for (r, a) in &self.data[*k] {
                acc.push((*r, a.mul(s)));
            }
        }
        consolidate(acc)
    }

    /// Kronecker product: `(f ⊗ g)[(a,c),(b,d)] = f[a,b]·g[c,d]` with
    /// row-major index pairing; leg shapes concatenate.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "kron field mismatch");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(cols);
        for b in 0..self.cols {
            for d in 0..other.cols {
                let mut col = Vec::with_capacity(self.data[b].len() * other.data[d].len());
                for (a, fa) in &self.data[b] {
                    for (c, gc) in &other.data[d] {
                        col.push((a * other.rows + c, fa.mul(gc)));
                    }
                }
                data.push(col);
            }
        }
        let mut leg_in = self.leg_in.clone();
        leg_in.extend_from_slice(&other.leg_in);
        let mut leg_out = self.leg_out.clone();
        leg_out.extend_from_slice(&other.leg_out);
        LinearMap {
            field: self.field,
            rows,
            cols,
            data,
            leg_in,
            leg_out,
        }
    }

    /// The flip `τ : V ⊗ W → W ⊗ V` on spaces of dimensions `m`, `n`.
    pub fn flip(field: FieldSpec, m: usize, n: usize) -> Self {
        Self::leg_permutation(field, &[m, n], &[1, 0])
    }

    /// Permutation of tensor legs: sends the basis tuple
    /// `(i_0, …, i_{k-1})` to `(i_{dest[0]}, …, i_{dest[k-1]})`.
    pub fn leg_permutation(field: FieldSpec, dims: &[usize], dest: &[usize]) -> Self {
        assert_eq!(dims.len(), dest.len());
        let n = product(dims);
        let out_dims: Vec<usize> = dest.iter().map(|&s| dims[s]).collect();
        let mut m = Self::zero(field, n, n);
        let mut tuple = vec![0usize; dims.len()];
        for col in 0..n {
            // decode col (big-endian mixed radix over dims)
            let mut rem = col;
            for (slot, &d) in dims.iter().enumerate().rev() {
                tuple[slot] = rem % d;
                rem /= d;
            }
            let mut row = 0usize;
            for (slot, &src) in dest.iter().enumerate() {
                row = row * out_dims[slot] + tuple[src];
            }
            m.data[col].push((row, field.one()));
        }
        m.leg_in = dims.to_vec();
        m.leg_out = out_dims;
        m
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseCol> = vec![Vec::new(); self.rows];
        for j in 0..self.cols {
            for (r, v) in &self.data[j] {
                data[*r].push((j, v.clone()));
            }
        }
        // columns were visited in increasing j, so each new column is sorted
        LinearMap {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
            leg_in: self.leg_out.clone(),
            leg_out: self.leg_in.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinError::Shape {
                op: "add",
                lhs: (self.rows, self.cols),
                rhs: (other.rows, other.cols),
            });
        }
        let mut out = self.clone();
        for j in 0..self.cols {
            let mut merged = out.data[j].clone();
            merged.extend(other.data[j].iter().cloned());
            out.data[j] = consolidate(merged);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinError> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = self.clone();
        if s.is_zero() {
            for col in &mut out.data {
                col.clear();
            }
            return out;
        }
        for col in &mut out.data {
            for (_, v) in col.iter_mut() {
                *v = v.mul(s);
            }
        }
        out
    }

    /// Exact inverse by Gaussian elimination over the field.
    pub fn invert(&self) -> Result<Self, LinError> {
        if self.rows != self.cols {
            return Err(LinError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let f = self.field;
        // dense working copies: [A | I]
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c)).collect())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { f.one() } else { f.zero() })
                    .collect()
            })
            .collect();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, piv);
            inv.swap(rank, piv);
            let p = a[rank][col].clone();
            let pinv = p.inv().expect("pivot nonzero");
            for c in 0..n {
                a[rank][c] = a[rank][c].mul(&pinv);
                inv[rank][c] = inv[rank][c].mul(&pinv);
            }
            for r in 0..n {
                if r != rank && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in 0..n {
                        let t = a[rank][c].mul(&factor);
                        a[r][c] = a[r][c].sub(&t);
                        let t = inv[rank][c].mul(&factor);
                        inv[r][c] = inv[r][c].sub(&t);
                    }
                }
            }
            rank += 1;
        }
        if rank < n {
            return Err(LinError::Singular { rank });
        }
        Ok(Self::from_rows(f, &inv).with_legs(self.leg_out.clone(), self.leg_in.clone()))
    }

    /// Rank by elimination (used for diagnostics on singular operators).
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c)).collect())
            .collect();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let Some(piv) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, piv);
            let pinv = a[rank][col].inv().expect("pivot nonzero");
            for v in a[rank].iter_mut() {
                *v = v.mul(&pinv);
            }
            let pivot_row = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let factor = row[col].clone();
                    for (v, p) in row.iter_mut().zip(&pivot_row) {
                        *v = v.sub(&p.mul(&factor));
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Pretty one-line description used in error messages.
    pub fn shape_string(&self) -> String {
        format!(
            "{}x{} (legs in {:?}, out {:?})",
            self.rows, self.cols, self.leg_in, self.leg_out
        )
    }
}

/// Sorts a term list by row and sums duplicates, dropping zeros.
pub fn consolidate(mut terms: Vec<(usize, Scalar)>) -> SparseCol {
    terms.sort_by_key(|(r, _)| *r);
    let mut out: SparseCol = Vec::with_capacity(terms.len());
    for (r, v) in terms {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => {
                *lv = lv.add(&v);
                if lv.is_zero() {
                    out.pop();
                }
            }
            _ => {
                if !v.is_zero() {
                    out.push((r, v));
                }
            }
        }
    }
    out
}

/// Composes a chain of maps `maps[0] ∘ maps[1] ∘ … ∘ maps[k-1]`
/// (rightmost applies first).
pub fn compose_chain(maps: &[&LinearMap]) -> Result<LinearMap, LinError> {
    assert!(!maps.is_empty());
    let mut acc = maps[maps.len() - 1].clone();
    for m in maps[..maps.len() - 1].iter().rev() {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

/// Applies a chain of maps to the `j`-th basis vector of the rightmost
/// domain, without materialising the composite.
pub fn apply_chain_to_basis(maps: &[&LinearMap], j: usize) -> SparseCol {
    let field = maps[maps.len() - 1].field();
    let mut v: SparseCol = vec![(j, field.one())];
    for m in maps.iter().rev() {
        v = m.apply_col(&v);
    }
    v
}
