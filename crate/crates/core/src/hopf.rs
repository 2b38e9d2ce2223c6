//! Finite-dimensional Hopf algebras as basis-indexed structure constants.
//!
//! A [`HopfAlgebra`] stores the five structure maps as exact matrices:
//! multiplication `n² → n`, unit `1 → n`, comultiplication `n → n²`,
//! counit `n → 1` and antipode `n → n`. Axioms are checked on basis
//! tuples only — by linearity this is complete — and the constructors
//! validate eagerly, refusing to return invalid algebras. An explicit
//! unchecked constructor exists for negative tests and raw file loading.

use alloc::boxed::Box;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linmap::{compose_chain, LinError, LinearMap};
use crate::report::{compare_maps, AxiomReport, Legs};
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfError {
    /// A structure map has the wrong shape for the stated dimension.
    Shape { what: String },
    /// An axiom battery failed; the report carries the witness.
    Axiom(Box<AxiomReport>),
    /// The Cayley table is not a group.
    NotAGroup { reason: String },
    /// Construction impossible over this field (e.g. characteristic 2).
    BadCharacteristic {
        construction: &'static str,
        needs: &'static str,
    },
    /// Operands live over different fields.
    FieldMismatch { lhs: FieldSpec, rhs: FieldSpec },
    /// The antipode matrix is singular.
    AntipodeNotBijective { rank: usize },
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::Shape { what } => write!(f, "shape error: {what}"),
            HopfError::Axiom(r) => write!(f, "axiom {} failed", r.axiom_id),
            HopfError::NotAGroup { reason } => write!(f, "not a group: {reason}"),
            HopfError::BadCharacteristic {
                construction,
                needs,
            } => {
                write!(f, "{construction} requires {needs}")
            }
            HopfError::FieldMismatch { lhs, rhs } => write!(f, "field mismatch: {lhs} vs {rhs}"),
            HopfError::AntipodeNotBijective { rank } => {
                write!(f, "antipode not bijective (rank {rank})")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: FieldSpec,
    dim: usize,
    basis_names: Vec<String>,
    mul: LinearMap,
    unit: LinearMap,
    comul: LinearMap,
    counit: LinearMap,
    antipode: LinearMap,
    antipode_inv: Option<LinearMap>,
    checked: bool,
}

impl PartialEq for HopfAlgebra {
    /// Structural equality of the defining data (names and caches aside).
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mul == other.mul
            && self.unit == other.unit
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl Eq for HopfAlgebra {}

impl HopfAlgebra {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mul(&self) -> &LinearMap {
        &self.mul
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    pub fn comul(&self) -> &LinearMap {
        &self.comul
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn is_checked(&self) -> bool {
        self.checked
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.field, self.dim)
    }

    fn flip_hh(&self) -> LinearMap {
        LinearMap::flip(self.field, self.dim, self.dim)
    }

    /// `Δ² = (Δ ⊗ id) ∘ Δ : H → H⊗H⊗H`.
    pub fn comul2(&self) -> LinearMap {
        self.comul
            .kron(&self.id())
            .compose(&self.comul)
            .expect("comul2 shapes")
    }

    pub fn legs(&self, arity: usize) -> Legs<'_> {
        Legs::new(vec![&self.basis_names[..]; arity])
    }

    /// Bialgebra axiom battery, checked on all basis tuples.
    pub fn check_bialgebra(&self) -> Vec<AxiomReport> {
        let id = self.id();
        let f = self.field;
        let mut reports = Vec::new();

        // associativity: m(m⊗id) = m(id⊗m)
        let lhs = compose_chain(&[&self.mul, &self.mul.kron(&id)]).unwrap();
        let rhs = compose_chain(&[&self.mul, &id.kron(&self.mul)]).unwrap();
        reports.push(compare_maps(
            "associativity",
            &lhs,
            &rhs,
            &self.legs(3),
            &self.legs(1),
        ));

        // unit: m(u⊗id) = id = m(id⊗u)
        let left = compose_chain(&[&self.mul, &self.unit.kron(&id)]).unwrap();
        let right = compose_chain(&[&self.mul, &id.kron(&self.unit)]).unwrap();
        let rep_l = compare_maps("unit", &left, &id, &self.legs(1), &self.legs(1));
        reports.push(if rep_l.passed {
            compare_maps("unit", &right, &id, &self.legs(1), &self.legs(1))
        } else {
            rep_l
        });

        // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ
        let lhs = compose_chain(&[&self.comul.kron(&id), &self.comul]).unwrap();
        let rhs = compose_chain(&[&id.kron(&self.comul), &self.comul]).unwrap();
        reports.push(compare_maps(
            "coassociativity",
            &lhs,
            &rhs,
            &self.legs(1),
            &self.legs(3),
        ));

        // counit: (ε⊗id)Δ = id = (id⊗ε)Δ
        let left = compose_chain(&[&self.counit.kron(&id), &self.comul]).unwrap();
        let right = compose_chain(&[&id.kron(&self.counit), &self.comul]).unwrap();
        let rep_l = compare_maps("counit", &left, &id, &self.legs(1), &self.legs(1));
        reports.push(if rep_l.passed {
            compare_maps("counit", &right, &id, &self.legs(1), &self.legs(1))
        } else {
            rep_l
        });

        // Δ is an algebra map: Δm = (m⊗m)(id⊗τ⊗id)(Δ⊗Δ), Δu = u⊗u
        let lhs = compose_chain(&[&self.comul, &self.mul]).unwrap();
        let mid = id.kron(&self.flip_hh()).kron(&id);
        let rhs = compose_chain(&[
            &self.mul.kron(&self.mul),
            &mid,
            &self.comul.kron(&self.comul),
        ])
        .unwrap();
        let rep = compare_maps(
            "comul_algebra_map",
            &lhs,
            &rhs,
            &self.legs(2),
            &self.legs(2),
        );
        reports.push(if rep.passed {
            let lhs = compose_chain(&[&self.comul, &self.unit]).unwrap();
            let rhs = self.unit.kron(&self.unit);
            let one = scalar_leg_names();
            compare_maps(
                "comul_algebra_map",
                &lhs,
                &rhs,
                &Legs::new(vec![&one]),
                &self.legs(2),
            )
        } else {
            rep
        });

        // ε is an algebra map: εm = ε⊗ε, εu = 1
        let lhs = compose_chain(&[&self.counit, &self.mul]).unwrap();
        let rhs = self.counit.kron(&self.counit);
        let one = scalar_leg_names();
        let rep = compare_maps(
            "counit_algebra_map",
            &lhs,
            &rhs,
            &self.legs(2),
            &Legs::new(vec![&one]),
        );
        reports.push(if rep.passed {
            let lhs = compose_chain(&[&self.counit, &self.unit]).unwrap();
            let rhs = LinearMap::identity(f, 1);
            compare_maps(
                "counit_algebra_map",
                &lhs,
                &rhs,
                &Legs::new(vec![&one]),
                &Legs::new(vec![&one]),
            )
        } else {
            rep
        });

        reports
    }

    /// Antipode axiom: `m(S⊗id)Δ = uε = m(id⊗S)Δ`.
    pub fn check_antipode(&self) -> AxiomReport {
        let id = self.id();
        let target = compose_chain(&[&self.unit, &self.counit]).unwrap();
        let left = compose_chain(&[&self.mul, &self.antipode.kron(&id), &self.comul]).unwrap();
        let rep = compare_maps("antipode", &left, &target, &self.legs(1), &self.legs(1));
        if !rep.passed {
            return rep;
        }
        let right = compose_chain(&[&self.mul, &id.kron(&self.antipode), &self.comul]).unwrap();
        compare_maps("antipode", &right, &target, &self.legs(1), &self.legs(1))
    }

    /// Structural consistency of the maps against `dim`; the axiom
    /// batteries assume this and must not run before it.
    pub fn check_shapes(&self) -> Result<(), HopfError> {
        let n = self.dim;
        let bad = |what: &str, m: &LinearMap| HopfError::Shape {
            what: format!("{what} is {}, inconsistent with dim {n}", m.shape_string()),
        };
        if self.basis_names.len() != n {
            return Err(HopfError::Shape {
                what: format!("{} basis names for dim {n}", self.basis_names.len()),
            });
        }
        if self.mul.rows() != n || self.mul.cols() != n * n {
            return Err(bad("mul", &self.mul));
        }
        if self.unit.rows() != n || self.unit.cols() != 1 {
            return Err(bad("unit", &self.unit));
        }
        if self.comul.rows() != n * n || self.comul.cols() != n {
            return Err(bad("comul", &self.comul));
        }
        if self.counit.rows() != 1 || self.counit.cols() != n {
            return Err(bad("counit", &self.counit));
        }
        if self.antipode.rows() != n || self.antipode.cols() != n {
            return Err(bad("antipode", &self.antipode));
        }
        Ok(())
    }

    /// Runs shapes, the bialgebra battery and the antipode axiom; on
    /// success caches the antipode inverse and marks the algebra checked.
    pub fn validate(mut self) -> Result<Self, HopfError> {
        self.check_shapes()?;
        for report in self.check_bialgebra() {
            if !report.passed {
                return Err(HopfError::Axiom(Box::new(report)));
            }
        }
        let rep = self.check_antipode();
        if !rep.passed {
            return Err(HopfError::Axiom(Box::new(rep)));
        }
        self.antipode_inv = self.antipode.invert().ok();
        self.checked = true;
        Ok(self)
    }

    /// Exact inverse of the antipode.
    pub fn antipode_inverse(&self) -> Result<LinearMap, HopfError> {
        if let Some(inv) = &self.antipode_inv {
            return Ok(inv.clone());
        }
        self.antipode.invert().map_err(|e| match e {
            LinError::Singular { rank } => HopfError::AntipodeNotBijective { rank },
            other => HopfError::Shape {
                what: format!("antipode: {other}"),
            },
        })
    }

    pub fn commutativity(&self) -> AxiomReport {
        let lhs = self.mul.compose(&self.flip_hh()).unwrap();
        compare_maps(
            "commutativity",
            &lhs,
            &self.mul,
            &self.legs(2),
            &self.legs(1),
        )
    }

    pub fn cocommutativity(&self) -> AxiomReport {
        let lhs = self.flip_hh().compose(&self.comul).unwrap();
        compare_maps(
            "cocommutativity",
            &lhs,
            &self.comul,
            &self.legs(1),
            &self.legs(2),
        )
    }

    pub fn involutivity(&self) -> AxiomReport {
        let lhs = self.antipode.compose(&self.antipode).unwrap();
        compare_maps(
            "involutivity",
            &lhs,
            &self.id(),
            &self.legs(1),
            &self.legs(1),
        )
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity().passed
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutativity().passed
    }

    /// `S² = id`.
    pub fn is_involutive(&self) -> bool {
        self.involutivity().passed
    }

    /// Validating constructor from raw structure maps.
    pub fn from_parts(
        field: FieldSpec,
        basis_names: Vec<String>,
        mul: LinearMap,
        unit: LinearMap,
        comul: LinearMap,
        counit: LinearMap,
        antipode: LinearMap,
    ) -> Result<Self, HopfError> {
        Self::from_parts_unchecked(field, basis_names, mul, unit, comul, counit, antipode)
            .validate()
    }

    /// Raw constructor that skips all validation. For negative tests and
    /// the unchecked loader; downstream checkers still work on it.
    pub fn from_parts_unchecked(
        field: FieldSpec,
        basis_names: Vec<String>,
        mul: LinearMap,
        unit: LinearMap,
        comul: LinearMap,
        counit: LinearMap,
        antipode: LinearMap,
    ) -> Self {
        let dim = basis_names.len();
        HopfAlgebra {
            field,
            dim,
            basis_names,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv: None,
            checked: false,
        }
    }

    /// The ground field as a Hopf algebra (dim 1, every map the scalar 1).
    pub fn trivial(field: FieldSpec) -> Self {
        let one = LinearMap::identity(field, 1);
        HopfAlgebra {
            field,
            dim: 1,
            basis_names: vec!["1".to_string()],
            mul: one.clone(),
            unit: one.clone(),
            comul: one.clone(),
            counit: one.clone(),
            antipode: one.clone(),
            antipode_inv: Some(one),
            checked: true,
        }
    }

    /// Group algebra kG from a Cayley table: `table[i][j]` is the index of
    /// the product of elements `i` and `j`. Validates the group axioms
    /// first, naming the failing triple on error.
    pub fn group_algebra(
        field: FieldSpec,
        table: &[Vec<usize>],
        names: Option<&[String]>,
    ) -> Result<Self, HopfError> {
        let n = table.len();
        if n == 0 {
            return Err(HopfError::NotAGroup {
                reason: "empty table".into(),
            });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(HopfError::NotAGroup {
                    reason: format!("row {i} has length {}, expected {n}", row.len()),
                });
            }
            if let Some(j) = row.iter().position(|&v| v >= n) {
                return Err(HopfError::NotAGroup {
                    reason: format!("entry ({i},{j}) = {} out of range", row[j]),
                });
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| HopfError::NotAGroup {
                reason: "no identity element".into(),
            })?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HopfError::NotAGroup {
                            reason: format!("associativity fails on triple ({a},{b},{c})"),
                        });
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| HopfError::NotAGroup {
                    reason: format!("element {a} has no inverse"),
                })?;
        }

        let basis_names: Vec<String> = match names {
            Some(ns) => {
                if ns.len() != n {
                    return Err(HopfError::Shape {
                        what: format!("{} names for {n} group elements", ns.len()),
                    });
                }
                ns.to_vec()
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };

        let one = field.one();
        let mut unit = vec![field.zero(); n];
        unit[identity] = one.clone();
        let counit = vec![one.clone(); n];
        let mut mul_cols: Vec<_> = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mul_cols[i * n + j].push((table[i][j], one.clone()));
            }
        }
        let mul = LinearMap::from_cols(field, n, mul_cols).with_legs(vec![n, n], vec![n]);
        let mut comul_cols: Vec<_> = vec![Vec::new(); n];
        let mut s_cols: Vec<_> = vec![Vec::new(); n];
        for i in 0..n {
            comul_cols[i].push((i * n + i, one.clone()));
            s_cols[i].push((inverse[i], one.clone()));
        }
        let comul = LinearMap::from_cols(field, n * n, comul_cols).with_legs(vec![n], vec![n, n]);
        let antipode = LinearMap::from_cols(field, n, s_cols);

        HopfAlgebra::from_parts(
            field,
            basis_names,
            mul,
            LinearMap::column_vector(field, &unit),
            comul,
            LinearMap::row_vector(field, &counit),
            antipode,
        )
    }

    /// The four-dimensional algebra with basis `{1, g, x, gx}`, relations
    /// `g² = 1`, `x² = 0`, `xg = -gx`, comultiplication `Δ(g) = g⊗g`,
    /// `Δ(x) = x⊗1 + g⊗x` and antipode `S(g) = g`, `S(x) = -gx`. Needs
    /// characteristic ≠ 2.
    pub fn sweedler(field: FieldSpec) -> Result<Self, HopfError> {
        if field.characteristic() == 2 {
            return Err(HopfError::BadCharacteristic {
                construction: "sweedler algebra",
                needs: "characteristic != 2",
            });
        }
        let names: Vec<String> = ["1", "g", "x", "gx"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // rows indexed by output basis, columns by (i,j) = i*4+j
        #[rustfmt::skip]
        let mul_rows: [[i64; 16]; 4] = [
            // 1·{1,g,x,gx}  g·{1,g,x,gx}  x·{1,g,x,gx}  gx·{1,g,x,gx}
            [1, 0, 0, 0,     0, 1, 0, 0,    0, 0, 0, 0,    0, 0, 0, 0], // 1
            [0, 1, 0, 0,     1, 0, 0, 0,    0, 0, 0, 0,    0, 0, 0, 0], // g
            [0, 0, 1, 0,     0, 0, 0, 1,    1, 0, 0, 0,    0, -1, 0, 0], // x
            [0, 0, 0, 1,     0, 0, 1, 0,    0, -1, 0, 0,   1, 0, 0, 0], // gx
        ];
        let mul_refs: Vec<&[i64]> = mul_rows.iter().map(|r| &r[..]).collect();
        let mul = LinearMap::from_int_rows(field, &mul_refs).with_legs(vec![4, 4], vec![4]);

        // Δ(1)=1⊗1, Δ(g)=g⊗g, Δ(x)=x⊗1+g⊗x, Δ(gx)=gx⊗g+1⊗gx
        let one = field.one();
        let comul_cols = vec![
            vec![(0usize, one.clone())],
            vec![(5usize, one.clone())],
            vec![(6usize, one.clone()), (8usize, one.clone())],
            vec![(3usize, one.clone()), (13usize, one.clone())],
        ];
        let comul = LinearMap::from_cols(field, 16, comul_cols).with_legs(vec![4], vec![4, 4]);

        let unit = LinearMap::column_vector(
            field,
            &[field.one(), field.zero(), field.zero(), field.zero()],
        );
        let counit = LinearMap::row_vector(
            field,
            &[field.one(), field.one(), field.zero(), field.zero()],
        );
        #[rustfmt::skip]
        let s_rows: [[i64; 4]; 4] = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
            [0, 0, -1, 0],
        ];
        let s_refs: Vec<&[i64]> = s_rows.iter().map(|r| &r[..]).collect();
        let antipode = LinearMap::from_int_rows(field, &s_refs);

        HopfAlgebra::from_parts(field, names, mul, unit, comul, counit, antipode)
    }

    /// Tensor product Hopf algebra `H ⊗ K`: componentwise product with the
    /// middle flip, tensor coproduct, `S = S_H ⊗ S_K`.
    pub fn tensor_hopf(h: &HopfAlgebra, k: &HopfAlgebra) -> Result<Self, HopfError> {
        if h.field != k.field {
            return Err(HopfError::FieldMismatch {
                lhs: h.field,
                rhs: k.field,
            });
        }
        let f = h.field;
        let (n, m) = (h.dim, k.dim);
        let idh = h.id();
        let idk = k.id();
        let mul = h
            .mul
            .kron(&k.mul)
            .compose(&idh.kron(&LinearMap::flip(f, m, n)).kron(&idk))
            .unwrap();
        let comul = idh
            .kron(&LinearMap::flip(f, n, m))
            .kron(&idk)
            .compose(&h.comul.kron(&k.comul))
            .unwrap();
        let names: Vec<String> = h
            .basis_names
            .iter()
            .flat_map(|a| k.basis_names.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        HopfAlgebra::from_parts(
            f,
            names,
            mul.with_legs(vec![n * m, n * m], vec![n * m]),
            h.unit.kron(&k.unit).with_legs(vec![1], vec![n * m]),
            comul.with_legs(vec![n * m], vec![n * m, n * m]),
            h.counit.kron(&k.counit).with_legs(vec![n * m], vec![1]),
            h.antipode
                .kron(&k.antipode)
                .with_legs(vec![n * m], vec![n * m]),
        )
    }

    /// Dual Hopf algebra: transposed structure maps with the roles of
    /// (mul, unit) and (comul, counit) swapped.
    pub fn dual_hopf(h: &HopfAlgebra) -> Result<Self, HopfError> {
        let names: Vec<String> = h.basis_names.iter().map(|s| format!("{s}*")).collect();
        HopfAlgebra::from_parts(
            h.field,
            names,
            h.comul.transpose(),
            h.counit.transpose(),
            h.mul.transpose(),
            h.unit.transpose(),
            h.antipode.transpose(),
        )
    }

    /// Element `1_H` as a dense coefficient vector.
    pub fn unit_vector(&self) -> Vec<crate::scalar::Scalar> {
        self.unit.dense_col(0)
    }

    /// Index of `1_H` when the unit is itself a basis vector (true for
    /// group algebras and the sweedler algebra, not for their duals).
    pub fn unit_basis_index(&self) -> Option<usize> {
        let col = self.unit.col(0);
        match col.as_slice() {
            [(idx, coeff)] if coeff.is_one() => Some(*idx),
            _ => None,
        }
    }

    pub fn into_rc(self) -> Rc<HopfAlgebra> {
        Rc::new(self)
    }
}

pub(crate) fn scalar_leg_names() -> Vec<String> {
    vec!["1".to_string()]
}

/// Cayley table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

/// Cayley table of the direct product of two groups given by tables.
pub fn product_table(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (n, m) = (a.len(), b.len());
    let mut t = vec![vec![0usize; n * m]; n * m];
    for i1 in 0..n {
        for j1 in 0..m {
            for i2 in 0..n {
                for j2 in 0..m {
                    t[i1 * m + j1][i2 * m + j2] = a[i1][i2] * m + b[j1][j2];
                }
            }
        }
    }
    t
}

/// Cayley table and names of the symmetric group S₃, as permutations of
/// `{1,2,3}` composed right-to-left.
pub fn s3_table() -> (Vec<Vec<usize>>, Vec<String>) {
    // permutations listed as images of (1,2,3)
    let perms: [[usize; 3]; 6] = [
        [1, 2, 3], // e
        [2, 3, 1], // (123)
        [3, 1, 2], // (132)
        [2, 1, 3], // (12)
        [3, 2, 1], // (13)
        [1, 3, 2], // (23)
    ];
    let names = ["e", "(123)", "(132)", "(12)", "(13)", "(23)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let compose = |f: &[usize; 3], g: &[usize; 3]| -> [usize; 3] {
        // (f∘g)(x) = f(g(x))
        [f[g[0] - 1], f[g[1] - 1], f[g[2] - 1]]
    };
    let table = perms
        .iter()
        .map(|f| {
            perms
                .iter()
                .map(|g| {
                    let fg = compose(f, g);
                    perms.iter().position(|p| *p == fg).unwrap()
                })
                .collect()
        })
        .collect();
    (table, names)
}
