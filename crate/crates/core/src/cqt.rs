//! Coquasitriangular structures: bilinear forms on `H ⊗ H`, the CQT
//! battery with convolution invertibility, induction of YDL actions from
//! a form, and extraction of a cotriangular form from a symmetric
//! braiding on `H ⊗ H`. The dual pipeline to [`crate::qt`].
//!
//! A [`BilinearForm`] is `ζ : H⊗H → k`, stored as the row of values
//! `ζ(eᵢ, eⱼ)`. Convolution invertibility is decided by inverting the
//! left-convolution operator on the dual of `H⊗H`. The battery checks
//!
//! * CQT1 `ζ(h, gl) = ζ(h₁,g) ζ(h₂,l)`
//! * CQT2 `ζ(hg, l) = ζ(h,l₂) ζ(g,l₁)`
//! * CQT3 `ζ(h₁,g₁) g₂h₂ = h₁g₁ ζ(h₂,g₂)`
//! * CQT4 `ζ(h,1) = ε(h) = ζ(1,h)`
//!
//! and CQT5 (`ζ(h₁,g₁)ζ(g₂,h₂) = ε(h)ε(g)`, cotriangularity) separately.
//!
//! A CQT form turns any `H`-bicomodule into a YDL bimodule under
//! `h ▷ m = ζ(h, m₍₋₁₎) m₍₀₎` and `m ◁ h = m₍₀₎ ζ(h, m₍₁₎)`
//! ([`induce_ydl_from_zeta`]); on `H⊗H` with coactions `Δ⊗id`, `id⊗Δ`
//! this is [`induce_hh_from_zeta`], and [`extract_zeta`] inverts it via
//! `ζ(k,g) = ε(k ⇀ g)`, validating the reconstruction identities and the
//! full battery on the way out.

use alloc::boxed::Box;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::analysis::{is_symmetric_pair, SymmetryVerdict};
use crate::hopf::{scalar_leg_names, HopfAlgebra};
use crate::linmap::{compose_chain, LinError, LinearMap};
use crate::report::{compare_maps, AxiomReport, Legs, Witness};
use crate::scalar::Scalar;
use crate::ydl::{
    braiding, check_ydl, embed_llyd, example_module, LeftYdData, Variant, YdlBimodule, YdlError,
};

#[derive(Clone, Debug)]
pub enum CqtError {
    /// The left-convolution operator of ζ is singular.
    NotConvolutionInvertible {
        rank: usize,
    },
    /// A CQT axiom failed where it was required to hold.
    Axiom(Box<AxiomReport>),
    /// A structure map does not have the required shape.
    Shape {
        what: String,
    },
    /// The braiding is not a symmetry, so no cotriangular ζ exists.
    NotCotriangularizable {
        witness: Box<Witness>,
    },
    /// An intermediate identity of the extraction failed.
    Consistency {
        equation: &'static str,
        report: Box<AxiomReport>,
    },
    /// A stated hypothesis does not hold.
    Precondition {
        hypothesis: String,
    },
    Ydl(YdlError),
}

impl fmt::Display for CqtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CqtError::NotConvolutionInvertible { rank } => {
                write!(f, "ζ is not convolution invertible (operator rank {rank})")
            }
            CqtError::Axiom(r) => write!(f, "axiom {} failed", r.axiom_id),
            CqtError::Shape { what } => write!(f, "shape error: {what}"),
            CqtError::NotCotriangularizable { .. } => {
                write!(f, "braiding is not a symmetry; not cotriangularizable")
            }
            CqtError::Consistency { equation, .. } => {
                write!(f, "extraction consistency failed at {equation}")
            }
            CqtError::Precondition { hypothesis } => {
                write!(f, "precondition failed: {hypothesis}")
            }
            CqtError::Ydl(e) => write!(f, "{e}"),
        }
    }
}

impl From<YdlError> for CqtError {
    fn from(e: YdlError) -> Self {
        CqtError::Ydl(e)
    }
}

/// A bilinear form `ζ : H⊗H → k`, stored as the `1 × n²` row of values
/// `ζ(eᵢ, eⱼ)` at column `i·n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    row: LinearMap, // 1 × n²
}

impl BilinearForm {
    pub fn from_grid(h: &HopfAlgebra, grid: &[Vec<Scalar>]) -> Result<Self, CqtError> {
        let n = h.dim();
        if grid.len() != n || grid.iter().any(|row| row.len() != n) {
            return Err(CqtError::Shape {
                what: format!("ζ grid must be {n}x{n}"),
            });
        }
        let flat: Vec<Scalar> = grid.iter().flat_map(|row| row.iter().cloned()).collect();
        Ok(BilinearForm {
            row: LinearMap::row_vector(h.field(), &flat).with_legs(vec![n, n], vec![1]),
        })
    }

    pub fn from_row(row: LinearMap) -> Self {
        BilinearForm { row }
    }

    /// `ζ = ε ⊗ ε`.
    pub fn counit_squared(h: &HopfAlgebra) -> Self {
        BilinearForm {
            row: h.counit().kron(h.counit()),
        }
    }

    pub fn row(&self) -> &LinearMap {
        &self.row
    }

    pub fn value(&self, i: usize, j: usize, n: usize) -> Scalar {
        self.row.entry(0, i * n + j)
    }

    pub fn grid(&self, n: usize) -> Vec<Vec<Scalar>> {
        (0..n)
            .map(|i| (0..n).map(|j| self.row.entry(0, i * n + j)).collect())
            .collect()
    }
}

fn chain(maps: &[&LinearMap]) -> LinearMap {
    compose_chain(maps).expect("internal chain shapes")
}

/// Comultiplication of the tensor-square coalgebra `H⊗H`: `n² → n⁴`.
fn tensor_square_comul(h: &HopfAlgebra) -> LinearMap {
    let (f, n) = (h.field(), h.dim());
    let id = h.id();
    id.kron(&LinearMap::flip(f, n, n))
        .kron(&id)
        .compose(&h.comul().kron(h.comul()))
        .expect("tensor-square comul shapes")
}

/// Convolution product of two functionals on `H⊗H` (rows of length `n²`).
pub fn convolution_product(h: &HopfAlgebra, a: &LinearMap, b: &LinearMap) -> LinearMap {
    a.kron(b)
        .compose(&tensor_square_comul(h))
        .expect("convolution shapes")
}

/// Inverts ζ in the convolution algebra of functionals on `H⊗H`.
pub fn convolution_inverse_zeta(
    h: &HopfAlgebra,
    zeta: &BilinearForm,
) -> Result<LinearMap, CqtError> {
    let n = h.dim();
    let id2 = LinearMap::identity(h.field(), n * n);
    // operator on functional columns: f ↦ (ζ * f)ᵀ
    let op = tensor_square_comul(h)
        .transpose()
        .compose(&zeta.row.transpose().kron(&id2))
        .expect("convolution operator shapes");
    let inv_op = op.invert().map_err(|e| match e {
        LinError::Singular { rank } => CqtError::NotConvolutionInvertible { rank },
        other => CqtError::Shape {
            what: format!("{other}"),
        },
    })?;
    let eps2 = h.counit().kron(h.counit());
    let inverse = inv_op
        .compose(&eps2.transpose())
        .expect("inverse shapes")
        .transpose();
    // two-sided in the finite-dimensional convolution algebra; verify
    for (label, prod) in [
        ("ζ·ζ̄", convolution_product(h, &zeta.row, &inverse)),
        ("ζ̄·ζ", convolution_product(h, &inverse, &zeta.row)),
    ] {
        if prod != eps2 {
            return Err(CqtError::Shape {
                what: format!("{label} is not ε⊗ε"),
            });
        }
    }
    Ok(inverse)
}

/// Result of the CQT battery: the reports and the convolution inverse.
#[derive(Clone, Debug)]
pub struct CqtCheck {
    pub reports: Vec<AxiomReport>,
    pub inverse: LinearMap,
}

impl CqtCheck {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }
}

/// CQT1–CQT4 on all basis tuples. Errors when ζ is not convolution
/// invertible.
pub fn check_cqt(h: &HopfAlgebra, zeta: &BilinearForm) -> Result<CqtCheck, CqtError> {
    let (f, n) = (h.field(), h.dim());
    if zeta.row.rows() != 1 || zeta.row.cols() != n * n {
        return Err(CqtError::Shape {
            what: format!("ζ row is {}, expected 1x{}", zeta.row.shape_string(), n * n),
        });
    }
    let inverse = convolution_inverse_zeta(h, zeta)?;
    let id = h.id();
    let z = &zeta.row;
    let zz = z.kron(z);
    let one = scalar_leg_names();
    let scalar_legs = Legs::new(vec![&one]);
    let mut reports = Vec::with_capacity(4);

    // CQT1: ζ(h, gl) = ζ(h₁,g)ζ(h₂,l)
    let lhs = chain(&[z, &id.kron(h.mul())]);
    let rhs = chain(&[
        &zz,
        &LinearMap::leg_permutation(f, &[n; 4], &[0, 2, 1, 3]),
        &h.comul().kron(&id).kron(&id),
    ]);
    reports.push(compare_maps("CQT1", &lhs, &rhs, &h.legs(3), &scalar_legs));

    // CQT2: ζ(hg, l) = ζ(h,l₂)ζ(g,l₁)
    let lhs = chain(&[z, &h.mul().kron(&id)]);
    let rhs = chain(&[
        &zz,
        &LinearMap::leg_permutation(f, &[n; 4], &[0, 3, 1, 2]),
        &id.kron(&id).kron(h.comul()),
    ]);
    reports.push(compare_maps("CQT2", &lhs, &rhs, &h.legs(3), &scalar_legs));

    // CQT3: ζ(h₁,g₁)g₂h₂ = h₁g₁ζ(h₂,g₂)
    let dd = h.comul().kron(h.comul());
    let lhs = chain(&[
        &z.kron(h.mul()),
        &LinearMap::leg_permutation(f, &[n; 4], &[0, 2, 3, 1]),
        &dd,
    ]);
    let rhs = chain(&[
        &h.mul().kron(z),
        &LinearMap::leg_permutation(f, &[n; 4], &[0, 2, 1, 3]),
        &dd,
    ]);
    reports.push(compare_maps("CQT3", &lhs, &rhs, &h.legs(2), &h.legs(1)));

    // CQT4: ζ(h,1) = ε(h) = ζ(1,h)
    let lhs = chain(&[z, &id.kron(h.unit())]);
    let rep = compare_maps("CQT4", &lhs, h.counit(), &h.legs(1), &scalar_legs);
    reports.push(if rep.passed {
        let rhs = chain(&[z, &h.unit().kron(&id)]);
        compare_maps("CQT4", &rhs, h.counit(), &h.legs(1), &scalar_legs)
    } else {
        rep
    });

    Ok(CqtCheck { reports, inverse })
}

/// CQT5: `ζ(h₁,g₁)ζ(g₂,h₂) = ε(h)ε(g)` on all basis pairs.
pub fn is_cotriangular(h: &HopfAlgebra, zeta: &BilinearForm) -> AxiomReport {
    let (f, n) = (h.field(), h.dim());
    let lhs = chain(&[
        &zeta.row.kron(&zeta.row),
        &LinearMap::leg_permutation(f, &[n; 4], &[0, 2, 3, 1]),
        &h.comul().kron(h.comul()),
    ]);
    let rhs = h.counit().kron(h.counit());
    let one = scalar_leg_names();
    compare_maps("CQT5", &lhs, &rhs, &h.legs(2), &Legs::new(vec![&one]))
}

// ---------------------------------------------------------------------------
// H-bicomodules and the induced YDL structures
// ---------------------------------------------------------------------------

/// A plain `H`-bicomodule: two coactions, no actions.
#[derive(Clone, Debug)]
pub struct BicomoduleData {
    pub basis_names: Vec<String>,
    pub left_coaction: LinearMap,  // m -> n·m
    pub right_coaction: LinearMap, // m -> m·n
}

impl BicomoduleData {
    /// The regular bicomodule `H` under `Δ` on both sides.
    pub fn regular(h: &HopfAlgebra) -> Self {
        BicomoduleData {
            basis_names: h.basis_names().to_vec(),
            left_coaction: h.comul().clone(),
            right_coaction: h.comul().clone(),
        }
    }
}

/// Comodule laws and the bicomodule compatibility for raw data.
pub fn check_bicomodule(h: &HopfAlgebra, c: &BicomoduleData) -> Vec<AxiomReport> {
    let m = c.basis_names.len();
    let idh = h.id();
    let idm = LinearMap::identity(h.field(), m);
    let hn = h.basis_names();
    let mn = &c.basis_names;
    let mut reports = Vec::with_capacity(3);

    let lhs = chain(&[&h.comul().kron(&idm), &c.left_coaction]);
    let rhs = chain(&[&idh.kron(&c.left_coaction), &c.left_coaction]);
    let rep = compare_maps(
        "left_comodule",
        &lhs,
        &rhs,
        &Legs::new(vec![mn]),
        &Legs::new(vec![hn, hn, mn]),
    );
    reports.push(if rep.passed {
        let counital = chain(&[&h.counit().kron(&idm), &c.left_coaction]);
        compare_maps(
            "left_comodule",
            &counital,
            &idm,
            &Legs::new(vec![mn]),
            &Legs::new(vec![mn]),
        )
    } else {
        rep
    });

    let lhs = chain(&[&idm.kron(h.comul()), &c.right_coaction]);
    let rhs = chain(&[&c.right_coaction.kron(&idh), &c.right_coaction]);
    let rep = compare_maps(
        "right_comodule",
        &lhs,
        &rhs,
        &Legs::new(vec![mn]),
        &Legs::new(vec![mn, hn, hn]),
    );
    reports.push(if rep.passed {
        let counital = chain(&[&idm.kron(h.counit()), &c.right_coaction]);
        compare_maps(
            "right_comodule",
            &counital,
            &idm,
            &Legs::new(vec![mn]),
            &Legs::new(vec![mn]),
        )
    } else {
        rep
    });

    let lhs = chain(&[&idh.kron(&c.right_coaction), &c.left_coaction]);
    let rhs = chain(&[&c.left_coaction.kron(&idh), &c.right_coaction]);
    reports.push(compare_maps(
        "bicomodule_compat",
        &lhs,
        &rhs,
        &Legs::new(vec![mn]),
        &Legs::new(vec![hn, mn, hn]),
    ));

    reports
}

/// Builds the YDL bimodule on `C` with actions `h ▷ m = ζ(h, m₍₋₁₎)m₍₀₎`
/// and `m ◁ h = m₍₀₎ ζ(h, m₍₁₎)`, without validation.
pub fn induce_ydl_from_zeta_raw(
    h: &Rc<HopfAlgebra>,
    zeta_row: &LinearMap,
    c: &BicomoduleData,
) -> YdlBimodule {
    let (f, n) = (h.field(), h.dim());
    let m = c.basis_names.len();
    let idh = h.id();
    let idm = LinearMap::identity(f, m);
    let act_l = chain(&[&zeta_row.kron(&idm), &idh.kron(&c.left_coaction)]);
    let act_r = chain(&[
        &idm.kron(zeta_row),
        &LinearMap::leg_permutation(f, &[m, n, n], &[0, 2, 1]),
        &c.right_coaction.kron(&idh),
    ]);
    YdlBimodule::from_parts(
        Rc::clone(h),
        c.basis_names.clone(),
        act_l.with_legs(vec![n, m], vec![m]),
        act_r.with_legs(vec![m, n], vec![m]),
        c.left_coaction.clone().with_legs(vec![m], vec![n, m]),
        c.right_coaction.clone().with_legs(vec![m], vec![m, n]),
    )
}

/// Validated induction: requires the CQT battery on `(H, ζ)` and the
/// bicomodule laws on `C`; returns the object with its full YDL battery.
pub fn induce_ydl_from_zeta(
    h: &Rc<HopfAlgebra>,
    zeta: &BilinearForm,
    c: &BicomoduleData,
) -> Result<(YdlBimodule, Vec<AxiomReport>), CqtError> {
    let cq = check_cqt(h, zeta)?;
    if let Some(rep) = cq.reports.iter().find(|r| !r.passed) {
        return Err(CqtError::Axiom(Box::new(rep.clone())));
    }
    for rep in check_bicomodule(h, c) {
        if !rep.passed {
            return Err(CqtError::Axiom(Box::new(rep)));
        }
    }
    let out = induce_ydl_from_zeta_raw(h, zeta.row(), c);
    Ok((out.clone(), check_ydl(&out)))
}

/// Symmetry of the induced pair under a cotriangular ζ.
pub fn cotriangular_symmetry(
    h: &Rc<HopfAlgebra>,
    zeta: &BilinearForm,
    m: &YdlBimodule,
    n: &YdlBimodule,
) -> Result<SymmetryVerdict, CqtError> {
    if !is_cotriangular(h, zeta).passed {
        return Err(CqtError::Precondition {
            hypothesis: "ζ is cotriangular".into(),
        });
    }
    Ok(is_symmetric_pair(m, n)?)
}

/// The YDL structure on `H⊗H` with coactions `Δ⊗id`, `id⊗Δ` and actions
/// `h ▷ (k⊗l) = ζ(h,k₁)k₂ ⊗ l`, `(k⊗l) ◁ h = k ⊗ l₁ζ(h,l₂)`.
pub fn induce_hh_from_zeta_raw(h: &Rc<HopfAlgebra>, zeta_row: &LinearMap) -> YdlBimodule {
    let (f, n) = (h.field(), h.dim());
    let id = h.id();
    let harpoon_l = chain(&[&zeta_row.kron(&id), &id.kron(h.comul())]);
    let harpoon_r = chain(&[
        &id.kron(zeta_row),
        &LinearMap::leg_permutation(f, &[n; 3], &[0, 2, 1]),
        &h.comul().kron(&id),
    ]);
    let names: Vec<String> = h
        .basis_names()
        .iter()
        .flat_map(|a| h.basis_names().iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    YdlBimodule::from_parts(
        Rc::clone(h),
        names,
        harpoon_l.kron(&id).with_legs(vec![n, n * n], vec![n * n]),
        id.kron(&harpoon_r).with_legs(vec![n * n, n], vec![n * n]),
        h.comul().kron(&id).with_legs(vec![n * n], vec![n, n * n]),
        id.kron(h.comul()).with_legs(vec![n * n], vec![n * n, n]),
    )
}

/// Validated variant of [`induce_hh_from_zeta_raw`].
pub fn induce_hh_from_zeta(
    h: &Rc<HopfAlgebra>,
    zeta: &BilinearForm,
) -> Result<(YdlBimodule, Vec<AxiomReport>), CqtError> {
    let cq = check_cqt(h, zeta)?;
    if let Some(rep) = cq.reports.iter().find(|r| !r.passed) {
        return Err(CqtError::Axiom(Box::new(rep.clone())));
    }
    let out = induce_hh_from_zeta_raw(h, zeta.row());
    Ok((out.clone(), check_ydl(&out)))
}

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

/// Result of [`extract_zeta`].
#[derive(Clone, Debug)]
pub struct ZetaExtraction {
    pub zeta: BilinearForm,
    pub inverse: LinearMap,
    pub cotriangular: AxiomReport,
    pub reports: Vec<AxiomReport>,
}

/// Reads ζ off a YDL bimodule of the shape `(H⊗H, ρˡ = Δ⊗id,
/// ρʳ = id⊗Δ)` whose self-braiding is a symmetry, via
/// `ζ(k,g) = ε(k ⇀ g)`, then validates the symmetry identities
/// `ζ(k,g) = ζ(S⁻¹(g),k) = ζ(g,S(k))`, the reconstruction of both
/// actions, the four-variable braiding identity, and the full CQT
/// battery with cotriangularity.
pub fn extract_zeta(m: &YdlBimodule) -> Result<ZetaExtraction, CqtError> {
    let h = m.over().clone();
    let (f, n) = (h.field(), h.dim());
    if m.dim() != n * n {
        return Err(CqtError::Shape {
            what: format!("module dim {} is not {}", m.dim(), n * n),
        });
    }
    let id = h.id();
    if *m.coact_l() != h.comul().kron(&id) {
        return Err(CqtError::Shape {
            what: "left coaction is not Δ on the first leg".into(),
        });
    }
    if *m.coact_r() != id.kron(h.comul()) {
        return Err(CqtError::Shape {
            what: "right coaction is not Δ on the second leg".into(),
        });
    }
    let sym = is_symmetric_pair(m, m)?;
    if let Some(w) = sym.witness {
        return Err(CqtError::NotCotriangularizable {
            witness: Box::new(w),
        });
    }

    // recover the one-leg actions: k ⇀ g from h▷(k⊗1), l ↼ h from (1⊗l)◁h
    let harpoon_l = chain(&[
        &id.kron(h.counit()),
        m.act_l(),
        &id.kron(&id).kron(h.unit()),
    ]);
    let harpoon_r = chain(&[
        &h.counit().kron(&id),
        m.act_r(),
        &h.unit().kron(&id).kron(&id),
    ]);
    let zeta_row = chain(&[h.counit(), &harpoon_l]);
    let zeta = BilinearForm::from_row(zeta_row.clone().with_legs(vec![n, n], vec![1]));
    let flip = LinearMap::flip(f, n, n);
    let sinv = h.antipode_inverse().map_err(|e| CqtError::Shape {
        what: format!("{e}"),
    })?;
    let one = scalar_leg_names();
    let scalar_legs = Legs::new(vec![&one]);

    let mut reports = Vec::new();
    let mut consistency = |equation: &'static str, rep: AxiomReport| -> Result<(), CqtError> {
        let ok = rep.passed;
        reports.push(rep.clone());
        if ok {
            Ok(())
        } else {
            Err(CqtError::Consistency {
                equation,
                report: Box::new(rep),
            })
        }
    };

    // ζ(h,l) = ε(l ↼ h), the right-action reading of the same form
    let from_right = chain(&[h.counit(), &harpoon_r]);
    let zeta_flipped = chain(&[&zeta_row, &flip]);
    consistency(
        "zeta_from_right_action",
        compare_maps(
            "zeta_from_right_action",
            &from_right,
            &zeta_flipped,
            &h.legs(2),
            &scalar_legs,
        ),
    )?;
    // ζ(k,g) = ζ(S⁻¹(g), k)
    let rhs = chain(&[&zeta_row, &sinv.kron(&id), &flip]);
    consistency(
        "zeta_inverse_antipode_symmetry",
        compare_maps(
            "zeta_inverse_antipode_symmetry",
            &zeta_row,
            &rhs,
            &h.legs(2),
            &scalar_legs,
        ),
    )?;
    // ζ(k,g) = ζ(g, S(k))
    let rhs = chain(&[&zeta_row, &id.kron(h.antipode()), &flip]);
    consistency(
        "zeta_antipode_symmetry",
        compare_maps(
            "zeta_antipode_symmetry",
            &zeta_row,
            &rhs,
            &h.legs(2),
            &scalar_legs,
        ),
    )?;

    // reconstruction: k ⇀ g = ζ(k,g₁)g₂ and l ↼ h = ζ(h,l₂)l₁, lifted to
    // the two-leg actions
    let expected_harpoon_l = chain(&[&zeta_row.kron(&id), &id.kron(h.comul())]);
    consistency(
        "left_action_reconstruction",
        compare_maps(
            "left_action_reconstruction",
            m.act_l(),
            &expected_harpoon_l.kron(&id),
            &Legs::new(vec![h.basis_names(); 3]),
            &h.legs(2),
        ),
    )?;
    let expected_harpoon_r = chain(&[
        &id.kron(&zeta_row),
        &LinearMap::leg_permutation(f, &[n; 3], &[0, 2, 1]),
        &h.comul().kron(&id),
    ]);
    consistency(
        "right_action_reconstruction",
        compare_maps(
            "right_action_reconstruction",
            m.act_r(),
            &id.kron(&expected_harpoon_r),
            &Legs::new(vec![h.basis_names(); 3]),
            &h.legs(2),
        ),
    )?;

    // four-variable identity: ζ(k,g)ζ(h,l) = (ε⊗ε⊗ε⊗ε)ψ(k⊗l⊗g⊗h)
    let psi = braiding(m, m)?.map;
    let eps4 = h
        .counit()
        .kron(h.counit())
        .kron(h.counit())
        .kron(h.counit());
    let lhs = chain(&[
        &zeta_row.kron(&zeta_row),
        &LinearMap::leg_permutation(f, &[n; 4], &[0, 2, 3, 1]),
    ]);
    let rhs = chain(&[&eps4, &psi]);
    consistency(
        "four_variable_identity",
        compare_maps(
            "four_variable_identity",
            &lhs,
            &rhs,
            &h.legs(4),
            &scalar_legs,
        ),
    )?;

    let cq = check_cqt(&h, &zeta)?;
    for rep in &cq.reports {
        consistency("cqt_battery", rep.clone())?;
    }
    let cotriangular = is_cotriangular(&h, &zeta);
    if !cotriangular.passed {
        return Err(CqtError::Consistency {
            equation: "CQT5",
            report: Box::new(cotriangular),
        });
    }

    Ok(ZetaExtraction {
        zeta,
        inverse: cq.inverse,
        cotriangular,
        reports,
    })
}

// ---------------------------------------------------------------------------
// Instance drivers
// ---------------------------------------------------------------------------

/// Symmetry of the self-braiding of the fourth variant structure against
/// commutativity of the base.
#[derive(Clone, Debug)]
pub struct SelfBraidingVerdict {
    pub predicate_holds: bool,
    pub symmetry: SymmetryVerdict,
    pub biconditional_holds: bool,
}

/// `ψ_{H₄,H₄}` is a symmetry ⟺ `H` is commutative.
pub fn commutativity_symmetry_verdict(
    h: &Rc<HopfAlgebra>,
) -> Result<SelfBraidingVerdict, CqtError> {
    let m4 = example_module(h, Variant::V4);
    let symmetry = is_symmetric_pair(&m4, &m4)?;
    let predicate_holds = h.is_commutative();
    Ok(SelfBraidingVerdict {
        predicate_holds,
        biconditional_holds: symmetry.symmetric == predicate_holds,
        symmetry,
    })
}

/// Classical extraction: a left-left YD module `(H, ⇀, Δ)` with a
/// symmetric self-braiding yields the cotriangular
/// `ζ(k,g) = (ε⊗ε)ψ(k⊗g)` with `k ⇀ g = ζ(k,g₁)g₂`.
pub fn extract_zeta_from_yd(
    h: &Rc<HopfAlgebra>,
    data: &LeftYdData,
) -> Result<ZetaExtraction, CqtError> {
    let n = h.dim();
    if data.coaction != *h.comul() {
        return Err(CqtError::Shape {
            what: "left coaction is not the comultiplication".into(),
        });
    }
    let embedded = embed_llyd(h, data)?;
    let sym = is_symmetric_pair(&embedded, &embedded)?;
    if let Some(w) = sym.witness {
        return Err(CqtError::NotCotriangularizable {
            witness: Box::new(w),
        });
    }
    let psi = braiding(&embedded, &embedded)?.map;
    let zeta_row = chain(&[&h.counit().kron(h.counit()), &psi]);
    let zeta = BilinearForm::from_row(zeta_row.clone().with_legs(vec![n, n], vec![1]));

    let mut reports = Vec::new();
    // reconstruction k ⇀ g = ζ(k,g₁)g₂
    let id = h.id();
    let expected = chain(&[&zeta_row.kron(&id), &id.kron(h.comul())]);
    let rep = compare_maps(
        "action_reconstruction",
        &data.action,
        &expected,
        &h.legs(2),
        &h.legs(1),
    );
    if !rep.passed {
        return Err(CqtError::Consistency {
            equation: "action_reconstruction",
            report: Box::new(rep),
        });
    }
    reports.push(rep);

    let cq = check_cqt(h, &zeta)?;
    if let Some(bad) = cq.reports.iter().find(|r| !r.passed) {
        return Err(CqtError::Consistency {
            equation: "cqt_battery",
            report: Box::new(bad.clone()),
        });
    }
    reports.extend(cq.reports.clone());
    let cotriangular = is_cotriangular(h, &zeta);
    if !cotriangular.passed {
        return Err(CqtError::Consistency {
            equation: "CQT5",
            report: Box::new(cotriangular),
        });
    }

    Ok(ZetaExtraction {
        zeta,
        inverse: cq.inverse,
        cotriangular,
        reports,
    })
}
