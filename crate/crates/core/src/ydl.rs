//! Yetter-Drinfel'd-Long bimodules over a Hopf algebra.
//!
//! A [`YdlBimodule`] carries four structure maps over a base Hopf algebra
//! `H`: a left action `▷ : H⊗M → M`, a right action `◁ : M⊗H → M`, a left
//! coaction `ρˡ : M → H⊗M` (written `m ↦ m₍₋₁₎⊗m₍₀₎`) and a right
//! coaction `ρʳ : M → M⊗H` (`m ↦ m₍₀₎⊗m₍₁₎`). [`check_ydl`] runs the full
//! ten-family battery: module laws, the bimodule compatibility, comodule
//! laws, the bicomodule compatibility, the two Yetter-Drinfel'd
//! conditions and the two Long conditions.
//!
//! The canonical family of such structures on the space `H ⊗ H` comes in
//! four variants ([`Variant`], [`example_module`]); classical one-sided
//! Yetter-Drinfel'd modules embed via [`embed_llyd`] / [`embed_rryd`];
//! [`tensor_ydl`] is the monoidal structure and [`braiding`] /
//! [`braiding_inverse`] the braiding
//! `ψ(m⊗n) = m₍₋₁₎ ▷ n₍₀₎ ⊗ m₍₀₎ ◁ n₍₁₎`.

use alloc::boxed::Box;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::{HopfAlgebra, HopfError};
use crate::linmap::{compose_chain, LinearMap};
use crate::report::{compare_maps, AxiomReport, Legs};
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YdlError {
    /// The two modules live over different base Hopf algebras.
    BaseMismatch,
    /// Input data failed an axiom; the report carries the witness.
    Axiom(Box<AxiomReport>),
    /// A structure map has the wrong shape.
    Shape { what: String },
    /// The base antipode is not bijective (needed for the inverse braiding).
    AntipodeNotBijective { rank: usize },
}

impl fmt::Display for YdlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YdlError::BaseMismatch => write!(f, "modules are over different Hopf algebras"),
            YdlError::Axiom(r) => write!(f, "axiom {} failed on input data", r.axiom_id),
            YdlError::Shape { what } => write!(f, "shape error: {what}"),
            YdlError::AntipodeNotBijective { rank } => {
                write!(f, "antipode not bijective (rank {rank})")
            }
        }
    }
}

impl From<HopfError> for YdlError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::AntipodeNotBijective { rank } => YdlError::AntipodeNotBijective { rank },
            HopfError::Axiom(r) => YdlError::Axiom(r),
            other => YdlError::Shape {
                what: format!("{other}"),
            },
        }
    }
}

/// The four canonical YDL structures on `H ⊗ H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    V1,
    V2,
    V3,
    V4,
}

impl Variant {
    pub fn from_index(i: u8) -> Option<Variant> {
        match i {
            1 => Some(Variant::V1),
            2 => Some(Variant::V2),
            3 => Some(Variant::V3),
            4 => Some(Variant::V4),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Variant::V1 => 1,
            Variant::V2 => 2,
            Variant::V3 => 3,
            Variant::V4 => 4,
        }
    }

    pub const ALL: [Variant; 4] = [Variant::V1, Variant::V2, Variant::V3, Variant::V4];
}

#[derive(Clone, Debug)]
pub struct YdlBimodule {
    over: Rc<HopfAlgebra>,
    dim: usize,
    basis_names: Vec<String>,
    act_l: LinearMap,   // n·m -> m
    act_r: LinearMap,   // m·n -> m
    coact_l: LinearMap, // m -> n·m
    coact_r: LinearMap, // m -> m·n
}

impl YdlBimodule {
    /// Raw constructor; validity is established by [`check_ydl`].
    pub fn from_parts(
        over: Rc<HopfAlgebra>,
        basis_names: Vec<String>,
        act_l: LinearMap,
        act_r: LinearMap,
        coact_l: LinearMap,
        coact_r: LinearMap,
    ) -> Self {
        let dim = basis_names.len();
        YdlBimodule {
            over,
            dim,
            basis_names,
            act_l,
            act_r,
            coact_l,
            coact_r,
        }
    }

    pub fn over(&self) -> &Rc<HopfAlgebra> {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn act_l(&self) -> &LinearMap {
        &self.act_l
    }

    pub fn act_r(&self) -> &LinearMap {
        &self.act_r
    }

    pub fn coact_l(&self) -> &LinearMap {
        &self.coact_l
    }

    pub fn coact_r(&self) -> &LinearMap {
        &self.coact_r
    }

    pub fn field(&self) -> FieldSpec {
        self.over.field()
    }

    pub fn id(&self) -> LinearMap {
        LinearMap::identity(self.field(), self.dim)
    }

    pub fn same_base(&self, other: &YdlBimodule) -> bool {
        Rc::ptr_eq(&self.over, &other.over) || *self.over == *other.over
    }

    /// Replaces the right action (negative-test helper).
    pub fn with_act_r(mut self, act_r: LinearMap) -> Self {
        self.act_r = act_r;
        self
    }

    /// The one-dimensional module with all structure through ε and 1.
    pub fn trivial(h: &Rc<HopfAlgebra>) -> Self {
        let n = h.dim();
        let act_l = h.counit().clone().with_legs(vec![n, 1], vec![1]);
        let act_r = h.counit().clone().with_legs(vec![1, n], vec![1]);
        let coact_l = h.unit().clone().with_legs(vec![1], vec![n, 1]);
        let coact_r = h.unit().clone().with_legs(vec![1], vec![1, n]);
        YdlBimodule::from_parts(
            Rc::clone(h),
            vec!["1".into()],
            act_l,
            act_r,
            coact_l,
            coact_r,
        )
    }
}

fn chain(maps: &[&LinearMap]) -> LinearMap {
    compose_chain(maps).expect("internal chain shapes")
}

fn perm(f: FieldSpec, dims: &[usize], dest: &[usize]) -> LinearMap {
    LinearMap::leg_permutation(f, dims, dest)
}

// ---------------------------------------------------------------------------
// The canonical structure maps on H ⊗ H
// ---------------------------------------------------------------------------

/// `h ▷ (k⊗l) = hk ⊗ l`.
fn act_left_mult(h: &HopfAlgebra) -> LinearMap {
    h.mul().kron(&h.id())
}

/// `h ▷ (k⊗l) = h₁ k S(h₂) ⊗ l`.
fn act_left_adjoint(h: &HopfAlgebra) -> LinearMap {
    let (f, n) = (h.field(), h.dim());
    let id = h.id();
    let s_on_2 = id.kron(h.antipode()).kron(&id).kron(&id);
    chain(&[
        &h.mul().kron(&id),
        &h.mul().kron(&id).kron(&id),
        &perm(f, &[n; 4], &[0, 2, 1, 3]),
        &s_on_2,
        &h.comul().kron(&id).kron(&id),
    ])
}

/// `ρˡ(k⊗l) = k₁S(k₃) ⊗ (k₂ ⊗ l)`.
fn coact_left_adjoint(h: &HopfAlgebra) -> LinearMap {
    let (f, n) = (h.field(), h.dim());
    let id = h.id();
    let s_on_3 = id.kron(&id).kron(h.antipode()).kron(&id);
    chain(&[
        &h.mul().kron(&id).kron(&id),
        &perm(f, &[n; 4], &[0, 2, 1, 3]),
        &s_on_3,
        &h.comul2().kron(&id),
    ])
}

/// `ρˡ(k⊗l) = k₁ ⊗ (k₂ ⊗ l)`.
fn coact_left_comul(h: &HopfAlgebra) -> LinearMap {
    h.comul().kron(&h.id())
}

/// `(k⊗l) ◁ h = k ⊗ lh`.
fn act_right_mult(h: &HopfAlgebra) -> LinearMap {
    h.id().kron(h.mul())
}

/// `(k⊗l) ◁ h = k ⊗ S(h₁) l h₂`.
fn act_right_adjoint(h: &HopfAlgebra) -> LinearMap {
    let (f, n) = (h.field(), h.dim());
    let id = h.id();
    let s_on_3 = id.kron(&id).kron(h.antipode()).kron(&id);
    chain(&[
        &id.kron(h.mul()),
        &id.kron(h.mul()).kron(&id),
        &perm(f, &[n; 4], &[0, 2, 1, 3]),
        &s_on_3,
        &id.kron(&id).kron(h.comul()),
    ])
}

/// `ρʳ(k⊗l) = (k ⊗ l₁) ⊗ l₂`.
fn coact_right_comul(h: &HopfAlgebra) -> LinearMap {
    h.id().kron(h.comul())
}

/// `ρʳ(k⊗l) = (k ⊗ l₂) ⊗ S(l₁) l₃`.
fn coact_right_adjoint(h: &HopfAlgebra) -> LinearMap {
    let (f, n) = (h.field(), h.dim());
    let id = h.id();
    let s_on_2 = id.kron(h.antipode()).kron(&id).kron(&id);
    chain(&[
        &id.kron(&id).kron(h.mul()),
        &perm(f, &[n; 4], &[0, 2, 1, 3]),
        &s_on_2,
        &id.kron(&h.comul2()),
    ])
}

/// One of the four canonical YDL bimodule structures on `H ⊗ H`.
pub fn example_module(h: &Rc<HopfAlgebra>, variant: Variant) -> YdlBimodule {
    let names: Vec<String> = h
        .basis_names()
        .iter()
        .flat_map(|a| h.basis_names().iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let (act_l, coact_l, act_r, coact_r) = match variant {
        Variant::V1 => (
            act_left_mult(h),
            coact_left_adjoint(h),
            act_right_adjoint(h),
            coact_right_comul(h),
        ),
        Variant::V2 => (
            act_left_adjoint(h),
            coact_left_comul(h),
            act_right_mult(h),
            coact_right_adjoint(h),
        ),
        Variant::V3 => (
            act_left_mult(h),
            coact_left_adjoint(h),
            act_right_mult(h),
            coact_right_adjoint(h),
        ),
        Variant::V4 => (
            act_left_adjoint(h),
            coact_left_comul(h),
            act_right_adjoint(h),
            coact_right_comul(h),
        ),
    };
    let n = h.dim();
    YdlBimodule::from_parts(
        Rc::clone(h),
        names,
        act_l.with_legs(vec![n, n * n], vec![n * n]),
        act_r.with_legs(vec![n * n, n], vec![n * n]),
        coact_l.with_legs(vec![n * n], vec![n, n * n]),
        coact_r.with_legs(vec![n * n], vec![n * n, n]),
    )
}

// ---------------------------------------------------------------------------
// Axiom battery
// ---------------------------------------------------------------------------

/// Runs all ten axiom families on every basis pair, continuing past
/// failures so the full diagnostic picture is reported.
pub fn check_ydl(m: &YdlBimodule) -> Vec<AxiomReport> {
    let h = m.over.as_ref();
    let (f, n) = (h.field(), h.dim());
    let dm = m.dim;
    let idh = h.id();
    let idm = m.id();
    let hn = h.basis_names();
    let mn = &m.basis_names;
    let flip_nn = LinearMap::flip(f, n, n);

    let legs = |spec: &[usize]| -> Legs<'_> {
        Legs::new(
            spec.iter()
                .map(|&s| if s == 0 { hn } else { &mn[..] })
                .collect(),
        )
    };
    let mut reports = Vec::with_capacity(10);

    // left module: ▷(m⊗id) = ▷(id⊗▷), ▷(u⊗id) = id
    let lhs = chain(&[&m.act_l, &h.mul().kron(&idm)]);
    let rhs = chain(&[&m.act_l, &idh.kron(&m.act_l)]);
    let rep = compare_maps("left_module", &lhs, &rhs, &legs(&[0, 0, 1]), &legs(&[1]));
    reports.push(if rep.passed {
        let unital = chain(&[&m.act_l, &h.unit().kron(&idm)]);
        compare_maps("left_module", &unital, &idm, &legs(&[1]), &legs(&[1]))
    } else {
        rep
    });

    // right module: ◁(id⊗m) = ◁(◁⊗id), ◁(id⊗u) = id
    let lhs = chain(&[&m.act_r, &idm.kron(h.mul())]);
    let rhs = chain(&[&m.act_r, &m.act_r.kron(&idh)]);
    let rep = compare_maps("right_module", &lhs, &rhs, &legs(&[1, 0, 0]), &legs(&[1]));
    reports.push(if rep.passed {
        let unital = chain(&[&m.act_r, &idm.kron(h.unit())]);
        compare_maps("right_module", &unital, &idm, &legs(&[1]), &legs(&[1]))
    } else {
        rep
    });

    // bimodule: (a▷m)◁b = a▷(m◁b)
    let lhs = chain(&[&m.act_r, &m.act_l.kron(&idh)]);
    let rhs = chain(&[&m.act_l, &idh.kron(&m.act_r)]);
    reports.push(compare_maps(
        "bimodule_compat",
        &lhs,
        &rhs,
        &legs(&[0, 1, 0]),
        &legs(&[1]),
    ));

    // left comodule: (Δ⊗id)ρˡ = (id⊗ρˡ)ρˡ, (ε⊗id)ρˡ = id
    let lhs = chain(&[&h.comul().kron(&idm), &m.coact_l]);
    let rhs = chain(&[&idh.kron(&m.coact_l), &m.coact_l]);
    let rep = compare_maps("left_comodule", &lhs, &rhs, &legs(&[1]), &legs(&[0, 0, 1]));
    reports.push(if rep.passed {
        let counital = chain(&[&h.counit().kron(&idm), &m.coact_l]);
        compare_maps("left_comodule", &counital, &idm, &legs(&[1]), &legs(&[1]))
    } else {
        rep
    });

    // right comodule: (id⊗Δ)ρʳ = (ρʳ⊗id)ρʳ, (id⊗ε)ρʳ = id
    let lhs = chain(&[&idm.kron(h.comul()), &m.coact_r]);
    let rhs = chain(&[&m.coact_r.kron(&idh), &m.coact_r]);
    let rep = compare_maps("right_comodule", &lhs, &rhs, &legs(&[1]), &legs(&[1, 0, 0]));
    reports.push(if rep.passed {
        let counital = chain(&[&idm.kron(h.counit()), &m.coact_r]);
        compare_maps("right_comodule", &counital, &idm, &legs(&[1]), &legs(&[1]))
    } else {
        rep
    });

    // bicomodule: m₍₋₁₎ ⊗ ρʳ(m₍₀₎) = ρˡ(m₍₀₎) ⊗ m₍₁₎
    let lhs = chain(&[&idh.kron(&m.coact_r), &m.coact_l]);
    let rhs = chain(&[&m.coact_l.kron(&idh), &m.coact_r]);
    reports.push(compare_maps(
        "bicomodule_compat",
        &lhs,
        &rhs,
        &legs(&[1]),
        &legs(&[0, 1, 0]),
    ));

    // yd_left: (h₁▷m)₍₋₁₎ h₂ ⊗ (h₁▷m)₍₀₎ = h₁ m₍₋₁₎ ⊗ h₂ ▷ m₍₀₎
    let lhs = chain(&[
        &h.mul().kron(&idm),
        &idh.kron(&LinearMap::flip(f, dm, n)),
        &m.coact_l.kron(&idh),
        &m.act_l.kron(&idh),
        &idh.kron(&LinearMap::flip(f, n, dm)),
        &h.comul().kron(&idm),
    ]);
    let rhs = chain(&[
        &h.mul().kron(&m.act_l),
        &idh.kron(&flip_nn).kron(&idm),
        &idh.kron(&idh).kron(&m.coact_l),
        &h.comul().kron(&idm),
    ]);
    reports.push(compare_maps(
        "yd_left",
        &lhs,
        &rhs,
        &legs(&[0, 1]),
        &legs(&[0, 1]),
    ));

    // long_left: ρʳ(h▷m) = h ▷ m₍₀₎ ⊗ m₍₁₎
    let lhs = chain(&[&m.coact_r, &m.act_l]);
    let rhs = chain(&[&m.act_l.kron(&idh), &idh.kron(&m.coact_r)]);
    reports.push(compare_maps(
        "long_left",
        &lhs,
        &rhs,
        &legs(&[0, 1]),
        &legs(&[1, 0]),
    ));

    // yd_right: (m◁h₂)₍₀₎ ⊗ h₁(m◁h₂)₍₁₎ = m₍₀₎ ◁ h₁ ⊗ m₍₁₎ h₂
    let mul_rev = chain(&[h.mul(), &flip_nn]);
    let lhs = chain(&[
        &idm.kron(&mul_rev),
        &m.coact_r.kron(&idh),
        &m.act_r.kron(&idh),
        &idm.kron(&flip_nn),
        &idm.kron(h.comul()),
    ]);
    let rhs = chain(&[
        &m.act_r.kron(h.mul()),
        &idm.kron(&flip_nn).kron(&idh),
        &m.coact_r.kron(&idh).kron(&idh),
        &idm.kron(h.comul()),
    ]);
    reports.push(compare_maps(
        "yd_right",
        &lhs,
        &rhs,
        &legs(&[1, 0]),
        &legs(&[1, 0]),
    ));

    // long_right: ρˡ(m◁h) = m₍₋₁₎ ⊗ m₍₀₎ ◁ h
    let lhs = chain(&[&m.coact_l, &m.act_r]);
    let rhs = chain(&[&idh.kron(&m.act_r), &m.coact_l.kron(&idh)]);
    reports.push(compare_maps(
        "long_right",
        &lhs,
        &rhs,
        &legs(&[1, 0]),
        &legs(&[0, 1]),
    ));

    reports
}

// ---------------------------------------------------------------------------
// One-sided Yetter-Drinfel'd data and embeddings
// ---------------------------------------------------------------------------

/// A left module + left comodule, candidate left-left YD module.
#[derive(Clone, Debug)]
pub struct LeftYdData {
    pub basis_names: Vec<String>,
    pub action: LinearMap,   // n·m -> m
    pub coaction: LinearMap, // m -> n·m
}

/// A right module + right comodule, candidate right-right YD module.
#[derive(Clone, Debug)]
pub struct RightYdData {
    pub basis_names: Vec<String>,
    pub action: LinearMap,   // m·n -> m
    pub coaction: LinearMap, // m -> m·n
}

impl LeftYdData {
    /// The regular space `H` with `▷ = multiplication` and the adjoint
    /// coaction `k ↦ k₁S(k₃) ⊗ k₂`.
    pub fn mult_adjoint(h: &HopfAlgebra) -> Self {
        let (f, n) = (h.field(), h.dim());
        let id = h.id();
        let s_on_3 = id.kron(&id).kron(h.antipode());
        let coaction = chain(&[
            &h.mul().kron(&id),
            &perm(f, &[n; 3], &[0, 2, 1]),
            &s_on_3,
            &h.comul2(),
        ]);
        LeftYdData {
            basis_names: h.basis_names().to_vec(),
            action: h.mul().clone(),
            coaction,
        }
    }

    /// The regular space `H` with the adjoint action `a ▷ k = a₁kS(a₂)`
    /// and `ρ = Δ`.
    pub fn adjoint_comul(h: &HopfAlgebra) -> Self {
        let (f, n) = (h.field(), h.dim());
        let id = h.id();
        let s_on_2 = id.kron(h.antipode()).kron(&id);
        let action = chain(&[
            h.mul(),
            &h.mul().kron(&id),
            &perm(f, &[n; 3], &[0, 2, 1]),
            &s_on_2,
            &h.comul().kron(&id),
        ]);
        LeftYdData {
            basis_names: h.basis_names().to_vec(),
            action,
            coaction: h.comul().clone(),
        }
    }

    /// The regular space `H` with `▷ = multiplication` and an arbitrary
    /// coaction (used by the classical extraction drivers).
    pub fn mult_with_coaction(h: &HopfAlgebra, coaction: LinearMap) -> Self {
        LeftYdData {
            basis_names: h.basis_names().to_vec(),
            action: h.mul().clone(),
            coaction,
        }
    }
}

impl RightYdData {
    /// `m ◁ h = S(h₁) m h₂` with `ρ = Δ`.
    pub fn adjoint_comul(h: &HopfAlgebra) -> Self {
        let (f, n) = (h.field(), h.dim());
        let id = h.id();
        let s_on_2 = id.kron(h.antipode()).kron(&id);
        let action = chain(&[
            h.mul(),
            &h.mul().kron(&id),
            &perm(f, &[n; 3], &[1, 0, 2]),
            &s_on_2,
            &id.kron(h.comul()),
        ]);
        RightYdData {
            basis_names: h.basis_names().to_vec(),
            action,
            coaction: h.comul().clone(),
        }
    }

    /// `◁ = multiplication` with the adjoint coaction `m ↦ m₂ ⊗ S(m₁)m₃`.
    pub fn mult_adjoint(h: &HopfAlgebra) -> Self {
        let (f, n) = (h.field(), h.dim());
        let id = h.id();
        let s_on_1 = h.antipode().kron(&id).kron(&id);
        let coaction = chain(&[
            &id.kron(h.mul()),
            &perm(f, &[n; 3], &[1, 0, 2]),
            &s_on_1,
            &h.comul2(),
        ]);
        RightYdData {
            basis_names: h.basis_names().to_vec(),
            action: h.mul().clone(),
            coaction,
        }
    }
}

/// Embeds a left-left YD module into the YDL category: the right action
/// becomes `m ◁ h = ε(h)m` and the right coaction `m ↦ m ⊗ 1`. The input
/// axioms are validated through the full battery of the result.
pub fn embed_llyd(h: &Rc<HopfAlgebra>, data: &LeftYdData) -> Result<YdlBimodule, YdlError> {
    let n = h.dim();
    let m = data.basis_names.len();
    let idm = LinearMap::identity(h.field(), m);
    let act_r = idm.kron(h.counit()).with_legs(vec![m, n], vec![m]);
    let coact_r = idm.kron(h.unit()).with_legs(vec![m], vec![m, n]);
    let out = YdlBimodule::from_parts(
        Rc::clone(h),
        data.basis_names.clone(),
        data.action.clone(),
        act_r,
        data.coaction.clone(),
        coact_r,
    );
    for rep in check_ydl(&out) {
        if !rep.passed {
            return Err(YdlError::Axiom(Box::new(rep)));
        }
    }
    Ok(out)
}

/// Embeds a right-right YD module: trivial left action and coaction.
pub fn embed_rryd(h: &Rc<HopfAlgebra>, data: &RightYdData) -> Result<YdlBimodule, YdlError> {
    let n = h.dim();
    let m = data.basis_names.len();
    let idm = LinearMap::identity(h.field(), m);
    let act_l = h.counit().kron(&idm).with_legs(vec![n, m], vec![m]);
    let coact_l = h.unit().kron(&idm).with_legs(vec![m], vec![n, m]);
    let out = YdlBimodule::from_parts(
        Rc::clone(h),
        data.basis_names.clone(),
        act_l,
        data.action.clone(),
        coact_l,
        data.coaction.clone(),
    );
    for rep in check_ydl(&out) {
        if !rep.passed {
            return Err(YdlError::Axiom(Box::new(rep)));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Monoidal structure and the braiding
// ---------------------------------------------------------------------------

/// Tensor product in the category: diagonal actions, codiagonal coactions.
pub fn tensor_ydl(m: &YdlBimodule, n: &YdlBimodule) -> Result<YdlBimodule, YdlError> {
    if !m.same_base(n) {
        return Err(YdlError::BaseMismatch);
    }
    let h = m.over.as_ref();
    let (f, hn) = (h.field(), h.dim());
    let (dm, dn) = (m.dim, n.dim);
    let idh = h.id();
    let idm = m.id();
    let idn = n.id();

    let act_l = chain(&[
        &m.act_l.kron(&n.act_l),
        &idh.kron(&LinearMap::flip(f, hn, dm)).kron(&idn),
        &h.comul().kron(&idm).kron(&idn),
    ]);
    let coact_l = chain(&[
        &h.mul().kron(&idm).kron(&idn),
        &idh.kron(&LinearMap::flip(f, dm, hn)).kron(&idn),
        &m.coact_l.kron(&n.coact_l),
    ]);
    let act_r = chain(&[
        &m.act_r.kron(&n.act_r),
        &idm.kron(&LinearMap::flip(f, dn, hn)).kron(&idh),
        &idm.kron(&idn).kron(h.comul()),
    ]);
    let coact_r = chain(&[
        &idm.kron(&idn).kron(h.mul()),
        &idm.kron(&LinearMap::flip(f, hn, dn)).kron(&idh),
        &m.coact_r.kron(&n.coact_r),
    ]);

    let names: Vec<String> = m
        .basis_names
        .iter()
        .flat_map(|a| n.basis_names.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    let md = dm * dn;
    Ok(YdlBimodule::from_parts(
        Rc::clone(&m.over),
        names,
        act_l.with_legs(vec![hn, md], vec![md]),
        act_r.with_legs(vec![md, hn], vec![md]),
        coact_l.with_legs(vec![md], vec![hn, md]),
        coact_r.with_legs(vec![md], vec![md, hn]),
    ))
}

/// The braiding `ψ_{M,N} : M⊗N → N⊗M` as an exact matrix.
#[derive(Clone, Debug)]
pub struct BraidMap {
    pub dim_m: usize,
    pub dim_n: usize,
    pub map: LinearMap,
}

/// `ψ_{M,N}(m⊗n) = m₍₋₁₎ ▷ n₍₀₎ ⊗ m₍₀₎ ◁ n₍₁₎`.
pub fn braiding(m: &YdlBimodule, n: &YdlBimodule) -> Result<BraidMap, YdlError> {
    if !m.same_base(n) {
        return Err(YdlError::BaseMismatch);
    }
    let h = m.over.as_ref();
    let f = h.field();
    let idh = h.id();
    let map = chain(&[
        &n.act_l.kron(&m.act_r),
        &idh.kron(&LinearMap::flip(f, m.dim, n.dim)).kron(&idh),
        &m.coact_l.kron(&n.coact_r),
    ])
    .with_legs(vec![m.dim, n.dim], vec![n.dim, m.dim]);
    Ok(BraidMap {
        dim_m: m.dim,
        dim_n: n.dim,
        map,
    })
}

/// The inverse braiding `ψ⁻¹ : N⊗M → M⊗N`,
/// `n⊗m ↦ m₍₀₎ ◁ S⁻¹(n₍₁₎) ⊗ S⁻¹(m₍₋₁₎) ▷ n₍₀₎`. Requires a bijective
/// antipode.
pub fn braiding_inverse(m: &YdlBimodule, n: &YdlBimodule) -> Result<BraidMap, YdlError> {
    if !m.same_base(n) {
        return Err(YdlError::BaseMismatch);
    }
    let h = m.over.as_ref();
    let (f, hn) = (h.field(), h.dim());
    let sinv = h.antipode_inverse()?;
    let idm = m.id();
    let idn = n.id();
    let swap_outer = perm(f, &[n.dim, hn, hn, m.dim], &[3, 1, 2, 0]);
    let map = chain(&[
        &m.act_r.kron(&n.act_l),
        &swap_outer,
        &idn.kron(&sinv).kron(&sinv).kron(&idm),
        &n.coact_r.kron(&m.coact_l),
    ])
    .with_legs(vec![n.dim, m.dim], vec![m.dim, n.dim]);
    Ok(BraidMap {
        dim_m: n.dim,
        dim_n: m.dim,
        map,
    })
}

/// Checks that `ψ_{M,N}` is a morphism in the category: it commutes with
/// all four structure maps of the tensor objects.
pub fn braiding_is_morphism(
    m: &YdlBimodule,
    n: &YdlBimodule,
) -> Result<Vec<AxiomReport>, YdlError> {
    let h = m.over.as_ref();
    let idh = h.id();
    let psi = braiding(m, n)?.map;
    let t_mn = tensor_ydl(m, n)?;
    let t_nm = tensor_ydl(n, m)?;
    let hn = h.basis_names();
    let legs_in = |with_h_left: bool| -> Legs<'_> {
        if with_h_left {
            Legs::new(vec![hn, &m.basis_names, &n.basis_names])
        } else {
            Legs::new(vec![&m.basis_names, &n.basis_names])
        }
    };
    let legs_out_nm = Legs::new(vec![&n.basis_names, &m.basis_names]);
    let mut reports = Vec::with_capacity(4);

    let lhs = chain(&[&psi, &t_mn.act_l]);
    let rhs = chain(&[&t_nm.act_l, &idh.kron(&psi)]);
    reports.push(compare_maps(
        "braiding_left_linear",
        &lhs,
        &rhs,
        &legs_in(true),
        &legs_out_nm,
    ));

    let lhs = chain(&[&psi, &t_mn.act_r]);
    let rhs = chain(&[&t_nm.act_r, &psi.kron(&idh)]);
    let domain = Legs::new(vec![&m.basis_names, &n.basis_names, hn]);
    reports.push(compare_maps(
        "braiding_right_linear",
        &lhs,
        &rhs,
        &domain,
        &legs_out_nm,
    ));

    let lhs = chain(&[&t_nm.coact_l, &psi]);
    let rhs = chain(&[&idh.kron(&psi), &t_mn.coact_l]);
    let codomain = Legs::new(vec![hn, &n.basis_names, &m.basis_names]);
    reports.push(compare_maps(
        "braiding_left_colinear",
        &lhs,
        &rhs,
        &legs_in(false),
        &codomain,
    ));

    let lhs = chain(&[&t_nm.coact_r, &psi]);
    let rhs = chain(&[&psi.kron(&idh), &t_mn.coact_r]);
    let codomain = Legs::new(vec![&n.basis_names, &m.basis_names, hn]);
    reports.push(compare_maps(
        "braiding_right_colinear",
        &lhs,
        &rhs,
        &legs_in(false),
        &codomain,
    ));

    Ok(reports)
}
