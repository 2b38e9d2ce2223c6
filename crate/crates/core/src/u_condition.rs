//! The u-condition: `m₍₋₁₎ ▷ m₍₀₎₍₀₎ ◁ m₍₀₎₍₁₎ = m`.
//!
//! The composite takes the left coaction first and then the right
//! coaction on the `[0]`-leg; the equivalent reading that takes the right
//! coaction first (`m₍₀₎₍₋₁₎ ▷ m₍₀₎₍₀₎ ◁ m₍₁₎ = m`) is evaluated alongside
//! and their agreement is reported per instance.
//!
//! Drivers: every canonical variant structure on `H ⊗ H` satisfies the
//! u-condition exactly when `S² = id`, and for an involutive base with
//! u-satisfying `M`, `N` the u-composite of `M ⊗ N` equals
//! `ψ_{N,M} ∘ ψ_{M,N}` as an exact matrix identity, which yields the
//! biconditional "`M ⊗ N` satisfies u ⟺ `ψ_{M,N}` is a symmetry".

use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::analysis::{is_symmetric_pair, SymmetryVerdict};
use crate::hopf::HopfAlgebra;
use crate::linmap::{compose_chain, LinearMap};
use crate::report::{compare_maps, Legs, Witness};
use crate::ydl::{braiding, example_module, tensor_ydl, Variant, YdlBimodule, YdlError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UError {
    /// A stated hypothesis of the driver does not hold on the input.
    PreconditionFailed {
        hypothesis: String,
    },
    Ydl(YdlError),
}

impl fmt::Display for UError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UError::PreconditionFailed { hypothesis } => {
                write!(f, "precondition failed: {hypothesis}")
            }
            UError::Ydl(e) => write!(f, "{e}"),
        }
    }
}

impl From<YdlError> for UError {
    fn from(e: YdlError) -> Self {
        UError::Ydl(e)
    }
}

/// Verdict of the u-condition on one module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UVerdict {
    pub holds: bool,
    /// First basis vector on which the composite moves the input.
    pub witness: Option<Witness>,
    /// The two coaction orderings agree on every basis vector.
    pub eq_orderings_agree: bool,
}

/// The u-composite `m ↦ m₍₋₁₎ ▷ m₍₀₎₍₀₎ ◁ m₍₀₎₍₁₎` as a matrix.
pub fn u_composite(m: &YdlBimodule) -> LinearMap {
    let h = m.over().as_ref();
    let idh = h.id();
    compose_chain(&[
        m.act_r(),
        &m.act_l().kron(&idh),
        &idh.kron(m.coact_r()),
        m.coact_l(),
    ])
    .expect("u-composite shapes")
}

/// The alternate ordering `m ↦ m₍₀₎₍₋₁₎ ▷ m₍₀₎₍₀₎ ◁ m₍₁₎`.
pub fn u_composite_alt(m: &YdlBimodule) -> LinearMap {
    let h = m.over().as_ref();
    let idh = h.id();
    compose_chain(&[
        m.act_r(),
        &m.act_l().kron(&idh),
        &m.coact_l().kron(&idh),
        m.coact_r(),
    ])
    .expect("u-composite shapes")
}

/// Checks the u-condition on every basis vector.
pub fn check_u(m: &YdlBimodule) -> UVerdict {
    let u1 = u_composite(m);
    let u2 = u_composite_alt(m);
    let legs = Legs::new(vec![m.basis_names()]);
    let rep = compare_maps("u_condition", &u1, &m.id(), &legs, &legs);
    UVerdict {
        holds: rep.passed,
        witness: rep.witness,
        eq_orderings_agree: u1 == u2,
    }
}

/// The u-condition across the four canonical variants against `S² = id`.
#[derive(Clone, Debug)]
pub struct UInvolutivityVerdict {
    pub involutive: bool,
    pub variants: Vec<(Variant, UVerdict)>,
    /// Every variant verdict equals `involutive`.
    pub consistent: bool,
}

pub fn u_involutivity_verdict(h: &Rc<HopfAlgebra>) -> UInvolutivityVerdict {
    let involutive = h.is_involutive();
    let variants: Vec<(Variant, UVerdict)> = Variant::ALL
        .iter()
        .map(|&v| {
            let m = example_module(h, v);
            let mut verdict = check_u(&m);
            // a failing variant always has a witness on the k⊗1 slice;
            // prefer it, since it isolates the antipode defect
            if !verdict.holds {
                if let Some(w) = slice_witness(h, &m) {
                    verdict.witness = Some(w);
                }
            }
            (v, verdict)
        })
        .collect();
    let consistent = variants.iter().all(|(_, u)| u.holds == involutive);
    UInvolutivityVerdict {
        involutive,
        variants,
        consistent,
    }
}

/// First failing `k⊗1` basis vector of the u-composite of a variant
/// module, when `1_H` is a basis vector.
fn slice_witness(h: &HopfAlgebra, m: &YdlBimodule) -> Option<Witness> {
    let j0 = h.unit_basis_index()?;
    let n = h.dim();
    let u1 = u_composite(m);
    let field = h.field();
    let legs = Legs::new(vec![m.basis_names()]);
    (0..n).find_map(|k| {
        let col_idx = k * n + j0;
        let col = u1.col(col_idx);
        if col.as_slice() == [(col_idx, field.one())] {
            return None;
        }
        let lhs = u1.dense_col(col_idx);
        let mut rhs = alloc::vec![field.zero(); m.dim()];
        rhs[col_idx] = field.one();
        Some(crate::report::witness_at(col_idx, &lhs, &rhs, &legs, &legs))
    })
}

/// Verdict for the tensor driver.
#[derive(Clone, Debug)]
pub struct TensorUVerdict {
    /// `u_{M⊗N} = ψ_{N,M} ∘ ψ_{M,N}` entrywise.
    pub composite_identity_holds: bool,
    pub tensor_u: UVerdict,
    pub symmetry: SymmetryVerdict,
    /// `tensor_u.holds ⟺ symmetry.symmetric`.
    pub biconditional_holds: bool,
}

/// For an involutive base and u-satisfying `M`, `N`: checks the exact
/// identity `u_{M⊗N} = ψ_{N,M} ∘ ψ_{M,N}` and derives the biconditional.
pub fn tensor_u_verdict(m: &YdlBimodule, n: &YdlBimodule) -> Result<TensorUVerdict, UError> {
    let h = m.over().as_ref();
    if !h.is_involutive() {
        return Err(UError::PreconditionFailed {
            hypothesis: "S² = id on the base Hopf algebra".into(),
        });
    }
    if !check_u(m).holds {
        return Err(UError::PreconditionFailed {
            hypothesis: "left factor satisfies the u-condition".into(),
        });
    }
    if !check_u(n).holds {
        return Err(UError::PreconditionFailed {
            hypothesis: "right factor satisfies the u-condition".into(),
        });
    }
    let t = tensor_ydl(m, n)?;
    let u_t = u_composite(&t);
    let psi_mn = braiding(m, n)?.map;
    let psi_nm = braiding(n, m)?.map;
    let psi2 = psi_nm.compose(&psi_mn).expect("braiding shapes");
    let composite_identity_holds = u_t == psi2;
    let tensor_u = check_u(&t);
    let symmetry = is_symmetric_pair(m, n)?;
    let biconditional_holds = tensor_u.holds == symmetry.symmetric;
    Ok(TensorUVerdict {
        composite_identity_holds,
        tensor_u,
        symmetry,
        biconditional_holds,
    })
}
