//! Built-in instances: the full algebra catalog plus named QT/CQT data.

use std::rc::Rc;

use ydl_core::cqt::BilinearForm;
use ydl_core::hopf::{cyclic_table, product_table, s3_table, HopfAlgebra};
use ydl_core::qt::RMatrix;
use ydl_core::scalar::FieldSpec;

pub const ALGEBRA_KEYS: [&str; 8] = [
    "k",
    "c2",
    "c3",
    "c2c2",
    "s3",
    "dual_s3",
    "sweedler",
    "c2_tensor_c2",
];

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn named(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Builds a catalog algebra by key.
pub fn algebra(key: &str) -> Option<Rc<HopfAlgebra>> {
    let h = match key {
        "k" => HopfAlgebra::trivial(q()),
        "c2" => {
            HopfAlgebra::group_algebra(q(), &cyclic_table(2), Some(&named(&["1", "g"]))).unwrap()
        }
        "c3" => HopfAlgebra::group_algebra(q(), &cyclic_table(3), Some(&named(&["1", "g", "g2"])))
            .unwrap(),
        "c2c2" => {
            let t = product_table(&cyclic_table(2), &cyclic_table(2));
            HopfAlgebra::group_algebra(q(), &t, Some(&named(&["1", "b", "a", "ab"]))).unwrap()
        }
        "s3" => {
            let (t, names) = s3_table();
            HopfAlgebra::group_algebra(q(), &t, Some(&names)).unwrap()
        }
        "dual_s3" => {
            let (t, names) = s3_table();
            let s3 = HopfAlgebra::group_algebra(q(), &t, Some(&names)).unwrap();
            HopfAlgebra::dual_hopf(&s3).unwrap()
        }
        "sweedler" => HopfAlgebra::sweedler(q()).unwrap(),
        "c2_tensor_c2" => {
            let c2 = HopfAlgebra::group_algebra(q(), &cyclic_table(2), Some(&named(&["1", "g"])))
                .unwrap();
            HopfAlgebra::tensor_hopf(&c2, &c2).unwrap()
        }
        _ => return None,
    };
    Some(h.into_rc())
}

/// Built-in R-matrices. `unit` works over any base; `r0` is the sign
/// R-matrix `½(1⊗1 + 1⊗g + g⊗1 - g⊗g)` on `c2`.
pub fn r_matrix(key: &str, h: &HopfAlgebra) -> Option<RMatrix> {
    match key {
        "unit" => Some(RMatrix::unit(h)),
        "r0" if h.dim() == 2 => {
            let half = q().ratio(1, 2).unwrap();
            let nhalf = half.neg();
            Some(
                RMatrix::from_grid(h, &[vec![half.clone(), half.clone()], vec![half, nhalf]])
                    .unwrap(),
            )
        }
        _ => None,
    }
}

/// Built-in bilinear forms. `eps` is `ε⊗ε` over any base; `sign` is
/// `ζ(gᵃ,gᵇ) = (-1)^{ab}` on `c2`.
pub fn zeta_form(key: &str, h: &HopfAlgebra) -> Option<BilinearForm> {
    match key {
        "eps" => Some(BilinearForm::counit_squared(h)),
        "sign" if h.dim() == 2 => {
            let one = q().one();
            Some(
                BilinearForm::from_grid(
                    h,
                    &[vec![one.clone(), one.clone()], vec![one.clone(), one.neg()]],
                )
                .unwrap(),
            )
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_catalog_keys_build_and_are_checked() {
        for key in ALGEBRA_KEYS {
            let h = algebra(key).unwrap();
            assert!(h.is_checked(), "{key} not validated");
        }
        assert!(algebra("nope").is_none());
    }

    #[test]
    fn catalog_r_and_zeta_exist_for_c2() {
        let h = algebra("c2").unwrap();
        assert!(r_matrix("unit", &h).is_some());
        assert!(r_matrix("r0", &h).is_some());
        assert!(zeta_form("eps", &h).is_some());
        assert!(zeta_form("sign", &h).is_some());
        let s3 = algebra("s3").unwrap();
        assert!(r_matrix("r0", &s3).is_none());
    }
}
