//! Shared instance constructors for the integration tests.

use std::rc::Rc;

use ydl_core::hopf::{cyclic_table, product_table, s3_table, HopfAlgebra};
use ydl_core::scalar::FieldSpec;

pub fn q() -> FieldSpec {
    FieldSpec::Rational
}

pub fn trivial() -> Rc<HopfAlgebra> {
    HopfAlgebra::trivial(q()).into_rc()
}

pub fn c2() -> Rc<HopfAlgebra> {
    HopfAlgebra::group_algebra(
        q(),
        &cyclic_table(2),
        Some(&["1".to_string(), "g".to_string()]),
    )
    .unwrap()
    .into_rc()
}

pub fn c3() -> Rc<HopfAlgebra> {
    HopfAlgebra::group_algebra(
        q(),
        &cyclic_table(3),
        Some(&["1".to_string(), "g".to_string(), "g2".to_string()]),
    )
    .unwrap()
    .into_rc()
}

pub fn c2c2() -> Rc<HopfAlgebra> {
    let t = product_table(&cyclic_table(2), &cyclic_table(2));
    let names: Vec<String> = ["1", "b", "a", "ab"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    HopfAlgebra::group_algebra(q(), &t, Some(&names))
        .unwrap()
        .into_rc()
}

pub fn s3() -> Rc<HopfAlgebra> {
    let (t, names) = s3_table();
    HopfAlgebra::group_algebra(q(), &t, Some(&names))
        .unwrap()
        .into_rc()
}

pub fn dual_s3() -> Rc<HopfAlgebra> {
    HopfAlgebra::dual_hopf(&s3()).unwrap().into_rc()
}

pub fn sweedler() -> Rc<HopfAlgebra> {
    HopfAlgebra::sweedler(q()).unwrap().into_rc()
}

pub fn c2_tensor_c2() -> Rc<HopfAlgebra> {
    let h = c2();
    HopfAlgebra::tensor_hopf(&h, &h).unwrap().into_rc()
}

/// The full instance catalog with short keys.
pub fn catalog() -> Vec<(&'static str, Rc<HopfAlgebra>)> {
    vec![
        ("k", trivial()),
        ("c2", c2()),
        ("c3", c3()),
        ("c2c2", c2c2()),
        ("s3", s3()),
        ("dual_s3", dual_s3()),
        ("sweedler", sweedler()),
        ("c2_tensor_c2", c2_tensor_c2()),
    ]
}
