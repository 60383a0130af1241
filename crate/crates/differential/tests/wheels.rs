//! Wheels are cocycles: the coboundary kills every odd wheel and the small
//! wheel products, exactly.

use differential::{coboundary, wheel, wheel_product};
use graph_core::TypePolicy;

#[test]
fn odd_wheels_are_cocycles() {
    for k in [1, 3, 5] {
        let r = wheel(k).unwrap();
        assert!(!r.is_empty(), "R_{k} vanished");
        let d = coboundary(&r, TypePolicy::Ascending);
        assert!(d.is_empty(), "∂R_{k} has {} terms", d.len());
    }
}

#[test]
fn even_wheels_vanish_before_any_differential() {
    assert!(wheel(2).unwrap().is_empty());
    assert!(wheel(4).unwrap().is_empty());
}

#[test]
fn the_one_three_wheel_product_is_a_cocycle() {
    let p = wheel_product(&[1, 3]).unwrap();
    assert!(!p.is_empty());
    let d = coboundary(&p, TypePolicy::Ascending);
    assert!(d.is_empty(), "∂(R₁∧R₃) has {} terms", d.len());
}

#[test]
fn wheel_closure_depends_on_the_type_restriction() {
    // R₁'s splittings cancel pairwise between the two orientations even without the
    // admissibility filter; R₃ is only closed inside the ascending complex, where
    // the filter removes the splittings that fail to cancel.
    let policy = TypePolicy::Unrestricted { max_out: 4 };
    assert!(coboundary(&wheel(1).unwrap(), policy).is_empty());
    assert!(!coboundary(&wheel(3).unwrap(), policy).is_empty());
}
