//! Build graded-commutative rings, multiply elements, and integrate.
//!
//! ```sh
//! cargo run --example exterior_algebra
//! ```

use wallcross::algebra::{Algebra, AlgebraSpec, GeneratorSpec};
use wallcross::rational::{int, ratio};

pub fn main() {
    // The exterior algebra Λ(x1, x2, x3, x4): four odd degree-one
    // generators, volume x1·x2·x3·x4 ↦ 1.
    let algebra = Algebra::exterior(&["x1", "x2", "x3", "x4"]).unwrap();
    let x1 = algebra.generator("x1").unwrap();
    let x2 = algebra.generator("x2").unwrap();

    // Odd generators anticommute and square to zero.
    let forward = x1.mul(&x2).unwrap();
    let backward = x2.mul(&x1).unwrap();
    assert_eq!(forward, backward.neg());
    assert!(x1.mul(&x1).unwrap().is_zero());
    println!("x1·x2 = {forward}");
    println!("x2·x1 = {backward}");

    // A symplectic-looking two-form and its square.
    let x3 = algebra.generator("x3").unwrap();
    let x4 = algebra.generator("x4").unwrap();
    let omega = forward.add(&x3.mul(&x4).unwrap()).unwrap();
    let omega_squared = omega.mul(&omega).unwrap();
    println!("ω  = {omega}");
    println!("ω² = {omega_squared}");

    // Integration reads off the coefficient of the volume monomial:
    // ω²/2! integrates to 1.
    let half = omega_squared.scale(&ratio(1, 2));
    assert_eq!(half.integrate_top().unwrap(), int(1));
    println!("∫ ω²/2! = {}", half.integrate_top().unwrap());

    // Rings can mix odd generators with truncated even ones: here y is
    // even of degree two with y³ = 0.
    let mixed = Algebra::new(AlgebraSpec::new(vec![
        GeneratorSpec::odd("t", 1),
        GeneratorSpec::even("y", 2, Some(3)),
    ]))
    .unwrap();
    let y = mixed.generator("y").unwrap();
    assert!(!y.pow(2).is_zero());
    assert!(y.pow(3).is_zero());
    println!("y² = {}, y³ = {}", y.pow(2), y.pow(3));

    // Elements serialize to a canonical JSON form and come back intact.
    let element = omega.scale(&ratio(-5, 3));
    let json = element.to_json_string();
    assert_eq!(algebra.element_from_json_str(&json).unwrap(), element);
    println!("canonical JSON: {json}");
}
