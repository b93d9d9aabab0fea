//! Equivariant Euler classes of weighted normal bundles and their exact
//! inverses.
//!
//! ```sh
//! cargo run --example euler_classes
//! ```

use wallcross::algebra::Algebra;
use wallcross::equivariant::{euler_class, invert_euler, LineSummand};
use wallcross::laurent::LaurentElement;
use wallcross::rational::int;

pub fn main() {
    // Fixed components carry a normal bundle split into weighted line
    // summands.  Over the torus Λ(x1, x2), take two lines: weight 1 with
    // first Chern class 3·x1x2, and weight −2 with Chern class zero.
    let base = Algebra::exterior(&["x1", "x2"]).unwrap();
    let c = base.monomial_term(&[("x1", 1), ("x2", 1)], int(3)).unwrap();
    let first = LineSummand::new(1, c);
    let second = LineSummand::new(-2, base.zero());

    // ε(L₁ ⊕ L₂) = (u + 3·x1x2)·(−2u) — a Laurent polynomial in the
    // degree-two variable u with ring coefficients.
    let eps = euler_class(&base, &[first.clone(), second.clone()]).unwrap();
    println!("ε = {eps}");

    // The Euler class is multiplicative over direct sums.
    let product = euler_class(&base, &[first])
        .unwrap()
        .mul(&euler_class(&base, &[second]).unwrap())
        .unwrap();
    assert_eq!(eps, product);

    // Inversion is exact: nilpotent corrections terminate, and the
    // product with the inverse is literally 1.
    let inverse = invert_euler(&eps).unwrap();
    println!("ε⁻¹ = {inverse}");
    assert_eq!(eps.mul(&inverse).unwrap(), LaurentElement::one(&base));
    println!("ε·ε⁻¹ = {}", eps.mul(&inverse).unwrap());
}
