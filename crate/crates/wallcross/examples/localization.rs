//! Fixed-point localization sums in both evaluation modes.
//!
//! ```sh
//! cargo run --example localization
//! ```

use wallcross::algebra::Algebra;
use wallcross::equivariant::{
    localize_star, localize_star_star, FixedComponent, LineSummand, Sign,
};
use wallcross::rational::int;

pub fn main() {
    // An isolated fixed point whose normal bundle is n+1 trivial lines of
    // weight one contributes (−1)ⁿ in star mode n.
    let point = Algebra::exterior(&[]).unwrap();
    for n in 0u32..=4 {
        let summands: Vec<LineSummand> =
            (0..=n).map(|_| LineSummand::new(1, point.zero())).collect();
        let component = FixedComponent::new(point.clone(), summands, Sign::Plus).unwrap();
        let outcome = localize_star(&[component], n).unwrap();
        let expected = if n % 2 == 0 { int(1) } else { int(-1) };
        assert_eq!(outcome.value, expected);
        println!("star mode n = {n}: value = {}", outcome.value);
    }

    // A torus component: base Λ(x1, x2), one line of weight 1 with first
    // Chern class 5·x1x2.  In star mode n = 1 the sum evaluates to 5.
    let torus = Algebra::exterior(&["x1", "x2"]).unwrap();
    let c1 = torus.monomial_term(&[("x1", 1), ("x2", 1)], int(5)).unwrap();
    let component = FixedComponent::new(
        torus.clone(),
        vec![LineSummand::new(1, c1)],
        Sign::Plus,
    )
    .unwrap();
    let outcome = localize_star(std::slice::from_ref(&component), 1).unwrap();
    assert_eq!(outcome.value, int(5));
    assert!(outcome.residuals.is_empty());
    println!("torus, star mode n = 1: value = {}", outcome.value);

    // The second mode takes degree-one insertions.  With β₁ = x1 and
    // β₂ = x2 at level l = 0 the integrand is already top-degree.
    let betas = vec![
        torus.generator("x1").unwrap(),
        torus.generator("x2").unwrap(),
    ];
    let outcome = localize_star_star(&[component], &betas, 0).unwrap();
    println!("torus, star_star mode l = 0 with β = x1, x2: value = {}", outcome.value);
    assert_eq!(outcome.value, int(1));
}
