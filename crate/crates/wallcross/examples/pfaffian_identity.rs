//! The Pfaffian, the exterior-algebra exponential, and `Pf² = det`.
//!
//! ```sh
//! cargo run --example pfaffian_identity
//! ```

use wallcross::algebra::Algebra;
use wallcross::rational::{factorial, int, Rational};
use wallcross::seiberg_witten::pfaffian;

pub fn main() {
    // An antisymmetric 4×4 matrix with a = 1..6 in the upper triangle.
    let entries = [
        [0i64, 1, 2, 3],
        [-1, 0, 4, 5],
        [-2, -4, 0, 6],
        [-3, -5, -6, 0],
    ];
    let a: Vec<Vec<Rational>> = entries
        .iter()
        .map(|row| row.iter().map(|&v| int(v)).collect())
        .collect();

    // Pf(A) for this classic example is af − be + cd = 1·6 − 2·5 + 3·4.
    let pf = pfaffian(&a).unwrap();
    println!("Pf(A) = {pf}");
    assert_eq!(pf, int(8));

    // The same number as a top-degree integral: with ω = Σ a_ij·xᵢxⱼ in
    // Λ(x1..x4), the integral of ω²/2! is the Pfaffian.
    let algebra = Algebra::exterior(&["x1", "x2", "x3", "x4"]).unwrap();
    let mut omega = algebra.zero();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let xi = format!("x{}", i + 1);
            let xj = format!("x{}", j + 1);
            let term = algebra
                .monomial_term(&[(&xi, 1), (&xj, 1)], a[i][j].clone())
                .unwrap();
            omega = omega.add(&term).unwrap();
        }
    }
    let integral = omega
        .pow(2)
        .scale(&Rational::from_integer(factorial(2)).recip())
        .integrate_top()
        .unwrap();
    println!("∫ ω²/2! = {integral}");
    assert_eq!(integral, pf);

    // And Pf(A)² is the determinant: 8² = 64.
    println!("Pf(A)² = {}", &pf * &pf);
    assert_eq!(&pf * &pf, int(64));
}
