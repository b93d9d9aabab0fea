//! Wall-crossing values from topological data.
//!
//! ```sh
//! cargo run --example wall_crossing
//! ```

use wallcross::equivariant::Sign;
use wallcross::rational::int;
use wallcross::seiberg_witten::{
    expected_dimension, index_rank, wall_crossing_general, wall_crossing_simple,
    CurveClass, GateReason, ManifoldData,
};

pub fn main() {
    // Topological data of a four-manifold with b₁ = 2, b₂⁺ = 1:
    // χ = τ = 0, c₁(L)² = 8, and triple product ⟨γ₁γ₂, c₁(L)⟩ = 2.
    let m = ManifoldData::from_upper_entries(2, 1, 0, 0, 8, &[(1, 2, int(2))]).unwrap();

    // Expected dimension d = ¼(c₁(L)² − 2χ − 3τ) and index rank
    // r = (d + 2 − b₁)/2.
    let d = expected_dimension(&m).unwrap();
    let r = index_rank(&m).unwrap();
    println!("d = {d}, r = {r}");
    assert_eq!((d, r), (2, 1));

    // The crossing term with no curve insertions.
    let simple = wall_crossing_simple(&m, Sign::Plus).unwrap();
    println!("no insertions: value = {}", simple.value);
    assert_eq!(simple.value, int(-1));

    // With two curve insertions the value is multilinear and
    // antisymmetric in the curves.
    let e1 = CurveClass::new(vec![1, 0]);
    let e2 = CurveClass::new(vec![0, 1]);
    let pair = wall_crossing_general(&m, &[e1.clone(), e2.clone()], Sign::Plus).unwrap();
    let swapped = wall_crossing_general(&m, &[e2, e1.clone()], Sign::Plus).unwrap();
    println!("⟨e1, e2⟩ insertion value = {}", pair.value);
    assert_eq!(pair.value, int(1));
    assert_eq!(swapped.value, int(-1));

    // Structurally zero situations are gated, not errored: one insertion
    // has the wrong parity relative to b₁.
    let gated = wall_crossing_general(&m, &[e1], Sign::Plus).unwrap();
    assert_eq!(gated.value, int(0));
    assert_eq!(gated.gate, Some(GateReason::CurveParityMismatch));
    println!(
        "one insertion: value = {} (gate: {})",
        gated.value,
        gated.gate.unwrap().code()
    );

    // The global sign convention flips every value.
    let flipped = wall_crossing_simple(&m, Sign::Minus).unwrap();
    assert_eq!(flipped.value, int(1));
    println!("opposite convention: value = {}", flipped.value);
}
