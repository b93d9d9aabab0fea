//! Exact equivariant localization and Seiberg–Witten wall-crossing
//! computations over finitely generated graded-commutative rings.
//!
//! Everything is computed with arbitrary-precision rational coefficients —
//! no floating point anywhere — so results are exact and reproducible.
//!
//! # Layers
//!
//! * [`algebra`] — finitely generated graded-commutative rings over ℚ:
//!   odd generators anticommute, even ones may be truncated at a
//!   nilpotency order, and a distinguished volume monomial gives an
//!   integration functional on the top degree.
//! * [`laurent`] — Laurent polynomials in a degree-two variable `u` with
//!   coefficients in such a ring; the natural home of equivariant Euler
//!   classes and their inverses.
//! * [`equivariant`] — fixed-point data (weighted line summands or a
//!   Chern-class presentation), equivariant Euler classes, exact
//!   inversion, and the two localization sums [`equivariant::localize_star`]
//!   and [`equivariant::localize_star_star`].
//! * [`seiberg_witten`] — wall-crossing values from topological data of a
//!   four-manifold with `b₂⁺ = 1`: expected dimension, index rank, the
//!   Chern classes of the index bundle over the torus `H¹/H¹(ℤ)`, a
//!   closed-form evaluation, and an independent route through
//!   localization that must agree with it.
//! * [`cli`] — JSON file formats, validation, and the reports behind the
//!   `wallcross` command-line interface.
//!
//! # Quick start
//!
//! ```
//! use wallcross::seiberg_witten::{wall_crossing_simple, ManifoldData};
//! use wallcross::equivariant::Sign;
//! use wallcross::rational::int;
//!
//! // A manifold with b₁ = 2, χ = τ = 0, c₁(L)² = 8 and triple product
//! // a₁₂ = 2: the wall-crossing term without curve insertions is −1.
//! let m = ManifoldData::from_upper_entries(2, 1, 0, 0, 8, &[(1, 2, int(2))]).unwrap();
//! let result = wall_crossing_simple(&m, Sign::Plus).unwrap();
//! assert_eq!(result.value, int(-1));
//! assert_eq!(result.d, 2);
//! ```

pub mod algebra;
pub mod cli;
pub mod equivariant;
pub mod laurent;
pub mod rational;
pub mod seiberg_witten;

pub use algebra::{Algebra, AlgebraError, AlgebraSpec, Element, GeneratorSpec, Parity};
pub use equivariant::{
    euler_class, invert_euler, localize_star, localize_star_star, EquivariantError,
    FixedComponent, LineSummand, LocalizationValue, NormalBundle, Sign,
};
pub use laurent::LaurentElement;
pub use rational::Rational;
pub use seiberg_witten::{
    expected_dimension, index_rank, wall_crossing_general, wall_crossing_simple,
    wall_crossing_via_localization, CurveClass, ManifoldData, SwError, WallCrossingResult,
};
