//! Wall-crossing terms for Seiberg–Witten invariants on four-manifolds
//! with `b₂⁺ = 1`.
//!
//! The input is finite topological data: the Betti number `b₁`, the Euler
//! characteristic and signature, the self-intersection of the Spin_c
//! determinant line, and the triple products `a[i][j] = (γ_i ∧ γ_j ∧ c₁(L))[X]`
//! of one-cycles against the determinant line.  From these the crate
//! computes the jump of the invariant across a wall of reducible solutions,
//! in two independent ways:
//!
//! * a **closed form**: an exact integral of powers of the index-bundle
//!   first Chern class `c₁(ind) = ¼·Ω²·c₁(L)[X]` over the torus of flat
//!   connections, where `Ω = Σ_i x_i·y_i` lives in the doubled exterior
//!   algebra and `y_i·y_j` pairs to `a[i][j]`;
//! * a **localization route**: the wall contribution of the single reducible
//!   fixed torus inside the cobordism between the two chambers, with normal
//!   data `c_j(ν) = c₁(ind)^j / j!` and Euler class `u^r·exp(c₁(ind)/u)`
//!   truncated by nilpotency.
//!
//! Both routes are exact; their agreement is a strong end-to-end check and
//! is enforced by the test suite.  Each result records the expected
//! dimension `d`, the index rank `r` with `2r + b₁ = d + 2`, and the gate
//! (if any) that forces the value to vanish identically.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::equivariant::{
    localize_star, localize_star_star, EquivariantError, FixedComponent, Sign,
};
use crate::rational::{factorial, ratio, Rational};

/// Topological data of a closed oriented four-manifold with a chosen
/// Spin_c structure, as far as wall crossing is concerned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldData {
    b1: usize,
    b2_plus: u32,
    chi: i64,
    tau: i64,
    c1l_squared: i64,
    /// Antisymmetric `b1 × b1` matrix of triple products
    /// `a[i][j] = (γ_i ∧ γ_j ∧ c₁(L))[X]`.
    triple_products: Vec<Vec<Rational>>,
}

/// An integer homology class of degree one, in the basis implicit in the
/// triple-product matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    pub coords: Vec<i64>,
}

impl CurveClass {
    pub fn new(coords: Vec<i64>) -> Self {
        CurveClass { coords }
    }
}

/// Why a wall-crossing value is identically zero without any integral
/// being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateReason {
    /// The expected dimension is negative: the wall contributes nothing.
    NegativeDimension,
    /// More curve insertions than `min(b₁, d)` allows.
    CurveCountExceedsBound,
    /// The number of insertions has the wrong parity relative to `b₁`, so
    /// the torus integrand can never reach top degree.
    CurveParityMismatch,
}

impl GateReason {
    /// Stable machine-readable code.
    pub fn code(self) -> &'static str {
        match self {
            GateReason::NegativeDimension => "negative_dimension",
            GateReason::CurveCountExceedsBound => "curve_count_exceeds_bound",
            GateReason::CurveParityMismatch => "curve_parity_mismatch",
        }
    }
}

/// The sign bookkeeping a wall-crossing value is reported under: the wall
/// is crossed from chamber 0 to chamber 1, and every value carries the
/// caller-chosen overall sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignConvention {
    pub crossing_direction: &'static str,
    pub global_sign: Sign,
}

impl SignConvention {
    pub fn new(global_sign: Sign) -> Self {
        SignConvention {
            crossing_direction: "0->1",
            global_sign,
        }
    }
}

/// The change of the invariant across a wall, with its context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallCrossingResult {
    /// Expected dimension `d = ¼(c₁(L)² − 2χ − 3τ)`.
    pub d: i64,
    /// Index rank `r = (d + 2 − b₁)/2` when that is an integer.
    pub r: Option<i64>,
    /// Number of curve insertions.
    pub k: usize,
    pub value: Rational,
    pub sign_convention: SignConvention,
    /// Set when the value is identically zero for structural reasons.
    pub gate: Option<GateReason>,
    /// Set when `k` and `d` have different parities: under the convention
    /// that an invariant with mismatched insertion parity is defined to be
    /// zero, both chambers vanish and the difference is zero no matter what
    /// the formula value is.  The value is still reported.
    pub invariant_zero_on_both_sides: bool,
}

/// Errors from wall-crossing computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Equivariant(#[from] EquivariantError),
    #[error("triple products must form a {expected}x{expected} matrix")]
    TripleProductShape { expected: usize },
    #[error("triple products are not antisymmetric at ({row},{col})")]
    TripleProductAntisymmetry { row: usize, col: usize },
    #[error("c1L_squared - 2*chi - 3*tau = {numerator} is not divisible by 4")]
    DimensionNotIntegral { numerator: i64 },
    #[error("d + 2 - b1 = {numerator} is odd, index rank undefined")]
    RankParity { numerator: i64 },
    #[error("index rank r = {r} is not positive, wall contribution formula inapplicable")]
    RankNotPositive { r: i64 },
    #[error("curve class has {found} coordinates, expected b1 = {expected}")]
    CurveLength { expected: usize, found: usize },
    #[error("wall crossing requires b1 even, got b1 = {b1}")]
    OddB1 { b1: usize },
    #[error("wall crossing requires b2_plus = 1, got {b2_plus}")]
    B2PlusNotOne { b2_plus: u32 },
    #[error("Pfaffian requires an even-sized square matrix, got {size} rows")]
    PfaffianOddSize { size: usize },
    #[error("Pfaffian matrix is ragged at row {row}")]
    PfaffianRagged { row: usize },
    #[error("Pfaffian matrix is not antisymmetric at ({row},{col})")]
    PfaffianNotAntisymmetric { row: usize, col: usize },
}

impl ManifoldData {
    /// Validates and stores manifold data.  `triple_products` must be a
    /// `b1 × b1` antisymmetric matrix (zero diagonal included).
    pub fn new(
        b1: usize,
        b2_plus: u32,
        chi: i64,
        tau: i64,
        c1l_squared: i64,
        triple_products: Vec<Vec<Rational>>,
    ) -> Result<Self, SwError> {
        if triple_products.len() != b1
            || triple_products.iter().any(|row| row.len() != b1)
        {
            return Err(SwError::TripleProductShape { expected: b1 });
        }
        for i in 0..b1 {
            for j in i..b1 {
                if triple_products[i][j] != -triple_products[j][i].clone() {
                    return Err(SwError::TripleProductAntisymmetry { row: i, col: j });
                }
            }
        }
        Ok(ManifoldData {
            b1,
            b2_plus,
            chi,
            tau,
            c1l_squared,
            triple_products,
        })
    }

    /// Builds the antisymmetric matrix from its strict upper triangle:
    /// entries are `(i, j, value)` with 1-based `i < j`.
    pub fn from_upper_entries(
        b1: usize,
        b2_plus: u32,
        chi: i64,
        tau: i64,
        c1l_squared: i64,
        entries: &[(usize, usize, Rational)],
    ) -> Result<Self, SwError> {
        let mut matrix = vec![vec![Rational::zero(); b1]; b1];
        for (i, j, v) in entries {
            if *i == 0 || *j == 0 || *i >= *j || *j > b1 {
                return Err(SwError::TripleProductAntisymmetry {
                    row: i.wrapping_sub(1),
                    col: j.wrapping_sub(1),
                });
            }
            matrix[i - 1][j - 1] = v.clone();
            matrix[j - 1][i - 1] = -v.clone();
        }
        ManifoldData::new(b1, b2_plus, chi, tau, c1l_squared, matrix)
    }

    pub fn b1(&self) -> usize {
        self.b1
    }

    pub fn b2_plus(&self) -> u32 {
        self.b2_plus
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn tau(&self) -> i64 {
        self.tau
    }

    pub fn c1l_squared(&self) -> i64 {
        self.c1l_squared
    }

    /// The triple product `a[i][j]` (0-based).
    pub fn triple_product(&self, i: usize, j: usize) -> &Rational {
        &self.triple_products[i][j]
    }

    pub fn triple_products(&self) -> &[Vec<Rational>] {
        &self.triple_products
    }
}

/// The cohomology of the `b1`-torus of flat connections: the exterior
/// algebra on odd degree-one generators `x1, …, x{b1}` with the product of
/// all generators as volume.  For `b1 = 0` this is ℚ and integration is the
/// identity on scalars.
pub fn torus_cohomology(b1: usize) -> Algebra {
    let labels: Vec<String> = (1..=b1).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    Algebra::exterior(&refs).expect("valid exterior presentation")
}

/// Expected dimension `d = ¼(c₁(L)² − 2χ − 3τ)` of the irreducible moduli
/// space; an error if the quarter is not an integer.
pub fn expected_dimension(m: &ManifoldData) -> Result<i64, SwError> {
    let numerator = m.c1l_squared - 2 * m.chi - 3 * m.tau;
    if numerator.rem_euclid(4) != 0 {
        return Err(SwError::DimensionNotIntegral { numerator });
    }
    Ok(numerator / 4)
}

/// Complex rank `r` of the index bundle over the reducible torus, from
/// `2r + b₁ = d + 2`.  Errors when the parity fails or `r ≤ 0` — in either
/// case the wall contribution formula does not apply.
pub fn index_rank(m: &ManifoldData) -> Result<i64, SwError> {
    let d = expected_dimension(m)?;
    let numerator = d + 2 - m.b1 as i64;
    if numerator.rem_euclid(2) != 0 {
        return Err(SwError::RankParity { numerator });
    }
    let r = numerator / 2;
    if r <= 0 {
        return Err(SwError::RankNotPositive { r });
    }
    Ok(r)
}

/// `r = (d + 2 − b₁)/2` whenever that is an integer, without the
/// positivity requirement — the value reported alongside results.
fn rank_if_integral(m: &ManifoldData, d: i64) -> Option<i64> {
    let numerator = d + 2 - m.b1 as i64;
    (numerator.rem_euclid(2) == 0).then(|| numerator / 2)
}

/// First Chern class of the index bundle over the torus of flat
/// connections: `c₁(ind) = ¼·Ω²·c₁(L)[X]`, computed in the doubled
/// exterior algebra Λ(x₁,…,x_b, y₁,…,y_b) with `Ω = Σ_i x_i·y_i`.  After
/// squaring, each monomial carries exactly two `y`-factors `y_i·y_j`
/// (already rightmost in canonical order), which pair against the triple
/// products: `μ·y_i·y_j ↦ a[i][j]·μ`.  The result lives in the `x`-only
/// torus ring, homogeneous of degree two.
pub fn index_bundle_c1(m: &ManifoldData) -> Element {
    let torus = torus_cohomology(m.b1);
    let b1 = m.b1;
    if b1 == 0 {
        return torus.zero();
    }
    let doubled = {
        let labels: Vec<String> = (1..=b1)
            .map(|i| format!("x{i}"))
            .chain((1..=b1).map(|i| format!("y{i}")))
            .collect();
        let gens = labels
            .iter()
            .map(|l| crate::algebra::GeneratorSpec::odd(l.clone(), 1))
            .collect();
        Algebra::new(crate::algebra::AlgebraSpec::new(gens)).expect("valid presentation")
    };
    let mut omega = doubled.zero();
    for i in 0..b1 {
        let x = doubled.generator_at(i).expect("x generator");
        let y = doubled.generator_at(b1 + i).expect("y generator");
        omega = omega.add(&x.mul(&y).expect("same ring")).expect("same ring");
    }
    let omega2 = omega.mul(&omega).expect("same ring");

    let quarter = ratio(1, 4);
    let mut out = torus.zero();
    for (mono, coeff) in omega2.terms() {
        let mut xs: Vec<usize> = Vec::new();
        let mut ys: Vec<usize> = Vec::new();
        for &(idx, _) in mono.factors() {
            let idx = idx as usize;
            if idx < b1 {
                xs.push(idx);
            } else {
                ys.push(idx - b1);
            }
        }
        // Every monomial of Ω² has exactly two y-factors; anything else
        // pairs to zero.
        if ys.len() != 2 {
            continue;
        }
        let pair = m.triple_product(ys[0], ys[1]);
        if pair.is_zero() {
            continue;
        }
        let factors: Vec<(&str, u32)> = xs
            .iter()
            .map(|&i| (torus.generators()[i].label.as_str(), 1))
            .collect();
        let term = torus
            .monomial_term(&factors, coeff * pair * &quarter)
            .expect("labels exist");
        out = out.add(&term).expect("same ring");
    }
    out
}

/// The `j`-th Chern class of the index bundle, `c_j(ind) = c₁(ind)^j / j!`
/// — the total Chern class is the truncated exponential of `c₁(ind)`.
pub fn index_bundle_chern(m: &ManifoldData, j: u32) -> Element {
    let c1 = index_bundle_c1(m);
    let inv_factorial = Rational::new(BigInt::one(), factorial(u64::from(j)));
    c1.pow(j).scale(&inv_factorial)
}

/// The degree-one class `μ([A]) = Σ_i coords[i]·x_i` of a curve class on
/// the torus of flat connections.
pub fn mu_class(m: &ManifoldData, curve: &CurveClass) -> Result<Element, SwError> {
    if curve.coords.len() != m.b1 {
        return Err(SwError::CurveLength {
            expected: m.b1,
            found: curve.coords.len(),
        });
    }
    let torus = torus_cohomology(m.b1);
    let mut out = torus.zero();
    for (i, &c) in curve.coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let x = torus.generator_at(i).expect("generator in range");
        out = out.add(&x.scale(&crate::rational::int(c))).expect("same ring");
    }
    Ok(out)
}

/// Pfaffian of an even-sized antisymmetric matrix by recursive expansion
/// along the first row: `Pf(A) = Σ_{j≥2} (−1)^j·A[1][j]·Pf(A₍₁ⱼ₎)` with
/// rows and columns 1 and j removed, and `Pf` of the empty matrix equal
/// to 1.  Exact, and satisfies `Pf(A)² = det(A)`.
pub fn pfaffian(matrix: &[Vec<Rational>]) -> Result<Rational, SwError> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().position(|r| r.len() != n) {
        return Err(SwError::PfaffianRagged { row });
    }
    if n % 2 != 0 {
        return Err(SwError::PfaffianOddSize { size: n });
    }
    for i in 0..n {
        for j in i..n {
            if matrix[i][j] != -matrix[j][i].clone() {
                return Err(SwError::PfaffianNotAntisymmetric { row: i, col: j });
            }
        }
    }
    let active: Vec<usize> = (0..n).collect();
    Ok(pfaffian_recurse(matrix, &active))
}

fn pfaffian_recurse(matrix: &[Vec<Rational>], active: &[usize]) -> Rational {
    let Some((&first, rest)) = active.split_first() else {
        return Rational::one();
    };
    let mut total = Rational::zero();
    for (pos, &j) in rest.iter().enumerate() {
        let entry = &matrix[first][j];
        if entry.is_zero() {
            continue;
        }
        let sub: Vec<usize> = rest.iter().copied().filter(|&c| c != j).collect();
        let term = entry * pfaffian_recurse(matrix, &sub);
        // Column j sits at 1-based position pos + 2 of the active block,
        // so the expansion sign is (−1)^(pos + 2).
        if pos % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Outcome of the shared validation and gating logic.
struct CrossingSetup {
    d: i64,
    k: usize,
    r: Option<i64>,
    gate: Option<GateReason>,
    zero_on_both_sides: bool,
}

fn crossing_setup(m: &ManifoldData, curves: &[CurveClass]) -> Result<CrossingSetup, SwError> {
    if m.b2_plus != 1 {
        return Err(SwError::B2PlusNotOne {
            b2_plus: m.b2_plus,
        });
    }
    if m.b1 % 2 != 0 {
        return Err(SwError::OddB1 { b1: m.b1 });
    }
    for curve in curves {
        if curve.coords.len() != m.b1 {
            return Err(SwError::CurveLength {
                expected: m.b1,
                found: curve.coords.len(),
            });
        }
    }
    let d = expected_dimension(m)?;
    let k = curves.len();
    let gate = if d < 0 {
        Some(GateReason::NegativeDimension)
    } else if k as i64 > (m.b1 as i64).min(d) {
        Some(GateReason::CurveCountExceedsBound)
    } else if k % 2 != m.b1 % 2 {
        Some(GateReason::CurveParityMismatch)
    } else {
        None
    };
    Ok(CrossingSetup {
        d,
        k,
        r: rank_if_integral(m, d),
        gate,
        zero_on_both_sides: (k as i64 - d).rem_euclid(2) != 0,
    })
}

impl CrossingSetup {
    fn result(self, value: Rational, global_sign: Sign) -> WallCrossingResult {
        WallCrossingResult {
            d: self.d,
            r: self.r,
            k: self.k,
            value,
            sign_convention: SignConvention::new(global_sign),
            gate: self.gate,
            invariant_zero_on_both_sides: self.zero_on_both_sides,
        }
    }
}

/// Wall-crossing term with curve insertions, by the closed form: the torus
/// integral of `μ(A₁)⋯μ(A_k) · c₁(ind)^{(b₁−k)/2} / ((b₁−k)/2)!` times the
/// global sign.  Requires `b₂⁺ = 1` and `b₁` even.  The value is zero with
/// a recorded gate when `d < 0`, when `k > min(b₁, d)`, or when `k` and
/// `b₁` have different parities.
pub fn wall_crossing_general(
    m: &ManifoldData,
    curves: &[CurveClass],
    global_sign: Sign,
) -> Result<WallCrossingResult, SwError> {
    let setup = crossing_setup(m, curves)?;
    if setup.gate.is_some() {
        return Ok(setup.result(Rational::zero(), global_sign));
    }
    let half = (m.b1 - setup.k) / 2;
    let torus = torus_cohomology(m.b1);
    let mut integrand = torus.one();
    for curve in curves {
        integrand = integrand.mul(&mu_class(m, curve)?)?;
    }
    let c_power = index_bundle_chern(m, half as u32);
    integrand = integrand.mul(&c_power)?;
    let value = &global_sign.rational() * integrand.integrate_top()?;
    Ok(setup.result(value, global_sign))
}

/// Wall-crossing term without insertions: the torus integral of
/// `c₁(ind)^{b₁/2} / (b₁/2)!` times the global sign.  Equivalent to
/// [`wall_crossing_general`] with an empty curve list.
pub fn wall_crossing_simple(
    m: &ManifoldData,
    global_sign: Sign,
) -> Result<WallCrossingResult, SwError> {
    wall_crossing_general(m, &[], global_sign)
}

/// Wall-crossing term evaluated through fixed-point localization instead
/// of the closed form: the reducible solutions form a single copy of the
/// torus of flat connections, whose normal data is the index bundle with
/// Chern classes `c_j(ν) = c₁(ind)^j / j!` — so its Euler class is
/// `u^r·exp(c₁(ind)/u)` truncated by nilpotency.  Requires the index rank
/// to be defined and positive; gates are as in the closed form.
///
/// Expanding `u^{l+1}·β / (u^r·exp(c₁(ind)/u))` and keeping the top-degree
/// torus term shows the raw `u⁰` coefficient equals `(−1)^{(b₁−k)/2}` times
/// the closed-form integrand (the power variant used for `k = 0`
/// contributes a further `(−1)^{d/2}`, giving `(−1)^{r+1}` in total, since
/// `2r = d + 2 − b₁`).  The component's orientation sign is set to cancel
/// exactly that factor, so this route reports the same value, under the
/// same sign convention, as [`wall_crossing_general`].
pub fn wall_crossing_via_localization(
    m: &ManifoldData,
    curves: &[CurveClass],
    global_sign: Sign,
) -> Result<WallCrossingResult, SwError> {
    let setup = crossing_setup(m, curves)?;
    if setup.gate.is_some() {
        return Ok(setup.result(Rational::zero(), global_sign));
    }
    let r = index_rank(m)?;
    let torus = torus_cohomology(m.b1);
    // Chern classes up to the nilpotency bound b₁/2; c₁(ind)^j vanishes
    // beyond that, and the list legitimately exceeds the rank when
    // r < b₁/2 (the exponential keeps classes at negative u-powers).
    let classes: Vec<Element> = (1..=(m.b1 / 2) as u32)
        .map(|j| index_bundle_chern(m, j))
        .collect();

    let k = setup.k;
    let outcome = if k == 0 {
        let orientation = Sign::neg_one_pow(r + 1);
        let component =
            FixedComponent::with_chern_classes(torus, r as usize, classes, orientation)?;
        let n = u32::try_from(setup.d / 2).expect("gates ensure d >= 0");
        localize_star(&[component], n)?
    } else {
        let orientation = Sign::neg_one_pow((m.b1 as i64 - k as i64) / 2);
        let component =
            FixedComponent::with_chern_classes(torus, r as usize, classes, orientation)?;
        let betas: Vec<Element> = curves
            .iter()
            .map(|c| mu_class(m, c))
            .collect::<Result<_, _>>()?;
        let l = u32::try_from((setup.d - k as i64) / 2).expect("gates ensure k <= d");
        localize_star_star(&[component], &betas, l)?
    };
    debug_assert!(
        outcome.residuals.is_empty(),
        "homogeneous consistent data leaves no residuals"
    );
    let value = &global_sign.rational() * outcome.value;
    Ok(setup.result(value, global_sign))
}
