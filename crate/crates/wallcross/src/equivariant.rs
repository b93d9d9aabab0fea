//! Circle-equivariant Euler classes and fixed-point localization.
//!
//! The setting: a circle acts on a space with fixed components `P_k`, the
//! action on each normal bundle splitting into complex line summands on
//! which the circle acts with integer weight `m_j`.  The equivariant Euler
//! class of the normal bundle is then the product `Π_j (m_j·u + c₁(L_j))`
//! over the summands, a Laurent polynomial in the degree-two parameter `u`
//! with nilpotent corrections from the base.
//!
//! Because the corrections are nilpotent, an Euler class with all weights
//! nonzero is invertible, and a localization integral — a sum over fixed
//! components of an integral of `α·u / ε(ν_k)` — becomes exact rational
//! arithmetic: expand the inverse as a finite geometric series, multiply
//! out, and integrate each `u`-power coefficient over the component.  The
//! value of interest is the `u⁰` coefficient; anything surviving at other
//! powers is reported as a residual diagnostic instead of being dropped.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::laurent::LaurentElement;
use crate::rational::{int, neg_one_pow, Rational};

/// An orientation (or other) sign, kept symbolic rather than as a bare
/// integer so it cannot silently take a third value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn rational(self) -> Rational {
        match self {
            Sign::Plus => Rational::from_integer(1.into()),
            Sign::Minus => Rational::from_integer((-1).into()),
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_int(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// The sign of `(-1)^n`.
    pub fn neg_one_pow(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Errors from Euler class construction and localization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivariantError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("line summand {position} has weight zero")]
    ZeroWeight { position: usize },
    #[error("Chern class at position {position} is not homogeneous of degree {expected}")]
    WrongChernDegree { position: usize, expected: u32 },
    #[error("a fixed component must have at least one normal summand")]
    EmptyNormalBundle,
    #[error("element has no invertible leading term c·u^r with scalar c")]
    NotInvertible,
    #[error("cannot invert: generator {generator:?} in the nilpotent remainder has no nilpotency order")]
    NonNilpotentRemainder { generator: String },
    #[error("localization formula requires unit weights, found weight {weight}")]
    NonUnitWeight { weight: i64 },
    #[error(
        "dimension mismatch: component has 2·rank + top degree = {found}, formula requires {expected}"
    )]
    DimensionMismatch { expected: i64, found: i64 },
    #[error("insertion at position {position} is not homogeneous of degree one")]
    BetaDegree { position: usize },
}

/// One complex line summand of a normal bundle: the circle acts with
/// weight `weight`, and the line carries first Chern class `c1` from the
/// base (homogeneous of degree two, possibly zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSummand {
    pub weight: i64,
    pub c1: Element,
}

impl LineSummand {
    pub fn new(weight: i64, c1: Element) -> Self {
        LineSummand { weight, c1 }
    }
}

/// How the normal bundle of a fixed component is presented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalBundle {
    /// An explicit splitting into weighted line summands.
    Summands(Vec<LineSummand>),
    /// A weight-one bundle of the given rank presented by Chern-class data:
    /// entry `j` holds `c_{j+1}`, homogeneous of degree `2(j+1)`.  The
    /// Euler class is `Σ_j c_j(ν)·u^{rank−j}`.  The list may be longer than
    /// the rank: an index (virtual) bundle with total Chern class
    /// `exp(c₁)` keeps nilpotency-truncated classes beyond its rank, which
    /// enter the Euler class at negative powers of `u`.
    WeightOneChern { rank: usize, classes: Vec<Element> },
}

/// A fixed component of the circle action: its cohomology ring (with
/// volume monomial for integration), the normal bundle data, and the sign
/// with which the component's integral enters localization sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedComponent {
    pub base: Algebra,
    pub normal: NormalBundle,
    pub orientation_sign: Sign,
}

impl FixedComponent {
    /// A component whose normal bundle splits into explicit line summands.
    pub fn new(
        base: Algebra,
        summands: Vec<LineSummand>,
        orientation_sign: Sign,
    ) -> Result<Self, EquivariantError> {
        if summands.is_empty() {
            return Err(EquivariantError::EmptyNormalBundle);
        }
        validate_summands(&base, &summands)?;
        Ok(FixedComponent {
            base,
            normal: NormalBundle::Summands(summands),
            orientation_sign,
        })
    }

    /// A component with a weight-one normal bundle of the given rank and
    /// Chern classes `c_1, c_2, …` (a presentation that need not split
    /// into summands, and whose class list may exceed the rank).
    pub fn with_chern_classes(
        base: Algebra,
        rank: usize,
        classes: Vec<Element>,
        orientation_sign: Sign,
    ) -> Result<Self, EquivariantError> {
        if rank == 0 {
            return Err(EquivariantError::EmptyNormalBundle);
        }
        for (j, c) in classes.iter().enumerate() {
            let expected = 2 * (j as u32 + 1);
            if c.algebra() != &base || !c.is_homogeneous_of(expected) {
                return Err(EquivariantError::WrongChernDegree {
                    position: j,
                    expected,
                });
            }
        }
        Ok(FixedComponent {
            base,
            normal: NormalBundle::WeightOneChern { rank, classes },
            orientation_sign,
        })
    }

    /// Complex rank of the normal bundle.
    pub fn rank(&self) -> usize {
        match &self.normal {
            NormalBundle::Summands(s) => s.len(),
            NormalBundle::WeightOneChern { rank, .. } => *rank,
        }
    }

    /// True when the circle acts with weight one on every summand.
    pub fn has_unit_weights(&self) -> bool {
        match &self.normal {
            NormalBundle::Summands(s) => s.iter().all(|l| l.weight == 1),
            NormalBundle::WeightOneChern { .. } => true,
        }
    }

    fn first_non_unit_weight(&self) -> Option<i64> {
        match &self.normal {
            NormalBundle::Summands(s) => s.iter().map(|l| l.weight).find(|&w| w != 1),
            NormalBundle::WeightOneChern { .. } => None,
        }
    }

    /// The equivariant Euler class of the normal bundle.
    pub fn euler_class(&self) -> Result<LaurentElement, EquivariantError> {
        match &self.normal {
            NormalBundle::Summands(s) => euler_class(&self.base, s),
            NormalBundle::WeightOneChern { rank, classes } => {
                let r = *rank as i64;
                let mut eps = LaurentElement::u_power(&self.base, r);
                for (j, c) in classes.iter().enumerate() {
                    eps = eps.add(&LaurentElement::term(c.clone(), r - (j as i64 + 1)))?;
                }
                Ok(eps)
            }
        }
    }
}

fn validate_summands(
    base: &Algebra,
    summands: &[LineSummand],
) -> Result<(), EquivariantError> {
    for (j, line) in summands.iter().enumerate() {
        if line.weight == 0 {
            return Err(EquivariantError::ZeroWeight { position: j });
        }
        if line.c1.algebra() != base || !line.c1.is_homogeneous_of(2) {
            return Err(EquivariantError::WrongChernDegree {
                position: j,
                expected: 2,
            });
        }
    }
    Ok(())
}

/// The equivariant Euler class `Π_j (m_j·u + c₁(L_j))` of a sum of line
/// summands over `base`.  The empty sum gives 1, so the class is
/// multiplicative under concatenation of summand lists.
pub fn euler_class(
    base: &Algebra,
    summands: &[LineSummand],
) -> Result<LaurentElement, EquivariantError> {
    validate_summands(base, summands)?;
    let mut eps = LaurentElement::one(base);
    for line in summands {
        let factor = LaurentElement::term(base.scalar(int(line.weight)), 1)
            .add(&LaurentElement::from_element(line.c1.clone()))?;
        eps = eps.mul(&factor)?;
    }
    Ok(eps)
}

/// Inverts a Laurent element of the form `c·u^r·(1 + N)` with `c` a nonzero
/// scalar and `N` nilpotent (every coefficient of `N` has positive degree
/// and mentions only nilpotent generators).  The inverse is the finite
/// geometric series `c⁻¹·u⁻ʳ·Σ_i (−N)^i`, and `mul(eps, invert_euler(eps))`
/// is exactly 1.
///
/// The scalar leading term is located structurally: the degree-zero parts
/// of the coefficients must form a single term `c·u^r`.  Anything else —
/// the zero element, several scalar powers like `u + u²`, or no scalar term
/// at all — is rejected as not invertible.
pub fn invert_euler(eps: &LaurentElement) -> Result<LaurentElement, EquivariantError> {
    let alg = eps.algebra().clone();
    let mut scalar_terms = Vec::new();
    for (p, e) in eps.terms() {
        let s = e.scalar_coefficient();
        if !s.is_zero() {
            scalar_terms.push((p, s));
        }
    }
    let (r, c) = match scalar_terms.as_slice() {
        [(p, c)] => (*p, c.clone()),
        _ => return Err(EquivariantError::NotInvertible),
    };

    // N = c⁻¹·u⁻ʳ·eps − 1 has no scalar part; check its generators all
    // truncate, which bounds the geometric series below.
    let normalized = eps.scale(&c.recip()).shift(-r);
    let n = normalized.sub(&LaurentElement::one(&alg))?;
    for (_, e) in n.terms() {
        for (m, _) in e.terms() {
            for &(idx, _) in m.factors() {
                let g = &alg.generators()[idx as usize];
                if g.nilpotency.is_none() {
                    return Err(EquivariantError::NonNilpotentRemainder {
                        generator: g.label.clone(),
                    });
                }
            }
        }
    }

    // Σ_i (−N)^i terminates: every coefficient of N^i has degree ≥ i, and
    // the nilpotent generators bound the total degree of the ring.
    let minus_n = n.neg();
    let mut series = LaurentElement::one(&alg);
    let mut power = LaurentElement::one(&alg);
    loop {
        power = power.mul(&minus_n)?;
        if power.is_zero() {
            break;
        }
        series = series.add(&power)?;
    }
    Ok(series.scale(&c.recip()).shift(-r))
}

/// The contribution of one fixed component to a localization sum: the
/// integral over the component of `α·u / ε(ν)`, recorded power by power.
/// Entry `p` of the result is `orientation_sign · ∫ (coefficient of u^p)`,
/// for each `u`-power appearing in the expansion (including those whose
/// integral happens to vanish).  The zero class gives an empty map.
pub fn fixed_point_contribution(
    component: &FixedComponent,
    alpha: &LaurentElement,
) -> Result<BTreeMap<i64, Rational>, EquivariantError> {
    if alpha.algebra() != &component.base {
        return Err(AlgebraError::AlgebraMismatch.into());
    }
    let eps_inv = invert_euler(&component.euler_class()?)?;
    let integrand = alpha.shift(1).mul(&eps_inv)?;
    let sign = component.orientation_sign.rational();
    let mut out = BTreeMap::new();
    for (p, e) in integrand.terms() {
        out.insert(p, &sign * e.integrate_top()?);
    }
    Ok(out)
}

/// The outcome of a localization evaluation: the `u⁰` coefficient, which
/// is the value of the formula, plus any nonzero coefficients surviving at
/// other powers.  For homogeneous, dimensionally consistent input the
/// residuals are necessarily empty; they are surfaced rather than dropped
/// so that inconsistent data is visible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationValue {
    pub value: Rational,
    pub residuals: BTreeMap<i64, Rational>,
}

fn split_value(mut total: BTreeMap<i64, Rational>) -> LocalizationValue {
    let value = total.remove(&0).unwrap_or_else(Rational::zero);
    total.retain(|_, v| !v.is_zero());
    LocalizationValue {
        value,
        residuals: total,
    }
}

fn check_unit_weights(components: &[FixedComponent]) -> Result<(), EquivariantError> {
    for c in components {
        if let Some(weight) = c.first_non_unit_weight() {
            return Err(EquivariantError::NonUnitWeight { weight });
        }
    }
    Ok(())
}

fn check_dimensions(
    components: &[FixedComponent],
    expected: i64,
) -> Result<(), EquivariantError> {
    for c in components {
        let top = c.base.top_degree().ok_or(AlgebraError::NoVolume)?;
        let found = 2 * c.rank() as i64 + i64::from(top);
        if found != expected {
            return Err(EquivariantError::DimensionMismatch { expected, found });
        }
    }
    Ok(())
}

/// Localization of the `n`-th power of the boundary class for weight-one
/// actions: `(−1)^n · Σ_k ∫_{P_k} u^{n+1} / ε(ν_k)`, extracted at `u⁰`.
///
/// Every summand must have weight one, and every component must satisfy
/// `2·rank(ν_k) + top degree of P_k = 2(n+1)` — the two sides of the
/// formula live on a space of that dimension.  The empty component list
/// gives zero.
pub fn localize_star(
    components: &[FixedComponent],
    n: u32,
) -> Result<LocalizationValue, EquivariantError> {
    check_unit_weights(components)?;
    check_dimensions(components, 2 * (i64::from(n) + 1))?;
    let sign = neg_one_pow(i64::from(n));
    let mut total: BTreeMap<i64, Rational> = BTreeMap::new();
    for component in components {
        let alpha = LaurentElement::u_power(&component.base, i64::from(n));
        for (p, v) in fixed_point_contribution(component, &alpha)? {
            *total.entry(p).or_insert_with(Rational::zero) += &sign * v;
        }
    }
    Ok(split_value(total))
}

/// Localization with degree-one insertions for weight-one actions:
/// `Σ_k ∫_{P_k} u^{l+1} · β₁⋯β_j / ε(ν_k)`, extracted at `u⁰`.  No
/// alternating sign is applied here; with an empty insertion list this
/// differs from [`localize_star`] exactly by `(−1)^l`.
///
/// Each insertion must be homogeneous of degree one in every component's
/// ring, and each component must satisfy
/// `2·rank(ν_k) + top degree of P_k = 2(l+1) + #insertions`.
pub fn localize_star_star(
    components: &[FixedComponent],
    betas: &[Element],
    l: u32,
) -> Result<LocalizationValue, EquivariantError> {
    check_unit_weights(components)?;
    for (position, beta) in betas.iter().enumerate() {
        if !beta.is_homogeneous_of(1) {
            return Err(EquivariantError::BetaDegree { position });
        }
    }
    let expected = 2 * (i64::from(l) + 1) + betas.len() as i64;
    check_dimensions(components, expected)?;
    let mut total: BTreeMap<i64, Rational> = BTreeMap::new();
    for component in components {
        let mut insertion = component.base.one();
        for beta in betas {
            insertion = insertion.mul(beta)?;
        }
        let alpha = LaurentElement::term(insertion, i64::from(l));
        for (p, v) in fixed_point_contribution(component, &alpha)? {
            *total.entry(p).or_insert_with(Rational::zero) += v;
        }
    }
    Ok(split_value(total))
}
