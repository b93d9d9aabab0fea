//! Finitely generated graded-commutative rings over ℚ.
//!
//! A ring here is presented by an ordered list of generators, each carrying a
//! positive integer degree, a parity (which must match the degree mod 2), and
//! a nilpotency order.  Odd generators anticommute and square to zero; even
//! generators commute with everything and are truncated at their nilpotency
//! order.  Elements are finite ℚ-linear combinations of canonical monomials,
//! where "canonical" means the factors appear in generator declaration order.
//!
//! Reordering a product into canonical form follows the Koszul sign rule:
//! each transposition of two odd factors contributes a factor of −1.  All
//! coefficients are exact rationals, so algebraic identities hold on the nose
//! rather than up to rounding.
//!
//! The motivating instances are exterior algebras Λ(x₁,…,x_b) on odd
//! degree-one generators — the cohomology of a b-torus — optionally extended
//! by truncated even generators, together with the integration map that reads
//! off the coefficient of a chosen volume monomial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{format_rational, parse_rational, Rational};

/// Parity of a generator: odd generators anticommute, even ones are central.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// The parity forced by a degree.
    pub fn of_degree(degree: u32) -> Parity {
        if degree % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Description of a single generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub label: String,
    pub degree: u32,
    pub parity: Parity,
    /// Smallest `k` with `g^k = 0`; `None` means no power vanishes.
    /// Odd generators always have nilpotency order two.
    pub nilpotency: Option<u32>,
}

impl GeneratorSpec {
    /// An odd generator of the given degree (nilpotency order two).
    pub fn odd(label: impl Into<String>, degree: u32) -> Self {
        GeneratorSpec {
            label: label.into(),
            degree,
            parity: Parity::Odd,
            nilpotency: Some(2),
        }
    }

    /// An even generator of the given degree and nilpotency order
    /// (`None` for a polynomial generator that is never truncated).
    pub fn even(label: impl Into<String>, degree: u32, nilpotency: Option<u32>) -> Self {
        GeneratorSpec {
            label: label.into(),
            degree,
            parity: Parity::Even,
            nilpotency,
        }
    }
}

/// A volume monomial together with the value the integration map assigns
/// to it.  `integrate_top` of an element is `normalization` times the
/// coefficient of `monomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeSpec {
    /// Factors as (label, exponent) pairs, order-insensitive.
    pub monomial: Vec<(String, u32)>,
    pub normalization: Rational,
}

/// Plain-data description of a ring, the input to [`Algebra::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub generators: Vec<GeneratorSpec>,
    pub volume: Option<VolumeSpec>,
}

impl AlgebraSpec {
    pub fn new(generators: Vec<GeneratorSpec>) -> Self {
        AlgebraSpec {
            generators,
            volume: None,
        }
    }

    /// Attaches a volume monomial with the given normalization.
    pub fn with_volume(mut self, monomial: &[(&str, u32)], normalization: Rational) -> Self {
        self.volume = Some(VolumeSpec {
            monomial: monomial
                .iter()
                .map(|(l, e)| ((*l).to_owned(), *e))
                .collect(),
            normalization,
        });
        self
    }
}

/// Errors arising from ring construction or element manipulation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator label must be nonempty")]
    EmptyLabel,
    #[error("duplicate generator label {0:?}")]
    DuplicateLabel(String),
    #[error("generator {0:?} must have positive degree")]
    ZeroDegree(String),
    #[error("generator {0:?}: parity does not match degree mod 2")]
    ParityMismatch(String),
    #[error("odd generator {0:?} must have nilpotency order two")]
    OddNilpotency(String),
    #[error("generator {0:?}: nilpotency order must be at least two")]
    NilpotencyTooSmall(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("volume monomial is zero in this ring")]
    ZeroVolume,
    #[error("operands belong to different rings")]
    AlgebraMismatch,
    #[error("ring has no volume monomial, cannot integrate")]
    NoVolume,
    #[error("bad coefficient: {0}")]
    BadCoefficient(#[from] crate::rational::ParseRationalError),
    #[error("malformed element encoding: {0}")]
    BadEncoding(String),
}

#[derive(Debug)]
struct AlgebraInner {
    generators: Vec<GeneratorSpec>,
    labels: BTreeMap<String, u32>,
    volume: Option<(Monomial, Rational)>,
}

impl PartialEq for AlgebraInner {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.volume == other.volume
    }
}

/// A graded-commutative ring, shared by all of its elements.
///
/// `Algebra` is a cheap-to-clone handle; two handles are compatible when
/// they describe structurally identical rings, so elements of independently
/// constructed but equal presentations interoperate.
#[derive(Debug, Clone)]
pub struct Algebra {
    inner: Arc<AlgebraInner>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Algebra {}

/// A canonical monomial: factors sorted by generator declaration order,
/// exponents within the bounds imposed by parity and nilpotency.
///
/// The empty monomial is the ring unit.  Ordering is lexicographic on the
/// factor list and fixes the canonical order of serialized elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    /// The unit monomial.
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    /// Factors as (generator index, exponent) pairs in declaration order.
    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    fn from_sorted(factors: Vec<(u32, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e > 0));
        Monomial { factors }
    }
}

impl Algebra {
    /// Validates a presentation and builds the ring.
    pub fn new(spec: AlgebraSpec) -> Result<Algebra, AlgebraError> {
        let mut labels = BTreeMap::new();
        let mut generators = Vec::with_capacity(spec.generators.len());
        for (idx, g) in spec.generators.into_iter().enumerate() {
            if g.label.is_empty() {
                return Err(AlgebraError::EmptyLabel);
            }
            if g.degree == 0 {
                return Err(AlgebraError::ZeroDegree(g.label));
            }
            if g.parity != Parity::of_degree(g.degree) {
                return Err(AlgebraError::ParityMismatch(g.label));
            }
            let nilpotency = match (g.parity, g.nilpotency) {
                // Odd generators square to zero whether or not the caller
                // says so explicitly; any other claimed order is an error.
                (Parity::Odd, None) | (Parity::Odd, Some(2)) => Some(2),
                (Parity::Odd, Some(_)) => return Err(AlgebraError::OddNilpotency(g.label)),
                (Parity::Even, Some(k)) if k < 2 => {
                    return Err(AlgebraError::NilpotencyTooSmall(g.label))
                }
                (Parity::Even, n) => n,
            };
            if labels.insert(g.label.clone(), idx as u32).is_some() {
                return Err(AlgebraError::DuplicateLabel(g.label));
            }
            generators.push(GeneratorSpec { nilpotency, ..g });
        }

        let mut algebra = Algebra {
            inner: Arc::new(AlgebraInner {
                generators,
                labels,
                volume: None,
            }),
        };
        if let Some(v) = spec.volume {
            let factors: Vec<(&str, u32)> =
                v.monomial.iter().map(|(l, e)| (l.as_str(), *e)).collect();
            let monomial = algebra
                .monomial(&factors)?
                .ok_or(AlgebraError::ZeroVolume)?;
            // Rebuild the inner with volume attached; the Arc has not been
            // shared yet, so this is the only handle.
            let inner = Arc::get_mut(&mut algebra.inner).expect("unshared");
            inner.volume = Some((monomial, v.normalization));
        }
        Ok(algebra)
    }

    /// The exterior algebra Λ(labels…) on odd degree-one generators, with
    /// the product of all generators as volume monomial (normalization 1).
    /// For an empty label list this is ℚ with the unit as volume.
    pub fn exterior(labels: &[&str]) -> Result<Algebra, AlgebraError> {
        let gens = labels
            .iter()
            .map(|l| GeneratorSpec::odd(*l, 1))
            .collect::<Vec<_>>();
        let volume: Vec<(&str, u32)> = labels.iter().map(|l| (*l, 1)).collect();
        Algebra::new(AlgebraSpec::new(gens).with_volume(&volume, Rational::one()))
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.inner.generators
    }

    /// Index of a generator by label.
    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.inner.labels.get(label).copied()
    }

    /// The volume monomial and normalization, if the ring has one.
    pub fn volume(&self) -> Option<(&Monomial, &Rational)> {
        self.inner.volume.as_ref().map(|(m, n)| (m, n))
    }

    /// Total degree of the volume monomial, if any.
    pub fn top_degree(&self) -> Option<u32> {
        self.inner
            .volume
            .as_ref()
            .map(|(m, _)| self.monomial_degree(m))
    }

    /// Number of canonical monomials, or `None` if some generator is not
    /// nilpotent (making the monomial basis infinite).
    pub fn monomial_count(&self) -> Option<u128> {
        self.inner
            .generators
            .iter()
            .map(|g| g.nilpotency.map(u128::from))
            .product()
    }

    /// Total degree of a canonical monomial.
    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.factors
            .iter()
            .map(|&(i, e)| self.inner.generators[i as usize].degree * e)
            .sum()
    }

    /// Builds the canonical monomial with the given factors, treated as an
    /// unordered multiset (no Koszul sign is applied; the factors name a
    /// basis monomial rather than a product).  Returns `Ok(None)` when the
    /// monomial is zero in the ring — a repeated odd generator or an even
    /// exponent at or above the nilpotency order.  Zero exponents are
    /// dropped.
    pub fn monomial(&self, factors: &[(&str, u32)]) -> Result<Option<Monomial>, AlgebraError> {
        let mut merged: BTreeMap<u32, u32> = BTreeMap::new();
        for (label, exp) in factors {
            if *exp == 0 {
                continue;
            }
            let idx = self
                .index_of(label)
                .ok_or_else(|| AlgebraError::UnknownGenerator((*label).to_owned()))?;
            *merged.entry(idx).or_insert(0) += exp;
        }
        let mut out = Vec::with_capacity(merged.len());
        for (idx, exp) in merged {
            let g = &self.inner.generators[idx as usize];
            if let Some(k) = g.nilpotency {
                if exp >= k {
                    return Ok(None);
                }
            }
            out.push((idx, exp));
        }
        Ok(Some(Monomial::from_sorted(out)))
    }

    /// The zero element.
    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The ring unit.
    pub fn one(&self) -> Element {
        self.scalar(Rational::one())
    }

    /// A scalar multiple of the unit.
    pub fn scalar(&self, value: Rational) -> Element {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(), value);
        }
        Element {
            algebra: self.clone(),
            terms,
        }
    }

    /// The generator with the given label, as an element.
    pub fn generator(&self, label: &str) -> Result<Element, AlgebraError> {
        let idx = self
            .index_of(label)
            .ok_or_else(|| AlgebraError::UnknownGenerator(label.to_owned()))?;
        Ok(self.generator_at(idx as usize).expect("index in range"))
    }

    /// The generator at a declaration index, as an element.
    pub fn generator_at(&self, index: usize) -> Option<Element> {
        if index >= self.inner.generators.len() {
            return None;
        }
        let m = Monomial::from_sorted(vec![(index as u32, 1)]);
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        Some(Element {
            algebra: self.clone(),
            terms,
        })
    }

    /// An element with a single canonical-monomial term (zero if the
    /// monomial dies by nilpotency).
    pub fn monomial_term(
        &self,
        factors: &[(&str, u32)],
        coefficient: Rational,
    ) -> Result<Element, AlgebraError> {
        let mut out = self.zero();
        if coefficient.is_zero() {
            return Ok(out);
        }
        if let Some(m) = self.monomial(factors)? {
            out.terms.insert(m, coefficient);
        }
        Ok(out)
    }

    /// Multiplies two canonical monomials.  Returns the canonical product
    /// and whether the Koszul reordering contributes a sign flip, or `None`
    /// when the product vanishes (repeated odd factor or even-exponent
    /// truncation).
    fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let gens = &self.inner.generators;
        let is_odd = |i: u32| gens[i as usize].parity == Parity::Odd;

        // Koszul sign: writing the factors of `a` followed by the factors
        // of `b` and sorting into declaration order, each transposition of
        // two odd factors flips the sign.  Odd factors have exponent one,
        // so the flip count is the number of odd pairs (x in a, y in b)
        // with index(x) > index(y).
        let a_odd: Vec<u32> = a
            .factors
            .iter()
            .filter(|&&(i, _)| is_odd(i))
            .map(|&(i, _)| i)
            .collect();
        let mut transpositions = 0usize;
        for &(j, _) in b.factors.iter().filter(|&&(j, _)| is_odd(j)) {
            transpositions += a_odd.iter().filter(|&&i| i > j).count();
        }

        // Merge the sorted factor lists.
        let mut out = Vec::with_capacity(a.factors.len() + b.factors.len());
        let (mut ia, mut ib) = (0, 0);
        while ia < a.factors.len() || ib < b.factors.len() {
            let next = match (a.factors.get(ia), b.factors.get(ib)) {
                (Some(&(i, e)), Some(&(j, _))) if i < j => {
                    ia += 1;
                    (i, e)
                }
                (Some(&(i, _)), Some(&(j, f))) if j < i => {
                    ib += 1;
                    (j, f)
                }
                (Some(&(i, e)), Some(&(_, f))) => {
                    // Same generator on both sides.
                    ia += 1;
                    ib += 1;
                    if is_odd(i) {
                        return None;
                    }
                    (i, e + f)
                }
                (Some(&(i, e)), None) => {
                    ia += 1;
                    (i, e)
                }
                (None, Some(&(j, f))) => {
                    ib += 1;
                    (j, f)
                }
                (None, None) => unreachable!(),
            };
            if let Some(k) = gens[next.0 as usize].nilpotency {
                if next.1 >= k {
                    return None;
                }
            }
            out.push(next);
        }
        Some((Monomial::from_sorted(out), transpositions % 2 == 1))
    }

    /// Integration against the volume monomial: `normalization` times the
    /// coefficient of the volume monomial.  All other monomials integrate
    /// to zero.
    pub fn integrate_top(&self, a: &Element) -> Result<Rational, AlgebraError> {
        if !self.compatible(&a.algebra) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let (vol, norm) = self.inner.volume.as_ref().ok_or(AlgebraError::NoVolume)?;
        Ok(norm * a.coefficient(vol))
    }

    fn compatible(&self, other: &Algebra) -> bool {
        self == other
    }
}

/// An element of an [`Algebra`]: a finite ℚ-linear combination of canonical
/// monomials.  The representation is canonical — zero coefficients never
/// appear — so structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    algebra: Algebra,
    terms: BTreeMap<Monomial, Rational>,
}

/// Serialized form of an element: a list of `(factors, coefficient)` terms,
/// each factor a `(label, exponent)` pair, the coefficient a rational
/// literal like `"5"` or `"-1/2"`.
pub type ElementEncoding = Vec<(Vec<(String, u32)>, String)>;

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a canonical monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the unit monomial.
    pub fn scalar_coefficient(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    fn insert(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Element) -> Result<Element, AlgebraError> {
        if !self.algebra.compatible(&rhs.algebra) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Element) -> Result<Element, AlgebraError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Rational::one())
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return self.algebra.zero();
        }
        Element {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Graded product with Koszul signs.
    pub fn mul(&self, rhs: &Element) -> Result<Element, AlgebraError> {
        if !self.algebra.compatible(&rhs.algebra) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let mut out = self.algebra.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if let Some((m, flip)) = self.algebra.mul_monomials(ma, mb) {
                    let c = ca * cb;
                    out.insert(m, if flip { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Non-negative integer power; `pow(0)` is the unit.
    pub fn pow(&self, n: u32) -> Element {
        let mut out = self.algebra.one();
        for _ in 0..n {
            out = out.mul(self).expect("same algebra");
        }
        out
    }

    /// The part of the element in a single total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Element {
        Element {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.algebra.monomial_degree(m) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when every term has the given total degree (vacuously true for
    /// zero).
    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms
            .keys()
            .all(|m| self.algebra.monomial_degree(m) == degree)
    }

    /// Integration against the ambient ring's volume monomial.
    pub fn integrate_top(&self) -> Result<Rational, AlgebraError> {
        self.algebra.integrate_top(self)
    }

    /// Serialized form: terms in canonical order, factor labels resolved.
    pub fn to_encoding(&self) -> ElementEncoding {
        let gens = self.algebra.generators();
        self.terms
            .iter()
            .map(|(m, c)| {
                let factors = m
                    .factors()
                    .iter()
                    .map(|&(i, e)| (gens[i as usize].label.clone(), e))
                    .collect();
                (factors, format_rational(c))
            })
            .collect()
    }

    /// Stable JSON string of [`Element::to_encoding`].
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_encoding()).expect("encoding is valid JSON data")
    }
}

impl Algebra {
    /// Reads an element from its serialized form.  Factor lists are treated
    /// as unordered multisets; terms that die by nilpotency contribute zero;
    /// repeated monomials accumulate.
    pub fn element_from_encoding(&self, enc: &ElementEncoding) -> Result<Element, AlgebraError> {
        let mut out = self.zero();
        for (factors, coefficient) in enc {
            let c = parse_rational(coefficient)?;
            if c.is_zero() {
                continue;
            }
            let factors: Vec<(&str, u32)> =
                factors.iter().map(|(l, e)| (l.as_str(), *e)).collect();
            if let Some(m) = self.monomial(&factors)? {
                out.insert(m, c);
            }
        }
        Ok(out)
    }

    /// Reads an element from a JSON string in the serialized form.
    pub fn element_from_json_str(&self, s: &str) -> Result<Element, AlgebraError> {
        let enc: ElementEncoding =
            serde_json::from_str(s).map_err(|e| AlgebraError::BadEncoding(e.to_string()))?;
        self.element_from_encoding(&enc)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let gens = self.algebra.generators();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c < &Rational::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let factors: Vec<String> = m
                .factors()
                .iter()
                .map(|&(idx, e)| {
                    let label = &gens[idx as usize].label;
                    if e == 1 {
                        label.clone()
                    } else {
                        format!("{label}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs).expect("elements of different rings")
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs).expect("elements of different rings")
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs).expect("elements of different rings")
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}
