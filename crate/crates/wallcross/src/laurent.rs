//! Laurent polynomials in the equivariant parameter `u` with coefficients
//! in a graded-commutative ring.
//!
//! The parameter `u` has cohomological degree two and is central, so a
//! Laurent element is just a finitely supported map from integer powers of
//! `u` to ring elements.  Negative powers arise from inverting equivariant
//! Euler classes; because the base ring coefficients there are nilpotent,
//! every inverse we meet is again a finite sum.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::rational::Rational;

/// Degree of the equivariant parameter `u`.
pub const U_DEGREE: i64 = 2;

/// A finitely supported sum `Σ_p e_p · u^p` with `e_p` in a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentElement {
    algebra: Algebra,
    terms: BTreeMap<i64, Element>,
}

impl LaurentElement {
    pub fn zero(algebra: &Algebra) -> Self {
        LaurentElement {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Algebra) -> Self {
        Self::from_element(algebra.one())
    }

    /// A ring element regarded as the coefficient of `u^0`.
    pub fn from_element(e: Element) -> Self {
        Self::term(e, 0)
    }

    /// `u^power` with unit coefficient.
    pub fn u_power(algebra: &Algebra, power: i64) -> Self {
        Self::term(algebra.one(), power)
    }

    /// A single term `e · u^power`.
    pub fn term(e: Element, power: i64) -> Self {
        let algebra = e.algebra().clone();
        let mut terms = BTreeMap::new();
        if !e.is_zero() {
            terms.insert(power, e);
        }
        LaurentElement { algebra, terms }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `u^power` (zero if absent).
    pub fn coefficient(&self, power: i64) -> Element {
        self.terms
            .get(&power)
            .cloned()
            .unwrap_or_else(|| self.algebra.zero())
    }

    /// Powers of `u` carrying a nonzero coefficient, in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Element)> {
        self.terms.iter().map(|(p, e)| (*p, e))
    }

    fn insert(&mut self, power: i64, e: Element) -> Result<(), AlgebraError> {
        if e.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(power) {
            Entry::Vacant(v) => {
                v.insert(e);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&e)?;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, rhs: &LaurentElement) -> Result<LaurentElement, AlgebraError> {
        let mut out = self.clone();
        for (p, e) in rhs.terms() {
            out.insert(p, e.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &LaurentElement) -> Result<LaurentElement, AlgebraError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LaurentElement {
        self.scale(&-Rational::from_integer(1.into()))
    }

    pub fn scale(&self, c: &Rational) -> LaurentElement {
        if c.is_zero() {
            return LaurentElement::zero(&self.algebra);
        }
        LaurentElement {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(p, e)| (*p, e.scale(c)))
                .collect(),
        }
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i64) -> LaurentElement {
        LaurentElement {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(p, e)| (p + k, e.clone())).collect(),
        }
    }

    /// Convolution product; `u` is central, so coefficients multiply in the
    /// ring and powers add.
    pub fn mul(&self, rhs: &LaurentElement) -> Result<LaurentElement, AlgebraError> {
        let mut out = LaurentElement::zero(&self.algebra);
        for (pa, ea) in self.terms() {
            for (pb, eb) in rhs.terms() {
                out.insert(pa + pb, ea.mul(eb)?)?;
            }
        }
        Ok(out)
    }

    /// Non-negative integer power.
    pub fn pow(&self, n: u32) -> Result<LaurentElement, AlgebraError> {
        let mut out = LaurentElement::one(&self.algebra);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// True when every monomial of every coefficient satisfies
    /// `2·(u-power) + monomial degree = total`, i.e. the element is
    /// homogeneous of the given total degree with `deg u = 2`.
    pub fn is_homogeneous_of_total(&self, total: i64) -> bool {
        self.terms().all(|(p, e)| {
            let want = total - U_DEGREE * p;
            u32::try_from(want).map_or(false, |d| e.is_homogeneous_of(d))
        })
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest power first, the way one writes an Euler class.
        for (i, (p, e)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let coeff = if e.term_count() == 1 {
                e.to_string()
            } else {
                format!("({e})")
            };
            match p {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}*u")?,
                p => write!(f, "{coeff}*u^{p}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn torus2() -> Algebra {
        Algebra::exterior(&["x1", "x2"]).unwrap()
    }

    #[test]
    fn convolution_adds_powers() {
        let alg = torus2();
        let u = LaurentElement::u_power(&alg, 1);
        let u_inv = LaurentElement::u_power(&alg, -1);
        assert_eq!(u.mul(&u_inv).unwrap(), LaurentElement::one(&alg));
        assert_eq!(u.pow(3).unwrap(), LaurentElement::u_power(&alg, 3));
    }

    #[test]
    fn coefficients_multiply_in_the_ring() {
        let alg = torus2();
        let x1 = alg.generator("x1").unwrap();
        let x2 = alg.generator("x2").unwrap();
        let a = LaurentElement::term(x1.clone(), 1);
        let b = LaurentElement::term(x2.clone(), -2);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.coefficient(-1), &x1 * &x2);
        // Anticommutation survives the Laurent layer.
        assert_eq!(b.mul(&a).unwrap(), prod.neg());
    }

    #[test]
    fn cancellation_removes_terms() {
        let alg = torus2();
        let a = LaurentElement::term(alg.scalar(int(2)), 3);
        let b = LaurentElement::term(alg.scalar(int(-2)), 3);
        assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn homogeneity_accounts_for_u_degree() {
        let alg = torus2();
        // u + x1 x2: both terms have total degree 2.
        let eps = LaurentElement::u_power(&alg, 1)
            .add(&LaurentElement::from_element(
                alg.monomial_term(&[("x1", 1), ("x2", 1)], int(1)).unwrap(),
            ))
            .unwrap();
        assert!(eps.is_homogeneous_of_total(2));
        assert!(!eps.is_homogeneous_of_total(4));
        assert!(LaurentElement::zero(&alg).is_homogeneous_of_total(17));
    }

    #[test]
    fn display_orders_high_powers_first() {
        let alg = torus2();
        let eps = LaurentElement::u_power(&alg, 2)
            .add(&LaurentElement::term(
                alg.monomial_term(&[("x1", 1), ("x2", 1)], int(3)).unwrap(),
                1,
            ))
            .unwrap();
        assert_eq!(eps.to_string(), "1*u^2 + 3*x1*x2*u");
    }
}
