//! Multivariate polynomials over the rationals.
//!
//! Terms are kept sorted in decreasing monomial order with no zero
//! coefficients, so the leading term is `terms[0]` and printing is
//! canonical.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::{Monomial, RingSpec};
use super::PolyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: Vec<(Monomial, BigRational)>,
}

impl Polynomial {
    pub fn zero(ring: Arc<RingSpec>) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn one(ring: Arc<RingSpec>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: Arc<RingSpec>, c: BigRational) -> Self {
        let n = ring.num_vars();
        let mut p = Polynomial { ring, terms: Vec::new() };
        if !c.is_zero() {
            p.terms.push((Monomial::one(n), c));
        }
        p
    }

    pub fn variable(ring: Arc<RingSpec>, index: usize) -> Self {
        let n = ring.num_vars();
        let mono = Monomial::variable(n, index);
        Polynomial { ring, terms: vec![(mono, BigRational::one())] }
    }

    pub fn monomial(ring: Arc<RingSpec>, mono: Monomial, coeff: BigRational) -> Self {
        let mut p = Polynomial { ring, terms: Vec::new() };
        if !coeff.is_zero() {
            p.terms.push((mono, coeff));
        }
        p
    }

    /// Builds from arbitrary (monomial, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(ring: Arc<RingSpec>, terms: Vec<(Monomial, BigRational)>) -> Self {
        let mut p = Polynomial { ring, terms };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        let ring = self.ring.clone();
        self.terms.sort_by(|a, b| b.0.cmp_in(&a.0, &ring));
        let mut merged: Vec<(Monomial, BigRational)> = Vec::with_capacity(self.terms.len());
        for (mono, coeff) in self.terms.drain(..) {
            match merged.last_mut() {
                Some((m, c)) if *m == mono => *c += coeff,
                _ => merged.push((mono, coeff)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        self.terms = merged;
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn coeff_of(&self, mono: &Monomial) -> BigRational {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    pub fn mul_term(&self, mono: &Monomial, coeff: &BigRational) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.mul(mono), c * coeff))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial, PolyError> {
        let mut acc = Polynomial::one(self.ring.clone());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Rescales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Weighted degree of the leading monomial; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.leading_monomial().map(|m| m.degree(&self.ring))
    }

    /// `Some(d)` when every term has weighted degree `d`; zero counts as
    /// homogeneous of any degree and returns `None` without error.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree(&self.ring));
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Applies the variable permutation `perm` (variable `i` of the result
    /// reads the exponent of variable `perm[i]`).
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.permuted(perm), c.clone()))
            .collect();
        Polynomial::from_terms(self.ring.clone(), terms)
    }

    /// Evaluates the polynomial at `images` inside `target`, sending
    /// variable `i` to `images[i]`.
    pub fn substitute(
        &self,
        target: Arc<RingSpec>,
        images: &[Polynomial],
    ) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.num_vars() {
            return Err(PolyError::SubstitutionArity {
                expected: self.ring.num_vars(),
                got: images.len(),
            });
        }
        for img in images {
            if img.ring != target {
                return Err(PolyError::RingMismatch);
            }
        }
        let mut acc = Polynomial::zero(target.clone());
        for (mono, coeff) in &self.terms {
            let mut term = Polynomial::constant(target.clone(), coeff.clone());
            for (i, &e) in mono.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().enumerate() {
            let neg = coeff < &BigRational::zero();
            let abs = if neg { -coeff.clone() } else { coeff.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.display(&self.ring))?;
            } else {
                write!(f, "{}*{}", abs, mono.display(&self.ring))?;
            }
        }
        Ok(())
    }
}
