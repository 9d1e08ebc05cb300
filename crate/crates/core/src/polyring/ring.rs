//! Ring descriptions and monomials.

use std::cmp::Ordering;
use std::sync::Arc;

use super::PolyError;

/// A polynomial ring over the rationals with named variables and positive
/// integer weights. Degrees of monomials are weighted degrees throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl RingSpec {
    pub fn new(names: Vec<String>, weights: Vec<u32>) -> Result<Arc<Self>, PolyError> {
        if names.is_empty() {
            return Err(PolyError::EmptyRing);
        }
        if names.len() != weights.len() {
            return Err(PolyError::WeightCountMismatch { names: names.len(), weights: weights.len() });
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0) {
            let _ = w;
            return Err(PolyError::ZeroWeight);
        }
        for (i, n) in names.iter().enumerate() {
            if !is_valid_name(n) {
                return Err(PolyError::BadVariableName { name: n.clone() });
            }
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable { name: n.clone() });
            }
        }
        Ok(Arc::new(RingSpec { names, weights }))
    }

    /// Standard grading: every variable has weight 1.
    pub fn standard(names: Vec<String>) -> Result<Arc<Self>, PolyError> {
        let weights = vec![1; names.len()];
        Self::new(names, weights)
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Indices of the weight-1 variables, in declaration order.
    pub fn linear_variables(&self) -> Vec<usize> {
        (0..self.num_vars()).filter(|&i| self.weights[i] == 1).collect()
    }
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector; always paired with a `RingSpec` of the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, ring: &RingSpec) -> i64 {
        self.exps
            .iter()
            .zip(ring.weights())
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient exponents; caller must ensure `self` divides `other`.
    pub fn divide(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Weighted-degree-first order, ties broken by reverse lexicographic
    /// comparison: among equal degrees the monomial with the smaller
    /// exponent at the last differing position is the larger one.
    pub fn cmp_in(&self, other: &Monomial, ring: &RingSpec) -> Ordering {
        match self.degree(ring).cmp(&other.degree(ring)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.exps.len()).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Permutes exponents: entry `i` of the result is the exponent of
    /// variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let exps = perm.iter().map(|&p| self.exps[p]).collect();
        Monomial { exps }
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a RingSpec,
}

impl std::fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Arc<RingSpec> {
        RingSpec::standard(vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(RingSpec::new(vec![], vec![]), Err(PolyError::EmptyRing)));
        assert!(matches!(
            RingSpec::new(vec!["x".into()], vec![0]),
            Err(PolyError::ZeroWeight)
        ));
        assert!(matches!(
            RingSpec::new(vec!["x".into(), "x".into()], vec![1, 1]),
            Err(PolyError::DuplicateVariable { .. })
        ));
        assert!(matches!(
            RingSpec::new(vec!["2x".into()], vec![1]),
            Err(PolyError::BadVariableName { .. })
        ));
    }

    #[test]
    fn weighted_degree() {
        let ring = RingSpec::new(vec!["e1".into(), "e2".into()], vec![1, 2]).unwrap();
        let m = Monomial::new(vec![1, 2]);
        assert_eq!(m.degree(&ring), 5);
    }

    #[test]
    fn order_is_degree_first_then_revlex() {
        let ring = ring2();
        let x = Monomial::new(vec![1, 0]);
        let y = Monomial::new(vec![0, 1]);
        let x2 = Monomial::new(vec![2, 0]);
        let xy = Monomial::new(vec![1, 1]);
        // Higher degree wins.
        assert_eq!(x2.cmp_in(&x, &ring), Ordering::Greater);
        // Same degree: last differing exponent smaller => larger.
        assert_eq!(x.cmp_in(&y, &ring), Ordering::Greater);
        assert_eq!(x2.cmp_in(&xy, &ring), Ordering::Greater);
    }

    #[test]
    fn weighted_tie_break() {
        let ring = RingSpec::new(vec!["e1".into(), "e2".into()], vec![1, 2]).unwrap();
        let e1sq = Monomial::new(vec![2, 0]);
        let e2 = Monomial::new(vec![0, 1]);
        assert_eq!(e1sq.degree(&ring), e2.degree(&ring));
        assert_eq!(e1sq.cmp_in(&e2, &ring), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let xy = Monomial::new(vec![1, 1]);
        let x2 = Monomial::new(vec![2, 0]);
        assert!(!xy.divides(&x2));
        assert_eq!(xy.lcm(&x2), Monomial::new(vec![2, 1]));
        assert_eq!(Monomial::new(vec![1, 0]).divide(&x2), Monomial::new(vec![1, 0]));
        assert!(Monomial::new(vec![0, 1]).is_coprime_with(&Monomial::new(vec![1, 0])));
    }

    #[test]
    fn display_forms() {
        let ring = ring2();
        assert_eq!(Monomial::one(2).display(&ring).to_string(), "1");
        assert_eq!(Monomial::new(vec![2, 1]).display(&ring).to_string(), "x^2*y");
    }
}
