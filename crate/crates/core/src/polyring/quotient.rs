//! Finite-dimensional quotients `R/I` presented on the standard monomial
//! basis, with one multiplication matrix per ring variable.

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::exactlinalg::RationalMatrix;

use super::groebner::GroebnerBasis;
use super::poly::Polynomial;
use super::ring::{Monomial, RingSpec};
use super::PolyError;

#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    gb: GroebnerBasis,
    /// Monomials outside the leading-term ideal, in increasing order.
    standard_monomials: Vec<Monomial>,
    /// Weighted degree of each standard monomial.
    degrees: Vec<i64>,
    index: HashMap<Monomial, usize>,
    /// Multiplication matrix of each ring variable on the basis.
    mult_matrices: Vec<RationalMatrix>,
}

impl QuotientPresentation {
    /// Enumerates the staircase under the basis and builds the action of
    /// every variable. Fails with `NotArtinian` when the quotient is not
    /// finite-dimensional, i.e. some variable has no pure power among the
    /// leading terms.
    pub fn build(gb: GroebnerBasis) -> Result<QuotientPresentation, PolyError> {
        let ring = gb.ring().clone();
        let n = ring.num_vars();
        let leads: Vec<Monomial> = gb.leading_monomials().into_iter().cloned().collect();

        // Unit ideal: the quotient is the zero ring.
        if leads.iter().any(|lt| lt.is_one()) {
            let dim = 0;
            return Ok(QuotientPresentation {
                gb,
                standard_monomials: Vec::new(),
                degrees: Vec::new(),
                index: HashMap::new(),
                mult_matrices: vec![RationalMatrix::zero(dim, dim); n],
            });
        }

        // Bound the staircase: each variable needs a pure power leading term.
        let mut bounds = vec![None::<u32>; n];
        for lt in &leads {
            for i in 0..n {
                if lt.exp(i) > 0 && (0..n).all(|j| j == i || lt.exp(j) == 0) {
                    let e = lt.exp(i);
                    bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
                }
            }
        }
        let bounds: Vec<u32> = match bounds.iter().map(|b| b.ok_or(())).collect::<Result<_, _>>() {
            Ok(b) => b,
            Err(()) => {
                let missing: Vec<String> = (0..n)
                    .filter(|&i| bounds[i].is_none())
                    .map(|i| ring.name(i).to_string())
                    .collect();
                return Err(PolyError::NotArtinian { variables: missing.join(", ") });
            }
        };

        let mut standard = Vec::new();
        let mut cursor = vec![0u32; n];
        'enumerate: loop {
            let mono = Monomial::new(cursor.clone());
            if !leads.iter().any(|lt| lt.divides(&mono)) {
                standard.push(mono);
            }
            for i in 0..n {
                cursor[i] += 1;
                if cursor[i] < bounds[i] {
                    continue 'enumerate;
                }
                cursor[i] = 0;
            }
            break;
        }
        standard.sort_by(|a, b| a.cmp_in(b, &ring));
        let degrees: Vec<i64> = standard.iter().map(|m| m.degree(&ring)).collect();
        let index: HashMap<Monomial, usize> =
            standard.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();

        let dim = standard.len();
        let mut mult_matrices = Vec::with_capacity(n);
        for v in 0..n {
            let var = Monomial::variable(n, v);
            let mut m = RationalMatrix::zero(dim, dim);
            for (j, mono) in standard.iter().enumerate() {
                let shifted = mono.mul(&var);
                if let Some(&i) = index.get(&shifted) {
                    m[(i, j)] = BigRational::from_integer(1.into());
                    continue;
                }
                let nf = gb.normal_form(&Polynomial::monomial(
                    ring.clone(),
                    shifted,
                    BigRational::from_integer(1.into()),
                ))?;
                for (t, c) in nf.terms() {
                    let i = *index.get(t).expect("normal form is supported on standard monomials");
                    m[(i, j)] = c.clone();
                }
            }
            mult_matrices.push(m);
        }

        Ok(QuotientPresentation { gb, standard_monomials: standard, degrees, index, mult_matrices })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        self.gb.ring()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn dim(&self) -> usize {
        self.standard_monomials.len()
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard_monomials
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn monomial_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mult_matrix(&self, var: usize) -> &RationalMatrix {
        &self.mult_matrices[var]
    }

    pub fn mult_matrices(&self) -> &[RationalMatrix] {
        &self.mult_matrices
    }

    /// Coordinates of the class of `f` over the standard monomial basis.
    pub fn coords_of(&self, f: &Polynomial) -> Result<Vec<BigRational>, PolyError> {
        let nf = self.gb.normal_form(f)?;
        let mut v = vec![BigRational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            let i = *self
                .index
                .get(m)
                .expect("normal form is supported on standard monomials");
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// The basis element combination `coords` as a polynomial.
    pub fn polynomial_of(&self, coords: &[BigRational]) -> Polynomial {
        let terms = coords
            .iter()
            .zip(&self.standard_monomials)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(self.ring().clone(), terms)
    }

    /// Product of two basis-coordinate vectors, again in coordinates.
    pub fn coords_product(
        &self,
        a: &[BigRational],
        b: &[BigRational],
    ) -> Result<Vec<BigRational>, PolyError> {
        let pa = self.polynomial_of(a);
        let pb = self.polynomial_of(b);
        self.coords_of(&pa.mul(&pb)?)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse_polynomial;
    use super::*;

    fn quotient(ring: &Arc<RingSpec>, gens: &[&str]) -> Result<QuotientPresentation, PolyError> {
        let polys: Vec<Polynomial> =
            gens.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect();
        QuotientPresentation::build(GroebnerBasis::compute(&polys)?)
    }

    #[test]
    fn monomial_complete_intersection() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let q = quotient(&ring, &["x^2", "y^2"]).unwrap();
        assert_eq!(q.dim(), 4);
        assert_eq!(q.degrees(), &[0, 1, 1, 2]);
        let shown: Vec<String> = q
            .standard_monomials()
            .iter()
            .map(|m| m.display(&ring).to_string())
            .collect();
        assert_eq!(shown, vec!["1", "y", "x", "x*y"]);
    }

    #[test]
    fn coinvariant_quotient_of_two_variables() {
        // (e1, e2) in two standard variables: dimension 2.
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let q = quotient(&ring, &["x + y", "x*y"]).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.degrees(), &[0, 1]);
    }

    #[test]
    fn power_sum_pair_in_weighted_interpretation_has_dimension_three() {
        // p2, p3 rewritten over e-variables with weights (1, 2): the
        // quotient has series 1 + q + q^2.
        let ring = RingSpec::new(vec!["e1".into(), "e2".into()], vec![1, 2]).unwrap();
        let q = quotient(&ring, &["e1^2 - 2*e2", "e1^3 - 3*e1*e2"]).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.degrees(), &[0, 1, 2]);
    }

    #[test]
    fn power_sum_pair_in_two_standard_variables_has_dimension_six() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let q = quotient(&ring, &["x^2 + y^2", "x^3 + y^3"]).unwrap();
        assert_eq!(q.dim(), 6);
    }

    #[test]
    fn non_artinian_is_detected() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let err = quotient(&ring, &["x^2"]).unwrap_err();
        match err {
            PolyError::NotArtinian { variables } => assert_eq!(variables, "y"),
            other => panic!("expected NotArtinian, got {other:?}"),
        }
    }

    #[test]
    fn multiplication_matrix_action() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let q = quotient(&ring, &["x^2", "y^2"]).unwrap();
        // Basis order [1, y, x, xy]; x sends 1 -> x and y -> xy.
        let mx = q.mult_matrix(0);
        assert_eq!(mx.column(0)[2], BigRational::from_integer(1.into()));
        assert_eq!(mx.column(1)[3], BigRational::from_integer(1.into()));
        assert!(mx.column(2).iter().all(|c| c.is_zero()));
        assert_eq!(mx.rank(), 2);
    }

    #[test]
    fn matrices_commute() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let q = quotient(&ring, &["x^2 - y^2", "x*y"]).unwrap();
        let mx = q.mult_matrix(0);
        let my = q.mult_matrix(1);
        assert_eq!(mx.mul(my).unwrap(), my.mul(mx).unwrap());
    }

    #[test]
    fn coords_product_matches_polynomial_product() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let q = quotient(&ring, &["x^2", "y^2"]).unwrap();
        let a = q.coords_of(&parse_polynomial("x + y", &ring).unwrap()).unwrap();
        let b = q.coords_of(&parse_polynomial("x - y", &ring).unwrap()).unwrap();
        let prod = q.coords_product(&a, &b).unwrap();
        // (x + y)(x - y) = x^2 - y^2 = 0 in the quotient.
        assert!(prod.iter().all(|c| c.is_zero()));
    }
}
