//! Symmetric polynomials: elementary and power-sum families, the classical
//! recursion between them, and rewriting symmetric polynomials over the
//! elementary basis.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::Polynomial;
use super::ring::{Monomial, RingSpec};
use super::PolyError;

/// Elementary symmetric polynomial `e_i` in the first-`n` variables of a
/// standard-graded ring. `e_0 = 1`.
pub fn elementary_symmetric(ring: &Arc<RingSpec>, i: usize) -> Result<Polynomial, PolyError> {
    let n = ring.num_vars();
    if i > n {
        return Err(PolyError::SymmetricIndexOutOfRange { index: i, vars: n });
    }
    if i == 0 {
        return Ok(Polynomial::one(ring.clone()));
    }
    let mut terms = Vec::new();
    for combo in (0..n).combinations(i) {
        let mut exps = vec![0u32; n];
        for v in combo {
            exps[v] = 1;
        }
        terms.push((Monomial::new(exps), BigRational::one()));
    }
    Ok(Polynomial::from_terms(ring.clone(), terms))
}

/// Power sum `p_d = x_1^d + ... + x_n^d`, `d >= 1`.
pub fn power_sum(ring: &Arc<RingSpec>, d: u32) -> Result<Polynomial, PolyError> {
    if d == 0 {
        return Err(PolyError::SymmetricIndexOutOfRange { index: 0, vars: ring.num_vars() });
    }
    let n = ring.num_vars();
    let terms = (0..n)
        .map(|v| {
            let mut exps = vec![0u32; n];
            exps[v] = d;
            (Monomial::new(exps), BigRational::one())
        })
        .collect();
    Ok(Polynomial::from_terms(ring.clone(), terms))
}

/// Confirms the recursion `p_m = -sum_{j=1}^{n} (-1)^j e_j p_{m-j}` by
/// expanding both sides symbolically; valid precisely for `m > n`.
pub fn newton_reduction_check(ring: &Arc<RingSpec>, m: u32) -> Result<bool, PolyError> {
    let n = ring.num_vars();
    if m as usize <= n {
        return Err(PolyError::NewtonIndexTooSmall { m, vars: n });
    }
    let mut rhs = Polynomial::zero(ring.clone());
    for j in 1..=n {
        let sign = if j % 2 == 0 {
            BigRational::from_integer(BigInt::from(-1))
        } else {
            BigRational::one()
        };
        let term = elementary_symmetric(ring, j)?
            .mul(&power_sum(ring, m - j as u32)?)?
            .scale(&sign);
        rhs = rhs.add(&term)?;
    }
    Ok(power_sum(ring, m)? == rhs)
}

/// All permutations for small `n`, adjacent transpositions beyond; both
/// generate the symmetric group, the former simply checks every element.
fn symmetry_witness_permutations(n: usize) -> Vec<Vec<usize>> {
    const FULL_ORBIT_LIMIT: usize = 8;
    if n <= FULL_ORBIT_LIMIT {
        (0..n).permutations(n).collect()
    } else {
        (0..n - 1)
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(i, i + 1);
                p
            })
            .collect()
    }
}

/// True when `f` is invariant under every permutation of the variables.
pub fn is_symmetric(f: &Polynomial) -> bool {
    let n = f.ring().num_vars();
    symmetry_witness_permutations(n)
        .into_iter()
        .all(|perm| &f.permute_variables(&perm) == f)
}

/// Ring `K[E_1..E_n]` with `E_i` of weight `i`, the target of
/// [`rewrite_in_elementary_basis`].
pub fn elementary_target_ring(n: usize) -> Result<Arc<RingSpec>, PolyError> {
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    let weights = (1..=n).map(|i| i as u32).collect();
    RingSpec::new(names, weights)
}

/// Rewrites a symmetric polynomial as a polynomial in the elementary
/// symmetric polynomials, over [`elementary_target_ring`].
///
/// Gauss descent on the lexicographic leading exponent: for a symmetric
/// polynomial that exponent is weakly decreasing, and subtracting the
/// matching product of elementary polynomials strictly lowers it.
pub fn rewrite_in_elementary_basis(f: &Polynomial) -> Result<Polynomial, PolyError> {
    if !is_symmetric(f) {
        return Err(PolyError::NotSymmetric { poly: f.to_string() });
    }
    let ring = f.ring().clone();
    let n = ring.num_vars();
    let target = elementary_target_ring(n)?;
    let elementary: Vec<Polynomial> = (1..=n)
        .map(|i| elementary_symmetric(&ring, i))
        .collect::<Result<_, _>>()?;

    let mut rest = f.clone();
    let mut out_terms: Vec<(Monomial, BigRational)> = Vec::new();
    while !rest.is_zero() {
        let (lam, coeff) = lex_leading_term(&rest);
        debug_assert!(
            lam.exps().windows(2).all(|w| w[0] >= w[1]),
            "lex leading exponent of a symmetric polynomial is weakly decreasing"
        );
        // e_1^(l1-l2) e_2^(l2-l3) ... e_n^(ln) has that lex leading term.
        let mut e_exps = vec![0u32; n];
        for i in 0..n {
            let next = if i + 1 < n { lam.exp(i + 1) } else { 0 };
            e_exps[i] = lam.exp(i) - next;
        }
        let mut product = Polynomial::one(ring.clone());
        for (i, &e) in e_exps.iter().enumerate() {
            if e > 0 {
                product = product.mul(&elementary[i].pow(e)?)?;
            }
        }
        rest = rest.sub(&product.scale(&coeff))?;
        out_terms.push((Monomial::new(e_exps), coeff));
    }
    Ok(Polynomial::from_terms(target, out_terms))
}

/// Leading term in the plain lexicographic order (used only by the
/// rewriting descent, which is stated for that order).
fn lex_leading_term(f: &Polynomial) -> (Monomial, BigRational) {
    f.terms()
        .iter()
        .max_by(|(a, _), (b, _)| a.exps().cmp(b.exps()))
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("nonzero polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xring(n: usize) -> Arc<RingSpec> {
        RingSpec::standard((1..=n).map(|i| format!("x{i}")).collect()).unwrap()
    }

    #[test]
    fn elementary_polynomials_shape() {
        let ring = xring(3);
        assert_eq!(elementary_symmetric(&ring, 0).unwrap().to_string(), "1");
        assert_eq!(elementary_symmetric(&ring, 1).unwrap().terms().len(), 3);
        assert_eq!(elementary_symmetric(&ring, 2).unwrap().terms().len(), 3);
        assert_eq!(
            elementary_symmetric(&ring, 3).unwrap().to_string(),
            "x1*x2*x3"
        );
        assert!(elementary_symmetric(&ring, 4).is_err());
    }

    #[test]
    fn power_sum_shape() {
        let ring = xring(2);
        assert_eq!(power_sum(&ring, 3).unwrap().to_string(), "x1^3 + x2^3");
    }

    #[test]
    fn newton_recursion_holds_above_n() {
        for n in 2..=4usize {
            let ring = xring(n);
            for m in (n as u32 + 1)..=(n as u32 + 3) {
                assert!(
                    newton_reduction_check(&ring, m).unwrap(),
                    "recursion failed for n={n}, m={m}"
                );
            }
        }
    }

    #[test]
    fn newton_recursion_rejects_small_exponent() {
        let ring = xring(2);
        assert!(matches!(
            newton_reduction_check(&ring, 2),
            Err(PolyError::NewtonIndexTooSmall { .. })
        ));
    }

    #[test]
    fn symmetry_detection() {
        let ring = xring(3);
        assert!(is_symmetric(&power_sum(&ring, 2).unwrap()));
        assert!(is_symmetric(&elementary_symmetric(&ring, 2).unwrap()));
        let x1 = Polynomial::variable(ring, 0);
        assert!(!is_symmetric(&x1));
    }

    #[test]
    fn rewrite_power_sum_two_variables() {
        let ring = xring(2);
        let p2 = power_sum(&ring, 2).unwrap();
        let g = rewrite_in_elementary_basis(&p2).unwrap();
        assert_eq!(g.to_string(), "e1^2 - 2*e2");
        // The target ring carries weights (1, 2), so g is homogeneous.
        assert_eq!(g.homogeneous_degree(), Some(2));
    }

    #[test]
    fn rewrite_round_trips_through_substitution() {
        for n in 2..=3usize {
            let ring = xring(n);
            for d in 1..=4u32 {
                let p = power_sum(&ring, d).unwrap();
                let g = rewrite_in_elementary_basis(&p).unwrap();
                assert_eq!(g.homogeneous_degree(), Some(d as i64));
                let images: Vec<Polynomial> = (1..=n)
                    .map(|i| elementary_symmetric(&ring, i).unwrap())
                    .collect();
                let back = g.substitute(ring.clone(), &images).unwrap();
                assert_eq!(back, p, "round trip failed for n={n}, d={d}");
            }
        }
    }

    #[test]
    fn rewrite_of_elementary_is_a_variable() {
        let ring = xring(3);
        let e3 = elementary_symmetric(&ring, 3).unwrap();
        let g = rewrite_in_elementary_basis(&e3).unwrap();
        assert_eq!(g.to_string(), "e3");
    }

    #[test]
    fn rewrite_rejects_asymmetric_input() {
        let ring = xring(2);
        let x1 = Polynomial::variable(ring, 0);
        assert!(matches!(
            rewrite_in_elementary_basis(&x1),
            Err(PolyError::NotSymmetric { .. })
        ));
    }
}
