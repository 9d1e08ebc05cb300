//! Buchberger's algorithm for homogeneous ideals in the fixed
//! weighted-degree order.
//!
//! Pair selection follows the normal strategy (smallest lcm first) and the
//! classical product and chain criteria prune useless pairs. The final
//! basis is inter-reduced and monic, hence the unique reduced basis for
//! the ideal and this order.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::poly::Polynomial;
use super::ring::{Monomial, RingSpec};
use super::PolyError;

/// Monomial orders supported by the engine. Weighted degree first, reverse
/// lexicographic tie-break; with all weights 1 this is graded revlex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    WeightedDegRevLex,
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::WeightedDegRevLex => write!(f, "weighted-degrevlex"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<RingSpec>,
    order: MonomialOrder,
    /// Reduced, monic generators sorted by increasing leading monomial.
    gens: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Runs Buchberger's algorithm on homogeneous generators.
    pub fn compute(generators: &[Polynomial]) -> Result<GroebnerBasis, PolyError> {
        if generators.is_empty() {
            return Err(PolyError::EmptyGeneratorList);
        }
        let ring = generators[0].ring().clone();
        for g in generators {
            if g.ring() != &ring {
                return Err(PolyError::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(PolyError::InhomogeneousGenerator { poly: g.to_string() });
            }
        }
        let mut basis: Vec<Polynomial> = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            let r = reduce(g, &basis);
            if !r.is_zero() {
                basis.push(r.monic());
            }
        }
        if basis.is_empty() {
            return Err(PolyError::ZeroIdeal);
        }

        // Pending S-pairs keyed by (lcm degree, lcm, i, j) so the normal
        // selection strategy is a BTreeSet pop-first.
        let mut pending: BTreeSet<PairKey> = BTreeSet::new();
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                insert_pair(&mut pending, &mut pairs, &basis, &ring, i, j);
            }
        }

        while let Some(key) = pending.pop_first() {
            let (i, j) = (key.i, key.j);
            pairs.remove(&(i, j));
            let ti = basis[i].leading_monomial().unwrap();
            let tj = basis[j].leading_monomial().unwrap();
            if ti.is_coprime_with(tj) {
                continue;
            }
            if chain_criterion(&basis, &pairs, i, j, &key.lcm) {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j]);
            let r = reduce(&s, &basis);
            if r.is_zero() {
                continue;
            }
            basis.push(r.monic());
            let new = basis.len() - 1;
            for k in 0..new {
                insert_pair(&mut pending, &mut pairs, &basis, &ring, k, new);
            }
        }

        let gens = inter_reduce(basis, &ring);
        Ok(GroebnerBasis { ring, order: MonomialOrder::default(), gens })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.gens.iter().map(|g| g.leading_monomial().unwrap()).collect()
    }

    /// Fully reduced normal form; the unique representative of the class
    /// of `f` supported on standard monomials.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        if f.ring() != &self.ring {
            return Err(PolyError::RingMismatch);
        }
        Ok(reduce(f, &self.gens))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct PairKey {
    degree: i64,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| {
                // Same degree: compare exponent vectors for determinism.
                self.lcm.exps().cmp(other.lcm.exps())
            })
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn insert_pair(
    pending: &mut BTreeSet<PairKey>,
    pairs: &mut BTreeSet<(usize, usize)>,
    basis: &[Polynomial],
    ring: &RingSpec,
    i: usize,
    j: usize,
) {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    let degree = lcm.degree(ring);
    pending.insert(PairKey { degree, lcm, i, j });
    pairs.insert((i, j));
}

/// Chain criterion: the pair (i, j) is redundant when some other basis
/// element's leading monomial divides lcm(i, j) and both pairs with it
/// have already been treated.
fn chain_criterion(
    basis: &[Polynomial],
    pending_pairs: &BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
    lcm: &Monomial,
) -> bool {
    for k in 0..basis.len() {
        if k == i || k == j {
            continue;
        }
        if !basis[k].leading_monomial().unwrap().divides(lcm) {
            continue;
        }
        let ik = (i.min(k), i.max(k));
        let jk = (j.min(k), j.max(k));
        if !pending_pairs.contains(&ik) && !pending_pairs.contains(&jk) {
            return true;
        }
    }
    false
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (tf, cf) = f.leading_term().unwrap();
    let (tg, cg) = g.leading_term().unwrap();
    let lcm = tf.lcm(tg);
    let uf = tf.divide(&lcm);
    let ug = tg.divide(&lcm);
    let left = f.mul_term(&uf, &cf.recip());
    let right = g.mul_term(&ug, &cg.recip());
    left.sub(&right).expect("same ring")
}

/// Full division: every term of the result is reducible by no leading
/// monomial of `basis`. Reducers are tried in basis order, giving a
/// deterministic (and, for a reduced basis, unique) result.
fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut rest = f.clone();
    let mut out: Vec<(Monomial, num_rational::BigRational)> = Vec::new();
    'outer: while let Some((mono, coeff)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            let tg = g.leading_monomial().unwrap();
            if tg.divides(&mono) {
                let shift = tg.divide(&mono);
                let factor = &coeff / g.leading_term().unwrap().1;
                rest = rest.sub(&g.mul_term(&shift, &factor)).expect("same ring");
                continue 'outer;
            }
        }
        out.push((mono.clone(), coeff.clone()));
        rest = rest
            .sub(&Polynomial::monomial(ring.clone(), mono, coeff))
            .expect("same ring");
    }
    Polynomial::from_terms(ring, out)
}

/// Deletes generators with redundant leading monomials, tail-reduces each
/// survivor against the others, and sorts by leading monomial.
fn inter_reduce(mut basis: Vec<Polynomial>, ring: &RingSpec) -> Vec<Polynomial> {
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        let ti = basis[i].leading_monomial().unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let tj = basis[j].leading_monomial().unwrap();
            if tj.divides(ti) && (tj != ti || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let survivors: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    let mut reduced = Vec::with_capacity(survivors.len());
    for i in 0..survivors.len() {
        let others: Vec<Polynomial> = survivors
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = reduce(&survivors[i], &others).monic();
        debug_assert!(!r.is_zero());
        reduced.push(r);
    }
    reduced.sort_by(|a, b| {
        a.leading_monomial()
            .unwrap()
            .cmp_in(b.leading_monomial().unwrap(), ring)
    });
    reduced
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse_polynomial;
    use super::*;

    fn basis_of(ring: &Arc<RingSpec>, gens: &[&str]) -> GroebnerBasis {
        let polys: Vec<Polynomial> = gens.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect();
        GroebnerBasis::compute(&polys).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let gb = basis_of(&ring, &["x^2", "y^2"]);
        let lts: Vec<String> = gb
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(lts, vec!["y^2", "x^2"]);
    }

    #[test]
    fn elementary_symmetric_ideal_in_two_variables() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let gb = basis_of(&ring, &["x + y", "x*y"]);
        // Reduced basis: {x + y, y^2}.
        let gens: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, vec!["x + y", "y^2"]);
    }

    #[test]
    fn normal_form_is_linear_and_idempotent() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let gb = basis_of(&ring, &["x^2 - y^2", "x*y"]);
        let f = parse_polynomial("x^3 + x^2*y + x + y", &ring).unwrap();
        let g = parse_polynomial("x^2 - y", &ring).unwrap();
        let nf = |p: &Polynomial| gb.normal_form(p).unwrap();
        assert_eq!(nf(&f.add(&g).unwrap()), nf(&f).add(&nf(&g)).unwrap());
        assert_eq!(nf(&nf(&f)), nf(&f));
    }

    #[test]
    fn containment_via_normal_form() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let gb = basis_of(&ring, &["x + y", "x*y"]);
        // y^2 = y(x + y) - xy lies in the ideal.
        let p = parse_polynomial("y^2", &ring).unwrap();
        assert!(gb.contains(&p).unwrap());
        let q = parse_polynomial("x", &ring).unwrap();
        assert!(!gb.contains(&q).unwrap());
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let ring = RingSpec::standard(vec!["x".into(), "y".into()]).unwrap();
        let p = parse_polynomial("x^2 + y", &ring).unwrap();
        assert!(matches!(
            GroebnerBasis::compute(&[p]),
            Err(PolyError::InhomogeneousGenerator { .. })
        ));
    }

    #[test]
    fn weighted_homogeneous_generator_accepted() {
        // With weights (1, 2) the binomial E1^2 - 2 E2 is homogeneous.
        let ring = RingSpec::new(vec!["E1".into(), "E2".into()], vec![1, 2]).unwrap();
        let p = parse_polynomial("E1^2 - 2*E2", &ring).unwrap();
        let gb = GroebnerBasis::compute(&[p]).unwrap();
        assert_eq!(gb.generators().len(), 1);
        // Leading monomial is E1^2 (revlex tie-break at equal weighted degree).
        assert_eq!(
            gb.generators()[0].leading_monomial().unwrap(),
            &Monomial::new(vec![2, 0])
        );
    }

    #[test]
    fn zero_ideal_rejected() {
        let ring = RingSpec::standard(vec!["x".into()]).unwrap();
        let z = Polynomial::zero(ring);
        assert!(matches!(GroebnerBasis::compute(&[z]), Err(PolyError::ZeroIdeal)));
    }
}
