//! The associated graded ring of an algebra along a principal ideal (z):
//! levels F_k = (z^k) filtered by inclusion, with multiplication of classes
//! performed on representatives and truncated one level deeper.
//!
//! Representatives are chosen deterministically: each F_k is held in
//! reduced echelon form, and the class representatives of F_k / F_{k+1}
//! come from echelon completion. Because both the filtration and the
//! original grading are compatible, every representative is homogeneous,
//! so the new ring is graded with the same Hilbert series as the input.

use num_traits::Zero;

use crate::exactlinalg::{RationalMatrix, Scalar, Subspace};
use crate::graded::{
    find_lefschetz_witness, GeneratorAction, GradedModule, LefschetzMode, LinearForm,
    SearchConfig, WitnessStatus,
};
use crate::polyring::Monomial;

use super::algebra::GradedAlgebra;
use super::{CheckReport, ConstructionError};

/// The associated graded ring, as a module over its own degree-1 part,
/// with the initial form of the filtration element singled out.
#[derive(Debug, Clone)]
pub struct AssociatedGraded {
    module: GradedModule,
    z_star: LinearForm,
    /// Filtration level of each basis element.
    levels: Vec<usize>,
}

impl AssociatedGraded {
    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    /// The class of the filtration element in level 1.
    pub fn z_star(&self) -> &LinearForm {
        &self.z_star
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }
}

pub fn associated_graded(
    a: &GradedAlgebra,
    z: &LinearForm,
) -> Result<AssociatedGraded, ConstructionError> {
    let m = a.module();
    let dim = m.dim();
    if dim == 0 {
        let module = GradedModule::new(Vec::new(), Vec::new(), Vec::new())?;
        return Ok(AssociatedGraded { module, z_star: LinearForm::new(Vec::new()), levels: Vec::new() });
    }
    let pres = a.presentation();
    let mz = m.form_matrix(z)?;

    // F_k = column space of the k-th power; the chain strictly decreases
    // until it hits zero because the action is nilpotent.
    let mut filtration = vec![Subspace::full(dim)];
    let mut power = RationalMatrix::identity(dim);
    loop {
        power = power.mul(&mz)?;
        let next = Subspace::column_space(&power);
        let done = next.dim() == 0;
        filtration.push(next);
        if done {
            break;
        }
    }
    let depth = filtration.len() - 1;

    // Homogeneous representatives of each quotient F_k / F_{k+1}.
    let mut reps_by_level: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(depth);
    for k in 0..depth {
        reps_by_level.push(filtration[k].quotient_representatives(&filtration[k + 1])?);
    }

    let mut levels = Vec::new();
    let mut vectors: Vec<Vec<Scalar>> = Vec::new();
    let mut degrees = Vec::new();
    for (k, reps) in reps_by_level.iter().enumerate() {
        for rep in reps {
            let slot = rep.iter().position(|c| !c.is_zero()).expect("representatives are nonzero");
            let degree = m.basis_degrees()[slot];
            debug_assert!(rep
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || m.basis_degrees()[i] == degree));
            levels.push(k);
            vectors.push(rep.clone());
            degrees.push(degree);
        }
    }

    // Coordinates of a vector of F_k over that level's representatives,
    // modulo F_{k+1}.
    let express = |level: usize, v: &[Scalar]| -> Result<Vec<Scalar>, ConstructionError> {
        let reps = &reps_by_level[level];
        let extra = filtration[level + 1].basis();
        let mut cols: Vec<Vec<Scalar>> = reps.to_vec();
        cols.extend(extra.iter().cloned());
        if cols.is_empty() {
            debug_assert!(v.iter().all(|c| c.is_zero()));
            return Ok(Vec::new());
        }
        let mut matrix = RationalMatrix::zero(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for i in 0..dim {
                matrix[(i, j)] = col[i].clone();
            }
        }
        let solution = matrix
            .solve(v)?
            .expect("products of filtration classes stay in the filtration");
        Ok(solution[..reps.len()].to_vec())
    };

    // Index of each (level, representative) pair in the flat basis.
    let mut first_of_level = Vec::with_capacity(depth);
    {
        let mut start = 0;
        for reps in &reps_by_level {
            first_of_level.push(start);
            start += reps.len();
        }
    }

    let mut generators = Vec::new();
    let mut degree_one = Vec::new();
    for (p, (&k, vector)) in levels.iter().zip(&vectors).enumerate() {
        if degrees[p] != 1 {
            continue;
        }
        let mut matrix = RationalMatrix::zero(vectors.len(), vectors.len());
        for (q, (&j, other)) in levels.iter().zip(&vectors).enumerate() {
            let product = pres.coords_product(vector, other)?;
            if k + j >= depth {
                debug_assert!(product.iter().all(|c| c.is_zero()));
                continue;
            }
            let coeffs = express(k + j, &product)?;
            for (r, c) in coeffs.into_iter().enumerate() {
                if !c.is_zero() {
                    matrix[(first_of_level[k + j] + r, q)] = c;
                }
            }
        }
        let poly = pres.polynomial_of(vector).to_string();
        let name = if poly.contains(' ') { format!("({poly})*") } else { format!("{poly}*") };
        degree_one.push(generators.len());
        generators.push(GeneratorAction { name, degree: 1, matrix });
    }

    // The initial form of z: its coordinates over the level-1 classes.
    let n = pres.ring().num_vars();
    let mut z_vec = vec![Scalar::zero(); dim];
    for (pos, &v) in m.degree_one_indices().iter().enumerate() {
        let slot = pres
            .monomial_index(&Monomial::variable(n, v))
            .expect("degree-1 generators are standard monomials");
        z_vec[slot] = z.coefficients[pos].clone();
    }
    let z_level_coords = if z_vec.iter().all(|c| c.is_zero()) || depth < 2 {
        vec![Scalar::zero(); reps_by_level.get(1).map_or(0, |r| r.len())]
    } else {
        express(1, &z_vec)?
    };
    let mut z_star_coeffs = Vec::new();
    for (p, &k) in levels.iter().enumerate() {
        if degrees[p] != 1 {
            continue;
        }
        if k == 1 {
            z_star_coeffs.push(z_level_coords[p - first_of_level[1]].clone());
        } else {
            z_star_coeffs.push(Scalar::zero());
        }
    }

    let module = GradedModule::new(degrees, generators, degree_one)?;
    Ok(AssociatedGraded { module, z_star: LinearForm::new(z_star_coeffs), levels })
}

/// One instance of the transfer result along (z): the new ring keeps the
/// Hilbert series and the profile of the initial form, and the weak and
/// strong verdicts on the two rings may not contradict each other.
pub fn graded_ring_consistency_check(
    a: &GradedAlgebra,
    z: &LinearForm,
    instance: &str,
    config: &SearchConfig,
) -> Result<CheckReport, ConstructionError> {
    let gr = associated_graded(a, z)?;
    let hilbert_match = gr.module().hilbert() == a.hilbert();
    let profile_a = a.module().jordan_profile(z)?;
    let profile_gr = gr.module().jordan_profile(gr.z_star())?;
    let profile_match = profile_a == profile_gr;

    let mut verdicts = serde_json::Map::new();
    let mut contradiction = false;
    for (key, mode) in [("weak", LefschetzMode::Weak), ("strong", LefschetzMode::Strong)] {
        let on_a = find_lefschetz_witness(a.module(), mode, config)?;
        let on_gr = find_lefschetz_witness(gr.module(), mode, config)?;
        let pair = (on_a.status, on_gr.status);
        contradiction |= matches!(
            pair,
            (WitnessStatus::CertifiedYes, WitnessStatus::CertifiedNo)
                | (WitnessStatus::CertifiedNo, WitnessStatus::CertifiedYes)
        );
        verdicts.insert(
            key.into(),
            serde_json::json!({ "algebra": pair.0.as_str(), "gr": pair.1.as_str() }),
        );
    }

    Ok(CheckReport {
        theorem: "4.5".into(),
        instance: instance.into(),
        consistent: hilbert_match && profile_match && !contradiction,
        details: serde_json::json!({
            "hilbert_match": hilbert_match,
            "profile_match": profile_match,
            "profile": profile_a.blocks(),
            "verdicts": serde_json::Value::Object(verdicts),
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, GroebnerBasis, Polynomial, QuotientPresentation, RingSpec};

    fn algebra(names: &[&str], weights: &[u32], gens: &[&str]) -> GradedAlgebra {
        let ring =
            RingSpec::new(names.iter().map(|s| s.to_string()).collect(), weights.to_vec()).unwrap();
        let polys: Vec<Polynomial> =
            gens.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect();
        let pres = QuotientPresentation::build(GroebnerBasis::compute(&polys).unwrap()).unwrap();
        GradedAlgebra::from_presentation(pres).unwrap()
    }

    #[test]
    fn chain_is_its_own_associated_graded() {
        let a = algebra(&["x"], &[1], &["x^3"]);
        let gr = associated_graded(&a, &LinearForm::unit(1, 0)).unwrap();
        assert_eq!(gr.module().hilbert(), a.hilbert());
        assert_eq!(gr.levels(), &[0, 1, 2]);
        assert_eq!(gr.module().jordan_profile(gr.z_star()).unwrap().blocks(), &[3]);
    }

    #[test]
    fn square_free_along_a_variable() {
        let a = algebra(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        let gr = associated_graded(&a, &LinearForm::unit(2, 0)).unwrap();
        assert_eq!(gr.module().hilbert().coefficient_row(), vec![1, 2, 1]);
        let names = gr.module().degree_one_names();
        assert_eq!(names, vec!["y*", "x*"]);
        assert_eq!(
            gr.module().jordan_profile(gr.z_star()).unwrap(),
            a.module().jordan_profile(&LinearForm::unit(2, 0)).unwrap()
        );
        // The new ring is again a square-free pair of variables, so the
        // all-ones form is a strong witness for it.
        let report =
            find_lefschetz_witness(gr.module(), LefschetzMode::Strong, &SearchConfig::default())
                .unwrap();
        assert_eq!(report.status, WitnessStatus::CertifiedYes);
    }

    #[test]
    fn square_free_along_the_diagonal_keeps_the_full_profile() {
        let a = algebra(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        let z = LinearForm::ones(2);
        let gr = associated_graded(&a, &z).unwrap();
        assert_eq!(gr.module().jordan_profile(gr.z_star()).unwrap().blocks(), &[3, 1]);
        assert_eq!(gr.levels(), &[0, 0, 1, 2]);
    }

    #[test]
    fn weighted_algebra_stays_consistent() {
        let b = algebra(&["e1", "e2"], &[1, 2], &["e1^2", "e2^2"]);
        let report = graded_ring_consistency_check(
            &b,
            &LinearForm::unit(1, 0),
            "weighted square-free pair",
            &SearchConfig::default(),
        )
        .unwrap();
        assert!(report.consistent);
        assert_eq!(report.details["profile"][0], 2);
        assert_eq!(report.details["verdicts"]["strong"]["algebra"], "certified_no");
        assert_eq!(report.details["verdicts"]["strong"]["gr"], "certified_no");
    }

    #[test]
    fn consistency_check_on_the_square_free_pair() {
        let a = algebra(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        for z in [LinearForm::unit(2, 0), LinearForm::unit(2, 1), LinearForm::ones(2)] {
            let report = graded_ring_consistency_check(&a, &z, "square-free pair", &SearchConfig::default())
                .unwrap();
            assert!(report.consistent, "failed for {}", a.module().form_name(&z));
            assert_eq!(report.details["hilbert_match"], true);
            assert_eq!(report.details["profile_match"], true);
        }
    }
}
