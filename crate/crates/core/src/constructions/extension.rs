//! Free extensions: algebras whose Hilbert series factors as base times
//! fiber through a flat module structure, and the power-sum complete
//! intersections that furnish the motivating weighted examples.
//!
//! An instance bundles the three algebras with a designated degree-1 form
//! on the base and its lift to the total algebra. Freeness is witnessed
//! numerically by the series factorization; the consistency check then
//! exercises the transfer statements: strong Lefschetz on base and fiber
//! forces it on the total algebra, the lifted form's Jordan profile is the
//! base profile repeated once per fiber dimension, and each central simple
//! quotient upstairs has the series of its base counterpart times the
//! fiber series.

use crate::graded::{HilbertSeries, LinearForm, SearchConfig, WitnessStatus};
use crate::polyring::symmetric::{elementary_symmetric, power_sum, rewrite_in_elementary_basis};
use crate::polyring::{GroebnerBasis, Polynomial, QuotientPresentation, RingSpec};

use super::algebra::GradedAlgebra;
use super::csm::central_simple_modules;
use super::{strong_status, CheckReport, ConstructionError};

#[derive(Debug, Clone)]
pub struct FreeExtensionInstance {
    label: String,
    total: GradedAlgebra,
    base: GradedAlgebra,
    fiber: GradedAlgebra,
    base_form: LinearForm,
    total_form: LinearForm,
}

impl FreeExtensionInstance {
    /// Packages the three algebras after verifying the numerical freeness
    /// witness `h_total = h_base * h_fiber`.
    pub fn new(
        label: impl Into<String>,
        total: GradedAlgebra,
        base: GradedAlgebra,
        fiber: GradedAlgebra,
        base_form: LinearForm,
        total_form: LinearForm,
    ) -> Result<Self, ConstructionError> {
        let product = base.hilbert().mul(&fiber.hilbert());
        if total.hilbert() != product {
            return Err(ConstructionError::NotFree {
                total: total.hilbert().to_string(),
                product: product.to_string(),
            });
        }
        Ok(FreeExtensionInstance { label: label.into(), total, base, fiber, base_form, total_form })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn total(&self) -> &GradedAlgebra {
        &self.total
    }

    pub fn base(&self) -> &GradedAlgebra {
        &self.base
    }

    pub fn fiber(&self) -> &GradedAlgebra {
        &self.fiber
    }

    pub fn base_form(&self) -> &LinearForm {
        &self.base_form
    }

    /// The image of the base form in the total algebra.
    pub fn total_form(&self) -> &LinearForm {
        &self.total_form
    }
}

/// One instance of the transfer statement for free extensions.
pub fn free_extension_check(
    instance: &FreeExtensionInstance,
    config: &SearchConfig,
) -> Result<CheckReport, ConstructionError> {
    let base_status = strong_status(instance.base.module(), config)?;
    let fiber_status = strong_status(instance.fiber.module(), config)?;
    let total_status = strong_status(instance.total.module(), config)?;

    let implication_ok = !(base_status == WitnessStatus::CertifiedYes
        && fiber_status == WitnessStatus::CertifiedYes)
        || total_status == WitnessStatus::CertifiedYes;

    let fiber_dim = instance.fiber.dim();
    let profile_total = instance.total.module().jordan_profile(&instance.total_form)?;
    let profile_base = instance.base.module().jordan_profile(&instance.base_form)?;
    let profile_match = profile_total == profile_base.scaled(fiber_dim);

    let quotient_series_match = if profile_match {
        let upstairs = central_simple_modules(instance.total.module(), &instance.total_form)?;
        let downstairs = central_simple_modules(instance.base.module(), &instance.base_form)?;
        let h_fiber = instance.fiber.hilbert();
        upstairs.f_values() == downstairs.f_values()
            && upstairs
                .modules()
                .iter()
                .zip(downstairs.modules())
                .all(|(ua, ub)| ua.hilbert() == ub.hilbert().mul(&h_fiber))
    } else {
        false
    };

    Ok(CheckReport {
        theorem: "6.1".into(),
        instance: instance.label.clone(),
        consistent: implication_ok && profile_match && quotient_series_match,
        details: serde_json::json!({
            "series": {
                "total": instance.total.hilbert().to_json(),
                "base": instance.base.hilbert().to_json(),
                "fiber": instance.fiber.hilbert().to_json(),
            },
            "verdicts": {
                "total": total_status.as_str(),
                "base": base_status.as_str(),
                "fiber": fiber_status.as_str(),
            },
            "implication_ok": implication_ok,
            "lifted_profile": profile_total.blocks(),
            "profile_match": profile_match,
            "quotient_series_match": quotient_series_match,
        }),
    })
}

fn build_algebra(
    generators: Vec<Polynomial>,
    label: String,
) -> Result<GradedAlgebra, ConstructionError> {
    let gb = GroebnerBasis::compute(&generators)?;
    let pres = QuotientPresentation::build(gb)?;
    Ok(GradedAlgebra::from_presentation(pres)?.relabel(label))
}

/// The complete intersection cut out by `n` consecutive power sums
/// `p_a, ..., p_{a+n-1}`, as a free extension: the base is the same
/// quotient rewritten over the elementary symmetric generators with
/// weights 1..n, the fiber is the quotient by all elementary symmetric
/// polynomials, and the designated forms are `e_1` and its lift
/// `x_1 + ... + x_n`.
pub fn power_sum_ci(n: usize, a: usize) -> Result<FreeExtensionInstance, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::ParameterRange { name: "n", min: 1, value: n });
    }
    if a < 1 {
        return Err(ConstructionError::ParameterRange { name: "a", min: 1, value: a });
    }
    if n > 5 {
        return Err(ConstructionError::ResourceGuard { name: "n", value: n, limit: 5 });
    }
    if a > 8 {
        return Err(ConstructionError::ResourceGuard { name: "a", value: a, limit: 8 });
    }
    let total_dim: usize = (0..n).map(|i| a + i).product();
    if total_dim > 3000 {
        return Err(ConstructionError::ResourceGuard {
            name: "dim",
            value: total_dim,
            limit: 3000,
        });
    }

    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = RingSpec::standard(names)?;

    let powers: Vec<Polynomial> =
        (0..n).map(|i| power_sum(&ring, (a + i) as u32)).collect::<Result<_, _>>()?;
    let total = build_algebra(
        powers.clone(),
        format!("K[x1..x{n}]/(p_{a}..p_{})", a + n - 1),
    )?;

    let rewritten: Vec<Polynomial> =
        powers.iter().map(rewrite_in_elementary_basis).collect::<Result<_, _>>()?;
    let base = build_algebra(
        rewritten,
        format!("K[e1..e{n}]/(p_{a}..p_{})", a + n - 1),
    )?;
    let weights: Vec<u32> = (1..=n as u32).collect();
    let gen_degrees: Vec<u32> = (a as u32..(a + n) as u32).collect();
    let expected = HilbertSeries::complete_intersection(&weights, &gen_degrees)?;
    if base.hilbert() != expected {
        return Err(ConstructionError::SeriesMismatch {
            expected: expected.to_string(),
            got: base.hilbert().to_string(),
        });
    }

    let elementary: Vec<Polynomial> =
        (1..=n).map(|i| elementary_symmetric(&ring, i)).collect::<Result<_, _>>()?;
    let fiber = build_algebra(elementary, format!("K[x1..x{n}]/(e1..e{n})"))?;

    let base_form =
        base.form_from_polynomial(&Polynomial::variable(base.presentation().ring().clone(), 0))?;
    let total_form = total.form_from_polynomial(&power_sum(&ring, 1)?)?;

    FreeExtensionInstance::new(
        format!("power sums p_{a}..p_{} in {n} variables", a + n - 1),
        total,
        base,
        fiber,
        base_form,
        total_form,
    )
}

/// The headline facts for one power-sum complete intersection: the base
/// series matches the weighted complete-intersection formula, its socle
/// degree is n(a-1), `e_1` is a strong Lefschetz element downstairs, the
/// total algebra passes the strong search, and every power sum `p_m` with
/// `a+n-1 < m <= a*n` reduces to zero on both sides.
pub fn power_sum_report(
    n: usize,
    a: usize,
    config: &SearchConfig,
) -> Result<(FreeExtensionInstance, CheckReport), ConstructionError> {
    let instance = power_sum_ci(n, a)?;

    let socle_expected = (n * a - n) as i64;
    let socle_ok = instance.base.hilbert().max_degree() == Some(socle_expected);
    let base_is_strong = instance.base.module().is_slp_element(&instance.base_form)?;
    let total_status = strong_status(instance.total.module(), config)?;

    let ring = instance.fiber.presentation().ring().clone();
    let mut newton_ok = true;
    for m in (a + n)..=(a * n) {
        let p = power_sum(&ring, m as u32)?;
        if !instance.total.presentation().groebner_basis().contains(&p)? {
            newton_ok = false;
        }
        let q = rewrite_in_elementary_basis(&p)?;
        if !instance.base.presentation().groebner_basis().contains(&q)? {
            newton_ok = false;
        }
    }

    let report = CheckReport {
        theorem: "7.1".into(),
        instance: instance.label.clone(),
        consistent: socle_ok
            && base_is_strong
            && newton_ok
            && total_status != WitnessStatus::CertifiedNo,
        details: serde_json::json!({
            "base_series": instance.base.hilbert().to_json(),
            "socle_degree": socle_expected,
            "socle_ok": socle_ok,
            "base_form_is_strong": base_is_strong,
            "total_verdict": total_status.as_str(),
            "newton_reduced": newton_ok,
        }),
    };
    Ok((instance, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn algebra(names: &[&str], weights: &[u32], gens: &[&str]) -> GradedAlgebra {
        let ring =
            RingSpec::new(names.iter().map(|s| s.to_string()).collect(), weights.to_vec()).unwrap();
        let polys: Vec<Polynomial> =
            gens.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect();
        let pres = QuotientPresentation::build(GroebnerBasis::compute(&polys).unwrap()).unwrap();
        GradedAlgebra::from_presentation(pres).unwrap()
    }

    #[test]
    fn mismatched_series_is_rejected() {
        let total = algebra(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        let base = algebra(&["x"], &[1], &["x^2"]);
        let fiber = algebra(&["y"], &[1], &["y^3"]);
        let err = FreeExtensionInstance::new(
            "bad split",
            total,
            base,
            fiber,
            LinearForm::unit(1, 0),
            LinearForm::unit(2, 0),
        )
        .unwrap_err();
        assert!(matches!(err, ConstructionError::NotFree { .. }));
    }

    #[test]
    fn square_free_pair_splits_along_a_variable() {
        let total = algebra(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        let base = algebra(&["x"], &[1], &["x^2"]);
        let fiber = algebra(&["y"], &[1], &["y^2"]);
        let instance = FreeExtensionInstance::new(
            "square-free pair over x",
            total,
            base,
            fiber,
            LinearForm::unit(1, 0),
            LinearForm::unit(2, 0),
        )
        .unwrap();
        let report = free_extension_check(&instance, &SearchConfig::default()).unwrap();
        assert!(report.consistent);
        assert_eq!(report.details["verdicts"]["total"], "certified_yes");
        assert_eq!(report.details["lifted_profile"], serde_json::json!([2, 2]));
        assert_eq!(report.details["quotient_series_match"], true);
    }

    #[test]
    fn two_variable_power_sums_build_the_expected_tower() {
        let instance = power_sum_ci(2, 2).unwrap();
        assert_eq!(instance.total().dim(), 6);
        assert_eq!(instance.base().dim(), 3);
        assert_eq!(instance.fiber().dim(), 2);
        assert_eq!(instance.base().hilbert().coefficient_row(), vec![1, 1, 1]);
        assert_eq!(instance.base().presentation().ring().weights(), &[1, 2]);

        let report = free_extension_check(&instance, &SearchConfig::default()).unwrap();
        assert!(report.consistent);
        assert_eq!(report.details["verdicts"]["base"], "certified_yes");
        assert_eq!(report.details["lifted_profile"], serde_json::json!([3, 3]));
    }

    #[test]
    fn two_variable_power_sum_report_is_consistent() {
        let (instance, report) = power_sum_report(2, 2, &SearchConfig::default()).unwrap();
        assert!(report.consistent);
        assert_eq!(report.details["socle_degree"], 2);
        assert_eq!(report.details["base_form_is_strong"], true);
        assert_eq!(report.details["newton_reduced"], true);
        assert_eq!(report.details["total_verdict"], "certified_yes");
        assert!(instance.total().module().is_slp_element(instance.total_form()).unwrap() == false);
    }

    #[test]
    fn one_variable_tower_has_a_trivial_fiber() {
        let instance = power_sum_ci(1, 3).unwrap();
        assert_eq!(instance.fiber().dim(), 1);
        assert_eq!(instance.total().dim(), 3);
        let report = free_extension_check(&instance, &SearchConfig::default()).unwrap();
        assert!(report.consistent);
        assert_eq!(report.details["verdicts"]["fiber"], "certified_yes");
    }

    #[test]
    fn guards_reject_oversized_requests() {
        assert!(matches!(
            power_sum_ci(6, 2),
            Err(ConstructionError::ResourceGuard { name: "n", .. })
        ));
        assert!(matches!(
            power_sum_ci(2, 9),
            Err(ConstructionError::ResourceGuard { name: "a", .. })
        ));
        assert!(matches!(
            power_sum_ci(0, 2),
            Err(ConstructionError::ParameterRange { name: "n", .. })
        ));
        assert!(matches!(
            power_sum_ci(5, 4),
            Err(ConstructionError::ResourceGuard { name: "dim", .. })
        ));
    }
}
