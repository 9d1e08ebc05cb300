//! The built-in verification corpus: every transfer statement exercised
//! on a fixed set of small instances, producing one `CheckReport` each.
//!
//! The corpus covers monomial complete intersections in one to three
//! variables, the weighted pair K[e1,e2]/(e1^2,e2^2), the power-sum
//! towers, thickenings and tensor products of chains, and the symmetric
//! one-parameter families. Reports are generated deterministically from
//! the search configuration and returned sorted by wire identifier and
//! instance label, so identical inputs yield identical output. A filter
//! narrows the run to one wire identifier and skips the other blocks
//! entirely.

use crate::graded::{LinearForm, SearchConfig};
use crate::polyring::symmetric::elementary_symmetric;
use crate::polyring::{GroebnerBasis, Polynomial, QuotientPresentation, RingSpec};

use super::algebra::GradedAlgebra;
use super::csm::{central_simple_slp_check, gorenstein_central_simple_check};
use super::extension::{
    free_extension_check, power_sum_ci, power_sum_report, FreeExtensionInstance,
};
use super::families::{monomial_ci_certificate, section_8_report, SymmetricFamilyKind};
use super::gr::graded_ring_consistency_check;
use super::tensor::{tensor_slp_check, thickening_equivalence_check, truncated_polynomial_module};
use super::{CheckReport, ConstructionError};

fn monomial_ci(exponents: &[usize]) -> Result<GradedAlgebra, ConstructionError> {
    let names: Vec<String> =
        ["x", "y", "z"][..exponents.len()].iter().map(|s| s.to_string()).collect();
    let ring = RingSpec::standard(names)?;
    let gens: Vec<Polynomial> = exponents
        .iter()
        .enumerate()
        .map(|(i, &e)| Polynomial::variable(ring.clone(), i).pow(e as u32))
        .collect::<Result<_, _>>()?;
    let pres = QuotientPresentation::build(GroebnerBasis::compute(&gens)?)?;
    Ok(GradedAlgebra::from_presentation(pres)?)
}

fn weighted_pair() -> Result<GradedAlgebra, ConstructionError> {
    super::families::section_8_algebra(SymmetricFamilyKind::SquaredLinear)
}

/// The weighted pair expressed upstairs: the quotient of the standard
/// two-variable ring by the squares of both elementary symmetric
/// polynomials, free over the weighted pair with the coinvariant fiber.
fn weighted_pair_extension() -> Result<FreeExtensionInstance, ConstructionError> {
    let ring = RingSpec::standard(vec!["x1".into(), "x2".into()])?;
    let e1 = elementary_symmetric(&ring, 1)?;
    let e2 = elementary_symmetric(&ring, 2)?;

    let total_pres = QuotientPresentation::build(GroebnerBasis::compute(&[
        e1.pow(2)?,
        e2.pow(2)?,
    ])?)?;
    let total =
        GradedAlgebra::from_presentation(total_pres)?.relabel("K[x1,x2]/(e1^2, e2^2)");
    let base = weighted_pair()?;
    let fiber_pres =
        QuotientPresentation::build(GroebnerBasis::compute(&[e1.clone(), e2])?)?;
    let fiber = GradedAlgebra::from_presentation(fiber_pres)?.relabel("K[x1,x2]/(e1, e2)");

    let base_form = LinearForm::unit(1, 0);
    let total_form = total.form_from_polynomial(&e1)?;
    FreeExtensionInstance::new(
        "weighted pair as a free extension",
        total,
        base,
        fiber,
        base_form,
        total_form,
    )
}

fn square_free_extension() -> Result<FreeExtensionInstance, ConstructionError> {
    FreeExtensionInstance::new(
        "square-free pair over x",
        monomial_ci(&[2, 2])?,
        monomial_ci(&[2])?,
        {
            let ring = RingSpec::standard(vec!["y".into()])?;
            let gen = Polynomial::variable(ring, 0).pow(2)?;
            let pres = QuotientPresentation::build(GroebnerBasis::compute(&[gen])?)?;
            GradedAlgebra::from_presentation(pres)?
        },
        LinearForm::unit(1, 0),
        LinearForm::unit(2, 0),
    )
}

/// Instances for the transfer statements along a filtration form: small
/// monomial complete intersections, the weighted pair, and power-sum
/// bases, each paired below with every degree-1 basis form.
fn transfer_corpus() -> Result<Vec<GradedAlgebra>, ConstructionError> {
    let mut out = vec![
        monomial_ci(&[2, 2])?,
        monomial_ci(&[2, 3])?,
        monomial_ci(&[3, 3])?,
        monomial_ci(&[2, 4])?,
        monomial_ci(&[2, 2, 2])?,
        monomial_ci(&[2, 2, 3])?,
        monomial_ci(&[2, 3, 3])?,
        weighted_pair()?,
    ];
    for (n, a) in [(2, 2), (2, 3), (3, 2)] {
        out.push(power_sum_ci(n, a)?.base().clone());
    }
    Ok(out)
}

const POWER_SUM_GRID: [(usize, usize); 5] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)];

fn should_run(filter: Option<&str>, id: &str) -> bool {
    filter.map_or(true, |f| f == id)
}

/// Runs the corpus, optionally narrowed to one wire identifier, and
/// returns the reports sorted by identifier and instance label.
pub fn run_verification_suite(
    filter: Option<&str>,
    config: &SearchConfig,
) -> Result<Vec<CheckReport>, ConstructionError> {
    let mut reports: Vec<CheckReport> = Vec::new();

    if should_run(filter, "3.9") {
        for d in 1..=5 {
            let a = monomial_ci(&[d])?;
            reports.push(thickening_equivalence_check(a.module(), a.label(), config)?);
        }
        for a in [monomial_ci(&[2, 2])?, weighted_pair()?] {
            reports.push(thickening_equivalence_check(a.module(), a.label(), config)?);
        }
    }

    if should_run(filter, "3.10") {
        let chain = |alpha: usize, name: &str| truncated_polynomial_module(alpha, name);
        let pairs = [
            (chain(2, "t"), chain(3, "u"), "K[t]/(t^2) (x) K[u]/(u^3)"),
            (chain(3, "t"), chain(3, "u"), "K[t]/(t^3) (x) K[u]/(u^3)"),
            (monomial_ci(&[2, 2])?.module().clone(), chain(2, "t"), "K[x, y]/(x^2, y^2) (x) K[t]/(t^2)"),
            (weighted_pair()?.module().clone(), chain(2, "t"), "K[e1, e2]/(e1^2, e2^2) (x) K[t]/(t^2)"),
        ];
        for (v, w, name) in pairs {
            reports.push(tensor_slp_check(&v, &w, name, config)?);
        }
    }

    let form_loop = |a: &GradedAlgebra| -> Vec<(LinearForm, String)> {
        let k = a.module().degree_one_count();
        (0..k)
            .map(|i| {
                let z = LinearForm::unit(k, i);
                let label = format!("{} with z = {}", a.label(), a.module().form_name(&z));
                (z, label)
            })
            .collect()
    };

    if should_run(filter, "4.5") {
        for a in transfer_corpus()? {
            for (z, label) in form_loop(&a) {
                reports.push(graded_ring_consistency_check(&a, &z, &label, config)?);
            }
        }
    }

    if should_run(filter, "5.2") {
        for a in transfer_corpus()? {
            for (z, label) in form_loop(&a) {
                reports.push(central_simple_slp_check(&a, &z, &label, config)?);
            }
        }
    }

    if should_run(filter, "5.4") {
        for a in transfer_corpus()? {
            if !a.is_gorenstein() {
                continue;
            }
            for (z, label) in form_loop(&a) {
                reports.push(gorenstein_central_simple_check(&a, &z, &label, config)?);
            }
        }
    }

    if should_run(filter, "6.1") {
        reports.push(free_extension_check(&weighted_pair_extension()?, config)?);
        reports.push(free_extension_check(&square_free_extension()?, config)?);
        for (n, a) in POWER_SUM_GRID {
            reports.push(free_extension_check(&power_sum_ci(n, a)?, config)?);
        }
    }

    if should_run(filter, "7.1") {
        for (n, a) in POWER_SUM_GRID {
            reports.push(power_sum_report(n, a, config)?.1);
        }
    }

    if should_run(filter, "8.1") {
        for kind in [
            SymmetricFamilyKind::TruncatedPower { n: 3, d: 4 },
            SymmetricFamilyKind::TruncatedPower { n: 2, d: 6 },
            SymmetricFamilyKind::SquaredLinear,
        ] {
            reports.push(section_8_report(kind, config)?.1);
        }
    }

    if should_run(filter, "8.3") {
        for (n, d) in [(3, 5), (2, 5)] {
            let kind = SymmetricFamilyKind::GenericRegular { n, d, seed: config.seed };
            reports.push(section_8_report(kind, config)?.1);
        }
    }

    if should_run(filter, "9.1") {
        for r in 1..=6 {
            for s in 1..=6 {
                reports.push(monomial_ci_certificate(r, s)?.1);
            }
        }
    }

    reports.sort_by(|a, b| (&a.theorem, &a.instance).cmp(&(&b.theorem, &b.instance)));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_narrows_to_one_identifier() {
        let reports = run_verification_suite(Some("9.1"), &SearchConfig::default()).unwrap();
        assert_eq!(reports.len(), 36);
        assert!(reports.iter().all(|r| r.theorem == "9.1"));
        assert!(reports.iter().all(|r| r.consistent));
    }

    #[test]
    fn thickening_block_covers_the_chain_family() {
        let reports = run_verification_suite(Some("3.9"), &SearchConfig::default()).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(|r| r.consistent));
    }

    #[test]
    fn free_extension_block_is_consistent() {
        let reports = run_verification_suite(Some("6.1"), &SearchConfig::default()).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(|r| r.consistent));
    }

    #[test]
    fn reports_are_sorted_and_deterministic() {
        let config = SearchConfig::default();
        let first = run_verification_suite(Some("8.3"), &config).unwrap();
        let second = run_verification_suite(Some("8.3"), &config).unwrap();
        let render = |rs: &[CheckReport]| {
            rs.iter().map(|r| r.to_json().to_string()).collect::<Vec<_>>()
        };
        assert_eq!(render(&first), render(&second));
        let mut labels: Vec<_> =
            first.iter().map(|r| (r.theorem.clone(), r.instance.clone())).collect();
        let sorted = {
            let mut s = labels.clone();
            s.sort();
            s
        };
        assert_eq!(labels, sorted);
        labels.dedup();
        assert_eq!(labels.len(), first.len());
    }

    #[test]
    fn unknown_filter_yields_no_reports() {
        let reports = run_verification_suite(Some("0.0"), &SearchConfig::default()).unwrap();
        assert!(reports.is_empty());
    }
}
