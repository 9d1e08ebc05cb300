//! Tensor products of graded modules over the tensor product of their
//! acting algebras, thickenings by truncated polynomial algebras, and the
//! closed-form Jordan profile of a sum of two commuting shift operators.
//!
//! The profile of z(x)1 + 1(x)z' on a pair of chains of lengths d and f is
//! the multiset {d+f+1-2k : k = 1..min(d,f)}; summing over chain pairs
//! gives the profile on arbitrary direct sums. `jordan_block_sum_operator`
//! builds the operator explicitly so tests can confront the formula with
//! brute-force rank computations.

use crate::exactlinalg::matrix::int;
use crate::exactlinalg::{JordanProfile, RationalMatrix};
use crate::graded::{
    find_lefschetz_witness, GeneratorAction, GradedError, GradedModule, LefschetzMode, LinearForm,
    SearchConfig, WitnessStatus,
};

use super::{CheckReport, ConstructionError};

/// Tensor product of two modules: basis pairs ordered left-major, actions
/// g(x)1 for the left generators and 1(x)h for the right ones. Right-hand
/// generator names clash-prone with left ones gain a prime.
pub fn tensor_product(v: &GradedModule, w: &GradedModule) -> Result<GradedModule, GradedError> {
    let dv = v.dim();
    let dw = w.dim();
    let mut degrees = Vec::with_capacity(dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            degrees.push(v.basis_degrees()[i] + w.basis_degrees()[j]);
        }
    }
    let iv = RationalMatrix::identity(dv);
    let iw = RationalMatrix::identity(dw);
    let mut generators: Vec<GeneratorAction> = Vec::with_capacity(v.generators().len() + w.generators().len());
    for g in v.generators() {
        generators.push(GeneratorAction {
            name: g.name.clone(),
            degree: g.degree,
            matrix: g.matrix.kronecker(&iw),
        });
    }
    for h in w.generators() {
        let mut name = h.name.clone();
        while generators.iter().any(|g| g.name == name) {
            name.push('\'');
        }
        generators.push(GeneratorAction { name, degree: h.degree, matrix: iv.kronecker(&h.matrix) });
    }
    let mut degree_one = v.degree_one_indices().to_vec();
    degree_one.extend(w.degree_one_indices().iter().map(|&i| i + v.generators().len()));
    GradedModule::new(degrees, generators, degree_one)
}

/// The form z(x)1 + 1(x)z' on a tensor product, from the two factors.
pub fn combined_form(v: &GradedModule, w: &GradedModule, fv: &LinearForm, fw: &LinearForm) -> LinearForm {
    debug_assert_eq!(fv.coefficients.len(), v.degree_one_count());
    debug_assert_eq!(fw.coefficients.len(), w.degree_one_count());
    let mut coefficients = fv.coefficients.clone();
    coefficients.extend(fw.coefficients.iter().cloned());
    LinearForm::new(coefficients)
}

/// K[t]/(t^alpha) as a module over itself: one shift generator. For
/// alpha = 1 the algebra has no degree-1 component at all.
pub fn truncated_polynomial_module(alpha: usize, name: &str) -> GradedModule {
    assert!(alpha >= 1, "truncation order must be positive");
    let mut m = RationalMatrix::zero(alpha, alpha);
    for j in 0..alpha - 1 {
        m[(j + 1, j)] = int(1);
    }
    let degrees = (0..alpha as i64).collect();
    let degree_one = if alpha >= 2 { vec![0] } else { Vec::new() };
    GradedModule::new(
        degrees,
        vec![GeneratorAction { name: name.into(), degree: 1, matrix: m }],
        degree_one,
    )
    .expect("a single shift generator always validates")
}

/// V (x) K[t]/(t^alpha).
pub fn thicken(v: &GradedModule, alpha: usize) -> Result<GradedModule, ConstructionError> {
    if alpha < 1 {
        return Err(ConstructionError::ParameterRange { name: "thickening order", min: 1, value: alpha });
    }
    Ok(tensor_product(v, &truncated_polynomial_module(alpha, "t"))?)
}

/// Profile of a sum of commuting shifts on chains of lengths `d` tensor
/// chains of lengths `f`, by the closed formula.
pub fn clebsch_gordan_profile(d: &[usize], f: &[usize]) -> JordanProfile {
    assert!(d.iter().chain(f).all(|&b| b > 0), "chain lengths must be positive");
    let mut blocks = Vec::new();
    for &di in d {
        for &fj in f {
            for k in 1..=di.min(fj) {
                blocks.push(di + fj + 1 - 2 * k);
            }
        }
    }
    JordanProfile::new(blocks)
}

/// The operator z(x)1 + 1(x)z' itself, for confronting the closed formula
/// with a rank computation.
pub fn jordan_block_sum_operator(d: &[usize], f: &[usize]) -> RationalMatrix {
    let jd = chain_shift(d);
    let jf = chain_shift(f);
    let id = RationalMatrix::identity(jd.nrows());
    let iw = RationalMatrix::identity(jf.nrows());
    jd.kronecker(&iw).add(&id.kronecker(&jf)).expect("summands share the tensor shape")
}

fn chain_shift(blocks: &[usize]) -> RationalMatrix {
    let dim: usize = blocks.iter().sum();
    let mut m = RationalMatrix::zero(dim, dim);
    let mut offset = 0;
    for &b in blocks {
        for k in 0..b - 1 {
            m[(offset + k + 1, offset + k)] = int(1);
        }
        offset += b;
    }
    m
}

/// One instance of the equivalence "V strong Lefschetz iff every
/// thickening V (x) K[t]/(t^alpha), alpha = 1..span, is weak Lefschetz".
/// Requires a symmetric unimodal series, certifies what it can, and flags
/// any certified contradiction.
pub fn thickening_equivalence_check(
    v: &GradedModule,
    instance: &str,
    config: &SearchConfig,
) -> Result<CheckReport, ConstructionError> {
    let h = v.hilbert();
    if !h.is_symmetric() {
        return Err(GradedError::NotSymmetric.into());
    }
    if !h.is_unimodal() {
        return Err(GradedError::NotUnimodal.into());
    }
    let strong = super::strong_status(v, config)?;
    let span = match v.degree_range() {
        Some((a, b)) => (b - a) as usize,
        None => 0,
    };
    let mut weak = serde_json::Map::new();
    let mut statuses = Vec::new();
    for alpha in 1..=span {
        let report = find_lefschetz_witness(&thicken(v, alpha)?, LefschetzMode::Weak, config)?;
        weak.insert(alpha.to_string(), report.status.as_str().into());
        statuses.push(report.status);
    }
    let any_weak_no = statuses.iter().any(|s| *s == WitnessStatus::CertifiedNo);
    let all_weak_yes = !statuses.is_empty() && statuses.iter().all(|s| *s == WitnessStatus::CertifiedYes);
    let consistent = !(strong == WitnessStatus::CertifiedYes && any_weak_no)
        && !(strong == WitnessStatus::CertifiedNo && all_weak_yes);
    Ok(CheckReport {
        theorem: "3.9".into(),
        instance: instance.into(),
        consistent,
        details: serde_json::json!({
            "strong": strong.as_str(),
            "thickenings": serde_json::Value::Object(weak),
        }),
    })
}

/// One instance of "V (x) W strong Lefschetz iff both factors are", plus
/// the max-slice count of the product series against the pairwise-minimum
/// formula over the two dual block decompositions.
pub fn tensor_slp_check(
    v: &GradedModule,
    w: &GradedModule,
    instance: &str,
    config: &SearchConfig,
) -> Result<CheckReport, ConstructionError> {
    let hv = v.hilbert();
    let hw = w.hilbert();
    for h in [&hv, &hw] {
        if !h.is_symmetric() {
            return Err(GradedError::NotSymmetric.into());
        }
        if !h.is_unimodal() {
            return Err(GradedError::NotUnimodal.into());
        }
    }
    let product = tensor_product(v, w)?;
    let left = super::strong_status(v, config)?;
    let right = super::strong_status(w, config)?;
    let both = super::strong_status(&product, config)?;

    let du = hv.dual_decomposition()?;
    let dw = hw.dual_decomposition()?;
    let expected_sperner: usize = du
        .blocks()
        .iter()
        .map(|&u| dw.blocks().iter().map(|&x| u.min(x)).sum::<usize>())
        .sum();
    let sperner = hv.mul(&hw).sperner();
    let sperner_ok = sperner == expected_sperner;

    let both_yes = left == WitnessStatus::CertifiedYes && right == WitnessStatus::CertifiedYes;
    let any_certified_no =
        left == WitnessStatus::CertifiedNo || right == WitnessStatus::CertifiedNo;
    let consistent = sperner_ok
        && !(both == WitnessStatus::CertifiedYes && any_certified_no)
        && !(both == WitnessStatus::CertifiedNo && both_yes);
    Ok(CheckReport {
        theorem: "3.10".into(),
        instance: instance.into(),
        consistent,
        details: serde_json::json!({
            "left": left.as_str(),
            "right": right.as_str(),
            "product": both.as_str(),
            "sperner": sperner,
            "sperner_formula": expected_sperner,
        }),
    })
}
