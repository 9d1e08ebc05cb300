//! Structural constructions on graded algebras and modules: tensor
//! products and thickenings, associated graded rings along a linear form,
//! central simple module decompositions, free extensions with their
//! power-sum instances, and the small symmetric-function families used for
//! the verification corpus.
//!
//! Every construction either certifies its defining identities (Hilbert
//! series factorizations, profile equalities, series sums) or reports the
//! failure; the `CheckReport` type carries one instance-level verdict plus
//! a JSON detail blob, and a report is `consistent` only when nothing the
//! instance can certify contradicts the statement being exercised.

pub mod algebra;
pub mod csm;
pub mod extension;
pub mod families;
pub mod gr;
pub mod suite;
pub mod tensor;

use thiserror::Error;

use crate::exactlinalg::LinalgError;
use crate::graded::{
    find_lefschetz_witness, GradedError, GradedModule, LefschetzMode, SearchConfig, WitnessStatus,
};
use crate::polyring::PolyError;

pub use algebra::GradedAlgebra;
pub use csm::{central_simple_modules, central_simple_slp_check, gorenstein_central_simple_check, CentralSimpleDecomposition};
pub use extension::{free_extension_check, power_sum_ci, power_sum_report, FreeExtensionInstance};
pub use families::{monomial_ci_certificate, section_8_algebra, section_8_report, SymmetricFamilyKind};
pub use gr::{associated_graded, graded_ring_consistency_check, AssociatedGraded};
pub use suite::run_verification_suite;
pub use tensor::{
    clebsch_gordan_profile, combined_form, jordan_block_sum_operator, tensor_product,
    tensor_slp_check, thicken, thickening_equivalence_check, truncated_polynomial_module,
};

/// Strong verdict with a bypass for modules concentrated in one degree:
/// there the only required power map is the identity, so the property
/// holds vacuously even when the degree-1 component is zero and no linear
/// forms exist to search over.
pub(crate) fn strong_status(
    module: &GradedModule,
    config: &SearchConfig,
) -> Result<WitnessStatus, ConstructionError> {
    if module.degree_one_count() == 0 {
        return match module.degree_range() {
            None => Ok(WitnessStatus::CertifiedYes),
            Some((lo, hi)) if lo == hi => Ok(WitnessStatus::CertifiedYes),
            Some(_) => Err(GradedError::NoLinearForms.into()),
        };
    }
    Ok(find_lefschetz_witness(module, LefschetzMode::Strong, config)?.status)
}

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("the extension is not free: h_total = {total}, but h_base * h_fiber = {product}")]
    NotFree { total: String, product: String },
    #[error("the algebra is not Gorenstein: its socle has dimension {socle}")]
    NotGorenstein { socle: usize },
    #[error("Hilbert series mismatch: expected {expected}, computed {got}")]
    SeriesMismatch { expected: String, got: String },
    #[error("{name} = {value} exceeds the desk-scale limit {limit}")]
    ResourceGuard { name: &'static str, value: usize, limit: usize },
    #[error("{name} must be at least {min}, got {value}")]
    ParameterRange { name: &'static str, min: usize, value: usize },
    #[error("no regular sequence with the expected series found in {attempts} seeded draws")]
    GenericSequenceFailed { attempts: usize },
    #[error("expected a homogeneous degree-1 element{}", match degree { Some(d) => format!(", got degree {d}"), None => String::from(", got an inhomogeneous element") })]
    FormDegree { degree: Option<i64> },
}

/// Instance-level verdict for one statement of the underlying theory.
///
/// The `theorem` field is a wire identifier consumed by scripts; it is data,
/// not a code reference. `consistent` means the instance produced no
/// certified contradiction of the statement.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub theorem: String,
    pub instance: String,
    pub consistent: bool,
    pub details: serde_json::Value,
}

impl CheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "theorem": self.theorem,
            "instance": self.instance,
            "consistent": self.consistent,
            "details": self.details,
        })
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {} .. {}",
            self.theorem,
            self.instance,
            if self.consistent { "consistent" } else { "INCONSISTENT" }
        )
    }
}
