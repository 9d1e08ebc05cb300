//! Artinian quotient algebras viewed simultaneously as rings (through
//! their polynomial presentation) and as graded modules over themselves
//! (through multiplication matrices on the standard monomial basis).

use num_traits::Zero;

use crate::exactlinalg::{RationalMatrix, Subspace};
use crate::graded::{GradedModule, GeneratorAction, HilbertSeries, LinearForm};
use crate::polyring::{Monomial, Polynomial, QuotientPresentation};

use super::ConstructionError;

/// A quotient algebra with its module-of-itself view.
///
/// The module's generators are the ring variables in declaration order, so
/// a variable's index is the same in both views. The degree-1 component is
/// spanned by the weight-1 variables that are standard monomials.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    presentation: QuotientPresentation,
    module: GradedModule,
    label: String,
}

impl GradedAlgebra {
    pub fn from_presentation(presentation: QuotientPresentation) -> Result<Self, ConstructionError> {
        let ring = presentation.ring().clone();
        let n = ring.num_vars();
        let generators: Vec<GeneratorAction> = (0..n)
            .map(|v| GeneratorAction {
                name: ring.name(v).to_string(),
                degree: i64::from(ring.weight(v)),
                matrix: presentation.mult_matrix(v).clone(),
            })
            .collect();
        let degree_one: Vec<usize> = (0..n)
            .filter(|&v| {
                ring.weight(v) == 1
                    && presentation.monomial_index(&Monomial::variable(n, v)).is_some()
            })
            .collect();
        let module =
            GradedModule::new(presentation.degrees().to_vec(), generators, degree_one)?;
        let label = describe(&presentation);
        Ok(GradedAlgebra { presentation, module, label })
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn presentation(&self) -> &QuotientPresentation {
        &self.presentation
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn hilbert(&self) -> HilbertSeries {
        self.module.hilbert()
    }

    /// Dimension of the common kernel of every variable action, i.e. of
    /// the annihilator of the maximal ideal.
    pub fn socle_dimension(&self) -> usize {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        let mut rows = Vec::new();
        for g in self.module.generators() {
            rows.extend(g.matrix.rows_vec());
        }
        if rows.is_empty() {
            return n;
        }
        let stacked = RationalMatrix::from_rows(rows).expect("actions share the basis");
        n - stacked.rank()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle_dimension() == 1
    }

    /// dim m/m^2 for the irrelevant maximal ideal m: the number of basis
    /// monomials of positive degree not reachable as products of two such.
    pub fn embedding_dimension(&self) -> Result<usize, ConstructionError> {
        let dim = self.dim();
        if dim == 0 {
            return Ok(0);
        }
        let positive: Vec<usize> = (0..dim)
            .filter(|&i| self.presentation.degrees()[i] > 0)
            .collect();
        let ring = self.presentation.ring().clone();
        let mut products = Vec::new();
        for (a, &i) in positive.iter().enumerate() {
            for &j in &positive[a..] {
                let mono = self.presentation.standard_monomials()[i]
                    .mul(&self.presentation.standard_monomials()[j]);
                let poly = Polynomial::monomial(ring.clone(), mono, crate::exactlinalg::matrix::int(1));
                products.push(self.presentation.coords_of(&poly)?);
            }
        }
        let square = Subspace::from_spanning(dim, products)?;
        Ok(positive.len() - square.dim())
    }

    /// Coefficients of a degree-1 polynomial over the degree-1 basis.
    pub fn form_from_polynomial(&self, f: &Polynomial) -> Result<LinearForm, ConstructionError> {
        if f.homogeneous_degree() != Some(1) {
            return Err(ConstructionError::FormDegree { degree: f.homogeneous_degree() });
        }
        let coords = self.presentation.coords_of(f)?;
        // A homogeneous degree-1 normal form is supported on the degree-1
        // standard monomials, which are single weight-1 variables.
        debug_assert!(coords
            .iter()
            .enumerate()
            .all(|(slot, c)| c.is_zero() || self.presentation.degrees()[slot] == 1));
        let n = self.presentation.ring().num_vars();
        let coefficients = self
            .module
            .degree_one_indices()
            .iter()
            .map(|&v| {
                let slot = self
                    .presentation
                    .monomial_index(&Monomial::variable(n, v))
                    .expect("degree-1 generators are standard monomials");
                coords[slot].clone()
            })
            .collect();
        Ok(LinearForm::new(coefficients))
    }
}

fn describe(presentation: &QuotientPresentation) -> String {
    let ring = presentation.ring();
    let vars = ring.names().join(", ");
    let weights = if ring.weights().iter().any(|&w| w != 1) {
        let shown: Vec<String> = ring.weights().iter().map(|w| w.to_string()).collect();
        format!("; weights {}", shown.join(" "))
    } else {
        String::new()
    };
    let gens: Vec<String> = presentation
        .groebner_basis()
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    let ideal = if gens.len() > 4 {
        format!("{}, .. {} relations", gens[0], gens.len())
    } else {
        gens.join(", ")
    };
    format!("K[{vars}{weights}]/({ideal})")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, GroebnerBasis, RingSpec};

    fn quotient(names: &[&str], weights: &[u32], gens: &[&str]) -> GradedAlgebra {
        let ring = RingSpec::new(
            names.iter().map(|s| s.to_string()).collect(),
            weights.to_vec(),
        )
        .unwrap();
        let polys: Vec<Polynomial> =
            gens.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect();
        let pres = QuotientPresentation::build(GroebnerBasis::compute(&polys).unwrap()).unwrap();
        GradedAlgebra::from_presentation(pres).unwrap()
    }

    #[test]
    fn square_free_as_module_of_itself() {
        let a = quotient(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        assert_eq!(a.dim(), 4);
        assert_eq!(a.module().degree_one_names(), vec!["x", "y"]);
        assert_eq!(a.hilbert().coefficient_row(), vec![1, 2, 1]);
        assert!(a.label().contains("K[x, y]/("));
    }

    #[test]
    fn weighted_algebra_has_single_linear_direction() {
        let b = quotient(&["e1", "e2"], &[1, 2], &["e1^2", "e2^2"]);
        assert_eq!(b.hilbert().coefficient_row(), vec![1, 1, 1, 1]);
        assert_eq!(b.module().degree_one_names(), vec!["e1"]);
        assert!(b.label().contains("weights 1 2"));
    }

    #[test]
    fn socle_detects_gorenstein() {
        let ci = quotient(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        assert_eq!(ci.socle_dimension(), 1);
        assert!(ci.is_gorenstein());
        let fat = quotient(&["x", "y"], &[1, 1], &["x^2", "x*y", "y^2"]);
        assert_eq!(fat.socle_dimension(), 2);
        assert!(!fat.is_gorenstein());
    }

    #[test]
    fn embedding_dimension_counts_minimal_generators() {
        let chain = quotient(&["x"], &[1], &["x^5"]);
        assert_eq!(chain.embedding_dimension().unwrap(), 1);
        let fat = quotient(&["x", "y"], &[1, 1], &["x^2", "x*y", "y^2"]);
        assert_eq!(fat.embedding_dimension().unwrap(), 2);
        let ci = quotient(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        assert_eq!(ci.embedding_dimension().unwrap(), 2);
    }

    #[test]
    fn forms_come_from_degree_one_polynomials() {
        let a = quotient(&["x", "y"], &[1, 1], &["x^2", "y^2"]);
        let ring = a.presentation().ring().clone();
        let f = parse_polynomial("x + 2*y", &ring).unwrap();
        let form = a.form_from_polynomial(&f).unwrap();
        assert_eq!(a.module().form_name(&form), "x + 2*y");
        let quad = parse_polynomial("x^2", &ring).unwrap();
        assert!(matches!(
            a.form_from_polynomial(&quad),
            Err(ConstructionError::FormDegree { degree: Some(2) })
        ));
    }

    #[test]
    fn weighted_form_rejects_heavy_variables() {
        let b = quotient(&["e1", "e2"], &[1, 2], &["e1^2", "e2^2"]);
        let ring = b.presentation().ring().clone();
        let e2 = parse_polynomial("e2", &ring).unwrap();
        assert!(matches!(
            b.form_from_polynomial(&e2),
            Err(ConstructionError::FormDegree { degree: Some(2) })
        ));
        let e1 = parse_polynomial("e1", &ring).unwrap();
        let form = b.form_from_polynomial(&e1).unwrap();
        assert_eq!(form.coefficients.len(), 1);
    }
}
