//! Hilbert series of finite graded modules and the combinatorics read off
//! them: Sperner numbers, the dual decomposition into Jordan strips, and
//! series built from complete intersection data.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{rational_string, GradedError};
use crate::exactlinalg::JordanProfile;

/// Finite formal sum `sum h_d q^d` with nonnegative integer coefficients;
/// zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HilbertSeries {
    coeffs: BTreeMap<i64, usize>,
}

/// The rank bounds a Hilbert series imposes on multiplication operators:
/// no linear form exceeds rank `cosperner`, and no degree-k form exceeds
/// rank `dim - sperner_vector[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpernerData {
    pub sperner: usize,
    pub cosperner: usize,
    /// `SP_k` for `k = 1..=(b-a)`.
    pub sperner_vector: Vec<usize>,
    pub symmetric: bool,
    pub unimodal: bool,
    /// `(a+b)/2`, present exactly when the series is symmetric.
    pub reflecting_degree: Option<BigRational>,
}

impl HilbertSeries {
    pub fn zero() -> Self {
        HilbertSeries::default()
    }

    /// Series counting basis elements by degree.
    pub fn from_degrees(degrees: &[i64]) -> Self {
        let mut coeffs = BTreeMap::new();
        for &d in degrees {
            *coeffs.entry(d).or_insert(0) += 1;
        }
        HilbertSeries { coeffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (d, c) in pairs {
            if c > 0 {
                *coeffs.entry(d).or_insert(0) += c;
            }
        }
        HilbertSeries { coeffs }
    }

    pub fn coeff(&self, d: i64) -> usize {
        self.coeffs.get(&d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Total dimension `sum h_d`.
    pub fn dim(&self) -> usize {
        self.coeffs.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    /// Coefficients listed over the full range `a..=b`, zeros included.
    pub fn coefficient_row(&self) -> Vec<usize> {
        match (self.min_degree(), self.max_degree()) {
            (Some(a), Some(b)) => (a..=b).map(|d| self.coeff(d)).collect(),
            _ => Vec::new(),
        }
    }

    /// True when some degree strictly inside `[a, b]` has coefficient zero.
    pub fn has_internal_zero(&self) -> bool {
        self.coefficient_row().iter().any(|&c| c == 0)
    }

    /// `h_{a+i} = h_{b-i}` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        let row = self.coefficient_row();
        (0..row.len() / 2).all(|i| row[i] == row[row.len() - 1 - i])
    }

    /// Weakly increases to a peak, then weakly decreases. An internal zero
    /// fails this, because the support endpoints are positive.
    pub fn is_unimodal(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let row = self.coefficient_row();
        let mut i = 0;
        while i + 1 < row.len() && row[i] <= row[i + 1] {
            i += 1;
        }
        while i + 1 < row.len() && row[i] >= row[i + 1] {
            i += 1;
        }
        i + 1 == row.len()
    }

    /// `(a+b)/2` for a nonzero symmetric series.
    pub fn reflecting_degree(&self) -> Option<BigRational> {
        if self.is_zero() || !self.is_symmetric() {
            return None;
        }
        let a = self.min_degree().expect("nonzero series");
        let b = self.max_degree().expect("nonzero series");
        Some(BigRational::new(BigInt::from(a + b), BigInt::from(2)))
    }

    /// Largest coefficient.
    pub fn sperner(&self) -> usize {
        self.coefficient_row().into_iter().max().unwrap_or(0)
    }

    /// `sum_i min(h_i, h_{i+1})`, the rank ceiling for linear forms.
    pub fn cosperner(&self) -> usize {
        let row = self.coefficient_row();
        row.windows(2).map(|w| w[0].min(w[1])).sum()
    }

    /// `SP_k = sum_i max(h_i - h_{i-k}, 0)`, the corank floor for degree-k
    /// forms; `k >= 1`.
    pub fn sp(&self, k: usize) -> usize {
        debug_assert!(k >= 1, "SP_k is defined for k >= 1");
        let row = self.coefficient_row();
        (0..row.len())
            .map(|i| {
                let below = if i >= k { row[i - k] } else { 0 };
                row[i].saturating_sub(below)
            })
            .sum()
    }

    /// `SP_1 .. SP_{b-a}`.
    pub fn sperner_vector(&self) -> Vec<usize> {
        let row = self.coefficient_row();
        if row.len() <= 1 {
            return Vec::new();
        }
        (1..row.len()).map(|k| self.sp(k)).collect()
    }

    pub fn sperner_data(&self) -> SpernerData {
        let unimodal = self.is_unimodal();
        let data = SpernerData {
            sperner: self.sperner(),
            cosperner: self.cosperner(),
            sperner_vector: self.sperner_vector(),
            symmetric: self.is_symmetric(),
            unimodal,
            reflecting_degree: self.reflecting_degree(),
        };
        if unimodal && !self.is_zero() {
            debug_assert_eq!(data.cosperner, self.dim() - data.sperner);
            debug_assert_eq!(data.sperner_vector.first().copied(), {
                if data.sperner_vector.is_empty() { None } else { Some(data.sperner) }
            });
        }
        data
    }

    /// Decomposes a symmetric unimodal series into centered strips: the
    /// multiset `u_1 >= ... >= u_r` with `u_1 = b-a+1`, `r = sperner`, and
    /// `h_{a+k} = #{u_i >= b-a+1-2k}`. This is the Jordan profile a strong
    /// Lefschetz element must realize.
    pub fn dual_decomposition(&self) -> Result<JordanProfile, GradedError> {
        if self.is_zero() {
            return Err(GradedError::EmptySeries);
        }
        if !self.is_symmetric() {
            return Err(GradedError::NotSymmetric);
        }
        if !self.is_unimodal() {
            return Err(GradedError::NotUnimodal);
        }
        let row = self.coefficient_row();
        let span = row.len();
        let mut blocks = Vec::new();
        for k in 0..span.div_ceil(2) {
            let prev = if k == 0 { 0 } else { row[k - 1] };
            let mult = row[k] - prev;
            let length = span - 2 * k;
            blocks.extend(std::iter::repeat_n(length, mult));
        }
        let profile = JordanProfile::new(blocks);
        debug_assert_eq!(profile.total(), self.dim());
        Ok(profile)
    }

    /// Pointwise product of series, the series of a tensor product.
    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut coeffs: BTreeMap<i64, usize> = BTreeMap::new();
        for (d1, c1) in self.iter() {
            for (d2, c2) in other.iter() {
                *coeffs.entry(d1 + d2).or_insert(0) += c1 * c2;
            }
        }
        HilbertSeries { coeffs }
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut coeffs = self.coeffs.clone();
        for (d, c) in other.iter() {
            *coeffs.entry(d).or_insert(0) += c;
        }
        HilbertSeries { coeffs }
    }

    /// Series `prod (1 - q^{d_j}) / prod (1 - q^{w_i})` of a quotient cut
    /// out by a regular sequence of the given degrees over variables of
    /// the given weights. Fails when the quotient is not a polynomial or
    /// has a negative coefficient, both signs that the data do not come
    /// from a regular sequence with an Artinian quotient.
    pub fn complete_intersection(
        weights: &[u32],
        gen_degrees: &[u32],
    ) -> Result<HilbertSeries, GradedError> {
        let mut poly = vec![1i64];
        for &d in gen_degrees {
            poly = mul_one_minus_power(&poly, d as usize);
        }
        for &w in weights {
            poly = div_one_minus_power(&poly, w as usize)?;
        }
        if poly.iter().any(|&c| c < 0) {
            return Err(GradedError::SeriesNegativeCoefficient);
        }
        Ok(HilbertSeries::from_pairs(
            poly.into_iter().enumerate().map(|(d, c)| (d as i64, c as usize)),
        ))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .iter()
            .map(|(d, c)| (d.to_string(), serde_json::Value::from(c)))
            .collect();
        serde_json::Value::Object(map)
    }
}

impl std::fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(d, c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}*q"),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}*q^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl SpernerData {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "sperner": self.sperner,
            "cosperner": self.cosperner,
            "sperner_vector": self.sperner_vector,
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "reflecting_degree": self.reflecting_degree.as_ref().map(rational_string),
        })
    }
}

/// Inverse of [`HilbertSeries::dual_decomposition`]: lays each block `u`
/// down as the strip `q^{(a+b+1-u)/2} + ... ` of length `u`, all strips
/// sharing the reflecting degree `(a+b)/2`.
pub fn rebuild_hilbert(
    profile: &JordanProfile,
    a: i64,
    b: i64,
) -> Result<HilbertSeries, GradedError> {
    let span = (b - a + 1).max(0) as usize;
    if !profile.blocks().is_empty() && profile.max_block() != span {
        return Err(GradedError::StripExtent { block: profile.max_block(), expected: span });
    }
    let mut pairs = Vec::new();
    for &u in profile.blocks() {
        if (span - u) % 2 != 0 {
            return Err(GradedError::StripParity { block: u });
        }
        let start = a + ((span - u) / 2) as i64;
        pairs.extend((start..start + u as i64).map(|d| (d, 1)));
    }
    Ok(HilbertSeries::from_pairs(pairs))
}

/// Coefficients of the q-integer `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_integer(k: u32) -> Vec<i64> {
    vec![1; k as usize]
}

/// Whether `[k]_q` divides `[d]_q` as polynomials (equivalently, whether
/// `k` divides `d`).
pub fn q_integer_divides(k: u32, d: u32) -> bool {
    if k == 0 || d == 0 {
        return false;
    }
    exact_poly_div(&q_integer(d), &q_integer(k)).is_some()
}

/// Multiplies dense coefficients by `(1 - q^p)`.
fn mul_one_minus_power(poly: &[i64], p: usize) -> Vec<i64> {
    let mut out = vec![0i64; poly.len() + p];
    for (i, &c) in poly.iter().enumerate() {
        out[i] += c;
        out[i + p] -= c;
    }
    out
}

/// Divides dense coefficients by `(1 - q^p)` exactly: the quotient obeys
/// `g_i = f_i + g_{i-p}`, and exactness means the top `p` positions vanish.
fn div_one_minus_power(poly: &[i64], p: usize) -> Result<Vec<i64>, GradedError> {
    if p == 0 {
        return Err(GradedError::SeriesNotDivisible);
    }
    let mut g = vec![0i64; poly.len()];
    for i in 0..poly.len() {
        g[i] = poly[i] + if i >= p { g[i - p] } else { 0 };
    }
    let cut = poly.len().saturating_sub(p);
    if g[cut..].iter().any(|&c| c != 0) {
        return Err(GradedError::SeriesNotDivisible);
    }
    g.truncate(cut);
    while g.last() == Some(&0) {
        g.pop();
    }
    Ok(g)
}

/// Long division for dense integer polynomials with unit leading divisor
/// coefficient; `None` when the remainder is nonzero.
fn exact_poly_div(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd].abs(), 1, "divisor must have unit leading coefficient");
    if num.len() < den.len() {
        return if num.iter().all(|&c| c == 0) { Some(Vec::new()) } else { None };
    }
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (dd..num.len()).rev() {
        let q = rem[i] / den[dd];
        if q != 0 {
            quot[i - dd] = q;
            for (j, &dc) in den.iter().enumerate() {
                rem[i - dd + j] -= q * dc;
            }
        }
    }
    if rem.iter().all(|&c| c == 0) {
        Some(quot)
    } else {
        None
    }
}
