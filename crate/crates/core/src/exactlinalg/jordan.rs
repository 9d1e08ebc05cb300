//! Jordan block profiles of nilpotent matrices.

use serde::Serialize;

use super::matrix::RationalMatrix;
use super::LinalgError;

/// Multiset of Jordan block sizes, stored in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct JordanProfile {
    blocks: Vec<usize>,
}

impl JordanProfile {
    pub fn new(mut blocks: Vec<usize>) -> Self {
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        JordanProfile { blocks }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn total(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn max_block(&self) -> usize {
        self.blocks.first().copied().unwrap_or(0)
    }

    /// Number of blocks of size at least `k` (`k >= 1`).
    pub fn blocks_at_least(&self, k: usize) -> usize {
        self.blocks.iter().take_while(|&&b| b >= k).count()
    }

    /// Profile with every multiplicity multiplied by `factor`.
    pub fn scaled(&self, factor: usize) -> Self {
        let mut blocks = Vec::with_capacity(self.blocks.len() * factor);
        for &b in &self.blocks {
            blocks.extend(std::iter::repeat(b).take(factor));
        }
        JordanProfile { blocks }
    }

    /// Distinct block sizes in decreasing order with their multiplicities.
    pub fn sizes_with_multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &b in &self.blocks {
            match out.last_mut() {
                Some((size, mult)) if *size == b => *mult += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }
}

impl std::fmt::Display for JordanProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

/// Jordan profile of a nilpotent matrix from its power ranks: the number of
/// blocks of size at least `k` is `rank(N^(k-1)) - rank(N^k)`.
///
/// Nilpotency is verified along the way; the rank sequence of a nilpotent
/// matrix strictly decreases until it hits zero, so a repeated nonzero rank
/// (or a nonzero rank persisting at exponent = dimension) proves the matrix
/// is not nilpotent.
pub fn nilpotent_jordan_profile(n: &RationalMatrix) -> Result<JordanProfile, LinalgError> {
    if !n.is_square() {
        return Err(LinalgError::NotSquare { rows: n.nrows(), cols: n.ncols() });
    }
    let dim = n.nrows();
    if dim == 0 {
        return Ok(JordanProfile::new(Vec::new()));
    }
    let mut ranks = vec![dim];
    let mut power = n.clone();
    loop {
        let r = power.rank();
        let prev = *ranks.last().unwrap();
        if r == prev || ranks.len() > dim {
            if r == 0 {
                break;
            }
            return Err(LinalgError::NotNilpotent { dim });
        }
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = power.mul(n)?;
    }
    let mut blocks = Vec::new();
    // ranks[k] = rank(N^k); at_least(k) = ranks[k-1] - ranks[k].
    let at_least = |k: usize| -> usize {
        let rk = |i: usize| ranks.get(i).copied().unwrap_or(0);
        rk(k - 1) - rk(k)
    };
    let max_size = ranks.len() - 1;
    for size in 1..=max_size {
        let exactly = at_least(size) - if size < max_size { at_least(size + 1) } else { 0 };
        blocks.extend(std::iter::repeat(size).take(exactly));
    }
    let profile = JordanProfile::new(blocks);
    debug_assert_eq!(profile.total(), dim);
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::super::matrix::int;
    use super::*;

    fn shift_block(n: usize) -> RationalMatrix {
        // Single nilpotent Jordan block: e_i -> e_{i+1}.
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n.saturating_sub(1) {
            m[(i + 1, i)] = int(1);
        }
        m
    }

    fn direct_sum(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
        let n = a.nrows() + b.nrows();
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.nrows() {
            for j in 0..b.ncols() {
                m[(a.nrows() + i, a.ncols() + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    #[test]
    fn single_block_profile() {
        let n = shift_block(4);
        let p = nilpotent_jordan_profile(&n).unwrap();
        assert_eq!(p.blocks(), &[4]);
    }

    #[test]
    fn mixed_blocks_profile() {
        let n = direct_sum(&shift_block(3), &direct_sum(&shift_block(1), &shift_block(2)));
        let p = nilpotent_jordan_profile(&n).unwrap();
        assert_eq!(p.blocks(), &[3, 2, 1]);
        assert_eq!(p.total(), 6);
        assert_eq!(p.blocks_at_least(2), 2);
        assert_eq!(p.sizes_with_multiplicities(), vec![(3, 1), (2, 1), (1, 1)]);
    }

    #[test]
    fn zero_matrix_is_all_singletons() {
        let p = nilpotent_jordan_profile(&RationalMatrix::zero(3, 3)).unwrap();
        assert_eq!(p.blocks(), &[1, 1, 1]);
    }

    #[test]
    fn non_nilpotent_is_rejected() {
        let m = RationalMatrix::identity(2);
        assert!(matches!(
            nilpotent_jordan_profile(&m),
            Err(LinalgError::NotNilpotent { .. })
        ));
    }

    #[test]
    fn profile_scaling() {
        let p = JordanProfile::new(vec![3, 1]);
        assert_eq!(p.scaled(2).blocks(), &[3, 3, 1, 1]);
    }
}
