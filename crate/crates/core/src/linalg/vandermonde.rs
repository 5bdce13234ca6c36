//! Moment systems `sum_i c_i h_i^d = 0, 0 <= d <= m` and their solution spaces.

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{powu, Scalar};

/// Nodes `h` and the highest moment `m` that must vanish. `m = -1` means no
/// constraint at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VandermondeSystem<T> {
    pub nodes: Vec<T>,
    pub max_power: i32,
}

/// Exact distinctness check; reports the first repeated pair.
pub fn check_distinct<T: Scalar>(nodes: &[T]) -> Result<()> {
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::DegenerateNodes {
                    first: i,
                    second: j,
                    value: nodes[i].to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Rows `d = 0..=max_power`, entry `(d, i) = weights[i] * nodes[i]^d`.
pub fn moment_matrix<T: Scalar>(nodes: &[T], weights: Option<&[T]>, max_power: i32) -> Matrix<T> {
    let rows = usize::try_from(max_power + 1).unwrap_or(0);
    let mut m = Matrix::zeros(rows, nodes.len());
    for d in 0..rows {
        for (i, h) in nodes.iter().enumerate() {
            let w = weights.map_or_else(T::one, |w| w[i].clone());
            m.set(d, i, w * powu(h, d as u32));
        }
    }
    m
}

impl<T: Scalar> VandermondeSystem<T> {
    pub fn new(nodes: Vec<T>, max_power: i32) -> Self {
        VandermondeSystem { nodes, max_power }
    }

    pub fn matrix(&self) -> Matrix<T> {
        moment_matrix(&self.nodes, None, self.max_power)
    }
}

/// Kernel basis of a moment system with distinct nodes; its dimension is
/// `n - m - 1`.
pub fn vandermonde_nullspace<T: Scalar>(sys: &VandermondeSystem<T>) -> Result<Vec<Vec<T>>> {
    check_distinct(&sys.nodes)?;
    let n = sys.nodes.len() as i32;
    if sys.max_power < -1 || sys.max_power > n - 1 {
        return Err(Error::InvalidInput(format!(
            "max power {} outside -1..={} for {n} nodes",
            sys.max_power,
            n - 1
        )));
    }
    let basis = sys.matrix().nullspace();
    debug_assert_eq!(basis.len() as i32, n - sys.max_power - 1);
    Ok(basis)
}

/// Closed-form weights `1 / prod_{j != i}(h_i - h_j)`, which annihilate the
/// moments of degree `<= n - 2`.
pub fn lagrange_weights<T: Scalar>(nodes: &[T]) -> Result<Vec<T>> {
    check_distinct(nodes)?;
    Ok(nodes
        .iter()
        .enumerate()
        .map(|(i, hi)| {
            let prod = nodes
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(T::one(), |acc, (_, hj)| acc * (hi.clone() - hj.clone()));
            T::one() / prod
        })
        .collect())
}

/// Solutions `k` of `sum_i alpha_i k_i h_i^d = 0, 0 <= d <= m'`, obtained as
/// `k_i = beta_i / alpha_i` from the plain moment kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSpace<T> {
    pub alpha: Vec<T>,
    pub basis: Vec<Vec<T>>,
}

impl<T: Scalar> KSpace<T> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `sum_j coords[j] * basis[j]`.
    pub fn combine(&self, coords: &[T]) -> Result<Vec<T>> {
        if coords.len() != self.basis.len() {
            return Err(Error::LengthMismatch { left: self.basis.len(), right: coords.len() });
        }
        let mut k = vec![T::zero(); self.alpha.len()];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (ki, bi) in k.iter_mut().zip(b) {
                *ki = ki.clone() + c.clone() * bi.clone();
            }
        }
        Ok(k)
    }
}

/// See [`KSpace`]. Requires distinct nodes and nonzero `alpha`; the space is
/// well defined whether or not `alpha` itself annihilates any moments.
pub fn k_space<T: Scalar>(nodes: &[T], alpha: &[T], max_power: i32) -> Result<KSpace<T>> {
    if nodes.len() != alpha.len() {
        return Err(Error::LengthMismatch { left: nodes.len(), right: alpha.len() });
    }
    check_distinct(nodes)?;
    if let Some(index) = alpha.iter().position(|a| a.is_zero()) {
        return Err(Error::ZeroAlpha { index });
    }
    let betas = vandermonde_nullspace(&VandermondeSystem::new(nodes.to_vec(), max_power))?;
    let basis = betas
        .into_iter()
        .map(|beta| {
            let mut k: Vec<T> =
                beta.iter().zip(alpha).map(|(b, a)| b.clone() / a.clone()).collect();
            T::normalize_direction(&mut k);
            k
        })
        .collect();
    Ok(KSpace { alpha: alpha.to_vec(), basis })
}

/// Whether two families of vectors span the same subspace (RREF comparison).
pub fn same_span<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> bool {
    let cols = a.first().or(b.first()).map_or(0, Vec::len);
    let ra = Matrix::from_rows(cols, a.to_vec()).map(|m| m.rref());
    let rb = Matrix::from_rows(cols, b.to_vec()).map(|m| m.rref());
    match (ra, rb) {
        (Ok(ra), Ok(rb)) => {
            ra.rank == rb.rank
                && (0..ra.rank).all(|r| ra.matrix.row(r) == rb.matrix.row(r))
        }
        _ => false,
    }
}
