//! Finite chain complexes, combinatorial Laplacians and harmonic spaces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::linalg::{kernel_basis, kernel_lattice, rank, smith_normal_form, IntMatrix, RatVector};

/// Chain complex `C_d → ⋯ → C_0` with integer boundary matrices
/// `∂ᵢ : C_i → C_{i−1}` for `1 ≤ i ≤ d`. Boundaries outside that range are
/// zero maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

/// An element of `C_dim` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub dim: usize,
    pub coeffs: Vec<BigRational>,
}

/// `H_i ≅ ℤ^rank ⊕ ℤ_{t₁} ⊕ ⋯`, with `t₁ | t₂ | ⋯` and every `tⱼ > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Chain {
    pub fn new(dim: usize, coeffs: Vec<BigRational>) -> Self {
        Self { dim, coeffs }
    }

    pub fn from_ints(dim: usize, coeffs: &[BigInt]) -> Self {
        Self { dim, coeffs: coeffs.iter().cloned().map(BigRational::from_integer).collect() }
    }

    pub fn zero(dim: usize, len: usize) -> Self {
        Self { dim, coeffs: vec![BigRational::zero(); len] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `x ∘ x` under the inner product making the cells orthonormal.
    pub fn energy(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c * c)
    }
}

impl ChainComplex {
    /// Validates shapes and `∂_{i−1} ∂_i = 0`. `dims` lists `|X_0|, …, |X_d|`.
    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if dims.is_empty() || boundaries.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} cell counts need {} boundary maps, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let i = k + 1;
            if b.rows() != dims[i - 1] || b.cols() != dims[i] {
                return Err(Error::DimensionMismatch(format!(
                    "∂{i} is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    dims[i - 1],
                    dims[i]
                )));
            }
        }
        for k in 1..boundaries.len() {
            if !(&boundaries[k - 1] * &boundaries[k]).is_zero() {
                return Err(Error::BoundaryNotClosed { lower: k, upper: k + 1 });
            }
        }
        Ok(Self { dims, boundaries })
    }

    /// The 1-dimensional complex of a graph.
    pub fn from_graph(g: &Multigraph) -> Self {
        Self { dims: vec![g.vertex_count(), g.edge_count()], boundaries: vec![g.incidence_matrix()] }
    }

    /// The 2-dimensional complex `(G, faces)`; `faces` is `|E| × r`.
    pub fn from_graph_and_faces(g: &Multigraph, faces: &IntMatrix) -> Result<Self> {
        Self::new(vec![g.vertex_count(), g.edge_count(), faces.cols()], vec![g.incidence_matrix(), faces.clone()])
    }

    pub fn top_dim(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn cell_count(&self, i: usize) -> usize {
        self.dims.get(i).copied().unwrap_or(0)
    }

    /// `∂_i`, with zero maps of the right shape outside `1..=d`.
    pub fn boundary(&self, i: usize) -> IntMatrix {
        if i >= 1 && i <= self.boundaries.len() {
            self.boundaries[i - 1].clone()
        } else if i == 0 {
            IntMatrix::zeros(0, self.dims[0])
        } else {
            IntMatrix::zeros(self.cell_count(i - 1), self.cell_count(i))
        }
    }

    fn check_dim(&self, i: usize) -> Result<()> {
        if i > self.top_dim() {
            return Err(Error::DimensionOutOfRange { dim: i, top: self.top_dim() });
        }
        Ok(())
    }

    /// `Δ_i = ∂_iᵗ ∂_i + ∂_{i+1} ∂_{i+1}ᵗ`.
    pub fn laplacian(&self, i: usize) -> Result<IntMatrix> {
        self.check_dim(i)?;
        let down = self.boundary(i);
        let up = self.boundary(i + 1);
        (&down.transpose() * &down).checked_add(&(&up * &up.transpose()))
    }

    /// Basis of `ker ∂_i ∩ ker ∂_{i+1}ᵗ`, as primitive integer vectors with
    /// positive leading entry.
    pub fn harmonic_basis(&self, i: usize) -> Result<Vec<RatVector>> {
        self.check_dim(i)?;
        let stacked = self.boundary(i).vstack(&self.boundary(i + 1).transpose())?;
        Ok(kernel_basis(&stacked).iter().map(|v| RatVector::from_ints(v)).collect())
    }

    /// `H_i = ker ∂_i / im ∂_{i+1}`. Torsion comes from the Smith form of
    /// `∂_{i+1}` written in a lattice basis of `ker ∂_i`.
    pub fn homology(&self, i: usize) -> Result<HomologyGroup> {
        self.check_dim(i)?;
        let lattice = kernel_lattice(&self.boundary(i));
        let up = self.boundary(i + 1);
        let coords = &lattice.coordinates * &up;
        let snf = smith_normal_form(&coords);
        let rank = lattice.basis.cols() - snf.diag.len();
        let torsion = snf.diag.into_iter().filter(|d| !d.is_one()).collect();
        Ok(HomologyGroup { rank, torsion })
    }

    /// Whether a 0-chain is harmonic, i.e. `∂₁∂₁ᵗ h = 0`: every vertex value
    /// equals the mean over its non-loop incident edges of the neighbor
    /// values.
    pub fn check_mean_value(&self, h: &Chain) -> Result<bool> {
        if self.top_dim() < 1 {
            return Err(Error::DimensionOutOfRange { dim: 1, top: self.top_dim() });
        }
        if h.dim != 0 || h.coeffs.len() != self.dims[0] {
            return Err(Error::DimensionMismatch(format!(
                "expected a 0-chain of length {}, got a {}-chain of length {}",
                self.dims[0],
                h.dim,
                h.coeffs.len()
            )));
        }
        let d1 = self.boundary(1);
        let coboundary = d1.transpose().mul_rat_vec(&h.coeffs);
        Ok(d1.mul_rat_vec(&coboundary).iter().all(Zero::is_zero))
    }

    /// Dimension of `ker Δ_i` over ℚ.
    pub fn laplacian_nullity(&self, i: usize) -> Result<usize> {
        let l = self.laplacian(i)?;
        Ok(l.cols() - rank(&l))
    }
}
