// spectral.hpp — Clustered Hermitian eigendecomposition and the calculi built on it:
// scalar functions of one Hermitian matrix, the joint calculus for commuting pairs,
// pseudo-inverse powers, and the similarity identity check.
#pragma once

#include <functional>
#include <vector>

#include "pwcalc/hermitian.hpp"

namespace pwcalc {

struct SpectralCluster {
  double eigenvalue;  // mean of the merged eigenvalues
  Matrix projector;   // orthogonal projector onto the merged eigenspace
};

// Clusters are ordered by strictly increasing eigenvalue; adjacent gaps exceed the
// effective tolerance cluster_tol · max(1, ||M||₂), which is what cluster_tol() reports.
class SpectralDecomposition {
 public:
  SpectralDecomposition(std::vector<SpectralCluster> clusters, double effective_tol,
                        Eigen::Index dim);

  const std::vector<SpectralCluster>& clusters() const { return clusters_; }
  double cluster_tol() const { return cluster_tol_; }
  Eigen::Index dim() const { return dim_; }

  // max |eigenvalue|; 0 for the zero matrix.
  double norm2() const;

  // Checks projector completeness, pairwise orthogonality, and reconstruction of
  // `source` to tol · dim. Throws PreconditionViolation on failure. Test hook.
  void validate(const Matrix& source, double tol = 1e-10) const;

 private:
  std::vector<SpectralCluster> clusters_;
  double cluster_tol_;
  Eigen::Index dim_;
};

// Eigendecomposition with eigenvalues merged when adjacent gaps are at most
// cluster_tol · max(1, ||M||₂).
SpectralDecomposition eig_hermitian(const HermitianMatrix& m,
                                    double cluster_tol = default_cluster_tol);

// Σ φ(λ) P_λ over clusters. φ values must be finite: IEEE ±inf raises InfiniteValue,
// NaN raises DomainError.
HermitianMatrix apply_scalar_function(const HermitianMatrix& m,
                                      const std::function<double(double)>& phi,
                                      double cluster_tol = default_cluster_tol);

// Same sum with extended-real φ: finite values accumulate into F, +inf clusters
// accumulate their projectors into K.
ExtendedOperator apply_scalar_function_extended(const HermitianMatrix& m,
                                                const std::function<ExtendedReal(double)>& phi,
                                                double cluster_tol = default_cluster_tol);

// Joint calculus for a commuting pair: Σ f(λ,μ) P_λ Q_μ, Hermitized. Commutation is
// gated by ||ST − TS||₂ ≤ 1e-9 · (1 + ||S||₂·||T||₂).
HermitianMatrix joint_calculus_commuting(const HermitianMatrix& s, const HermitianMatrix& t,
                                         const std::function<double(double, double)>& f,
                                         double cluster_tol = default_cluster_tol);

// λ ↦ λ^p on eigenvalues above rank_tol · ||M||₂, 0 on the numerical kernel.
// Requires M PSD within the same tolerance.
HermitianMatrix pinv_power(const HermitianMatrix& m, double p,
                           double rank_tol = default_rank_tol);

// Orthogonal projector onto the numerical kernel: eigenvalues with |λ| at most
// rank_tol · max(1, ||M||₂).
Matrix kernel_projector(const HermitianMatrix& m, double rank_tol = default_rank_tol);

// ||g(S⁻¹TS) − S⁻¹ g(T) S||₂ for invertible S with S⁻¹TS self-adjoint within herm_tol.
// Test utility for the similarity identity.
double similarity_identity_check(const Matrix& s, const HermitianMatrix& t,
                                 const std::function<double(double)>& g,
                                 double herm_tol = default_herm_tol);

}  // namespace pwcalc
