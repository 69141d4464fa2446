#pragma once

// Joint-distribution simplex over all c^n label assignments: multi-index
// enumeration, the product embedding T, the summation operator Q, the
// marginalization operator M, their differentials and the entropy toolkit.

#include "msx/common.hpp"

#include <cstddef>
#include <vector>

namespace msx {

// Embeddings allocate c^n doubles; beyond this cap they refuse instead of
// exhausting memory. Override per call (CLI flag --cap).
inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 20;

struct MetaShape {
  int n = 0;
  int c = 0;
  std::size_t size = 0;  // c^n
  static MetaShape make(int n, int c, std::size_t cap = kDefaultSizeCap);
};

// Multi-indices carry one label per node, stored 0-based; flat order is
// row-major with the first node most significant, so for n=2 the flat vector
// is the row-major flattening of the outer product of the two rows.
using MultiIndex = std::vector<int>;

std::size_t mindex_encode(const MultiIndex& gamma, int c);
MultiIndex mindex_decode(std::size_t flat, int n, int c);

// Advance gamma to the next multi-index in flat order; returns false after
// the last one wraps around to all zeros.
bool mindex_advance(MultiIndex& gamma, int c);

// T(W): product distribution, entry at gamma = prod_i W(i, gamma_i).
Vec embed_T(const Mat& w, std::size_t cap = kDefaultSizeCap);

// M(x): node-wise marginals, entry (i,j) = sum over gamma with gamma_i = j.
Mat marginalize_M(const Vec& x, int n, int c);

// Q(X): entry at gamma = sum_i X(i, gamma_i).
Vec lift_Q(const Mat& x, std::size_t cap = kDefaultSizeCap);

// Dense matrix of Q acting on row-major vec(X); its transpose represents M.
Mat q_matrix(int n, int c, std::size_t cap = kDefaultSizeCap);

// Differential of T at W in direction V: T(W) (*) Q[V / W].
Vec differential_T(const Mat& w, const Mat& v, std::size_t cap = kDefaultSizeCap);

double entropy(const Vec& p);
double cross_entropy(const Vec& p, const Vec& q);
double kl(const Vec& p, const Vec& q);

// Numerical rank with the SVD threshold sigma > tol_factor * sigma_max, and
// an orthonormal basis of the kernel of Q (as a map on n*c matrices).
int numerical_rank(const Mat& m, double tol_factor = 1e-10);
std::vector<Mat> q_kernel_basis(int n, int c, double tol_factor = 1e-10,
                                std::size_t cap = kDefaultSizeCap);

struct MaxEntropyReport {
  int trials = 0;
  int strictly_lower = 0;          // perturbed entropies strictly below H(T(W))
  double base_entropy = 0.0;       // H(T(W))
  double min_entropy_drop = 0.0;   // min over trials of H(T(W)) - H(p)
  double max_identity_error = 0.0; // |H(p) - (H(T(W)) - KL(p, T(W)))|
  bool all_lower = false;
};

// Samples `trials` feasible perturbations u (marginals unchanged, kernel of M
// via SVD), scales them by bisection to keep T(W) + u strictly positive with
// margin 1e-9, and compares entropies.
MaxEntropyReport max_entropy_check(const Mat& w, int trials, std::uint64_t seed,
                                   std::size_t cap = kDefaultSizeCap);

// Draw one feasible perturbation (kernel of M, scaled as above).
Vec sample_marginal_preserving_perturbation(const Vec& base, int n, int c, Rng& rng,
                                            double margin = 1e-9);

// Sup-norm distance to the product (rank-1) submanifold: ||T(M p) - p||_inf.
double wright_distance(const Vec& p, int n, int c);
bool is_on_wright_manifold(const Vec& p, int n, int c, double tol);

}  // namespace msx
