#pragma once

// Fisher-Rao geometry primitives on a single probability simplex and their
// node-wise extension to products of simplices (one row per population).

#include "msx/common.hpp"

namespace msx {

// Entries are clamped to at least this value (then renormalized) whenever a
// state re-enters the manifold after a numerical step.
inline constexpr double kBoundaryEps = 1e-15;

// -- validated value types ---------------------------------------------------

struct SimplexPoint {
  Vec values;
  static SimplexPoint make(Vec v, double sum_tol = 1e-12);
  int dim() const { return static_cast<int>(values.size()); }
};

struct TangentVec {
  Vec values;
  static TangentVec make(Vec v, double sum_tol = 1e-12);
};

struct AssignmentState {
  Mat rows;  // n x c, each row a simplex point
  static AssignmentState make(Mat w, double sum_tol = 1e-12);
  int n() const { return static_cast<int>(rows.rows()); }
  int c() const { return static_cast<int>(rows.cols()); }
};

struct AssignmentTangent {
  Mat rows;  // n x c, each row zero-sum
  static AssignmentTangent make(Mat v, double sum_tol = 1e-12);
};

bool is_simplex_point(const Vec& p, double sum_tol = 1e-12);
bool is_tangent(const Vec& v, double sum_tol = 1e-12);
bool is_assignment_state(const Mat& w, double sum_tol = 1e-12);
bool is_assignment_tangent(const Mat& v, double sum_tol = 1e-12);

// -- single-simplex operations -----------------------------------------------

// Orthogonal projection onto the zero-sum tangent space: x - mean(x) * 1.
Vec project_tangent(const Vec& x);

// Replicator operator applied to a payoff vector: Diag(p) x - p <p, x>.
Vec replicator_apply(const Vec& p, const Vec& x);

// Lifting map p (*) exp(v) / <p, exp(v)>, computed with a max-shift of v so
// large payoffs cannot overflow.
Vec lift(const Vec& p, const Vec& v);

// Inverse of lift(p, .) on the tangent space: projected log-ratio.
Vec lift_inverse(const Vec& p, const Vec& q);

// Fisher-Rao inner product <u / p, v>.
double fisher_rao_inner(const Vec& p, const Vec& u, const Vec& v);

// Global exponential chart: theta = (log p - mean(log p)) truncated to the
// first c-1 entries; inverse normalizes exp([theta; -sum(theta)]).
Vec chart_e(const Vec& p);
Vec chart_e_inv(const Vec& theta);

// Mixture chart: first c-1 coordinates; inverse appends 1 - sum(mu) and
// rejects mu outside the open simplex.
Vec chart_m(const Vec& p);
Vec chart_m_inv(const Vec& mu);

Vec barycenter(int c);
Mat barycenter_state(int n, int c);

// Clamp entries to >= eps and renormalize to sum 1 (per row).
Vec clamp_interior(Vec p, double eps = kBoundaryEps);
Mat clamp_interior_rows(Mat w, double eps = kBoundaryEps);

// -- node-wise operations (one simplex per matrix row) -------------------------

Mat project_tangent_rows(const Mat& x);
Mat replicator_apply_rows(const Mat& w, const Mat& x);
Mat lift_rows(const Mat& w, const Mat& v);
Mat lift_inverse_rows(const Mat& w, const Mat& q);

}  // namespace msx
