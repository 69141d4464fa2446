#include "msx/simplex.hpp"

#include <cmath>

namespace msx {

namespace {

void require_same_size(const Vec& a, const Vec& b, const char* who) {
  if (a.size() != b.size())
    throw DimensionError(std::string(who) + ": size mismatch " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
}

void require_same_shape(const Mat& a, const Mat& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(who) + ": shape mismatch");
}

}  // namespace

bool is_simplex_point(const Vec& p, double sum_tol) {
  if (p.size() == 0) return false;
  if ((p.array() <= 0.0).any()) return false;
  return std::abs(p.sum() - 1.0) <= sum_tol;
}

bool is_tangent(const Vec& v, double sum_tol) {
  return v.size() > 0 && std::abs(v.sum()) <= sum_tol;
}

bool is_assignment_state(const Mat& w, double sum_tol) {
  if (w.rows() == 0 || w.cols() == 0) return false;
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    if (!is_simplex_point(w.row(i).transpose(), sum_tol)) return false;
  return true;
}

bool is_assignment_tangent(const Mat& v, double sum_tol) {
  if (v.rows() == 0 || v.cols() == 0) return false;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (std::abs(v.row(i).sum()) > sum_tol) return false;
  return true;
}

SimplexPoint SimplexPoint::make(Vec v, double sum_tol) {
  if (!is_simplex_point(v, sum_tol))
    throw Error("SimplexPoint: entries must be strictly positive and sum to 1");
  return SimplexPoint{std::move(v)};
}

TangentVec TangentVec::make(Vec v, double sum_tol) {
  if (!is_tangent(v, sum_tol)) throw Error("TangentVec: entries must sum to 0");
  return TangentVec{std::move(v)};
}

AssignmentState AssignmentState::make(Mat w, double sum_tol) {
  if (!is_assignment_state(w, sum_tol))
    throw Error("AssignmentState: every row must be a simplex point");
  return AssignmentState{std::move(w)};
}

AssignmentTangent AssignmentTangent::make(Mat v, double sum_tol) {
  if (!is_assignment_tangent(v, sum_tol))
    throw Error("AssignmentTangent: every row must sum to 0");
  return AssignmentTangent{std::move(v)};
}

Vec project_tangent(const Vec& x) {
  return x.array() - x.mean();
}

Vec replicator_apply(const Vec& p, const Vec& x) {
  require_same_size(p, x, "replicator_apply");
  const double mean_payoff = p.dot(x);
  return p.array() * (x.array() - mean_payoff);
}

Vec lift(const Vec& p, const Vec& v) {
  require_same_size(p, v, "lift");
  const Vec shifted = (v.array() - v.maxCoeff()).exp();
  const Vec numer = p.array() * shifted.array();
  const double denom = numer.sum();
  if (!(denom > 0.0) || !std::isfinite(denom))
    throw NumericalError("lift: degenerate normalization");
  return numer / denom;
}

Vec lift_inverse(const Vec& p, const Vec& q) {
  require_same_size(p, q, "lift_inverse");
  return project_tangent(q.array().log().matrix() - p.array().log().matrix());
}

double fisher_rao_inner(const Vec& p, const Vec& u, const Vec& v) {
  require_same_size(p, u, "fisher_rao_inner");
  require_same_size(p, v, "fisher_rao_inner");
  return ((u.array() / p.array()) * v.array()).sum();
}

Vec chart_e(const Vec& p) {
  const Vec logp = p.array().log();
  const Vec centered = logp.array() - logp.mean();
  return centered.head(p.size() - 1);
}

Vec chart_e_inv(const Vec& theta) {
  const Eigen::Index c = theta.size() + 1;
  Vec full(c);
  full.head(c - 1) = theta;
  full[c - 1] = -theta.sum();
  const Vec e = (full.array() - full.maxCoeff()).exp();
  return e / e.sum();
}

Vec chart_m(const Vec& p) {
  return p.head(p.size() - 1);
}

Vec chart_m_inv(const Vec& mu) {
  const double tail = 1.0 - mu.sum();
  if ((mu.array() <= 0.0).any() || tail <= 0.0)
    throw Error("chart_m_inv: coordinates must be positive with sum < 1");
  Vec p(mu.size() + 1);
  p.head(mu.size()) = mu;
  p[mu.size()] = tail;
  return p;
}

Vec barycenter(int c) {
  return Vec::Constant(c, 1.0 / c);
}

Mat barycenter_state(int n, int c) {
  return Mat::Constant(n, c, 1.0 / c);
}

Vec clamp_interior(Vec p, double eps) {
  p = p.cwiseMax(eps);
  return p / p.sum();
}

Mat clamp_interior_rows(Mat w, double eps) {
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    w.row(i) = clamp_interior(w.row(i).transpose(), eps).transpose();
  return w;
}

Mat project_tangent_rows(const Mat& x) {
  Mat out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    out.row(i) = project_tangent(x.row(i).transpose()).transpose();
  return out;
}

Mat replicator_apply_rows(const Mat& w, const Mat& x) {
  require_same_shape(w, x, "replicator_apply_rows");
  Mat out(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    out.row(i) = replicator_apply(w.row(i).transpose(), x.row(i).transpose()).transpose();
  return out;
}

Mat lift_rows(const Mat& w, const Mat& v) {
  require_same_shape(w, v, "lift_rows");
  Mat out(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    out.row(i) = lift(w.row(i).transpose(), v.row(i).transpose()).transpose();
  return out;
}

Mat lift_inverse_rows(const Mat& w, const Mat& q) {
  require_same_shape(w, q, "lift_inverse_rows");
  Mat out(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    out.row(i) = lift_inverse(w.row(i).transpose(), q.row(i).transpose()).transpose();
  return out;
}

}  // namespace msx
