#include "msx/common.hpp"

#include "msx/simplex.hpp"

namespace msx {

Vec vec_row(const Mat& m) {
  Vec out(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[k++] = m(i, j);
  return out;
}

Mat unvec_row(const Vec& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols)
    throw DimensionError("unvec_row: vector of size " + std::to_string(v.size()) +
                         " cannot fill " + std::to_string(rows) + "x" + std::to_string(cols));
  Mat out(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = v[k++];
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec random_interior_point(Rng& rng, int c, double min_mass) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vec p(c);
  for (int j = 0; j < c; ++j) {
    double u = unif(rng);
    while (u <= 0.0) u = unif(rng);
    p[j] = -std::log(u);  // Exp(1) draws, normalized below -> Dirichlet(1)
  }
  p /= p.sum();
  p = (1.0 - min_mass) * p + Vec::Constant(c, min_mass / c);
  return p / p.sum();
}

Mat random_interior_state(Rng& rng, int n, int c, double min_mass) {
  Mat w(n, c);
  for (int i = 0; i < n; ++i) w.row(i) = random_interior_point(rng, c, min_mass).transpose();
  return w;
}

Mat random_near_vertex_state(Rng& rng, int n, int c, double gap) {
  Mat w(n, c);
  std::uniform_int_distribution<int> pick(0, c - 1);
  for (int i = 0; i < n; ++i) {
    Vec noise = random_interior_point(rng, c, 0.1);
    Vec p = gap * noise;
    p[pick(rng)] += 1.0 - gap;
    w.row(i) = (p / p.sum()).transpose();
  }
  return w;
}

Vec random_tangent(Rng& rng, int c, double amp) {
  std::uniform_real_distribution<double> unif(-amp, amp);
  Vec v(c);
  for (int j = 0; j < c; ++j) v[j] = unif(rng);
  return project_tangent(v);
}

Mat random_tangent_rows(Rng& rng, int n, int c, double amp) {
  Mat v(n, c);
  for (int i = 0; i < n; ++i) v.row(i) = random_tangent(rng, c, amp).transpose();
  return v;
}

}  // namespace msx
