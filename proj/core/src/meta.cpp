#include "msx/meta.hpp"

#include "msx/simplex.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>

namespace msx {

namespace {

void require_dims(int n, int c, const char* who) {
  if (n < 1 || c < 2)
    throw DimensionError(std::string(who) + ": need n >= 1 populations and c >= 2 strategies");
}

std::size_t checked_pow(int n, int c, std::size_t cap, const char* who) {
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > cap / static_cast<std::size_t>(c))
      throw SizeCapError(std::string(who) + ": c^n exceeds size cap " + std::to_string(cap));
    size *= static_cast<std::size_t>(c);
  }
  if (size > cap)
    throw SizeCapError(std::string(who) + ": c^n exceeds size cap " + std::to_string(cap));
  return size;
}

}  // namespace

MetaShape MetaShape::make(int n, int c, std::size_t cap) {
  require_dims(n, c, "MetaShape");
  return MetaShape{n, c, checked_pow(n, c, cap, "MetaShape")};
}

std::size_t mindex_encode(const MultiIndex& gamma, int c) {
  std::size_t flat = 0;
  for (int label : gamma) {
    if (label < 0 || label >= c)
      throw DimensionError("mindex_encode: label " + std::to_string(label) +
                           " out of range [0, " + std::to_string(c) + ")");
    flat = flat * static_cast<std::size_t>(c) + static_cast<std::size_t>(label);
  }
  return flat;
}

MultiIndex mindex_decode(std::size_t flat, int n, int c) {
  require_dims(n, c, "mindex_decode");
  MultiIndex gamma(n);
  for (int i = n - 1; i >= 0; --i) {
    gamma[i] = static_cast<int>(flat % static_cast<std::size_t>(c));
    flat /= static_cast<std::size_t>(c);
  }
  if (flat != 0) throw DimensionError("mindex_decode: flat index out of range");
  return gamma;
}

bool mindex_advance(MultiIndex& gamma, int c) {
  for (int i = static_cast<int>(gamma.size()) - 1; i >= 0; --i) {
    if (++gamma[i] < c) return true;
    gamma[i] = 0;
  }
  return false;
}

Vec embed_T(const Mat& w, std::size_t cap) {
  const int n = static_cast<int>(w.rows());
  const int c = static_cast<int>(w.cols());
  const MetaShape shape = MetaShape::make(n, c, cap);
  Vec p(shape.size);
  MultiIndex gamma(n, 0);
  for (std::size_t k = 0; k < shape.size; ++k) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= w(i, gamma[i]);
    p[static_cast<Eigen::Index>(k)] = prod;
    mindex_advance(gamma, c);
  }
  return p;
}

Mat marginalize_M(const Vec& x, int n, int c) {
  require_dims(n, c, "marginalize_M");
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(c);
    if (size > static_cast<std::size_t>(x.size()))
      throw DimensionError("marginalize_M: vector length is not c^n");
  }
  if (size != static_cast<std::size_t>(x.size()))
    throw DimensionError("marginalize_M: vector length is not c^n");
  Mat out = Mat::Zero(n, c);
  MultiIndex gamma(n, 0);
  for (std::size_t k = 0; k < size; ++k) {  // flat-index ascending, deterministic
    const double v = x[static_cast<Eigen::Index>(k)];
    for (int i = 0; i < n; ++i) out(i, gamma[i]) += v;
    mindex_advance(gamma, c);
  }
  return out;
}

Vec lift_Q(const Mat& x, std::size_t cap) {
  const int n = static_cast<int>(x.rows());
  const int c = static_cast<int>(x.cols());
  const MetaShape shape = MetaShape::make(n, c, cap);
  Vec out(shape.size);
  MultiIndex gamma(n, 0);
  for (std::size_t k = 0; k < shape.size; ++k) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += x(i, gamma[i]);
    out[static_cast<Eigen::Index>(k)] = sum;
    mindex_advance(gamma, c);
  }
  return out;
}

Mat q_matrix(int n, int c, std::size_t cap) {
  const MetaShape shape = MetaShape::make(n, c, cap);
  Mat q = Mat::Zero(static_cast<Eigen::Index>(shape.size), static_cast<Eigen::Index>(n) * c);
  MultiIndex gamma(n, 0);
  for (std::size_t k = 0; k < shape.size; ++k) {
    for (int i = 0; i < n; ++i) q(static_cast<Eigen::Index>(k), i * c + gamma[i]) = 1.0;
    mindex_advance(gamma, c);
  }
  return q;
}

Vec differential_T(const Mat& w, const Mat& v, std::size_t cap) {
  if (w.rows() != v.rows() || w.cols() != v.cols())
    throw DimensionError("differential_T: state/direction shape mismatch");
  const Vec base = embed_T(w, cap);
  const Mat ratio = v.array() / w.array();
  return base.array() * lift_Q(ratio, cap).array();
}

double entropy(const Vec& p) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (p[k] > 0.0) h -= p[k] * std::log(p[k]);
  return h;
}

double cross_entropy(const Vec& p, const Vec& q) {
  if (p.size() != q.size()) throw DimensionError("cross_entropy: size mismatch");
  double h = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (p[k] > 0.0) h -= p[k] * std::log(q[k]);
  return h;
}

double kl(const Vec& p, const Vec& q) {
  if (p.size() != q.size()) throw DimensionError("kl: size mismatch");
  double d = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (p[k] > 0.0) d += p[k] * std::log(p[k] / q[k]);
  return d;
}

int numerical_rank(const Mat& m, double tol_factor) {
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  const double threshold = tol_factor * sigma[0];
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] > threshold) ++rank;
  return rank;
}

std::vector<Mat> q_kernel_basis(int n, int c, double tol_factor, std::size_t cap) {
  const Mat q = q_matrix(n, c, cap);
  Eigen::JacobiSVD<Mat> svd(q, Eigen::ComputeThinV);
  const Vec& sigma = svd.singularValues();
  const double threshold = sigma.size() > 0 ? tol_factor * sigma[0] : 0.0;
  std::vector<Mat> basis;
  for (Eigen::Index i = 0; i < svd.matrixV().cols(); ++i) {
    const bool in_kernel = i >= sigma.size() || sigma[i] <= threshold;
    if (in_kernel) basis.push_back(unvec_row(svd.matrixV().col(i), n, c));
  }
  return basis;
}

namespace {

// Orthogonal projector data for the feasible directions {u : Mu = 0}: columns
// of U spanning the range of the Q matrix, computed once per shape.
struct RangeBasis {
  Mat u_range;  // N x rank, orthonormal
};

RangeBasis make_range_basis(int n, int c, std::size_t cap) {
  const Mat q = q_matrix(n, c, cap);
  Eigen::JacobiSVD<Mat> svd(q, Eigen::ComputeThinU);
  const Vec& sigma = svd.singularValues();
  const double threshold = 1e-10 * sigma[0];
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] > threshold) ++rank;
  return RangeBasis{svd.matrixU().leftCols(rank)};
}

Vec sample_kernel_direction(const RangeBasis& basis, Rng& rng, Eigen::Index size) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Vec r(size);
    for (Eigen::Index k = 0; k < size; ++k) r[k] = gauss(rng);
    Vec u = r - basis.u_range * (basis.u_range.transpose() * r);
    const double norm = u.norm();
    if (norm > 1e-8) return u / norm;
  }
}

// Largest s in (0, hi] keeping min(base + s*u) >= margin, by bisection.
double bisect_feasible_scale(const Vec& base, const Vec& u, double margin, double hi) {
  auto feasible = [&](double s) { return ((base + s * u).array() >= margin).all(); };
  if (!feasible(0.0)) return 0.0;
  double lo = 0.0;
  if (feasible(hi)) return hi;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

Vec sample_marginal_preserving_perturbation(const Vec& base, int n, int c, Rng& rng,
                                            double margin) {
  static thread_local int cached_n = -1, cached_c = -1;
  static thread_local RangeBasis cached;
  if (cached_n != n || cached_c != c) {
    cached = make_range_basis(n, c, static_cast<std::size_t>(base.size()));
    cached_n = n;
    cached_c = c;
  }
  const Vec dir = sample_kernel_direction(cached, rng, base.size());
  const double scale = bisect_feasible_scale(base, dir, margin, 2.0);
  return 0.5 * scale * dir;
}

MaxEntropyReport max_entropy_check(const Mat& w, int trials, std::uint64_t seed,
                                   std::size_t cap) {
  const int n = static_cast<int>(w.rows());
  const int c = static_cast<int>(w.cols());
  const Vec base = embed_T(w, cap);
  const double h_base = entropy(base);

  Rng rng(seed);
  MaxEntropyReport report;
  report.trials = trials;
  report.base_entropy = h_base;
  report.min_entropy_drop = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const Vec u = sample_marginal_preserving_perturbation(base, n, c, rng);
    const Vec p = base + u;
    const double h = entropy(p);
    const double identity_err = std::abs(h - (h_base - kl(p, base)));
    report.max_identity_error = std::max(report.max_identity_error, identity_err);
    report.min_entropy_drop = std::min(report.min_entropy_drop, h_base - h);
    if (h < h_base) ++report.strictly_lower;
  }
  report.all_lower = report.strictly_lower == trials;
  return report;
}

double wright_distance(const Vec& p, int n, int c) {
  const Vec projected = embed_T(marginalize_M(p, n, c), static_cast<std::size_t>(p.size()));
  return (projected - p).cwiseAbs().maxCoeff();
}

bool is_on_wright_manifold(const Vec& p, int n, int c, double tol) {
  return wright_distance(p, n, c) <= tol;
}

}  // namespace msx
