#include "msx/payoff.hpp"

#include "msx/simplex.hpp"

#include <cmath>

namespace msx {

namespace {

void require_square(const Mat& m, int dim, const char* who) {
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionError(std::string(who) + ": expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " matrix, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
}

void require_finite(const Mat& m, const char* who) {
  if (!m.allFinite()) throw NumericalError(std::string(who) + ": non-finite entries");
}

void require_state_shape(const Mat& w, int n, int c, const char* who) {
  if (w.rows() != n || w.cols() != c)
    throw DimensionError(std::string(who) + ": state must be " + std::to_string(n) + "x" +
                         std::to_string(c));
}

}  // namespace

const char* to_string(PayoffKind kind) {
  switch (kind) {
    case PayoffKind::sflow: return "sflow";
    case PayoffKind::egn: return "egn";
    case PayoffKind::linear: return "linear";
    case PayoffKind::multigame: return "multigame";
    case PayoffKind::potential: return "potential";
    case PayoffKind::custom: return "custom";
  }
  return "unknown";
}

PayoffKind payoff_kind_from_string(const std::string& name) {
  if (name == "sflow") return PayoffKind::sflow;
  if (name == "egn") return PayoffKind::egn;
  if (name == "linear") return PayoffKind::linear;
  if (name == "multigame") return PayoffKind::multigame;
  if (name == "potential") return PayoffKind::potential;
  if (name == "custom") return PayoffKind::custom;
  throw ConfigError("unknown payoff kind '" + name + "'");
}

PayoffModel PayoffModel::sflow(Mat omega) {
  require_finite(omega, "sflow");
  if (omega.rows() != omega.cols()) throw DimensionError("sflow: omega must be square");
  PayoffModel m;
  m.kind_ = PayoffKind::sflow;
  m.n_ = static_cast<int>(omega.rows());
  m.c_ = -1;  // any strategy count; fixed on first eval or by linear_matrix(c)
  m.omega_ = std::move(omega);
  return m;
}

PayoffModel PayoffModel::egn(Mat omega, Mat b) {
  require_finite(omega, "egn");
  require_finite(b, "egn");
  if (omega.rows() != omega.cols()) throw DimensionError("egn: omega must be square");
  if (b.rows() != b.cols()) throw DimensionError("egn: b must be square");
  PayoffModel m;
  m.kind_ = PayoffKind::egn;
  m.n_ = static_cast<int>(omega.rows());
  m.c_ = static_cast<int>(b.rows());
  m.omega_ = std::move(omega);
  m.b_ = std::move(b);
  return m;
}

PayoffModel PayoffModel::linear(int n, int c, Mat abar) {
  require_finite(abar, "linear");
  require_square(abar, n * c, "linear");
  PayoffModel m;
  m.kind_ = PayoffKind::linear;
  m.n_ = n;
  m.c_ = c;
  m.abar_ = std::move(abar);
  return m;
}

PayoffModel PayoffModel::multigame(std::vector<Mat> games) {
  if (games.empty()) throw DimensionError("multigame: need at least one game");
  const int c = static_cast<int>(games.front().rows());
  for (const Mat& g : games) {
    require_finite(g, "multigame");
    require_square(g, c, "multigame");
  }
  PayoffModel m;
  m.kind_ = PayoffKind::multigame;
  m.n_ = static_cast<int>(games.size());
  m.c_ = c;
  m.games_ = std::move(games);
  return m;
}

PayoffModel PayoffModel::quadratic_potential(int n, int c, Mat abar) {
  require_finite(abar, "quadratic_potential");
  require_square(abar, n * c, "quadratic_potential");
  const double asym = (abar - abar.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw Error("quadratic_potential: matrix is not symmetric (max asymmetry " +
                std::to_string(asym) + "); refusing to symmetrize");
  PayoffModel m;
  m.kind_ = PayoffKind::potential;
  m.n_ = n;
  m.c_ = c;
  m.abar_ = std::move(abar);
  return m;
}

PayoffModel PayoffModel::potential(int n, int c, std::function<double(const Mat&)> value,
                                   std::function<Mat(const Mat&)> gradient) {
  if (!value || !gradient) throw Error("potential: value and gradient callbacks required");
  PayoffModel m;
  m.kind_ = PayoffKind::potential;
  m.n_ = n;
  m.c_ = c;
  m.potential_ = std::move(value);
  m.potential_grad_ = std::move(gradient);
  return m;
}

PayoffModel PayoffModel::custom(int n, int c, std::function<Mat(const Mat&)> eval) {
  if (!eval) throw Error("custom: eval callback required");
  PayoffModel m;
  m.kind_ = PayoffKind::custom;
  m.n_ = n;
  m.c_ = c;
  m.eval_ = std::move(eval);
  return m;
}

Mat PayoffModel::eval(const Mat& w) const {
  switch (kind_) {
    case PayoffKind::sflow:
      if (w.rows() != n_) throw DimensionError("sflow eval: state has wrong node count");
      return omega_ * w;
    case PayoffKind::egn:
      require_state_shape(w, n_, c_, "egn eval");
      return omega_ * w * b_;
    case PayoffKind::linear:
      require_state_shape(w, n_, c_, "linear eval");
      return unvec_row(abar_ * vec_row(w), n_, c_);
    case PayoffKind::multigame: {
      require_state_shape(w, n_, c_, "multigame eval");
      Mat out(n_, c_);
      for (int i = 0; i < n_; ++i)
        out.row(i) = (games_[static_cast<std::size_t>(i)] * w.row(i).transpose()).transpose();
      return out;
    }
    case PayoffKind::potential: {
      require_state_shape(w, n_, c_, "potential eval");
      if (potential_grad_) return project_tangent_rows(potential_grad_(w));
      return project_tangent_rows(unvec_row(abar_ * vec_row(w), n_, c_));
    }
    case PayoffKind::custom:
      require_state_shape(w, n_, c_, "custom eval");
      return eval_(w);
  }
  throw Error("eval: unreachable payoff kind");
}

bool PayoffModel::has_linear_matrix() const {
  switch (kind_) {
    case PayoffKind::sflow:
    case PayoffKind::egn:
    case PayoffKind::linear:
    case PayoffKind::multigame:
      return true;
    case PayoffKind::potential:
      return abar_.size() > 0;
    case PayoffKind::custom:
      return false;
  }
  return false;
}

Mat PayoffModel::linear_matrix() const {
  switch (kind_) {
    case PayoffKind::sflow: {
      if (c_ < 1)
        throw Error("sflow linear_matrix: strategy count not fixed; evaluate on a state first "
                    "or construct via linear()");
      return kron(omega_, Mat::Identity(c_, c_));
    }
    case PayoffKind::egn:
      return kron(omega_, b_.transpose());
    case PayoffKind::linear:
      return abar_;
    case PayoffKind::multigame:
      return blockdiag(games_);
    case PayoffKind::potential:
      if (abar_.size() > 0) return abar_;
      throw Error("potential linear_matrix: callback potentials have no matrix form");
    case PayoffKind::custom:
      break;
  }
  throw Error("linear_matrix: payoff kind has no matrix form");
}

bool PayoffModel::has_potential() const {
  return kind_ == PayoffKind::potential;
}

double PayoffModel::potential_value(const Mat& w) const {
  if (!has_potential()) throw Error("potential_value: payoff kind has no potential");
  if (potential_) return potential_(w);
  const Vec s = vec_row(w);
  return 0.5 * s.dot(abar_ * s);
}

EmbeddedPayoff::EmbeddedPayoff(PayoffModel model, std::size_t cap)
    : model_(std::move(model)), cap_(cap) {
  if (model_.c() < 1)
    throw Error("EmbeddedPayoff: model must have a fixed strategy count");
  shape_ = MetaShape::make(model_.n(), model_.c(), cap);
}

Vec EmbeddedPayoff::eval(const Vec& p) const {
  if (static_cast<std::size_t>(p.size()) != shape_.size)
    throw DimensionError("EmbeddedPayoff eval: state length is not c^n");
  return lift_Q(model_.eval(marginalize_M(p, shape_.n, shape_.c)), cap_);
}

Mat EmbeddedPayoff::matrix() const {
  if (!has_matrix()) throw Error("EmbeddedPayoff matrix: base model has no matrix form");
  const Mat q = q_matrix(shape_.n, shape_.c, cap_);
  return q * model_.linear_matrix() * q.transpose();
}

double EmbeddedPayoff::potential_value(const Vec& p) const {
  return model_.potential_value(marginalize_M(p, shape_.n, shape_.c));
}

Mat multigame_matrix(const std::vector<Mat>& games, std::size_t cap) {
  if (games.empty()) throw DimensionError("multigame_matrix: need at least one game");
  const int n = static_cast<int>(games.size());
  const int c = static_cast<int>(games.front().rows());
  for (const Mat& g : games) require_square(g, c, "multigame_matrix");
  const MetaShape shape = MetaShape::make(n, c, cap);
  if (shape.size > cap / shape.size)
    throw SizeCapError("multigame_matrix: N^2 exceeds size cap");
  const Eigen::Index size = static_cast<Eigen::Index>(shape.size);
  Mat a(size, size);
  MultiIndex alpha(static_cast<std::size_t>(n), 0);
  for (Eigen::Index row = 0; row < size; ++row) {
    MultiIndex beta(static_cast<std::size_t>(n), 0);
    for (Eigen::Index col = 0; col < size; ++col) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i)
        sum += games[static_cast<std::size_t>(i)](alpha[i], beta[i]);
      a(row, col) = sum;
      mindex_advance(beta, c);
    }
    mindex_advance(alpha, c);
  }
  return a;
}

Mat blockdiag(const std::vector<Mat>& blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const Mat& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat out = Mat::Zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const Mat& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace msx
