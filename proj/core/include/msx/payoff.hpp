#pragma once

// Payoff functions F mapping an n x c state to an n x c payoff matrix, the
// structured families (graph-averaging flows, networked games, per-node
// multi-games, potential-derived fields) and their pushforward to the joint
// simplex via Q o F o M.

#include "msx/common.hpp"
#include "msx/meta.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace msx {

enum class PayoffKind { sflow, egn, linear, multigame, potential, custom };

const char* to_string(PayoffKind kind);
PayoffKind payoff_kind_from_string(const std::string& name);

class PayoffModel {
 public:
  // Graph-averaging flow: F(W) = Omega * W.
  static PayoffModel sflow(Mat omega);

  // Networked game with interaction matrix B: F(W) = Omega * W * B, i.e. the
  // row-stacked field (Omega (*) B^T) s.
  static PayoffModel egn(Mat omega, Mat b);

  // Arbitrary linear payoff on the row-stacked state: F(W) = unvec(Abar s).
  static PayoffModel linear(int n, int c, Mat abar);

  // One c x c game per node, F_i(W) = A_i W_i (no cross-node coupling).
  static PayoffModel multigame(std::vector<Mat> games);

  // Quadratic potential J(W) = 0.5 <s, Abar s> with symmetric Abar;
  // F = Pi0 grad J. Asymmetric Abar is rejected, never symmetrized.
  static PayoffModel quadratic_potential(int n, int c, Mat abar);

  // General potential with a registered gradient callback; F = Pi0 grad J.
  static PayoffModel potential(int n, int c, std::function<double(const Mat&)> value,
                               std::function<Mat(const Mat&)> gradient);

  // Free-form payoff callback (must be pure).
  static PayoffModel custom(int n, int c, std::function<Mat(const Mat&)> eval);

  Mat eval(const Mat& w) const;

  PayoffKind kind() const { return kind_; }
  int n() const { return n_; }
  int c() const { return c_; }

  // Dense nc x nc matrix of the row-stacked field, available for every
  // structured linear family.
  bool has_linear_matrix() const;
  Mat linear_matrix() const;

  bool has_potential() const;
  double potential_value(const Mat& w) const;

  const Mat& omega() const { return omega_; }
  const Mat& b() const { return b_; }
  const std::vector<Mat>& games() const { return games_; }

 private:
  PayoffModel() = default;

  PayoffKind kind_ = PayoffKind::custom;
  int n_ = 0, c_ = 0;
  Mat omega_, b_, abar_;
  std::vector<Mat> games_;
  std::function<Mat(const Mat&)> eval_;
  std::function<double(const Mat&)> potential_;
  std::function<Mat(const Mat&)> potential_grad_;
};

// Pushforward of a payoff model to the joint simplex: eval(p) = Q F(M p).
class EmbeddedPayoff {
 public:
  explicit EmbeddedPayoff(PayoffModel model, std::size_t cap = kDefaultSizeCap);

  Vec eval(const Vec& p) const;

  // Explicit N x N matrix Q Abar Q^T of the embedded linear field.
  bool has_matrix() const { return model_.has_linear_matrix(); }
  Mat matrix() const;

  // Embedded potential value J(M p).
  bool has_potential() const { return model_.has_potential(); }
  double potential_value(const Vec& p) const;

  const PayoffModel& base() const { return model_; }
  const MetaShape& shape() const { return shape_; }

 private:
  PayoffModel model_;
  MetaShape shape_;
  std::size_t cap_ = kDefaultSizeCap;
};

// Joint-game matrix with entries A(alpha, beta) = sum_i games[i](alpha_i, beta_i).
Mat multigame_matrix(const std::vector<Mat>& games, std::size_t cap = kDefaultSizeCap);

// Block-diagonal nc x nc matrix with the per-node games on the diagonal.
Mat blockdiag(const std::vector<Mat>& blocks);

}  // namespace msx
