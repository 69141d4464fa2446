#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace msx {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Base class for all library errors. The CLI maps the concrete types to
// exit codes (config -> 2, numerical -> 3, size cap -> 4).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct SizeCapError : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

using Rng = std::mt19937_64;

// Row-major flattening of an n x c matrix (rows stacked), and its inverse.
Vec vec_row(const Mat& m);
Mat unvec_row(const Vec& v, Eigen::Index rows, Eigen::Index cols);

// Kronecker product a (*) b.
Mat kron(const Mat& a, const Mat& b);

// Uniform sample from the open simplex, mixed with `min_mass` of the
// barycenter so entries stay bounded away from 0.
Vec random_interior_point(Rng& rng, int c, double min_mass = 0.1);
Mat random_interior_state(Rng& rng, int n, int c, double min_mass = 0.1);

// Point at distance `gap` (in total variation mass) from a random vertex.
Mat random_near_vertex_state(Rng& rng, int n, int c, double gap = 0.05);

// Zero-sum random tangent with entries drawn uniformly from [-amp, amp]
// before projection.
Vec random_tangent(Rng& rng, int c, double amp = 1.0);
Mat random_tangent_rows(Rng& rng, int n, int c, double amp = 1.0);

}  // namespace msx
