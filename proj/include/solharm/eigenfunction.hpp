#pragma once

#include <cstddef>
#include <vector>

// Radial eigenfunction v of the hyperbolic plane: the rotationally
// symmetric solution of Delta v + lambda v = 0 with v(0) = 1, v'(0) = 0.
// In the radial variable the equation reads
//
//   v'' + coth(r) v' + lambda v = 0,
//
// since the radial part of the H^2 Laplacian is d^2/dr^2 + coth(r) d/dr
// (area element 2 pi sinh r; Delta f = (sinh r)^{-1} (sinh(r) f')' for
// radial f). The paper value is lambda = 1/4, the bottom of the spectrum,
// where v(r) = P_{-1/2}(cosh r).

namespace solharm {

/// Dense-output representation of v and v' on [0, r_max].
///
/// Construction integrates the ODE once (series start on [0, 1e-3] to
/// avoid the coth singularity, then adaptive dopri5 with dense output)
/// and stores value/derivative/curvature on a uniform grid; evaluation is
/// local quintic Hermite interpolation, immutable and thread-safe.
class RadialEigenfunction {
 public:
  struct Options {
    double lambda = 0.25;      // eigenvalue of -Delta
    double r_max = 20.0;       // support of the dense output
    double rel_tol = 1e-11;    // solver relative tolerance
    double abs_tol = 1e-13;    // solver absolute tolerance
    double node_spacing = 1e-3;
  };

  struct Eval {
    double v;
    double dv;
  };

  explicit RadialEigenfunction(const Options& opt = {});

  /// v(r) and v'(r). Throws std::out_of_range outside [0, r_max].
  Eval eval(double r) const;

  /// v''(r) recovered from the ODE, never from the interpolant:
  /// v'' = -coth(r) v' - lambda v, with the limit -lambda/2 at r = 0.
  double second_derivative(double r) const;

  /// ODE residual of the dense output, with v'' taken from the second
  /// derivative of the interpolant (an independent route from the ODE
  /// recovery above). Zero at nodes by construction; between nodes it
  /// measures the interpolation/integration consistency.
  double ode_residual(double r) const;

  double lambda() const { return lambda_; }
  double r_max() const { return r_max_; }
  std::size_t node_count() const { return v_.size(); }
  double node_spacing() const { return dr_; }

 private:
  struct Quintic {
    double v, dv, d2v;
  };
  Quintic interpolate(double r) const;

  double lambda_;
  double r_max_;
  double dr_;
  std::vector<double> v_, dv_, d2v_;  // node values; d2v from the ODE
};

/// Free-function form of the evaluation operation.
inline RadialEigenfunction::Eval eigenfunction_v(double r, const RadialEigenfunction& ef) {
  return ef.eval(r);
}

}  // namespace solharm
