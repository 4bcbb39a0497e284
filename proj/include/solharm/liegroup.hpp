#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

// The semidirect-product group R^2 x|_A R with A = [[1, a], [0, -1]],
// a >= 0: group law, closed-form exponential block, canonical
// left-invariant metric, orthonormal frame, Christoffel symbols and the
// coordinate Laplacian coefficients. All functions here are pure; values
// are freely copyable and thread-safe.

namespace solharm {

/// Shear parameter a >= 0 selecting the left-invariant metric.
struct GroupParam {
  double a = 0.0;

  GroupParam() = default;
  explicit GroupParam(double a_) : a(a_) {
    if (!(a >= 0.0) || !std::isfinite(a))
      throw std::invalid_argument("GroupParam: shear parameter a must satisfy a >= 0");
  }
};

/// Point (x, y, z) in global coordinates of R^2 x|_A R.
struct Point {
  double x = 0.0, y = 0.0, z = 0.0;
};

/// 2x2 real matrix, row-major entries.
struct Mat2 {
  double a11 = 1.0, a12 = 0.0;
  double a21 = 0.0, a22 = 1.0;

  double det() const { return a11 * a22 - a12 * a21; }

  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  std::array<double, 2> operator*(const std::array<double, 2>& v) const {
    return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
  }
};

/// Symmetric 3x3 metric tensor in the coordinate basis (dx, dy, dz).
struct Metric3 {
  std::array<std::array<double, 3>, 3> g{};

  double operator()(int i, int j) const { return g[i][j]; }
  double det() const;

  /// g(u, v) for coordinate-component vectors.
  double inner(const std::array<double, 3>& u, const std::array<double, 3>& v) const;
};

/// Left-invariant frame E1, E2, E3 in coordinate components.
struct Frame3 {
  std::array<double, 3> e1{}, e2{}, e3{};
};

/// Christoffel symbols Gamma[k][i][j], symmetric in (i, j).
struct Christoffel {
  std::array<std::array<std::array<double, 3>, 3>, 3> gamma{};
  double operator()(int k, int i, int j) const { return gamma[k][i][j]; }
};

/// Second-order coefficients of the coordinate Laplacian:
///   Delta u = cxx u_xx + cxy u_xy + cyy u_yy + czz u_zz
/// (cxy already carries the factor 2 of the mixed term).
struct LaplacianCoeffs {
  double cxx = 1.0, cxy = 0.0, cyy = 1.0, czz = 1.0;
};

/// e^{Az} in closed form. A is trace-free with A^2 = I, so
/// e^{Az} = cosh(z) I + sinh(z) A = [[e^z, a sinh z], [0, e^{-z}]].
Mat2 exp_Az(const GroupParam& param, double z);

/// Group law (p1, z1) * (p2, z2) = (p1 + e^{A z1} p2, z1 + z2).
/// The z component is z1 + z2 exactly.
Point multiply(const Point& p1, const Point& p2, const GroupParam& param);

/// Two-sided inverse: spatial part -e^{-Az}(x, y), third coordinate -z.
Point inverse(const Point& p, const GroupParam& param);

/// Coordinate metric making the left-invariant frame orthonormal.
/// The (x,y) block is B^{-T} B^{-1} with B = exp_Az(param, z); the z
/// row/column is (0, 0, 1). det == 1 (A is trace-free).
Metric3 metric_at(const Point& p, const GroupParam& param);

/// Inverse metric; the (x,y) block is B B^T, so g^xx = e^{2z} + p(z)^2,
/// g^xy = p(z) e^{-z}, g^yy = e^{-2z}, g^zz = 1 with p(z) = a sinh z.
Metric3 inverse_metric_at(const Point& p, const GroupParam& param);

/// E1, E2 are the columns of e^{Az} in (dx, dy), E3 = dz.
Frame3 frame_at(const Point& p, const GroupParam& param);

/// Christoffel symbols of metric_at from the closed-form z-derivatives
/// of g_ij (the metric depends on z only).
Christoffel christoffel_at(const Point& p, const GroupParam& param);

/// Mean-curvature vector of the x-translation orbit through p in the
/// a = 0 model, computed as nabla_{E1} E1. Equals (0, 0, 1).
/// Throws std::invalid_argument unless param.a == 0.
std::array<double, 3> orbit_mean_curvature(const Point& p, const GroupParam& param);

/// Coefficients of the coordinate Laplacian at height z.
///
/// Derivation of the absence of first-order terms: in divergence form
///   Delta u = det(g)^{-1/2} d_i( det(g)^{1/2} g^{ij} d_j u ).
/// Here det(g) == 1 identically (A trace-free), so
///   Delta u = d_i( g^{ij} d_j u ) = g^{ij} d_i d_j u + (d_i g^{ij}) d_j u.
/// Every g^{ij} depends on z alone, so d_i g^{ij} = d_z g^{zj}; and the
/// z row of the inverse metric is the constant (0, 0, 1). Hence
/// d_i g^{ij} = 0 and only second-order terms remain.
LaplacianCoeffs laplacian_coeffs(double z, const GroupParam& param);

}  // namespace solharm
