#include "solharm/liegroup.hpp"

#include <string>

namespace solharm {

namespace {

void require_finite(const Point& p, const char* what) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
    throw std::invalid_argument(std::string(what) + ": coordinates must be finite");
}

}  // namespace

double Metric3::det() const {
  const auto& m = g;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double Metric3::inner(const std::array<double, 3>& u, const std::array<double, 3>& v) const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += u[i] * g[i][j] * v[j];
  return s;
}

Mat2 exp_Az(const GroupParam& param, double z) {
  if (!std::isfinite(z)) throw std::invalid_argument("exp_Az: z must be finite");
  const double ez = std::exp(z);
  return {ez, param.a * std::sinh(z), 0.0, 1.0 / ez};
}

Point multiply(const Point& p1, const Point& p2, const GroupParam& param) {
  require_finite(p1, "multiply");
  require_finite(p2, "multiply");
  const Mat2 b = exp_Az(param, p1.z);
  return {p1.x + b.a11 * p2.x + b.a12 * p2.y,
          p1.y + b.a21 * p2.x + b.a22 * p2.y,
          p1.z + p2.z};
}

Point inverse(const Point& p, const GroupParam& param) {
  require_finite(p, "inverse");
  const Mat2 b = exp_Az(param, -p.z);
  return {-(b.a11 * p.x + b.a12 * p.y), -(b.a21 * p.x + b.a22 * p.y), -p.z};
}

Metric3 metric_at(const Point& p, const GroupParam& param) {
  require_finite(p, "metric_at");
  const double z = p.z;
  const double e2mz = std::exp(-2.0 * z);
  const double sh = std::sinh(z);
  const double a = param.a;
  // (x,y) block of B^{-T} B^{-1} with B = [[e^z, a sinh z], [0, e^{-z}]]:
  // B^{-1} = [[e^{-z}, -a sinh z], [0, e^z]] (det B = 1).
  Metric3 m;
  m.g[0][0] = e2mz;
  m.g[0][1] = m.g[1][0] = -a * sh * std::exp(-z);
  m.g[1][1] = a * a * sh * sh + std::exp(2.0 * z);
  m.g[2][2] = 1.0;
  return m;
}

Metric3 inverse_metric_at(const Point& p, const GroupParam& param) {
  require_finite(p, "inverse_metric_at");
  const double z = p.z;
  const double pz = param.a * std::sinh(z);  // p(z) = a sinh z
  Metric3 m;
  m.g[0][0] = std::exp(2.0 * z) + pz * pz;
  m.g[0][1] = m.g[1][0] = pz * std::exp(-z);
  m.g[1][1] = std::exp(-2.0 * z);
  m.g[2][2] = 1.0;
  return m;
}

Frame3 frame_at(const Point& p, const GroupParam& param) {
  require_finite(p, "frame_at");
  const Mat2 b = exp_Az(param, p.z);
  return {{b.a11, b.a21, 0.0}, {b.a12, b.a22, 0.0}, {0.0, 0.0, 1.0}};
}

Christoffel christoffel_at(const Point& p, const GroupParam& param) {
  require_finite(p, "christoffel_at");
  const double z = p.z;
  const double a = param.a;
  const double e2z = std::exp(2.0 * z);
  const double e2mz = 1.0 / e2z;
  const double sh = std::sinh(z);

  // z-derivatives of the (x,y) metric block:
  //   g_xx = e^{-2z},            g_xx' = -2 e^{-2z}
  //   g_xy = -a sinh(z) e^{-z},  g_xy' = -a e^{-2z}
  //   g_yy = a^2 sinh^2 z + e^{2z},  g_yy' = a^2 sinh(2z) + 2 e^{2z}
  const double dgxx = -2.0 * e2mz;
  const double dgxy = -a * e2mz;
  const double dgyy = a * a * std::sinh(2.0 * z) + 2.0 * e2z;

  // Inverse (x,y) block: [[e^{2z} + a^2 sinh^2 z, a sinh z e^{-z}], [., e^{-2z}]].
  const double ixx = e2z + a * a * sh * sh;
  const double ixy = a * sh * std::exp(-z);
  const double iyy = e2mz;

  Christoffel c;
  // Gamma^z_ij = -1/2 g_ij'  (i, j in {x, y}; g^zz = 1, g_iz constant)
  c.gamma[2][0][0] = -0.5 * dgxx;
  c.gamma[2][0][1] = c.gamma[2][1][0] = -0.5 * dgxy;
  c.gamma[2][1][1] = -0.5 * dgyy;
  // Gamma^k_iz = 1/2 (G^{-1} G')^k_i  (k, i in {x, y}); all others vanish.
  const double gxz_x = 0.5 * (ixx * dgxx + ixy * dgxy);
  const double gxz_y = 0.5 * (ixx * dgxy + ixy * dgyy);
  const double gyz_x = 0.5 * (ixy * dgxx + iyy * dgxy);
  const double gyz_y = 0.5 * (ixy * dgxy + iyy * dgyy);
  c.gamma[0][0][2] = c.gamma[0][2][0] = gxz_x;
  c.gamma[0][1][2] = c.gamma[0][2][1] = gxz_y;
  c.gamma[1][0][2] = c.gamma[1][2][0] = gyz_x;
  c.gamma[1][1][2] = c.gamma[1][2][1] = gyz_y;
  return c;
}

std::array<double, 3> orbit_mean_curvature(const Point& p, const GroupParam& param) {
  if (param.a != 0.0)
    throw std::invalid_argument("orbit_mean_curvature: defined in the a = 0 model only");
  require_finite(p, "orbit_mean_curvature");
  // E1 = e^z dx has constant components along its own direction, so
  // nabla_{E1} E1 = (E1^x)^2 Gamma^k_xx.
  const Christoffel c = christoffel_at(p, param);
  const double e1x = std::exp(p.z);
  const double f = e1x * e1x;
  return {f * c(0, 0, 0), f * c(1, 0, 0), f * c(2, 0, 0)};
}

LaplacianCoeffs laplacian_coeffs(double z, const GroupParam& param) {
  if (!std::isfinite(z)) throw std::invalid_argument("laplacian_coeffs: z must be finite");
  const double pz = param.a * std::sinh(z);
  return {std::exp(2.0 * z) + pz * pz, 2.0 * pz * std::exp(-z), std::exp(-2.0 * z), 1.0};
}

}  // namespace solharm
