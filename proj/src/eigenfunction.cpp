#include "solharm/eigenfunction.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace solharm {

namespace {

// Power-series start about the regular singular point r = 0:
//   v = 1 + a1 r^2 + a2 r^4 + a3 r^6 + O(r^8),
// obtained by substituting coth(r) = 1/r + r/3 - r^3/45 + ... into the
// radial equation. Used on [0, kSeriesCut] where the truncation error is
// below 1e-20.
constexpr double kSeriesCut = 1e-3;

struct SeriesCoeffs {
  double a1, a2, a3;
};

SeriesCoeffs series_coeffs(double lambda) {
  const double a1 = -lambda / 4.0;
  const double a2 = -a1 * (2.0 / 3.0 + lambda) / 16.0;
  const double a3 = ((2.0 / 45.0) * a1 - (4.0 / 3.0 + lambda) * a2) / 36.0;
  return {a1, a2, a3};
}

}  // namespace

RadialEigenfunction::RadialEigenfunction(const Options& opt)
    : lambda_(opt.lambda), r_max_(opt.r_max) {
  if (!(opt.r_max > 10.0 * kSeriesCut) || !std::isfinite(opt.r_max))
    throw std::invalid_argument("RadialEigenfunction: r_max too small");
  if (!(opt.node_spacing > 0.0) || !(opt.rel_tol > 0.0) || !(opt.abs_tol > 0.0))
    throw std::invalid_argument("RadialEigenfunction: tolerances and spacing must be positive");

  const std::size_t n = static_cast<std::size_t>(std::llround(opt.r_max / opt.node_spacing)) + 1;
  dr_ = r_max_ / static_cast<double>(n - 1);
  v_.resize(n);
  dv_.resize(n);
  d2v_.resize(n);

  const SeriesCoeffs sc = series_coeffs(lambda_);
  const auto series = [&](double r, double& v, double& dv) {
    const double r2 = r * r;
    v = 1.0 + r2 * (sc.a1 + r2 * (sc.a2 + r2 * sc.a3));
    dv = r * (2.0 * sc.a1 + r2 * (4.0 * sc.a2 + r2 * 6.0 * sc.a3));
  };

  using state = std::array<double, 2>;
  const double lambda = lambda_;
  const auto ode = [lambda](const state& x, state& dxdt, double r) {
    dxdt[0] = x[1];
    dxdt[1] = -x[1] / std::tanh(r) - lambda * x[0];
  };

  std::size_t next = 0;
  for (; next < n && next * dr_ <= kSeriesCut; ++next)
    series(next * dr_, v_[next], dv_[next]);

  state x;
  series(kSeriesCut, x[0], x[1]);
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_dense_output(opt.abs_tol, opt.rel_tol,
                                           odeint::runge_kutta_dopri5<state>());
  stepper.initialize(x, kSeriesCut, 1e-4);
  while (next < n) {
    stepper.do_step(ode);
    while (next < n && static_cast<double>(next) * dr_ <= stepper.current_time()) {
      state xi;
      stepper.calc_state(static_cast<double>(next) * dr_, xi);
      v_[next] = xi[0];
      dv_[next] = xi[1];
      ++next;
    }
  }

  d2v_[0] = -lambda_ / 2.0;  // r -> 0 limit: coth(r) v' -> v''
  for (std::size_t i = 1; i < n; ++i) {
    const double r = static_cast<double>(i) * dr_;
    d2v_[i] = -dv_[i] / std::tanh(r) - lambda_ * v_[i];
  }
}

RadialEigenfunction::Quintic RadialEigenfunction::interpolate(double r) const {
  if (!(r >= 0.0) || r > r_max_)
    throw std::out_of_range("RadialEigenfunction: r outside [0, r_max]");

  if (r <= kSeriesCut) {
    const SeriesCoeffs sc = series_coeffs(lambda_);
    const double r2 = r * r;
    return {1.0 + r2 * (sc.a1 + r2 * (sc.a2 + r2 * sc.a3)),
            r * (2.0 * sc.a1 + r2 * (4.0 * sc.a2 + r2 * 6.0 * sc.a3)),
            2.0 * sc.a1 + r2 * (12.0 * sc.a2 + r2 * 30.0 * sc.a3)};
  }

  std::size_t i = static_cast<std::size_t>(r / dr_);
  if (i >= v_.size() - 1) i = v_.size() - 2;
  const double h = dr_;
  const double t = (r - static_cast<double>(i) * dr_) / h;

  // Quintic Hermite on [r_i, r_{i+1}] matching (v, v', v'') at both ends.
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  const double h00 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
  const double h10 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
  const double h20 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
  const double h01 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
  const double h11 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
  const double h21 = 0.5 * (t3 - 2.0 * t4 + t5);

  const double d00 = -30.0 * t2 + 60.0 * t3 - 30.0 * t4;
  const double d10 = 1.0 - 18.0 * t2 + 32.0 * t3 - 15.0 * t4;
  const double d20 = 0.5 * (2.0 * t - 9.0 * t2 + 12.0 * t3 - 5.0 * t4);
  const double d01 = 30.0 * t2 - 60.0 * t3 + 30.0 * t4;
  const double d11 = -12.0 * t2 + 28.0 * t3 - 15.0 * t4;
  const double d21 = 0.5 * (3.0 * t2 - 8.0 * t3 + 5.0 * t4);

  const double s00 = -60.0 * t + 180.0 * t2 - 120.0 * t3;
  const double s10 = -36.0 * t + 96.0 * t2 - 60.0 * t3;
  const double s20 = 0.5 * (2.0 - 18.0 * t + 36.0 * t2 - 20.0 * t3);
  const double s01 = 60.0 * t - 180.0 * t2 + 120.0 * t3;
  const double s11 = -24.0 * t + 84.0 * t2 - 60.0 * t3;
  const double s21 = 0.5 * (6.0 * t - 24.0 * t2 + 20.0 * t3);

  const double f0 = v_[i], g0 = dv_[i] * h, c0 = d2v_[i] * h * h;
  const double f1 = v_[i + 1], g1 = dv_[i + 1] * h, c1 = d2v_[i + 1] * h * h;

  return {f0 * h00 + g0 * h10 + c0 * h20 + f1 * h01 + g1 * h11 + c1 * h21,
          (f0 * d00 + g0 * d10 + c0 * d20 + f1 * d01 + g1 * d11 + c1 * d21) / h,
          (f0 * s00 + g0 * s10 + c0 * s20 + f1 * s01 + g1 * s11 + c1 * s21) / (h * h)};
}

RadialEigenfunction::Eval RadialEigenfunction::eval(double r) const {
  const Quintic q = interpolate(r);
  return {q.v, q.dv};
}

double RadialEigenfunction::second_derivative(double r) const {
  if (r <= kSeriesCut) return interpolate(r).d2v;  // series is exact here
  const Quintic q = interpolate(r);
  return -q.dv / std::tanh(r) - lambda_ * q.v;
}

double RadialEigenfunction::ode_residual(double r) const {
  const Quintic q = interpolate(r);
  if (r < 1e-12) return 2.0 * q.d2v + lambda_ * q.v;  // coth(r) v' -> v''
  return q.d2v + q.dv / std::tanh(r) + lambda_ * q.v;
}

}  // namespace solharm
