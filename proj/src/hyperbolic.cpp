#include "solharm/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace solharm {

namespace {

void require_height(const HPoint& p, const char* what) {
  if (!(p.h > 0.0) || !std::isfinite(p.h) || !std::isfinite(p.xi))
    throw std::invalid_argument(std::string(what) + ": half-plane height must be positive and finite");
}

}  // namespace

HPoint to_halfplane(const Point& p) {
  if (!std::isfinite(p.y) || !std::isfinite(p.z))
    throw std::invalid_argument("to_halfplane: coordinates must be finite");
  return {p.y, std::exp(-p.z)};
}

double h2_distance(const HPoint& p, const HPoint& q) {
  require_height(p, "h2_distance");
  require_height(q, "h2_distance");
  const double dxi = p.xi - q.xi;
  const double dh = p.h - q.h;
  const double s = 0.5 * std::sqrt((dxi * dxi + dh * dh) / (p.h * q.h));
  return 2.0 * std::asinh(s);
}

double busemann_s(const HPoint& p) {
  require_height(p, "busemann_s");
  return -std::log(p.h);
}

double field_J(const FieldJet2& jet, const HPoint& p) { return -p.h * jet.d_h; }

double field_laplacian(const FieldJet2& jet, const HPoint& p) {
  return p.h * p.h * (jet.d_xixi + jet.d_hh);
}

double drift_L(const H2JetField& u, const HPoint& p) {
  require_height(p, "drift_L");
  const FieldJet2 jet = u(p);
  return field_laplacian(jet, p) - field_J(jet, p);
}

H2JetField jet_by_fd(std::function<double(const HPoint&)> f, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("jet_by_fd: step must be positive");
  return [f = std::move(f), d = step](const HPoint& p) {
    const auto at = [&](double dx, double dh) { return f({p.xi + dx, p.h + dh}); };
    FieldJet2 jet;
    const double c = at(0, 0);
    jet.value = c;
    jet.d_xi = (at(d, 0) - at(-d, 0)) / (2 * d);
    jet.d_h = (at(0, d) - at(0, -d)) / (2 * d);
    jet.d_xixi = (at(d, 0) - 2 * c + at(-d, 0)) / (d * d);
    jet.d_hh = (at(0, d) - 2 * c + at(0, -d)) / (d * d);
    jet.d_xih = ((at(d, d) - at(d, -d)) - (at(-d, d) - at(-d, -d))) / (4 * d * d);
    return jet;
  };
}

}  // namespace solharm
