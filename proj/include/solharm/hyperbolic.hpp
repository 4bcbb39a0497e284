#pragma once

#include <functional>

#include "solharm/liegroup.hpp"

// Quotient geometry of the x-translation action: the half-plane model of
// H^2, the isometry from the slice {x = 0}, the horocycle distance s with
// grad s = J, and the drift operator L(u) = Delta u - <grad u, J>.

namespace solharm {

/// Point (xi, h) of the half-plane model, h > 0, metric (dxi^2 + dh^2)/h^2.
struct HPoint {
  double xi = 0.0, h = 1.0;
};

/// Composition of the submersion (x,y,z) -> (0,y,z) with the model
/// isometry (0,y,z) -> (y, e^{-z}). The x coordinate is ignored.
HPoint to_halfplane(const Point& p);

/// Hyperbolic distance in the half-plane model, computed through the
/// stable form sinh^2(d/2) = (dxi^2 + dh^2) / (4 h1 h2).
/// Throws std::invalid_argument for nonpositive heights.
double h2_distance(const HPoint& p, const HPoint& q);

/// Signed distance to the horocycle through (0, 1) whose ideal point is
/// the h -> 0 limit of vertical lines: s(xi, h) = -log h. In group
/// coordinates s = z. Throws std::invalid_argument for h <= 0.
double busemann_s(const HPoint& p);

/// Value and first/second partials of a scalar field on H^2 in
/// half-plane coordinates (xi, h).
struct FieldJet2 {
  double value = 0.0;
  double d_xi = 0.0, d_h = 0.0;
  double d_xixi = 0.0, d_xih = 0.0, d_hh = 0.0;
};

using H2JetField = std::function<FieldJet2(const HPoint&)>;

/// Drift operator L(u) = Delta_{H^2} u - <grad u, J> with J = grad s.
/// In coordinates: h^2 (u_xixi + u_hh) + h u_h.
double drift_L(const H2JetField& u, const HPoint& p);

/// J applied to the field: J(u) = <grad u, grad s> = -h u_h.
double field_J(const FieldJet2& jet, const HPoint& p);

/// Laplace-Beltrami of the field from its jet: h^2 (u_xixi + u_hh).
double field_laplacian(const FieldJet2& jet, const HPoint& p);

/// Builds a jet field from a plain value function by central finite
/// differences with the given step (test and verification aid).
H2JetField jet_by_fd(std::function<double(const HPoint&)> f, double step);

}  // namespace solharm
