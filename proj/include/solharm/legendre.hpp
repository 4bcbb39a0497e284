#pragma once

// Independent oracle for the radial eigenfunction at lambda = 1/4:
// the Legendre function of degree -1/2,
//
//   P_{-1/2}(cosh r) = (1/pi) \int_0^pi (cosh r + sinh r cos t)^{-1/2} dt,
//
// evaluated by adaptive Gauss-Kronrod quadrature of the Laplace integral.
// Shares no code with the ODE dense-output path.

namespace solharm {

/// P_{-1/2}(cosh r) for r >= 0.
double legendre_p_minus_half_cosh(double r);

}  // namespace solharm
