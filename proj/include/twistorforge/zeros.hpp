#pragma once

#include <functional>

#include "twistorforge/polydisc.hpp"

namespace tf {

// Count zeros of an analytic function inside |lambda - center| < radius by
// the argument principle: trapezoid quadrature of f'/f on the circle with the
// derivative taken spectrally from the circle samples.  Throws DomainError if
// f nearly vanishes on the contour and ConvergenceError if the winding
// integral is farther than 0.1 from an integer.
int countZeros(const std::function<cplx(cplx)>& f, cplx center, double radius,
               int quadrature_order = 256);

}  // namespace tf
