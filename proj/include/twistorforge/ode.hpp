#pragma once

#include <Eigen/Dense>
#include <functional>

#include "twistorforge/polydisc.hpp"

namespace tf {

// Straight segment in one base coordinate with the other held fixed.
struct PathSegment {
    enum class Vary { Z, Zt };

    Vary vary = Vary::Z;
    cplx fixed{0.0, 0.0};  // the coordinate that stays constant
    cplx from{0.0, 0.0};
    cplx to{0.0, 0.0};

    static PathSegment alongZ(cplx zt_fixed, cplx z_from, cplx z_to) {
        return {Vary::Z, zt_fixed, z_from, z_to};
    }
    static PathSegment alongZt(cplx z_fixed, cplx zt_from, cplx zt_to) {
        return {Vary::Zt, z_fixed, zt_from, zt_to};
    }

    // Base point (z, zt) at parameter t in [0, 1].
    std::pair<cplx, cplx> pointAt(double t) const {
        cplx moving = from + t * (to - from);
        return vary == Vary::Z ? std::make_pair(moving, fixed) : std::make_pair(fixed, moving);
    }
    // d(moving coordinate)/dt, constant along the segment.
    cplx velocity() const { return to - from; }

    PathSegment reversed() const { return {vary, fixed, to, from}; }
};

// Pointwise n x n connection coefficient matrix in the varying direction.
using MatrixField = std::function<Eigen::MatrixXcd(cplx z, cplx zt)>;

struct TransportResult {
    Eigen::VectorXcd v1;
    Eigen::MatrixXcd fundamental;  // v1 = fundamental * v0
    int steps = 0;
};

// Solve Y' = -A(gamma(t)) * gamma'(t) * Y, Y(0) = I, over the segment with an
// adaptive embedded Runge-Kutta pair (Dormand-Prince 5(4)).  A(z, zt) is the
// connection component matrix for the segment's varying coordinate.
// Throws ConvergenceError on step-size underflow.
TransportResult transport(const MatrixField& a, const PathSegment& path,
                          const Eigen::VectorXcd& v0, double rtol = 1e-11);

// Generic adaptive Dormand-Prince integrator over t in [t0, t1] with complex
// state; exposed for the foliation flows.
Eigen::VectorXcd integrateOde(
    const std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)>& rhs,
    const Eigen::VectorXcd& y0, double t0, double t1, double rtol = 1e-11, int* steps = nullptr);

}  // namespace tf
