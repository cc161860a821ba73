#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "twistorforge/errors.hpp"
#include "twistorforge/polydisc.hpp"

namespace tf {

// Map C^k -> C^k with jet access: fills F(x) and the complex Jacobian J(x).
using JetMap =
    std::function<void(const Eigen::VectorXcd& x, Eigen::VectorXcd& f, Eigen::MatrixXcd& j)>;

struct NewtonResult {
    Eigen::VectorXcd x;
    std::vector<double> residual_history;  // ||F|| per accepted iterate, x0 first
    int iterations = 0;
};

// Damped Newton iteration.  Throws ConvergenceError on max-iteration
// exhaustion or when damping cannot reduce the residual (divergence), and on a
// numerically singular Jacobian at an iterate.
NewtonResult findRoot(const JetMap& f, const Eigen::VectorXcd& x0, double tol = 1e-11,
                      int max_iter = 50);

// Scalar convenience overload for F: C -> C given as value + derivative.
cplx findRootScalar(const std::function<std::pair<cplx, cplx>(cplx)>& f, cplx x0,
                    double tol = 1e-11, int max_iter = 50);

}  // namespace tf
