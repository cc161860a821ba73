#include "twistorforge/newton.hpp"

#include <cmath>

namespace tf {

NewtonResult findRoot(const JetMap& f, const Eigen::VectorXcd& x0, double tol, int max_iter) {
    NewtonResult r;
    r.x = x0;
    Eigen::VectorXcd fx;
    Eigen::MatrixXcd jx;
    f(r.x, fx, jx);
    double res = fx.norm();
    r.residual_history.push_back(res);

    for (int it = 0; it < max_iter; ++it) {
        if (res < tol) {
            r.iterations = it;
            return r;
        }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(jx);
        lu.setThreshold(1e-13);
        if (lu.rank() < jx.cols())
            throw ConvergenceError("singular Jacobian at Newton iterate " +
                                   std::to_string(it));
        Eigen::VectorXcd step = lu.solve(fx);

        // Damp by halving until the residual decreases.
        double alpha = 1.0;
        Eigen::VectorXcd x_next;
        Eigen::VectorXcd f_next;
        Eigen::MatrixXcd j_next;
        double res_next = res;
        bool accepted = false;
        for (int halvings = 0; halvings < 25; ++halvings) {
            x_next = r.x - alpha * step;
            f(x_next, f_next, j_next);
            res_next = f_next.norm();
            if (res_next < res || res_next < tol) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted)
            throw ConvergenceError("Newton iteration diverged: damping failed to reduce "
                                   "the residual");
        r.x = std::move(x_next);
        fx = std::move(f_next);
        jx = std::move(j_next);
        res = res_next;
        r.residual_history.push_back(res);
    }
    if (res < tol) {
        r.iterations = max_iter;
        return r;
    }
    throw ConvergenceError("Newton iteration did not converge in " +
                           std::to_string(max_iter) + " iterations (residual " +
                           std::to_string(res) + ")");
}

cplx findRootScalar(const std::function<std::pair<cplx, cplx>(cplx)>& f, cplx x0, double tol,
                    int max_iter) {
    JetMap wrapped = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& fv, Eigen::MatrixXcd& j) {
        auto [v, d] = f(x[0]);
        fv.resize(1);
        j.resize(1, 1);
        fv[0] = v;
        j(0, 0) = d;
    };
    Eigen::VectorXcd start(1);
    start[0] = x0;
    return findRoot(wrapped, start, tol, max_iter).x[0];
}

}  // namespace tf
