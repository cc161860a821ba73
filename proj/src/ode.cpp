#include "twistorforge/ode.hpp"

#include <algorithm>
#include <cmath>

namespace tf {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// 4th-order embedded weights (include the FSAL stage k7).
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

}  // namespace

Eigen::VectorXcd integrateOde(
    const std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)>& rhs,
    const Eigen::VectorXcd& y0, double t0, double t1, double rtol, int* steps) {
    const double span = t1 - t0;
    if (span == 0.0) {
        if (steps) *steps = 0;
        return y0;
    }
    const double atol = rtol;
    const double hmin = std::abs(span) * 1e-13;

    Eigen::VectorXcd y = y0;
    double t = t0;
    double h = span / 16.0;
    int nsteps = 0;
    Eigen::VectorXcd k1 = rhs(t, y);

    while ((span > 0.0) ? (t < t1) : (t > t1)) {
        if ((span > 0.0) ? (t + h > t1) : (t + h < t1)) h = t1 - t;
        if (std::abs(h) < hmin)
            throw ConvergenceError("transport step-size underflow: path leaves the "
                                   "region of analyticity");

        Eigen::VectorXcd k2 = rhs(t + c2 * h, y + h * (a21 * k1));
        Eigen::VectorXcd k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        Eigen::VectorXcd k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        Eigen::VectorXcd k5 =
            rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        Eigen::VectorXcd k6 =
            rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        Eigen::VectorXcd y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        Eigen::VectorXcd k7 = rhs(t + h, y5);  // FSAL
        Eigen::VectorXcd y4 = y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(y5[i] - y4[i]) / scale);
        }

        if (err <= 1.0) {
            t += h;
            y = std::move(y5);
            k1 = std::move(k7);
            ++nsteps;
        }
        double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
    }
    if (steps) *steps = nsteps;
    return y;
}

TransportResult transport(const MatrixField& a, const PathSegment& path,
                          const Eigen::VectorXcd& v0, double rtol) {
    const Eigen::Index n = v0.size();
    const cplx vel = path.velocity();

    auto rhs = [&](double t, const Eigen::VectorXcd& flat) -> Eigen::VectorXcd {
        auto [z, zt] = path.pointAt(t);
        Eigen::MatrixXcd y = Eigen::Map<const Eigen::MatrixXcd>(flat.data(), n, n);
        Eigen::MatrixXcd dy = (-vel) * (a(z, zt) * y);
        return Eigen::Map<const Eigen::VectorXcd>(dy.data(), n * n);
    };

    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    Eigen::VectorXcd flat0 = Eigen::Map<const Eigen::VectorXcd>(id.data(), n * n);
    int steps = 0;
    Eigen::VectorXcd flat1 = integrateOde(rhs, flat0, 0.0, 1.0, rtol, &steps);

    TransportResult r;
    r.fundamental = Eigen::Map<const Eigen::MatrixXcd>(flat1.data(), n, n);
    r.v1 = r.fundamental * v0;
    r.steps = steps;
    return r;
}

}  // namespace tf
