#include "twistorforge/series.hpp"

#include <cmath>

#include "twistorforge/dft.hpp"

namespace tf {

Series2::Series2(Polydisc domain, int order)
    : domain_(domain), order_(order),
      c_(static_cast<std::size_t>(order + 1) * (order + 1), cplx{0.0, 0.0}) {}

Series2 Series2::fit(const std::function<cplx(cplx, cplx)>& f, const Polydisc& domain, int order,
                     int grid, double rho) {
    const int m = grid > 0 ? grid : 2 * (order + 1);
    const double rz = domain.radius_z * rho;
    const double rzt = domain.radius_zt * rho;

    // samples[j][k] = f on the tensor circle grid
    std::vector<std::vector<cplx>> samples(m, std::vector<cplx>(m));
    for (int j = 0; j < m; ++j) {
        double a = 2.0 * M_PI * j / m;
        cplx z = domain.center_z + rz * cplx(std::cos(a), std::sin(a));
        for (int k = 0; k < m; ++k) {
            double b = 2.0 * M_PI * k / m;
            cplx zt = domain.center_zt + rzt * cplx(std::cos(b), std::sin(b));
            samples[j][k] = f(z, zt);
        }
    }

    // DFT along zt for each z node, then along z for each zt frequency.
    std::vector<std::vector<cplx>> half(m);
    for (int j = 0; j < m; ++j) half[j] = dft(samples[j]);
    Series2 s(domain, order);
    std::vector<cplx> col(m);
    for (int k = 0; k <= order; ++k) {
        for (int j = 0; j < m; ++j) col[j] = half[j][k];
        std::vector<cplx> cj = dft(col);
        for (int j = 0; j <= order; ++j)
            s.coeff(j, k) = cj[j] / (std::pow(rz, j) * std::pow(rzt, k));
    }
    s.estimateTail();
    return s;
}

void Series2::estimateTail() {
    // Sup-norm contribution of total degree d on the polydisc boundary.
    auto degreeSum = [&](int d) {
        double acc = 0.0;
        for (int j = 0; j <= order_; ++j) {
            int k = d - j;
            if (k < 0 || k > order_) continue;
            acc += std::abs(coeff(j, k)) * std::pow(domain_.radius_z, j) *
                   std::pow(domain_.radius_zt, k);
        }
        return acc;
    };
    double s_top = degreeSum(order_) + degreeSum(order_ - 1);
    double s_prev = degreeSum(order_ - 2) + degreeSum(order_ - 3);
    if (s_top < 1e-300) {
        tail_bound_ = 1e-15;  // effectively polynomial
        return;
    }
    double q = s_prev > 0.0 ? std::sqrt(s_top / s_prev) : 0.5;
    q = std::min(q, 0.9);
    tail_bound_ = s_top * q / (1.0 - q) + 1e-15;
}

ScalarJet Series2::jet(cplx z, cplx zt) const {
    const cplx u = z - domain_.center_z;
    const cplx v = zt - domain_.center_zt;
    // Horner in u whose "coefficients" are polynomials in v.
    cplx val{0, 0}, du{0, 0}, dv{0, 0};
    for (int j = order_; j >= 0; --j) {
        cplx pj{0, 0}, dpj{0, 0};
        for (int k = order_; k >= 0; --k) {
            dpj = dpj * v + pj;
            pj = pj * v + coeff(j, k);
        }
        du = du * u + val;
        val = val * u + pj;
        dv = dv * u + dpj;
    }
    return {val, du, dv};
}

}  // namespace tf
