#pragma once

#include <functional>
#include <vector>

#include "twistorforge/polydisc.hpp"
#include "twistorforge/expr.hpp"

namespace tf {

// Truncated bivariate power series about the center of a polydisc,
//   f(z, zt) = sum_{j,k <= order} c[j][k] (z-c_z)^j (zt-c_zt)^k,
// together with a recorded tail bound valid on the polydisc.
class Series2 {
public:
    Series2() = default;
    Series2(Polydisc domain, int order);

    // Sample a holomorphic function on the tensor circle grid
    // |z - c_z| = rho_z * radius_z, |zt - c_zt| = rho_zt * radius_zt and
    // read coefficients off the 2D DFT.  rho > 1 samples outside the
    // target polydisc and sharpens the tail bound.
    static Series2 fit(const std::function<cplx(cplx, cplx)>& f, const Polydisc& domain,
                       int order, int grid = 0, double rho = 1.0);

    ScalarJet jet(cplx z, cplx zt) const;
    cplx eval(cplx z, cplx zt) const { return jet(z, zt).value; }

    cplx& coeff(int j, int k) { return c_[idx(j, k)]; }
    cplx coeff(int j, int k) const { return c_[idx(j, k)]; }
    int order() const { return order_; }
    const Polydisc& domain() const { return domain_; }

    // Conservative bound on |f - truncation| over the polydisc, obtained by
    // geometric extrapolation of the coefficient decay.
    double tailBound() const { return tail_bound_; }
    void setTailBound(double b) { tail_bound_ = b; }

private:
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>(j) * (order_ + 1) + k; }
    void estimateTail();

    Polydisc domain_;
    int order_ = 0;
    std::vector<cplx> c_;
    double tail_bound_ = 0.0;
};

}  // namespace tf
