#include "twistorforge/zeros.hpp"

#include <cmath>
#include <vector>

#include "twistorforge/dft.hpp"
#include "twistorforge/errors.hpp"

namespace tf {

int countZeros(const std::function<cplx(cplx)>& f, cplx center, double radius,
               int quadrature_order) {
    const int m = quadrature_order;
    std::vector<cplx> g(m);
    double min_mod = 1e300, max_mod = 0.0;
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * M_PI * j / m;
        g[j] = f(center + radius * cplx(std::cos(th), std::sin(th)));
        min_mod = std::min(min_mod, std::abs(g[j]));
        max_mod = std::max(max_mod, std::abs(g[j]));
    }
    if (!(max_mod > 0.0) || min_mod < 1e-8 * max_mod)
        throw DomainError("count_zeros: function vanishes on or too near the contour");

    // Spectral derivative in the circle parameter theta.
    std::vector<cplx> c = dft(g);
    std::vector<cplx> dg(m, cplx{0.0, 0.0});
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * M_PI * j / m;
        cplx acc{0.0, 0.0};
        for (int k = 0; k < m; ++k) {
            int freq = dftFrequency(static_cast<std::size_t>(k), static_cast<std::size_t>(m));
            cplx phase(std::cos(freq * th), std::sin(freq * th));
            acc += cplx(0.0, static_cast<double>(freq)) * c[k] * phase;
        }
        dg[j] = acc;
    }

    // Winding number (1/2 pi i) \oint dg/g, trapezoid on the uniform grid.
    cplx acc{0.0, 0.0};
    for (int j = 0; j < m; ++j) acc += dg[j] / g[j];
    cplx winding = acc / cplx(0.0, static_cast<double>(m));

    double nearest = std::round(winding.real());
    if (std::abs(winding - cplx(nearest, 0.0)) > 0.1)
        throw ConvergenceError("count_zeros: winding integral is not close to an integer");
    return static_cast<int>(nearest);
}

}  // namespace tf
