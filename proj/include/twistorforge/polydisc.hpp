#pragma once

#include <complex>

#include "twistorforge/errors.hpp"

namespace tf {

using cplx = std::complex<double>;

// Product of two discs in the (z, zt) base coordinates.  radius_zt is unused
// for one-variable maps.
struct Polydisc {
    cplx center_z{0.0, 0.0};
    cplx center_zt{0.0, 0.0};
    double radius_z = 1.0;
    double radius_zt = 1.0;

    Polydisc() = default;
    Polydisc(cplx cz, cplx czt, double rz, double rzt)
        : center_z(cz), center_zt(czt), radius_z(rz), radius_zt(rzt) {
        if (!(rz > 0.0) || !(rzt > 0.0))
            throw DomainError("polydisc radii must be strictly positive");
    }

    bool contains(cplx z, cplx zt, double slack = 1e-9) const {
        return std::abs(z - center_z) <= radius_z + slack &&
               std::abs(zt - center_zt) <= radius_zt + slack;
    }

    void require(cplx z, cplx zt) const {
        if (!contains(z, zt))
            throw DomainError("point outside polydisc domain");
    }

    // Largest polydisc contained in both, same centers required to be inside.
    Polydisc clippedTo(const Polydisc& outer) const {
        double rz = radius_z, rzt = radius_zt;
        double dz = std::abs(center_z - outer.center_z);
        double dzt = std::abs(center_zt - outer.center_zt);
        rz = std::min(rz, outer.radius_z - dz);
        rzt = std::min(rzt, outer.radius_zt - dzt);
        if (!(rz > 0.0) || !(rzt > 0.0))
            throw DomainError("empty intersection of polydiscs");
        return Polydisc(center_z, center_zt, rz, rzt);
    }
};

}  // namespace tf
