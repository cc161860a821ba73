#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "twistorforge/expr.hpp"
#include "twistorforge/polydisc.hpp"
#include "twistorforge/series.hpp"

namespace tf {

// First-order jet of a vector-valued holomorphic map of (z, zt).
struct Jet {
    Eigen::VectorXcd value, dz, dzt;
};

// Holomorphic map Polydisc -> C^n with jet evaluation.  Backed by expression
// trees, truncated power series, or wrappers (constant linear image,
// composition with a base-coordinate change).  Values are immutable; all
// evaluation is const and thread-safe.
class AnalyticMap {
public:
    AnalyticMap() = default;

    static AnalyticMap fromExpressions(const std::vector<std::string>& exprs,
                                       const Polydisc& domain, int arity_in = 2);
    static AnalyticMap fromExprObjects(std::vector<Expr> exprs, const Polydisc& domain,
                                       int arity_in = 2);
    static AnalyticMap fromSeries(std::vector<Series2> components, int arity_in = 2);
    static AnalyticMap constant(const Eigen::VectorXcd& v, const Polydisc& domain);

    // M * f, component mixing by a constant matrix.
    static AnalyticMap linearImage(const Eigen::MatrixXcd& m, const AnalyticMap& f);
    // outer(inner(p)); inner must be a 2 -> 2 map in the base coordinates.
    static AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner);

    Jet jet(cplx z, cplx zt) const;
    Eigen::VectorXcd operator()(cplx z, cplx zt) const;
    cplx scalar(cplx z, cplx zt, int component = 0) const;

    int arityIn() const;
    int arityOut() const;
    const Polydisc& domain() const;

    // Re-expand every component as a truncated power series on `target`
    // (defaults to the map's own domain), with recorded tail bounds.
    AnalyticMap expandSeries(int order, const Polydisc* target = nullptr) const;
    // Max recorded tail bound over components (0 for expression trees).
    double tailBound() const;

    bool valid() const { return impl_ != nullptr; }

    struct Impl;

private:
    explicit AnalyticMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace tf
