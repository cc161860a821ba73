#include "twistorforge/analytic_map.hpp"

namespace tf {

struct AnalyticMap::Impl {
    enum class Kind { Exprs, Series, Linear, Composed };
    Kind kind;
    int arity_in = 2;
    Polydisc domain;

    std::vector<Expr> exprs;
    std::vector<Series2> series;

    Eigen::MatrixXcd matrix;                 // Linear
    std::shared_ptr<const Impl> a, b;        // Linear: a; Composed: a(outer), b(inner)

    int arityOut() const {
        switch (kind) {
            case Kind::Exprs: return static_cast<int>(exprs.size());
            case Kind::Series: return static_cast<int>(series.size());
            case Kind::Linear: return static_cast<int>(matrix.rows());
            case Kind::Composed: return a->arityOut();
        }
        return 0;
    }
};

namespace {

using Impl = AnalyticMap::Impl;

Jet evalImpl(const Impl& im, cplx z, cplx zt) {
    switch (im.kind) {
        case Impl::Kind::Exprs: {
            const int n = static_cast<int>(im.exprs.size());
            Jet j{Eigen::VectorXcd(n), Eigen::VectorXcd(n), Eigen::VectorXcd(n)};
            for (int i = 0; i < n; ++i) {
                ScalarJet s = im.exprs[i].jet(z, zt);
                j.value[i] = s.value;
                j.dz[i] = s.dz;
                j.dzt[i] = s.dzt;
            }
            return j;
        }
        case Impl::Kind::Series: {
            const int n = static_cast<int>(im.series.size());
            Jet j{Eigen::VectorXcd(n), Eigen::VectorXcd(n), Eigen::VectorXcd(n)};
            for (int i = 0; i < n; ++i) {
                ScalarJet s = im.series[i].jet(z, zt);
                j.value[i] = s.value;
                j.dz[i] = s.dz;
                j.dzt[i] = s.dzt;
            }
            return j;
        }
        case Impl::Kind::Linear: {
            Jet j = evalImpl(*im.a, z, zt);
            return {im.matrix * j.value, im.matrix * j.dz, im.matrix * j.dzt};
        }
        case Impl::Kind::Composed: {
            Jet inner = evalImpl(*im.b, z, zt);
            Jet outer = evalImpl(*im.a, inner.value[0], inner.value[1]);
            return {outer.value, outer.dz * inner.dz[0] + outer.dzt * inner.dz[1],
                    outer.dz * inner.dzt[0] + outer.dzt * inner.dzt[1]};
        }
    }
    throw Error("internal", "unreachable analytic map kind");
}

double tailOf(const Impl& im) {
    switch (im.kind) {
        case Impl::Kind::Exprs: return 0.0;
        case Impl::Kind::Series: {
            double t = 0.0;
            for (const auto& s : im.series) t = std::max(t, s.tailBound());
            return t;
        }
        case Impl::Kind::Linear: return im.matrix.cwiseAbs().rowwise().sum().maxCoeff() * tailOf(*im.a);
        case Impl::Kind::Composed: return tailOf(*im.a) + tailOf(*im.b);
    }
    return 0.0;
}

}  // namespace

AnalyticMap AnalyticMap::fromExpressions(const std::vector<std::string>& exprs,
                                         const Polydisc& domain, int arity_in) {
    std::vector<Expr> parsed;
    parsed.reserve(exprs.size());
    for (const auto& e : exprs) parsed.push_back(Expr::parse(e));
    return fromExprObjects(std::move(parsed), domain, arity_in);
}

AnalyticMap AnalyticMap::fromExprObjects(std::vector<Expr> exprs, const Polydisc& domain,
                                         int arity_in) {
    auto im = std::make_shared<Impl>();
    im->kind = Impl::Kind::Exprs;
    im->arity_in = arity_in;
    im->domain = domain;
    im->exprs = std::move(exprs);
    return AnalyticMap(im);
}

AnalyticMap AnalyticMap::fromSeries(std::vector<Series2> components, int arity_in) {
    if (components.empty()) throw Error("internal", "empty series map");
    auto im = std::make_shared<Impl>();
    im->kind = Impl::Kind::Series;
    im->arity_in = arity_in;
    im->domain = components.front().domain();
    im->series = std::move(components);
    return AnalyticMap(im);
}

AnalyticMap AnalyticMap::constant(const Eigen::VectorXcd& v, const Polydisc& domain) {
    std::vector<Expr> exprs;
    for (Eigen::Index i = 0; i < v.size(); ++i) exprs.push_back(Expr::constant(v[i]));
    return fromExprObjects(std::move(exprs), domain);
}

AnalyticMap AnalyticMap::linearImage(const Eigen::MatrixXcd& m, const AnalyticMap& f) {
    if (m.cols() != f.arityOut())
        throw Error("internal", "linearImage dimension mismatch");
    auto im = std::make_shared<Impl>();
    im->kind = Impl::Kind::Linear;
    im->arity_in = f.arityIn();
    im->domain = f.domain();
    im->matrix = m;
    im->a = f.impl_;
    return AnalyticMap(im);
}

AnalyticMap AnalyticMap::compose(const AnalyticMap& outer, const AnalyticMap& inner) {
    if (inner.arityOut() != 2)
        throw Error("internal", "composition requires a 2-component inner map");
    auto im = std::make_shared<Impl>();
    im->kind = Impl::Kind::Composed;
    im->arity_in = inner.arityIn();
    im->domain = inner.domain();
    im->a = outer.impl_;
    im->b = inner.impl_;
    return AnalyticMap(im);
}

Jet AnalyticMap::jet(cplx z, cplx zt) const {
    if (!impl_) throw Error("internal", "empty analytic map");
    impl_->domain.require(z, impl_->arity_in == 1 ? impl_->domain.center_zt : zt);
    return evalImpl(*impl_, z, zt);
}

Eigen::VectorXcd AnalyticMap::operator()(cplx z, cplx zt) const { return jet(z, zt).value; }

cplx AnalyticMap::scalar(cplx z, cplx zt, int component) const {
    return jet(z, zt).value[component];
}

int AnalyticMap::arityIn() const { return impl_ ? impl_->arity_in : 0; }

int AnalyticMap::arityOut() const { return impl_ ? impl_->arityOut() : 0; }

const Polydisc& AnalyticMap::domain() const {
    if (!impl_) throw Error("internal", "empty analytic map");
    return impl_->domain;
}

AnalyticMap AnalyticMap::expandSeries(int order, const Polydisc* target) const {
    const Polydisc& dom = target ? *target : domain();
    std::vector<Series2> comps;
    const int n = arityOut();
    comps.reserve(n);
    for (int i = 0; i < n; ++i) {
        comps.push_back(Series2::fit(
            [&](cplx z, cplx zt) { return evalImpl(*impl_, z, zt).value[i]; }, dom, order));
    }
    return fromSeries(std::move(comps), arityIn());
}

double AnalyticMap::tailBound() const { return impl_ ? tailOf(*impl_) : 0.0; }

}  // namespace tf
