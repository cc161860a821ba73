#pragma once

#include <complex>
#include <memory>
#include <string>

#include "twistorforge/errors.hpp"

namespace tf {

using cplx = std::complex<double>;

// First-order jet of a scalar holomorphic function of (z, zt).
struct ScalarJet {
    cplx value{0.0, 0.0};
    cplx dz{0.0, 0.0};
    cplx dzt{0.0, 0.0};
};

// Immutable holomorphic expression in the variables z and zt.
// Supported grammar: decimal literals, `i`, `z`, `zt`, `+ - * / ^`(integer
// exponent), `exp(...)`, parentheses.
class Expr {
public:
    // Throws ParseError (with 1-based column reported as "line") on bad input.
    static Expr parse(const std::string& text);
    static Expr constant(cplx value);

    ScalarJet jet(cplx z, cplx zt) const;
    cplx eval(cplx z, cplx zt) const;

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

}  // namespace tf
