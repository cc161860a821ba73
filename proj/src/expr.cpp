#include "twistorforge/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace tf {

struct Expr::Node {
    enum class Kind { Const, VarZ, VarZt, Add, Sub, Mul, Div, Neg, Pow, Exp };
    Kind kind;
    cplx value{};   // Const
    int exponent = 0;  // Pow
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

NodePtr makeNode(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr makeConst(cplx v) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Const;
    n->value = v;
    return n;
}

ScalarJet evalNode(const Expr::Node& n, cplx z, cplx zt) {
    switch (n.kind) {
        case Kind::Const:
            return {n.value, {0, 0}, {0, 0}};
        case Kind::VarZ:
            return {z, {1, 0}, {0, 0}};
        case Kind::VarZt:
            return {zt, {0, 0}, {1, 0}};
        case Kind::Neg: {
            ScalarJet a = evalNode(*n.a, z, zt);
            return {-a.value, -a.dz, -a.dzt};
        }
        case Kind::Add: {
            ScalarJet a = evalNode(*n.a, z, zt), b = evalNode(*n.b, z, zt);
            return {a.value + b.value, a.dz + b.dz, a.dzt + b.dzt};
        }
        case Kind::Sub: {
            ScalarJet a = evalNode(*n.a, z, zt), b = evalNode(*n.b, z, zt);
            return {a.value - b.value, a.dz - b.dz, a.dzt - b.dzt};
        }
        case Kind::Mul: {
            ScalarJet a = evalNode(*n.a, z, zt), b = evalNode(*n.b, z, zt);
            return {a.value * b.value, a.dz * b.value + a.value * b.dz,
                    a.dzt * b.value + a.value * b.dzt};
        }
        case Kind::Div: {
            ScalarJet a = evalNode(*n.a, z, zt), b = evalNode(*n.b, z, zt);
            if (std::abs(b.value) == 0.0)
                throw DomainError("division by zero in expression evaluation");
            cplx inv = 1.0 / b.value;
            cplx v = a.value * inv;
            return {v, (a.dz - v * b.dz) * inv, (a.dzt - v * b.dzt) * inv};
        }
        case Kind::Pow: {
            ScalarJet a = evalNode(*n.a, z, zt);
            int p = n.exponent;
            if (p == 0) return {{1, 0}, {0, 0}, {0, 0}};
            bool neg = p < 0;
            int q = neg ? -p : p;
            cplx v = std::pow(a.value, q);
            cplx dv = static_cast<double>(q) * std::pow(a.value, q - 1);
            if (neg) {
                if (std::abs(v) == 0.0)
                    throw DomainError("negative power of zero in expression evaluation");
                cplx w = 1.0 / v;
                cplx dw = -dv * w * w;
                return {w, dw * a.dz, dw * a.dzt};
            }
            return {v, dv * a.dz, dv * a.dzt};
        }
        case Kind::Exp: {
            ScalarJet a = evalNode(*n.a, z, zt);
            cplx v = std::exp(a.value);
            return {v, v * a.dz, v * a.dzt};
        }
    }
    throw Error("internal", "unreachable expression node kind");
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parseAll() {
        NodePtr e = parseSum();
        skipWs();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(static_cast<int>(pos_) + 1, "expression: " + msg);
    }

    void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skipWs();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skipWs();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr parseSum() {
        NodePtr e = parseProduct();
        for (;;) {
            if (eat('+'))
                e = makeNode(Kind::Add, e, parseProduct());
            else if (eat('-'))
                e = makeNode(Kind::Sub, e, parseProduct());
            else
                return e;
        }
    }

    NodePtr parseProduct() {
        NodePtr e = parseUnary();
        for (;;) {
            if (eat('*'))
                e = makeNode(Kind::Mul, e, parseUnary());
            else if (eat('/'))
                e = makeNode(Kind::Div, e, parseUnary());
            else
                return e;
        }
    }

    NodePtr parseUnary() {
        if (eat('-')) return makeNode(Kind::Neg, parseUnary());
        if (eat('+')) return parseUnary();
        return parsePower();
    }

    NodePtr parsePower() {
        NodePtr base = parseAtom();
        if (eat('^')) {
            bool neg = eat('-');
            skipWs();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("integer exponent expected after '^'");
            int p = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                p = p * 10 + (s_[pos_++] - '0');
            auto n = std::make_shared<Expr::Node>();
            n->kind = Kind::Pow;
            n->exponent = neg ? -p : p;
            n->a = base;
            return n;
        }
        return base;
    }

    NodePtr parseAtom() {
        skipWs();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parseSum();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c))) return parseIdent();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parseNumber() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            ++pos_;
        // exponent part, e.g. 1e-3
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;  // not an exponent, e.g. "2*exp(z)"
            }
        }
        double v = 0.0;
        try {
            v = std::stod(s_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            fail("malformed number literal");
        }
        return makeConst(cplx(v, 0.0));
    }

    NodePtr parseIdent() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        if (id == "i") return makeConst(cplx(0.0, 1.0));
        if (id == "z") return makeNode(Kind::VarZ);
        if (id == "zt") return makeNode(Kind::VarZt);
        if (id == "exp") {
            if (!eat('(')) fail("exp requires parenthesized argument");
            NodePtr arg = parseSum();
            if (!eat(')')) fail("missing ')' after exp argument");
            return makeNode(Kind::Exp, arg);
        }
        pos_ = start;
        fail("unknown identifier '" + id + "'");
    }
};

}  // namespace

Expr Expr::parse(const std::string& text) {
    Parser p(text);
    return Expr(p.parseAll());
}

Expr Expr::constant(cplx value) { return Expr(makeConst(value)); }

ScalarJet Expr::jet(cplx z, cplx zt) const { return evalNode(*root_, z, zt); }

cplx Expr::eval(cplx z, cplx zt) const { return evalNode(*root_, z, zt).value; }

}  // namespace tf
