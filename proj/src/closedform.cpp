#include "wzs/closedform.hpp"

#include <sstream>

namespace wzs {

namespace {
std::shared_ptr<ClosedForm::Node> make(ClosedForm::Kind k) {
    auto n = std::make_shared<ClosedForm::Node>();
    n->kind = k;
    return n;
}

std::shared_ptr<ClosedForm::Node> binary(ClosedForm::Kind k, const ClosedForm& a,
                                         const ClosedForm& b) {
    auto n = make(k);
    n->lhs = a.node();
    n->rhs = b.node();
    return n;
}
} // namespace

ClosedForm ClosedForm::literal(const Rational& q) {
    auto n = make(Kind::Literal);
    n->lit = q;
    return ClosedForm(n);
}

ClosedForm ClosedForm::constant(Constant c) {
    auto n = make(Kind::Const);
    n->named = c;
    return ClosedForm(n);
}

ClosedForm ClosedForm::param() { return ClosedForm(make(Kind::Param)); }

ClosedForm ClosedForm::pow_of(const Rational& base, const AffineInA& e) {
    if (base <= 0) throw DomainError("pow closed form requires a positive rational base");
    auto n = make(Kind::Pow);
    n->lit = base;
    n->affine = e;
    return ClosedForm(n);
}

ClosedForm ClosedForm::cos_pi_of(const AffineInA& arg) {
    auto n = make(Kind::CosPi);
    n->affine = arg;
    return ClosedForm(n);
}

ClosedForm ClosedForm::poch_a(const Rational& base) {
    if (base <= 0) throw DomainError("pochhammer closed form requires a positive rational base");
    auto n = make(Kind::PochA);
    n->lit = base;
    return ClosedForm(n);
}

ClosedForm ClosedForm::ln_of(const Rational& q) {
    if (q <= 0) throw DomainError("ln closed form requires a positive rational");
    auto n = make(Kind::LnRat);
    n->lit = q;
    return ClosedForm(n);
}

ClosedForm operator+(const ClosedForm& x, const ClosedForm& y) {
    return ClosedForm(binary(ClosedForm::Kind::Add, x, y));
}
ClosedForm operator-(const ClosedForm& x, const ClosedForm& y) {
    return ClosedForm(binary(ClosedForm::Kind::Sub, x, y));
}
ClosedForm operator*(const ClosedForm& x, const ClosedForm& y) {
    return ClosedForm(binary(ClosedForm::Kind::Mul, x, y));
}
ClosedForm operator/(const ClosedForm& x, const ClosedForm& y) {
    return ClosedForm(binary(ClosedForm::Kind::Div, x, y));
}

BigFloat ClosedForm::eval(const BigFloat& a, long prec) const {
    if (!node_) return BigFloat::of(1, prec);
    const long wp = guarded(prec) + 16;
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Literal: return BigFloat::of(n.lit, prec);
        case Kind::Const: return wzs::constant(n.named, prec);
        case Kind::Param: return a.round_to(prec);
        case Kind::Add:
            return add(ClosedForm(n.lhs).eval(a, wp), ClosedForm(n.rhs).eval(a, wp), prec);
        case Kind::Sub:
            return sub(ClosedForm(n.lhs).eval(a, wp), ClosedForm(n.rhs).eval(a, wp), prec);
        case Kind::Mul:
            return mul(ClosedForm(n.lhs).eval(a, wp), ClosedForm(n.rhs).eval(a, wp), prec);
        case Kind::Div: {
            const BigFloat den = ClosedForm(n.rhs).eval(a, wp);
            if (den.is_zero()) throw PoleError("closed form division by zero");
            return div(ClosedForm(n.lhs).eval(a, wp), den, prec);
        }
        case Kind::Pow:
            return pow(BigFloat::of(n.lit, wp), n.affine.at(a.round_to(wp), wp), prec);
        case Kind::CosPi: return cos_pi(n.affine.at(a.round_to(wp), wp), prec);
        case Kind::PochA: {
            // (x)_a = Gamma(x+a)/Gamma(x)
            const BigFloat x = BigFloat::of(n.lit, wp);
            const BigFloat xa = add(x, a.round_to(wp), wp);
            if (xa.sgn() <= 0 && xa.is_integer())
                throw PoleError("pochhammer closed form pole");
            if (xa.sgn() > 0)
                return exp(sub(lngamma(xa, wp), lngamma(x, wp), wp), prec);
            return div(gamma_fn(xa, wp), gamma_fn(x, wp), prec);
        }
        case Kind::LnRat: return ln(BigFloat::of(n.lit, wp), prec);
    }
    throw Error("unreachable closed-form kind");
}

std::optional<Rational> ClosedForm::rational_value_at(const Rational& a) const {
    if (!node_) return Rational(1);
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Literal: return n.lit;
        case Kind::Param: return a;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
        case Kind::Div: {
            const auto l = ClosedForm(n.lhs).rational_value_at(a);
            const auto r = ClosedForm(n.rhs).rational_value_at(a);
            if (!l || !r) return std::nullopt;
            switch (n.kind) {
                case Kind::Add: return Rational(*l + *r);
                case Kind::Sub: return Rational(*l - *r);
                case Kind::Mul: return Rational(*l * *r);
                default:
                    if (*r == 0) return std::nullopt;
                    return Rational(*l / *r);
            }
        }
        default: return std::nullopt;
    }
}

bool ClosedForm::provably_zero_at(const Rational& a) const {
    if (!node_) return false;
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Literal: return n.lit == 0;
        case Kind::Param: return a == 0;
        case Kind::Add:
        case Kind::Sub: {
            const auto v = rational_value_at(a);
            return v && *v == 0;
        }
        case Kind::Mul:
            return ClosedForm(n.lhs).provably_zero_at(a) || ClosedForm(n.rhs).provably_zero_at(a);
        case Kind::Div: return ClosedForm(n.lhs).provably_zero_at(a);
        case Kind::CosPi: {
            // cos(pi t) = 0 iff t - 1/2 is an integer
            const Rational t = n.affine.at(a);
            return is_integer(Rational(t - rat(1, 2)));
        }
        default: return false; // Const, Pow, PochA, LnRat are never zero
    }
}

std::optional<std::string> ClosedForm::singularity_at(const Rational& a) const {
    if (!node_) return std::nullopt;
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul: {
            if (auto s = ClosedForm(n.lhs).singularity_at(a)) return s;
            return ClosedForm(n.rhs).singularity_at(a);
        }
        case Kind::Div: {
            if (auto s = ClosedForm(n.lhs).singularity_at(a)) return s;
            if (auto s = ClosedForm(n.rhs).singularity_at(a)) return s;
            if (ClosedForm(n.rhs).provably_zero_at(a))
                return "denominator vanishes at a = " + a.get_str();
            return std::nullopt;
        }
        case Kind::PochA: {
            const Rational arg = Rational(n.lit + a);
            if (is_nonpositive_integer(arg))
                return "rising factorial pole at a = " + a.get_str();
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

bool ClosedForm::same_tree(const ClosedForm& o) const {
    if (!node_ || !o.node_) return node_ == o.node_;
    const Node& x = *node_;
    const Node& y = *o.node_;
    if (x.kind != y.kind || x.lit != y.lit || x.named != y.named || !(x.affine == y.affine))
        return false;
    const bool lhs_ok = (x.lhs == nullptr) == (y.lhs == nullptr) &&
                        (!x.lhs || ClosedForm(x.lhs).same_tree(ClosedForm(y.lhs)));
    const bool rhs_ok = (x.rhs == nullptr) == (y.rhs == nullptr) &&
                        (!x.rhs || ClosedForm(x.rhs).same_tree(ClosedForm(y.rhs)));
    return lhs_ok && rhs_ok;
}

namespace {
std::string affine_str(const AffineInA& f) {
    std::ostringstream os;
    if (f.coef != 0) {
        if (f.coef == -1)
            os << "-";
        else if (f.coef != 1)
            os << f.coef.get_str() << "*";
        os << "a";
        if (f.offset > 0) os << "+" << f.offset.get_str();
        if (f.offset < 0) os << f.offset.get_str();
    } else {
        os << f.offset.get_str();
    }
    return os.str();
}
} // namespace

std::string ClosedForm::str() const {
    if (!node_) return "1";
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Literal: return n.lit.get_str();
        case Kind::Const: return constant_name(n.named);
        case Kind::Param: return "a";
        case Kind::Add: return "(" + ClosedForm(n.lhs).str() + " + " + ClosedForm(n.rhs).str() + ")";
        case Kind::Sub: return "(" + ClosedForm(n.lhs).str() + " - " + ClosedForm(n.rhs).str() + ")";
        case Kind::Mul: return ClosedForm(n.lhs).str() + "*" + ClosedForm(n.rhs).str();
        case Kind::Div: return ClosedForm(n.lhs).str() + "/(" + ClosedForm(n.rhs).str() + ")";
        case Kind::Pow: return "(" + n.lit.get_str() + ")^(" + affine_str(n.affine) + ")";
        case Kind::CosPi: return "cos(pi*(" + affine_str(n.affine) + "))";
        case Kind::PochA: return "poch(" + n.lit.get_str() + "; a)";
        case Kind::LnRat: return "ln(" + n.lit.get_str() + ")";
    }
    return "?";
}

} // namespace wzs
