#pragma once

// Closed-form expressions in the parameter a: rational constants, the named
// transcendental constants, pow with base rational and exponent affine in a,
// cos(pi * affine(a)), rising factorials (x)_a = Gamma(x+a)/Gamma(x), and
// logs of rationals, combined by field operations. Singular points (cos-pi
// zeros, vanishing rational denominators, pochhammer poles) are detectable
// exactly at rational a.

#include <memory>
#include <optional>
#include <string>

#include "wzs/bigfloat.hpp"
#include "wzs/constants.hpp"
#include "wzs/series.hpp"

namespace wzs {

class ClosedForm {
public:
    enum class Kind { Literal, Const, Param, Add, Sub, Mul, Div, Pow, CosPi, PochA, LnRat };

    struct Node {
        Kind kind;
        Rational lit;        // Literal, Pow base, PochA base, LnRat argument
        Constant named{};    // Const
        AffineInA affine;    // Pow exponent, CosPi argument
        std::shared_ptr<const Node> lhs, rhs;
    };

    ClosedForm() : node_(nullptr) {} // empty form; evaluates to 1
    explicit ClosedForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static ClosedForm literal(const Rational& q);
    static ClosedForm constant(Constant c);
    static ClosedForm param(); // the variable a
    static ClosedForm pow_of(const Rational& base, const AffineInA& e);
    static ClosedForm cos_pi_of(const AffineInA& arg);
    static ClosedForm poch_a(const Rational& base); // (base)_a
    static ClosedForm ln_of(const Rational& q);

    bool empty() const { return node_ == nullptr; }
    const std::shared_ptr<const Node>& node() const { return node_; }

    BigFloat eval(const BigFloat& a, long prec) const;
    BigFloat eval0(long prec) const { return eval(BigFloat::of(0, prec), prec); }

    // Provably-zero / pole detection at an exact rational point.
    bool provably_zero_at(const Rational& a) const;
    std::optional<std::string> singularity_at(const Rational& a) const;

    bool same_tree(const ClosedForm& o) const;

    std::string str() const;

    friend ClosedForm operator+(const ClosedForm& x, const ClosedForm& y);
    friend ClosedForm operator-(const ClosedForm& x, const ClosedForm& y);
    friend ClosedForm operator*(const ClosedForm& x, const ClosedForm& y);
    friend ClosedForm operator/(const ClosedForm& x, const ClosedForm& y);

private:
    // Exact rational value when the subtree is rational-valued at a.
    std::optional<Rational> rational_value_at(const Rational& a) const;
    std::shared_ptr<const Node> node_;
};

// Terse builders used by the identity registry.
inline ClosedForm cf(long q) { return ClosedForm::literal(rat(q)); }
inline ClosedForm cf(const Rational& q) { return ClosedForm::literal(q); }
inline ClosedForm cf_pi() { return ClosedForm::constant(Constant::Pi); }
inline ClosedForm cf_const(Constant c) { return ClosedForm::constant(c); }
inline ClosedForm cf_a() { return ClosedForm::param(); }
// base^(c1*a + c0)
inline ClosedForm cf_pow(const Rational& base, const Rational& c1, const Rational& c0 = rat(0)) {
    return ClosedForm::pow_of(base, aff(c1, c0));
}
// cos(pi (c1*a + c0))
inline ClosedForm cf_cospi(const Rational& c1, const Rational& c0 = rat(0)) {
    return ClosedForm::cos_pi_of(aff(c1, c0));
}
inline ClosedForm cf_poch(const Rational& base) { return ClosedForm::poch_a(base); }
inline ClosedForm cf_ln(const Rational& q) { return ClosedForm::ln_of(q); }

} // namespace wzs
