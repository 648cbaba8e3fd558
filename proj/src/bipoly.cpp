#include "wzs/bipoly.hpp"

#include <sstream>

namespace wzs {

BiPoly BiPoly::monomial(const Rational& c, int deg_n, int deg_k) {
    BiPoly p;
    if (c != 0) p.terms_[{deg_n, deg_k}] = c;
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::pair<int, int>{0, 0});
}

Rational BiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int BiPoly::deg_n() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int BiPoly::deg_k() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

void BiPoly::add_term(int dn, int dk, const Rational& c) {
    auto it = terms_.find({dn, dk});
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(std::pair<int, int>{dn, dk}, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly r;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(1);
    BiPoly base(*this);
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

BiPoly BiPoly::shifted(int dn, int dk) const {
    if (dn == 0 && dk == 0) return *this;
    const BiPoly sn = var_n() + BiPoly(dn);
    const BiPoly sk = var_k() + BiPoly(dk);
    // Cache powers up to the needed degree.
    std::vector<BiPoly> np{BiPoly(1)}, kp{BiPoly(1)};
    for (int i = 1; i <= deg_n(); ++i) np.push_back(np.back() * sn);
    for (int i = 1; i <= deg_k(); ++i) kp.push_back(kp.back() * sk);
    BiPoly r;
    for (const auto& [e, c] : terms_) r += c * (np[e.first] * kp[e.second]);
    return r;
}

Rational BiPoly::eval(const Rational& n, const Rational& k) const {
    // Horner in n with inner Horner in k, walking the ordered term map.
    Rational r(0);
    for (const auto& [e, c] : terms_) r += c * pow_rat(n, e.first) * pow_rat(k, e.second);
    return r;
}

std::pair<int, int> BiPoly::leading_exponent() const { return terms_.rbegin()->first; }

const Rational& BiPoly::leading_coeff() const { return terms_.rbegin()->second; }

std::string BiPoly::str(const char* vn, const char* vk) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool has_vars = e.first > 0 || e.second > 0;
        if (!has_vars || abs_c != 1) {
            os << abs_c.get_str();
            if (has_vars) os << "*";
        }
        if (e.first > 0) {
            os << vn;
            if (e.first > 1) os << "^" << e.first;
            if (e.second > 0) os << "*";
        }
        if (e.second > 0) {
            os << vk;
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

} // namespace wzs
