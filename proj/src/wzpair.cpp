#include "wzs/wzpair.hpp"

namespace wzs {

RatFunc wz_defect(const WZPair& pair) {
    const RatFunc rho_n = pair.B.shift_ratio(HyperTerm::Direction::N);
    const RatFunc rho_k = pair.B.shift_ratio(HyperTerm::Direction::K);
    return pair.RG.shifted(0, 1) * rho_k - pair.RG - pair.RF.shifted(1, 0) * rho_n + pair.RF;
}

WZCheckResult check_wz(const WZPair& pair) {
    WZCheckResult r;
    r.defect = wz_defect(pair);
    r.valid = r.defect.is_zero();
    return r;
}

bool wz_relation_holds_at(const WZPair& pair, long n, long k) {
    const auto F = [&](long nn, long kk) -> Rational {
        return pair.B.eval_exact(nn, kk) * pair.RF.eval(Rational(nn), Rational(kk));
    };
    const auto G = [&](long nn, long kk) -> Rational {
        return pair.B.eval_exact(nn, kk) * pair.RG.eval(Rational(nn), Rational(kk));
    };
    const Rational lhs = G(n, k + 1) - G(n, k);
    const Rational rhs = F(n + 1, k) - F(n, k);
    return lhs == rhs;
}

std::vector<WZPair> certificates_for(int identity_id) {
    std::vector<WZPair> out;
    for (const auto& p : all_certificates())
        if (p.identity_id == identity_id) out.push_back(p);
    return out;
}

const WZPair& certificate(const std::string& name) {
    for (const auto& p : all_certificates())
        if (p.name == name) return p;
    throw DomainError("unknown certificate: " + name);
}

} // namespace wzs
