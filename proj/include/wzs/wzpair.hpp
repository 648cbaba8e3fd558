#pragma once

// WZ-pair certificates: a hypergeometric kernel B(n,k) with rational-function
// multipliers R_F, R_G so that F = B*R_F and G = B*R_G. A pair is valid when
// G(n,k+1) - G(n,k) = F(n+1,k) - F(n,k) holds identically, which reduces to
// the vanishing of an exact rational-function defect.

#include <string>
#include <vector>

#include "wzs/hyperterm.hpp"
#include "wzs/ratfunc.hpp"

namespace wzs {

struct WZPair {
    std::string name;      // e.g. "id1-pairA"
    int identity_id = 0;   // 1..10
    std::string source_eq; // statement this pair certifies, e.g. "(1)"
    HyperTerm B;
    RatFunc RF; // F = B * RF
    RatFunc RG; // G = B * RG
};

// D = RG(n,k+1) rho_k - RG(n,k) - RF(n+1,k) rho_n + RF(n,k), where rho_n and
// rho_k are the shift quotients of B. The pair is valid iff D is identically
// zero.
RatFunc wz_defect(const WZPair& pair);

struct WZCheckResult {
    bool valid = false;
    RatFunc defect; // zero when valid
};

WZCheckResult check_wz(const WZPair& pair);

// Exact rational check of G(n,k+1)-G(n,k) = F(n+1,k)-F(n,k) at one integer
// lattice point; independent of the symbolic shift-ratio path.
bool wz_relation_holds_at(const WZPair& pair, long n, long k);

// All certificates printed with the ten identities, in identity order.
const std::vector<WZPair>& all_certificates();

// Certificates belonging to one identity.
std::vector<WZPair> certificates_for(int identity_id);

// Finds by name; throws DomainError when absent.
const WZPair& certificate(const std::string& name);

} // namespace wzs
