#pragma once

// Declarative registry of the ten extended series identities: the left-hand
// series family f(a), the optional companion g(a), every right-hand variant,
// the special values, the derivative table at a = 0, the Catalan-constant
// limits, and the boundary function registered for the second certificate of
// identity 1.

#include <optional>
#include <string>
#include <vector>

#include "wzs/closedform.hpp"
#include "wzs/series.hpp"

namespace wzs {

struct RhsTerm {
    ClosedForm coeff;
    std::optional<PochhammerSeries> series; // absent: the coefficient stands alone
};

struct RhsVariant {
    std::string label; // equation tag, e.g. "(2)"
    std::vector<RhsTerm> terms;
};

struct SpecialValue {
    Rational a;
    ClosedForm value;
};

struct DerivativeTable {
    ClosedForm f0, f1, f2; // f(0), f'(0), f''(0)
};

struct CatalanLimit {
    ClosedForm value;          // e.g. -128 G / pi
    Rational inner_coeff;      // limit coefficient of the inner-series route
    PochhammerSeries inner;    // inner series, evaluated at a = 0
    ClosedForm g_prefactor;    // multiplier of g(a) inside the bracket
};

// Variant `composed` equals variant `base` with g(a) replaced through
// identity `g_identity`'s variant `g_variant`.
struct Composition {
    std::string composed;
    std::string base;
    int g_identity = 0;
    std::string g_variant;
};

struct IdentityDef {
    int id = 0;
    PochhammerSeries lhs;
    std::optional<PochhammerSeries> aux_g;
    std::vector<RhsVariant> variants;
    std::vector<SpecialValue> special_values;
    DerivativeTable derivatives;
    std::optional<CatalanLimit> catalan;
    std::optional<Composition> composition;

    const RhsVariant& variant(const std::string& label) const;
};

const std::vector<IdentityDef>& registry();
const IdentityDef& identity(int id);

// Closed-form boundary functions S(a) = lim_k sum_n G_a(n,k), keyed by
// certificate name. Only the second pair of identity 1 has a printed form.
struct BoundaryForm {
    std::string pair_name;
    ClosedForm s_of_a;
};
const std::vector<BoundaryForm>& boundary_forms();
const BoundaryForm* boundary_form_for(const std::string& pair_name);

// The default verification grid in a (singular points are skipped per check).
std::vector<Rational> default_grid();

// default_grid() plus the identity's special-value points, deduplicated.
std::vector<Rational> verification_grid(const IdentityDef& def);

// A copy of the registry entry with one unit added to the chosen coefficient
// of the lhs weight polynomial; used by the mutation smoke tests.
IdentityDef perturb_lhs_weight(const IdentityDef& def, size_t term_index);

} // namespace wzs
