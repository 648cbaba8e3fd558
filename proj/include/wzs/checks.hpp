#pragma once

// Verification operations over the registry: two-sided identity checks on a
// grid, special values, derivative tables by high-precision central
// differences, Catalan-constant limits, telescoping sums, and the boundary
// function of the second certificate of identity 1.

#include <string>
#include <vector>

#include "wzs/registry.hpp"
#include "wzs/wzpair.hpp"

namespace wzs {

struct CheckReport {
    std::string kind;    // identity | special | derivative | catalan | telescoping | boundary
    int identity_id = 0;
    std::string variant; // equation label, pair name, or route tag
    std::string a_label; // point (or step/order descriptor) the check ran at
    BigFloat lhs;        // series-side value
    BigFloat rhs;        // closed-form / second-route value
    BigFloat abs_diff;
    BigFloat rel_diff;
    BigFloat tol; // relative tolerance the verdict used
    BigFloat lhs_err, rhs_err;
    long terms = 0;
    bool pass = false;
    std::string note;
};

// Makes a report out of two computed values; pass iff
// |lhs-rhs| <= tol*max(|lhs|,|rhs|,1e-2) + lhs_err + rhs_err.
CheckReport make_report(std::string kind, int id, std::string variant, std::string a_label,
                        const BigFloat& lhs, const BigFloat& rhs, const BigFloat& tol,
                        const BigFloat& lhs_err, const BigFloat& rhs_err, long terms);

// Series-side evaluations. a is exact; tolerances are absolute.
SumResult eval_lhs(int id, const Rational& a, long prec, const BigFloat& tol,
                   long max_terms = 100000);
SumResult eval_g(int id, const Rational& a, long prec, const BigFloat& tol,
                 long max_terms = 100000);
SumResult eval_rhs(int id, const std::string& variant, const Rational& a, long prec,
                   const BigFloat& tol, long max_terms = 100000);

// Throws DomainError when the point is singular/inadmissible for the variant.
void require_admissible(int id, const std::string& variant, const Rational& a);

// lhs-vs-variant comparison at one grid point; rel_tol is relative.
CheckReport check_identity(int id, const std::string& variant, const Rational& a, long prec,
                           const BigFloat& rel_tol, long max_terms = 100000);

// f at the registered special points against their closed forms.
std::vector<CheckReport> check_special_values(int id, long prec,
                                              const BigFloat& rel_tol);

// order 0: f(0) directly; orders 1,2: central differences with step h at
// working precision >= max(400, prec + 4 |log2 h|).
CheckReport check_derivative(int id, int order, const BigFloat& h, long prec,
                             const BigFloat& rel_tol);

struct CatalanReports {
    CheckReport extrapolated; // bracket at a = 2^-j, polynomial extrapolation
    CheckReport inner;        // accelerated inner-series route
};
CatalanReports check_catalan_limit(int id, long prec, const BigFloat& extrap_tol,
                                   const BigFloat& inner_tol);

// sum_n G_a(n,0) = sum_{k<K} F_a(0,k) + sum_n G_a(n,K), reported as residual.
CheckReport check_telescoping(const WZPair& pair, const Rational& a, long K, long prec,
                              const BigFloat& tol);

struct BoundaryReports {
    CheckReport column_route; // fit of column sums at k = 64,128,256 (+offsets)
    CheckReport finite_route; // sum_n G_a(n,0) - sum_k F_a(0,k)
};
BoundaryReports check_boundary_limit(const WZPair& pair, const Rational& a, long prec,
                                     const BigFloat& column_tol, const BigFloat& finite_tol);

// Composed-variant consistency: the substitution structure (15)=(14)o(2) etc.
CheckReport check_composition(int id, const Rational& a, long prec, const BigFloat& rel_tol);

} // namespace wzs
