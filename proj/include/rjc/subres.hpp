#pragma once

#include <utility>
#include <vector>

#include "rjc/bpoly.hpp"

namespace rjc {

/// Sylvester matrix of two polynomials in one distinguished variable, with
/// entries that are polynomials in the other variable. Row layout: m rows of
/// p's coefficients (a_n ... a_0) each shifted one column right of the row
/// above, then n rows of q's coefficients (b_m ... b_0) with the bottom row
/// leftmost and each row above it shifted one column right.
struct SylvesterMatrix {
    int n = 0;  // degree of p in the eliminated variable
    int m = 0;  // degree of q in the eliminated variable
    std::vector<std::vector<UPoly>> entries;  // (n+m) x (n+m)
};

SylvesterMatrix sylvester(const BPoly& p, const BPoly& q, Var var);

/// Same layout from explicit ascending coefficient lists (declared shape:
/// leading entries may be zero polynomials).
SylvesterMatrix sylvester_from_coeffs(const std::vector<UPoly>& cp, const std::vector<UPoly>& cq);

/// k-subresultant: determinant of the Sylvester matrix with the first and
/// last k rows and columns deleted. Requires k <= floor((n+m)/2).
UPoly subresultant(const BPoly& p, const BPoly& q, Var var, int k);

UPoly subresultant_from_coeffs(const std::vector<UPoly>& cp, const std::vector<UPoly>& cq, int k);

/// Closed forms of (R0, R1) for the monic pair
/// p = v^2 + a v + b, q = v^2 + c v + d.
std::pair<UPoly, UPoly> r0_r1_quad_pair(const UPoly& a, const UPoly& b, const UPoly& c,
                                        const UPoly& d);

/// Closed forms of (R0, R1) for the monic pair
/// p = v^2 + a v + b, q = v^3 + c v^2 + d v + e.
std::pair<UPoly, UPoly> r0_r1_quad_cubic(const UPoly& a, const UPoly& b, const UPoly& c,
                                         const UPoly& d, const UPoly& e);

/// Number of common roots counted with multiplicity (= deg gcd): the least k
/// with R_0 = ... = R_{k-1} = 0 and R_k != 0.
int common_root_count(const UPoly& p, const UPoly& q);

/// Determinant of a matrix of univariate polynomials (fraction-free).
UPoly upoly_det(std::vector<std::vector<UPoly>> m);

/// Subresultant polynomial chain S_0, ..., S_{min(n,m)} of f and g in `var`
/// (classical sliding layout, determinant-polynomial form). S_k has degree
/// <= k in `var`; when the leading coefficients of f and g do not vanish at
/// a point, the least k with nonzero principal coefficient S_k[k] gives the
/// gcd of the specializations, namely S_k itself specialized.
std::vector<BPoly> subresultant_polys(const BPoly& f, const BPoly& g, Var var);

}  // namespace rjc
