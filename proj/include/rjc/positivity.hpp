#pragma once

#include <optional>
#include <vector>

#include "rjc/realroots.hpp"

namespace rjc {

/// Symmetric Hankel-type matrix with entry(r, s) = alpha(2j - r - s + 1, k)
/// for 1-indexed r, s; the bottom-right entry is alpha(-1, k) = 1.
struct HankelMatrix {
    int j = 0;
    int k = 0;
    std::vector<std::vector<Rat>> entries;  // (j+1) x (j+1)
};

/// alpha(i, k) = (-2)^(i+1) * prod_{l=0..i} (2k - l) / (4k - (2l + 1)),
/// with the empty-product convention at i = -1. Requires denominators
/// nonzero over the product range.
Rat alpha(int i, int k);

/// The (j+1) x (j+1) matrix above; requires 1 <= j <= k.
HankelMatrix hankel(int j, int k);

/// Exact determinant (fraction-free elimination).
Rat det_exact(const std::vector<std::vector<Rat>>& m);

/// Leading principal minors of sizes 1..n.
std::vector<Rat> leading_minors(const std::vector<std::vector<Rat>>& m);

/// Coefficient vectors (a, c), both of length k+1, for building
/// L = g^2 + h^2 with g = sum a_j t^j, h = sum c_j t^j.
struct SquaresInput {
    std::vector<Rat> a;
    std::vector<Rat> c;
};

/// L(t) = sum_j b_j (2(j+1) t + 2j + 1) t^j over the coefficient vector b.
UPoly l_poly(const std::vector<Rat>& b);

struct BrunaWitnesses {
    bool is_zero = false;
    std::optional<Rat> theta1;  // L(theta1) < 0
    std::optional<Rat> theta2;  // L(theta2) > 0
};

/// For nonzero b, exact rationals with L(theta1) < 0 < L(theta2); such points
/// always exist. Throws LemmaViolation if the search fails (never expected).
BrunaWitnesses bruna_witnesses(const std::vector<Rat>& b);

/// b_0..b_{2k-1} built from (a, c) with
/// b_j = 1/(j+1) sum_{l=0..j} (-2)^l prod_{i=0..l} (j-(i-1))/(2(j-i)+1)
///       * sum_{r+s=j-l} (a_r a_s + c_r c_s).
std::vector<Rat> b_from_squares(const SquaresInput& input);

/// K(a, c) = -4k b_{2k-1} + a_k^2 + c_k^2, a positive definite quadratic
/// form whose half-Hessian in the a-variables is hankel(k, k).
Rat K_form(const SquaresInput& input);

}  // namespace rjc
