#pragma once

#include <utility>
#include <vector>

namespace rjc::detail {

/// Fraction-free Bareiss determinant over an integral domain with exact
/// division. `ExactDiv(a, b)` must return a/b when b divides a.
template <class T, class ExactDiv>
T bareiss_det(std::vector<std::vector<T>> m, ExactDiv div) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return T(1);
    int sign = 1;
    T prev = T(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return T(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? T(0) - det : det;
}

}  // namespace rjc::detail
