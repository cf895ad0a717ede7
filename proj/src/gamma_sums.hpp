#pragma once

namespace qwalk::detail {

/// The two real sums shared by the Xi(l, m) closed form and the moment
/// closed forms, with w_g = (-|b|^2/|a|^2)^g C(l-1, g-1) C(m-1, g-1):
///
///   inv = |a|^scale * sum_{g=1}^{min(l,m)} w_g / g
///   raw = |a|^scale * sum_{g=1}^{min(l,m)} w_g
///
/// The alternating terms grow like |a|^{-(l+m)} while the scaled sums stay
/// O(1), so they are accumulated in extended precision (about l + m extra
/// bits) and rounded once at the end.
struct GammaSums {
    double inv = 0.0;
    double raw = 0.0;
};

GammaSums gamma_sums(int l, int m, double abs_a2, double abs_b2, int scale);

}  // namespace qwalk::detail
