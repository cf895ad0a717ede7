#include "gamma_sums.hpp"

#include <algorithm>

#include "bigfloat.hpp"

namespace qwalk::detail {

GammaSums gamma_sums(int l, int m, double abs_a2, double abs_b2, int scale) {
    const int top = std::min(l, m);
    if (top < 1) return {};
    const auto bits = static_cast<mpfr_prec_t>(96 + l + m);

    BigFloat x(bits, abs_b2);
    x /= BigFloat(bits, abs_a2);
    x.neg();

    // w_1 = x; w_{g+1} = w_g * x * (l-g)(m-g) / g^2.
    BigFloat w = x;
    BigFloat inv(bits), raw(bits);
    for (int g = 1; g <= top; ++g) {
        raw += w;
        BigFloat term = w;
        term.div(static_cast<unsigned long>(g));
        inv += term;
        if (g == top) break;
        w *= x;
        w.mul(static_cast<unsigned long>(l - g)).mul(static_cast<unsigned long>(m - g));
        w.div(static_cast<unsigned long>(g)).div(static_cast<unsigned long>(g));
    }

    BigFloat factor(bits, abs_a2);
    factor.sqrt().pow(static_cast<unsigned long>(scale));
    inv *= factor;
    raw *= factor;
    return {inv.to_double(), raw.to_double()};
}

}  // namespace qwalk::detail
