#include "qwalk/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gamma_sums.hpp"

namespace qwalk {

double empirical_moment(const Distribution& dist, int m) {
    if (m < 0) throw BadParams("moment order must be non-negative");
    const int n = dist.n();
    double total = 0.0;
    for (int k = -n; k <= n; ++k) {
        const double p = dist.at(k);
        if (p == 0.0) continue;
        total += std::pow(static_cast<double>(k), m) * p;
    }
    return total;
}

std::vector<cplx> moment_closed_form_orders(const Coin& coin, const Qubit& phi, int n,
                                            std::span<const int> orders) {
    coin.require_nondegenerate("moment_closed_form");
    if (n < 1) throw BadParams("moment_closed_form requires n >= 1");
    for (int m : orders) {
        if (m < 1) throw BadParams("moment_closed_form requires order m >= 1");
    }

    const double a2 = std::norm(coin.a());
    const double b2 = std::norm(coin.b());
    const double bias = chirality_bias(phi);
    const cplx cross = coin_qubit_cross(coin, phi);
    const double nd = n;

    // |a|^{2(n-1)} times the k = 0 term.
    const double lead = std::pow(a2, n - 1);
    std::vector<cplx> out;
    out.reserve(orders.size());
    for (int m : orders) {
        const double nm = std::pow(nd, m);
        if (m % 2 == 0) {
            out.emplace_back(lead * nm);
        } else {
            out.push_back(lead * (-nm * ((a2 - b2) * bias + 2.0 * cross)));
        }
    }

    // The gamma/delta double sum factorises: with A = sum w/g and B = sum w,
    //   sum w_g w_d / (g d)           = A^2
    //   sum w_g w_d (g + d) / (g d)   = 2AB
    //   sum w_g w_d g d / (g d)       = B^2
    // The |a|^{2(n-1)} prefactor is split as |a|^{n-1} on each of A and B.
    for (int k = 1; k <= (n - 1) / 2; ++k) {
        const auto s = detail::gamma_sums(k, n - k, a2, b2, n - 1);
        const double aa = s.inv * s.inv;
        const double ab = s.inv * s.raw;
        const double bb = s.raw * s.raw;
        const double width = nd - 2.0 * k;
        const double kk = k;

        const double even_bracket = ((nd - kk) * (nd - kk) + kk * kk) * aa - 2.0 * nd * ab + 2.0 * bb / b2;
        const cplx odd_bracket = -(nd * (a2 - b2) * aa + 2.0 * ab) * bias + (2.0 * ab / b2 - 2.0 * nd * aa) * cross;

        for (std::size_t i = 0; i < orders.size(); ++i) {
            const int m = orders[i];
            if (m % 2 == 0) {
                out[i] += std::pow(width, m) * even_bracket;
            } else {
                out[i] += std::pow(width, m + 1) * odd_bracket;
            }
        }
    }
    return out;
}

cplx moment_closed_form_complex(const MomentRequest& req) {
    const int orders[] = {req.m};
    return moment_closed_form_orders(req.coin, req.phi, req.n, orders).front();
}

double moment_closed_form(const MomentRequest& req) {
    const cplx value = moment_closed_form_complex(req);
    const double scale = std::max(1.0, std::pow(static_cast<double>(req.n), req.m));
    if (std::abs(value.imag()) > 1e-10 * scale) {
        std::ostringstream msg;
        msg << "closed-form moment has imaginary residue " << value.imag();
        throw InternalError(msg.str());
    }
    return value.real();
}

}  // namespace qwalk
