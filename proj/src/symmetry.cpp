#include "qwalk/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/moments.hpp"

namespace qwalk {

bool in_phi_perp(const Coin& coin, const Qubit& phi, double tol) {
    coin.require_nondegenerate("in_phi_perp");
    const bool balanced = std::abs(std::abs(phi.alpha()) - std::abs(phi.beta())) <= tol;
    return balanced && std::abs(coin_qubit_cross(coin, phi)) <= tol;
}

double asymmetry(const Distribution& dist) {
    double worst = 0.0;
    for (int k = 1; k <= dist.n(); ++k) worst = std::max(worst, std::abs(dist.at(k) - dist.at(-k)));
    return worst;
}

bool check_symmetry(const Distribution& dist, double tol) { return asymmetry(dist) <= tol; }

SymmetryReport verify_symmetry_criterion(const Coin& coin, const Qubit& phi, int max_n, double tol,
                                         double membership_tol) {
    if (max_n < 1) throw BadParams("verify_symmetry_criterion requires max_n >= 1");
    SymmetryReport report{
        .coin = coin,
        .phi = phi,
        .max_n = max_n,
        .in_phi_perp = in_phi_perp(coin, phi, membership_tol),
        .symmetric_up_to = 0,
        .mean_zero_up_to = 0,
        .first_violation = std::nullopt,
    };

    bool symmetric_so_far = true;
    bool mean_zero_so_far = true;
    AmplitudeField field(phi);
    for (int n = 1; n <= max_n; ++n) {
        field.step(coin);
        const Distribution dist = distribution(field);
        const double skew = asymmetry(dist);
        const double mean = empirical_moment(dist, 1);
        const bool symmetric = skew <= tol;
        const bool mean_zero = std::abs(mean) <= tol;

        symmetric_so_far = symmetric_so_far && symmetric;
        mean_zero_so_far = mean_zero_so_far && mean_zero;
        if (symmetric_so_far) report.symmetric_up_to = n;
        if (mean_zero_so_far) report.mean_zero_up_to = n;
        if (!report.first_violation && !(symmetric && mean_zero)) {
            report.first_violation = SymmetryViolation{n, mean, skew};
        }
    }
    return report;
}

}  // namespace qwalk
