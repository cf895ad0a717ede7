#include "qwalk/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

double uniform_angle(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
}

}  // namespace

Coin random_coin(Rng& rng, double margin) {
    const double theta = std::uniform_real_distribution<double>(margin, std::numbers::pi / 2 - margin)(rng);
    const cplx a = std::polar(std::cos(theta), uniform_angle(rng));
    const cplx b = std::polar(std::sin(theta), uniform_angle(rng));
    const cplx delta = std::polar(1.0, uniform_angle(rng));
    return make_coin(a, b, -delta * std::conj(b), delta * std::conj(a));
}

Qubit random_qubit(Rng& rng) {
    std::normal_distribution<double> gauss;
    const cplx alpha(gauss(rng), gauss(rng));
    const cplx beta(gauss(rng), gauss(rng));
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    return Qubit(alpha / norm, beta / norm);
}

Qubit random_phi_perp(const Coin& coin, Rng& rng) {
    coin.require_nondegenerate("random_phi_perp");
    // With alpha = e^{i s} / sqrt2 and beta = e^{i t} / sqrt2 the cross term is
    // Re(a conj(b) e^{i(s - t)}), which vanishes iff
    // arg(a) - arg(b) + s - t = +-pi/2.
    const double s = uniform_angle(rng);
    const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
    const double t = s + std::arg(coin.a()) - std::arg(coin.b()) - sign * std::numbers::pi / 2;
    const double h = 1.0 / std::numbers::sqrt2;
    return Qubit(std::polar(h, s), std::polar(h, t));
}

}  // namespace qwalk
