#include "qwalk/evolve.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qwalk {

Distribution::Distribution(int n, std::vector<double> probabilities)
    : n_(n), probs_(std::move(probabilities)) {
    if (n < 0 || probs_.size() != static_cast<std::size_t>(2 * n + 1)) {
        throw BadParams("distribution at time n needs 2n + 1 entries");
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        double& p = probs_[i];
        if (p < 0.0) {
            if (p < -kNegativeProbabilityTol) {
                std::ostringstream msg;
                msg << "negative probability " << p << " at k = " << static_cast<int>(i) - n;
                throw InternalError(msg.str());
            }
            p = 0.0;
        }
    }
}

double Distribution::at(int k) const noexcept {
    if (k < -n_ || k > n_) return 0.0;
    return probs_[static_cast<std::size_t>(k + n_)];
}

double Distribution::total() const { return std::accumulate(probs_.begin(), probs_.end(), 0.0); }

AmplitudeField::AmplitudeField(const Qubit& phi) : left_{phi.alpha()}, right_{phi.beta()} {}

Vec2 AmplitudeField::at(int k) const {
    if (k < -n_ || k > n_) return Vec2::Zero();
    const auto i = static_cast<std::size_t>(k + n_);
    return Vec2(left_[i], right_[i]);
}

double AmplitudeField::norm_squared() const {
    double total = 0.0;
    for (std::size_t i = 0; i < left_.size(); ++i) total += std::norm(left_[i]) + std::norm(right_[i]);
    return total;
}

void AmplitudeField::step(const Coin& coin) {
    const cplx a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();
    const std::size_t width = left_.size();  // 2n + 1
    next_left_.assign(width + 2, cplx{});
    next_right_.assign(width + 2, cplx{});
    // Old index i (position i - n) feeds new index i (position i - n - 1, via P)
    // and new index i + 2 (position i - n + 1, via Q).
    for (std::size_t i = 0; i < width; ++i) {
        const cplx l = left_[i];
        const cplx r = right_[i];
        next_left_[i] = a * l + b * r;
        next_right_[i + 2] = c * l + d * r;
    }
    left_.swap(next_left_);
    right_.swap(next_right_);
    ++n_;
}

AmplitudeField evolve(const Qubit& phi, const Coin& coin, int n) {
    if (n < 0) throw BadParams("evolve: n must be non-negative");
    AmplitudeField field(phi);
    for (int t = 0; t < n; ++t) field.step(coin);
    return field;
}

Distribution distribution(const AmplitudeField& field) {
    std::vector<double> probs(field.left_.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::norm(field.left_[i]) + std::norm(field.right_[i]);
    }
    return Distribution(field.n(), std::move(probs));
}

cplx exact_char_function(const Distribution& dist, double xi) {
    const int n = dist.n();
    if (n < 1) throw BadParams("exact_char_function requires n >= 1");
    cplx total{};
    for (int k = -n; k <= n; ++k) {
        const double p = dist.at(k);
        if (p == 0.0) continue;
        total += p * std::polar(1.0, xi * k / n);
    }
    return total;
}

}  // namespace qwalk
