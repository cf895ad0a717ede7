#pragma once

#include <span>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Probabilities below this are treated as a logic error rather than rounding.
inline constexpr double kNegativeProbabilityTol = 1e-15;

/// Exact distribution of X_n over positions -n..n (dense, parity slots zero).
class Distribution {
  public:
    /// `probabilities[i]` is P(X_n = i - n); size must be 2n + 1.
    /// Entries in [-kNegativeProbabilityTol, 0) are clamped to zero; more
    /// negative entries throw InternalError.
    Distribution(int n, std::vector<double> probabilities);

    [[nodiscard]] int n() const noexcept { return n_; }
    /// P(X_n = k); zero outside [-n, n].
    [[nodiscard]] double at(int k) const noexcept;
    [[nodiscard]] std::span<const double> probabilities() const noexcept { return probs_; }
    [[nodiscard]] double total() const;

  private:
    int n_;
    std::vector<double> probs_;
};

/// Amplitudes (psi_L, psi_R) at every position -n..n after n steps.
class AmplitudeField {
  public:
    explicit AmplitudeField(const Qubit& phi);

    [[nodiscard]] int n() const noexcept { return n_; }
    /// Amplitude 2-vector at position k; zero outside [-n, n].
    [[nodiscard]] Vec2 at(int k) const;
    [[nodiscard]] double norm_squared() const;

    /// One application of Psi_k(n+1) = P Psi_{k+1}(n) + Q Psi_{k-1}(n).
    void step(const Coin& coin);

  private:
    int n_ = 0;
    // Index i holds position i - n_.
    std::vector<cplx> left_;
    std::vector<cplx> right_;
    std::vector<cplx> next_left_;
    std::vector<cplx> next_right_;

    friend Distribution distribution(const AmplitudeField& field);
};

AmplitudeField evolve(const Qubit& phi, const Coin& coin, int n);

Distribution distribution(const AmplitudeField& field);

/// sum_k P(k) e^{i xi k / n}.
cplx exact_char_function(const Distribution& dist, double xi);

}  // namespace qwalk
