#pragma once

#include <optional>

#include "qwalk/coin.hpp"
#include "qwalk/evolve.hpp"

namespace qwalk {

inline constexpr double kMembershipTol = 1e-10;
inline constexpr double kDistributionTol = 1e-9;

/// ||alpha| - |beta|| <= tol and |a alpha conj(b beta) + c.c.| <= tol.
bool in_phi_perp(const Coin& coin, const Qubit& phi, double tol = kMembershipTol);

/// max_k |P(k) - P(-k)|.
double asymmetry(const Distribution& dist);

/// asymmetry(dist) <= tol.
bool check_symmetry(const Distribution& dist, double tol = kDistributionTol);

struct SymmetryViolation {
    int n;
    double mean;       // E(X_n)
    double asymmetry;  // max_k |P(k) - P(-k)|
};

struct SymmetryReport {
    Coin coin;
    Qubit phi;
    int max_n = 0;
    bool in_phi_perp = false;
    /// Largest N with every n <= N symmetric (resp. mean-zero); 0 if n = 1 fails.
    int symmetric_up_to = 0;
    int mean_zero_up_to = 0;
    /// Earliest n where either predicate fails.
    std::optional<SymmetryViolation> first_violation;

    [[nodiscard]] bool symmetric_throughout() const noexcept { return symmetric_up_to == max_n; }
    [[nodiscard]] bool mean_zero_throughout() const noexcept { return mean_zero_up_to == max_n; }
    /// The three set memberships agree up to max_n.
    [[nodiscard]] bool consistent() const noexcept {
        return in_phi_perp == symmetric_throughout() && in_phi_perp == mean_zero_throughout();
    }
};

/// Evolves from phi for n = 1..max_n, checking symmetry and |E(X_n)| <= tol
/// at every step. Requires a non-degenerate coin and max_n >= 1.
SymmetryReport verify_symmetry_criterion(const Coin& coin, const Qubit& phi, int max_n, double tol = kDistributionTol,
                                         double membership_tol = kMembershipTol);

}  // namespace qwalk
