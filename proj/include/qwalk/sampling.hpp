#pragma once

#include <random>

#include "qwalk/coin.hpp"

namespace qwalk {

using Rng = std::mt19937_64;

/// Random coin a = cos(theta) e^{i p1}, b = sin(theta) e^{i p2}, det = e^{i p3},
/// with theta drawn from [margin, pi/2 - margin] so that abcd != 0.
Coin random_coin(Rng& rng, double margin = 0.1);

/// Uniformly random unit vector in C^2.
Qubit random_qubit(Rng& rng);

/// Random qubit with |alpha| = |beta| and a alpha conj(b beta) + c.c. = 0.
/// The phase of beta is solved from the phase of alpha, so membership holds
/// by construction. Requires a non-degenerate coin.
Qubit random_phi_perp(const Coin& coin, Rng& rng);

}  // namespace qwalk
