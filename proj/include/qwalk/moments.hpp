#pragma once

#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/evolve.hpp"

namespace qwalk {

/// E((X_n)^m) for a walk started from `phi`. Here m is the moment order,
/// unrelated to the Q-count of Xi(l, m).
struct MomentRequest {
    int n;
    int m;
    Coin coin;
    Qubit phi;
};

/// sum_k k^m P(k).
double empirical_moment(const Distribution& dist, int m);

/// Closed-form E((X_n)^m) for abcd != 0, evaluated in complex arithmetic.
/// The exact value is real; the imaginary part is the evaluation residue.
cplx moment_closed_form_complex(const MomentRequest& req);

/// Real part of moment_closed_form_complex. Throws InternalError if the
/// imaginary residue exceeds 1e-10 * max(1, n^m).
double moment_closed_form(const MomentRequest& req);

/// Closed-form moments for several orders at one n, sharing the per-k sums.
std::vector<cplx> moment_closed_form_orders(const Coin& coin, const Qubit& phi, int n,
                                            std::span<const int> orders);

}  // namespace qwalk
