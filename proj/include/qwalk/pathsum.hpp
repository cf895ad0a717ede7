#pragma once

#include <cstdint>

#include "qwalk/coin.hpp"
#include "qwalk/evolve.hpp"

namespace qwalk {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Xi(l, m): the sum of all ordered products of l copies of P and m copies
/// of Q. It carries the amplitude at displacement k = m - l after l + m steps.
struct XiMatrix {
    int l = 0;
    int m = 0;
    Mat2 matrix = Mat2::Zero();
};

/// C(l + m, l), saturating at UINT64_MAX.
std::uint64_t word_count(int l, int m);

/// Sums the raw 2x2 product of every word with l letters P and m letters Q.
/// Throws TooLarge when word_count(l, m) exceeds `cap`.
XiMatrix xi_bruteforce(int l, int m, const Coin& coin, std::uint64_t cap = kDefaultEnumerationCap);

/// Closed-form coefficients of Xi(l, m) over {P, Q, R, S}; abcd != 0 only.
BasisDecomposition xi_coefficients(int l, int m, const Coin& coin);

/// Xi(l, m) from its closed-form coefficients; abcd != 0 only.
XiMatrix xi_closed_form(int l, int m, const Coin& coin);

/// P(X_n = k) = |Xi((n-k)/2, (n+k)/2) phi|^2 using the closed form.
Distribution path_distribution(const Qubit& phi, const Coin& coin, int n);

}  // namespace qwalk
