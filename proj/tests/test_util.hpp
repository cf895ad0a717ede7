#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/sampling.hpp"

namespace qwalk::testing {

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

inline double max_entry_error(const Mat2& lhs, const Mat2& rhs) { return (lhs - rhs).cwiseAbs().maxCoeff(); }

inline std::vector<Coin> random_coins(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Coin> coins;
    for (std::size_t i = 0; i < count; ++i) coins.push_back(random_coin(rng));
    return coins;
}

inline Qubit symmetric_qubit() { return Qubit(kInvSqrt2, cplx(0.0, kInvSqrt2)); }
inline Qubit left_qubit() { return Qubit(1.0, 0.0); }
inline Qubit right_qubit() { return Qubit(0.0, 1.0); }

}  // namespace qwalk::testing
