#include "qwalk/pathsum.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

using namespace qwalk;
using qwalk::testing::left_qubit;
using qwalk::testing::max_entry_error;

namespace {

Mat2 power(const Mat2& m, int k) {
    Mat2 out = Mat2::Identity();
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

cplx ipow(cplx z, int k) {
    cplx out = 1.0;
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

}  // namespace

TEST(WordCount, binomials) {
    EXPECT_EQ(word_count(3, 1), 4u);
    EXPECT_EQ(word_count(7, 7), 3432u);
    EXPECT_EQ(word_count(0, 9), 1u);
    EXPECT_EQ(word_count(30, 30), 118264581564861424u);
    EXPECT_EQ(word_count(200, 200), UINT64_MAX);
}

TEST(XiBruteforce, xi_3_1_is_the_four_words) {
    const Coin coin = qwalk::testing::random_coins(1, 31).front();
    const Mat2 p = chirality_matrix(coin, Basis::P);
    const Mat2 q = chirality_matrix(coin, Basis::Q);
    const Mat2 expected = p * p * p * q + p * p * q * p + p * q * p * p + q * p * p * p;
    EXPECT_LT(max_entry_error(xi_bruteforce(3, 1, coin).matrix, expected), 1e-15);
}

TEST(XiBruteforce, pure_p_words) {
    const Coin coin = qwalk::testing::random_coins(1, 32).front();
    for (int l = 1; l <= 8; ++l) {
        const Mat2 expected = ipow(coin.a(), l - 1) * chirality_matrix(coin, Basis::P);
        EXPECT_LT(max_entry_error(xi_bruteforce(l, 0, coin).matrix, expected), 1e-14);
    }
}

TEST(XiBruteforce, one_of_each) {
    const Coin coin = qwalk::testing::random_coins(1, 33).front();
    const Mat2 expected = coin.b() * chirality_matrix(coin, Basis::R) + coin.c() * chirality_matrix(coin, Basis::S);
    EXPECT_LT(max_entry_error(xi_bruteforce(1, 1, coin).matrix, expected), 1e-15);
}

TEST(XiBruteforce, enforces_the_cap) {
    EXPECT_THROW(xi_bruteforce(10, 10, hadamard(), 1000), TooLarge);
    EXPECT_NO_THROW(xi_bruteforce(5, 5, hadamard(), 252));
    EXPECT_THROW(xi_bruteforce(0, 0, hadamard()), BadParams);
}

TEST(XiClosedForm, pure_q_words) {
    const Coin coin = qwalk::testing::random_coins(1, 34).front();
    for (int m = 1; m <= 8; ++m) {
        const Mat2 expected =
            ipow(coin.delta(), m - 1) * ipow(std::conj(coin.a()), m - 1) * chirality_matrix(coin, Basis::Q);
        EXPECT_LT(max_entry_error(xi_closed_form(0, m, coin).matrix, expected), 1e-14);
        EXPECT_LT(max_entry_error(power(chirality_matrix(coin, Basis::Q), m), expected), 1e-14);
    }
}

TEST(XiClosedForm, one_of_each_hadamard) {
    const Coin h = hadamard();
    const Mat2 expected = h.b() * chirality_matrix(h, Basis::R) + h.c() * chirality_matrix(h, Basis::S);
    EXPECT_LT(max_entry_error(xi_closed_form(1, 1, h).matrix, expected), 1e-15);
}

TEST(XiClosedForm, coefficients_of_xi_3_1) {
    for (const auto& coin : qwalk::testing::random_coins(10, 35)) {
        const auto c = xi_coefficients(3, 1, coin);
        const cplx a = coin.a(), b = coin.b(), cc = coin.c();
        EXPECT_LT(std::abs(c.p - 2.0 * a * b * cc), 1e-14);
        EXPECT_LT(std::abs(c.q), 1e-14);
        EXPECT_LT(std::abs(c.r - a * a * b), 1e-14);
        EXPECT_LT(std::abs(c.s - a * a * cc), 1e-14);
        // The same coefficients through the trace inner product.
        const auto d = decompose_pqrs(xi_bruteforce(3, 1, coin).matrix, coin);
        EXPECT_LT(std::abs(d.p - c.p) + std::abs(d.q - c.q) + std::abs(d.r - c.r) + std::abs(d.s - c.s), 1e-13);
    }
}

TEST(XiClosedForm, matches_bruteforce_on_random_coins) {
    for (const auto& coin : qwalk::testing::random_coins(20, 36)) {
        for (int n = 1; n <= 12; ++n) {
            for (int l = 0; l <= n; ++l) {
                EXPECT_LT(max_entry_error(xi_closed_form(l, n - l, coin).matrix, xi_bruteforce(l, n - l, coin).matrix),
                          1e-10)
                    << "l=" << l << " m=" << n - l;
            }
        }
    }
}

TEST(XiClosedForm, requires_nondegenerate_coin) {
    EXPECT_THROW(xi_closed_form(2, 2, make_coin(1.0, 0.0, 0.0, 1.0)), DegenerateCoin);
}

TEST(PathDistribution, matches_direct_evolution) {
    std::vector<Coin> coins = qwalk::testing::random_coins(5, 37);
    coins.push_back(hadamard());
    Rng rng(38);
    for (const auto& coin : coins) {
        const Qubit phi = random_qubit(rng);
        AmplitudeField field(phi);
        for (int n = 1; n <= 12; ++n) {
            field.step(coin);
            const auto direct = distribution(field);
            const auto paths = path_distribution(phi, coin, n);
            for (int k = -n; k <= n; ++k) EXPECT_NEAR(paths.at(k), direct.at(k), 1e-10);
        }
    }
}

TEST(PathDistribution, stays_accurate_at_long_times) {
    // The alternating gamma-sums cancel by ~2^{n/2} here.
    Rng rng(39);
    for (const Coin& coin : {hadamard(), random_coin(rng)}) {
        const Qubit phi = random_qubit(rng);
        const int n = 200;
        const auto direct = distribution(evolve(phi, coin, n));
        const auto paths = path_distribution(phi, coin, n);
        for (int k = -n; k <= n; ++k) EXPECT_NEAR(paths.at(k), direct.at(k), 1e-12) << k;
    }
}

TEST(PathDistribution, hadamard_rightmost_site) {
    for (int n = 1; n <= 60; ++n) {
        const auto dist = path_distribution(left_qubit(), hadamard(), n);
        EXPECT_NEAR(dist.at(n) / std::ldexp(1.0, -n), 1.0, 1e-12) << n;
    }
}

TEST(PathDistribution, sums_to_one) {
    Rng rng(40);
    const auto dist = path_distribution(random_qubit(rng), random_coin(rng), 33);
    EXPECT_NEAR(dist.total(), 1.0, 1e-12);
}

TEST(PathDistribution, rejects_degenerate_coins) {
    EXPECT_THROW(path_distribution(left_qubit(), make_coin(0.0, 1.0, 1.0, 0.0), 4), DegenerateCoin);
}
