#include "qwalk/coin.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qwalk/pathsum.hpp"
#include "test_util.hpp"

using namespace qwalk;
using qwalk::testing::kInvSqrt2;
using qwalk::testing::max_entry_error;

TEST(Coin, hadamard_has_determinant_minus_one) {
    const Coin h = make_coin(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
    EXPECT_NEAR(std::abs(h.delta() - cplx(-1.0)), 0.0, 1e-15);
    EXPECT_FALSE(h.degenerate());
}

TEST(Coin, identity_is_valid_but_degenerate) {
    const Coin id = make_coin(1.0, 0.0, 0.0, 1.0);
    EXPECT_TRUE(id.degenerate());
    EXPECT_EQ(id.delta(), cplx(1.0));
}

TEST(Coin, rejects_non_unitary_rows) {
    EXPECT_THROW(make_coin(1.0, 1.0, 0.0, 0.0), NonUnitary);
    // Rows are unit vectors but not orthogonal.
    EXPECT_THROW(make_coin(kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2), NonUnitary);
}

TEST(Coin, stores_entries_as_given_within_tolerance) {
    const double eps = 1e-12;
    const Coin h = make_coin(kInvSqrt2 + eps, kInvSqrt2, kInvSqrt2, -kInvSqrt2 - eps);
    EXPECT_EQ(h.a(), cplx(kInvSqrt2 + eps));
    EXPECT_EQ(h.d(), cplx(-kInvSqrt2 - eps));
    EXPECT_THROW(make_coin(kInvSqrt2 + 1e-8, kInvSqrt2, kInvSqrt2, -kInvSqrt2), NonUnitary);
}

TEST(Coin, symmetric_family_contains_hadamard) {
    const Coin u = make_symmetric_coin(0.0, 0.0, 0.0);
    EXPECT_LT(max_entry_error(u.matrix(), hadamard().matrix()), 1e-15);
}

TEST(Coin, symmetric_family_global_phase) {
    const Coin u = make_symmetric_coin(std::numbers::pi / 2, 0.0, 0.0);
    const Mat2 expected = cplx(0.0, 1.0) * hadamard().matrix();
    EXPECT_LT(max_entry_error(u.matrix(), expected), 1e-15);
}

TEST(Coin, symmetric_family_is_always_unitary) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        EXPECT_NO_THROW(make_symmetric_coin(angle(rng), angle(rng), angle(rng)));
    }
}

TEST(Coin, unitarity_relations_hold_after_construction) {
    for (const auto& coin : qwalk::testing::random_coins(50, 11)) {
        const cplx a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d(), delta = coin.delta();
        EXPECT_LT(std::abs(std::norm(a) + std::norm(b) - 1.0), 1e-12);
        EXPECT_LT(std::abs(std::norm(c) + std::norm(d) - 1.0), 1e-12);
        EXPECT_LT(std::abs(a * std::conj(c) + b * std::conj(d)), 1e-12);
        EXPECT_LT(std::abs(c + delta * std::conj(b)), 1e-12);
        EXPECT_LT(std::abs(d - delta * std::conj(a)), 1e-12);
    }
}

TEST(Qubit, rejects_non_unit_norm) {
    EXPECT_THROW(Qubit(1.0, 1.0), BadParams);
    EXPECT_NO_THROW(Qubit(0.6, cplx(0.0, 0.8)));
}

TEST(Basis, matrices_sum_to_the_coin) {
    for (const auto& coin : qwalk::testing::random_coins(5, 3)) {
        const Mat2 sum = chirality_matrix(coin, Basis::P) + chirality_matrix(coin, Basis::Q);
        EXPECT_EQ(max_entry_error(sum, coin.matrix()), 0.0);
    }
}

TEST(Basis, named_products) {
    const Coin h = hadamard();
    const auto pq = pqrs_product(Basis::P, Basis::Q, h);
    EXPECT_EQ(pq.label, Basis::R);
    EXPECT_EQ(pq.scalar, h.b());
    const auto pp = pqrs_product(Basis::P, Basis::P, h);
    EXPECT_EQ(pp.label, Basis::P);
    EXPECT_EQ(pp.scalar, h.a());
    const auto qq = pqrs_product(Basis::Q, Basis::Q, h);
    EXPECT_EQ(qq.label, Basis::Q);
    EXPECT_EQ(qq.scalar, h.d());
}

TEST(Basis, table_matches_raw_products) {
    auto coins = qwalk::testing::random_coins(20, 5);
    coins.push_back(hadamard());
    coins.push_back(make_coin(1.0, 0.0, 0.0, 1.0));  // the table holds for degenerate coins too
    for (const auto& coin : coins) {
        for (Basis x : kAllBases) {
            for (Basis y : kAllBases) {
                const auto [scalar, label] = pqrs_product(x, y, coin);
                const Mat2 raw = chirality_matrix(coin, x) * chirality_matrix(coin, y);
                EXPECT_LT(max_entry_error(raw, scalar * chirality_matrix(coin, label)), 1e-15)
                    << basis_name(x) << basis_name(y);
            }
        }
    }
}

TEST(Basis, orthonormal_under_trace_inner_product) {
    for (const auto& coin : qwalk::testing::random_coins(20, 9)) {
        for (Basis x : kAllBases) {
            for (Basis y : kAllBases) {
                const cplx g = trace_inner(chirality_matrix(coin, x), chirality_matrix(coin, y));
                EXPECT_LT(std::abs(g - (x == y ? 1.0 : 0.0)), 1e-12);
            }
        }
    }
}

TEST(Decompose, coin_is_p_plus_q) {
    const Coin coin = qwalk::testing::random_coins(1, 21).front();
    const auto c = decompose_pqrs(coin.matrix(), coin);
    EXPECT_LT(std::abs(c.p - 1.0), 1e-12);
    EXPECT_LT(std::abs(c.q - 1.0), 1e-12);
    EXPECT_LT(std::abs(c.r), 1e-12);
    EXPECT_LT(std::abs(c.s), 1e-12);
}

TEST(Decompose, basis_element) {
    const Coin coin = hadamard();
    const auto c = decompose_pqrs(chirality_matrix(coin, Basis::R), coin);
    EXPECT_LT(std::abs(c.p), 1e-15);
    EXPECT_LT(std::abs(c.q), 1e-15);
    EXPECT_LT(std::abs(c.r - 1.0), 1e-15);
    EXPECT_LT(std::abs(c.s), 1e-15);
}

TEST(Decompose, xi_3_1_hadamard) {
    const Coin h = hadamard();
    // P^3 Q + P^2 Q P + P Q P^2 + Q P^3 built directly.
    const Mat2 p = chirality_matrix(h, Basis::P);
    const Mat2 q = chirality_matrix(h, Basis::Q);
    const Mat2 xi = p * p * p * q + p * p * q * p + p * q * p * p + q * p * p * p;
    const auto c = decompose_pqrs(xi, h);
    EXPECT_NEAR(std::abs(c.p - kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.q), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.r - 0.5 * kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(c.s - 0.5 * kInvSqrt2), 0.0, 1e-15);
}

TEST(Decompose, requires_nondegenerate_coin) {
    const Coin id = make_coin(1.0, 0.0, 0.0, 1.0);
    EXPECT_THROW(decompose_pqrs(Mat2::Identity(), id), DegenerateCoin);
}

TEST(Decompose, reconstruction_is_identity_on_random_matrices) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    for (const auto& coin : qwalk::testing::random_coins(20, 13)) {
        for (int i = 0; i < 25; ++i) {
            Mat2 m;
            m << cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng)),
                cplx(gauss(rng), gauss(rng));
            EXPECT_LT(max_entry_error(reconstruct(decompose_pqrs(m, coin), coin), m), 1e-12);
        }
    }
}
