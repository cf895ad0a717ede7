#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Core>

#include "qwalk/errors.hpp"

namespace qwalk {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

/// Absolute tolerance applied to each unitarity relation of a coin.
inline constexpr double kUnitarityTol = 1e-10;
/// |abcd| below this marks a coin as degenerate.
inline constexpr double kDegeneracyTol = 1e-14;
/// Allowed deviation of |alpha|^2 + |beta|^2 from one.
inline constexpr double kQubitNormTol = 1e-10;

/// A validated 2x2 unitary coin [[a, b], [c, d]].
///
/// Entries are stored exactly as supplied; validation never renormalizes.
class Coin {
  public:
    [[nodiscard]] cplx a() const noexcept { return a_; }
    [[nodiscard]] cplx b() const noexcept { return b_; }
    [[nodiscard]] cplx c() const noexcept { return c_; }
    [[nodiscard]] cplx d() const noexcept { return d_; }
    /// det U = ad - bc.
    [[nodiscard]] cplx delta() const noexcept { return delta_; }
    /// True iff |abcd| < kDegeneracyTol.
    [[nodiscard]] bool degenerate() const noexcept { return degenerate_; }
    [[nodiscard]] Mat2 matrix() const;

    /// Throws DegenerateCoin naming `what` when abcd = 0.
    void require_nondegenerate(std::string_view what) const;

  private:
    friend Coin make_coin(cplx a, cplx b, cplx c, cplx d);
    Coin(cplx a, cplx b, cplx c, cplx d);

    cplx a_, b_, c_, d_, delta_;
    bool degenerate_ = false;
};

/// Validates unitarity of [[a, b], [c, d]]; throws NonUnitary on failure.
Coin make_coin(cplx a, cplx b, cplx c, cplx d);

/// (e^{i eta} / sqrt 2) [[e^{i(phi+psi)}, e^{-i(phi-psi)}], [e^{i(phi-psi)}, -e^{-i(phi+psi)}]].
Coin make_symmetric_coin(double eta, double phi, double psi);

Coin hadamard();

/// Initial chirality state t[alpha, beta] with unit norm.
class Qubit {
  public:
    Qubit(cplx alpha, cplx beta);

    [[nodiscard]] cplx alpha() const noexcept { return alpha_; }
    [[nodiscard]] cplx beta() const noexcept { return beta_; }
    [[nodiscard]] Vec2 vector() const { return Vec2(alpha_, beta_); }

  private:
    cplx alpha_, beta_;
};

/// |alpha|^2 - |beta|^2.
double chirality_bias(const Qubit& phi);

/// a alpha conj(b beta) + conj(a alpha) b beta, evaluated in complex arithmetic.
/// The exact value is real; the imaginary part is rounding residue.
cplx coin_qubit_cross(const Coin& coin, const Qubit& phi);

enum class Basis { P, Q, R, S };

inline constexpr std::array<Basis, 4> kAllBases{Basis::P, Basis::Q, Basis::R, Basis::S};

char basis_name(Basis x) noexcept;

/// P = [[a,b],[0,0]], Q = [[0,0],[c,d]], R = [[c,d],[0,0]], S = [[0,0],[a,b]].
Mat2 chirality_matrix(const Coin& coin, Basis x);

struct BasisProduct {
    cplx scalar;
    Basis label;
};

/// X * Y = scalar * Z from the P/Q/R/S multiplication table.
BasisProduct pqrs_product(Basis x, Basis y, const Coin& coin);

/// tr(A^* B).
cplx trace_inner(const Mat2& lhs, const Mat2& rhs);

struct BasisDecomposition {
    cplx p, q, r, s;
};

/// Coefficients of `m` over the orthonormal basis {P, Q, R, S}.
/// Requires a non-degenerate coin.
BasisDecomposition decompose_pqrs(const Mat2& m, const Coin& coin);

Mat2 reconstruct(const BasisDecomposition& coeffs, const Coin& coin);

}  // namespace qwalk
