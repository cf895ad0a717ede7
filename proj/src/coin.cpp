#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qwalk {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::non_unitary: return "NonUnitary";
        case ErrorKind::degenerate_coin: return "DegenerateCoin";
        case ErrorKind::too_large: return "TooLarge";
        case ErrorKind::out_of_support: return "OutOfSupport";
        case ErrorKind::bad_params: return "BadParams";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::io_error: return "IoError";
        case ErrorKind::internal: return "InternalError";
    }
    return "Unknown";
}

Coin::Coin(cplx a, cplx b, cplx c, cplx d)
    : a_(a), b_(b), c_(c), d_(d), delta_(a * d - b * c),
      degenerate_(std::abs(a * b * c * d) < kDegeneracyTol) {}

Mat2 Coin::matrix() const {
    Mat2 u;
    u << a_, b_, c_, d_;
    return u;
}

void Coin::require_nondegenerate(std::string_view what) const {
    if (degenerate_) {
        throw DegenerateCoin(std::string(what) + " requires a coin with abcd != 0");
    }
}

Coin make_coin(cplx a, cplx b, cplx c, cplx d) {
    const cplx delta = a * d - b * c;
    struct Check {
        const char* name;
        double residual;
    };
    const Check checks[] = {
        {"|a|^2 + |b|^2 = 1", std::abs(std::norm(a) + std::norm(b) - 1.0)},
        {"|c|^2 + |d|^2 = 1", std::abs(std::norm(c) + std::norm(d) - 1.0)},
        {"a conj(c) + b conj(d) = 0", std::abs(a * std::conj(c) + b * std::conj(d))},
        {"|det U| = 1", std::abs(std::abs(delta) - 1.0)},
        {"c = -det U conj(b)", std::abs(c + delta * std::conj(b))},
        {"d = det U conj(a)", std::abs(d - delta * std::conj(a))},
    };
    for (const auto& check : checks) {
        if (!(check.residual <= kUnitarityTol)) {
            std::ostringstream msg;
            msg << "coin violates " << check.name << " (residual " << check.residual << ")";
            throw NonUnitary(msg.str());
        }
    }
    return Coin(a, b, c, d);
}

Coin make_symmetric_coin(double eta, double phi, double psi) {
    const cplx scale = std::polar(1.0 / std::numbers::sqrt2, eta);
    const cplx a = scale * std::polar(1.0, phi + psi);
    const cplx b = scale * std::polar(1.0, -(phi - psi));
    const cplx c = scale * std::polar(1.0, phi - psi);
    const cplx d = -scale * std::polar(1.0, -(phi + psi));
    return make_coin(a, b, c, d);
}

Coin hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    return make_coin(h, h, h, -h);
}

Qubit::Qubit(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
    const double norm = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(norm - 1.0) <= kQubitNormTol)) {
        std::ostringstream msg;
        msg << "qubit must satisfy |alpha|^2 + |beta|^2 = 1 (got " << norm << ")";
        throw BadParams(msg.str());
    }
}

double chirality_bias(const Qubit& phi) { return std::norm(phi.alpha()) - std::norm(phi.beta()); }

cplx coin_qubit_cross(const Coin& coin, const Qubit& phi) {
    const cplx left = coin.a() * phi.alpha();
    const cplx right = coin.b() * phi.beta();
    return left * std::conj(right) + std::conj(left) * right;
}

char basis_name(Basis x) noexcept {
    switch (x) {
        case Basis::P: return 'P';
        case Basis::Q: return 'Q';
        case Basis::R: return 'R';
        case Basis::S: return 'S';
    }
    return '?';
}

Mat2 chirality_matrix(const Coin& coin, Basis x) {
    Mat2 m = Mat2::Zero();
    switch (x) {
        case Basis::P: m(0, 0) = coin.a(); m(0, 1) = coin.b(); break;
        case Basis::Q: m(1, 0) = coin.c(); m(1, 1) = coin.d(); break;
        case Basis::R: m(0, 0) = coin.c(); m(0, 1) = coin.d(); break;
        case Basis::S: m(1, 0) = coin.a(); m(1, 1) = coin.b(); break;
    }
    return m;
}

BasisProduct pqrs_product(Basis x, Basis y, const Coin& coin) {
    enum Entry { A, B, C, D };
    struct Cell {
        Entry scalar;
        Basis label;
    };
    using enum Basis;
    // Row = left factor, column = right factor.
    static constexpr Cell table[4][4] = {
        //    P          Q          R          S
        {{A, P}, {B, R}, {A, R}, {B, P}},  // P
        {{C, S}, {D, Q}, {C, Q}, {D, S}},  // Q
        {{C, P}, {D, R}, {C, R}, {D, P}},  // R
        {{A, S}, {B, Q}, {A, Q}, {B, S}},  // S
    };
    const Cell cell = table[static_cast<int>(x)][static_cast<int>(y)];
    const cplx entries[] = {coin.a(), coin.b(), coin.c(), coin.d()};
    return {entries[cell.scalar], cell.label};
}

cplx trace_inner(const Mat2& lhs, const Mat2& rhs) { return (lhs.adjoint() * rhs).trace(); }

BasisDecomposition decompose_pqrs(const Mat2& m, const Coin& coin) {
    coin.require_nondegenerate("decompose_pqrs");
    return {
        trace_inner(chirality_matrix(coin, Basis::P), m),
        trace_inner(chirality_matrix(coin, Basis::Q), m),
        trace_inner(chirality_matrix(coin, Basis::R), m),
        trace_inner(chirality_matrix(coin, Basis::S), m),
    };
}

Mat2 reconstruct(const BasisDecomposition& coeffs, const Coin& coin) {
    return coeffs.p * chirality_matrix(coin, Basis::P) + coeffs.q * chirality_matrix(coin, Basis::Q) +
           coeffs.r * chirality_matrix(coin, Basis::R) + coeffs.s * chirality_matrix(coin, Basis::S);
}

}  // namespace qwalk
