#include "qwalk/pathsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gamma_sums.hpp"

namespace qwalk {

namespace {

void check_word_shape(int l, int m) {
    if (l < 0 || m < 0 || l + m < 1) throw BadParams("Xi(l, m) needs l, m >= 0 and l + m >= 1");
}

cplx ipow(cplx z, int k) {
    cplx out{1.0, 0.0};
    for (int i = 0; i < k; ++i) out *= z;
    return out;
}

}  // namespace

std::uint64_t word_count(int l, int m) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const int small = std::min(l, m);
    std::uint64_t count = 1;
    // count = C(l + m, i) after step i; each step is exact in integers.
    for (int i = 1; i <= small; ++i) {
        const auto num = static_cast<std::uint64_t>(std::max(l, m) + i);
        if (count > max / num) return max;
        count = count * num / static_cast<std::uint64_t>(i);
    }
    return count;
}

XiMatrix xi_bruteforce(int l, int m, const Coin& coin, std::uint64_t cap) {
    check_word_shape(l, m);
    const std::uint64_t words = word_count(l, m);
    if (words > cap) {
        std::ostringstream msg;
        msg << "Xi(" << l << ", " << m << ") has " << words << " words, above the cap " << cap;
        throw TooLarge(msg.str());
    }
    const Mat2 p = chirality_matrix(coin, Basis::P);
    const Mat2 q = chirality_matrix(coin, Basis::Q);

    // Words in lexicographic order, 'P' < 'Q'.
    std::string word(static_cast<std::size_t>(l), 'P');
    word.append(static_cast<std::size_t>(m), 'Q');
    Mat2 total = Mat2::Zero();
    do {
        Mat2 product = Mat2::Identity();
        for (char letter : word) product = product * (letter == 'P' ? p : q);
        total += product;
    } while (std::next_permutation(word.begin(), word.end()));
    return {l, m, total};
}

BasisDecomposition xi_coefficients(int l, int m, const Coin& coin) {
    check_word_shape(l, m);
    coin.require_nondegenerate("xi_closed_form");
    const cplx a = coin.a(), b = coin.b(), delta = coin.delta();

    if (m == 0) return {ipow(a, l - 1), 0.0, 0.0, 0.0};
    if (l == 0) return {0.0, ipow(delta * std::conj(a), m - 1), 0.0, 0.0};

    // a^l conj(a)^m delta^m = |a|^{l+m} * phase; the modulus is folded into
    // the extended-precision sums.
    const double abs_a = std::abs(a);
    const cplx unit_a = a / abs_a;
    const cplx phase = ipow(unit_a, l) * ipow(std::conj(unit_a), m) * ipow(delta, m);
    const auto sums = detail::gamma_sums(l, m, std::norm(a), std::norm(b), l + m);

    return {
        phase / a * (l * sums.inv - sums.raw),
        phase / (delta * std::conj(a)) * (m * sums.inv - sums.raw),
        -phase / (delta * std::conj(b)) * sums.raw,
        phase / b * sums.raw,
    };
}

XiMatrix xi_closed_form(int l, int m, const Coin& coin) {
    return {l, m, reconstruct(xi_coefficients(l, m, coin), coin)};
}

Distribution path_distribution(const Qubit& phi, const Coin& coin, int n) {
    if (n < 1) throw BadParams("path_distribution requires n >= 1");
    coin.require_nondegenerate("path_distribution");
    const Vec2 state = phi.vector();
    std::vector<double> probs(static_cast<std::size_t>(2 * n + 1), 0.0);
    for (int k = -n; k <= n; k += 2) {
        const int l = (n - k) / 2;
        const int m = (n + k) / 2;
        probs[static_cast<std::size_t>(k + n)] = (xi_closed_form(l, m, coin).matrix * state).squaredNorm();
    }
    return Distribution(n, std::move(probs));
}

}  // namespace qwalk
