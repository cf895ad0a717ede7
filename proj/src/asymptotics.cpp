#include "qwalk/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qwalk {

namespace {

void check_jacobi(const JacobiParams& p) {
    if (!(p.nu > -1.0) || !(p.mu > -1.0)) {
        std::ostringstream msg;
        msg << "Jacobi parameters must exceed -1 (nu = " << p.nu << ", mu = " << p.mu << ")";
        throw BadParams(msg.str());
    }
    if (p.degree < 0) throw BadParams("Jacobi degree must be non-negative");
}

// Runs the degree recurrence; `renorm` is called after every step with the
// two live values so the caller may rescale them.
template <typename Renorm>
double jacobi_recurrence(const JacobiParams& p, Renorm&& renorm) {
    const double al = p.nu, be = p.mu, x = p.x;
    double prev = 1.0;
    if (p.degree == 0) return prev;
    double cur = 0.5 * (al - be) + 0.5 * (al + be + 2.0) * x;
    const double a2b2 = al * al - be * be;
    for (int k = 2; k <= p.degree; ++k) {
        const double s = 2.0 * k + al + be;
        const double lhs = 2.0 * k * (k + al + be) * (s - 2.0);
        const double c1 = (s - 1.0) * (s * (s - 2.0) * x + a2b2);
        const double c2 = 2.0 * (k + al - 1.0) * (k + be - 1.0) * s;
        const double next = (c1 * cur - c2 * prev) / lhs;
        prev = cur;
        cur = next;
        renorm(prev, cur);
    }
    return cur;
}

constexpr double kQuadTol = 1e-13;
constexpr unsigned kQuadDepth = 20;

template <typename F>
double integrate(F&& f, double lo, double hi) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, kQuadDepth, kQuadTol);
}

}  // namespace

double jacobi_poly(const JacobiParams& params) {
    check_jacobi(params);
    return jacobi_recurrence(params, [](double&, double&) {});
}

double ScaledValue::scaled(double extra_log2) const {
    return mantissa * std::exp2(static_cast<double>(exponent) + extra_log2);
}

ScaledValue jacobi_poly_scaled(const JacobiParams& params) {
    check_jacobi(params);
    long exponent = 0;
    const double value = jacobi_recurrence(params, [&](double& prev, double& cur) {
        int e = 0;
        std::frexp(std::max(std::abs(prev), std::abs(cur)), &e);
        if (e > 256 || e < -256) {
            prev = std::ldexp(prev, -e);
            cur = std::ldexp(cur, -e);
            exponent += e;
        }
    });
    return {value, exponent};
}

LimitLaw::LimitLaw(const Coin& coin, const Qubit& phi) {
    coin.require_nondegenerate("limit law");
    abs_a_ = std::abs(coin.a());
    const double a2 = std::norm(coin.a());
    skew_ = chirality_bias(phi) + coin_qubit_cross(coin, phi).real() / a2;
    gap_ = std::sqrt(1.0 - a2);
}

double LimitLaw::density(double x) const {
    if (!(std::abs(x) < abs_a_)) {
        std::ostringstream msg;
        msg << "x = " << x << " lies outside the support (-" << abs_a_ << ", " << abs_a_ << ")";
        throw OutOfSupport(msg.str());
    }
    return gap_ * (1.0 - skew_ * x) /
           (std::numbers::pi * (1.0 - x * x) * std::sqrt(abs_a_ * abs_a_ - x * x));
}

double LimitLaw::density_in_angle(double t) const {
    const double x = abs_a_ * std::sin(t);
    return gap_ * (1.0 - skew_ * x) / (std::numbers::pi * (1.0 - x * x));
}

double LimitLaw::cdf(double x) const {
    if (x <= -abs_a_) return 0.0;
    if (x >= abs_a_) return 1.0;
    const double upper = std::asin(x / abs_a_);
    const double value = integrate([this](double t) { return density_in_angle(t); }, -std::numbers::pi / 2, upper);
    return std::clamp(value, 0.0, 1.0);
}

double LimitLaw::moment_by_quadrature(int m) const {
    if (m < 0) throw BadParams("moment order must be non-negative");
    const double half_pi = std::numbers::pi / 2;
    return integrate(
        [this, m](double t) { return std::pow(abs_a_ * std::sin(t), m) * density_in_angle(t); }, -half_pi,
        half_pi);
}

double LimitLaw::moment(int m) const {
    const double second = 1.0 - gap_;
    switch (m) {
        case 0: return 1.0;
        case 1: return -skew_ * second;
        case 2: return second;
        default: return moment_by_quadrature(m);
    }
}

double limit_density(const Coin& coin, const Qubit& phi, double x) { return LimitLaw(coin, phi).density(x); }

double limit_moment(const Coin& coin, const Qubit& phi, int m) { return LimitLaw(coin, phi).moment(m); }

double limit_cdf(const Coin& coin, const Qubit& phi, double x) { return LimitLaw(coin, phi).cdf(x); }

cplx asymptotic_char_function(const Coin& coin, const Qubit& phi, int n, double xi) {
    coin.require_nondegenerate("asymptotic_char_function");
    if (n < 3) throw BadParams("asymptotic_char_function requires n >= 3");

    const double a2 = std::norm(coin.a());
    const double b2 = std::norm(coin.b());
    const double log2_abs_a = 0.5 * std::log2(a2);
    const double bias = chirality_bias(phi);
    const double cross = coin_qubit_cross(coin, phi).real();
    const double z = 2.0 * a2 - 1.0;
    const double nd = n;

    cplx total{};
    for (int k = 1; k <= (n - 1) / 2; ++k) {
        const double x = k / nd;
        const double mu = n - 2 * k;
        // |a|^{2n-4k-2} is split as |a|^{n-2k-1} on each Jacobi factor.
        const double extra = (n - 2 * k - 1) * log2_abs_a;
        const double j0 = jacobi_poly_scaled({0.0, mu, k - 1, z}).scaled(extra);
        const double j1 = jacobi_poly_scaled({1.0, mu, k - 1, z}).scaled(extra);

        const double even = (2.0 * x * x - 2.0 * x + 1.0) / (x * x) * j1 * j1 - 2.0 / x * j1 * j0 +
                            2.0 / b2 * j0 * j0;
        const double odd = (1.0 - 2.0 * x) / x *
                           (-1.0 / x * ((a2 - b2) * bias + 2.0 * cross) * j1 * j1 -
                            2.0 * (bias - cross / b2) * j0 * j1);
        const double angle = (1.0 - 2.0 * x) * xi;
        total += b2 * b2 * cplx(even * std::cos(angle), odd * std::sin(angle));
    }
    return total;
}

double ks_distance(const Distribution& dist, const Coin& coin, const Qubit& phi) {
    const LimitLaw law(coin, phi);
    const int n = dist.n();
    if (n < 1) throw BadParams("ks_distance requires n >= 1");
    double below = 0.0;  // P(X_n < k)
    double sup = 0.0;
    for (int k = -n; k <= n; ++k) {
        const double p = dist.at(k);
        if (p == 0.0) continue;
        const double limit = law.cdf(static_cast<double>(k) / n);
        const double upto = below + p;
        sup = std::max({sup, std::abs(below - limit), std::abs(upto - limit)});
        below = upto;
    }
    return std::min(sup, 1.0);
}

}  // namespace qwalk
