#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/evolve.hpp"

namespace qwalk {

struct JacobiParams {
    double nu;
    double mu;
    int degree;
    double x;
};

/// P_n^{(nu, mu)}(x) by the three-term recurrence in the degree.
/// Throws BadParams unless nu, mu > -1 and degree >= 0.
double jacobi_poly(const JacobiParams& params);

/// A value stored as mantissa * 2^exponent, for quantities outside double range.
struct ScaledValue {
    double mantissa = 0.0;
    long exponent = 0;

    /// mantissa * 2^(exponent + extra_log2); the result must fit in a double.
    [[nodiscard]] double scaled(double extra_log2) const;
};

/// jacobi_poly with the running value renormalised by powers of two.
ScaledValue jacobi_poly_scaled(const JacobiParams& params);

/// Weak limit Z of X_n / n: density on (-|a|, |a|)
///
///   f(x) = sqrt(1 - |a|^2) / (pi (1 - x^2) sqrt(|a|^2 - x^2)) * (1 - skew x),
///   skew = |alpha|^2 - |beta|^2 + (a alpha conj(b beta) + c.c.) / |a|^2.
///
/// Integrals use x = |a| sin t, which removes the inverse square-root
/// singularities at both ends of the support.
class LimitLaw {
  public:
    LimitLaw(const Coin& coin, const Qubit& phi);

    [[nodiscard]] double half_width() const noexcept { return abs_a_; }
    [[nodiscard]] double skew() const noexcept { return skew_; }

    /// Throws OutOfSupport when |x| >= |a|.
    [[nodiscard]] double density(double x) const;
    [[nodiscard]] double cdf(double x) const;
    /// Closed forms for m <= 2, quadrature above.
    [[nodiscard]] double moment(int m) const;
    /// E(Z^m) by quadrature for every m (the m <= 2 closed forms bypass this).
    [[nodiscard]] double moment_by_quadrature(int m) const;

  private:
    // f(x(t)) dx/dt.
    [[nodiscard]] double density_in_angle(double t) const;

    double abs_a_;
    double skew_;
    double gap_;  // sqrt(1 - |a|^2)
};

double limit_density(const Coin& coin, const Qubit& phi, double x);
double limit_moment(const Coin& coin, const Qubit& phi, int m);
double limit_cdf(const Coin& coin, const Qubit& phi, double x);

/// k-sum form of E(exp(i xi X_n / n)) through P_{k-1}^{(0, n-2k)} and
/// P_{k-1}^{(1, n-2k)} at 2|a|^2 - 1, with x = k/n in each summand.
cplx asymptotic_char_function(const Coin& coin, const Qubit& phi, int n, double xi);

/// Kolmogorov distance between the law of X_n / n and the limit law.
double ks_distance(const Distribution& dist, const Coin& coin, const Qubit& phi);

}  // namespace qwalk
