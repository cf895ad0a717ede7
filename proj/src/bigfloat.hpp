#pragma once

#include <mpfr.h>

namespace qwalk::detail {

/// Minimal RAII handle over an mpfr_t with a fixed per-value precision.
///
/// Every value carries its own precision, so concurrent evaluations with
/// different precisions never touch shared state.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t bits, double value = 0.0) {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    BigFloat(const BigFloat& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    BigFloat& operator=(const BigFloat& other) {
        if (this != &other) mpfr_set(v_, other.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    BigFloat& operator+=(const BigFloat& rhs) {
        mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& rhs) {
        mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& rhs) {
        mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& mul(unsigned long k) {
        mpfr_mul_ui(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    BigFloat& div(unsigned long k) {
        mpfr_div_ui(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    BigFloat& pow(unsigned long k) {
        mpfr_pow_ui(v_, v_, k, MPFR_RNDN);
        return *this;
    }
    BigFloat& sqrt() {
        mpfr_sqrt(v_, v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& neg() {
        mpfr_neg(v_, v_, MPFR_RNDN);
        return *this;
    }

    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

}  // namespace qwalk::detail
