#include <mpfr.h>

#include <stdexcept>

#include "thue/solver.hpp"

namespace thue {

namespace {

constexpr mpfr_prec_t kBits = 256;

class Mp {
 public:
  Mp() { mpfr_init2(v_, kBits); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

void set_decimal(Mp& out, const char* text, mpfr_rnd_t rnd) { mpfr_set_str(out.get(), text, 10, rnd); }

// kappa rounded in direction `rnd` (MPFR_RNDU or MPFR_RNDD).
void kappa(Mp& out, const BigInt& m, mpfr_rnd_t rnd) {
  const mpfr_rnd_t opposite = rnd == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU;
  const BigInt d = sqrt_disc(m);

  Mp num, tmp;
  mpfr_set_z(num.get(), d.get_mpz_t(), rnd);
  mpfr_log(num.get(), num.get(), rnd);
  mpfr_div_2ui(num.get(), num.get(), 1, rnd);
  set_decimal(tmp, "0.83", rnd);
  mpfr_add(num.get(), num.get(), tmp.get(), rnd);

  Mp den;
  mpfr_set_z(den.get(), m.get_mpz_t(), opposite);
  mpfr_add_d(den.get(), den.get(), 1.5, opposite);
  mpfr_log(den.get(), den.get(), opposite);
  set_decimal(tmp, "1.3", rnd);
  mpfr_sub(den.get(), den.get(), tmp.get(), opposite);
  if (mpfr_sgn(den.get()) <= 0) throw std::domain_error("kappa denominator not positive");

  mpfr_div(out.get(), num.get(), den.get(), rnd);
}

std::string decimal(const Mp& v, std::size_t digits, mpfr_rnd_t rnd) {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v.get(), rnd);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  if (exp > 0 && static_cast<std::size_t>(exp) < mantissa.size()) {
    return sign + mantissa.substr(0, exp) + "." + mantissa.substr(exp);
  }
  return sign + "0." + mantissa + "e" + std::to_string(exp);
}

void require_threshold(const BigInt& m) {
  if (m < kConvergentThreshold) {
    throw std::invalid_argument("kappa bound requires m >= 30, got " + to_string(m));
  }
}

}  // namespace

KappaBound lpv_kappa(const BigInt& m) {
  require_threshold(m);
  Mp up, down;
  kappa(up, m, MPFR_RNDU);
  kappa(down, m, MPFR_RNDD);
  KappaBound k;
  k.upper = mpfr_get_d(up.get(), MPFR_RNDU);
  k.lower = mpfr_get_d(down.get(), MPFR_RNDD);
  k.upper_decimal = decimal(up, 40, MPFR_RNDU);
  return k;
}

BigInt y_ceiling(const BigInt& m, const BigInt& lambda_max) {
  require_threshold(m);
  if (lambda_max <= 0) throw std::invalid_argument("y_ceiling: lambda_max must be positive");
  Mp k;
  kappa(k, m, MPFR_RNDU);

  // 1 / (2 - kappa), rounded up.
  Mp expo;
  mpfr_ui_sub(expo.get(), 2, k.get(), MPFR_RNDD);
  if (mpfr_sgn(expo.get()) <= 0) throw std::domain_error("no finite ceiling: kappa is not below 2");
  mpfr_ui_div(expo.get(), 1, expo.get(), MPFR_RNDU);

  // 17.78 * 2.59^kappa * lambda_max, rounded up.
  Mp base, tmp;
  set_decimal(tmp, "2.59", MPFR_RNDU);
  mpfr_pow(base.get(), tmp.get(), k.get(), MPFR_RNDU);
  set_decimal(tmp, "17.78", MPFR_RNDU);
  mpfr_mul(base.get(), base.get(), tmp.get(), MPFR_RNDU);
  mpfr_set_z(tmp.get(), lambda_max.get_mpz_t(), MPFR_RNDU);
  mpfr_mul(base.get(), base.get(), tmp.get(), MPFR_RNDU);

  Mp y;
  mpfr_pow(y.get(), base.get(), expo.get(), MPFR_RNDU);
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), y.get(), MPFR_RNDU);
  return out;
}

BigInt convergent_threshold_y(const BigInt& m) {
  if (m < 0) throw std::invalid_argument("convergent_threshold_y: expected m >= 0");
  return ceil_div(8 * sqrt_disc(m), 2 * m + 3);
}

}  // namespace thue
