#include "msf/numeric.hpp"

#include "msf/error.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace msf {

namespace mp = boost::multiprecision;

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_decimal(const BigRational& value) {
  if (mp::denominator(value) == 1) return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

double to_double(const BigRational& value) { return value.convert_to<double>(); }

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigRational pow(const BigRational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw InvalidArgument("zero raised to a negative power");
    BigRational inv = BigRational(mp::denominator(base), mp::numerator(base));
    return pow(inv, -exponent);
  }
  BigInt num = pow(mp::numerator(base), static_cast<std::uint64_t>(exponent));
  BigInt den = pow(mp::denominator(base), static_cast<std::uint64_t>(exponent));
  return BigRational(num, den);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

bool is_integral(const BigRational& value) { return mp::denominator(value) == 1; }

std::strong_ordering compare_power(const BigRational& x, const BigRational& coeff,
                                   const BigRational& base, const BigRational& exponent) {
  if (x < 0 || coeff <= 0 || base <= 0) {
    throw InvalidArgument("compare_power needs x >= 0, coeff > 0 and base > 0");
  }
  const BigInt& p = mp::numerator(exponent);
  const BigInt& q = mp::denominator(exponent);
  if (q > 1'000'000 || mp::abs(p) > BigInt(1'000'000'000)) {
    throw InvalidArgument("compare_power exponent too large for exact comparison");
  }
  BigRational lhs = pow(BigRational(x / coeff), q.convert_to<std::int64_t>());
  BigRational rhs = pow(base, p.convert_to<std::int64_t>());
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Certified::approx() const { return to_double((lower + upper) / 2); }

std::string Certified::approx_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", approx());
  return buf;
}

Verdict certainly_le(const BigRational& x, const Certified& value) {
  if (x <= value.lower) return Verdict::kTrue;
  if (x > value.upper) return Verdict::kFalse;
  return Verdict::kUndecided;
}

Verdict certainly_ge(const BigRational& x, const Certified& value) {
  if (x >= value.upper) return Verdict::kTrue;
  if (x < value.lower) return Verdict::kFalse;
  return Verdict::kUndecided;
}

// ---------------------------------------------------------------------------
// Interval

struct Interval::Impl {
  mpfr_t lo;
  mpfr_t hi;

  explicit Impl(unsigned precision) {
    mpfr_init2(lo, static_cast<mpfr_prec_t>(precision));
    mpfr_init2(hi, static_cast<mpfr_prec_t>(precision));
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
  }
  ~Impl() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  Impl(const Impl&) = delete;
  Impl& operator=(const Impl&) = delete;
};

namespace {

void set_rational(mpfr_t out, const BigRational& value, mpfr_rnd_t rnd) {
  std::string text = mp::numerator(value).str() + "/" + mp::denominator(value).str();
  mpq_t q;
  mpq_init(q);
  mpq_set_str(q, text.c_str(), 10);
  mpq_canonicalize(q);
  mpfr_set_q(out, q, rnd);
  mpq_clear(q);
}

BigRational to_rational(const mpfr_t x) {
  if (!mpfr_number_p(x)) throw Error("interval end point is not finite");
  if (mpfr_zero_p(x)) return 0;
  mpz_t mant;
  mpz_init(mant);
  mpfr_exp_t e = mpfr_get_z_2exp(mant, x);
  std::string digits(mpz_sizeinbase(mant, 10) + 2, '\0');
  mpz_get_str(digits.data(), 10, mant);
  digits.resize(std::char_traits<char>::length(digits.c_str()));
  BigInt m(digits);
  mpz_clear(mant);
  if (e >= 0) return BigRational(m << static_cast<unsigned>(e));
  return BigRational(m, BigInt(1) << static_cast<unsigned>(-e));
}

}  // namespace

Interval::Interval(unsigned precision) : precision_(precision), impl_(new Impl(precision)) {}

Interval::Interval(const BigRational& value, unsigned precision) : Interval(precision) {
  set_rational(impl_->lo, value, MPFR_RNDD);
  set_rational(impl_->hi, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.precision_) {
  mpfr_set(impl_->lo, other.impl_->lo, MPFR_RNDD);
  mpfr_set(impl_->hi, other.impl_->hi, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept
    : precision_(other.precision_), impl_(std::exchange(other.impl_, nullptr)) {}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    Interval copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(precision_, other.precision_);
  std::swap(impl_, other.impl_);
  return *this;
}

Interval::~Interval() { delete impl_; }

Interval Interval::log2(unsigned precision) {
  Interval r(precision);
  mpfr_const_log2(r.impl_->lo, MPFR_RNDD);
  mpfr_const_log2(r.impl_->hi, MPFR_RNDU);
  return r;
}

Interval Interval::log3(unsigned precision) { return Interval(BigRational(3), precision).log(); }

Interval Interval::operator+(const Interval& rhs) const {
  Interval r(std::max(precision_, rhs.precision_));
  mpfr_add(r.impl_->lo, impl_->lo, rhs.impl_->lo, MPFR_RNDD);
  mpfr_add(r.impl_->hi, impl_->hi, rhs.impl_->hi, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& rhs) const { return *this + (-rhs); }

Interval Interval::operator-() const {
  Interval r(precision_);
  mpfr_neg(r.impl_->lo, impl_->hi, MPFR_RNDD);
  mpfr_neg(r.impl_->hi, impl_->lo, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& rhs) const {
  Interval r(std::max(precision_, rhs.precision_));
  mpfr_t t;
  mpfr_init2(t, static_cast<mpfr_prec_t>(r.precision_));
  const mpfr_ptr a[2] = {impl_->lo, impl_->hi};
  const mpfr_ptr b[2] = {rhs.impl_->lo, rhs.impl_->hi};
  bool first = true;
  for (mpfr_ptr x : a) {
    for (mpfr_ptr y : b) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.impl_->lo)) mpfr_set(r.impl_->lo, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.impl_->hi)) mpfr_set(r.impl_->hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(impl_->lo) <= 0) throw InvalidArgument("log of a non-positive interval");
  Interval r(precision_);
  mpfr_log(r.impl_->lo, impl_->lo, MPFR_RNDD);
  mpfr_log(r.impl_->hi, impl_->hi, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(precision_);
  mpfr_exp(r.impl_->lo, impl_->lo, MPFR_RNDD);
  mpfr_exp(r.impl_->hi, impl_->hi, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(impl_->lo) < 0) throw InvalidArgument("sqrt of a negative interval");
  Interval r(precision_);
  mpfr_sqrt(r.impl_->lo, impl_->lo, MPFR_RNDD);
  mpfr_sqrt(r.impl_->hi, impl_->hi, MPFR_RNDU);
  return r;
}

int Interval::sign() const {
  if (mpfr_sgn(impl_->lo) > 0) return 1;
  if (mpfr_sgn(impl_->hi) < 0) return -1;
  return 0;
}

Certified Interval::certified() const { return {to_rational(impl_->lo), to_rational(impl_->hi)}; }

Certified certified_power(const BigRational& coeff, const BigRational& base,
                          const BigRational& exponent, unsigned precision) {
  if (coeff <= 0 || base <= 0) throw InvalidArgument("certified_power needs positive coeff and base");
  if (is_integral(exponent) && mp::abs(exponent) <= 100'000) {
    BigRational v = coeff * pow(base, mp::numerator(exponent).convert_to<std::int64_t>());
    return {v, v};
  }
  Interval value = Interval(coeff, precision) * (Interval(exponent, precision) * Interval(base, precision).log()).exp();
  return value.certified();
}

}  // namespace msf
