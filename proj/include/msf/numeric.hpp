#pragma once

// Exact integers and rationals, plus certified real enclosures.
//
// Every transcendental quantity in the library (fractional powers, logs) is
// carried as a `Certified` enclosure [lower, upper] with dyadic-rational end
// points produced by outward-rounded MPFR arithmetic. Comparisons against an
// enclosure are three-valued; callers widen the precision when undecided.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace msf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr unsigned kDefaultPrecision = 128;

std::string to_decimal(const BigInt& value);
/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_decimal(const BigRational& value);
double to_double(const BigRational& value);

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigRational pow(const BigRational& base, std::int64_t exponent);
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// True if the rational is an integer.
bool is_integral(const BigRational& value);

/// Exact sign of `x - coeff * base^exponent` for x >= 0, coeff > 0, base > 0.
/// Computed by raising both sides to the exponent's denominator.
std::strong_ordering compare_power(const BigRational& x, const BigRational& coeff,
                                   const BigRational& base, const BigRational& exponent);

/// Enclosure of a real number by two rationals.
struct Certified {
  BigRational lower;
  BigRational upper;

  bool exact() const { return lower == upper; }
  double approx() const;
  /// Midpoint as a short decimal, for reports.
  std::string approx_string() const;
};

enum class Verdict { kTrue, kFalse, kUndecided };

/// Decides x <= value using the enclosure.
Verdict certainly_le(const BigRational& x, const Certified& value);
/// Decides x >= value using the enclosure.
Verdict certainly_ge(const BigRational& x, const Certified& value);

/// Closed interval with MPFR end points, rounded outward on every operation.
class Interval {
 public:
  explicit Interval(unsigned precision = kDefaultPrecision);
  Interval(const BigRational& value, unsigned precision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval log2(unsigned precision);
  static Interval log3(unsigned precision);

  unsigned precision() const noexcept { return precision_; }

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  Interval operator-() const;

  /// Natural log; requires a strictly positive interval.
  Interval log() const;
  Interval exp() const;
  /// Square root; requires a non-negative interval.
  Interval sqrt() const;

  /// +1 / -1 when the interval is strictly positive / negative, 0 otherwise.
  int sign() const;

  Certified certified() const;

 private:
  struct Impl;
  unsigned precision_;
  Impl* impl_;
};

/// Enclosure of coeff * base^exponent for positive rationals.
Certified certified_power(const BigRational& coeff, const BigRational& base,
                          const BigRational& exponent, unsigned precision = kDefaultPrecision);

}  // namespace msf
