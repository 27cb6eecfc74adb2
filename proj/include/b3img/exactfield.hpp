#pragma once

// Exact arithmetic: rationals, roots of unity and elements of Q(zeta_N).
//
// Elements of Q(zeta_N) are stored in the power basis {zeta^i : 0 <= i < phi(N)}
// after reduction modulo the N-th cyclotomic polynomial, so equality and the
// zero test are coordinatewise and exact.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "b3img/error.hpp"

namespace b3img {

using BigInt = mpz_class;
using Rational = mpq_class;

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

/// e^{2 pi i k/n}, stored as the reduced exponent k/n in [0, 1).
class RootOfUnity {
public:
  RootOfUnity() = default;
  /// Any integer k and n >= 1; the exponent is reduced modulo 1.
  RootOfUnity(std::int64_t k, std::int64_t n);

  /// Parses "k/n" (k may be negative or >= n).
  static RootOfUnity parse(std::string_view text);
  static RootOfUnity minus_one() { return {1, 2}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity operator/(const RootOfUnity& other) const;
  RootOfUnity operator-() const { return *this * minus_one(); }
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t e) const;

  std::string to_string() const;

  bool operator==(const RootOfUnity&) const = default;
  /// Orders by exponent value in [0,1).
  std::strong_ordering operator<=>(const RootOfUnity& other) const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Dense integer polynomial, lowest degree first. The zero polynomial is empty.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;

  IntPolynomial operator*(const IntPolynomial& other) const;
  /// Exact division by a monic divisor; throws if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

  std::string to_string() const;
  bool operator==(const IntPolynomial&) const = default;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Phi_n, computed as (x^n - 1) / prod_{d | n, d < n} Phi_d. Cached.
const IntPolynomial& cyclotomic_polynomial(std::int64_t n);

/// Per-conductor reduction tables. Shared and immutable.
class CyclotomicField {
public:
  static std::shared_ptr<const CyclotomicField> get(std::int64_t conductor);

  std::int64_t conductor() const { return conductor_; }
  int degree() const { return degree_; }
  /// Coefficients of Phi_N, lowest first (size degree+1, monic).
  std::span<const std::int64_t> modulus() const { return modulus_; }
  /// Power-basis coordinates of zeta_N^j for any integer j.
  std::span<const std::int64_t> power(std::int64_t j) const;

  explicit CyclotomicField(std::int64_t conductor);

private:
  std::int64_t conductor_;
  int degree_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int64_t> powers_;  // conductor_ rows of degree_ entries
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_N) in canonical power-basis form.
class CycNumber {
public:
  /// Zero of Q(zeta_N).
  explicit CycNumber(std::int64_t conductor);
  explicit CycNumber(FieldPtr field);
  CycNumber(FieldPtr field, std::vector<Rational> coords);

  static CycNumber zero(std::int64_t conductor) { return CycNumber(conductor); }
  static CycNumber one(std::int64_t conductor);
  static CycNumber rational(std::int64_t conductor, const Rational& value);
  /// Reduces an arbitrary-length coefficient vector in powers of zeta_N.
  static CycNumber from_power_coeffs(std::int64_t conductor, std::span<const Rational> coeffs);

  std::int64_t conductor() const { return field_->conductor(); }
  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;

  CycNumber operator+(const CycNumber& other) const;
  CycNumber operator-(const CycNumber& other) const;
  CycNumber operator*(const CycNumber& other) const;
  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& other);
  CycNumber& operator-=(const CycNumber& other);
  CycNumber scaled(const Rational& factor) const;

  /// Multiplicative inverse; throws DivisionByZero on zero.
  CycNumber inverse() const;
  CycNumber pow(std::int64_t e) const;

  /// sigma_a: zeta_N -> zeta_N^a. Requires gcd(a, N) = 1.
  CycNumber galois(std::int64_t a) const;
  /// The same number viewed in Q(zeta_M); requires N | M.
  CycNumber lift(std::int64_t new_conductor) const;

  bool operator==(const CycNumber& other) const;

  std::string to_string() const;
  /// Injective byte encoding of (conductor, coords); used as a hash key.
  void encode(std::string& out) const;

private:
  void require_same_field(const CycNumber& other) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// zeta_N^{kN/n} for r = e^{2 pi i k/n}; throws OrderNotDividingConductor unless n | N.
CycNumber embed(const RootOfUnity& r, std::int64_t conductor);

inline CycNumber galois(const CycNumber& c, std::int64_t a) { return c.galois(a); }
inline CycNumber inv(const CycNumber& c) { return c.inverse(); }

/// Exact test whether a sum of roots of unity vanishes, computed in the
/// smallest conductor containing all terms.
bool roots_sum_to_zero(std::span<const RootOfUnity> terms);

std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace b3img
