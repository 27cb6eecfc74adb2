#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b3img/exactfield.hpp"

namespace b3img {

/// Polynomial with coefficients in Q(zeta_N), lowest degree first.
class CycPolynomial {
public:
  CycPolynomial() = default;
  explicit CycPolynomial(std::vector<CycNumber> coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<CycNumber>& coeffs() const { return coeffs_; }
  const CycNumber& coeff(int i) const { return coeffs_.at(i); }

  CycNumber evaluate(const CycNumber& x) const;
  bool operator==(const CycPolynomial& other) const { return coeffs_ == other.coeffs_; }
  std::string to_string() const;

private:
  std::vector<CycNumber> coeffs_;
};

/// Square matrix over Q(zeta_N), row-major. All entries share one conductor.
class CycMatrix {
public:
  static constexpr int kMinDim = 1;
  static constexpr int kMaxDim = 8;

  CycMatrix(int dim, std::int64_t conductor);
  CycMatrix(int dim, std::vector<CycNumber> entries);

  static CycMatrix identity(int dim, std::int64_t conductor);
  static CycMatrix diagonal(const std::vector<CycNumber>& diag);
  /// Entries given as small integers (e.g. the 2x2 generators of S3).
  static CycMatrix from_integers(const std::vector<std::vector<long>>& rows, std::int64_t conductor);

  int dim() const { return dim_; }
  std::int64_t conductor() const { return field_->conductor(); }
  const FieldPtr& field() const { return field_; }

  const CycNumber& operator()(int r, int c) const { return entries_[r * dim_ + c]; }
  CycNumber& operator()(int r, int c) { return entries_[r * dim_ + c]; }
  const std::vector<CycNumber>& entries() const { return entries_; }

  CycMatrix operator*(const CycMatrix& other) const;
  CycMatrix operator+(const CycMatrix& other) const;
  CycMatrix operator-(const CycMatrix& other) const;
  CycMatrix scaled(const CycNumber& c) const;
  CycMatrix pow(std::int64_t e) const;
  CycMatrix inverse() const;
  /// Block-diagonal sum with `other` (used for M (+) M style checks).
  CycMatrix direct_sum(const CycMatrix& other) const;

  CycNumber trace() const;
  CycNumber determinant() const;
  bool is_zero() const;
  bool is_scalar() const;
  bool is_identity() const;
  bool is_integral() const;
  CycMatrix galois(std::int64_t a) const;
  CycMatrix lift(std::int64_t new_conductor) const;

  bool operator==(const CycMatrix& other) const;

  std::string to_string() const;
  /// Injective byte encoding of the exact entries.
  std::string encode() const;

private:
  void require_compatible(const CycMatrix& other) const;

  int dim_;
  FieldPtr field_;
  std::vector<CycNumber> entries_;
};

CycMatrix mat_mul(const CycMatrix& x, const CycMatrix& y);
CycMatrix mat_inv(const CycMatrix& x);

/// Characteristic polynomial det(tI - X), monic of degree dim, via Faddeev-LeVerrier.
CycPolynomial char_poly(const CycMatrix& x);

/// X divided by its first nonzero entry in row-major order.
CycMatrix projective_canonical(const CycMatrix& x);

/// Least t <= bound with X^t scalar, or nullopt when the bound is exceeded.
std::optional<std::int64_t> projective_order(const CycMatrix& x, std::int64_t bound);

/// True when x and y differ by a nonzero scalar factor.
bool projectively_equal(const CycMatrix& x, const CycMatrix& y);

/// Monic polynomial prod (t - r_i) over the embedded roots.
CycPolynomial poly_from_roots(const std::vector<CycNumber>& roots);

}  // namespace b3img
