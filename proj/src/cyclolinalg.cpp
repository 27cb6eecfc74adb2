#include "b3img/cyclolinalg.hpp"

#include <sstream>

namespace b3img {

CycNumber CycPolynomial::evaluate(const CycNumber& x) const {
  CycNumber acc(x.field());
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

std::string CycPolynomial::to_string() const {
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    os << "(" << coeffs_[i].to_string() << ")";
    if (i > 0) os << "*t^" << i << " + ";
  }
  return os.str();
}

CycMatrix::CycMatrix(int dim, std::int64_t conductor)
    : dim_(dim), field_(CyclotomicField::get(conductor)) {
  if (dim < kMinDim || dim > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "unsupported dimension");
  entries_.assign(static_cast<std::size_t>(dim) * dim, CycNumber(field_));
}

CycMatrix::CycMatrix(int dim, std::vector<CycNumber> entries) : dim_(dim), entries_(std::move(entries)) {
  if (dim < kMinDim || dim > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "unsupported dimension");
  if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
    throw Error(ErrorCode::DimensionMismatch, "expected dim*dim entries");
  }
  field_ = entries_.front().field();
  for (const auto& e : entries_) {
    if (e.conductor() != field_->conductor()) {
      throw Error(ErrorCode::ConductorMismatch, "matrix entries must share a conductor");
    }
  }
}

CycMatrix CycMatrix::identity(int dim, std::int64_t conductor) {
  CycMatrix m(dim, conductor);
  for (int i = 0; i < dim; ++i) m(i, i) = CycNumber::one(conductor);
  return m;
}

CycMatrix CycMatrix::diagonal(const std::vector<CycNumber>& diag) {
  const int d = static_cast<int>(diag.size());
  CycMatrix m(d, diag.front().conductor());
  for (int i = 0; i < d; ++i) m(i, i) = diag[i];
  return m;
}

CycMatrix CycMatrix::from_integers(const std::vector<std::vector<long>>& rows, std::int64_t conductor) {
  const int d = static_cast<int>(rows.size());
  CycMatrix m(d, conductor);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(rows[r].size()) != d) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (int c = 0; c < d; ++c) m(r, c) = CycNumber::rational(conductor, rows[r][c]);
  }
  return m;
}

void CycMatrix::require_compatible(const CycMatrix& other) const {
  if (dim_ != other.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions differ");
  if (conductor() != other.conductor()) throw Error(ErrorCode::ConductorMismatch, "matrix conductors differ");
}

CycMatrix CycMatrix::operator*(const CycMatrix& other) const {
  require_compatible(other);
  CycMatrix out(dim_, conductor());
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const CycNumber& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const CycNumber& b = other(k, j);
        if (b.is_zero()) continue;
        out(i, j) += a * b;
      }
    }
  }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& other) const {
  require_compatible(other);
  CycMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& other) const {
  require_compatible(other);
  CycMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

CycMatrix CycMatrix::scaled(const CycNumber& c) const {
  CycMatrix out = *this;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

CycMatrix CycMatrix::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycMatrix result = identity(dim_, conductor());
  CycMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycMatrix CycMatrix::inverse() const {
  const int n = dim_;
  CycMatrix a = *this;
  CycMatrix inv = identity(n, conductor());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
    if (piv != c) {
      for (int k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(c, k));
        std::swap(inv(piv, k), inv(c, k));
      }
    }
    CycNumber pinv = a(c, c).inverse();
    for (int k = 0; k < n; ++k) {
      a(c, k) = a(c, k) * pinv;
      inv(c, k) = inv(c, k) * pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      CycNumber f = a(r, c);
      for (int k = 0; k < n; ++k) {
        if (!a(c, k).is_zero()) a(r, k) -= f * a(c, k);
        if (!inv(c, k).is_zero()) inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

CycMatrix CycMatrix::direct_sum(const CycMatrix& other) const {
  if (conductor() != other.conductor()) throw Error(ErrorCode::ConductorMismatch, "matrix conductors differ");
  const int n = dim_ + other.dim_;
  CycMatrix out(n, conductor());
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(r, c) = (*this)(r, c);
  for (int r = 0; r < other.dim_; ++r)
    for (int c = 0; c < other.dim_; ++c) out(dim_ + r, dim_ + c) = other(r, c);
  return out;
}

CycNumber CycMatrix::trace() const {
  CycNumber t(field_);
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

CycNumber CycMatrix::determinant() const {
  CycPolynomial p = char_poly(*this);
  CycNumber c0 = p.coeff(0);
  return (dim_ % 2 == 0) ? c0 : -c0;
}

bool CycMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool CycMatrix::is_scalar() const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  for (int i = 1; i < dim_; ++i) {
    if (!((*this)(i, i) == (*this)(0, 0))) return false;
  }
  return true;
}

bool CycMatrix::is_identity() const {
  return is_scalar() && (*this)(0, 0) == CycNumber::one(conductor());
}

bool CycMatrix::is_integral() const {
  for (const auto& e : entries_)
    if (!e.is_integral()) return false;
  return true;
}

CycMatrix CycMatrix::galois(std::int64_t a) const {
  CycMatrix out = *this;
  for (auto& e : out.entries_) e = e.galois(a);
  return out;
}

CycMatrix CycMatrix::lift(std::int64_t new_conductor) const {
  std::vector<CycNumber> lifted;
  lifted.reserve(entries_.size());
  for (const auto& e : entries_) lifted.push_back(e.lift(new_conductor));
  return CycMatrix(dim_, std::move(lifted));
}

bool CycMatrix::operator==(const CycMatrix& other) const {
  if (dim_ != other.dim_ || conductor() != other.conductor()) return false;
  return entries_ == other.entries_;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < dim_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < dim_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string CycMatrix::encode() const {
  std::string out;
  out += std::to_string(dim_);
  out += '|';
  for (const auto& e : entries_) {
    e.encode(out);
    out += ';';
  }
  return out;
}

CycMatrix mat_mul(const CycMatrix& x, const CycMatrix& y) { return x * y; }
CycMatrix mat_inv(const CycMatrix& x) { return x.inverse(); }

CycPolynomial char_poly(const CycMatrix& x) {
  const int n = x.dim();
  const std::int64_t N = x.conductor();
  std::vector<CycNumber> c(n + 1, CycNumber(N));
  c[n] = CycNumber::one(N);
  CycMatrix m(n, N);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = X M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(X M_k) / k
    m = x * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = (x * m).trace().scaled(Rational(-1, k));
  }
  return CycPolynomial(std::move(c));
}

CycMatrix projective_canonical(const CycMatrix& x) {
  for (const auto& e : x.entries()) {
    if (!e.is_zero()) return x.scaled(e.inverse());
  }
  throw Error(ErrorCode::ZeroMatrix, "projective canonical form of the zero matrix");
}

bool projectively_equal(const CycMatrix& x, const CycMatrix& y) {
  if (x.dim() != y.dim() || x.conductor() != y.conductor()) return false;
  const auto& xe = x.entries();
  const auto& ye = y.entries();
  std::size_t p = 0;
  while (p < xe.size() && xe[p].is_zero()) ++p;
  if (p == xe.size()) throw Error(ErrorCode::ZeroMatrix, "zero matrix has no projective class");
  for (std::size_t i = 0; i < p; ++i)
    if (!ye[i].is_zero()) return false;
  if (ye[p].is_zero()) return false;
  // y = c x with c = y_p / x_p  <=>  x_p * y_i == y_p * x_i for all i
  for (std::size_t i = p; i < xe.size(); ++i) {
    if (xe[i].is_zero() != ye[i].is_zero()) return false;
    if (xe[i].is_zero()) continue;
    if (!(xe[p] * ye[i] == ye[p] * xe[i])) return false;
  }
  return true;
}

std::optional<std::int64_t> projective_order(const CycMatrix& x, std::int64_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidRange, "bound must be >= 1");
  if (x.determinant().is_zero()) throw Error(ErrorCode::SingularMatrix, "projective order of a singular matrix");
  CycMatrix power = x;
  for (std::int64_t t = 1; t <= bound; ++t) {
    if (power.is_scalar()) return t;
    if (t == bound) break;
    power = power * x;
  }
  return std::nullopt;
}

CycPolynomial poly_from_roots(const std::vector<CycNumber>& roots) {
  const std::int64_t N = roots.front().conductor();
  std::vector<CycNumber> p{CycNumber::one(N)};
  for (const auto& r : roots) {
    std::vector<CycNumber> next(p.size() + 1, CycNumber(N));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * r;
    }
    p = std::move(next);
  }
  return CycPolynomial(std::move(p));
}

}  // namespace b3img
