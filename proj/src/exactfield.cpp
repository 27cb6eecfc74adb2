#include "b3img/exactfield.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace b3img {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::abs(a / std::gcd(a, b) * b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity::RootOfUnity(std::int64_t k, std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::ParseError, "root of unity denominator must be positive");
  k = mod_floor(k, n);
  std::int64_t g = std::gcd(k, n);
  if (k == 0) {
    num_ = 0;
    den_ = 1;
  } else {
    num_ = k / g;
    den_ = n / g;
  }
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "expected k/n, got '" + std::string(text) + "'");
  }
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto first = part.data();
    auto last = part.data() + part.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
      throw Error(ErrorCode::ParseError, "malformed exponent '" + std::string(text) + "'");
    }
    return v;
  };
  std::int64_t k = parse_int(text.substr(0, slash));
  std::int64_t n = parse_int(text.substr(slash + 1));
  if (n <= 0) throw Error(ErrorCode::ParseError, "non-positive denominator in '" + std::string(text) + "'");
  return RootOfUnity(k, n);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  std::int64_t n = lcm64(den_, other.den_);
  return RootOfUnity(num_ * (n / den_) + other.num_ * (n / other.den_), n);
}

RootOfUnity RootOfUnity::operator/(const RootOfUnity& other) const { return *this * other.inverse(); }

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(-num_, den_); }

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  __int128 k = static_cast<__int128>(num_) * e;
  k %= den_;
  return RootOfUnity(static_cast<std::int64_t>(k), den_);
}

std::string RootOfUnity::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering RootOfUnity::operator<=>(const RootOfUnity& other) const {
  __int128 lhs = static_cast<__int128>(num_) * other.den_;
  __int128 rhs = static_cast<__int128>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
  if (d.is_zero() || d.coeffs_.back() != 1) {
    throw Error(ErrorCode::DivisionByZero, "divisor must be monic");
  }
  if (degree() < d.degree()) {
    if (is_zero()) return {};
    throw Error(ErrorCode::InternalInconsistency, "inexact polynomial division");
  }
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(rem.size() - d.coeffs_.size() + 1, 0);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt t = rem[k + d.degree()];
    quot[k] = t;
    if (t == 0) continue;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= t * d.coeffs_[i];
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(ErrorCode::InternalInconsistency, "inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidRange, "cyclotomic polynomial needs n >= 1");
  static std::map<std::int64_t, std::unique_ptr<IntPolynomial>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  std::vector<BigInt> xn(n + 1, 0);
  xn[0] = -1;
  xn[n] = 1;
  IntPolynomial result(std::move(xn));
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) result = result.divide_exact(cyclotomic_polynomial(d));
  }
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(n, std::make_unique<IntPolynomial>(std::move(result)));
  return *it->second;
}

// ---------------------------------------------------------------------------
// CyclotomicField

CyclotomicField::CyclotomicField(std::int64_t conductor) : conductor_(conductor) {
  if (conductor < 1) throw Error(ErrorCode::InvalidRange, "conductor must be >= 1");
  const IntPolynomial& phi = cyclotomic_polynomial(conductor);
  degree_ = phi.degree();
  modulus_.reserve(degree_ + 1);
  for (const auto& c : phi.coeffs()) {
    if (!c.fits_slong_p()) throw Error(ErrorCode::InvalidRange, "cyclotomic coefficient too large");
    modulus_.push_back(c.get_si());
  }
  // zeta^0 = 1; zeta^{j+1} = x * zeta^j reduced mod Phi_N.
  powers_.assign(static_cast<std::size_t>(conductor_) * degree_, 0);
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (std::int64_t j = 0; j < conductor_; ++j) {
    std::copy(cur.begin(), cur.end(), powers_.begin() + j * degree_);
    std::int64_t top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < degree_; ++i) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(top, modulus_[i], &prod) ||
            __builtin_sub_overflow(cur[i], prod, &cur[i])) {
          throw Error(ErrorCode::InvalidRange, "power table overflow");
        }
      }
    }
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::int64_t conductor) {
  static std::map<std::int64_t, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const CyclotomicField>(conductor);
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(conductor, std::move(field));
  return it->second;
}

std::span<const std::int64_t> CyclotomicField::power(std::int64_t j) const {
  std::int64_t r = mod_floor(j, conductor_);
  return {powers_.data() + r * degree_, static_cast<std::size_t>(degree_)};
}

// ---------------------------------------------------------------------------
// CycNumber

CycNumber::CycNumber(std::int64_t conductor) : CycNumber(CyclotomicField::get(conductor)) {}

CycNumber::CycNumber(FieldPtr field) : field_(std::move(field)), coords_(field_->degree(), 0) {}

CycNumber::CycNumber(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector length must equal phi(N)");
  }
}

CycNumber CycNumber::one(std::int64_t conductor) { return rational(conductor, 1); }

CycNumber CycNumber::rational(std::int64_t conductor, const Rational& value) {
  CycNumber c(conductor);
  c.coords_[0] = value;
  return c;
}

CycNumber CycNumber::from_power_coeffs(std::int64_t conductor, std::span<const Rational> coeffs) {
  CycNumber c(conductor);
  const auto& f = *c.field_;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    auto p = f.power(static_cast<std::int64_t>(j));
    for (int i = 0; i < f.degree(); ++i) {
      if (p[i] != 0) c.coords_[i] += coeffs[j] * p[i];
    }
  }
  return c;
}

void CycNumber::require_same_field(const CycNumber& other) const {
  if (field_->conductor() != other.field_->conductor()) {
    throw Error(ErrorCode::ConductorMismatch, "conductors " + std::to_string(conductor()) + " and " +
                                                  std::to_string(other.conductor()));
  }
}

bool CycNumber::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool CycNumber::is_integral() const {
  for (const auto& c : coords_)
    if (c.get_den() != 1) return false;
  return true;
}

CycNumber CycNumber::operator+(const CycNumber& other) const {
  CycNumber r = *this;
  r += other;
  return r;
}

CycNumber CycNumber::operator-(const CycNumber& other) const {
  CycNumber r = *this;
  r -= other;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycNumber CycNumber::scaled(const Rational& factor) const {
  CycNumber r = *this;
  for (auto& c : r.coords_) c *= factor;
  return r;
}

CycNumber CycNumber::operator*(const CycNumber& other) const {
  require_same_field(other);
  const int n = field_->degree();
  std::vector<Rational> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (other.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * other.coords_[j];
    }
  }
  auto mod = field_->modulus();
  for (int k = 2 * n - 2; k >= n; --k) {
    if (prod[k] == 0) continue;
    Rational t = prod[k];
    for (int i = 0; i < n; ++i) {
      if (mod[i] != 0) prod[k - n + i] -= t * mod[i];
    }
  }
  prod.resize(n);
  return CycNumber(field_, std::move(prod));
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const int n = field_->degree();
  if (is_rational()) return rational(conductor(), 1 / coords_[0]);
  // Column j of the multiplication matrix is this * zeta^j; solve M x = e_0.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(n, 0);
    e[j] = 1;
    CycNumber col = *this * CycNumber(field_, e);
    for (int i = 0; i < n; ++i) m[i][j] = col.coords_[i];
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::DivisionByZero, "singular multiplication map");
    std::swap(m[piv], m[c]);
    Rational pinv = 1 / m[c][c];
    for (int k = c; k <= n; ++k) m[c][k] *= pinv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n];
  return CycNumber(field_, std::move(x));
}

CycNumber CycNumber::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result = one(conductor());
  CycNumber base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycNumber CycNumber::galois(std::int64_t a) const {
  const std::int64_t n = conductor();
  if (std::gcd(mod_floor(a, n), n) != 1) {
    throw Error(ErrorCode::NotCoprime, "galois exponent " + std::to_string(a) + " not coprime to " + std::to_string(n));
  }
  CycNumber r(field_);
  for (int i = 0; i < field_->degree(); ++i) {
    if (coords_[i] == 0) continue;
    auto p = field_->power(static_cast<std::int64_t>(i) * a);
    for (int k = 0; k < field_->degree(); ++k)
      if (p[k] != 0) r.coords_[k] += coords_[i] * p[k];
  }
  return r;
}

CycNumber CycNumber::lift(std::int64_t new_conductor) const {
  if (new_conductor % conductor() != 0) {
    throw Error(ErrorCode::ConductorMismatch,
                std::to_string(conductor()) + " does not divide " + std::to_string(new_conductor));
  }
  if (new_conductor == conductor()) return *this;
  auto target = CyclotomicField::get(new_conductor);
  CycNumber r(target);
  const std::int64_t step = new_conductor / conductor();
  for (int i = 0; i < field_->degree(); ++i) {
    if (coords_[i] == 0) continue;
    auto p = target->power(static_cast<std::int64_t>(i) * step);
    for (int k = 0; k < target->degree(); ++k)
      if (p[k] != 0) r.coords_[k] += coords_[i] * p[k];
  }
  return r;
}

bool CycNumber::operator==(const CycNumber& other) const {
  require_same_field(other);
  return coords_ == other.coords_;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < field_->degree(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (!unit || i == 0) os << rational_to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << "z" << conductor();
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

void CycNumber::encode(std::string& out) const {
  out += std::to_string(conductor());
  out += ':';
  for (const auto& c : coords_) {
    out += c.get_num().get_str(16);
    if (c.get_den() != 1) {
      out += '/';
      out += c.get_den().get_str(16);
    }
    out += ',';
  }
}

CycNumber embed(const RootOfUnity& r, std::int64_t conductor) {
  if (conductor % r.den() != 0) {
    throw Error(ErrorCode::OrderNotDividingConductor,
                "order " + std::to_string(r.den()) + " does not divide " + std::to_string(conductor));
  }
  auto field = CyclotomicField::get(conductor);
  auto p = field->power(r.num() * (conductor / r.den()));
  std::vector<Rational> coords(p.begin(), p.end());
  return CycNumber(field, std::move(coords));
}

bool roots_sum_to_zero(std::span<const RootOfUnity> terms) {
  std::int64_t n = 1;
  for (const auto& t : terms) n = lcm64(n, t.den());
  // Integer coordinates suffice: each term is a row of the field's power table.
  const auto field = CyclotomicField::get(n);
  std::vector<std::int64_t> sum(field->degree(), 0);
  for (const auto& t : terms) {
    const auto row = field->power(t.num() * (n / t.den()));
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += row[i];
  }
  return std::all_of(sum.begin(), sum.end(), [](std::int64_t c) { return c == 0; });
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace b3img
