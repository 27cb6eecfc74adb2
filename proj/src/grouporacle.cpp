#include "b3img/grouporacle.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace b3img {

std::string to_string(ClosureOutcome outcome) {
  return outcome == ClosureOutcome::Completed ? "Completed" : "ExceededBound";
}

ClosureOutcome closure_outcome_from_string(const std::string& s) {
  if (s == "Completed") return ClosureOutcome::Completed;
  if (s == "ExceededBound") return ClosureOutcome::ExceededBound;
  throw Error(ErrorCode::ParseError, "unknown closure outcome '" + s + "'");
}

namespace {

struct IntegralOverflow {};

/// Matrices over Z[zeta_N] as flat int64 coordinate arrays, entry (r, c)
/// occupying phi consecutive slots starting at (r*d + c)*phi.
class IntegralArith {
public:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 50;

  IntegralArith(int dim, const FieldPtr& field)
      : d_(dim), phi_(field->degree()), n_(field->conductor()), size_(static_cast<std::size_t>(dim) * dim * phi_) {
    for (int j = phi_; j < 2 * phi_ - 1; ++j) {
      auto p = field->power(j);
      high_.insert(high_.end(), p.begin(), p.end());
    }
    auto top = field->power(phi_);
    zeta_top_.assign(top.begin(), top.end());
  }

  std::size_t size() const { return size_; }
  int phi() const { return phi_; }

  static std::optional<std::vector<std::int64_t>> from_matrix(const CycMatrix& m) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(m.dim()) * m.dim() * m.field()->degree());
    for (const auto& e : m.entries()) {
      for (const auto& q : e.coords()) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
        const long v = q.get_num().get_si();
        if (v >= kLimit || v <= -kLimit) return std::nullopt;
        out.push_back(v);
      }
    }
    return out;
  }

  CycMatrix to_matrix(const std::int64_t* x) const {
    std::vector<CycNumber> entries;
    entries.reserve(static_cast<std::size_t>(d_) * d_);
    auto field = CyclotomicField::get(n_);
    for (int e = 0; e < d_ * d_; ++e) {
      std::vector<Rational> coords(x + e * phi_, x + (e + 1) * phi_);
      entries.emplace_back(field, std::move(coords));
    }
    return CycMatrix(d_, std::move(entries));
  }

  /// out = a * b, throwing IntegralOverflow when a coordinate leaves (-kLimit, kLimit).
  void multiply(const std::int64_t* a, const std::int64_t* b, std::int64_t* out) const {
    std::vector<__int128>& acc = scratch_;
    acc.assign(2 * phi_ - 1, 0);
    for (int r = 0; r < d_; ++r) {
      for (int c = 0; c < d_; ++c) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < d_; ++k) {
          const std::int64_t* x = a + (r * d_ + k) * phi_;
          const std::int64_t* y = b + (k * d_ + c) * phi_;
          for (int i = 0; i < phi_; ++i) {
            if (x[i] == 0) continue;
            const __int128 xi = x[i];
            for (int j = 0; j < phi_; ++j) acc[i + j] += xi * y[j];
          }
        }
        std::int64_t* dst = out + (r * d_ + c) * phi_;
        for (int i = 0; i < phi_; ++i) {
          __int128 v = acc[i];
          for (int j = phi_; j < 2 * phi_ - 1; ++j) {
            if (acc[j] != 0) v += acc[j] * high_[(j - phi_) * phi_ + i];
          }
          if (v >= kLimit || v <= -kLimit) throw IntegralOverflow{};
          dst[i] = static_cast<std::int64_t>(v);
        }
      }
    }
  }

  /// Replaces x by the multiple zeta^k x (0 <= k < N) whose first nonzero
  /// entry has the lexicographically least coordinates.
  void normalize_scalar(std::int64_t* x) const {
    int first = 0;
    while (first < d_ * d_ && is_zero_entry(x + first * phi_)) ++first;
    if (first == d_ * d_) throw Error(ErrorCode::ZeroMatrix, "zero matrix in closure");
    std::vector<std::int64_t> v(x + first * phi_, x + (first + 1) * phi_);
    std::vector<std::int64_t> best = v;
    std::int64_t best_k = 0;
    for (std::int64_t k = 1; k < n_; ++k) {
      times_zeta(v.data());
      if (v < best) {
        best = v;
        best_k = k;
      }
    }
    if (best_k == 0) return;
    for (int e = first; e < d_ * d_; ++e) {
      std::int64_t* entry = x + e * phi_;
      if (is_zero_entry(entry)) continue;
      for (std::int64_t k = 0; k < best_k; ++k) times_zeta(entry);
    }
  }

private:
  bool is_zero_entry(const std::int64_t* e) const {
    for (int i = 0; i < phi_; ++i)
      if (e[i] != 0) return false;
    return true;
  }

  void times_zeta(std::int64_t* e) const {
    const std::int64_t carry = e[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) e[i] = e[i - 1];
    e[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < phi_; ++i) e[i] += carry * zeta_top_[i];
    }
  }

  int d_;
  int phi_;
  std::int64_t n_;
  std::size_t size_;
  std::vector<std::int64_t> high_;      // zeta^j for phi <= j < 2 phi - 1
  std::vector<std::int64_t> zeta_top_;  // zeta^phi
  mutable std::vector<__int128> scratch_;
};

std::uint64_t hash_coords(const std::int64_t* x, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::uint64_t>(x[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h;
}

/// Generators followed by those inverses that are not already in the list.
std::vector<CycMatrix> symmetric_generating_set(const std::vector<CycMatrix>& generators) {
  std::vector<CycMatrix> out = generators;
  for (const auto& g : generators) {
    CycMatrix inv = [&] {
      try {
        return g.inverse();
      } catch (const Error&) {
        throw Error(ErrorCode::SingularGenerator, "closure generator is singular");
      }
    }();
    if (std::none_of(out.begin(), out.end(), [&](const CycMatrix& h) { return h == inv; })) {
      out.push_back(std::move(inv));
    }
  }
  return out;
}

Closure integral_closure(const std::vector<CycMatrix>& moves, const ClosureOptions& options,
                         const std::vector<std::vector<std::int64_t>>& flat_moves) {
  const int d = moves.front().dim();
  const IntegralArith arith(d, moves.front().field());
  const std::size_t sz = arith.size();

  std::vector<std::int64_t> arena;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index;
  auto insert_if_new = [&](const std::int64_t* x) -> bool {
    const std::uint64_t h = hash_coords(x, sz);
    auto [lo, hi] = index.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (std::equal(x, x + sz, arena.data() + it->second * sz)) return false;
    }
    const auto id = static_cast<std::uint32_t>(arena.size() / sz);
    arena.insert(arena.end(), x, x + sz);
    index.emplace(h, id);
    return true;
  };

  Closure out;
  out.result.bound = options.bound;
  out.result.stats.arithmetic = "integral";

  auto identity = *IntegralArith::from_matrix(CycMatrix::identity(d, moves.front().conductor()));
  arith.normalize_scalar(identity.data());
  insert_if_new(identity.data());
  std::vector<std::uint32_t> frontier{0};
  std::vector<std::int64_t> product(sz);
  std::uint64_t peak = 1;
  bool exceeded = false;

  while (!frontier.empty() && !exceeded) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t id : frontier) {
      for (const auto& g : flat_moves) {
        arith.multiply(g.data(), arena.data() + id * sz, product.data());
        ++out.result.stats.products;
        arith.normalize_scalar(product.data());
        if (insert_if_new(product.data())) {
          next.push_back(static_cast<std::uint32_t>(arena.size() / sz - 1));
          if (static_cast<std::int64_t>(arena.size() / sz) > options.bound) {
            exceeded = true;
            break;
          }
        }
      }
      if (exceeded) break;
    }
    peak = std::max<std::uint64_t>(peak, next.size());
    frontier = std::move(next);
  }

  out.result.stats.peak_frontier = peak;
  if (exceeded) {
    out.result.outcome = ClosureOutcome::ExceededBound;
  } else {
    out.result.outcome = ClosureOutcome::Completed;
    out.result.order = static_cast<std::int64_t>(arena.size() / sz);
    if (options.keep_elements) {
      for (std::size_t i = 0; i < arena.size() / sz; ++i) out.elements.push_back(arith.to_matrix(arena.data() + i * sz));
    }
  }
  return out;
}

Closure rational_closure(const std::vector<CycMatrix>& moves, const ClosureOptions& options) {
  const int d = moves.front().dim();
  std::unordered_set<std::string> seen;
  std::vector<CycMatrix> elements;

  Closure out;
  out.result.bound = options.bound;
  out.result.stats.arithmetic = "rational";

  CycMatrix identity = CycMatrix::identity(d, moves.front().conductor());
  seen.insert(identity.encode());
  elements.push_back(identity);
  std::vector<std::size_t> frontier{0};
  std::uint64_t peak = 1;
  bool exceeded = false;

  while (!frontier.empty() && !exceeded) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      for (const auto& g : moves) {
        CycMatrix y = projective_canonical(g * elements[id]);
        ++out.result.stats.products;
        if (seen.insert(y.encode()).second) {
          elements.push_back(std::move(y));
          next.push_back(elements.size() - 1);
          if (static_cast<std::int64_t>(elements.size()) > options.bound) {
            exceeded = true;
            break;
          }
        }
      }
      if (exceeded) break;
    }
    peak = std::max<std::uint64_t>(peak, next.size());
    frontier = std::move(next);
  }

  out.result.stats.peak_frontier = peak;
  if (exceeded) {
    out.result.outcome = ClosureOutcome::ExceededBound;
  } else {
    out.result.outcome = ClosureOutcome::Completed;
    out.result.order = static_cast<std::int64_t>(elements.size());
    if (options.keep_elements) out.elements = std::move(elements);
  }
  return out;
}

}  // namespace

Closure projective_closure_full(const std::vector<CycMatrix>& generators, const ClosureOptions& options) {
  if (generators.empty()) throw Error(ErrorCode::InvalidSpec, "closure needs at least one generator");
  if (options.bound < 1) throw Error(ErrorCode::InvalidRange, "closure bound must be >= 1");
  const int d = generators.front().dim();
  const std::int64_t n = generators.front().conductor();
  for (const auto& g : generators) {
    if (g.dim() != d) throw Error(ErrorCode::DimensionMismatch, "closure generators differ in dimension");
    if (g.conductor() != n) throw Error(ErrorCode::ConductorMismatch, "closure generators differ in conductor");
  }
  const std::vector<CycMatrix> moves = symmetric_generating_set(generators);

  if (!options.force_rational) {
    std::vector<std::vector<std::int64_t>> flat;
    for (const auto& m : moves) {
      auto f = IntegralArith::from_matrix(m);
      if (!f) break;
      flat.push_back(std::move(*f));
    }
    if (flat.size() == moves.size()) {
      try {
        return integral_closure(moves, options, flat);
      } catch (const IntegralOverflow&) {
        // fall through to the rational path
      }
    }
  }
  return rational_closure(moves, options);
}

ClosureResult projective_closure(const std::vector<CycMatrix>& generators, std::int64_t bound) {
  ClosureOptions options;
  options.bound = bound;
  return projective_closure_full(generators, options).result;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) { normalize(); }

void Word::normalize() {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.generator < 0) throw Error(ErrorCode::OutOfRange, "negative generator index");
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters_ = std::move(out);
}

namespace {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "word '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) ++pos_;
  }

  Word parse_sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      w = w * parse_factor();
    }
  }

  Word parse_factor() {
    Word base;
    const char c = text_[pos_];
    if (c >= 'A' && c <= 'Z') {
      base = Word({{c - 'A', 1}});
      ++pos_;
    } else if (c == '1') {
      ++pos_;
    } else if (c == '(') {
      ++pos_;
      base = parse_sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      fail("expected a generator letter, '1' or '('");
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
      std::int64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_++] - '0');
        if (e > 1000000000) fail("exponent too large");
      }
      base = base.pow(negative ? -e : e);
    }
    return base;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Word::parse(std::string_view text) { return WordParser(text).parse(); }

int Word::max_generator() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return Word(std::move(out));
}

Word Word::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (letters_.size() == 1) return Word({{letters_[0].generator, letters_[0].exponent * e}});
  std::vector<Letter> out;
  for (std::int64_t i = 0; i < e; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>('A' + l.generator);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

CycMatrix evaluate(const std::vector<CycMatrix>& generators, const Word& w) {
  if (generators.empty()) throw Error(ErrorCode::InvalidSpec, "no generators to evaluate a word over");
  if (w.max_generator() >= static_cast<int>(generators.size())) {
    throw Error(ErrorCode::OutOfRange, "word " + w.to_string() + " uses a generator that was not supplied");
  }
  CycMatrix out = CycMatrix::identity(generators.front().dim(), generators.front().conductor());
  for (const auto& l : w.letters()) out = out * generators[l.generator].pow(l.exponent);
  return out;
}

bool check_relation(const std::vector<CycMatrix>& generators, const Word& lhs, const Word& rhs) {
  return projectively_equal(evaluate(generators, lhs), evaluate(generators, rhs));
}

std::optional<std::int64_t> element_projective_order(const std::vector<CycMatrix>& generators, const Word& w,
                                                     std::int64_t bound) {
  return projective_order(evaluate(generators, w), bound);
}

}  // namespace b3img
