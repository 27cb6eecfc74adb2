#pragma once

// Bounded exact closure of the projective group generated by a few matrices,
// plus relation and element-order checks on words in the generators.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "b3img/cyclolinalg.hpp"

namespace b3img {

inline constexpr std::int64_t kDefaultClosureBound = 100000;

enum class ClosureOutcome { Completed, ExceededBound };
std::string to_string(ClosureOutcome outcome);
ClosureOutcome closure_outcome_from_string(const std::string& s);

struct ClosureStats {
  std::uint64_t products = 0;
  std::uint64_t peak_frontier = 0;
  std::string arithmetic;  // "integral" or "rational"
};

struct ClosureResult {
  ClosureOutcome outcome = ClosureOutcome::Completed;
  std::optional<std::int64_t> order;  // set when Completed
  std::int64_t bound = kDefaultClosureBound;
  ClosureStats stats;
};

struct ClosureOptions {
  std::int64_t bound = kDefaultClosureBound;
  /// Keep one representative per projective class (for spot checks).
  bool keep_elements = false;
  /// Skip the integral fast path.
  bool force_rational = false;
};

struct Closure {
  ClosureResult result;
  std::vector<CycMatrix> elements;  // only with keep_elements
};

/// Breadth-first closure under left multiplication by the generators and their
/// inverses, elements taken up to scalars. Throws SingularGenerator,
/// DimensionMismatch/ConductorMismatch for inconsistent generators and
/// InvalidRange for bound < 1.
Closure projective_closure_full(const std::vector<CycMatrix>& generators, const ClosureOptions& options);
ClosureResult projective_closure(const std::vector<CycMatrix>& generators,
                                 std::int64_t bound = kDefaultClosureBound);

/// Product of generator powers. Generator i is written as the i-th capital
/// letter; "A B^-1 (A^4 B)^2" and "AB^-1" are both accepted; "" and "1" are
/// the identity.
class Word {
public:
  struct Letter {
    int generator;
    std::int64_t exponent;  // nonzero
    bool operator==(const Letter&) const = default;
  };

  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;
  Word inverse() const;
  Word pow(std::int64_t e) const;
  Word operator*(const Word& other) const;

  std::string to_string() const;
  bool operator==(const Word&) const = default;

private:
  void normalize();
  std::vector<Letter> letters_;
};

CycMatrix evaluate(const std::vector<CycMatrix>& generators, const Word& w);

/// evaluate(lhs) and evaluate(rhs) agree up to a nonzero scalar.
bool check_relation(const std::vector<CycMatrix>& generators, const Word& lhs, const Word& rhs);

/// projective_order of evaluate(w); nullopt when the bound is exceeded.
std::optional<std::int64_t> element_projective_order(const std::vector<CycMatrix>& generators, const Word& w,
                                                     std::int64_t bound);

}  // namespace b3img
