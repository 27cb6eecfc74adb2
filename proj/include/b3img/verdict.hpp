#pragma once

// Finite/infinite decision for the image of an irreducible 3-strand braid
// representation of dimension 2..5, from the spectrum of a generator.
//
// Cascade (each step assumes the previous ones did not fire):
//   1. a non-root-of-unity or repeated eigenvalue       -> Infinite
//      existence conditions violated                  -> NotIrreducible
//   2. projective order po <= 5                         -> Finite
//   3. imprimitive spectra: {+-chi, alpha}, chi{1,w,w^2} u {alpha} -> Finite;
//      {+-r, +-s}                                      -> block case on o(r/s) and D
//   4. primitive: dimension tables of admissible projective orders.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b3img/repforms.hpp"

namespace b3img {

enum class VerdictKind { Finite, Infinite, Undecidable, NotIrreducible };
enum class Parity { Odd, Even };

std::string to_string(VerdictKind kind);
std::string to_string(Parity parity);
VerdictKind verdict_kind_from_string(const std::string& s);
Parity parity_from_string(const std::string& s);

/// Rule identifiers carried by a Verdict.
namespace rules {
inline constexpr const char* kNonRootOrRepeated = "non-root-or-repeated";
inline constexpr const char* kNotIrreducible = "existence-fails";
inline constexpr const char* kSmallProjectiveOrder = "small-projective-order";
inline constexpr const char* kMonomial = "imprimitive-monomial";
inline constexpr const char* kBlockLargeOrder = "block-imprimitive-order";
inline constexpr const char* kBlockOrder3or6 = "block-imprimitive-order-3-6";
inline constexpr const char* kBlockDSign = "block-imprimitive-d-sign";
inline constexpr const char* kBlockDUnknown = "block-imprimitive-d-unknown";
inline constexpr const char* kPrimitiveDim2 = "primitive-dim2";
inline constexpr const char* kPrimitiveDim3LargeOrder = "primitive-dim3-po-ge-8";
inline constexpr const char* kPrimitiveDim3Odd = "primitive-dim3-po7-odd";
inline constexpr const char* kPrimitiveDim3Even = "primitive-dim3-po7-even";
inline constexpr const char* kPrimitiveDim4Table = "primitive-dim4-order-table";
inline constexpr const char* kPrimitiveDim4Gap = "primitive-dim4-gap";
inline constexpr const char* kPrimitiveDim5Table = "primitive-dim5-order-table";
inline constexpr const char* kPrimitiveDim5Gap = "primitive-dim5-gap";
}  // namespace rules

struct TraceStep {
  std::string check;
  std::string outcome;
  bool operator==(const TraceStep&) const = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undecidable;
  std::string rule;
  std::optional<std::int64_t> po;
  std::optional<std::string> pattern;
  std::optional<std::int64_t> o_u;
  std::optional<int> d_sign;
  std::optional<Parity> parity;
  std::vector<TraceStep> trace;

  bool operator==(const Verdict&) const = default;
};

enum class PatternVariant { FullCoset, PlusMinusPlusAlpha, C3CosetPlusAlpha, PlusMinusPairs };
std::string to_string(PatternVariant v);

struct ImprimitivePattern {
  PatternVariant variant = PatternVariant::FullCoset;
  std::optional<RootOfUnity> chi;
  std::optional<RootOfUnity> alpha;
  std::optional<RootOfUnity> r;
  std::optional<RootOfUnity> s;
  std::optional<RootOfUnity> u;
  std::optional<std::int64_t> coset_size;  // FullCoset

  std::string describe() const;
};

/// lcm over i of order(lambda_i / lambda_1).
std::int64_t projective_order_of_spec(const EigenSpec& spec);

/// Every pattern that fires, in precedence order.
std::vector<ImprimitivePattern> all_imprimitive_patterns(const EigenSpec& spec);
/// Highest-precedence pattern: FullCoset, PlusMinusPairs, C3CosetPlusAlpha (PlusMinusPlusAlpha in dim 3).
std::optional<ImprimitivePattern> match_imprimitive_pattern(const EigenSpec& spec);

/// Block-imprimitive case {+-r, +-s}, u = r/s in normal form. InvalidOrder for o(u) in {1,2,4}.
Verdict classify_block_case(const RootOfUnity& u, std::optional<int> d_sign);

/// Dimension 3, po = 7: which affine orbit of 3-subsets of Z/7 the exponents lie in.
Parity d3_po7_parity(const EigenSpec& spec);

/// Admissible projective orders of elements of finite primitive groups, by dimension.
bool primitive_order_admissible(int dim, std::int64_t po);

/// Full cascade. Never throws for well-formed specs (2 <= dim <= 5, dim eigenvalues).
Verdict classify(const EigenSpec& spec, bool non_root_flag = false);

}  // namespace b3img
