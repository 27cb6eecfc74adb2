#pragma once

// Eigenvalue specs of the braid representation on Hom(V, V^{(x)3}) for four
// quantum-group families at q = e^{pi i / ell}, with reproduction reports
// that compare classifier and oracle output against recorded expectations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b3img/grouporacle.hpp"
#include "b3img/repforms.hpp"
#include "b3img/verdict.hpp"

namespace b3img {

enum class QGFamily { G2, F4, SO7spin, SO9spin };

std::string to_string(QGFamily family);
QGFamily qg_family_from_string(const std::string& s);
const std::vector<QGFamily>& all_qg_families();

/// Term +-q^k of an eigenvalue template.
struct QTerm {
  int sign;        // +1 or -1
  std::int64_t k;  // power of q
};

struct QGFamilyInfo {
  QGFamily family;
  int dim;
  std::vector<QTerm> eigenvalues;
  bool has_builder;
  std::string parameter;  // human-readable D / gamma choice
};

const QGFamilyInfo& qg_family_info(QGFamily family);
bool qg_ell_valid(QGFamily family, std::int64_t ell);

/// q^k (with sign) as a root of unity: exponent k/(2 ell), plus 1/2 for a minus sign.
RootOfUnity q_power(std::int64_t ell, std::int64_t k, int sign = +1);

/// Throws OutOfRange when ell is outside the family's valid range.
EigenSpec qg_spec(QGFamily family, std::int64_t ell);

/// Recorded claim for one (family, ell). Unset fields are not compared.
struct RecordedExpectation {
  std::optional<std::int64_t> po;
  std::optional<VerdictKind> kind;
  std::optional<std::string> rule;
  std::optional<ValidationStatus> validation;
  std::optional<ClosureOutcome> closure_outcome;
  std::optional<std::int64_t> closure_order;
  std::optional<std::int64_t> closure_order_divides;
  std::string claim;
  std::string note;

  bool needs_closure() const { return closure_outcome || closure_order || closure_order_divides; }
};

RecordedExpectation recorded_expectation(QGFamily family, std::int64_t ell);

struct ReproductionReport {
  QGFamily family = QGFamily::G2;
  std::int64_t ell = 0;
  EigenSpec spec;
  ValidationStatus validation = ValidationStatus::Valid;
  Verdict verdict;
  std::optional<ClosureResult> closure;
  RecordedExpectation expectation;
  bool agreement = false;
  std::vector<std::string> mismatches;
};

/// Classifies qg_spec(family, ell) and, for families with a builder, runs the
/// projective closure whenever the expectation involves one or a bound is given.
ReproductionReport reproduce(QGFamily family, std::int64_t ell, std::optional<std::int64_t> bound = std::nullopt);

}  // namespace b3img
