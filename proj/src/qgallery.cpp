#include "b3img/qgallery.hpp"

namespace b3img {

std::string to_string(QGFamily family) {
  switch (family) {
    case QGFamily::G2: return "G2";
    case QGFamily::F4: return "F4";
    case QGFamily::SO7spin: return "SO7spin";
    case QGFamily::SO9spin: return "SO9spin";
  }
  return "Unknown";
}

QGFamily qg_family_from_string(const std::string& s) {
  for (QGFamily f : all_qg_families()) {
    if (to_string(f) == s) return f;
  }
  if (s == "g2") return QGFamily::G2;
  if (s == "f4") return QGFamily::F4;
  if (s == "so7" || s == "so7spin") return QGFamily::SO7spin;
  if (s == "so9" || s == "so9spin") return QGFamily::SO9spin;
  throw Error(ErrorCode::ParseError, "unknown quantum-group family '" + s + "'");
}

const std::vector<QGFamily>& all_qg_families() {
  static const std::vector<QGFamily> families{QGFamily::G2, QGFamily::F4, QGFamily::SO7spin, QGFamily::SO9spin};
  return families;
}

const QGFamilyInfo& qg_family_info(QGFamily family) {
  static const QGFamilyInfo g2{QGFamily::G2, 4, {{+1, -12}, {+1, 2}, {-1, -6}, {-1, 0}}, false, "none (D unknown)"};
  static const QGFamilyInfo f4{QGFamily::F4, 5, {{+1, -24}, {+1, -12}, {+1, 2}, {-1, 0}, {-1, -6}}, false,
                               "none (gamma unknown)"};
  static const QGFamilyInfo so7{QGFamily::SO7spin, 4, {{+1, 0}, {+1, 12}, {-1, 6}, {-1, 10}}, true, "D = +q^4"};
  static const QGFamilyInfo so9{QGFamily::SO9spin, 5, {{+1, 0}, {+1, 8}, {-1, 14}, {-1, 18}, {+1, 20}}, true,
                                "gamma = q^12"};
  switch (family) {
    case QGFamily::G2: return g2;
    case QGFamily::F4: return f4;
    case QGFamily::SO7spin: return so7;
    case QGFamily::SO9spin: return so9;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

bool qg_ell_valid(QGFamily family, std::int64_t ell) {
  switch (family) {
    case QGFamily::G2: return ell % 3 == 0 ? ell >= 18 : ell >= 10;
    case QGFamily::F4: return ell % 2 == 0 ? ell >= 22 : ell >= 15;
    case QGFamily::SO7spin: return ell % 2 == 0 && ell >= 14;
    case QGFamily::SO9spin: return ell % 2 == 0 && ell >= 18;
  }
  return false;
}

RootOfUnity q_power(std::int64_t ell, std::int64_t k, int sign) {
  RootOfUnity z(k, 2 * ell);
  return sign < 0 ? -z : z;
}

EigenSpec qg_spec(QGFamily family, std::int64_t ell) {
  if (!qg_ell_valid(family, ell)) {
    throw Error(ErrorCode::OutOfRange, to_string(family) + " is not defined at ell = " + std::to_string(ell));
  }
  const QGFamilyInfo& info = qg_family_info(family);
  std::vector<RootOfUnity> ev;
  for (const QTerm& t : info.eigenvalues) ev.push_back(q_power(ell, t.k, t.sign));
  EigenSpec spec = EigenSpec::of(std::move(ev));
  if (family == QGFamily::SO7spin) {
    // gamma^2 = D * l1 * l4 with D = q^4
    spec.gamma_squared = q_power(ell, 4) * spec.eigenvalues[0] * spec.eigenvalues[3];
  } else if (family == QGFamily::SO9spin) {
    spec.gamma = q_power(ell, 12);
  }
  return spec;
}

RecordedExpectation recorded_expectation(QGFamily family, std::int64_t ell) {
  if (!qg_ell_valid(family, ell)) {
    throw Error(ErrorCode::OutOfRange, to_string(family) + " is not defined at ell = " + std::to_string(ell));
  }
  RecordedExpectation e;
  switch (family) {
    case QGFamily::G2:
      e.po = ell % 2 == 0 ? ell : 2 * ell;
      if (ell % 3 == 0) {
        e.note = "the exception list for 3 | ell is partly illegible in the source; only ell = 24 can be read";
      }
      if (ell == 24) {
        e.kind = VerdictKind::Infinite;
        e.rule = rules::kNonRootOrRepeated;
        e.claim = "ell = 24 is said to have repeated eigenvalues, hence an infinite image";
      } else if (ell == 10 || ell == 20) {
        e.kind = VerdictKind::Undecidable;
        e.claim = "left open: the projective order ell falls in the dimension-4 list of gap orders";
      } else {
        e.kind = VerdictKind::Infinite;
        e.claim = "projective order ell (even) or 2 ell (odd) rules out a finite primitive image";
      }
      break;
    case QGFamily::F4:
      e.kind = VerdictKind::Infinite;
      if (ell == 24) {
        e.rule = rules::kNonRootOrRepeated;
        e.claim = "repeated eigenvalues at ell = 24; infinite image";
      } else {
        e.po = ell % 2 == 0 ? ell : 2 * ell;
        e.claim = ell % 2 == 0 ? "projective order ell forces an infinite image"
                               : "projective order 2 ell forces an infinite image";
      }
      break;
    case QGFamily::SO7spin: {
      const std::int64_t po = ell / 2;
      e.po = po;
      if (ell == 14) {
        e.kind = VerdictKind::Undecidable;
        e.rule = rules::kPrimitiveDim4Gap;
        e.closure_outcome = ClosureOutcome::Completed;
        e.closure_order = 168;
        e.claim = "explicit computation: (AB^-1)^4 is scalar and the projective image has 168 elements (PSL(2,7))";
        e.note = "a classifier gap case settled by the closure";
      } else if (ell == 18) {
        e.kind = VerdictKind::Finite;
        e.rule = rules::kMonomial;
        e.claim = "the spectrum has the shape {1, w, w^2, alpha}; finite imprimitive image for either D";
      } else if (po == 8 || po == 10 || po == 12 || po == 15 || po == 20 || po == 24) {
        e.kind = VerdictKind::Undecidable;
        e.claim = "left open: po = ell/2 is one of the dimension-4 gap orders";
      } else {
        e.kind = VerdictKind::Infinite;
        e.claim = "po = ell/2 is outside the dimension-4 gap orders; infinite image";
      }
      break;
    }
    case QGFamily::SO9spin:
      if (ell == 18) {
        e.validation = ValidationStatus::RepeatedEigenvalues;
        e.closure_outcome = ClosureOutcome::Completed;
        e.closure_order_divides = 324;
        e.claim = "repeated eigenvalues 1 and -q^18; the image is a quotient of a group of order 324 and the "
                  "representation is reducible";
        e.note = "no verdict is compared: the classifier assumes irreducibility";
        break;
      }
      e.po = ell / 2;
      if (ell == 20 || ell == 24) {
        e.kind = VerdictKind::Undecidable;
        e.closure_outcome = ClosureOutcome::ExceededBound;
        e.claim = "po = ell/2 is a gap order, and the image is reported not to be finite";
        e.note = "ExceededBound is evidence of infiniteness, not a proof";
      } else if (ell == 22) {
        e.kind = VerdictKind::Undecidable;
        e.closure_outcome = ClosureOutcome::Completed;
        e.closure_order = 660;
        e.claim = "with S = A and T = ABA the PSL(2,11) relations hold projectively; image PSL(2,11)";
      } else {
        e.kind = VerdictKind::Infinite;
        e.claim = "po = ell/2 >= 13 forces an infinite image";
      }
      break;
  }
  return e;
}

namespace {

ValidationStatus validation_status(const EigenSpec& spec) {
  if (spec.dim == 4 && !spec.gamma_squared) {
    if (spec.has_repeated_eigenvalue()) return ValidationStatus::RepeatedEigenvalues;
    for (int sign : {1, -1}) {
      if (validate_spec(with_d_sign(spec, sign)).status == ValidationStatus::Valid) return ValidationStatus::Valid;
    }
    return ValidationStatus::ExistenceFails;
  }
  return validate_spec(spec).status;
}

std::optional<GeneratorPair> builder_for(QGFamily family, std::int64_t ell) {
  if (family == QGFamily::SO7spin) return build_so7(ell);
  if (family == QGFamily::SO9spin) return build_so9(ell);
  return std::nullopt;
}

}  // namespace

ReproductionReport reproduce(QGFamily family, std::int64_t ell, std::optional<std::int64_t> bound) {
  ReproductionReport report;
  report.family = family;
  report.ell = ell;
  report.spec = qg_spec(family, ell);
  report.expectation = recorded_expectation(family, ell);
  report.validation = validation_status(report.spec);
  report.verdict = classify(report.spec);

  const RecordedExpectation& e = report.expectation;
  if (qg_family_info(family).has_builder && (bound || e.needs_closure())) {
    auto pair = builder_for(family, ell);
    report.closure = projective_closure({pair->a, pair->b}, bound.value_or(kDefaultClosureBound));
  }

  auto& mm = report.mismatches;
  if (e.po && report.verdict.po != e.po) {
    mm.push_back("po " + (report.verdict.po ? std::to_string(*report.verdict.po) : std::string("none")) +
                 ", expected " + std::to_string(*e.po));
  }
  if (e.kind && *e.kind != report.verdict.kind) {
    mm.push_back("verdict " + to_string(report.verdict.kind) + ", expected " + to_string(*e.kind));
  }
  if (e.rule && *e.rule != report.verdict.rule) {
    mm.push_back("rule " + report.verdict.rule + ", expected " + *e.rule);
  }
  if (e.validation && *e.validation != report.validation) {
    mm.push_back("validation " + to_string(report.validation) + ", expected " + to_string(*e.validation));
  }
  if (e.needs_closure()) {
    if (!report.closure) {
      mm.push_back("no closure available for comparison");
    } else {
      const ClosureResult& c = *report.closure;
      if (e.closure_outcome && *e.closure_outcome != c.outcome) {
        mm.push_back("closure " + to_string(c.outcome) + ", expected " + to_string(*e.closure_outcome));
      }
      if (e.closure_order && c.order != e.closure_order) {
        mm.push_back("closure order " + (c.order ? std::to_string(*c.order) : std::string("none")) + ", expected " +
                     std::to_string(*e.closure_order));
      }
      if (e.closure_order_divides && (!c.order || *e.closure_order_divides % *c.order != 0)) {
        mm.push_back("closure order " + (c.order ? std::to_string(*c.order) : std::string("none")) +
                     " does not divide " + std::to_string(*e.closure_order_divides));
      }
    }
  }
  report.agreement = mm.empty();
  return report;
}

}  // namespace b3img
