#include "b3img/verdict.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace b3img {

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Finite: return "Finite";
    case VerdictKind::Infinite: return "Infinite";
    case VerdictKind::Undecidable: return "Undecidable";
    case VerdictKind::NotIrreducible: return "NotIrreducible";
  }
  return "Unknown";
}

std::string to_string(Parity parity) { return parity == Parity::Odd ? "Odd" : "Even"; }

VerdictKind verdict_kind_from_string(const std::string& s) {
  if (s == "Finite") return VerdictKind::Finite;
  if (s == "Infinite") return VerdictKind::Infinite;
  if (s == "Undecidable") return VerdictKind::Undecidable;
  if (s == "NotIrreducible") return VerdictKind::NotIrreducible;
  throw Error(ErrorCode::ParseError, "unknown verdict kind '" + s + "'");
}

Parity parity_from_string(const std::string& s) {
  if (s == "Odd") return Parity::Odd;
  if (s == "Even") return Parity::Even;
  throw Error(ErrorCode::ParseError, "unknown parity '" + s + "'");
}

std::string to_string(PatternVariant v) {
  switch (v) {
    case PatternVariant::FullCoset: return "FullCoset";
    case PatternVariant::PlusMinusPlusAlpha: return "PlusMinusPlusAlpha";
    case PatternVariant::C3CosetPlusAlpha: return "C3CosetPlusAlpha";
    case PatternVariant::PlusMinusPairs: return "PlusMinusPairs";
  }
  return "Unknown";
}

std::string ImprimitivePattern::describe() const {
  std::string out = to_string(variant);
  auto add = [&](const char* name, const std::optional<RootOfUnity>& z) {
    if (z) out += std::string(" ") + name + "=" + z->to_string();
  };
  if (coset_size) out += " r=" + std::to_string(*coset_size);
  add("chi", chi);
  add("alpha", alpha);
  add("r", r);
  add("s", s);
  add("u", u);
  return out;
}

std::int64_t projective_order_of_spec(const EigenSpec& spec) {
  std::int64_t po = 1;
  for (const auto& e : spec.eigenvalues) po = lcm64(po, (e / spec.eigenvalues.front()).order());
  return po;
}

std::vector<ImprimitivePattern> all_imprimitive_patterns(const EigenSpec& spec) {
  std::vector<ImprimitivePattern> out;
  const auto& l = spec.eigenvalues;
  const int d = static_cast<int>(l.size());
  if (d < 2) return out;

  // chi * C_d: every ratio to lambda_1 is a d-th root of unity (distinctness gives all of C_d).
  bool coset = !spec.has_repeated_eigenvalue();
  for (const auto& e : l) coset = coset && (d % (e / l[0]).order() == 0);
  if (coset) {
    ImprimitivePattern p;
    p.variant = PatternVariant::FullCoset;
    p.chi = *std::min_element(l.begin(), l.end());
    p.coset_size = d;
    out.push_back(p);
  }

  if (d == 4) {
    if (auto block = block_normal_form(l)) {
      ImprimitivePattern p;
      p.variant = PatternVariant::PlusMinusPairs;
      p.r = block->r;
      p.s = block->s;
      p.u = block->u;
      out.push_back(p);
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        for (int k = j + 1; k < 4; ++k) {
          if ((l[j] / l[i]).order() == 3 && (l[k] / l[i]).order() == 3 && l[j] != l[k]) {
            ImprimitivePattern p;
            p.variant = PatternVariant::C3CosetPlusAlpha;
            p.chi = l[i];
            p.alpha = l[6 - i - j - k];
            out.push_back(p);
          }
        }
      }
    }
  }

  if (d == 3) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (l[j] == -l[i]) {
          ImprimitivePattern p;
          p.variant = PatternVariant::PlusMinusPlusAlpha;
          p.chi = std::min(l[i], l[j]);
          p.alpha = l[3 - i - j];
          out.push_back(p);
        }
      }
    }
  }
  return out;
}

std::optional<ImprimitivePattern> match_imprimitive_pattern(const EigenSpec& spec) {
  auto all = all_imprimitive_patterns(spec);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Verdict classify_block_case(const RootOfUnity& u, std::optional<int> d_sign) {
  const std::int64_t o = u.order();
  if (o == 1 || o == 2 || o == 4) {
    throw Error(ErrorCode::InvalidOrder, "o(u) = " + std::to_string(o) + " is excluded in the block case");
  }
  Verdict v;
  v.o_u = o;
  v.d_sign = d_sign;
  v.trace.push_back({"o(u)", std::to_string(o)});
  v.trace.push_back({"D", d_sign ? (*d_sign > 0 ? "+1" : "-1") : "unknown"});
  if (o != 3 && o != 5 && o != 6 && o != 10) {
    v.kind = VerdictKind::Infinite;
    v.rule = rules::kBlockLargeOrder;
  } else if (o == 3 || o == 6) {
    v.kind = VerdictKind::Finite;
    v.rule = rules::kBlockOrder3or6;
  } else if (d_sign) {
    const bool infinite = (*d_sign == 1 && o == 5) || (*d_sign == -1 && o == 10);
    v.kind = infinite ? VerdictKind::Infinite : VerdictKind::Finite;
    v.rule = rules::kBlockDSign;
  } else {
    v.kind = VerdictKind::Undecidable;
    v.rule = rules::kBlockDUnknown;
  }
  return v;
}

namespace {

using Mask = unsigned;

Mask subset_mask(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= 1u << ((x % 7 + 7) % 7);
  return m;
}

// Images of a 3-subset of Z/7 under e -> a*e + c.
std::set<Mask> affine_orbit(std::array<int, 3> base) {
  std::set<Mask> orbit;
  for (int a = 1; a < 7; ++a)
    for (int c = 0; c < 7; ++c)
      orbit.insert(subset_mask({a * base[0] + c, a * base[1] + c, a * base[2] + c}));
  return orbit;
}

}  // namespace

Parity d3_po7_parity(const EigenSpec& spec) {
  if (spec.dim != 3 || spec.eigenvalues.size() != 3 || projective_order_of_spec(spec) != 7) {
    throw Error(ErrorCode::NotPO7, "parity needs a dimension-3 spectrum with projective order 7");
  }
  static const std::set<Mask> odd_orbit = affine_orbit({0, 1, 3});
  static const std::set<Mask> even_orbit = affine_orbit({0, 1, 2});
  Mask m = 0;
  for (const auto& e : spec.eigenvalues) {
    const RootOfUnity ratio = e / spec.eigenvalues.front();
    m |= 1u << static_cast<int>(ratio.num() * (7 / ratio.den()));
  }
  if (odd_orbit.count(m)) return Parity::Odd;
  if (even_orbit.count(m)) return Parity::Even;
  throw Error(ErrorCode::InternalInconsistency, "3-subset of Z/7 outside both affine orbits");
}

bool primitive_order_admissible(int dim, std::int64_t po) {
  switch (dim) {
    case 2: return po >= 1 && po <= 5;
    case 3: return po >= 1 && po <= 7;
    case 4: return (po >= 1 && po <= 10) || po == 12 || po == 15 || po == 20 || po == 24;
    case 5: return (po >= 1 && po <= 6) || (po >= 9 && po <= 12);
    default: return false;
  }
}

Verdict classify(const EigenSpec& spec, bool non_root_flag) {
  if (spec.dim < 2 || spec.dim > 5 || static_cast<int>(spec.eigenvalues.size()) != spec.dim) {
    throw Error(ErrorCode::InvalidSpec, "need 2 <= dim <= 5 and exactly dim eigenvalues");
  }
  Verdict v;
  auto& trace = v.trace;
  trace.push_back({"spec", spec.to_string()});

  if (non_root_flag || spec.has_repeated_eigenvalue()) {
    trace.push_back({"roots of unity, distinct", non_root_flag ? "non-root eigenvalue declared" : "repeated eigenvalue"});
    v.kind = VerdictKind::Infinite;
    v.rule = rules::kNonRootOrRepeated;
    return v;
  }
  trace.push_back({"roots of unity, distinct", "yes"});

  if (spec.dim == 4 && !spec.gamma_squared) {
    bool any_valid = false;
    for (int sign : {1, -1}) {
      const auto report = validate_spec(with_d_sign(spec, sign));
      trace.push_back({std::string("existence (D=") + (sign > 0 ? "+1" : "-1") + ")", to_string(report.status)});
      any_valid = any_valid || report.status == ValidationStatus::Valid;
    }
    if (!any_valid) {
      v.kind = VerdictKind::NotIrreducible;
      v.rule = rules::kNotIrreducible;
      return v;
    }
  } else {
    const auto report = validate_spec(spec);
    std::string outcome = to_string(report.status);
    for (const auto& w : report.witnesses) outcome += "; " + w.condition;
    trace.push_back({"existence", outcome});
    if (report.status == ValidationStatus::ExistenceFails) {
      v.kind = VerdictKind::NotIrreducible;
      v.rule = rules::kNotIrreducible;
      return v;
    }
  }
  if (spec.dim == 5 && spec.gamma) trace.push_back({"gamma", spec.gamma->to_string()});

  const std::int64_t po = projective_order_of_spec(spec);
  v.po = po;
  trace.push_back({"po", std::to_string(po)});
  if (po <= 5) {
    v.kind = VerdictKind::Finite;
    v.rule = rules::kSmallProjectiveOrder;
    return v;
  }

  const auto patterns = all_imprimitive_patterns(spec);
  if (patterns.empty()) {
    trace.push_back({"imprimitive pattern", "none"});
  }
  for (const auto& p : patterns) trace.push_back({"imprimitive pattern", p.describe()});
  if (!patterns.empty()) {
    const auto& p = patterns.front();
    v.pattern = to_string(p.variant);
    if (p.variant == PatternVariant::PlusMinusPairs) {
      Verdict block = classify_block_case(*p.u, d_sign_of(spec));
      v.kind = block.kind;
      v.rule = block.rule;
      v.o_u = block.o_u;
      v.d_sign = block.d_sign;
      trace.insert(trace.end(), block.trace.begin(), block.trace.end());
    } else {
      v.kind = VerdictKind::Finite;
      v.rule = rules::kMonomial;
    }
    return v;
  }

  switch (spec.dim) {
    case 2:
      v.kind = VerdictKind::Infinite;
      v.rule = rules::kPrimitiveDim2;
      break;
    case 3:
      if (po >= 8) {
        v.kind = VerdictKind::Infinite;
        v.rule = rules::kPrimitiveDim3LargeOrder;
      } else if (po == 7) {
        v.parity = d3_po7_parity(spec);
        trace.push_back({"parity", to_string(*v.parity)});
        v.kind = *v.parity == Parity::Odd ? VerdictKind::Finite : VerdictKind::Infinite;
        v.rule = *v.parity == Parity::Odd ? rules::kPrimitiveDim3Odd : rules::kPrimitiveDim3Even;
      } else {
        throw Error(ErrorCode::InternalInconsistency,
                    "dimension 3, po = 6 spectrum " + spec.to_string() + " is neither reducible nor imprimitive");
      }
      break;
    case 4:
      if (primitive_order_admissible(4, po)) {
        v.kind = VerdictKind::Undecidable;
        v.rule = rules::kPrimitiveDim4Gap;
      } else {
        v.kind = VerdictKind::Infinite;
        v.rule = rules::kPrimitiveDim4Table;
      }
      if (auto sign = d_sign_of(spec)) v.d_sign = sign;
      break;
    case 5:
      if (primitive_order_admissible(5, po)) {
        v.kind = VerdictKind::Undecidable;
        v.rule = rules::kPrimitiveDim5Gap;
      } else {
        v.kind = VerdictKind::Infinite;
        v.rule = rules::kPrimitiveDim5Table;
      }
      break;
  }
  trace.push_back({"primitive table", to_string(v.kind)});
  return v;
}

}  // namespace b3img
