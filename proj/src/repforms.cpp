#include "b3img/repforms.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace b3img {

EigenSpec EigenSpec::of(std::vector<RootOfUnity> eigenvalues) {
  EigenSpec s;
  s.dim = static_cast<int>(eigenvalues.size());
  s.eigenvalues = std::move(eigenvalues);
  return s;
}

std::int64_t EigenSpec::conductor() const {
  std::int64_t n = 2;
  for (const auto& e : eigenvalues) n = lcm64(n, e.den());
  if (gamma_squared) n = lcm64(n, gamma_squared->den());
  if (gamma) n = lcm64(n, gamma->den());
  return n;
}

bool EigenSpec::has_repeated_eigenvalue() const {
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j]) return true;
  return false;
}

RootOfUnity EigenSpec::determinant() const {
  RootOfUnity d;
  for (const auto& e : eigenvalues) d = d * e;
  return d;
}

EigenSpec EigenSpec::galois(std::int64_t a) const {
  EigenSpec out = *this;
  for (auto& e : out.eigenvalues) e = e.pow(a);
  if (out.gamma_squared) out.gamma_squared = out.gamma_squared->pow(a);
  if (out.gamma) out.gamma = out.gamma->pow(a);
  return out;
}

EigenSpec EigenSpec::scaled(const RootOfUnity& chi) const {
  EigenSpec out = *this;
  for (auto& e : out.eigenvalues) e = e * chi;
  if (out.gamma_squared) out.gamma_squared = *out.gamma_squared * chi * chi;
  if (out.gamma) out.gamma = *out.gamma * chi;
  return out;
}

std::string EigenSpec::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) os << (i ? ", " : "") << eigenvalues[i].to_string();
  os << "}";
  if (gamma_squared) os << " gamma^2=" << gamma_squared->to_string();
  if (gamma) os << " gamma=" << gamma->to_string();
  return os.str();
}

namespace {

bool odd_order(const RootOfUnity& z) { return z.order() % 2 == 1; }

}  // namespace

std::optional<BlockNormalForm> block_normal_form(const std::vector<RootOfUnity>& ev) {
  if (ev.size() != 4) return std::nullopt;
  const RootOfUnity neg0 = -ev[0];
  int partner = -1;
  for (int j = 1; j < 4; ++j)
    if (ev[j] == neg0) partner = j;
  if (partner < 0) return std::nullopt;
  std::array<int, 2> rest{};
  int n = 0;
  for (int j = 1; j < 4; ++j)
    if (j != partner) rest[n++] = j;
  if (ev[rest[1]] != -ev[rest[0]]) return std::nullopt;

  const RootOfUnity u1 = ev[rest[0]] / ev[0];
  const RootOfUnity u2 = -u1;
  RootOfUnity u;
  if (odd_order(u1)) u = u1;
  else if (odd_order(u2)) u = u2;
  else u = std::min(u1, u2);
  return BlockNormalForm{ev[0], u * ev[0], u};
}

RootOfUnity principal_sqrt(const RootOfUnity& z) { return RootOfUnity(z.num(), 2 * z.den()); }

RootOfUnity gamma_squared_from_d_sign(const std::vector<RootOfUnity>& ev, int sign) {
  if (ev.size() != 4) throw Error(ErrorCode::InvalidSpec, "D is a dimension-4 parameter");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidSpec, "D sign must be +1 or -1");
  const RootOfUnity sgn = sign == 1 ? RootOfUnity() : RootOfUnity::minus_one();
  if (auto block = block_normal_form(ev)) {
    return sgn * block->s * -block->r;
  }
  const RootOfUnity d = sgn * principal_sqrt(ev[1] * ev[2] / (ev[0] * ev[3]));
  return d * ev[0] * ev[3];
}

std::optional<int> d_sign_of(const EigenSpec& spec) {
  if (spec.dim != 4 || !spec.gamma_squared) return std::nullopt;
  const auto& ev = spec.eigenvalues;
  RootOfUnity ratio;
  if (auto block = block_normal_form(ev)) {
    ratio = *spec.gamma_squared / (block->s * -block->r);
  } else {
    const RootOfUnity d = *spec.gamma_squared / (ev[0] * ev[3]);
    ratio = d / principal_sqrt(ev[1] * ev[2] / (ev[0] * ev[3]));
  }
  if (ratio.is_one()) return 1;
  if (ratio == RootOfUnity::minus_one()) return -1;
  return std::nullopt;
}

EigenSpec with_d_sign(EigenSpec spec, int sign) {
  spec.gamma_squared = gamma_squared_from_d_sign(spec.eigenvalues, sign);
  return spec;
}

std::string to_string(ValidationStatus status) {
  switch (status) {
    case ValidationStatus::Valid: return "Valid";
    case ValidationStatus::RepeatedEigenvalues: return "RepeatedEigenvalues";
    case ValidationStatus::ExistenceFails: return "ExistenceFails";
    case ValidationStatus::UnknownConditions: return "UnknownConditions";
  }
  return "Unknown";
}

ValidationReport validate_spec(const EigenSpec& spec) {
  if (spec.dim < 2 || spec.dim > 5 || static_cast<int>(spec.eigenvalues.size()) != spec.dim) {
    throw Error(ErrorCode::InvalidSpec, "need 2 <= dim <= 5 and exactly dim eigenvalues");
  }
  const auto& l = spec.eigenvalues;
  const int d = spec.dim;
  ValidationReport report;

  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (l[i] == l[j]) report.witnesses.push_back({"lambda_i = lambda_j", {i, j}});
  if (!report.witnesses.empty()) {
    report.status = ValidationStatus::RepeatedEigenvalues;
    return report;
  }

  if (d == 3) {
    for (int r = 0; r < 3; ++r) {
      const int s = (r + 1) % 3;
      const int t = (r + 2) % 3;
      std::array<RootOfUnity, 2> terms{l[r] * l[r], l[s] * l[t]};
      if (roots_sum_to_zero(terms)) {
        report.witnesses.push_back({"lambda_r^2 + lambda_s*lambda_t", {r, std::min(s, t), std::max(s, t)}});
      }
    }
  } else if (d == 4) {
    if (!spec.gamma_squared) throw Error(ErrorCode::MissingParam, "dimension 4 needs D (gamma^2)");
    const RootOfUnity g2 = *spec.gamma_squared;
    for (int r = 0; r < 4; ++r) {
      std::array<RootOfUnity, 2> terms{l[r] * l[r], g2};
      if (roots_sum_to_zero(terms)) report.witnesses.push_back({"lambda_r^2 + gamma^2", {r}});
    }
    // unordered pairings {r,s} | {t,u}
    const std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& p : pairings) {
      std::array<RootOfUnity, 3> terms{g2, l[p[0]] * l[p[1]], l[p[2]] * l[p[3]]};
      if (roots_sum_to_zero(terms)) {
        report.witnesses.push_back({"gamma^2 + lambda_r*lambda_s + lambda_t*lambda_u", {p[0], p[1], p[2], p[3]}});
      }
    }
  } else {
    report.status = ValidationStatus::UnknownConditions;
    return report;
  }
  report.status = report.witnesses.empty() ? ValidationStatus::Valid : ValidationStatus::ExistenceFails;
  return report;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

/// sum_k coef_k * q^{exp_k} in Q(zeta_{2 ell}), q = zeta_{2 ell}.
CycNumber qpoly(std::int64_t two_ell, std::initializer_list<std::pair<long, std::int64_t>> terms) {
  CycNumber out(two_ell);
  for (const auto& [coef, e] : terms) out += embed(RootOfUnity(e, two_ell), two_ell).scaled(coef);
  return out;
}

CycMatrix from_rows(std::vector<std::vector<CycNumber>> rows) {
  const int d = static_cast<int>(rows.size());
  std::vector<CycNumber> entries;
  entries.reserve(static_cast<std::size_t>(d) * d);
  for (auto& row : rows)
    for (auto& e : row) entries.push_back(std::move(e));
  return CycMatrix(d, std::move(entries));
}

}  // namespace

GeneratorPair build_d3(const RootOfUnity& theta, const RootOfUnity& phi) {
  const EigenSpec spec = EigenSpec::of({RootOfUnity(), theta, phi});
  const auto report = validate_spec(spec);
  if (report.status != ValidationStatus::Valid) {
    throw Error(ErrorCode::InvalidSpec, "spectrum " + spec.to_string() + " is " + to_string(report.status));
  }
  const std::int64_t n = spec.conductor();
  const CycNumber one = CycNumber::one(n);
  const CycNumber zero(n);
  const CycNumber th = embed(theta, n);
  const CycNumber ph = embed(phi, n);
  const CycNumber mix = embed(phi / theta, n) + th;  // phi/theta + theta

  CycMatrix a = from_rows({{one, mix, th}, {zero, th, th}, {zero, zero, ph}});
  CycMatrix b = from_rows({{ph, zero, zero}, {-th, th, zero}, {th, -mix, one}});
  return {std::move(a), std::move(b)};
}

GeneratorPair build_d4_block(const RootOfUnity& u, int d_sign) {
  if (u.order() == 1 || u.order() == 2 || u.order() == 4) {
    throw Error(ErrorCode::InvalidSpec, "u must not be a 4th root of unity");
  }
  if (d_sign != 1 && d_sign != -1) throw Error(ErrorCode::InvalidSpec, "D must be +1 or -1");
  const std::int64_t n = lcm64(2, u.order());
  const CycNumber one = CycNumber::one(n);
  const CycNumber zero(n);
  const CycNumber uu = embed(u, n);
  const CycNumber d = CycNumber::rational(n, d_sign);
  const CycNumber dinv = d.inverse();
  const CycNumber dinv2 = dinv * dinv;
  const CycNumber c1 = dinv2 + dinv + one;  // D^-2 + D^-1 + 1
  const CycNumber d2 = d * d;
  const CycNumber d3 = d2 * d;

  CycMatrix a = from_rows({{one, -c1, c1 * uu, -uu},
                           {zero, -one, (dinv + one) * uu, -uu},
                           {zero, zero, uu, -uu},
                           {zero, zero, zero, -uu}});
  CycMatrix b = from_rows({{-uu, zero, zero, zero},
                           {-uu, uu, zero, zero},
                           {-d, d + one, -one, zero},
                           {-d3, d3 + d2 + d, -d2 - d - one, one}});
  return {std::move(a), std::move(b)};
}

GeneratorPair build_so7(std::int64_t ell, int d_sign) {
  if (ell < 14 || ell % 2 != 0) throw Error(ErrorCode::InvalidRange, "so7 builder needs even ell >= 14");
  if (d_sign != 1) throw Error(ErrorCode::InvalidSpec, "only D = +q^4 has explicit so7 matrices");
  const std::int64_t n = 2 * ell;
  const CycNumber one = CycNumber::one(n);
  const CycNumber zero(n);
  auto q = [n](std::initializer_list<std::pair<long, std::int64_t>> t) { return qpoly(n, t); };

  CycMatrix a = from_rows({
      {one, q({{1, 12}, {1, 8}, {1, 4}}), q({{-1, 6}, {-1, 2}, {-1, -2}}), q({{-1, 10}})},
      {zero, q({{1, 12}}), q({{-1, 6}, {-1, 2}}), q({{-1, 10}})},
      {zero, zero, q({{-1, 6}}), q({{-1, 10}})},
      {zero, zero, zero, q({{-1, 10}})},
  });
  CycMatrix b = from_rows({
      {q({{-1, 10}}), zero, zero, zero},
      {q({{1, 6}}), q({{-1, 6}}), zero, zero},
      {q({{1, 16}}), q({{-1, 16}, {-1, 12}}), q({{1, 12}}), zero},
      {q({{-1, 12}}), q({{1, 12}, {1, 8}, {1, 4}}), q({{-1, 8}, {-1, 4}, {-1, 0}}), one},
  });
  return {std::move(a), std::move(b)};
}

GeneratorPair build_so9(std::int64_t ell) {
  if (ell < 18 || ell % 2 != 0) throw Error(ErrorCode::InvalidRange, "so9 builder needs even ell >= 18");
  const std::int64_t n = 2 * ell;
  const CycNumber one = CycNumber::one(n);
  const CycNumber zero(n);
  auto q = [n](std::initializer_list<std::pair<long, std::int64_t>> t) { return qpoly(n, t); };

  const CycNumber e1 = q({{1, 8}, {-1, 6}, {1, 4}, {-1, 2}});
  const CycNumber e2 = q({{-1, 14}, {1, 12}, {-2, 10}, {1, 8}, {-1, 6}});
  const CycNumber e3 = q({{-1, 16}, {1, 14}, {-1, 12}, {1, 10}});
  const CycNumber q16 = q({{1, 16}});

  CycMatrix a = from_rows({
      {one, e1, e2, e3, q16},
      {zero, q({{1, 8}}), q({{-1, 14}, {1, 12}, {-1, 10}}), q({{-1, 16}, {1, 14}, {-1, 12}}), q16},
      {zero, zero, q({{-1, 14}}), q({{-1, 16}, {1, 14}}), q16},
      {zero, zero, zero, q({{-1, 18}}), q({{1, 18}})},
      {zero, zero, zero, zero, q({{1, 20}})},
  });
  CycMatrix b = from_rows({
      {q({{1, 20}}), zero, zero, zero, zero},
      {q({{1, 18}}), q({{-1, 18}}), zero, zero, zero},
      {q16, q({{-1, 16}, {1, 14}}), q({{-1, 14}}), zero, zero},
      {q16, q({{-1, 16}, {1, 14}, {-1, 12}}), q({{-1, 14}, {1, 12}, {-1, 10}}), q({{1, 8}}), zero},
      {q16, e3, e2, e1, one},
  });
  return {std::move(a), std::move(b)};
}

}  // namespace b3img
