#include <doctest.h>

#include "b3img/grouporacle.hpp"
#include "b3img/qgallery.hpp"
#include "b3img/repforms.hpp"
#include "oracles.hpp"

using namespace b3img;

namespace {

std::vector<RootOfUnity> roots_up_to_order(std::int64_t max_order) {
  std::vector<RootOfUnity> out;
  for (std::int64_t n = 1; n <= max_order; ++n)
    for (std::int64_t k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) out.emplace_back(k, n);
  return out;
}

bool braid_holds(const GeneratorPair& g) { return g.a * g.b * g.a == g.b * g.a * g.b; }

CycPolynomial spectrum_poly(const std::vector<RootOfUnity>& roots, std::int64_t n) {
  std::vector<CycNumber> e;
  for (const auto& r : roots) e.push_back(embed(r, n));
  return poly_from_roots(e);
}

RootOfUnity q(std::int64_t ell, std::int64_t k, int sign = 1) { return q_power(ell, k, sign); }

}  // namespace

TEST_CASE("validate_spec examples") {
  const auto bad = validate_spec(EigenSpec::of({{0, 1}, {1, 6}, {2, 6}}));
  CHECK(bad.status == ValidationStatus::ExistenceFails);
  CHECK_FALSE(bad.witnesses.empty());
  CHECK(validate_spec(EigenSpec::of({{0, 1}, {1, 7}, {3, 7}})).status == ValidationStatus::Valid);
  CHECK(validate_spec(qg_spec(QGFamily::SO9spin, 18)).status == ValidationStatus::RepeatedEigenvalues);
  CHECK(validate_spec(EigenSpec::of({{0, 1}, {1, 3}})).status == ValidationStatus::UnknownConditions);
  CHECK(validate_spec(EigenSpec::of({{0, 1}, {1, 3}, {1, 3}})).status == ValidationStatus::RepeatedEigenvalues);
  try {
    validate_spec(EigenSpec::of({{0, 1}, {1, 2}, {1, 5}, {1, 3}}));
    FAIL("expected MissingParam");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingParam);
  }
  CHECK_THROWS_AS(validate_spec(EigenSpec::of({{0, 1}})), Error);
}

TEST_CASE("dimension 3 existence matches the numeric polynomial test") {
  const auto roots = roots_up_to_order(8);
  for (const auto& t : roots)
    for (const auto& p : roots) {
      const std::vector<RootOfUnity> l{RootOfUnity(), t, p};
      if (t == p || t.is_one() || p.is_one()) continue;
      bool vanishes = false;
      for (int r = 0; r < 3; ++r) {
        const auto v = oracle::numeric(l[r]) * oracle::numeric(l[r]) +
                       oracle::numeric(l[(r + 1) % 3]) * oracle::numeric(l[(r + 2) % 3]);
        if (std::abs(v) < 1e-9L) vanishes = true;
      }
      const auto status = validate_spec(EigenSpec::of(l)).status;
      CHECK(status == (vanishes ? ValidationStatus::ExistenceFails : ValidationStatus::Valid));
    }
}

TEST_CASE("D sign round trip") {
  for (const auto& u : roots_up_to_order(12)) {
    if (u.order() == 1 || u.order() == 2 || u.order() == 4) continue;
    const std::vector<RootOfUnity> ev{RootOfUnity(), RootOfUnity::minus_one(), u, -u};
    for (int sign : {1, -1}) {
      const EigenSpec s = with_d_sign(EigenSpec::of(ev), sign);
      CHECK(d_sign_of(s) == sign);
    }
  }
  const std::vector<RootOfUnity> generic{{0, 1}, {1, 7}, {2, 7}, {4, 7}};
  for (int sign : {1, -1}) CHECK(d_sign_of(with_d_sign(EigenSpec::of(generic), sign)) == sign);
}

TEST_CASE("braid relation for d3 over all parameters of order <= 12") {
  int built = 0, failures = 0;
  const auto roots = roots_up_to_order(12);
  for (const auto& t : roots)
    for (const auto& p : roots) {
      const EigenSpec s = EigenSpec::of({RootOfUnity(), t, p});
      if (validate_spec(s).status != ValidationStatus::Valid) {
        CHECK_THROWS_AS(build_d3(t, p), Error);
        continue;
      }
      const auto g = build_d3(t, p);
      ++built;
      if (!braid_holds(g)) ++failures;
      if (built % 37 == 0) CHECK(char_poly(g.a) == spectrum_poly(s.eigenvalues, g.a.conductor()));
    }
  CHECK(built > 1000);
  CHECK(failures == 0);
}

TEST_CASE("braid relation for d4 block pairs over all u of order <= 12") {
  for (const auto& u : roots_up_to_order(12)) {
    const auto o = u.order();
    for (int sign : {1, -1}) {
      if (o == 1 || o == 2 || o == 4) {
        CHECK_THROWS_AS(build_d4_block(u, sign), Error);
        continue;
      }
      CAPTURE(u.to_string());
      const auto g = build_d4_block(u, sign);
      CHECK(braid_holds(g));
      CHECK(char_poly(g.a) == spectrum_poly({RootOfUnity(), RootOfUnity::minus_one(), u, -u}, g.a.conductor()));
      CHECK(char_poly(g.b) == char_poly(g.a));
    }
  }
}

TEST_CASE("braid relation and spectra for so7 and so9") {
  for (std::int64_t ell = 14; ell <= 24; ell += 2) {
    CAPTURE(ell);
    const auto g = build_so7(ell);
    CHECK(braid_holds(g));
    CHECK(char_poly(g.a) == spectrum_poly({q(ell, 0), q(ell, 12), q(ell, 6, -1), q(ell, 10, -1)}, 2 * ell));
    CHECK(char_poly(g.a) == spectrum_poly(qg_spec(QGFamily::SO7spin, ell).eigenvalues, 2 * ell));
  }
  for (std::int64_t ell = 18; ell <= 24; ell += 2) {
    CAPTURE(ell);
    const auto g = build_so9(ell);
    CHECK(braid_holds(g));
    CHECK(char_poly(g.a) ==
          spectrum_poly({q(ell, 0), q(ell, 8), q(ell, 14, -1), q(ell, 18, -1), q(ell, 20)}, 2 * ell));
  }
  CHECK_THROWS_AS(build_so7(12), Error);
  CHECK_THROWS_AS(build_so7(15), Error);
  CHECK_THROWS_AS(build_so7(14, -1), Error);
  CHECK_THROWS_AS(build_so9(16), Error);
}

TEST_CASE("block pair quartic of AB^-1") {
  // u^2 t^4 + (u+u^2+u^3) t^3 + (1+2u+2u^2+2u^3+u^4) t^2 + (u+u^2+u^3) t + u^2, divided by u^2.
  auto p1_over_u2 = [](const CycNumber& u) {
    const std::int64_t n = u.conductor();
    const CycNumber one = CycNumber::one(n);
    const CycNumber u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    const CycNumber inv = u2.inverse();
    const CycNumber c1 = (u + u2 + u3) * inv;
    const CycNumber c2 = (one + u.scaled(2) + u2.scaled(2) + u3.scaled(2) + u4) * inv;
    return CycPolynomial({one, c1, c2, c1, one});
  };
  for (const auto& u : roots_up_to_order(12)) {
    const auto o = u.order();
    if (o == 1 || o == 2 || o == 4) continue;
    CAPTURE(u.to_string());
    const std::int64_t n = std::lcm<std::int64_t>(2, o);
    const CycNumber uu = embed(u, n);
    const auto minus = build_d4_block(u, -1);
    CHECK(char_poly(minus.a * minus.b.inverse()) == p1_over_u2(uu));
    const auto plus = build_d4_block(u, +1);
    CHECK(char_poly(plus.a * plus.b.inverse()) == p1_over_u2(-uu));
  }
}

TEST_CASE("block pair with u of order 5 and D = -1: fifth powers are M+M and N+N") {
  const auto g = build_d4_block(RootOfUnity(1, 5), -1);
  const std::int64_t n = g.a.conductor();
  const CycMatrix m = CycMatrix::from_integers({{1, -1}, {0, -1}}, n);
  const CycMatrix nn = CycMatrix::from_integers({{-1, 0}, {-1, 1}}, n);
  CHECK(g.a.pow(5) == m.direct_sum(m));
  CHECK(g.b.pow(5) == nn.direct_sum(nn));
}

TEST_CASE("block pair with u of order 6 and D = +1") {
  const auto g = build_d4_block(RootOfUnity(1, 6), +1);
  CHECK(projective_order(g.a, 12) == 6);
  CHECK(projective_order(g.a * g.b.inverse(), 12) == 6);
}

TEST_CASE("so7 at ell = 14: seventh powers and (AB^-1)^4 are scalar") {
  const auto g = build_so7(14);
  CHECK(g.a.pow(7).is_scalar());
  CHECK(g.b.pow(7).is_scalar());
  CHECK((g.a * g.b.inverse()).pow(4).is_scalar());
}

TEST_CASE("d3 pairs with po 7") {
  const RootOfUnity z7(1, 7);
  const auto odd = build_d3(z7, z7.pow(3));
  CHECK(char_poly(odd.a) == spectrum_poly({RootOfUnity(), z7, z7.pow(3)}, odd.a.conductor()));
  CHECK((odd.a * odd.b.inverse()).pow(4).is_scalar());
  const auto even = build_d3(z7, z7.pow(2));
  CHECK(projective_order(even.a * even.b.inverse(), 24) == std::nullopt);
}

TEST_CASE("builders produce the printed triangular shapes") {
  const auto g = build_d3(RootOfUnity(1, 7), RootOfUnity(3, 7));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < r; ++c) {
      CHECK(g.a(r, c).is_zero());
      CHECK(g.b(c, r).is_zero());
    }
  CHECK(g.b(0, 0) == embed(RootOfUnity(3, 7), g.a.conductor()));
  const auto h = build_d4_block(RootOfUnity(1, 5), -1);
  const std::int64_t n = h.a.conductor();
  const CycNumber u = embed(RootOfUnity(1, 5), n);
  CHECK(h.a(0, 0) == CycNumber::one(n));
  CHECK(h.a(1, 1) == -CycNumber::one(n));
  CHECK(h.a(2, 2) == u);
  CHECK(h.a(3, 3) == -u);
  CHECK(h.b(0, 0) == -u);
  CHECK(h.b(3, 3) == CycNumber::one(n));
}
