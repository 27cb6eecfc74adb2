#include <doctest.h>

#include <algorithm>
#include <random>

#include "b3img/grouporacle.hpp"
#include "b3img/repforms.hpp"

using namespace b3img;

namespace {

CycMatrix random_word_element(std::mt19937& rng, const std::vector<CycMatrix>& gens, int length) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  CycMatrix x = CycMatrix::identity(gens[0].dim(), gens[0].conductor());
  for (int i = 0; i < length; ++i) {
    const auto& g = gens[pick(rng)];
    x = x * (sign(rng) ? g : g.inverse());
  }
  return x;
}

void check_random_orders_divide(const std::vector<CycMatrix>& gens, std::int64_t order, unsigned seed) {
  std::mt19937 rng(seed);
  for (int i = 0; i < 20; ++i) {
    const CycMatrix x = random_word_element(rng, gens, 1 + i);
    const auto o = projective_order(x, order);
    REQUIRE(o);
    CHECK(order % *o == 0);
  }
}

std::vector<CycMatrix> s3_generators() {
  return {CycMatrix::from_integers({{1, -1}, {0, -1}}, 1), CycMatrix::from_integers({{-1, 0}, {-1, 1}}, 1),
          CycMatrix::from_integers({{0, 1}, {1, 0}}, 1)};
}

}  // namespace

TEST_CASE("word parsing and printing") {
  const Word w = Word::parse("A B^-1 A^4");
  REQUIRE(w.letters().size() == 3);
  CHECK(w.letters()[1] == Word::Letter{1, -1});
  CHECK(w.to_string() == "A B^-1 A^4");
  CHECK(Word::parse("AB^-1").to_string() == "A B^-1");
  CHECK(Word::parse("AAA") == Word::parse("A^3"));
  CHECK(Word::parse("(A^4 B)^2").to_string() == "A^4 B A^4 B");
  CHECK(Word::parse("A A^-1").empty());
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("").to_string() == "1");
  CHECK(Word::parse("A*B").max_generator() == 1);
  CHECK(Word::parse("A B^2").inverse() == Word::parse("B^-2 A^-1"));
  CHECK(Word::parse("AB").pow(2) == Word::parse("ABAB"));
  CHECK(Word::parse("AB").pow(-1) == Word::parse("B^-1 A^-1"));
  for (const char* bad : {"A^", "(A", "A)", "a", "A^x", "#"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Word::parse(bad), Error);
  }
}

TEST_CASE("word evaluation") {
  const auto g = build_so7(14);
  const std::vector<CycMatrix> gens{g.a, g.b};
  CHECK(evaluate(gens, Word::parse("A B A")) == g.a * g.b * g.a);
  CHECK(evaluate(gens, Word::parse("B^-1")) == g.b.inverse());
  CHECK(evaluate(gens, Word::parse("1")).is_identity());
  try {
    evaluate(gens, Word::parse("C"));
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
  CHECK(check_relation(gens, Word::parse("ABA"), Word::parse("BAB")));
  CHECK_FALSE(check_relation(gens, Word::parse("AB"), Word::parse("BA")));
  CHECK(element_projective_order(gens, Word::parse("A"), 100) == 7);
}

TEST_CASE("closure of small groups") {
  CHECK(projective_closure({CycMatrix::identity(3, 5)}).order == 1);
  const auto s3 = projective_closure(s3_generators());
  CHECK(s3.outcome == ClosureOutcome::Completed);
  CHECK(s3.order == 6);
  CHECK(s3.stats.arithmetic == "integral");
  // Diagonal group generated by diag(1, i): projectively cyclic of order 4.
  std::vector<CycNumber> d{CycNumber::one(4), embed(RootOfUnity(1, 4), 4)};
  CHECK(projective_closure({CycMatrix::diagonal(d)}).order == 4);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(projective_closure({}), Error);
  try {
    projective_closure({CycMatrix::from_integers({{1, 1}, {1, 1}}, 1)});
    FAIL("expected SingularGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularGenerator);
  }
  try {
    projective_closure(s3_generators(), 0);
    FAIL("expected InvalidRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRange);
  }
  CHECK_THROWS_AS(projective_closure({CycMatrix::identity(2, 1), CycMatrix::identity(3, 1)}), Error);
}

TEST_CASE("closure bound") {
  const auto r = projective_closure(s3_generators(), 5);
  CHECK(r.outcome == ClosureOutcome::ExceededBound);
  CHECK_FALSE(r.order);
  CHECK(r.bound == 5);
  CHECK(projective_closure(s3_generators(), 6).order == 6);
}

TEST_CASE("so7 closure at ell = 14") {
  const auto g = build_so7(14);
  const std::vector<CycMatrix> gens{g.a, g.b};
  const auto r = projective_closure(gens);
  REQUIRE(r.order);
  CHECK(*r.order == 168);
  check_random_orders_divide(gens, 168, 1);
  SUBCASE("integral and rational arithmetic agree") {
    ClosureOptions opts;
    opts.force_rational = true;
    const auto rational = projective_closure_full(gens, opts);
    CHECK(rational.result.order == 168);
    CHECK(rational.result.stats.arithmetic == "rational");
  }
  SUBCASE("invariance under generator order and scalar multiples") {
    CHECK(projective_closure({g.b, g.a}).order == 168);
    const CycNumber z = embed(RootOfUnity(3, 28), 28);
    CHECK(projective_closure({g.a.scaled(z), g.b}).order == 168);
    CHECK(projective_closure({g.a, g.b, g.a * g.b}).order == 168);
  }
  SUBCASE("kept elements are distinct projective classes") {
    ClosureOptions opts;
    opts.keep_elements = true;
    const auto c = projective_closure_full(gens, opts);
    REQUIRE(c.elements.size() == 168);
    std::vector<std::string> keys;
    for (const auto& e : c.elements) keys.push_back(projective_canonical(e).encode());
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    // closed under the generators
    for (const auto& e : c.elements) {
      const auto key = projective_canonical(g.a * e).encode();
      CHECK(std::binary_search(keys.begin(), keys.end(), key));
    }
  }
}

TEST_CASE("so9 at ell = 22: PSL(2,11) relations and closure") {
  const auto g = build_so9(22);
  const CycMatrix s = g.a;
  const CycMatrix t = g.a * g.b * g.a;
  const std::vector<CycMatrix> st{s, t};
  CHECK(check_relation(st, Word::parse("A^11"), Word::parse("1")));
  CHECK(check_relation(st, Word::parse("B^2"), Word::parse("1")));
  CHECK(check_relation(st, Word::parse("(A^4 B A^6 B)^2"), Word::parse("1")));
  const auto r = projective_closure({g.a, g.b});
  REQUIRE(r.order);
  CHECK(*r.order == 660);
  check_random_orders_divide({g.a, g.b}, 660, 2);
}

TEST_CASE("so9 at ell = 18 relations") {
  const auto g = build_so9(18);
  const std::vector<CycMatrix> gens{g.a, g.b};
  const Word a9 = Word::parse("A^9");
  const Word b9 = Word::parse("B^9");
  const Word long_word = Word::parse("(A^4 (ABA) A^5 (ABA))^2");
  CHECK(check_relation(gens, a9, b9));
  CHECK(check_relation(gens, a9, long_word));
  CHECK(check_relation(gens, b9, long_word));
}

TEST_CASE("d3 closures") {
  const RootOfUnity z3(1, 3);
  const auto g3 = build_d3(z3, z3.pow(2));
  const auto r3 = projective_closure({g3.a, g3.b});
  REQUIRE(r3.order);
  CHECK(12 % *r3.order == 0);

  const RootOfUnity z7(1, 7);
  const auto g7 = build_d3(z7, z7.pow(3));
  const std::vector<CycMatrix> gens{g7.a, g7.b};
  CHECK(element_projective_order(gens, Word::parse("A"), 100) == 7);
  CHECK(element_projective_order(gens, Word::parse("A B^-1"), 100) == 4);
  const auto r7 = projective_closure(gens);
  REQUIRE(r7.order);
  CHECK(1176 % *r7.order == 0);
  check_random_orders_divide(gens, *r7.order, 3);
}

TEST_CASE("d4 block closures") {
  const auto g6 = build_d4_block(RootOfUnity(1, 6), +1);
  const auto r6 = projective_closure({g6.a, g6.b});
  REQUIRE(r6.order);
  CHECK(648 % *r6.order == 0);
  check_random_orders_divide({g6.a, g6.b}, *r6.order, 4);

  const auto g5 = build_d4_block(RootOfUnity(1, 5), -1);
  const auto r5 = projective_closure({g5.a, g5.b});
  REQUIRE(r5.order);
  check_random_orders_divide({g5.a, g5.b}, *r5.order, 5);

  const auto g7 = build_d4_block(RootOfUnity(1, 7), -1);
  CHECK(element_projective_order({g7.a, g7.b}, Word::parse("A B^-1"), 1000) == std::nullopt);
  CHECK(projective_closure({g7.a, g7.b}, 1000).outcome == ClosureOutcome::ExceededBound);
}

TEST_CASE("closure outcome strings") {
  CHECK(to_string(ClosureOutcome::Completed) == "Completed");
  CHECK(closure_outcome_from_string("ExceededBound") == ClosureOutcome::ExceededBound);
  CHECK_THROWS_AS(closure_outcome_from_string("x"), Error);
}
