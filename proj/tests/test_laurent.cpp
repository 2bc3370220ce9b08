#include <set>
#include <sstream>

#include "doctest.h"
#include "quasik/error.hpp"
#include "quasik/lambda_module.hpp"
#include "quasik/tuples.hpp"
#include "support.hpp"

using namespace quasik;
using support::cyc;
using support::group;

namespace {

LaurentPoly q(int n, int i) { return LaurentPoly::variable(n, i); }
LaurentPoly one(int n) { return LaurentPoly::constant(n, 1); }
LaurentPoly mono(std::vector<int> e, std::int64_t c = 1) { return LaurentPoly::monomial(std::move(e), c); }

ModulePtr module_at(const GroupPtr& g, const CommutingTuple& sigma) {
  return std::make_shared<const LambdaModule>(centralizer(g, sigma), sigma);
}

}  // namespace

TEST_SUITE("laurent-algebra") {

TEST_CASE("laurent arithmetic examples") {
  LaurentPoly q1 = q(1, 0);
  LaurentPoly q1inv = mono({-1});
  CHECK((q1 + q1inv) * q1 == mono({2}) + one(1));
  LaurentPoly a = mono({3}, 2) + mono({-1}, -5);
  CHECK(a * one(1) == a);
  LaurentPoly s = q(2, 0) + q(2, 1);
  CHECK(s * s == mono({2, 0}) + mono({1, 1}, 2) + mono({0, 2}));
  std::ostringstream os;
  os << s * s;
  CHECK(os.str() == "q1^2 + 2*q1*q2 + q2^2");
}

TEST_CASE("no zero terms are stored") {
  LaurentPoly p = q(1, 0) - q(1, 0);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(p == LaurentPoly(1));
  CHECK_FALSE((q(1, 0) + one(1)).is_unit());
  CHECK((mono({-4}, -1)).is_unit());
}

TEST_CASE("variable count mismatch is rejected") {
  CHECK_THROWS(q(1, 0) + q(2, 0));
  CHECK_THROWS(q(1, 0) * q(2, 1));
}

TEST_CASE("exact division") {
  LaurentPoly a = q(1, 0) + one(1);
  LaurentPoly b = mono({-2}, 3) + q(1, 0);
  CHECK(exact_divide(a * b, a) == b);
  CHECK(exact_divide(a * b, b) == a);
  CHECK_THROWS_AS(exact_divide(one(1), a), InvariantViolation);
}

TEST_CASE("invertibility over the Laurent ring") {
  LaurentMatrix perm(2, 2, 1);
  perm.add(0, 1, q(1, 0));
  perm.add(1, 0, mono({-3}, -1));
  CHECK(is_invertible(perm));
  CHECK(is_monomial_permutation(perm));

  LaurentMatrix hadamard(2, 2, 1);
  hadamard.add(0, 0, one(1));
  hadamard.add(0, 1, one(1));
  hadamard.add(1, 0, one(1));
  hadamard.add(1, 1, -one(1));
  CHECK_FALSE(is_invertible(hadamard));

  LaurentMatrix tri(2, 2, 1);
  tri.add(0, 0, q(1, 0));
  tri.add(0, 1, one(1) + q(1, 0));
  tri.add(1, 1, one(1));
  CHECK(is_invertible(tri));
  CHECK_FALSE(is_monomial_permutation(tri));

  LaurentMatrix scalar(1, 1, 1);
  scalar.add(0, 0, one(1) + q(1, 0));
  CHECK_FALSE(is_invertible(scalar));
  CHECK_FALSE(is_invertible(LaurentMatrix(2, 3, 1)));

  // [[1+q, q], [1, 1]] has determinant 1
  LaurentMatrix unimodular(2, 2, 1);
  unimodular.add(0, 0, one(1) + q(1, 0));
  unimodular.add(0, 1, q(1, 0));
  unimodular.add(1, 0, one(1));
  unimodular.add(1, 1, one(1));
  CHECK(is_invertible(unimodular));
  CHECK(determinant({{one(1) + q(1, 0), q(1, 0)}, {one(1), one(1)}}, 1) == one(1));
}

TEST_CASE("lambda basis examples") {
  auto z2 = group("Z2");
  CommutingTuple s(z2, {cyc(2, {{0, 1}})});
  auto b = lambda_basis(z2, s);
  REQUIRE(b.size() == 2);
  CHECK(b[0].qdeg.to_strings() == std::vector<std::string>{"0/1"});
  CHECK(b[1].qdeg.to_strings() == std::vector<std::string>{"1/2"});

  auto s3 = group("S3");
  for (const auto& e : lambda_basis(s3, CommutingTuple::identity(s3, 2))) CHECK(e.qdeg.is_zero());

  auto z3 = group("Z3");
  std::set<std::string> degs;
  for (const auto& e : lambda_basis(z3, CommutingTuple(z3, {cyc(3, {{0, 1, 2}})}))) degs.insert(e.qdeg.to_strings()[0]);
  CHECK(degs == std::set<std::string>{"0/1", "1/3", "2/3"});
}

TEST_CASE("lambda basis needs central entries") {
  auto s3 = group("S3");
  CHECK_THROWS_AS(lambda_basis(s3, CommutingTuple(s3, {cyc(3, {{0, 1}})})), InputError);
}

TEST_CASE("module product examples") {
  auto z2 = group("Z2");
  auto m2 = module_at(z2, CommutingTuple(z2, {cyc(2, {{0, 1}})}));
  auto sign = ModuleElement::basis(m2, 1);
  CHECK(module_mul(sign, sign) == ModuleElement::basis(m2, 0, q(1, 0)));

  auto z3 = group("Z3");
  const Perm g = cyc(3, {{0, 1, 2}});
  auto m3 = module_at(z3, CommutingTuple(z3, {g}));
  int third = -1, two_thirds = -1;
  for (int i = 0; i < m3->rank(); ++i) {
    auto d = m3->basis()[static_cast<std::size_t>(i)].qdeg.to_strings()[0];
    if (d == "1/3") third = i;
    if (d == "2/3") two_thirds = i;
  }
  REQUIRE(third >= 0);
  REQUIRE(two_thirds >= 0);
  CHECK(module_mul(ModuleElement::basis(m3, third), ModuleElement::basis(m3, two_thirds)) ==
        ModuleElement::basis(m3, 0, q(1, 0)));

  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto x = support::random_element(m3, rng);
    CHECK(module_mul(ModuleElement::basis(m3, 0), x) == x);
  }
}

TEST_CASE("pi_star examples and ring map property") {
  auto z4 = group("Z4");
  auto m = module_at(z4, CommutingTuple(z4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}, {1, 3}})}));
  CHECK(pi_star(one(2), m) == ModuleElement::basis(m, 0));
  CHECK(pi_star(q(2, 0), m) == ModuleElement::basis(m, 0, q(2, 0)));
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto p = support::random_poly(2, rng);
    auto r = support::random_poly(2, rng);
    CHECK(module_mul(pi_star(p, m), pi_star(r, m)) == pi_star(p * r, m));
    CHECK(pi_star(p, m) + pi_star(r, m) == pi_star(p + r, m));
  }
}

TEST_CASE("rank examples") {
  auto z2 = group("Z2");
  CHECK(rank(*module_at(z2, CommutingTuple(z2, {cyc(2, {{0, 1}})}))) == 2);
  auto e = group("trivial");
  CHECK(rank(*module_at(e, CommutingTuple::identity(e, 3))) == 1);
  auto s3 = group("S3");
  CHECK(rank(*module_at(s3, CommutingTuple::identity(s3, 1))) == 3);
}

TEST_CASE("module ring laws and integrality over the corpus") {
  std::mt19937 rng(20240917);
  for (const auto& ng : builtin_corpus())
    for (int n = 1; n <= 2; ++n)
      for (const auto& sigma : commuting_tuples(ng.group, n)) {
        auto m = module_at(ng.group, sigma);
        CHECK(m->rank() == centralizer(ng.group, sigma)->classes().count());
        // every product has integral shifts (product() throws otherwise)
        for (int a = 0; a < m->rank(); ++a)
          for (int b = 0; b < m->rank(); ++b) CHECK_NOTHROW(m->product(a, b));
        for (int t = 0; t < 3; ++t) {
          auto x = support::random_element(m, rng);
          auto y = support::random_element(m, rng);
          auto z = support::random_element(m, rng);
          CHECK(module_mul(x, y) == module_mul(y, x));
          CHECK(module_mul(module_mul(x, y), z) == module_mul(x, module_mul(y, z)));
          CHECK(module_mul(x, y + z) == module_mul(x, y) + module_mul(x, z));
          // q_i acts injectively on coordinates
          for (int i = 0; i < n; ++i) {
            auto qx = module_mul(pi_star(q(n, i), m), x);
            CHECK(qx.is_zero() == x.is_zero());
            for (const auto& [label, p] : x.coords()) CHECK(qx.coordinate(label) == p * q(n, i));
          }
        }
      }
}

}  // TEST_SUITE
