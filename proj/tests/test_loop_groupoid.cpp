#include "doctest.h"
#include "oracles.hpp"
#include "quasik/loop_groupoid.hpp"
#include "support.hpp"

using namespace quasik;
using support::cyc;
using support::group;

TEST_SUITE("loop-groupoid") {

TEST_CASE("fixed point examples") {
  auto s3 = group("S3");
  CHECK(fixed_points(GSet::point(s3), CommutingTuple(s3, {cyc(3, {{0, 1, 2}})})).points == std::vector<int>{0});
  auto h = support::generated(3, {cyc(3, {{0, 1}})});
  auto cosets = GSet::cosets(s3, *h);
  REQUIRE(cosets.points() == 3);
  CHECK(fixed_points(cosets, CommutingTuple(s3, {cyc(3, {{0, 1}})})).points.size() == 1);
  CHECK(fixed_points(cosets, CommutingTuple(s3, {cyc(3, {{0, 1, 2}})})).points.empty());
}

TEST_CASE("fixed cosets follow the conjugation test") {
  // gH is fixed by s iff g^-1 s g lies in H
  auto s4 = group("S4");
  for (const auto& h : all_subgroups(*s4)) {
    auto x = GSet::cosets(s4, *h);
    std::vector<Perm> reps(static_cast<std::size_t>(x.points()));
    for (const auto& g : s4->elements()) {
      int p = x.act(g, 0);
      if (reps[static_cast<std::size_t>(p)].degree() == 0) reps[static_cast<std::size_t>(p)] = g;
    }
    for (const auto& s : s4->elements()) {
      auto fixed = fixed_points(x, CommutingTuple(s4, {s})).points;
      std::vector<int> expected;
      for (int p = 0; p < x.points(); ++p) {
        const Perm& g = reps[static_cast<std::size_t>(p)];
        if (h->contains(g.inverse() * s * g)) expected.push_back(p);
      }
      CHECK(fixed == expected);
    }
  }
}

TEST_CASE("skeleton over a point") {
  for (const auto& ng : builtin_corpus()) {
    auto sk = lambda_skeleton(ng.group, GSet::point(ng.group), 1);
    CHECK(sk.components().size() == sk.tuples().size());
    for (const auto& c : sk.components()) {
      CHECK(c.stabilizer->order() == c.centralizer->order());
      CHECK(c.orbit_size == 1);
    }
  }
}

TEST_CASE("free actions only see the identity tuple") {
  for (const auto& ng : builtin_corpus()) {
    auto x = GSet::regular(ng.group);
    auto sk = lambda_skeleton(ng.group, x, 1);
    CHECK(sk.components().size() == x.orbit_representatives().size());
    for (const auto& c : sk.components()) {
      CHECK(c.sigma.is_identity());
      CHECK(c.stabilizer->order() == 1);
    }
  }
}

TEST_CASE("skeleton of S3 on three cosets") {
  auto s3 = group("S3");
  auto h = support::generated(3, {cyc(3, {{0, 1}})});
  auto sk = lambda_skeleton(s3, GSet::cosets(s3, *h), 1);
  REQUIRE(sk.components().size() == 2);
  const auto& e = sk.components()[0];
  CHECK(e.sigma.is_identity());
  CHECK(e.orbit_size == 3);
  CHECK(e.stabilizer->order() == 2);
  const auto& t = sk.components()[1];
  CHECK(t.sigma[0] == cyc(3, {{1, 2}}));
  CHECK(t.orbit_size == 1);
  CHECK(t.stabilizer->order() == 2);
}

TEST_CASE("locate returns a witness that conjugates into the component") {
  auto s4 = group("S4");
  auto x = GSet::natural(s4);
  auto sk = lambda_skeleton(s4, x, 2);
  for (const auto& a : s4->elements())
    for (const auto& b : s4->elements()) {
      if (a * b != b * a) continue;
      CommutingTuple rho(s4, {a, b});
      for (int p : fixed_points(x, rho).points) {
        auto loc = sk.locate(rho, p);
        const auto& comp = sk.components()[static_cast<std::size_t>(loc.component)];
        CHECK(rho.conjugated_by(loc.witness) == comp.sigma);
        CHECK(x.act(loc.witness, p) == comp.orbit_rep);
      }
    }
}

TEST_CASE("iterated count examples") {
  for (const auto& ng : builtin_corpus())
    CHECK(iterated_component_count(ng.group, GSet::point(ng.group), 1) == ng.group->classes().count());
  CHECK(iterated_component_count(group("S3"), GSet::point(group("S3")), 2) == 8);
  auto e = group("trivial");
  for (int pts : {1, 4, 7})
    for (int n = 1; n <= 3; ++n) CHECK(iterated_component_count(e, GSet(e, pts, {}), n) == pts);
}

TEST_CASE("component counts agree three ways") {
  for (const auto& ng : builtin_corpus()) {
    auto g = ng.group;
    std::vector<GSet> spaces{GSet::point(g), GSet::natural(g)};
    if (g->order() <= 12) spaces.push_back(GSet::regular(g));
    for (const auto& x : spaces)
      for (int n = 1; n <= 2; ++n) {
        CAPTURE(ng.name);
        CAPTURE(x.points());
        CAPTURE(n);
        auto sk = lambda_skeleton(g, x, n);
        const auto comps = static_cast<long long>(sk.components().size());
        CHECK(comps == iterated_component_count(g, x, n));
        CHECK(static_cast<std::size_t>(comps) == oracle::loop_components(*g, x, n));
        for (const auto& c : sk.components()) {
          CHECK(c.orbit_size * c.stabilizer->order() == c.centralizer->order());
          for (const auto& s : c.sigma.entries()) CHECK(c.stabilizer->contains(s));
        }
      }
  }
}

}  // TEST_SUITE
