#include <doctest.h>

#include "generators.hpp"
#include "mdh/errors.hpp"
#include "mdh/inner_homology.hpp"
#include "mdh/quotient.hpp"

#include <random>

using namespace mdh;
using mdh::testing::path;
using mdh::testing::theta;

namespace {

int cycle_rank(const HolderComplex& c) {
  return static_cast<int>(c.edge_count()) - static_cast<int>(c.vertex_count()) + component_count(c);
}

int count_between(const HolderComplex& c, const std::string& u, const std::string& v, const Exponent& b) {
  int m = 0;
  for (const auto& e : c.edges()) {
    if (e.sigma > b && ((e.u == u && e.v == v) || (e.u == v && e.v == u))) ++m;
  }
  return m;
}

}  // namespace

TEST_CASE("A_b contracts a cut-edge") {
  const HolderComplex p({"a", "u", "v", "b"}, {{"a", "u", 2}, {"u", "v", 1}, {"v", "b", 3}});
  const auto r = apply_A_b(p, 1, 1);
  CHECK(r == HolderComplex({"a", "w", "b"}, {{"a", "w", 2}, {"w", "b", 3}}));

  const HolderComplex star({"u", "v", "x", "y", "z"}, {{"u", "v", 2}, {"u", "x", 1}, {"u", "y", 3}, {"u", "z", 5}});
  const auto s = apply_A_b(star, 0, 2);
  CHECK(s.vertex_count() == 4);
  CHECK(s.incident_edges("w").size() == 3);
  CHECK(s.edges()[1].sigma == Exponent(3));

  const HolderComplex tri({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
  CHECK_THROWS_AS(apply_A_b(tri, 0, 2), PreconditionError);
  CHECK_THROWS_AS(apply_A_b(p, 2, 2), PreconditionError);
}

TEST_CASE("B_b merges a pair with high edges") {
  const auto r = apply_B_b(theta(1, 5, 5), "u", "v", 1);
  CHECK(r == HolderComplex({"w", "w1"}, {{"w", "w1", 1}, {"w", "w1", 1}}));

  const HolderComplex dbl({"u", "v"}, {{"u", "v", 5}, {"u", "v", 5}});
  CHECK(apply_B_b(dbl, "u", "v", 1) == HolderComplex({"w"}, {}));

  const HolderComplex low({"u", "v"}, {{"u", "v", 1}, {"u", "v", 1}});
  CHECK_THROWS_AS(apply_B_b(low, "u", "v", 2), PreconditionError);
  CHECK_THROWS_AS(apply_B_b(low, "u", "u", 2), PreconditionError);
  CHECK_THROWS_AS(apply_B_b(low, "u", "q", 2), PreconditionError);
}

TEST_CASE("fresh names avoid existing vertices") {
  const HolderComplex c({"w", "v", "w1"}, {{"w", "v", 5}, {"w", "v", 1}, {"v", "w1", 1}});
  const auto r = apply_B_b(c, "w", "v", 2);
  CHECK(validate(r).empty());
  CHECK(r.vertex_count() == 3);
}

TEST_CASE("b-reduction") {
  const auto [r2, t2] = b_reduce(theta(1, 5, 5), 2);
  CHECK(r2 == HolderComplex({"w", "w1"}, {{"w", "w1", 1}, {"w", "w1", 1}}));
  REQUIRE(t2.steps.size() == 1);
  CHECK(t2.steps[0].op == Contraction::B);
  CHECK(t2.steps[0].potential_before == 2);
  CHECK(t2.steps[0].potential_after == 0);

  const auto [r5, t5] = b_reduce(theta(1, 5, 5), 5);
  CHECK(r5 == theta(1, 5, 5));
  CHECK(t5.steps.empty());

  const HolderComplex tree({"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "c", 2}, {"b", "d", 3}});
  const auto [rt, tt] = b_reduce(tree, 3);
  CHECK(rt.vertex_count() == 1);
  CHECK(rt.edge_count() == 0);
  CHECK(tt.steps.size() == 3);
  CHECK(to_string(tt.steps[0].op) == "A_b");
}

TEST_CASE("inner homology ranks") {
  const auto t = theta(1, 5, 5);
  CHECK(mdh_inner(t, 2, 1) == 1);
  CHECK(mdh_inner(t, 5, 1) == 2);
  CHECK(mdh_inner(t, Exponent::infinity(), 1) == 2);
  CHECK(mdh_inner(t, 2, 3) == 0);
  CHECK(mdh_inner(t, 2, 0) == 1);
  CHECK_THROWS_AS(mdh_inner(t, 2, -1), DomainError);
  CHECK_THROWS_AS(mdh_inner(t, Exponent(1, 2), 1), DomainError);
}

TEST_CASE("inner profiles") {
  const auto p = inner_profile(theta(1, 5, 5), 1);
  CHECK(p.breakpoints() == std::vector<Exponent>{Exponent(1), Exponent(5)});
  CHECK(p.ranks() == std::vector<int>{1, 2});
  CHECK(p.at_infinity() == 2);
  CHECK(inner_profile(HolderComplex({"a", "b"}, {{"a", "b", Exponent(7, 2)}}), 1) == RankProfile());
  const HolderComplex two({"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 2}});
  CHECK(inner_profile(two, 0) == RankProfile::constant(2));
  CHECK(inner_profile(two, 2) == RankProfile());
}

TEST_CASE("inner formula properties on random complexes") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 120; ++trial) {
    const auto c = mdh::testing::random_complex(rng);
    const auto q = quotient_from_complex(c);
    const int k = component_count(c);
    int prev = -1;
    Exponent top(1);
    for (const auto& e : c.edges()) top = max(top, e.sigma);
    for (const auto& b : mdh::testing::corpus_labels()) {
      const int r = mdh_inner(c, b, 1);
      CHECK(r == quotient_rank(q, b).rank);
      CHECK(r >= prev);
      prev = r;
      if (b >= top) CHECK(r == link_betti(c).b1);

      const int before = reduction_potential(c, b);
      const auto [reduced, trace] = b_reduce(c, b);
      CHECK(static_cast<int>(trace.steps.size()) <= before);
      CHECK(reduction_potential(reduced, b) == static_cast<int>(cut_edges(reduced).size()));
      HolderComplex cur = c;
      for (const auto& step : trace.steps) {
        CHECK(component_count(step.result) == component_count(cur));
        if (step.op == Contraction::A) {
          CHECK(cycle_rank(step.result) == cycle_rank(cur));
        } else {
          const int m = count_between(cur, step.u, step.v, b);
          CHECK(cycle_rank(step.result) == cycle_rank(cur) - (m - 1));
        }
        cur = step.result;
      }
      CHECK(component_count(reduced) == k);
    }
    CHECK(inner_profile(simplify(c), 1) == inner_profile(c, 1));
    for (int m : {2, 3, 4}) CHECK(mdh_inner(c, Exponent(3, 2), m) == 0);
  }
}
