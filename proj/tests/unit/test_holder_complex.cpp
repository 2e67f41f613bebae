#include <doctest.h>

#include "generators.hpp"
#include "mdh/errors.hpp"
#include "mdh/holder_complex.hpp"

#include <algorithm>
#include <random>

using namespace mdh;
using mdh::testing::path;
using mdh::testing::theta;

namespace {

bool has_kind(const std::vector<Violation>& vs, const std::string& kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

HolderComplex relabel(const HolderComplex& c, const std::string& prefix, bool reverse) {
  auto name = [&](const std::string& v) { return prefix + v; };
  std::vector<std::string> vs;
  for (const auto& v : c.vertices()) vs.push_back(name(v));
  std::vector<HolderEdge> es;
  for (const auto& e : c.edges()) es.push_back({name(e.v), name(e.u), e.sigma});
  if (reverse) {
    std::reverse(vs.begin(), vs.end());
    std::reverse(es.begin(), es.end());
  }
  return HolderComplex(vs, es);
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(HolderComplex({"u", "v"}, {{"u", "v", Exponent(3, 2)}})).empty());
  CHECK(has_kind(validate(HolderComplex({"u"}, {{"u", "u", 1}})), "loop"));
  CHECK(has_kind(validate(HolderComplex({"u", "v"}, {{"u", "v", Exponent(1, 2)}})), "label below 1"));
  CHECK(has_kind(validate(HolderComplex({"u", "v"}, {{"u", "v", Exponent::infinity()}})), "infinite label"));
  CHECK(has_kind(validate(HolderComplex({"u", "u", "v"}, {{"u", "v", 1}})), "duplicate vertex"));
  CHECK(has_kind(validate(HolderComplex({"u"}, {{"u", "z", 1}})), "dangling endpoint"));
  CHECK_THROWS_AS(require_valid(HolderComplex({"u"}, {{"u", "u", 1}})), InputError);
}

TEST_CASE("vertex classification") {
  const auto p = path({2, 3});
  CHECK(classify_vertex(p, "p1") == VertexKind::non_critical);
  CHECK(classify_vertex(p, "p0") == VertexKind::endpoint);
  const HolderComplex loop({"v", "v0", "x"}, {{"v", "v0", 2}, {"v", "v0", 5}, {"v0", "x", 1}});
  CHECK(classify_vertex(loop, "v") == VertexKind::loop_vertex);
  const HolderComplex star({"c", "a", "b", "d"}, {{"c", "a", 1}, {"c", "b", 1}, {"c", "d", 1}});
  CHECK(classify_vertex(star, "c") == VertexKind::critical);
  CHECK_THROWS_AS(classify_vertex(HolderComplex({"a", "b", "z"}, {{"a", "b", 1}}), "z"), DegeneracyError);
  CHECK_THROWS_AS(classify_vertex(p, "nope"), InputError);
  CHECK(to_string(VertexKind::loop_vertex) == "loop-vertex");
}

TEST_CASE("simplification rewrites") {
  const auto s = simplify(path({2, 3}));
  REQUIRE(s.edge_count() == 1);
  CHECK(s.vertices() == std::vector<std::string>{"p0", "p2"});
  CHECK(s.edges()[0].sigma == Exponent(2));

  const HolderComplex loop({"v", "v0", "x", "y"}, {{"v", "v0", 2}, {"v", "v0", 5}, {"v0", "x", 1}, {"v0", "y", 1}});
  const auto sl = simplify(loop);
  CHECK(sl.edges()[0].sigma == Exponent(2));
  CHECK(sl.edges()[1].sigma == Exponent(2));
  CHECK(sl.vertex_count() == 4);

  const auto t = theta(1, 5, 5);
  CHECK(simplify(t) == t);

  // A triangle collapses to a double edge with equal labels.
  const HolderComplex tri({"a", "b", "c"}, {{"a", "b", 2}, {"b", "c", 3}, {"c", "a", 4}});
  const auto st = simplify(tri);
  CHECK(st.vertex_count() == 2);
  CHECK(st.edge_count() == 2);
  CHECK(st.edges()[0].sigma == st.edges()[1].sigma);
  CHECK(st.edges()[0].sigma == Exponent(2));

  CHECK_THROWS_AS(simplify(HolderComplex({"a", "b", "z"}, {{"a", "b", 1}})), InputError);
}

TEST_CASE("isomorphism") {
  const auto t = theta(1, 5, 5);
  CHECK(is_isomorphic(t, relabel(t, "r", true)));
  CHECK_FALSE(is_isomorphic(theta(1, 5, 5), theta(1, 1, 5)));
  const auto sub = subdivide_edge(path({2, 3}), 0, 2, 7);
  CHECK(is_isomorphic(path({2}), simplify(sub)));

  const auto witness = find_isomorphism(t, relabel(t, "r", false));
  REQUIRE(witness);
  CHECK(witness->at("u") == "ru");

  // Same degree and label multisets, different adjacency.
  const HolderComplex two_tri({"a", "b", "c", "d", "e", "f"},
                              {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}, {"d", "e", 1}, {"e", "f", 1}, {"f", "d", 1}});
  const HolderComplex hexagon({"a", "b", "c", "d", "e", "f"},
                              {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "e", 1}, {"e", "f", 1}, {"f", "a", 1}});
  CHECK_FALSE(is_isomorphic(two_tri, hexagon));
  CHECK(is_isomorphic(hexagon, hexagon));

  CHECK_THROWS_AS(is_isomorphic(path(std::vector<Exponent>(12, 1)), path(std::vector<Exponent>(12, 1))), CapacityError);
  CHECK(is_isomorphic(path(std::vector<Exponent>(12, 1)), path(std::vector<Exponent>(12, 1)), 13));
}

TEST_CASE("edge subdivision") {
  const HolderComplex e({"a", "b"}, {{"a", "b", 2}});
  const auto s = subdivide_edge(e, 0, 2, 7);
  CHECK(s.vertex_count() == 3);
  REQUIRE(s.edge_count() == 2);
  CHECK(s.edges()[0].sigma == Exponent(2));
  CHECK(s.edges()[1].sigma == Exponent(7));
  CHECK(classify_vertex(s, s.vertices().back()) == VertexKind::non_critical);
  CHECK_THROWS_AS(subdivide_edge(e, 0, 3, 5), ConsistencyError);
  CHECK_THROWS_AS(subdivide_edge(e, 4, 2, 2), InputError);
}

TEST_CASE("link Betti numbers") {
  CHECK(link_betti(HolderComplex({"a", "b"}, {{"a", "b", 1}})) == LinkBetti{1, 0});
  CHECK(link_betti(theta(1, 5, 5)) == LinkBetti{1, 2});
  const HolderComplex two_tri({"a", "b", "c", "d", "e", "f"},
                              {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}, {"d", "e", 1}, {"e", "f", 1}, {"f", "d", 1}});
  CHECK(link_betti(two_tri) == LinkBetti{2, 2});
}

TEST_CASE("simplification properties on random complexes") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = mdh::testing::random_complex(rng);
    const auto s = simplify(c);
    CHECK(validate(s).empty());
    CHECK(is_isomorphic(simplify(s), s));
    CHECK(link_betti(s) == link_betti(c));
    const auto sub = mdh::testing::random_subdivision(rng, c);
    CHECK(is_isomorphic(simplify(sub), s));
    const auto r = relabel(c, "q", true);
    CHECK(is_isomorphic(c, r));
    CHECK(is_isomorphic(r, c));
    CHECK(is_isomorphic(simplify(r), s));
  }
}
