#include <doctest.h>

#include "brute_oracle.hpp"
#include "generators.hpp"
#include "mdh/errors.hpp"
#include "mdh/quotient.hpp"

#include <random>

using namespace mdh;

TEST_CASE("quotient rank of the theta graph") {
  const auto q = quotient_from_complex(mdh::testing::theta(1, 5, 5));
  const auto low = quotient_rank(q, 2);
  CHECK(low.rank == 1);
  CHECK(low.components == 1);
  CHECK(low.classes == std::vector<std::size_t>{0, 0});
  CHECK(quotient_rank(q, 5).rank == 2);
  CHECK(quotient_rank(q, Exponent::infinity()).rank == 2);
}

TEST_CASE("declared merges close a path into a cycle") {
  auto q = quotient_from_complex(mdh::testing::path({1, 1, 1}));
  CHECK(quotient_rank(q, 1).rank == 0);
  q.merges.push_back({0, 3});
  CHECK(quotient_rank(q, 1).rank == 1);
  CHECK(quotient_rank(q, 1).components == 1);
}

TEST_CASE("components without merges") {
  QuotientInput q;
  q.vertex_count = 4;
  q.edges = {{0, 1, 1}, {2, 3, 1}};
  CHECK(quotient_rank(q, 1).components == 2);
  q.merges.push_back({1, 2});
  CHECK(quotient_rank(q, 1).components == 1);
  q.merges.push_back({7, 2});
  CHECK_THROWS_AS(quotient_rank(q, 1), InputError);
}

TEST_CASE("matrix-driven merges") {
  QuotientInput q;
  q.vertex_count = 3;
  q.edges = {{0, 1, 1}, {1, 2, 1}};
  const Exponent inf = Exponent::infinity();
  q.tord = TordMatrix{{inf, 1, 2}, {1, inf, 1}, {2, 1, inf}};
  CHECK(quotient_rank(q, Exponent(3, 2)).rank == 1);
  CHECK(quotient_rank(q, 2).rank == 0);
}

TEST_CASE("ultrametric validation") {
  const Exponent inf = Exponent::infinity();
  CHECK_FALSE(ultrametric_violation(TordMatrix{{inf, 2, 2}, {2, inf, 3}, {2, 3, inf}}));
  CHECK(ultrametric_violation(TordMatrix{{inf, 2, 1}, {2, inf, 3}, {1, 3, inf}}));
  CHECK(ultrametric_violation(TordMatrix{{inf, 2}, {3, inf}}));
  CHECK(ultrametric_violation(TordMatrix{{2, 2}, {2, inf}}));
  CHECK(ultrametric_violation(TordMatrix{{inf, 2}, {2}}));
  CHECK_THROWS_AS(require_ultrametric(TordMatrix{{inf, 2, 1}, {2, inf, 3}, {1, 3, inf}}), InputError);
}

TEST_CASE("quotient engine agrees with the incidence-matrix oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = mdh::testing::random_complex(rng);
    auto q = quotient_from_complex(c);
    std::vector<mdh::testing::BruteEdge> edges;
    for (const auto& e : q.edges) edges.push_back({e.u, e.v, e.sigma});
    std::vector<std::vector<bool>> declared(q.vertex_count, std::vector<bool>(q.vertex_count, false));
    if (trial % 2 == 1) {
      const std::size_t a = rng() % q.vertex_count;
      const std::size_t b = rng() % q.vertex_count;
      q.merges.push_back({a, b});
      declared[a][b] = declared[b][a] = true;
    }
    for (const auto& b : mdh::testing::corpus_labels()) {
      CHECK(quotient_rank(q, b).rank == mdh::testing::brute_h1(q.vertex_count, edges, declared, b));
    }
  }
}

TEST_CASE("quotient rank is monotone in b without declared merges") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = quotient_from_complex(mdh::testing::random_complex(rng));
    int prev = -1;
    for (const auto& b : mdh::testing::corpus_labels()) {
      const int r = quotient_rank(q, b).rank;
      CHECK(r >= prev);
      prev = r;
    }
  }
}
