#pragma once

#include "mdh/holder_complex.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace mdh {

inline const std::vector<Exponent>& corpus_labels() {
  static const std::vector<Exponent> labels{Exponent(1), Exponent(3, 2), Exponent(2),
                                            Exponent(5, 2), Exponent(3), Exponent(5)};
  return labels;
}

// Random loopless multigraph with 2..max_vertices vertices, no isolated vertex and at
// most max_edges edges, labels drawn from corpus_labels().
inline HolderComplex random_complex(std::mt19937& rng, int max_vertices = 8, int max_edges = 14) {
  std::uniform_int_distribution<int> nv(2, max_vertices);
  const int n = nv(rng);
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  auto label = [&] { return corpus_labels()[static_cast<std::size_t>(pick(5))]; };

  std::vector<HolderEdge> edges;
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (covered[static_cast<std::size_t>(i)]) continue;
    int j = pick(n - 2);
    if (j >= i) ++j;
    edges.push_back({vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)], label()});
    covered[static_cast<std::size_t>(i)] = covered[static_cast<std::size_t>(j)] = true;
  }
  const int target = std::max(static_cast<int>(edges.size()), pick(max_edges));
  while (static_cast<int>(edges.size()) < target) {
    const int i = pick(n - 1);
    int j = pick(n - 2);
    if (j >= i) ++j;
    edges.push_back({vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)], label()});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return HolderComplex(std::move(vertices), std::move(edges));
}

// A valid subdivision of a random edge: one half keeps the label, the other
// gets a label at least as large.
inline HolderComplex random_subdivision(std::mt19937& rng, const HolderComplex& c) {
  const auto e = std::uniform_int_distribution<std::size_t>(0, c.edge_count() - 1)(rng);
  const Exponent s = c.edges()[e].sigma;
  std::vector<Exponent> larger;
  for (const auto& l : corpus_labels())
    if (l >= s) larger.push_back(l);
  const Exponent other = larger[std::uniform_int_distribution<std::size_t>(0, larger.size() - 1)(rng)];
  return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? subdivide_edge(c, e, s, other)
                                                            : subdivide_edge(c, e, other, s);
}

inline HolderComplex theta(const Exponent& a, const Exponent& b, const Exponent& c) {
  return HolderComplex({"u", "v"}, {{"u", "v", a}, {"u", "v", b}, {"u", "v", c}});
}

inline HolderComplex path(const std::vector<Exponent>& labels) {
  std::vector<std::string> vs;
  std::vector<HolderEdge> es;
  for (std::size_t i = 0; i <= labels.size(); ++i) vs.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < labels.size(); ++i) es.push_back({vs[i], vs[i + 1], labels[i]});
  return HolderComplex(std::move(vs), std::move(es));
}

}  // namespace mdh
