#pragma once

// Test-only reference computations, written independently of the library's
// union-find based quotient: closure by repeated relaxation, H1 rank from the
// rank of the incidence matrix over the rationals.

#include "mdh/exponent.hpp"

#include <boost/rational.hpp>

#include <cstddef>
#include <vector>

namespace mdh::testing {

struct BruteEdge {
  std::size_t u;
  std::size_t v;
  Exponent sigma;
};

inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].numerator() == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].numerator() == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// equiv[i][j] after closing the relation under transitivity.
inline std::vector<std::vector<bool>> transitive_closure(std::vector<std::vector<bool>> rel) {
  const std::size_t n = rel.size();
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  return rel;
}

// First-degree homology rank of the graph obtained by identifying the declared
// pairs and the endpoints of every edge labelled above b, after removing those
// edges: dim ker of the boundary map = e' - rank(incidence).
inline int brute_h1(std::size_t n, const std::vector<BruteEdge>& edges,
                    const std::vector<std::vector<bool>>& declared, const Exponent& b) {
  std::vector<std::vector<bool>> rel = declared;
  if (rel.empty()) rel.assign(n, std::vector<bool>(n, false));
  for (const auto& e : edges) {
    if (e.sigma > b) rel[e.u][e.v] = rel[e.v][e.u] = true;
  }
  const auto eq = transitive_closure(rel);
  std::vector<std::size_t> cls(n);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cls[i] = classes;
    for (std::size_t j = 0; j < i; ++j) {
      if (eq[i][j]) {
        cls[i] = cls[j];
        break;
      }
    }
    if (cls[i] == classes) ++classes;
  }
  std::vector<std::vector<Rational>> incidence(classes);
  std::size_t kept = 0;
  for (const auto& e : edges) {
    if (e.sigma > b) continue;
    ++kept;
    for (auto& row : incidence) row.push_back(0);
    if (cls[e.u] != cls[e.v]) {
      incidence[cls[e.u]].back() = 1;
      incidence[cls[e.v]].back() = -1;
    }
  }
  if (kept == 0) return 0;
  return static_cast<int>(kept - rational_rank(incidence));
}

}  // namespace mdh::testing
