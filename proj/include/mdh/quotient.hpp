#pragma once

#include "mdh/exponent.hpp"
#include "mdh/holder_complex.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdh {

struct QuotientEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Exponent sigma;
};

using TordMatrix = std::vector<std::vector<Exponent>>;

/// Labelled graph on vertices 0..vertex_count-1 plus declared b-equivalences.
/// Loops are allowed. When `tord` is set it must be a square symmetric
/// ultrametric matrix over the vertices; every pair with entry > b is then
/// merged in addition to `merges`.
struct QuotientInput {
  std::size_t vertex_count = 0;
  std::vector<QuotientEdge> edges;
  std::vector<std::pair<std::size_t, std::size_t>> merges;
  std::optional<TordMatrix> tord;
};

struct QuotientResult {
  int rank = 0;
  int components = 0;
  /// Class representative (smallest member) of every original vertex.
  std::vector<std::size_t> classes;
};

/// Merges the declared pairs, the matrix pairs above b and the endpoints of
/// every edge labelled above b; drops the edges labelled above b and returns
/// the cycle rank e' - v' + k' of what remains (loops count).
QuotientResult quotient_rank(const QuotientInput& q, const Exponent& b);

/// The complex as a quotient input with no declared merges.
QuotientInput quotient_from_complex(const HolderComplex& c);

/// First triple (a, b, c) with tord(a, c) < min(tord(a, b), tord(b, c)), or a
/// symmetry/diagonal defect reported as a message. Empty when the matrix is a
/// valid tangency matrix.
std::optional<std::string> ultrametric_violation(const TordMatrix& m);

/// Throws InputError with the violation message.
void require_ultrametric(const TordMatrix& m);

}  // namespace mdh
