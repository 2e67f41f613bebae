#pragma once

#include "mdh/exponent.hpp"
#include "mdh/holder_complex.hpp"
#include "mdh/profile.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mdh {

enum class Contraction { A, B };

std::string_view to_string(Contraction op);

/// One b-contraction. For A the site is the cut-edge (`edge` is its index in
/// the complex before the step, `u`/`v` its endpoints); for B it is the vertex
/// pair `u`, `v`.
struct ReductionStep {
  Contraction op = Contraction::A;
  std::string u;
  std::string v;
  std::optional<std::size_t> edge;
  int potential_before = 0;  // cut-edges + edges labelled above b
  int potential_after = 0;
  HolderComplex result;
};

struct ReductionTrace {
  Exponent b;
  std::vector<ReductionStep> steps;
};

/// Indices of the edges whose removal disconnects their endpoints.
std::vector<std::size_t> cut_edges(const HolderComplex& c);

/// f_A + f_B: number of cut-edges plus number of edges labelled above b.
int reduction_potential(const HolderComplex& c, const Exponent& b);

/// Contracts the cut-edge `edge` (label <= b) into a fresh vertex.
HolderComplex apply_A_b(const HolderComplex& c, std::size_t edge, const Exponent& b);

/// Merges u and v into a fresh vertex w, deletes the u-v edges labelled above b
/// (there must be at least one) and turns every other u-v edge into a double
/// edge w - w_i with its label.
HolderComplex apply_B_b(const HolderComplex& c, std::string_view u, std::string_view v, const Exponent& b);

/// Applies contractions until none is possible. B sites (first vertex pair in
/// list order) take priority over A sites (first cut-edge in edge order).
std::pair<HolderComplex, ReductionTrace> b_reduce(const HolderComplex& c, const Exponent& b);

/// Rank of the inner MD-Homology group of the given degree at resolution b.
int mdh_inner(const HolderComplex& c, const Exponent& b, int degree);

/// Step profile of mdh_inner over b in [1, inf].
RankProfile inner_profile(const HolderComplex& c, int degree);

}  // namespace mdh
