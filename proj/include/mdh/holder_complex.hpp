#pragma once

#include "mdh/exponent.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdh {

/// An edge of a Hölder complex: a Hölder triangle with exponent `sigma`
/// glued along the arcs named `u` and `v`.
struct HolderEdge {
  std::string u;
  std::string v;
  Exponent sigma;

  friend bool operator==(const HolderEdge&, const HolderEdge&) = default;
};

/// Finite multigraph with exponent-labelled edges. Parallel edges are distinct
/// entries of `edges()`; their position is their identity.
///
/// The type itself does not enforce the structural invariants (no loops,
/// labels >= 1, unique names) so that bad input can be represented and
/// reported by validate(). Every algorithm calls require_valid() first.
class HolderComplex {
 public:
  HolderComplex() = default;
  HolderComplex(std::vector<std::string> vertices, std::vector<HolderEdge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<HolderEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool has_vertex(std::string_view name) const { return index_of(name).has_value(); }

  /// Indices of edges incident to `name`.
  std::vector<std::size_t> incident_edges(std::string_view name) const;

  /// A vertex name of the form prefix<n> not used in this complex.
  std::string fresh_name(std::string_view prefix) const;

  friend bool operator==(const HolderComplex&, const HolderComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<HolderEdge> edges_;
};

struct Violation {
  std::string kind;  // "loop", "label below 1", "infinite label", "duplicate vertex", "dangling endpoint"
  std::string detail;
};

std::vector<Violation> validate(const HolderComplex& c);

/// Throws InputError listing every violation.
void require_valid(const HolderComplex& c);

enum class VertexKind { loop_vertex, non_critical, critical, endpoint };

std::string_view to_string(VertexKind kind);

/// Classifies by incident edges: one edge is an endpoint, two edges to the
/// same neighbour a loop vertex, two edges to distinct neighbours
/// non-critical, three or more critical. Isolated vertices raise
/// DegeneracyError.
VertexKind classify_vertex(const HolderComplex& c, std::string_view v);

/// Canonical (simplified) complex: repeatedly removes non-critical vertices,
/// joining their neighbours by one edge labelled with the smaller exponent,
/// and equalizes the two labels at loop vertices to their minimum. Vertices are
/// scanned in list order and the first applicable rewrite is applied.
HolderComplex simplify(const HolderComplex& c);

inline constexpr std::size_t default_isomorphism_capacity = 12;

/// Label-preserving multigraph isomorphism by exhaustive search with degree
/// and incident-label pruning. Returns the vertex map from `a` to `b`.
/// Throws CapacityError if either complex exceeds `max_vertices`.
std::optional<std::map<std::string, std::string>> find_isomorphism(
    const HolderComplex& a, const HolderComplex& b,
    std::size_t max_vertices = default_isomorphism_capacity);

bool is_isomorphic(const HolderComplex& a, const HolderComplex& b,
                   std::size_t max_vertices = default_isomorphism_capacity);

/// Replaces edge `edge_index` by a path through a fresh vertex with labels
/// (first, second). min(first, second) must equal the original label.
HolderComplex subdivide_edge(const HolderComplex& c, std::size_t edge_index, const Exponent& first,
                             const Exponent& second);

/// Betti numbers of the link (the graph itself): b0 = components, b1 = e - v + k.
struct LinkBetti {
  int b0 = 0;
  int b1 = 0;
  friend bool operator==(const LinkBetti&, const LinkBetti&) = default;
};

LinkBetti link_betti(const HolderComplex& c);

/// Number of connected components (isolated vertices count).
int component_count(const HolderComplex& c);

}  // namespace mdh
