#include "mdh/holder_complex.hpp"

#include "detail/disjoint_sets.hpp"
#include "mdh/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace mdh {
namespace {

using IndexMap = std::unordered_map<std::string, std::size_t>;

IndexMap index_map(const HolderComplex& c) {
  IndexMap out;
  for (std::size_t i = 0; i < c.vertices().size(); ++i) out.emplace(c.vertices()[i], i);
  return out;
}

const std::string& other_end(const HolderEdge& e, std::string_view v) { return e.u == v ? e.v : e.u; }

void require_no_isolated(const HolderComplex& c) {
  std::vector<int> degree(c.vertex_count(), 0);
  const auto idx = index_map(c);
  for (const auto& e : c.edges()) {
    ++degree[idx.at(e.u)];
    ++degree[idx.at(e.v)];
  }
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (degree[i] == 0) throw InputError("isolated vertex '" + c.vertices()[i] + "'");
  }
}

// One Ω or Δ rewrite at the first vertex (in list order) that admits one.
bool simplify_step(std::vector<std::string>& vertices, std::vector<HolderEdge>& edges) {
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    const std::string& v = vertices[vi];
    std::vector<std::size_t> inc;
    for (std::size_t i = 0; i < edges.size() && inc.size() < 3; ++i) {
      if (edges[i].u == v || edges[i].v == v) inc.push_back(i);
    }
    if (inc.size() != 2) continue;
    HolderEdge& e1 = edges[inc[0]];
    HolderEdge& e2 = edges[inc[1]];
    const std::string& a = other_end(e1, v);
    const std::string& b = other_end(e2, v);
    if (a != b) {
      HolderEdge joined{a, b, min(e1.sigma, e2.sigma)};
      edges[inc[0]] = std::move(joined);
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(inc[1]));
      vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(vi));
      return true;
    }
    if (e1.sigma != e2.sigma) {
      const Exponent m = min(e1.sigma, e2.sigma);
      e1.sigma = m;
      e2.sigma = m;
      return true;
    }
  }
  return false;
}

// Sorted labels of the edges joining each unordered vertex pair.
using PairLabels = std::map<std::pair<std::size_t, std::size_t>, std::vector<Exponent>>;

struct IsoData {
  PairLabels pairs;
  std::vector<std::vector<Exponent>> incident;  // sorted incident labels per vertex
  std::vector<std::vector<std::size_t>> neighbours;
};

IsoData iso_data(const HolderComplex& c) {
  const auto idx = index_map(c);
  IsoData d;
  d.incident.resize(c.vertex_count());
  d.neighbours.resize(c.vertex_count());
  for (const auto& e : c.edges()) {
    std::size_t a = idx.at(e.u);
    std::size_t b = idx.at(e.v);
    if (b < a) std::swap(a, b);
    d.pairs[{a, b}].push_back(e.sigma);
    d.incident[a].push_back(e.sigma);
    d.incident[b].push_back(e.sigma);
  }
  for (auto& [key, labels] : d.pairs) {
    std::sort(labels.begin(), labels.end());
    d.neighbours[key.first].push_back(key.second);
    d.neighbours[key.second].push_back(key.first);
  }
  for (auto& labels : d.incident) std::sort(labels.begin(), labels.end());
  return d;
}

const std::vector<Exponent>& labels_between(const PairLabels& pairs, std::size_t a, std::size_t b) {
  static const std::vector<Exponent> none;
  if (b < a) std::swap(a, b);
  auto it = pairs.find({a, b});
  return it == pairs.end() ? none : it->second;
}

class IsoSearch {
 public:
  IsoSearch(const IsoData& a, const IsoData& b, std::vector<std::size_t> order)
      : a_(a), b_(b), order_(std::move(order)), map_(a.incident.size(), npos), used_(a.incident.size(), false) {}

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (std::size_t x = 0; x < b_.incident.size(); ++x) {
      if (used_[x] || a_.incident[u] != b_.incident[x]) continue;
      if (!consistent(u, x, depth)) continue;
      map_[u] = x;
      used_[x] = true;
      if (run(depth + 1)) return true;
      used_[x] = false;
      map_[u] = npos;
    }
    return false;
  }

  const std::vector<std::size_t>& mapping() const { return map_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool consistent(std::size_t u, std::size_t x, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t w = order_[i];
      if (labels_between(a_.pairs, u, w) != labels_between(b_.pairs, x, map_[w])) return false;
    }
    return true;
  }

  const IsoData& a_;
  const IsoData& b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

// Connected vertices first so that adjacency constraints prune early.
std::vector<std::size_t> search_order(const IsoData& d) {
  const std::size_t n = d.incident.size();
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t a, std::size_t b) { return d.incident[a].size() > d.incident[b].size(); });
  for (std::size_t start : by_degree) {
    if (seen[start]) continue;
    std::vector<std::size_t> queue{start};
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      order.push_back(queue[head]);
      for (std::size_t nb : d.neighbours[queue[head]]) {
        if (!seen[nb]) {
          seen[nb] = true;
          queue.push_back(nb);
        }
      }
    }
  }
  return order;
}

}  // namespace

std::optional<std::size_t> HolderComplex::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> HolderComplex::incident_edges(std::string_view name) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == name || edges_[i].v == name) out.push_back(i);
  }
  return out;
}

std::string HolderComplex::fresh_name(std::string_view prefix) const {
  std::set<std::string_view> taken(vertices_.begin(), vertices_.end());
  for (std::size_t n = 1;; ++n) {
    std::string candidate = std::string(prefix) + std::to_string(n);
    if (!taken.contains(candidate)) return candidate;
  }
}

std::vector<Violation> validate(const HolderComplex& c) {
  std::vector<Violation> out;
  std::set<std::string> names;
  for (const auto& v : c.vertices()) {
    if (!names.insert(v).second) out.push_back({"duplicate vertex", "vertex '" + v + "' is listed more than once"});
  }
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    const auto& e = c.edges()[i];
    const std::string where = "edge " + std::to_string(i) + " (" + e.u + "-" + e.v + ")";
    if (!names.contains(e.u)) out.push_back({"dangling endpoint", where + ": unknown vertex '" + e.u + "'"});
    if (!names.contains(e.v)) out.push_back({"dangling endpoint", where + ": unknown vertex '" + e.v + "'"});
    if (e.u == e.v) out.push_back({"loop", where + " joins a vertex to itself"});
    if (e.sigma.is_infinite()) {
      out.push_back({"infinite label", where + " has label inf"});
    } else if (e.sigma < Exponent(1)) {
      out.push_back({"label below 1", where + " has label " + e.sigma.to_string()});
    }
  }
  return out;
}

void require_valid(const HolderComplex& c) {
  const auto violations = validate(c);
  if (violations.empty()) return;
  std::string msg = "invalid Hölder complex:";
  for (const auto& v : violations) msg += "\n  " + v.kind + ": " + v.detail;
  throw InputError(msg);
}

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::loop_vertex: return "loop-vertex";
    case VertexKind::non_critical: return "non-critical";
    case VertexKind::critical: return "critical";
    case VertexKind::endpoint: return "endpoint";
  }
  return "?";
}

VertexKind classify_vertex(const HolderComplex& c, std::string_view v) {
  if (!c.has_vertex(v)) throw InputError("unknown vertex '" + std::string(v) + "'");
  const auto inc = c.incident_edges(v);
  switch (inc.size()) {
    case 0: throw DegeneracyError("vertex '" + std::string(v) + "' is isolated");
    case 1: return VertexKind::endpoint;
    case 2:
      return other_end(c.edges()[inc[0]], v) == other_end(c.edges()[inc[1]], v) ? VertexKind::loop_vertex
                                                                                 : VertexKind::non_critical;
    default: return VertexKind::critical;
  }
}

HolderComplex simplify(const HolderComplex& c) {
  require_valid(c);
  require_no_isolated(c);
  std::vector<std::string> vertices = c.vertices();
  std::vector<HolderEdge> edges = c.edges();
  while (simplify_step(vertices, edges)) {
  }
  return HolderComplex(std::move(vertices), std::move(edges));
}

std::optional<std::map<std::string, std::string>> find_isomorphism(const HolderComplex& a, const HolderComplex& b,
                                                                   std::size_t max_vertices) {
  for (const auto* c : {&a, &b}) {
    if (c->vertex_count() > max_vertices) {
      throw CapacityError("complex has " + std::to_string(c->vertex_count()) +
                          " vertices; isomorphism search is capped at " + std::to_string(max_vertices));
    }
  }
  require_valid(a);
  require_valid(b);
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;

  const IsoData da = iso_data(a);
  const IsoData db = iso_data(b);
  auto sorted = [](std::vector<std::vector<Exponent>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(da.incident) != sorted(db.incident)) return std::nullopt;

  IsoSearch search(da, db, search_order(da));
  if (!search.run()) return std::nullopt;
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) out[a.vertices()[i]] = b.vertices()[search.mapping()[i]];
  return out;
}

bool is_isomorphic(const HolderComplex& a, const HolderComplex& b, std::size_t max_vertices) {
  return find_isomorphism(a, b, max_vertices).has_value();
}

HolderComplex subdivide_edge(const HolderComplex& c, std::size_t edge_index, const Exponent& first,
                             const Exponent& second) {
  require_valid(c);
  if (edge_index >= c.edge_count()) throw InputError("edge index " + std::to_string(edge_index) + " out of range");
  const HolderEdge& e = c.edges()[edge_index];
  if (min(first, second) != e.sigma) {
    throw ConsistencyError("min(" + first.to_string() + ", " + second.to_string() + ") differs from the edge label " +
                           e.sigma.to_string());
  }
  if (first.is_infinite() || second.is_infinite()) throw ConsistencyError("subdivision labels must be finite");

  std::vector<std::string> vertices = c.vertices();
  std::vector<HolderEdge> edges = c.edges();
  const std::string mid = c.fresh_name("s");
  vertices.push_back(mid);
  const HolderEdge second_half{mid, e.v, second};
  edges[edge_index] = HolderEdge{e.u, mid, first};
  edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(edge_index) + 1, second_half);
  return HolderComplex(std::move(vertices), std::move(edges));
}

int component_count(const HolderComplex& c) {
  const auto idx = index_map(c);
  detail::DisjointSets sets(c.vertex_count());
  for (const auto& e : c.edges()) sets.unite(idx.at(e.u), idx.at(e.v));
  return static_cast<int>(sets.class_count());
}

LinkBetti link_betti(const HolderComplex& c) {
  require_valid(c);
  const int k = component_count(c);
  return {k, static_cast<int>(c.edge_count()) - static_cast<int>(c.vertex_count()) + k};
}

}  // namespace mdh
