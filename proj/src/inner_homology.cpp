#include "mdh/inner_homology.hpp"

#include "detail/disjoint_sets.hpp"
#include "mdh/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace mdh {
namespace {

// Components of c after ignoring edge `skip`.
int components_without(const HolderComplex& c, std::size_t skip) {
  std::unordered_map<std::string_view, std::size_t> idx;
  for (std::size_t i = 0; i < c.vertex_count(); ++i) idx.emplace(c.vertices()[i], i);
  detail::DisjointSets sets(c.vertex_count());
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    if (i != skip) sets.unite(idx.at(c.edges()[i].u), idx.at(c.edges()[i].v));
  }
  return static_cast<int>(sets.class_count());
}

bool joins(const HolderEdge& e, std::string_view u, std::string_view v) {
  return (e.u == u && e.v == v) || (e.u == v && e.v == u);
}

// Replaces u by w in the vertex list, removes v, and re-attaches every edge
// not joining u and v. The u-v edges are returned separately.
struct Merged {
  std::vector<std::string> vertices;
  std::vector<HolderEdge> edges;
  std::vector<HolderEdge> between;
  std::string w;
};

// prefix itself when unused, otherwise prefix<n> for the smallest free n >= 1.
std::string fresh_among(const std::vector<std::string>& names, const std::string& prefix, bool bare_ok) {
  std::set<std::string_view> taken(names.begin(), names.end());
  if (bare_ok && !taken.contains(prefix)) return prefix;
  for (std::size_t n = 1;; ++n) {
    std::string candidate = prefix + std::to_string(n);
    if (!taken.contains(candidate)) return candidate;
  }
}

Merged merge_pair(const HolderComplex& c, std::string_view u, std::string_view v, std::optional<std::size_t> drop) {
  Merged out;
  out.w = fresh_among(c.vertices(), "w", true);
  for (const auto& x : c.vertices()) {
    if (x == u) {
      out.vertices.push_back(out.w);
    } else if (x != v) {
      out.vertices.push_back(x);
    }
  }
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    if (drop && *drop == i) continue;
    HolderEdge e = c.edges()[i];
    if (joins(e, u, v)) {
      out.between.push_back(e);
      continue;
    }
    if (e.u == u || e.u == v) e.u = out.w;
    if (e.v == u || e.v == v) e.v = out.w;
    out.edges.push_back(std::move(e));
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> first_B_site(const HolderComplex& c, const Exponent& b) {
  const auto& vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (const auto& e : c.edges()) {
        if (e.sigma > b && joins(e, vs[i], vs[j])) return std::make_pair(vs[i], vs[j]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> first_A_site(const HolderComplex& c, const Exponent& b) {
  for (std::size_t i : cut_edges(c)) {
    if (c.edges()[i].sigma <= b) return i;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Contraction op) { return op == Contraction::A ? "A_b" : "B_b"; }

std::vector<std::size_t> cut_edges(const HolderComplex& c) {
  const int base = component_count(c);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.edge_count(); ++i) {
    if (components_without(c, i) > base) out.push_back(i);
  }
  return out;
}

int reduction_potential(const HolderComplex& c, const Exponent& b) {
  const auto high = std::count_if(c.edges().begin(), c.edges().end(), [&](const HolderEdge& e) { return e.sigma > b; });
  return static_cast<int>(cut_edges(c).size()) + static_cast<int>(high);
}

HolderComplex apply_A_b(const HolderComplex& c, std::size_t edge, const Exponent& b) {
  require_valid(c);
  if (edge >= c.edge_count()) throw PreconditionError("edge index " + std::to_string(edge) + " out of range");
  const HolderEdge& e = c.edges()[edge];
  if (e.sigma > b) {
    throw PreconditionError("A_b needs a label <= b; edge " + std::to_string(edge) + " has " + e.sigma.to_string() +
                            " > " + b.to_string());
  }
  const auto cuts = cut_edges(c);
  if (std::find(cuts.begin(), cuts.end(), edge) == cuts.end()) {
    throw PreconditionError("edge " + std::to_string(edge) + " (" + e.u + "-" + e.v + ") is not a cut-edge");
  }
  Merged m = merge_pair(c, e.u, e.v, edge);
  return HolderComplex(std::move(m.vertices), std::move(m.edges));
}

HolderComplex apply_B_b(const HolderComplex& c, std::string_view u, std::string_view v, const Exponent& b) {
  require_valid(c);
  if (!c.has_vertex(u) || !c.has_vertex(v)) throw PreconditionError("B_b site refers to an unknown vertex");
  if (u == v) throw PreconditionError("B_b needs two distinct vertices");
  Merged m = merge_pair(c, u, v, std::nullopt);
  const auto high = std::count_if(m.between.begin(), m.between.end(), [&](const HolderEdge& e) { return e.sigma > b; });
  if (high == 0) {
    throw PreconditionError("B_b needs an edge between " + std::string(u) + " and " + std::string(v) +
                            " with label > " + b.to_string());
  }
  for (const auto& e : m.between) {
    if (e.sigma > b) continue;
    std::string wi = fresh_among(m.vertices, m.w, false);
    m.vertices.push_back(wi);
    m.edges.push_back({m.w, wi, e.sigma});
    m.edges.push_back({m.w, wi, e.sigma});
  }
  return HolderComplex(std::move(m.vertices), std::move(m.edges));
}

std::pair<HolderComplex, ReductionTrace> b_reduce(const HolderComplex& c, const Exponent& b) {
  require_valid(c);
  if (b < Exponent(1)) throw DomainError("resolution b = " + b.to_string() + " is below 1");
  ReductionTrace trace{b, {}};
  HolderComplex cur = c;
  int potential = reduction_potential(cur, b);
  while (true) {
    ReductionStep step;
    step.potential_before = potential;
    if (auto site = first_B_site(cur, b)) {
      step.op = Contraction::B;
      step.u = site->first;
      step.v = site->second;
      step.result = apply_B_b(cur, step.u, step.v, b);
    } else if (auto edge = first_A_site(cur, b)) {
      step.op = Contraction::A;
      step.u = cur.edges()[*edge].u;
      step.v = cur.edges()[*edge].v;
      step.edge = edge;
      step.result = apply_A_b(cur, *edge, b);
    } else {
      break;
    }
    step.potential_after = reduction_potential(step.result, b);
    if (step.potential_after >= step.potential_before) {
      throw ConsistencyError("b-contraction did not decrease the number of cut-edges plus high edges");
    }
    potential = step.potential_after;
    cur = step.result;
    trace.steps.push_back(std::move(step));
  }
  return {std::move(cur), std::move(trace)};
}

int mdh_inner(const HolderComplex& c, const Exponent& b, int degree) {
  if (degree < 0) throw DomainError("homology degree " + std::to_string(degree) + " is negative");
  if (b < Exponent(1)) throw DomainError("resolution b = " + b.to_string() + " is below 1");
  require_valid(c);
  if (degree >= 2) return 0;
  if (degree == 0) return component_count(c);
  if (b.is_infinite()) return link_betti(c).b1;
  const auto [reduced, trace] = b_reduce(simplify(c), b);
  const int k = component_count(reduced);
  return static_cast<int>(reduced.edge_count()) - static_cast<int>(reduced.vertex_count()) + k;
}

RankProfile inner_profile(const HolderComplex& c, int degree) {
  require_valid(c);
  std::vector<Exponent> candidates;
  for (const auto& e : c.edges()) candidates.push_back(e.sigma);
  return profile_from_samples(std::move(candidates), [&](const Exponent& b) { return mdh_inner(c, b, degree); });
}

}  // namespace mdh
