#include "mdh/outer_homology.hpp"

#include "mdh/errors.hpp"

#include "detail/disjoint_sets.hpp"

#include <algorithm>
#include <set>

namespace mdh {
namespace {

bool overlaps(const ZoneRef& a, const ZoneRef& b) { return !(a.last < b.first || b.last < a.first); }

Exponent zone_tord(const LinkModel& model, std::size_t arc, const ZoneRef& z) {
  Exponent best = model.matrix[arc][z.first];
  for (std::size_t j = z.first + 1; j <= z.last; ++j) best = std::max(best, model.matrix[arc][j]);
  return best;
}

const ZoneRef* zone_of(const LinkModel& model, std::size_t arc) {
  for (const auto& z : model.zones) {
    if (z.first <= arc && arc <= z.last) return &z;
  }
  return nullptr;
}

void require_resolution(const Exponent& b) {
  if (b < Exponent(1)) throw DomainError("resolution b = " + b.to_string() + " is below 1");
}

}  // namespace

std::string_view to_string(ZoneKind kind) { return kind == ZoneKind::nodal ? "nodal" : "segment"; }

const ZoneRef& LinkModel::zone(const std::string& name) const {
  for (const auto& z : zones) {
    if (z.name == name) return z;
  }
  throw InputError("no zone named '" + name + "'");
}

void validate_link_model(const LinkModel& m) {
  const auto n = m.arcs.size();
  if (n == 0) throw InputError("link model has no arcs");
  if (m.beta.is_infinite() || m.beta < Exponent(1)) throw InputError("beta must be finite and >= 1");
  if (m.matrix.size() != n) throw InputError("matrix size does not match the number of arcs");
  if (auto v = ultrametric_violation(m.matrix)) throw InputError(*v);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.matrix[i][j] < m.beta) {
        throw InputError("tord(" + m.arcs[i] + ", " + m.arcs[j] + ") = " + m.matrix[i][j].to_string() +
                         " is below beta = " + m.beta.to_string());
      }
    }
  }
  if (m.edge_exponents.size() + 1 != n) throw InputError("need one edge exponent per consecutive pair");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m.edge_exponents[i] != m.matrix[i][i + 1]) {
      throw InputError("edge exponent " + std::to_string(i) + " disagrees with the matrix");
    }
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < m.zones.size(); ++i) {
    const auto& z = m.zones[i];
    if (!names.insert(z.name).second) throw InputError("duplicate zone '" + z.name + "'");
    if (z.last < z.first || z.last >= n) throw InputError("zone '" + z.name + "' has an invalid span");
    for (std::size_t j = 0; j < i; ++j) {
      if (overlaps(z, m.zones[j])) throw InputError("zones '" + z.name + "' and '" + m.zones[j].name + "' overlap");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto* zi = zone_of(m, i);
    for (std::size_t j = i + 1; zi && j < n; ++j) {
      const auto* zj = zone_of(m, j);
      if (zj && zi->kind != zj->kind && m.matrix[i][j] > m.beta) {
        throw InputError("a nodal and a segment arc are tangent above beta: " + m.arcs[i] + ", " + m.arcs[j]);
      }
    }
  }
}

LinkModel link_model_from_arcs(const ArcFamily& family) {
  LinkModel m;
  m.beta = family.beta;
  const auto n = family.size();
  m.matrix.assign(n, std::vector<Exponent>(n, Exponent::infinity()));
  for (std::size_t i = 0; i < n; ++i) {
    m.arcs.push_back(family.arcs[i].name);
    for (std::size_t j = i + 1; j < n; ++j) {
      m.matrix[i][j] = m.matrix[j][i] = tord_symbolic(family.arcs[i].arc, family.arcs[j].arc);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) m.edge_exponents.push_back(m.matrix[i][i + 1]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = family.arcs[i];
    if (a.zone.empty()) continue;
    if (!m.zones.empty() && m.zones.back().name == a.zone && m.zones.back().last + 1 == i) {
      m.zones.back().last = i;
      continue;
    }
    const auto kind = a.role == ArcRole::nodal ? ZoneKind::nodal : ZoneKind::segment;
    m.zones.push_back({a.zone, kind, i, i});
  }
  validate_link_model(m);
  return m;
}

LinkModel make_link_model(std::vector<std::string> arcs, const Exponent& beta, TordMatrix matrix,
                          std::vector<ZoneRef> zones) {
  LinkModel m;
  m.arcs = std::move(arcs);
  m.beta = beta;
  m.matrix = std::move(matrix);
  m.zones = std::move(zones);
  if (m.matrix.size() == m.arcs.size()) {
    for (std::size_t i = 0; i + 1 < m.arcs.size(); ++i) {
      if (m.matrix[i].size() > i + 1) m.edge_exponents.push_back(m.matrix[i][i + 1]);
    }
  }
  m.assumptions.push_back(elementary_pair_assumption);
  validate_link_model(m);
  return m;
}

QuotientResult outer_quotient(const LinkModel& model, const Exponent& b) {
  require_resolution(b);
  const auto n = model.size();
  detail::DisjointSets classes(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& t = model.matrix[i][j];
      if (t.is_infinite() || t > b) classes.unite(i, j);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (model.edge_exponents[i] > b) classes.unite(i, i + 1);
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(model.edge_exponents[i] > b)) kept.push_back(i);
  }
  detail::DisjointSets same_triangle(kept.size());
  for (std::size_t x = 0; x < kept.size(); ++x) {
    for (std::size_t y = x + 1; y < kept.size(); ++y) {
      const auto p = kept[x], q = kept[y];
      if (q <= p + 1) continue;  // shares an arc
      const auto a = classes.find(p), a1 = classes.find(p + 1);
      const auto c = classes.find(q), c1 = classes.find(q + 1);
      if ((a == c && a1 == c1) || (a == c1 && a1 == c)) same_triangle.unite(x, y);
    }
  }

  QuotientResult r;
  for (std::size_t i = 0; i < n; ++i) r.classes.push_back(classes.find(i));
  const auto v = static_cast<int>(classes.class_count());
  // Quotient graph of a path is connected.
  r.components = n == 0 ? 0 : 1;
  r.rank = static_cast<int>(same_triangle.class_count()) - v + r.components;
  return r;
}

int outer_rank(const LinkModel& model, const Exponent& b, int degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  require_resolution(b);
  if (degree >= 2) return 0;
  const auto q = outer_quotient(model, b);
  return degree == 0 ? q.components : q.rank;
}

RankProfile outer_profile(const LinkModel& model, int degree) {
  std::vector<Exponent> candidates{model.beta};
  for (const auto& row : model.matrix) {
    for (const auto& e : row) {
      if (e.is_finite()) candidates.push_back(e);
    }
  }
  return profile_from_samples(std::move(candidates), [&](const Exponent& b) { return outer_rank(model, b, degree); });
}

TargetSnake build_target_snake(const std::vector<int>& ks, const std::vector<Exponent>& qs, const Exponent& beta) {
  if (beta.is_infinite() || beta < Exponent(1)) throw PreconditionError("beta must be finite and >= 1");
  if (ks.empty() || ks.size() != qs.size()) throw PreconditionError("ks and qs must be non-empty and of equal length");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1) throw PreconditionError("ks must be positive");
    if (i > 0 && ks[i] <= ks[i - 1]) throw PreconditionError("ks must be strictly increasing");
    if (qs[i].is_infinite() || !(qs[i] > beta)) throw PreconditionError("qs must be finite and exceed beta");
    if (i > 0 && !(qs[i - 1] < qs[i])) throw PreconditionError("qs must be strictly increasing");
  }
  const auto m = ks.size();
  std::vector<ProfileCase> rows{{Exponent(1), beta, 0}};
  for (std::size_t l = 0; l < m; ++l) {
    rows.push_back({l == 0 ? beta : qs[l - 1], qs[l], ks[m - 1 - l]});
  }
  rows.push_back({qs.back(), Exponent::infinity(), 0});
  const auto expected = profile_from_cases(rows);

  if (m == 1 && ks[0] == 1) return {realize_bubble_snake(beta, qs[0]), std::nullopt, {}, expected};

  std::vector<SpectraGroup> groups;
  for (std::size_t l = 0; l + 1 < m; ++l) groups.push_back({ks[m - 1 - l] - ks[m - 2 - l], qs[l]});
  groups.push_back({ks[0], qs[m - 1]});
  auto spec = gluing_spec(ks.back(), beta, groups);
  return {realize_snake_word(spec), spec, groups, expected};
}

int alpha_multiplicity(const LinkModel& model, std::size_t arc, const Exponent& alpha) {
  if (alpha < model.beta) throw DomainError("alpha = " + alpha.to_string() + " is below beta");
  if (arc >= model.size()) throw InputError("arc index out of range");
  int runs = 0;
  bool inside = false;
  for (std::size_t j = 0; j < model.size(); ++j) {
    const bool in = !(model.matrix[arc][j] < alpha);
    if (in && !inside) ++runs;
    inside = in;
  }
  return runs;
}

std::vector<Exponent> subsegment_exponents(const LinkModel& model, const ZoneRef& z, const ZoneRef& zp) {
  if (z.kind != zp.kind) throw PreconditionError("zones '" + z.name + "' and '" + zp.name + "' differ in kind");
  if (overlaps(z, zp)) throw PreconditionError("zones '" + z.name + "' and '" + zp.name + "' overlap");
  std::set<Exponent> out;
  for (std::size_t i = z.first; i <= z.last; ++i) {
    const auto t = zone_tord(model, i, zp);
    if (t > model.beta) out.insert(t);
  }
  return {out.begin(), out.end()};
}

bool check_simple_contact(const LinkModel& model, const ZoneRef& z, const ZoneRef& zp) {
  if (subsegment_exponents(model, z, zp).empty()) {
    throw PreconditionError("zones '" + z.name + "' and '" + zp.name + "' have no subsegments");
  }
  std::vector<Exponent> values;
  for (std::size_t i = z.first; i <= z.last; ++i) {
    const auto t = zone_tord(model, i, zp);
    if (t > model.beta) values.push_back(t);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      for (std::size_t l = j + 1; l < values.size(); ++l) {
        const auto lo = std::min(values[i], values[l]), hi = std::max(values[i], values[l]);
        if (values[j] < lo || values[j] > hi) return false;
      }
    }
  }
  return true;
}

namespace {

ZoneCorrespondence default_correspondence(const LinkModel& a, bool reversed) {
  // zone counts agree because the words have equal length
  ZoneCorrespondence out;
  std::size_t nodal = 0, segments = 0;
  for (const auto& z : a.zones) (z.kind == ZoneKind::nodal ? nodal : segments) += 1;
  for (const auto& z : a.zones) {
    const auto index = std::stoul(z.name.substr(1));
    const auto count = z.kind == ZoneKind::nodal ? nodal : segments;
    out[z.name] = z.name.substr(0, 1) + std::to_string(reversed ? count + 1 - index : index);
  }
  return out;
}

void require_bijection(const LinkModel& a, const LinkModel& b, const ZoneCorrespondence& map) {
  std::set<std::string> images;
  for (const auto& z : a.zones) {
    auto it = map.find(z.name);
    if (it == map.end()) throw InputError("zone '" + z.name + "' has no image");
    if (!images.insert(it->second).second) throw InputError("zone '" + it->second + "' is hit twice");
    if (b.zone(it->second).kind != z.kind) {
      throw InputError("zone '" + z.name + "' maps to a zone of another kind");
    }
  }
  if (map.size() != a.zones.size() || images.size() != b.zones.size()) {
    throw InputError("correspondence is not a bijection of zones");
  }
}

void require_simple(const LinkModel& m, const std::string& which) {
  for (const auto& z : m.zones) {
    for (const auto& zp : m.zones) {
      if (z.name == zp.name || z.kind != zp.kind) continue;
      if (subsegment_exponents(m, z, zp).empty()) continue;
      if (!check_simple_contact(m, z, zp)) {
        throw PreconditionError(which + ": contact between '" + z.name + "' and '" + zp.name + "' is not simple");
      }
    }
  }
}

std::string exponent_set(const std::vector<Exponent>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].to_string();
  return out + "}";
}

// First zone pair whose subsegment exponents differ from those of its image.
std::optional<std::pair<std::pair<std::string, std::string>, std::string>> first_mismatch(
    const LinkModel& ma, const LinkModel& mb, const ZoneCorrespondence& corr) {
  for (const auto& z : ma.zones) {
    for (const auto& zp : ma.zones) {
      if (z.name == zp.name || z.kind != zp.kind) continue;
      const auto sa = subsegment_exponents(ma, z, zp);
      const auto sb = subsegment_exponents(mb, mb.zone(corr.at(z.name)), mb.zone(corr.at(zp.name)));
      if (sa != sb) {
        return std::make_pair(std::make_pair(z.name, zp.name),
                              "subsegment exponents of (" + z.name + ", " + zp.name + ") are " + exponent_set(sa) +
                                  " but " + exponent_set(sb) + " for (" + corr.at(z.name) + ", " +
                                  corr.at(zp.name) + ")");
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict weak_equiv_same_homology(const SnakeInstance& a, const SnakeInstance& b,
                                 const std::optional<ZoneCorrespondence>& map) {
  Verdict v;
  v.assumptions = {word_proxy_assumption, elementary_pair_assumption,
                   "tord(arc, zone) taken as the maximum over the zone's sampled arcs"};
  if (!same_snake_name(a.spec.word, b.spec.word)) {
    v.reason = "snake names differ: " + word_to_string(a.spec.word) + " vs " + word_to_string(b.spec.word);
    return v;
  }
  const auto ma = link_model_from_arcs(realize_snake_instance(a));
  const auto mb = link_model_from_arcs(realize_snake_instance(b));
  require_simple(ma, "first snake");
  require_simple(mb, "second snake");

  // Without a map every reading direction under which the names agree is tried.
  std::vector<ZoneCorrespondence> candidates;
  if (map) {
    candidates.push_back(*map);
  } else {
    if (normalize_word(a.spec.word) == normalize_word(b.spec.word)) candidates.push_back(default_correspondence(ma, false));
    if (normalize_word(a.spec.word) == normalize_word(SnakeWord(b.spec.word.rbegin(), b.spec.word.rend()))) {
      candidates.push_back(default_correspondence(ma, true));
    }
  }
  std::optional<Verdict> first_failure;
  for (const auto& corr : candidates) {
    require_bijection(ma, mb, corr);
    if (auto failure = first_mismatch(ma, mb, corr)) {
      if (!first_failure) {
        first_failure = v;
        first_failure->failing_pair = failure->first;
        first_failure->reason = failure->second;
      }
      continue;
    }
    v.guaranteed = true;
    v.reason = "same snake name and equal subsegment exponents on all corresponding zone pairs";
    return v;
  }
  return *first_failure;
}

}  // namespace mdh
