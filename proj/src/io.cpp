#include "mdh/io.hpp"

#include "mdh/errors.hpp"

#include <sstream>

namespace mdh::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

template <typename T>
T integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<T>();
}

ZoneKind zone_kind(const std::string& s) {
  if (s == "nodal") return ZoneKind::nodal;
  if (s == "segment") return ZoneKind::segment;
  throw InputError("zone kind must be 'nodal' or 'segment', got '" + s + "'");
}

}  // namespace

json to_json(const Exponent& e) { return e.to_string(); }

Exponent exponent_from_json(const json& j) {
  if (j.is_number_integer()) return Exponent(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Exponent::parse(j.get<std::string>());
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError("bad exponent '" + j.get<std::string>() + "': " + e.what());
    }
  }
  throw InputError("exponent must be a string \"p/q\" or \"inf\"");
}

json to_json(const RankProfile& p) {
  json intervals = json::array();
  for (const auto& i : p.intervals()) intervals.push_back({{"from", to_json(i.from)}, {"to", to_json(i.to)}, {"rank", i.rank}});
  return {{"intervals", intervals}, {"at_infinity", p.at_infinity()}};
}

RankProfile profile_from_json(const json& j) {
  std::vector<ProfileCase> rows;
  for (const auto& i : field(j, "intervals")) {
    rows.push_back({exponent_from_json(field(i, "from")), exponent_from_json(field(i, "to")),
                    integer<int>(field(i, "rank"), "rank")});
  }
  rows.push_back({Exponent::infinity(), Exponent::infinity(), integer<int>(field(j, "at_infinity"), "at_infinity")});
  return profile_from_cases(rows);
}

std::string profile_to_csv(const RankProfile& p) {
  std::ostringstream out;
  out << "from,to,rank\n";
  for (const auto& i : p.intervals()) out << i.from.to_string() << ',' << i.to.to_string() << ',' << i.rank << '\n';
  out << "inf,inf," << p.at_infinity() << '\n';
  return out.str();
}

json to_json(const HolderComplex& c) {
  json edges = json::array();
  for (const auto& e : c.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"sigma", to_json(e.sigma)}});
  return {{"vertices", c.vertices()}, {"edges", edges}};
}

HolderComplex complex_from_json(const json& j) {
  std::vector<std::string> vertices;
  const auto& vs = field(j, "vertices");
  if (!vs.is_array()) throw InputError("'vertices' must be an array");
  for (const auto& v : vs) vertices.push_back(text(v, "vertex name"));
  std::vector<HolderEdge> edges;
  const auto& es = field(j, "edges");
  if (!es.is_array()) throw InputError("'edges' must be an array");
  for (const auto& e : es) {
    edges.push_back({text(field(e, "u"), "u"), text(field(e, "v"), "v"), exponent_from_json(field(e, "sigma"))});
  }
  HolderComplex c(std::move(vertices), std::move(edges));
  require_valid(c);
  return c;
}

std::string complex_to_dot(const HolderComplex& c) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : c.vertices()) out << "  " << json(v).dump() << ";\n";
  for (const auto& e : c.edges()) {
    out << "  " << json(e.u).dump() << " -- " << json(e.v).dump() << " [label=\"" << e.sigma.to_string() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json step{{"operation", to_string(s.op)},
              {"u", s.u},
              {"v", s.v},
              {"potential_before", s.potential_before},
              {"potential_after", s.potential_after},
              {"result", to_json(s.result)}};
    if (s.edge) step["edge"] = *s.edge;
    steps.push_back(step);
  }
  return {{"b", to_json(t.b)}, {"steps", steps}};
}

json to_json(const SnakeInstance& s) {
  json spectra = json::object();
  for (const auto& [letter, values] : s.spec.spectra) {
    json list = json::array();
    for (const auto& v : values) list.push_back(to_json(v));
    spectra[letter] = list;
  }
  json out{{"beta", to_json(s.spec.beta)}, {"word", s.spec.word}, {"spectra", spectra}};
  if (!s.contacts.empty()) {
    json contacts = json::array();
    for (const auto& c : s.contacts) {
      json orders = json::array();
      for (const auto& q : c.orders) orders.push_back(to_json(q));
      contacts.push_back({{"segments", {c.first, c.second}}, {"orders", orders}});
    }
    out["segment_contacts"] = contacts;
  }
  return out;
}

SnakeInstance snake_from_json(const json& j) {
  SnakeInstance s;
  s.spec.beta = exponent_from_json(field(j, "beta"));
  const auto& word = field(j, "word");
  if (word.is_string()) {
    s.spec.word = parse_word(word.get<std::string>());
  } else {
    if (!word.is_array()) throw InputError("'word' must be an array of letters or a string");
    for (const auto& w : word) s.spec.word.push_back(text(w, "letter"));
  }
  const auto& spectra = field(j, "spectra");
  if (!spectra.is_object()) throw InputError("'spectra' must be an object");
  for (const auto& [letter, values] : spectra.items()) {
    auto& list = s.spec.spectra[letter];
    if (values.is_array()) {
      for (const auto& v : values) list.push_back(exponent_from_json(v));
    } else {
      list.push_back(exponent_from_json(values));
    }
  }
  validate_spec(s.spec);
  if (j.contains("segment_contacts")) {
    for (const auto& c : j.at("segment_contacts")) {
      const auto& seg = field(c, "segments");
      if (!seg.is_array() || seg.size() != 2) throw InputError("'segments' must be a pair of indices");
      SegmentContact contact{integer<int>(seg[0], "segment"), integer<int>(seg[1], "segment"), {}};
      for (const auto& q : field(c, "orders")) contact.orders.push_back(exponent_from_json(q));
      s.contacts.push_back(contact);
    }
    validate_contacts(s);
  }
  return s;
}

json to_json(const MonomialArc& a) {
  json terms = json::array();
  for (const auto& t : a.terms()) {
    terms.push_back({{"axis", t.axis}, {"coeff", rational_to_string(t.coeff)}, {"exp", to_json(t.exp)}});
  }
  return terms;
}

MonomialArc arc_from_json(const json& j) {
  if (!j.is_array()) throw InputError("arc must be an array of terms");
  std::vector<MonomialTerm> terms;
  for (const auto& t : j) {
    const auto& coeff = field(t, "coeff");
    const Rational c = coeff.is_number_integer() ? Rational(coeff.get<std::int64_t>())
                                                 : parse_rational(text(coeff, "coeff"));
    terms.push_back({integer<int>(field(t, "axis"), "axis"), c, exponent_from_json(field(t, "exp"))});
  }
  return MonomialArc(std::move(terms));
}

json to_json(const ArcFamily& f) {
  json arcs = json::array();
  for (const auto& a : f.arcs) {
    json entry{{"name", a.name}, {"role", to_string(a.role)}, {"terms", to_json(a.arc)}};
    if (!a.zone.empty()) entry["zone"] = a.zone;
    arcs.push_back(entry);
  }
  json matrix = json::array();
  for (const auto& a : f.arcs) {
    json row = json::array();
    for (const auto& b : f.arcs) row.push_back(to_json(tord_symbolic(a.arc, b.arc)));
    matrix.push_back(row);
  }
  return {{"beta", to_json(f.beta)}, {"dimension", f.dimension()}, {"arcs", arcs}, {"matrix", matrix}};
}

json to_json(const LinkModel& m) {
  json matrix = json::array();
  for (const auto& row : m.matrix) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    matrix.push_back(r);
  }
  json zones = json::array();
  for (const auto& z : m.zones) {
    zones.push_back({{"name", z.name}, {"kind", to_string(z.kind)}, {"from", z.first}, {"to", z.last}});
  }
  return {{"beta", to_json(m.beta)}, {"arcs", m.arcs}, {"matrix", matrix}, {"zones", zones},
          {"assumptions", m.assumptions}};
}

LinkModel model_from_json(const json& j) {
  std::vector<std::string> arcs;
  for (const auto& a : field(j, "arcs")) arcs.push_back(text(a, "arc name"));
  TordMatrix matrix;
  for (const auto& row : field(j, "matrix")) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<Exponent> r;
    for (const auto& e : row) r.push_back(exponent_from_json(e));
    matrix.push_back(std::move(r));
  }
  std::vector<ZoneRef> zones;
  if (j.contains("zones")) {
    for (const auto& z : j.at("zones")) {
      zones.push_back({text(field(z, "name"), "zone name"), zone_kind(text(field(z, "kind"), "zone kind")),
                       integer<std::size_t>(field(z, "from"), "from"), integer<std::size_t>(field(z, "to"), "to")});
    }
  }
  return make_link_model(std::move(arcs), exponent_from_json(field(j, "beta")), std::move(matrix), std::move(zones));
}

std::string matrix_to_csv(const LinkModel& m) {
  std::ostringstream out;
  out << "arc";
  for (const auto& a : m.arcs) out << ',' << a;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << m.arcs[i];
    for (const auto& e : m.matrix[i]) out << ',' << e.to_string();
    out << '\n';
  }
  return out.str();
}

json to_json(const Verdict& v) {
  json out{{"verdict", v.guaranteed ? "guaranteed-equal" : "not-guaranteed"},
           {"assumptions", v.assumptions},
           {"reason", v.reason}};
  if (v.failing_pair) out["failing_pair"] = {v.failing_pair->first, v.failing_pair->second};
  return out;
}

ZoneCorrespondence correspondence_from_json(const json& j) {
  if (!j.is_object()) throw InputError("correspondence must be an object mapping zone names");
  ZoneCorrespondence out;
  for (const auto& [k, v] : j.items()) out[k] = text(v, "zone name");
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace mdh::io
