#include "mdh/realization.hpp"

#include "mdh/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace mdh {
namespace {

using TermKey = std::pair<Exponent, int>;  // (exponent, axis)

std::map<TermKey, Rational> as_map(const std::vector<MonomialTerm>& terms) {
  std::map<TermKey, Rational> out;
  for (const auto& t : terms) out[{t.exp, t.axis}] += t.coeff;
  return out;
}

std::vector<MonomialTerm> difference(const MonomialArc& a, const MonomialArc& b) {
  auto m = as_map(a.terms());
  for (const auto& t : b.terms()) m[{t.exp, t.axis}] -= t.coeff;
  std::vector<MonomialTerm> out;
  for (const auto& [key, c] : m) {
    if (c.numerator() != 0) out.push_back({key.second, c, key.first});
  }
  return out;
}

double rational_to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void require_above(const Exponent& q, const Exponent& beta, const std::string& what) {
  if (!(q > beta) || q.is_infinite()) {
    throw PreconditionError(what + " = " + q.to_string() + " must be finite and exceed beta = " + beta.to_string());
  }
}

void require_beta(const Exponent& beta) {
  if (beta.is_infinite() || beta < Exponent(1)) {
    throw PreconditionError("beta = " + beta.to_string() + " must be finite and >= 1");
  }
}

}  // namespace

MonomialArc::MonomialArc() : terms_{{1, Rational(1), Exponent(1)}} {}

MonomialArc::MonomialArc(std::vector<MonomialTerm> terms) {
  for (const auto& t : terms) {
    if (t.axis < 1) throw InputError("arc term on axis " + std::to_string(t.axis) + "; axes start at 1");
    if (t.exp.is_infinite() || t.exp < Exponent(1)) {
      throw InputError("arc term exponent " + t.exp.to_string() + " must be finite and >= 1");
    }
  }
  for (const auto& [key, c] : as_map(terms)) {
    if (c.numerator() != 0) terms_.push_back({key.second, c, key.first});
  }
  const bool leading = std::any_of(terms_.begin(), terms_.end(), [](const MonomialTerm& t) {
    return t.axis == 1 && t.exp == Exponent(1) && t.coeff == Rational(1);
  });
  if (!leading) throw InputError("arc must contain the term t * e_1");
}

int MonomialArc::max_axis() const {
  int out = 1;
  for (const auto& t : terms_) out = std::max(out, t.axis);
  return out;
}

MonomialArc MonomialArc::plus(int axis, const Exponent& exp, const Rational& coeff) const {
  auto terms = terms_;
  terms.push_back({axis, coeff, exp});
  return MonomialArc(std::move(terms));
}

Exponent tord_symbolic(const MonomialArc& a, const MonomialArc& b) {
  const auto d = difference(a, b);
  return d.empty() ? Exponent::infinity() : d.front().exp;
}

std::vector<double> default_radii() { return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }

double tord_numeric(const MonomialArc& a, const MonomialArc& b, const std::vector<double>& radii) {
  if (radii.size() < 4) throw DomainError("numeric tangency order needs at least four radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw DomainError("radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw DomainError("radii must be strictly decreasing");
  }
  if (radii.front() / radii.back() < 1e3 * (1 - 1e-12)) throw DomainError("radii must span at least three decades");

  // The difference is formed symbolically so that cancellation is exact.
  const auto d = difference(a, b);
  if (d.empty()) return std::numeric_limits<double>::infinity();
  std::vector<double> xs, ys;
  for (double t : radii) {
    std::map<int, double> v;
    for (const auto& term : d) v[term.axis] += rational_to_double(term.coeff) * std::pow(t, term.exp.to_double());
    double norm2 = 0.0;
    for (const auto& [axis, x] : v) norm2 += x * x;
    xs.push_back(std::log(t));
    ys.push_back(0.5 * std::log(norm2));
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string_view to_string(ArcRole role) {
  switch (role) {
    case ArcRole::nodal: return "nodal";
    case ArcRole::segment: return "segment";
    case ArcRole::boundary: return "boundary";
    case ArcRole::interior: return "interior";
  }
  return "?";
}

int ArcFamily::dimension() const {
  int d = 1;
  for (const auto& a : arcs) d = std::max(d, a.arc.max_axis());
  return d;
}

std::size_t ArcFamily::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].name == name) return i;
  }
  throw InputError("no arc named '" + name + "'");
}

std::vector<MonomialArc> ArcFamily::monomials() const {
  std::vector<MonomialArc> out;
  for (const auto& a : arcs) out.push_back(a.arc);
  return out;
}

ArcFamily realize_snake_word(const SnakeSpec& spec) {
  validate_spec(spec);
  const auto spectra = singleton_spectra(spec);
  if (!spectra) throw PreconditionError("realization needs a singleton spectrum for every node");
  const auto m = spec.word.size();
  if (m <= 3) throw UnsupportedSizeError("snake names of length <= 3 are not realized");

  std::vector<MonomialArc> delta(m);
  std::map<std::string, std::size_t> first;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& w = spec.word[j];
    const int axis = static_cast<int>(j) + 1;
    auto it = first.find(w);
    if (j == 0) {
      first.emplace(w, 0);
    } else if (it == first.end()) {
      delta[j] = delta[0].plus(axis, spec.beta);
      first.emplace(w, j);
    } else {
      delta[j] = delta[it->second].plus(axis, spectra->at(w));
    }
  }
  ArcFamily out{spec.beta, {}};
  for (std::size_t j = 0; j < m; ++j) {
    out.arcs.push_back({"delta" + std::to_string(j + 1), ArcRole::nodal, delta[j], "N" + std::to_string(j + 1)});
    if (j + 1 < m) {
      out.arcs.push_back({"sigma" + std::to_string(j + 1), ArcRole::segment,
                          delta[0].plus(static_cast<int>(m + j + 1), spec.beta), "S" + std::to_string(j + 1)});
    }
  }
  return out;
}

ArcFamily realize_snake(const SnakeSpec& spec) {
  validate_spec(spec);
  if (!uniform_alpha(spec)) {
    throw PreconditionError("realize_snake needs one common singleton spectrum; use realize_snake_spectra");
  }
  return realize_snake_word(spec);
}

SnakeSpec gluing_spec(int k, const Exponent& beta, const std::vector<SpectraGroup>& groups) {
  require_beta(beta);
  int total = 0;
  for (const auto& g : groups) {
    if (g.size < 1) throw PreconditionError("spectra groups must be non-empty");
    require_above(g.q, beta, "group exponent");
    total += g.size;
  }
  if (total != k) {
    throw PreconditionError("spectra groups cover " + std::to_string(total) + " letters, expected " + std::to_string(k));
  }
  SnakeSpec spec{beta, make_gluing_word(k), {}};
  int letter = 1;
  for (const auto& g : groups) {
    for (int i = 0; i < g.size; ++i, ++letter) spec.spectra["x" + std::to_string(letter)] = {g.q};
  }
  return spec;
}

ArcFamily realize_snake_spectra(int k, const Exponent& beta, const std::vector<SpectraGroup>& groups) {
  return realize_snake_word(gluing_spec(k, beta, groups));
}

ArcFamily realize_nonsnake_bubble(int k, const Exponent& beta, const std::vector<Exponent>& alphas) {
  require_beta(beta);
  if (k < 2) throw PreconditionError("non-snake bubbles need k >= 2");
  if (alphas.size() != static_cast<std::size_t>(k)) {
    throw PreconditionError("expected " + std::to_string(k) + " exponents alpha_i");
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    require_above(alphas[i], beta, "alpha_" + std::to_string(i + 1));
    if (i > 0 && !(alphas[i - 1] < alphas[i])) throw PreconditionError("alphas must be strictly increasing");
  }
  const int m = 2 * k + 1;
  std::vector<MonomialArc> delta(static_cast<std::size_t>(m) + 1);  // 1-based
  for (int j = 2; j <= k + 1; ++j) delta[static_cast<std::size_t>(j)] = delta[1].plus(j, beta);
  for (int j = k + 2; j <= m; ++j) {
    const int partner = 2 * k + 2 - j;
    delta[static_cast<std::size_t>(j)] =
        delta[static_cast<std::size_t>(partner)].plus(j, alphas[static_cast<std::size_t>(partner - 1)]);
  }
  ArcFamily out{beta, {}};
  for (int j = 1; j <= m; ++j) {
    out.arcs.push_back({"delta" + std::to_string(j), ArcRole::nodal, delta[static_cast<std::size_t>(j)],
                        "N" + std::to_string(j)});
    if (j < m) {
      out.arcs.push_back({"sigma" + std::to_string(j), ArcRole::segment, delta[1].plus(m + j, beta),
                          "S" + std::to_string(j)});
    }
  }
  return out;
}

ArcFamily realize_bubble_snake(const Exponent& beta, const Exponent& alpha) {
  require_beta(beta);
  require_above(alpha, beta, "alpha");
  const MonomialArc t;
  auto gamma = [&](int i) { return t.plus(2, alpha, Rational(i % 2 ? -1 : 1)); };
  auto lambda = [&](int i) { return t.plus(2, beta, Rational(i % 2 ? -1 : 1)).plus(3, beta); };
  return ArcFamily{beta,
                   {{"gamma1", ArcRole::boundary, gamma(1), ""},
                    {"lambda1", ArcRole::interior, lambda(1), ""},
                    {"lambda2", ArcRole::interior, lambda(2), ""},
                    {"gamma2", ArcRole::boundary, gamma(2), ""}}};
}

void validate_contacts(const SnakeInstance& inst) {
  const int segments = static_cast<int>(inst.spec.word.size()) - 1;
  std::set<int> used;
  for (const auto& c : inst.contacts) {
    const auto where = "contact S" + std::to_string(c.first) + "-S" + std::to_string(c.second);
    if (c.first < 1 || c.second > segments || !(c.first < c.second)) {
      throw InputError(where + ": segments must satisfy 1 <= first < second <= " + std::to_string(segments));
    }
    if (!used.insert(c.first).second || !used.insert(c.second).second) {
      throw InputError(where + ": a segment takes part in at most one contact");
    }
    if (c.orders.empty()) throw InputError(where + ": no orders");
    for (const auto& q : c.orders) {
      if (q.is_infinite() || !(q > inst.spec.beta)) {
        throw InputError(where + ": order " + q.to_string() + " must be finite and exceed beta");
      }
    }
  }
}

ArcFamily realize_snake_instance(const SnakeInstance& inst) {
  auto base = realize_snake_word(inst.spec);
  validate_contacts(inst);
  if (inst.contacts.empty()) return base;

  const MonomialArc& d1 = base.arcs.front().arc;
  int next_axis = base.dimension() + 1;
  std::map<std::string, std::vector<NamedArc>> replacement;
  for (const auto& c : inst.contacts) {
    const auto a = "S" + std::to_string(c.first), b = "S" + std::to_string(c.second);
    for (std::size_t r = 0; r < c.orders.size(); ++r) {
      const auto s = d1.plus(next_axis++, inst.spec.beta);
      const auto suffix = "." + std::to_string(r + 1);
      replacement[a].push_back({"sigma" + std::to_string(c.first) + suffix, ArcRole::segment, s, a});
      replacement[b].push_back({"sigma" + std::to_string(c.second) + suffix, ArcRole::segment,
                                s.plus(next_axis++, c.orders[r]), b});
    }
  }
  ArcFamily out{base.beta, {}};
  for (auto& a : base.arcs) {
    auto it = replacement.find(a.zone);
    if (it == replacement.end()) {
      out.arcs.push_back(std::move(a));
    } else {
      out.arcs.insert(out.arcs.end(), it->second.begin(), it->second.end());
    }
  }
  return out;
}

ArcFamily realize_horn(const Exponent& beta) {
  require_beta(beta);
  const MonomialArc gamma;
  return ArcFamily{beta,
                   {{"gamma", ArcRole::boundary, gamma, ""},
                    {"lambda", ArcRole::interior, gamma.plus(2, beta), ""},
                    {"gamma'", ArcRole::boundary, gamma, ""}}};
}

}  // namespace mdh
