#pragma once

#include "mdh/exponent.hpp"
#include "mdh/snakes.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mdh {

struct MonomialTerm {
  int axis = 1;  // 1-based index of the basis vector e_axis
  Rational coeff{1};
  Exponent exp{1};
  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

/// Arc t -> sum coeff * t^exp * e_axis. Terms are merged per (axis, exponent),
/// zero coefficients dropped and the rest sorted by (exponent, axis). The term
/// t * e_1 must be present, so the arc is parameterized by distance to the
/// origin up to first order; other terms need exponent >= 1.
class MonomialArc {
 public:
  MonomialArc();  // t * e_1
  explicit MonomialArc(std::vector<MonomialTerm> terms);

  const std::vector<MonomialTerm>& terms() const { return terms_; }
  int max_axis() const;

  /// This arc plus coeff * t^exp * e_axis.
  MonomialArc plus(int axis, const Exponent& exp, const Rational& coeff = Rational(1)) const;

  friend bool operator==(const MonomialArc&, const MonomialArc&) = default;

 private:
  std::vector<MonomialTerm> terms_;
};

/// Smallest exponent at which the coefficient vectors differ; inf when equal.
Exponent tord_symbolic(const MonomialArc& a, const MonomialArc& b);

/// 10^-1, ..., 10^-6.
std::vector<double> default_radii();

/// Least-squares slope of log |a(t) - b(t)| against log t. The radii must be
/// positive, strictly decreasing, at least four and spanning three decades
/// (DomainError otherwise). Identical arcs give +infinity.
double tord_numeric(const MonomialArc& a, const MonomialArc& b, const std::vector<double>& radii = default_radii());

enum class ArcRole { nodal, segment, boundary, interior };

std::string_view to_string(ArcRole role);

struct NamedArc {
  std::string name;
  ArcRole role = ArcRole::interior;
  MonomialArc arc;
  std::string zone;  // "N3", "S2", ... for snake constructions, empty otherwise
};

/// An ordered arc family: consecutive arcs bound the triangles of the surface.
struct ArcFamily {
  Exponent beta{1};
  std::vector<NamedArc> arcs;

  std::size_t size() const { return arcs.size(); }
  int dimension() const;
  std::size_t index_of(const std::string& name) const;  // throws InputError
  std::vector<MonomialArc> monomials() const;
};

/// Realization of a snake name with a common singleton spectrum {alpha}:
/// delta_1 = t e_1; a first occurrence at j > 1 gives delta_j = delta_1 + t^beta e_j;
/// a repeat gives delta_j = delta_r + t^alpha e_j with r the first occurrence of
/// the letter; sigma_j = delta_1 + t^beta e_{m+j}. Order delta_1, sigma_1, ..., delta_m.
ArcFamily realize_snake(const SnakeSpec& spec);

/// Same construction with per-letter singleton spectra.
ArcFamily realize_snake_word(const SnakeSpec& spec);

struct SpectraGroup {
  int size = 1;
  Exponent q;
};

/// Per-letter spectra for W_k: the first group's size letters (in order x1, x2, ...)
/// get q of the first group, and so on.
SnakeSpec gluing_spec(int k, const Exponent& beta, const std::vector<SpectraGroup>& groups);

/// realize_snake_word on make_gluing_word(k) with grouped spectra.
ArcFamily realize_snake_spectra(int k, const Exponent& beta, const std::vector<SpectraGroup>& groups);

/// The non-snake bubble with m = 2k + 1 nodal arcs delta_j and m - 1 arcs
/// sigma_i, arranged delta_1, sigma_1, ..., delta_m, so that
/// tord(delta_i, delta_{2k+2-i}) = alphas[i-1] for i <= k and beta otherwise.
ArcFamily realize_nonsnake_bubble(int k, const Exponent& beta, const std::vector<Exponent>& alphas);

/// gamma_1, lambda_1, lambda_2, gamma_2 with gamma_i = (t, (-1)^i t^alpha, 0) and
/// lambda_i = (t, (-1)^i t^beta, t^beta).
ArcFamily realize_bubble_snake(const Exponent& beta, const Exponent& alpha);

/// Tangency between two segments of a snake: segment `first` is sampled by
/// arcs s_r = delta_1 + t^beta e (fresh axes) and segment `second` by
/// s_r + t^{orders[r]} e' (fresh axes), both replacing the single sigma arc.
struct SegmentContact {
  int first = 1;   // 1-based segment index
  int second = 2;  // 1-based, > first
  std::vector<Exponent> orders;
};

struct SnakeInstance {
  SnakeSpec spec;
  std::vector<SegmentContact> contacts;
};

/// Throws InputError for out-of-range or reused segments, empty order lists or
/// orders not above beta.
void validate_contacts(const SnakeInstance& inst);

/// realize_snake_word plus the segment refinements of every contact.
ArcFamily realize_snake_instance(const SnakeInstance& inst);

/// A horn as a closed chain gamma, lambda, gamma: two beta-triangles sharing
/// both boundary arcs, gamma = t e_1 and lambda = t e_1 + t^beta e_2.
ArcFamily realize_horn(const Exponent& beta);

}  // namespace mdh
