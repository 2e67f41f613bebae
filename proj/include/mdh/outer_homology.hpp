#pragma once

#include "mdh/exponent.hpp"
#include "mdh/profile.hpp"
#include "mdh/quotient.hpp"
#include "mdh/realization.hpp"
#include "mdh/snakes.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdh {

enum class ZoneKind { nodal, segment };

std::string_view to_string(ZoneKind kind);

/// A contiguous span [first, last] of link arcs.
struct ZoneRef {
  std::string name;
  ZoneKind kind = ZoneKind::nodal;
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const ZoneRef&, const ZoneRef&) = default;
};

/// Discretized Valette link: a path of arcs, consecutive arcs bounding the
/// elementary triangles, with the full tangency matrix.
struct LinkModel {
  std::vector<std::string> arcs;
  Exponent beta{1};
  std::vector<Exponent> edge_exponents;  // matrix[i][i+1]
  TordMatrix matrix;
  std::vector<ZoneRef> zones;
  std::vector<std::string> assumptions;

  std::size_t size() const { return arcs.size(); }
  const ZoneRef& zone(const std::string& name) const;  // throws InputError
};

inline constexpr const char* elementary_pair_assumption =
    "elementary pairs: each consecutive pair of arcs bounds an LNE triangle whose exponent is the pair's "
    "tangency order and whose arcs are b-equivalent to an endpoint below that order";

/// Matrix from tord_symbolic, zones from the arcs' zone tags (roles decide
/// the kind). Throws InputError if a consecutive pair has tord below beta.
LinkModel link_model_from_arcs(const ArcFamily& family);

/// Hand-supplied model: checks symmetry, infinite diagonal, entries >= beta,
/// ultrametricity, disjoint in-range zones, and that arcs of different zone
/// kinds are never tangent above beta. Records the elementary-pair assumption.
LinkModel make_link_model(std::vector<std::string> arcs, const Exponent& beta, TordMatrix matrix,
                          std::vector<ZoneRef> zones = {});

/// Throws InputError on the first defect of the model.
void validate_link_model(const LinkModel& model);

/// Quotient of the link path at b: arcs with tord > b (or tord = inf) are
/// merged, edges with exponent > b contracted. Two elementary triangles
/// (p, p+1) and (q, q+1) on four distinct arcs whose endpoints are pairwise
/// b-equivalent are the same triangle in the quotient and count once.
QuotientResult outer_quotient(const LinkModel& model, const Exponent& b);

/// Degree 0: number of b-classes of components; degree 1: outer_quotient rank;
/// degree >= 2: 0. DomainError for degree < 0 or b < 1.
int outer_rank(const LinkModel& model, const Exponent& b, int degree = 1);

/// Sampled over beta and the distinct finite matrix entries.
RankProfile outer_profile(const LinkModel& model, int degree = 1);

struct TargetSnake {
  ArcFamily arcs;
  std::optional<SnakeSpec> spec;  // empty for the bubble snake base case
  std::vector<SpectraGroup> groups;
  RankProfile expected;
};

/// Snake with profile Z^{k_m} on [beta, q_1), Z^{k_{m-1}} on [q_1, q_2), ...,
/// Z^{k_1} on [q_{m-1}, q_m) and 0 elsewhere. ks positive and strictly
/// increasing, qs strictly increasing above beta (PreconditionError otherwise).
TargetSnake build_target_snake(const std::vector<int>& ks, const std::vector<Exponent>& qs, const Exponent& beta);

/// Components of {j : tord(arc, j) >= alpha} along the link path.
int alpha_multiplicity(const LinkModel& model, std::size_t arc, const Exponent& alpha);

/// Distinct values above beta of tord(g, Z') = max over Z' for g in Z.
/// PreconditionError if the zones differ in kind or overlap.
std::vector<Exponent> subsegment_exponents(const LinkModel& model, const ZoneRef& z, const ZoneRef& zp);

/// Betweenness of tord(., Z') along Z among values above beta: for i < j < l
/// the middle value lies between the outer two. PreconditionError when no
/// value exceeds beta.
bool check_simple_contact(const LinkModel& model, const ZoneRef& z, const ZoneRef& zp);

using ZoneCorrespondence = std::map<std::string, std::string>;

struct Verdict {
  bool guaranteed = false;
  std::vector<std::string> assumptions;
  std::optional<std::pair<std::string, std::string>> failing_pair;
  std::string reason;
};

inline constexpr const char* word_proxy_assumption =
    "weak outer equivalence approximated by equal snake names up to renaming and reversal, with zones matched "
    "by the correspondence";

/// Sufficient test for equal outer profiles. The names must agree up to
/// renaming and reversal; then every pair of same-kind zones must have the
/// same subsegment exponents as its image. Without an explicit correspondence
/// zones map by position, read forwards and, when the names also agree that
/// way, backwards; either direction passing is enough.
/// InputError when the correspondence is not a kind-preserving bijection,
/// PreconditionError when a contact is not simple.
Verdict weak_equiv_same_homology(const SnakeInstance& a, const SnakeInstance& b,
                                 const std::optional<ZoneCorrespondence>& map = std::nullopt);

}  // namespace mdh
