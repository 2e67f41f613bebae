#pragma once

#include "mdh/exponent.hpp"

#include <functional>
#include <span>
#include <vector>

namespace mdh {

/// One row of a case table: rank on [lower, upper). A row with upper = inf also
/// covers the point b = inf unless a separate row [inf, inf] is given.
struct ProfileCase {
  Exponent lower;
  Exponent upper;
  int rank = 0;
};

/// A finite interval of a profile, as exposed for reporting.
struct ProfileInterval {
  Exponent from;
  Exponent to;  // exclusive; inf for the last interval
  int rank = 0;
};

/// Step function b -> rank on the resolution axis [1, inf].
///
/// Stored as strictly increasing finite breakpoints starting at 1, one rank
/// per half-open interval [breakpoint_i, breakpoint_{i+1}) (the last one
/// extends to inf, exclusive), and a separate rank at the point inf.
/// Adjacent intervals always carry distinct ranks.
class RankProfile {
 public:
  /// The constant-zero profile.
  RankProfile();

  /// Canonicalizes (merges equal neighbours). Throws InputError if the
  /// breakpoints are not finite, strictly increasing and starting at 1, or if
  /// a rank is negative.
  RankProfile(std::vector<Exponent> breakpoints, std::vector<int> ranks, int at_infinity);

  static RankProfile constant(int rank);

  const std::vector<Exponent>& breakpoints() const { return breakpoints_; }
  const std::vector<int>& ranks() const { return ranks_; }
  int at_infinity() const { return at_infinity_; }

  std::vector<ProfileInterval> intervals() const;

  /// Rank at b. Throws DomainError when b < 1.
  int eval(const Exponent& b) const;

  /// Adds delta to the rank on [lo, hi); the value at inf is untouched.
  RankProfile add_on_interval(const Exponent& lo, const Exponent& hi, int delta) const;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;

 private:
  std::vector<Exponent> breakpoints_;
  std::vector<int> ranks_;
  int at_infinity_ = 0;
};

/// Builds a canonical profile from a case table covering [1, inf] exactly once.
/// Empty rows [x, x) are ignored. Throws CoverageError on gaps, overlaps or
/// inverted rows.
RankProfile profile_from_cases(std::span<const ProfileCase> cases);

/// Samples `rank_at` at the left end of every interval cut by the candidate
/// breakpoints (values below 1 and infinite candidates are ignored) and at inf.
RankProfile profile_from_samples(std::vector<Exponent> candidates,
                                 const std::function<int(const Exponent&)>& rank_at);

}  // namespace mdh
