#include "mdh/profile.hpp"

#include "mdh/errors.hpp"

#include <algorithm>
#include <optional>

namespace mdh {
namespace {

void canonicalize(std::vector<Exponent>& bps, std::vector<int>& ranks) {
  std::vector<Exponent> out_bps;
  std::vector<int> out_ranks;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (!out_ranks.empty() && out_ranks.back() == ranks[i]) continue;
    out_bps.push_back(bps[i]);
    out_ranks.push_back(ranks[i]);
  }
  bps = std::move(out_bps);
  ranks = std::move(out_ranks);
}

}  // namespace

RankProfile::RankProfile() : breakpoints_{Exponent(1)}, ranks_{0}, at_infinity_(0) {}

RankProfile::RankProfile(std::vector<Exponent> breakpoints, std::vector<int> ranks, int at_infinity)
    : breakpoints_(std::move(breakpoints)), ranks_(std::move(ranks)), at_infinity_(at_infinity) {
  if (breakpoints_.empty() || breakpoints_.size() != ranks_.size()) {
    throw InputError("profile needs one rank per breakpoint");
  }
  if (breakpoints_.front() != Exponent(1)) throw InputError("profile must start at b = 1");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i].is_infinite()) throw InputError("profile breakpoints must be finite");
    if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i])) {
      throw InputError("profile breakpoints must be strictly increasing");
    }
    if (ranks_[i] < 0) throw InputError("profile ranks must be non-negative");
  }
  if (at_infinity_ < 0) throw InputError("profile ranks must be non-negative");
  canonicalize(breakpoints_, ranks_);
}

RankProfile RankProfile::constant(int rank) { return RankProfile({Exponent(1)}, {rank}, rank); }

std::vector<ProfileInterval> RankProfile::intervals() const {
  std::vector<ProfileInterval> out;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const Exponent to = i + 1 < breakpoints_.size() ? breakpoints_[i + 1] : Exponent::infinity();
    out.push_back({breakpoints_[i], to, ranks_[i]});
  }
  return out;
}

int RankProfile::eval(const Exponent& b) const {
  if (b < Exponent(1)) throw DomainError("resolution b = " + b.to_string() + " is below 1");
  if (b.is_infinite()) return at_infinity_;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), b);
  return ranks_[static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1];
}

RankProfile RankProfile::add_on_interval(const Exponent& lo, const Exponent& hi, int delta) const {
  if (lo < Exponent(1) || !(lo < hi)) {
    throw DomainError("interval [" + lo.to_string() + ", " + hi.to_string() + ") is not a valid sub-interval of [1, inf)");
  }
  if (delta == 0) return *this;

  // Split at lo and hi, then shift every piece inside [lo, hi).
  std::vector<Exponent> bps = breakpoints_;
  std::vector<int> ranks = ranks_;
  auto split = [&](const Exponent& at) {
    if (at.is_infinite()) return;
    auto it = std::lower_bound(bps.begin(), bps.end(), at);
    if (it != bps.end() && *it == at) return;
    const auto pos = static_cast<std::size_t>(std::distance(bps.begin(), it));
    bps.insert(it, at);
    ranks.insert(ranks.begin() + static_cast<std::ptrdiff_t>(pos), ranks[pos - 1]);
  };
  split(lo);
  split(hi);
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (bps[i] < lo || !(bps[i] < hi)) continue;
    ranks[i] += delta;
    if (ranks[i] < 0) {
      throw ArithmeticError("rank would become negative on [" + lo.to_string() + ", " + hi.to_string() + ")");
    }
  }
  return RankProfile(std::move(bps), std::move(ranks), at_infinity_);
}

RankProfile profile_from_cases(std::span<const ProfileCase> cases) {
  std::vector<ProfileCase> rows(cases.begin(), cases.end());
  std::optional<int> point_at_infinity;
  std::vector<ProfileCase> finite_rows;
  for (const auto& row : rows) {
    if (row.rank < 0) throw CoverageError("negative rank in case table");
    if (row.lower.is_infinite()) {
      if (!row.upper.is_infinite()) throw CoverageError("row starting at inf must end at inf");
      if (point_at_infinity) throw CoverageError("the point inf is covered twice");
      point_at_infinity = row.rank;
      continue;
    }
    if (row.upper < row.lower) {
      throw CoverageError("inverted row [" + row.lower.to_string() + ", " + row.upper.to_string() + ")");
    }
    if (row.upper == row.lower) continue;  // [x, x) is empty, e.g. [1, beta) with beta = 1
    finite_rows.push_back(row);
  }
  if (finite_rows.empty()) throw CoverageError("case table does not cover [1, inf)");
  std::sort(finite_rows.begin(), finite_rows.end(),
            [](const ProfileCase& a, const ProfileCase& b) { return a.lower < b.lower; });

  if (finite_rows.front().lower != Exponent(1)) {
    throw CoverageError(finite_rows.front().lower < Exponent(1) ? "case table starts below 1"
                                                                : "gap in coverage before " +
                                                                      finite_rows.front().lower.to_string());
  }
  std::vector<Exponent> bps;
  std::vector<int> ranks;
  for (std::size_t i = 0; i < finite_rows.size(); ++i) {
    const auto& row = finite_rows[i];
    if (i > 0) {
      const auto& prev = finite_rows[i - 1].upper;
      if (row.lower < prev) throw CoverageError("overlap at " + row.lower.to_string());
      if (prev < row.lower) throw CoverageError("gap in coverage on [" + prev.to_string() + ", " + row.lower.to_string() + ")");
    }
    bps.push_back(row.lower);
    ranks.push_back(row.rank);
  }
  if (finite_rows.back().upper.is_finite()) {
    throw CoverageError("gap in coverage after " + finite_rows.back().upper.to_string());
  }
  const int at_inf = point_at_infinity.value_or(finite_rows.back().rank);
  return RankProfile(std::move(bps), std::move(ranks), at_inf);
}

RankProfile profile_from_samples(std::vector<Exponent> candidates,
                                 const std::function<int(const Exponent&)>& rank_at) {
  candidates.push_back(Exponent(1));
  std::erase_if(candidates, [](const Exponent& e) { return e.is_infinite() || e < Exponent(1); });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<int> ranks;
  ranks.reserve(candidates.size());
  for (const auto& b : candidates) ranks.push_back(rank_at(b));
  const int at_inf = rank_at(Exponent::infinity());
  return RankProfile(std::move(candidates), std::move(ranks), at_inf);
}

}  // namespace mdh
