#include "frames/strata.hpp"

#include <algorithm>
#include <string>

#include "frames/errors.hpp"

namespace frames {

namespace {

std::string describe(StratumIndex s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

void require_in_domain(const FrameSpaceParams& params, StratumIndex s) {
  if (!in_domain(params, s)) {
    throw DomainError("stratum " + describe(s) + " is outside the domain for d=" +
                      std::to_string(params.d()) + ", n=" + std::to_string(params.n()));
  }
}

}  // namespace

FrameSpaceParams::FrameSpaceParams(Int d, Int n) : d_(d), n_(n) {
  if (d < 1) throw InvalidArgument("d must be at least 1, got " + std::to_string(d));
  if (n < 2) throw InvalidArgument("n must be at least 2, got " + std::to_string(n));
}

bool in_domain(const FrameSpaceParams& params, StratumIndex s) noexcept {
  return s.p >= 0 && s.q >= 0 && s.p + s.q <= params.n() && s.p + 2 * s.q <= params.d();
}

std::vector<StratumIndex> enumerate_domain(const FrameSpaceParams& params) {
  std::vector<StratumIndex> points;
  const Int p_max = std::min(params.d(), params.n());
  for (Int p = 0; p <= p_max; ++p) {
    const Int q_max = std::min(params.n() - p, (params.d() - p) / 2);
    for (Int q = 0; q <= q_max; ++q) points.push_back({p, q});
  }
  return points;
}

Int sigma_formula(const FrameSpaceParams& params, Int p, Int q) {
  const Int d = params.d();
  const Int n = params.n();
  Int num = 0;
  num = checked_add(num, checked_mul(2 * p, d));
  num = checked_add(num, checked_mul(2 * q, d));
  num = checked_add(num, checked_mul(2 * q, n));
  num = checked_sub(num, checked_mul(p, p));
  num = checked_sub(num, checked_mul(4 * q, p));
  num = checked_sub(num, checked_mul(3 * q, q));
  num = checked_add(num, p - q);
  if (num % 2 != 0) throw std::logic_error("sigma numerator is odd");
  return num / 2;
}

Int sigma(const FrameSpaceParams& params, StratumIndex s) {
  require_in_domain(params, s);
  return sigma_formula(params, s.p, s.q);
}

Int principal_value(const FrameSpaceParams& params) {
  return checked_sub(checked_mul(params.n(), params.d()), choose2(params.n()));
}

std::pair<BoundarySegment, BoundarySegment> boundary(const FrameSpaceParams& params) {
  const Int d = params.d();
  const Int n = params.n();
  BoundarySegment omega1{SegmentKind::Omega1, {}};
  BoundarySegment omega2{SegmentKind::Omega2, {}};
  for (Int q = 0; q <= std::min(d - n, n); ++q) omega1.points.push_back({n - q, q});
  for (Int q = std::max<Int>(d - n + 1, 0); q <= d / 2; ++q) omega2.points.push_back({d - 2 * q, q});
  return {std::move(omega1), std::move(omega2)};
}

std::vector<StratumIndex> boundary_points(const FrameSpaceParams& params) {
  auto [omega1, omega2] = boundary(params);
  std::vector<StratumIndex> points = std::move(omega1.points);
  points.insert(points.end(), omega2.points.begin(), omega2.points.end());
  return points;
}

bool on_boundary(const FrameSpaceParams& params, StratumIndex s) noexcept {
  if (!in_domain(params, s)) return false;
  return s.p == std::min(params.n() - s.q, params.d() - 2 * s.q);
}

Endpoints endpoints(const FrameSpaceParams& params) {
  const Int d = params.d();
  return {{std::min(d, params.n()), 0}, {d % 2, d / 2}};
}

SigmaMaximum maximize_sigma(const FrameSpaceParams& params) {
  const auto [p1, p2] = endpoints(params);
  SigmaMaximum best{sigma(params, p1), {p1}};
  if (p2 != p1 && in_domain(params, p2)) {
    const Int v2 = sigma(params, p2);
    if (v2 > best.max_value) {
      best = {v2, {p2}};
    } else if (v2 == best.max_value) {
      best.argmax.push_back(p2);
    }
  }
  std::sort(best.argmax.begin(), best.argmax.end());
  return best;
}

SigmaMaximum maximize_sigma_exhaustive(const FrameSpaceParams& params) {
  SigmaMaximum best{-1, {}};
  for (const auto s : enumerate_domain(params)) {
    const Int v = sigma(params, s);
    if (v > best.max_value) {
      best = {v, {s}};
    } else if (v == best.max_value) {
      best.argmax.push_back(s);
    }
  }
  return best;
}

int compare_to_parity_bound(Int d, Int n) {
  if (d % 2 == 0) {
    return compare_with_root_difference(d, checked_add(checked_mul(2, n), 1),
                                        checked_add(checked_mul(8, n), 1));
  }
  return compare_with_root_difference(d, checked_mul(2, n), checked_sub(checked_mul(8, n), 7));
}

MaximumCase maximum_case(const FrameSpaceParams& params) {
  const int sign = compare_to_parity_bound(params.d(), params.n());
  if (sign > 0) return MaximumCase::OnlyP1;
  if (sign == 0) return MaximumCase::BothEndpoints;
  return MaximumCase::OnlyP2;
}

bool is_endpoint_tie(const FrameSpaceParams& params) {
  return compare_to_parity_bound(params.d(), params.n()) == 0;
}

std::string_view to_string(PosetRelation relation) noexcept {
  switch (relation) {
    case PosetRelation::Below: return "below";
    case PosetRelation::NotBelow: return "not-below";
    case PosetRelation::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(PosetReason reason) noexcept {
  switch (reason) {
    case PosetReason::Reflexive: return "reflexive";
    case PosetReason::Componentwise: return "componentwise-deformation";
    case PosetReason::DichotomyToPrincipal: return "boundary-dichotomy";
    case PosetReason::SigmaNotIncreasing: return "dimension-not-increasing";
    case PosetReason::AnisotropicRankDrops: return "anisotropic-rank-decreases";
    case PosetReason::RankDrops: return "rank-decreases";
    case PosetReason::DistinctMaximal: return "lower-is-maximal";
    case PosetReason::Undecided: return "undecided";
  }
  return "undecided";
}

PosetVerdict poset_compare(const FrameSpaceParams& params, StratumIndex lower, StratumIndex upper) {
  require_in_domain(params, lower);
  require_in_domain(params, upper);
  PosetVerdict verdict{lower, upper, PosetRelation::Unknown, PosetReason::Undecided};
  auto decide = [&](PosetRelation relation, PosetReason reason) {
    verdict.relation = relation;
    verdict.reason = reason;
    return verdict;
  };

  if (lower == upper) return decide(PosetRelation::Below, PosetReason::Reflexive);
  if (lower.p <= upper.p && lower.q <= upper.q) {
    return decide(PosetRelation::Below, PosetReason::Componentwise);
  }

  const auto maximal = maximal_strata(params);
  const bool lower_maximal = std::find(maximal.begin(), maximal.end(), lower) != maximal.end();
  const StratumIndex principal{params.n(), 0};
  if (upper == principal && on_boundary(params, lower) && !lower_maximal) {
    return decide(PosetRelation::Below, PosetReason::DichotomyToPrincipal);
  }

  if (sigma(params, lower) >= sigma(params, upper)) {
    return decide(PosetRelation::NotBelow, PosetReason::SigmaNotIncreasing);
  }
  if (lower.p > upper.p) return decide(PosetRelation::NotBelow, PosetReason::AnisotropicRankDrops);
  if (lower.p + lower.q > upper.p + upper.q) {
    return decide(PosetRelation::NotBelow, PosetReason::RankDrops);
  }
  if (lower_maximal) return decide(PosetRelation::NotBelow, PosetReason::DistinctMaximal);
  return verdict;
}

std::vector<StratumIndex> maximal_strata(const FrameSpaceParams& params) {
  const Int floor_value = principal_value(params);
  std::vector<StratumIndex> result;
  for (const auto s : boundary_points(params)) {
    if (sigma(params, s) >= floor_value) result.push_back(s);
  }
  return result;
}

Int component_count(const FrameSpaceParams& params, StratumIndex s) {
  require_in_domain(params, s);
  const Int base = binomial(params.n(), s.p);
  if (s.p + 2 * s.q < params.d() || s.p == params.d()) return base;
  return checked_mul(2, base);
}

ComponentReport component_report(const FrameSpaceParams& params) {
  ComponentReport report{params, {}, 0, 0, false, std::nullopt};
  for (const auto s : maximal_strata(params)) {
    ComponentRecord record{s, sigma(params, s), component_count(params, s)};
    report.total_count = checked_add(report.total_count, record.count);
    report.variety_dimension = std::max(report.variety_dimension, record.dimension);
    report.components.push_back(record);
  }
  report.is_irreducible = report.total_count == 1;
  if (params.d() >= params.n()) report.principal_dimension = principal_value(params);
  return report;
}

}  // namespace frames
