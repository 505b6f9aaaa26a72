#include "barlat/distances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "barlat/error.hpp"
#include "barlat/multiperm.hpp"
#include "barlat/rng.hpp"
#include "barlat/simd/kernels.hpp"

namespace barlat {

namespace {

constexpr std::size_t kDiagonal = MatchedPair::kDiagonal;

// Augmented bipartite problem of size n + m. Left vertices: bars of `a`, then
// one diagonal slot per bar of `b`. Right vertices: bars of `b`, then one
// diagonal slot per bar of `a`.
struct AugmentedCosts {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> bar_costs;   // n x m, row-major
  std::vector<double> diag_a;      // n
  std::vector<double> diag_b;      // m

  AugmentedCosts(const Barcode& a, const Barcode& b)
      : n(a.size()), m(b.size()), bar_costs(a.size() * b.size()) {
    simd::linf_costs(a.births(), a.deaths(), b.births(), b.deaths(), bar_costs);
    for (const Bar& bar : a.bars()) diag_a.push_back(diagonal_cost(bar));
    for (const Bar& bar : b.bars()) diag_b.push_back(diagonal_cost(bar));
  }

  std::size_t size() const { return n + m; }

  // Cost of (left, right) or NaN when the edge does not exist. Bars are only
  // joined to their own diagonal slot.
  double edge(std::size_t left, std::size_t right) const {
    if (left < n && right < m) return bar_costs[left * m + right];
    if (left < n) return right - m == left ? diag_a[left] : std::nan("");
    if (right < m) return left - n == right ? diag_b[right] : std::nan("");
    return 0.0;
  }

  MatchedPair decode(std::size_t left, std::size_t right) const {
    if (left < n && right < m) return {left + 1, right + 1, edge(left, right)};
    if (left < n) return {left + 1, kDiagonal, diag_a[left]};
    if (right < m) return {kDiagonal, right + 1, diag_b[right]};
    return {kDiagonal, kDiagonal, 0.0};
  }
};

Matching make_matching(const AugmentedCosts& costs,
                       const std::vector<std::size_t>& right_of_left) {
  Matching matching;
  for (std::size_t left = 0; left < right_of_left.size(); ++left) {
    auto pair = costs.decode(left, right_of_left[left]);
    if (pair.left == kDiagonal && pair.right == kDiagonal) continue;
    matching.pairs.push_back(pair);
  }
  std::sort(matching.pairs.begin(), matching.pairs.end(),
            [](const MatchedPair& x, const MatchedPair& y) {
              return std::pair{x.left, x.right} < std::pair{y.left, y.right};
            });
  return matching;
}

// Kuhn's augmenting paths restricted to edges of cost <= threshold.
bool perfect_matching_within(const AugmentedCosts& costs, double threshold,
                             std::vector<std::size_t>& right_of_left) {
  const std::size_t size = costs.size();
  std::vector<std::vector<std::size_t>> adjacency(size);
  for (std::size_t l = 0; l < size; ++l) {
    for (std::size_t r = 0; r < size; ++r) {
      const double c = costs.edge(l, r);
      if (!std::isnan(c) && c <= threshold) adjacency[l].push_back(r);
    }
  }
  std::vector<std::size_t> left_of_right(size, kDiagonal);
  std::vector<char> visited(size);
  auto augment = [&](auto&& self, std::size_t l) -> bool {
    for (std::size_t r : adjacency[l]) {
      if (visited[r]) continue;
      visited[r] = 1;
      if (left_of_right[r] == kDiagonal || self(self, left_of_right[r])) {
        left_of_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (std::size_t l = 0; l < size; ++l) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, l)) return false;
  }
  right_of_left.assign(size, kDiagonal);
  for (std::size_t r = 0; r < size; ++r) right_of_left[left_of_right[r]] = r;
  return true;
}

// Minimum-cost assignment on a dense square matrix (shortest augmenting
// paths with potentials). Returns the column assigned to each row.
std::vector<std::size_t> min_cost_assignment(const std::vector<double>& cost,
                                             std::size_t size) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(size + 1, 0.0), v(size + 1, 0.0);
  std::vector<std::size_t> row_of_col(size + 1, 0), way(size + 1, 0);
  for (std::size_t row = 1; row <= size; ++row) {
    row_of_col[0] = row;
    std::size_t col0 = 0;
    std::vector<double> min_slack(size + 1, inf);
    std::vector<char> used(size + 1, 0);
    do {
      used[col0] = 1;
      const std::size_t row0 = row_of_col[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= size; ++col) {
        if (used[col]) continue;
        const double slack =
            cost[(row0 - 1) * size + (col - 1)] - u[row0] - v[col];
        if (slack < min_slack[col]) {
          min_slack[col] = slack;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= size; ++col) {
        if (used[col]) {
          u[row_of_col[col]] += delta;
          v[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> col_of_row(size, 0);
  for (std::size_t col = 1; col <= size; ++col) {
    col_of_row[row_of_col[col] - 1] = col - 1;
  }
  return col_of_row;
}

void check_q(double q) {
  if (!std::isfinite(q) || !(q >= 1.0)) {
    throw Error(ErrorKind::InvalidQ, "q must be finite and at least 1");
  }
}

}  // namespace

double diagonal_cost(const Bar& bar) noexcept {
  return (bar.death - bar.birth) / 2.0;
}

double pair_cost(const Bar& a, const Bar& b) noexcept {
  return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

double bottleneck_cost(const Matching& matching) noexcept {
  double worst = 0.0;
  for (const auto& pair : matching.pairs) worst = std::max(worst, pair.cost);
  return worst;
}

double wasserstein_cost(const Matching& matching, double q) {
  check_q(q);
  double total = 0.0;
  for (const auto& pair : matching.pairs) total += std::pow(pair.cost, q);
  return std::pow(total, 1.0 / q);
}

DistanceResult bottleneck(const Barcode& a, const Barcode& b) {
  const AugmentedCosts costs(a, b);
  std::vector<double> candidates = costs.bar_costs;
  candidates.insert(candidates.end(), costs.diag_a.begin(), costs.diag_a.end());
  candidates.insert(candidates.end(), costs.diag_b.begin(), costs.diag_b.end());
  candidates.push_back(0.0);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // Matching every bar to the diagonal is always feasible at the largest
  // diagonal cost, so the last candidate succeeds.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  std::vector<std::size_t> best;
  if (!perfect_matching_within(costs, candidates[hi], best)) {
    throw Error(ErrorKind::Internal, "no perfect matching at the largest cost");
  }
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<std::size_t> attempt;
    if (perfect_matching_within(costs, candidates[mid], attempt)) {
      hi = mid;
      best = std::move(attempt);
    } else {
      lo = mid + 1;
    }
  }
  DistanceResult result;
  result.witness = make_matching(costs, best);
  result.distance = bottleneck_cost(result.witness);
  result.witness.cost = result.distance;
  return result;
}

DistanceResult wasserstein(const Barcode& a, const Barcode& b, double q) {
  check_q(q);
  const AugmentedCosts costs(a, b);
  const std::size_t size = costs.size();
  std::vector<double> matrix(size * size, 0.0);
  for (std::size_t l = 0; l < size; ++l) {
    for (std::size_t r = 0; r < size; ++r) {
      double c = 0.0;
      if (l < costs.n && r < costs.m) {
        c = costs.bar_costs[l * costs.m + r];
      } else if (l < costs.n) {
        c = costs.diag_a[l];
      } else if (r < costs.m) {
        c = costs.diag_b[r];
      }
      matrix[l * size + r] = std::pow(c, q);
    }
  }
  const auto assignment = min_cost_assignment(matrix, size);
  DistanceResult result;
  result.witness = make_matching(costs, assignment);
  result.distance = wasserstein_cost(result.witness, q);
  result.witness.cost = result.distance;
  return result;
}

Alignment align(const Barcode& a, const Barcode& b) {
  const Bar& first_a = a.bar(birth_order(a).front());
  const Bar& first_b = b.bar(birth_order(b).front());
  const double length_b = first_b.death - first_b.birth;
  const double length_a = first_a.death - first_a.birth;
  if (!(length_b > 0.0) || !(length_a > 0.0)) {
    throw Error(ErrorKind::DegenerateBar, "earliest-born bar has zero length");
  }
  Alignment out;
  out.alpha = length_a / length_b;
  out.delta = first_a.birth - out.alpha * first_b.birth;
  return out;
}

ConvergenceReport check_convergence_bounds(const Barcode& a, const Barcode& b,
                                           unsigned k, double q) {
  check_q(q);
  std::vector<std::string> failures;
  const bool strict_a = is_k_strict(a, k);
  const bool strict_b = is_k_strict(b, k);
  if (!strict_a) failures.push_back("first barcode is not k-strict");
  if (!strict_b) failures.push_back("second barcode is not k-strict");
  if (a.size() != b.size()) failures.push_back("bar counts differ");
  if (strict_a && strict_b && a.size() == b.size() &&
      power_invariant(a, k) != power_invariant(b, k)) {
    failures.push_back("power-k invariants differ");
  }
  const std::size_t star = containing_bar(a);
  if (star == 0) failures.push_back("no bar contains all others");
  if (!failures.empty()) {
    std::string message = "bound check preconditions failed:";
    for (const auto& f : failures) message += " " + f + ";";
    throw Error(ErrorKind::PreconditionFailed, message);
  }

  ConvergenceReport report;
  const Alignment t = align(a, b);
  report.alpha = t.alpha;
  report.delta = t.delta;
  const Barcode moved = affine_transform(b, t.alpha, t.delta);
  report.d_inf = bottleneck(a, moved).distance;
  report.d_q = wasserstein(a, moved, q).distance;
  const double span = std::fabs(a.bar(star).death - a.bar(star).birth);
  const double cell = std::ldexp(span, -static_cast<int>(k));
  report.bound_inf = cell;
  report.bound_q =
      std::pow(static_cast<double>(a.size() - 1), 1.0 / q) * cell;
  const double slack = kBoundTolerance * span;
  report.pass = report.d_inf <= report.bound_inf + slack &&
                report.d_q <= report.bound_q + slack;
  return report;
}

Barcode perturb_preserving_invariant(const Barcode& barcode, double magnitude,
                                     unsigned k, std::uint64_t seed,
                                     std::size_t max_retries) {
  if (!std::isfinite(magnitude) || magnitude < 0.0) {
    throw Error(ErrorKind::InvalidArgument,
                "magnitude must be finite and nonnegative");
  }
  const auto target = power_invariant(barcode, k);
  if (magnitude == 0.0) return barcode;
  SplitMix64 rng(seed);
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Bar> bars;
    bars.reserve(barcode.size());
    bool valid = true;
    for (const Bar& bar : barcode.bars()) {
      const double birth = bar.birth + magnitude * (2.0 * rng.uniform() - 1.0);
      const double death = bar.death + magnitude * (2.0 * rng.uniform() - 1.0);
      valid = valid && birth < death;
      bars.push_back({birth, death});
    }
    if (!valid) continue;
    Barcode candidate(std::move(bars));
    if (is_k_strict(candidate, k) && power_invariant(candidate, k) == target) {
      return candidate;
    }
  }
  throw Error(ErrorKind::RetriesExhausted,
              "no invariant-preserving perturbation found in " +
                  std::to_string(max_retries) + " attempts");
}

EndpointRange invariant_endpoint_range(const Barcode& barcode, unsigned k,
                                       std::size_t label, bool move_death) {
  const Bar& bar = barcode.bar(label);
  const auto points = sample_points(barcode, k);
  std::vector<double> others;
  others.reserve(points.size());
  for (const auto& p : points) {
    if (p.label != label) others.push_back(p.value);
  }
  std::sort(others.begin(), others.end());

  const double inf = std::numeric_limits<double>::infinity();
  EndpointRange range{-inf, inf};
  if (move_death) {
    range.lo = bar.birth;
  } else {
    range.hi = bar.death;
  }
  const std::size_t steps = std::size_t{1} << k;
  const double scale = std::ldexp(1.0, -static_cast<int>(k));
  for (std::size_t l = 0; l <= steps; ++l) {
    const double t = static_cast<double>(l) * scale;
    // Sample point as slope * x + fixed, x the moving endpoint.
    const double slope = move_death ? t : 1.0 - t;
    if (slope == 0.0) continue;
    const double fixed = move_death ? bar.birth * (1.0 - t) : bar.death * t;
    const double current = points[(label - 1) * (steps + 1) + l].value;
    const auto above = std::upper_bound(others.begin(), others.end(), current);
    if (above != others.end()) {
      range.hi = std::min(range.hi, (*above - fixed) / slope);
    }
    if (above != others.begin()) {
      range.lo = std::max(range.lo, (*std::prev(above) - fixed) / slope);
    }
  }
  return range;
}

Barcode push_within_invariant(const Barcode& barcode, unsigned k,
                              double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "fraction must lie in [0, 1)");
  }
  const Multiperm reference = labeled_word(barcode, k);
  const std::size_t anchor = birth_order(barcode).front();
  std::vector<std::pair<std::size_t, bool>> endpoints;
  for (std::size_t label = 1; label <= barcode.size(); ++label) {
    if (label == anchor) continue;
    endpoints.emplace_back(label, false);
    endpoints.emplace_back(label, true);
  }
  SplitMix64 rng(seed);
  for (std::size_t i = endpoints.size(); i > 1; --i) {
    std::swap(endpoints[i - 1], endpoints[rng.below(i)]);
  }

  std::vector<Bar> bars(barcode.bars().begin(), barcode.bars().end());
  for (const auto& [label, move_death] : endpoints) {
    const bool upward = rng.uniform() < 0.5;
    const Barcode current(bars);
    const auto range = invariant_endpoint_range(current, k, label, move_death);
    double& endpoint = move_death ? bars[label - 1].death : bars[label - 1].birth;
    const double before = endpoint;
    double bound = upward ? range.hi : range.lo;
    if (!std::isfinite(bound)) bound = upward ? range.lo : range.hi;
    if (!std::isfinite(bound)) continue;
    endpoint = before + fraction * (bound - before);
    const Bar& moved = bars[label - 1];
    bool keep = moved.birth < moved.death;
    if (keep) {
      try {
        keep = labeled_word(Barcode(bars), k) == reference;
      } catch (const Error&) {
        keep = false;
      }
    }
    if (!keep) endpoint = before;
  }
  return Barcode(std::move(bars));
}

}  // namespace barlat
