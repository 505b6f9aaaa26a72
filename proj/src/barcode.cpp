#include "barlat/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "barlat/error.hpp"
#include "barlat/simd/kernels.hpp"

namespace barlat {

namespace {

void check_level(unsigned k) {
  if (k > kMaxPowerLevel) {
    throw Error(ErrorKind::TooLarge,
                "power level " + std::to_string(k) + " exceeds " +
                    std::to_string(kMaxPowerLevel));
  }
}

void check_label(const Barcode& barcode, std::size_t label) {
  if (label < 1 || label > barcode.size()) {
    throw Error(ErrorKind::InvalidLabel,
                "bar label " + std::to_string(label) + " outside 1.." +
                    std::to_string(barcode.size()));
  }
}

// Sample points sorted by value; equal values keep bar-major order.
std::vector<SamplePoint> sorted_samples(const Barcode& barcode, unsigned k) {
  auto points = sample_points(barcode, k);
  std::stable_sort(points.begin(), points.end(),
                   [](const SamplePoint& a, const SamplePoint& b) {
                     return a.value < b.value;
                   });
  return points;
}

}  // namespace

Barcode::Barcode(std::vector<Bar> bars) : bars_(std::move(bars)) {
  if (bars_.empty()) {
    throw Error(ErrorKind::InvalidBar, "a barcode needs at least one bar");
  }
  for (std::size_t i = 0; i < bars_.size(); ++i) {
    const Bar& bar = bars_[i];
    if (!std::isfinite(bar.birth) || !std::isfinite(bar.death) ||
        !(bar.birth < bar.death)) {
      throw Error(ErrorKind::InvalidBar,
                  "bar " + std::to_string(i + 1) +
                      " must satisfy birth < death with finite endpoints");
    }
  }
}

const Bar& Barcode::bar(std::size_t label) const {
  check_label(*this, label);
  return bars_[label - 1];
}

std::vector<double> Barcode::births() const {
  std::vector<double> out(bars_.size());
  std::transform(bars_.begin(), bars_.end(), out.begin(),
                 [](const Bar& b) { return b.birth; });
  return out;
}

std::vector<double> Barcode::deaths() const {
  std::vector<double> out(bars_.size());
  std::transform(bars_.begin(), bars_.end(), out.begin(),
                 [](const Bar& b) { return b.death; });
  return out;
}

Barcode Barcode::reordered(std::span<const std::size_t> order) const {
  if (order.size() != bars_.size()) {
    throw Error(ErrorKind::InvalidLabel, "reordering has the wrong length");
  }
  std::vector<bool> seen(bars_.size(), false);
  std::vector<Bar> out;
  out.reserve(bars_.size());
  for (std::size_t label : order) {
    check_label(*this, label);
    if (seen[label - 1]) {
      throw Error(ErrorKind::InvalidLabel, "reordering repeats a label");
    }
    seen[label - 1] = true;
    out.push_back(bars_[label - 1]);
  }
  return Barcode(std::move(out));
}

std::vector<SamplePoint> sample_points(const Barcode& barcode, unsigned k) {
  check_level(k);
  const std::size_t per_bar = (std::size_t{1} << k) + 1;
  const auto births = barcode.births();
  const auto deaths = barcode.deaths();
  std::vector<double> values(barcode.size() * per_bar);
  simd::dyadic_samples(births, deaths, k, values);
  std::vector<SamplePoint> out(values.size());
  for (std::size_t p = 0; p < values.size(); ++p) {
    out[p] = SamplePoint{values[p], p / per_bar + 1};
  }
  return out;
}

std::vector<SampleCollision> find_collisions(const Barcode& barcode,
                                             unsigned k, double eps,
                                             std::size_t limit) {
  if (!(eps >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "eps must be nonnegative");
  }
  std::vector<SampleCollision> out;
  const auto points = sorted_samples(barcode, k);
  for (std::size_t p = 1; p < points.size() && out.size() < limit; ++p) {
    if (points[p].value - points[p - 1].value <= eps) {
      out.push_back({points[p - 1], points[p]});
    }
  }
  return out;
}

bool is_k_strict(const Barcode& barcode, unsigned k, double eps) {
  return find_collisions(barcode, k, eps, 1).empty();
}

int crossing_number(const Barcode& barcode, std::size_t i, std::size_t j) {
  check_label(barcode, i);
  check_label(barcode, j);
  if (i == j) {
    throw Error(ErrorKind::InvalidLabel, "crossing number needs two bars");
  }
  if (!is_k_strict(barcode, 0)) {
    throw Error(ErrorKind::NotStrict, "barcode is not strict");
  }
  Bar first = barcode.bar(i);
  Bar second = barcode.bar(j);
  if (second.birth < first.birth) std::swap(first, second);
  if (first.death < second.birth) return 0;
  if (first.death < second.death) return 1;
  return 2;
}

bool IntervalGraph::has_edge(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::pair{i, j});
}

bool IntervalGraph::connected() const {
  if (vertex_count <= 1) return true;
  std::vector<std::size_t> parent(vertex_count + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count;
  for (const auto& [a, b] : edges) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

IntervalGraph interval_graph(const Barcode& barcode) {
  IntervalGraph graph;
  graph.vertex_count = barcode.size();
  const auto bars = barcode.bars();
  for (std::size_t i = 0; i < bars.size(); ++i) {
    for (std::size_t j = i + 1; j < bars.size(); ++j) {
      if (std::max(bars[i].birth, bars[j].birth) <
          std::min(bars[i].death, bars[j].death)) {
        graph.edges.emplace_back(i + 1, j + 1);
      }
    }
  }
  return graph;
}

Barcode affine_transform(const Barcode& barcode, double alpha, double delta) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) {
    throw Error(ErrorKind::InvalidScale, "alpha must be finite and positive");
  }
  if (!std::isfinite(delta)) {
    throw Error(ErrorKind::InvalidArgument, "delta must be finite");
  }
  std::vector<Bar> out;
  out.reserve(barcode.size());
  for (const Bar& bar : barcode.bars()) {
    out.push_back({alpha * bar.birth + delta, alpha * bar.death + delta});
  }
  return Barcode(std::move(out));
}

std::vector<std::size_t> birth_order(const Barcode& barcode) {
  std::vector<std::size_t> labels(barcode.size());
  std::iota(labels.begin(), labels.end(), 1);
  const auto bars = barcode.bars();
  std::stable_sort(labels.begin(), labels.end(),
                   [&](std::size_t a, std::size_t b) {
                     return bars[a - 1].birth < bars[b - 1].birth;
                   });
  return labels;
}

std::size_t containing_bar(const Barcode& barcode) {
  const auto bars = barcode.bars();
  for (std::size_t c = 0; c < bars.size(); ++c) {
    const bool contains_all =
        std::all_of(bars.begin(), bars.end(), [&](const Bar& other) {
          return bars[c].birth <= other.birth && bars[c].death >= other.death;
        });
    if (contains_all) return c + 1;
  }
  return 0;
}

}  // namespace barlat
