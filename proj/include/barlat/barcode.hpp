#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace barlat {

/// A single interval (birth, death) with birth < death, both finite.
struct Bar {
  double birth = 0.0;
  double death = 0.0;

  double length() const noexcept { return death - birth; }
  friend bool operator==(const Bar&, const Bar&) = default;
};

/// Non-empty, ordered list of bars. Bar labels are 1-based positions; the
/// order is never changed implicitly.
class Barcode {
 public:
  /// Throws Error(InvalidBar) for an empty list or a bar with
  /// birth >= death or a non-finite endpoint.
  explicit Barcode(std::vector<Bar> bars);
  Barcode(std::initializer_list<Bar> bars)
      : Barcode(std::vector<Bar>(bars)) {}

  std::size_t size() const noexcept { return bars_.size(); }
  std::span<const Bar> bars() const noexcept { return bars_; }
  /// 1-based access; throws Error(InvalidLabel) when out of range.
  const Bar& bar(std::size_t label) const;

  std::vector<double> births() const;
  std::vector<double> deaths() const;

  /// Bars reordered so that new label p carries old label order[p-1].
  /// `order` must be a permutation of 1..n.
  Barcode reordered(std::span<const std::size_t> order) const;

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::vector<Bar> bars_;
};

struct SamplePoint {
  double value = 0.0;
  std::size_t label = 0;  // 1-based bar label

  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

/// Largest supported power level; 2^k + 1 points are generated per bar.
inline constexpr unsigned kMaxPowerLevel = 24;

/// n(2^k+1) points b_i + l(d_i - b_i)/2^k grouped by bar, l ascending.
std::vector<SamplePoint> sample_points(const Barcode& barcode, unsigned k);

/// A pair of sample points from different bars, or two from the same bar,
/// whose values coincide (within eps).
struct SampleCollision {
  SamplePoint first;
  SamplePoint second;
};

/// All n(2^k+1) sample points pairwise distinct, where |x - y| <= eps counts
/// as equal.
bool is_k_strict(const Barcode& barcode, unsigned k, double eps = 0.0);

/// First colliding pair in value order, if any.
std::vector<SampleCollision> find_collisions(const Barcode& barcode,
                                             unsigned k, double eps = 0.0,
                                             std::size_t limit = 1);

/// 0 disjoint, 1 stepped, 2 nested. Labels are 1-based and the pair is
/// ordered by birth internally, so the result is symmetric.
/// Throws NotStrict / InvalidLabel.
int crossing_number(const Barcode& barcode, std::size_t i, std::size_t j);

struct IntervalGraph {
  std::size_t vertex_count = 0;
  /// Sorted pairs (i, j), 1 <= i < j <= n.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool has_edge(std::size_t i, std::size_t j) const;
  bool connected() const;
  friend bool operator==(const IntervalGraph&, const IntervalGraph&) = default;
};

/// Edge {i, j} iff the open intervals intersect.
IntervalGraph interval_graph(const Barcode& barcode);

/// (b, d) -> (alpha b + delta, alpha d + delta). Throws InvalidScale unless
/// alpha is finite and positive.
Barcode affine_transform(const Barcode& barcode, double alpha, double delta);

/// Labels sorted by increasing birth (ties broken by label).
std::vector<std::size_t> birth_order(const Barcode& barcode);

/// Label of a bar with b_* <= b_i and d_* >= d_i for all i, or 0 if none.
std::size_t containing_bar(const Barcode& barcode);

}  // namespace barlat
