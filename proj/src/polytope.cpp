#include "barlat/polytope.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>

#include "barlat/error.hpp"

namespace barlat {

using boost::multiprecision::cpp_int;

VertexSet vertices(const LatticeSpec& spec, const EnumerationLimits& limits) {
  VertexSet out;
  out.ambient = spec.positions();
  for (const auto& s : canonical_words(spec, limits)) {
    out.vertices.push_back(embed(s.multiperm()).one_line());
  }
  return out;
}

std::size_t affine_dimension(const VertexSet& set) {
  if (set.vertices.empty()) {
    throw Error(ErrorKind::InvalidArgument, "vertex set is empty");
  }
  const std::size_t cols = set.ambient;
  const auto& origin = set.vertices.front();
  std::vector<std::vector<cpp_int>> rows;
  rows.reserve(set.vertices.size() - 1);
  for (std::size_t i = 1; i < set.vertices.size(); ++i) {
    if (set.vertices[i].size() != cols) {
      throw Error(ErrorKind::ShapeMismatch, "vertex of the wrong length");
    }
    std::vector<cpp_int> row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      row[c] = set.vertices[i][c] - origin[c];
    }
    rows.push_back(std::move(row));
  }

  // Bareiss elimination: every division by the previous pivot is exact.
  std::size_t rank = 0;
  cpp_int previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank),
                              rows.end(), [c](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      for (std::size_t j = c + 1; j < cols; ++j) {
        row[j] = (p[c] * row[j] - row[c] * p[j]) / previous;
      }
      row[c] = 0;
    }
    previous = p[c];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> insertion_chain(const LatticeSpec& spec) {
  spec.validate();
  const int m = spec.multiplicity();
  const auto target = embed(top_element(spec).multiperm()).one_line();
  const std::size_t length = target.size();
  std::vector<std::size_t> target_position(length + 1);
  for (std::size_t p = 0; p < length; ++p) {
    target_position[static_cast<std::size_t>(target[p])] = p;
  }

  std::vector<int> current(length);
  std::iota(current.begin(), current.end(), 1);
  std::vector<std::size_t> position(length + 1);
  for (std::size_t p = 0; p < length; ++p) position[current[p]] = p;

  std::vector<std::size_t> swaps;
  for (int symbol = 1; symbol <= spec.n; ++symbol) {
    for (int copy = m; copy >= 1; --copy) {
      const int element = (symbol - 1) * m + copy;
      while (position[element] < target_position[element]) {
        const std::size_t p = position[element];
        const int right = current[p + 1];
        if (!(element < right)) {
          throw Error(ErrorKind::Internal,
                      "insertion step is not a cover in the weak order");
        }
        std::swap(current[p], current[p + 1]);
        position[element] = p + 1;
        position[right] = p;
        swaps.push_back(p + 1);
      }
    }
  }
  if (current != target) {
    throw Error(ErrorKind::Internal,
                "insertion chain did not reach the top element");
  }
  return swaps;
}

std::size_t path_components(std::size_t positions,
                            const std::vector<std::size_t>& swaps) {
  std::vector<bool> joined(positions, false);  // joined[p]: p -- p+1 edge
  for (auto p : swaps) {
    if (p < 1 || p >= positions) {
      throw Error(ErrorKind::InvalidArgument, "swap index out of range");
    }
    joined[p] = true;
  }
  std::size_t components = positions;
  for (std::size_t p = 1; p < positions; ++p) {
    if (joined[p]) --components;
  }
  return components;
}

std::size_t pi_partition_blocks(const LatticeSpec& spec) {
  return path_components(spec.positions(), insertion_chain(spec));
}

DimensionReport dimension_report(const LatticeSpec& spec,
                                 const EnumerationLimits& limits) {
  DimensionReport report;
  report.ambient = spec.positions();
  report.dim = affine_dimension(vertices(spec, limits));
  report.expected = static_cast<long long>(report.ambient) - 2;
  report.blocks = pi_partition_blocks(spec);
  return report;
}

}  // namespace barlat
