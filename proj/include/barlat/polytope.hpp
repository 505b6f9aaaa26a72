#pragma once

#include <cstddef>
#include <vector>

#include "barlat/lattice.hpp"

namespace barlat {

/// Vertex vectors of the power-k barcode polytope: for every canonical word
/// s, the one-line notation of embed(s) in R^N, N = n(2^k+1).
struct VertexSet {
  std::size_t ambient = 0;
  std::vector<std::vector<int>> vertices;  // lattice (lexicographic) order
};

VertexSet vertices(const LatticeSpec& spec,
                   const EnumerationLimits& limits = {});

/// Dimension of the affine hull, by exact fraction-free elimination of the
/// differences v_i - v_0. Throws InvalidArgument on an empty set.
std::size_t affine_dimension(const VertexSet& set);

/// Adjacent position swaps (1-based p swaps positions p and p+1) of the
/// maximal chain from the identity to embed(top_element) that moves the
/// copies into place one by one: the 1's in descending copy order, then the
/// 2's, and so on. Every step is a cover in the weak order.
std::vector<std::size_t> insertion_chain(const LatticeSpec& spec);

/// Connected components of the path graph on [N] whose edges are the swaps
/// used by insertion_chain.
std::size_t pi_partition_blocks(const LatticeSpec& spec);

/// Components of the path graph on [positions] with the given swap edges.
std::size_t path_components(std::size_t positions,
                            const std::vector<std::size_t>& swaps);

struct DimensionReport {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  long long expected = 0;  // n(2^k+1) - 2
  std::size_t blocks = 0;
};

DimensionReport dimension_report(const LatticeSpec& spec,
                                 const EnumerationLimits& limits = {});

}  // namespace barlat
