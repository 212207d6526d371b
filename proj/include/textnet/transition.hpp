#pragma once

#include <vector>

#include "textnet/graph.hpp"
#include "textnet/types.hpp"

namespace textnet {

/// Row-stochastic transition matrix powers {P^0 .. P^{H-1}} with strictly
/// decreasing hop weights summing to one. Immutable after construction.
struct TransitionTensor {
  std::vector<SparseMatrix> hops;  // hops[h] = P^h, each N x N row-stochastic
  Vector hop_weights;              // size H, strictly decreasing, sums to 1

  Index size() const { return hops.empty() ? 0 : hops.front().rows(); }
  int hop_count() const { return static_cast<int>(hops.size()); }
};

/// Builds P^1 by row-normalizing the weighted adjacency (vertices without
/// out-edges receive a unit self-loop first), then materializes the sparse
/// powers up to hop_count-1. Hop weight lambda_h = lambda_decay^h, rescaled
/// to sum to one.
///
/// max_row_entries > 0 caps the entries kept per row of each power past
/// P^1 (largest entries win, ties to the lower column) with the row
/// renormalized afterwards; 0 disables the cap.
TransitionTensor build_transition(const TextualGraph& graph, int hop_count, double lambda_decay,
                                  int max_row_entries = 0);

/// Sum over hops of hop_weight[h] * P^h * m; m must have N rows.
Matrix diffuse(const TransitionTensor& tensor, const Eigen::Ref<const Matrix>& m);

/// Row `vertex` of diffuse(tensor, m), computed from the sparse rows alone.
RowVector diffuse_row(const TransitionTensor& tensor, const Eigen::Ref<const Matrix>& m,
                      VertexId vertex);

}  // namespace textnet
