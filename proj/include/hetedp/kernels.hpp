#pragma once

#include <cstdint>
#include <vector>

#include "hetedp/matrix.hpp"
#include "hetedp/rng.hpp"

namespace hetedp {

// Compressed adjacency used by the aggregation and counting kernels.
struct Csr {
  std::vector<std::size_t> offsets;  // size n+1
  std::vector<std::size_t> nbrs;

  std::size_t num_nodes() const {
    return offsets.empty() ? 0 : offsets.size() - 1;
  }
  std::size_t degree(std::size_t u) const {
    return offsets[u + 1] - offsets[u];
  }

  static Csr from_edges(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& undirected_edges);
};

// OpenMP-parallel kernels. Each output element is produced by one serial
// inner loop, so results are bit-identical for any thread count and match
// hetedp::ref exactly.
namespace kern {

// C = A * B
void matmul(const Matrix& A, const Matrix& B, Matrix& C);
// C = A^T * B
void matmul_tn(const Matrix& A, const Matrix& B, Matrix& C);
// C = A * B^T
void matmul_nt(const Matrix& A, const Matrix& B, Matrix& C);

// out[u] = mean over v in N(u) of H[v]; rows with empty neighborhoods are 0.
void neighbor_mean(const Csr& adj, const Matrix& H, Matrix& out);

// Scale every row of M to L2 norm <= bound (leaves shorter rows untouched).
void row_l2_clip(Matrix& M, double bound);

// v[i] += stddev[i] * N(0,1), noise drawn per coordinate from the stream.
// stddev may be a single value broadcast over all coordinates.
void add_gaussian(std::vector<double>& v, const std::vector<double>& stddev,
                  const RngStream& rs);
void add_gaussian(std::vector<double>& v, double stddev, const RngStream& rs);

// Exact per-node 4-cycle (quadrilateral) counts on a simple undirected graph.
std::vector<std::uint64_t> four_cycle_counts(const Csr& adj);

}  // namespace kern

// Serial reference implementations. Naive loops, no pragmas; used as the
// oracle in tests and as the baseline in the kernel benchmark.
namespace ref {

void matmul(const Matrix& A, const Matrix& B, Matrix& C);
void matmul_tn(const Matrix& A, const Matrix& B, Matrix& C);
void matmul_nt(const Matrix& A, const Matrix& B, Matrix& C);
void neighbor_mean(const Csr& adj, const Matrix& H, Matrix& out);
void row_l2_clip(Matrix& M, double bound);
void add_gaussian(std::vector<double>& v, const std::vector<double>& stddev,
                  const RngStream& rs);

// 4-cycle counts by enumeration over all 4-node subsets. O(n^4); intended
// for graphs of at most a few hundred nodes.
std::vector<std::uint64_t> four_cycle_counts_subsets(const Csr& adj);

// AUC by brute-force comparison of every (positive, negative) pair,
// ties counted one half.
double auc_pairwise(const std::vector<double>& pos,
                    const std::vector<double>& neg);

}  // namespace ref

}  // namespace hetedp
