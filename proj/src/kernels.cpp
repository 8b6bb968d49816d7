#include "hetedp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace hetedp {

Csr Csr::from_edges(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& undirected_edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : undirected_edges) {
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
  }
  Csr c;
  c.offsets.resize(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(adj[u].begin(), adj[u].end());
    adj[u].erase(std::unique(adj[u].begin(), adj[u].end()), adj[u].end());
    c.offsets[u + 1] = c.offsets[u] + adj[u].size();
  }
  c.nbrs.reserve(c.offsets[n]);
  for (std::size_t u = 0; u < n; ++u)
    c.nbrs.insert(c.nbrs.end(), adj[u].begin(), adj[u].end());
  return c;
}

namespace kern {

void matmul(const Matrix& A, const Matrix& B, Matrix& C) {
  const std::size_t m = A.rows, k = A.cols, n = B.cols;
  C = Matrix(m, n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(m); ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double a = A(i, p);
      if (a == 0.0) continue;
      const double* brow = B.row(p);
      double* crow = C.row(i);
      for (std::size_t j = 0; j < n; ++j) crow[j] += a * brow[j];
    }
  }
}

void matmul_tn(const Matrix& A, const Matrix& B, Matrix& C) {
  const std::size_t m = A.cols, k = A.rows, n = B.cols;
  C = Matrix(m, n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(m); ++i) {
    double* crow = C.row(i);
    for (std::size_t p = 0; p < k; ++p) {
      const double a = A(p, i);
      if (a == 0.0) continue;
      const double* brow = B.row(p);
      for (std::size_t j = 0; j < n; ++j) crow[j] += a * brow[j];
    }
  }
}

void matmul_nt(const Matrix& A, const Matrix& B, Matrix& C) {
  const std::size_t m = A.rows, k = A.cols, n = B.rows;
  C = Matrix(m, n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(m); ++i) {
    const double* arow = A.row(i);
    double* crow = C.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double* brow = B.row(j);
      double s = 0.0;
      for (std::size_t p = 0; p < k; ++p) s += arow[p] * brow[p];
      crow[j] = s;
    }
  }
}

void neighbor_mean(const Csr& adj, const Matrix& H, Matrix& out) {
  const std::size_t n = adj.num_nodes(), d = H.cols;
  out = Matrix(n, d);
#pragma omp parallel for schedule(static)
  for (long long u = 0; u < static_cast<long long>(n); ++u) {
    const std::size_t deg = adj.degree(u);
    if (deg == 0) continue;
    double* orow = out.row(u);
    for (std::size_t e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e) {
      const double* hrow = H.row(adj.nbrs[e]);
      for (std::size_t j = 0; j < d; ++j) orow[j] += hrow[j];
    }
    const double inv = 1.0 / static_cast<double>(deg);
    for (std::size_t j = 0; j < d; ++j) orow[j] *= inv;
  }
}

void row_l2_clip(Matrix& M, double bound) {
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < static_cast<long long>(M.rows); ++r) {
    double* row = M.row(r);
    double s = 0.0;
    for (std::size_t j = 0; j < M.cols; ++j) s += row[j] * row[j];
    const double norm = std::sqrt(s);
    if (norm > bound) {
      const double scale = bound / norm;
      for (std::size_t j = 0; j < M.cols; ++j) row[j] *= scale;
    }
  }
}

void add_gaussian(std::vector<double>& v, const std::vector<double>& stddev,
                  const RngStream& rs) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(v.size()); ++i)
    v[i] += stddev[i] * rs.normal(i);
}

void add_gaussian(std::vector<double>& v, double stddev, const RngStream& rs) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(v.size()); ++i)
    v[i] += stddev * rs.normal(i);
}

std::vector<std::uint64_t> four_cycle_counts(const Csr& adj) {
  const std::size_t n = adj.num_nodes();
  std::vector<std::uint64_t> quad(n, 0);
  // Cycles through u = sum over opposite corners v of C(paths2(u,v), 2),
  // where paths2 counts common neighbors. Each thread keeps its own
  // path-count scratch table.
#pragma omp parallel
  {
    std::vector<std::uint64_t> paths(n, 0);
    std::vector<std::size_t> touched;
#pragma omp for schedule(dynamic, 16)
    for (long long u = 0; u < static_cast<long long>(n); ++u) {
      touched.clear();
      for (std::size_t e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e) {
        const std::size_t w = adj.nbrs[e];
        if (w == static_cast<std::size_t>(u)) continue;  // ignore self-loops
        for (std::size_t f = adj.offsets[w]; f < adj.offsets[w + 1]; ++f) {
          const std::size_t v = adj.nbrs[f];
          if (v == static_cast<std::size_t>(u) || v == w) continue;
          if (paths[v]++ == 0) touched.push_back(v);
        }
      }
      std::uint64_t q = 0;
      for (std::size_t v : touched) {
        q += paths[v] * (paths[v] - 1) / 2;
        paths[v] = 0;
      }
      quad[u] = q;
    }
  }
  return quad;
}

}  // namespace kern

namespace ref {

void matmul(const Matrix& A, const Matrix& B, Matrix& C) {
  C = Matrix(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t p = 0; p < A.cols; ++p)
      for (std::size_t j = 0; j < B.cols; ++j)
        C(i, j) += A(i, p) * B(p, j);
}

void matmul_tn(const Matrix& A, const Matrix& B, Matrix& C) {
  C = Matrix(A.cols, B.cols);
  for (std::size_t i = 0; i < A.cols; ++i)
    for (std::size_t p = 0; p < A.rows; ++p)
      for (std::size_t j = 0; j < B.cols; ++j)
        C(i, j) += A(p, i) * B(p, j);
}

void matmul_nt(const Matrix& A, const Matrix& B, Matrix& C) {
  C = Matrix(A.rows, B.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < B.rows; ++j) {
      double s = 0.0;
      for (std::size_t p = 0; p < A.cols; ++p) s += A(i, p) * B(j, p);
      C(i, j) = s;
    }
}

void neighbor_mean(const Csr& adj, const Matrix& H, Matrix& out) {
  const std::size_t n = adj.num_nodes(), d = H.cols;
  out = Matrix(n, d);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t deg = adj.degree(u);
    if (deg == 0) continue;
    for (std::size_t e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e)
      for (std::size_t j = 0; j < d; ++j) out(u, j) += H(adj.nbrs[e], j);
    for (std::size_t j = 0; j < d; ++j) out(u, j) /= static_cast<double>(deg);
  }
}

void row_l2_clip(Matrix& M, double bound) {
  for (std::size_t r = 0; r < M.rows; ++r) {
    double s = 0.0;
    for (std::size_t j = 0; j < M.cols; ++j) s += M(r, j) * M(r, j);
    const double norm = std::sqrt(s);
    if (norm > bound)
      for (std::size_t j = 0; j < M.cols; ++j) M(r, j) *= bound / norm;
  }
}

void add_gaussian(std::vector<double>& v, const std::vector<double>& stddev,
                  const RngStream& rs) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += stddev[i] * rs.normal(i);
}

std::vector<std::uint64_t> four_cycle_counts_subsets(const Csr& adj) {
  const std::size_t n = adj.num_nodes();
  auto connected = [&](std::size_t a, std::size_t b) {
    for (std::size_t e = adj.offsets[a]; e < adj.offsets[a + 1]; ++e)
      if (adj.nbrs[e] == b) return true;
    return false;
  };
  std::vector<std::uint64_t> quad(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          // The three pairings of {a,b,c,d} into a cycle.
          const std::size_t cyc[3][4] = {
              {a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
          for (const auto& y : cyc) {
            if (connected(y[0], y[1]) && connected(y[1], y[2]) &&
                connected(y[2], y[3]) && connected(y[3], y[0])) {
              ++quad[a];
              ++quad[b];
              ++quad[c];
              ++quad[d];
            }
          }
        }
  return quad;
}

double auc_pairwise(const std::vector<double>& pos,
                    const std::vector<double>& neg) {
  double wins = 0.0;
  for (double p : pos)
    for (double q : neg) {
      if (p > q)
        wins += 1.0;
      else if (p == q)
        wins += 0.5;
    }
  return wins / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

}  // namespace ref

}  // namespace hetedp
