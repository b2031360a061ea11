#include "pbb/solvers2d/sparse_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "pbb/core/rng.hpp"

namespace pbb {

SparseSystem SparseSystem::from_triplets(int n, const std::vector<SparseTriplet>& triplets,
                                         Eigen::VectorXd rhs) {
  require(n > 0, ErrorCode::InvalidArgument, "system dimension must be positive");
  require(rhs.size() == n, ErrorCode::InvalidArgument, "rhs length must match the dimension");
  for (const SparseTriplet& t : triplets) {
    require(t.row >= 0 && t.row < n && t.col >= 0 && t.col < n, ErrorCode::InvalidArgument,
            "triplet index out of range");
  }

  std::vector<SparseTriplet> sorted = triplets;
  std::sort(sorted.begin(), sorted.end(), [](const SparseTriplet& a, const SparseTriplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseSystem sys;
  sys.n = n;
  sys.rhs = std::move(rhs);
  sys.row_offsets = Eigen::VectorXi::Zero(n + 1);
  std::vector<int> cols;
  std::vector<double> vals;
  cols.reserve(sorted.size());
  vals.reserve(sorted.size());
  std::size_t i = 0;
  while (i < sorted.size()) {
    double sum = sorted[i].value;
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j].row == sorted[i].row && sorted[j].col == sorted[i].col) {
      sum += sorted[j].value;
      ++j;
    }
    cols.push_back(sorted[i].col);
    vals.push_back(sum);
    sys.row_offsets(sorted[i].row + 1) += 1;
    i = j;
  }
  for (int r = 0; r < n; ++r) sys.row_offsets(r + 1) += sys.row_offsets(r);
  sys.col_indices = Eigen::Map<Eigen::VectorXi>(cols.data(), cols.size());
  sys.values = Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size());
  sys.symmetric = verify_symmetry_sampled(sys);
  return sys;
}

double SparseSystem::at(int i, int j) const {
  const int* begin = col_indices.data() + row_offsets(i);
  const int* end = col_indices.data() + row_offsets(i + 1);
  const int* pos = std::lower_bound(begin, end, j);
  if (pos == end || *pos != j) return 0.0;
  return values(pos - col_indices.data());
}

Eigen::SparseMatrix<double> SparseSystem::to_eigen() const {
  Eigen::SparseMatrix<double> a(n, n);
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(nnz());
  for (int i = 0; i < n; ++i) {
    for (int k = row_offsets(i); k < row_offsets(i + 1); ++k) {
      t.emplace_back(i, col_indices(k), values(k));
    }
  }
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

void SparseSystem::validate() const {
  require(n > 0, ErrorCode::InvalidArgument, "system dimension must be positive");
  require(row_offsets.size() == n + 1, ErrorCode::InvalidArgument, "row offsets must have n+1 entries");
  require(row_offsets(0) == 0, ErrorCode::InvalidArgument, "row offsets must start at zero");
  for (int i = 0; i < n; ++i) {
    require(row_offsets(i + 1) >= row_offsets(i), ErrorCode::InvalidArgument,
            "row offsets must be non-decreasing");
  }
  require(row_offsets(n) == nnz(), ErrorCode::InvalidArgument,
          "row offsets must end at the entry count");
  require(values.size() == nnz(), ErrorCode::InvalidArgument,
          "value and column arrays must have equal length");
  for (int i = 0; i < n; ++i) {
    for (int k = row_offsets(i); k < row_offsets(i + 1); ++k) {
      require(col_indices(k) >= 0 && col_indices(k) < n, ErrorCode::InvalidArgument,
              "column index out of range");
      require(k == row_offsets(i) || col_indices(k) > col_indices(k - 1),
              ErrorCode::InvalidArgument, "column indices must be strictly increasing per row");
    }
  }
  require(rhs.size() == n, ErrorCode::InvalidArgument, "rhs length must match the dimension");
  require(elimination_order.size() == 0 || elimination_order.size() == n,
          ErrorCode::InvalidArgument, "elimination order must be empty or a full permutation");
}

bool verify_symmetry_sampled(const SparseSystem& system, int samples) {
  const CounterRng rng(0xa11u);
  const double scale = system.values.size() > 0 ? system.values.cwiseAbs().maxCoeff() : 0.0;
  for (int s = 0; s < samples; ++s) {
    const int i = static_cast<int>(rng.uniform_int(2 * s, 0, system.n - 1));
    const int j = static_cast<int>(rng.uniform_int(2 * s + 1, 0, system.n - 1));
    if (std::abs(system.at(i, j) - system.at(j, i)) > 1e-14 * scale) return false;
  }
  return true;
}

void write_matrix_market(const SparseSystem& system, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::IoFailure, "cannot open " + path + " for writing");
  out << "%%MatrixMarket matrix coordinate real "
      << (system.symmetric ? "symmetric" : "general") << "\n";
  int count = 0;
  for (int i = 0; i < system.n; ++i) {
    for (int k = system.row_offsets(i); k < system.row_offsets(i + 1); ++k) {
      if (!system.symmetric || system.col_indices(k) <= i) ++count;
    }
  }
  out << system.n << " " << system.n << " " << count << "\n";
  char buf[32];
  for (int i = 0; i < system.n; ++i) {
    for (int k = system.row_offsets(i); k < system.row_offsets(i + 1); ++k) {
      const int j = system.col_indices(k);
      if (system.symmetric && j > i) continue;
      std::snprintf(buf, sizeof buf, "%.17g", system.values(k));
      out << (i + 1) << " " << (j + 1) << " " << buf << "\n";
    }
  }
  require(out.good(), ErrorCode::IoFailure, "write failed for " + path);
}

}  // namespace pbb
