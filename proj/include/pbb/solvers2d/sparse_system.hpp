#pragma once

/// @file
/// @brief Compressed-row sparse linear systems shared by the 2D solvers.

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <string>
#include <vector>

#include "pbb/core/errors.hpp"

namespace pbb {

struct SparseTriplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// Square sparse matrix in CSR layout together with its right-hand side.
///
/// `symmetric` is not taken on trust: assembly verifies it by comparing
/// A(i,j) with A(j,i) on 100 deterministically sampled index pairs.
/// `elimination_order` optionally carries a fill-reducing permutation
/// (order(k) = unknown eliminated k-th); empty means natural order.
struct SparseSystem {
  int n = 0;
  Eigen::VectorXi row_offsets;
  Eigen::VectorXi col_indices;
  Eigen::VectorXd values;
  bool symmetric = false;
  Eigen::VectorXd rhs;
  Eigen::VectorXi elimination_order;

  /// Builds CSR from unordered triplets, summing duplicates, and runs the
  /// sampled symmetry probe to set the flag.
  static SparseSystem from_triplets(int n, const std::vector<SparseTriplet>& triplets,
                                    Eigen::VectorXd rhs);

  int nnz() const { return static_cast<int>(col_indices.size()); }

  /// Entry lookup by binary search within the row; zero outside the pattern.
  double at(int i, int j) const;

  Eigen::SparseMatrix<double> to_eigen() const;

  /// Checks the CSR invariants (offsets, sorted in-range columns, rhs and
  /// permutation sizes); throws InvalidArgument on violation.
  void validate() const;
};

/// Samples `samples` random (i, j) pairs and reports whether every sampled
/// entry matched its transpose to 1e-14 relative.
bool verify_symmetry_sampled(const SparseSystem& system, int samples = 100);

/// Writes the matrix in Matrix Market coordinate format (1-based indices,
/// lower triangle only when the symmetry flag is set).
void write_matrix_market(const SparseSystem& system, const std::string& path);

}  // namespace pbb
