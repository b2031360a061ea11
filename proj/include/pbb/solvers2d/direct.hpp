#pragma once

/// @file
/// @brief Direct sparse factorization with a reusable factor handle.

#include <Eigen/Core>
#include <memory>

#include "pbb/solvers2d/sparse_system.hpp"

namespace pbb {

/// Opaque cached factorization; solve() costs one pair of triangular sweeps.
class LuFactor {
 public:
  virtual ~LuFactor() = default;
  virtual Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const = 0;
};

struct LuResult {
  Eigen::VectorXd x;
  std::shared_ptr<const LuFactor> factor;
};

/// Factors the system and solves for its stored rhs.
///
/// Symmetric systems go through a Cholesky-type backend (CHOLMOD supernodal
/// above ~32k unknowns when available, Eigen simplicial otherwise), honoring
/// a precomputed elimination order when the system carries one; asymmetric
/// systems fall back to sparse LU. Throws SingularMatrix when the
/// factorization hits a zero pivot, e.g. an unpinned periodic nullspace.
LuResult lu_solve(const SparseSystem& system);

}  // namespace pbb
