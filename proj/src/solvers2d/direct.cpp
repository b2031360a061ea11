#include "pbb/solvers2d/direct.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <utility>
#include <vector>

#ifdef PBB_HAVE_CHOLMOD
#include <Eigen/CholmodSupport>
#endif

namespace pbb {

namespace {

// Unknown counts below this stay on Eigen's simplicial factorization; larger
// symmetric systems switch to the supernodal backend when it is compiled in.
constexpr int kSupernodalThreshold = 32768;

Eigen::SparseMatrix<double> build_matrix(const SparseSystem& sys, const Eigen::VectorXi& pos) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(sys.nnz());
  for (int i = 0; i < sys.n; ++i) {
    for (int k = sys.row_offsets(i); k < sys.row_offsets(i + 1); ++k) {
      const int j = sys.col_indices(k);
      if (pos.size() > 0) {
        t.emplace_back(pos(i), pos(j), sys.values(k));
      } else {
        t.emplace_back(i, j, sys.values(k));
      }
    }
  }
  Eigen::SparseMatrix<double> a(sys.n, sys.n);
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

/// Factor wrapper: owns the permuted matrix and the backend, and maps the
/// rhs into (and the solution out of) the elimination order.
template <class Solver>
class BackendFactor final : public LuFactor {
 public:
  BackendFactor(Eigen::SparseMatrix<double> matrix, Eigen::VectorXi order)
      : matrix_(std::move(matrix)), order_(std::move(order)) {}

  Solver& solver() { return solver_; }
  const Eigen::SparseMatrix<double>& matrix() const { return matrix_; }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const override {
    if (order_.size() == 0) return solver_.solve(rhs);
    Eigen::VectorXd permuted(rhs.size());
    for (int k = 0; k < order_.size(); ++k) permuted(k) = rhs(order_(k));
    const Eigen::VectorXd z = solver_.solve(permuted);
    Eigen::VectorXd x(rhs.size());
    for (int k = 0; k < order_.size(); ++k) x(order_(k)) = z(k);
    return x;
  }

 private:
  Eigen::SparseMatrix<double> matrix_;
  Eigen::VectorXi order_;
  mutable Solver solver_;
};

void check_ldlt_pivots(const Eigen::VectorXd& d) {
  const double dmax = d.cwiseAbs().maxCoeff();
  require(dmax > 0.0 && d.cwiseAbs().minCoeff() > 1e-14 * dmax, ErrorCode::SingularMatrix,
          "factorization found a vanishing pivot");
}

}  // namespace

LuResult lu_solve(const SparseSystem& system) {
  system.validate();
  const bool ordered = system.symmetric && system.elimination_order.size() == system.n;
  Eigen::VectorXi pos;
  if (ordered) {
    pos.resize(system.n);
    for (int k = 0; k < system.n; ++k) pos(system.elimination_order(k)) = k;
  }
  Eigen::SparseMatrix<double> matrix = build_matrix(system, pos);
  const Eigen::VectorXi order = ordered ? system.elimination_order : Eigen::VectorXi();

  std::shared_ptr<const LuFactor> factor;
  if (system.symmetric) {
#ifdef PBB_HAVE_CHOLMOD
    if (system.n >= kSupernodalThreshold) {
      using Chol = Eigen::CholmodSupernodalLLT<Eigen::SparseMatrix<double>, Eigen::Lower>;
      auto backend = std::make_shared<BackendFactor<Chol>>(std::move(matrix), order);
      if (ordered) {
        backend->solver().cholmod().nmethods = 1;
        backend->solver().cholmod().method[0].ordering = CHOLMOD_NATURAL;
        backend->solver().cholmod().postorder = 0;
      }
      backend->solver().compute(backend->matrix());
      require(backend->solver().info() == Eigen::Success, ErrorCode::SingularMatrix,
              "supernodal factorization failed; system may be singular");
      factor = backend;
    }
#endif
    if (!factor && ordered) {
      using Ldlt = Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower,
                                         Eigen::NaturalOrdering<int>>;
      auto backend = std::make_shared<BackendFactor<Ldlt>>(std::move(matrix), order);
      backend->solver().compute(backend->matrix());
      require(backend->solver().info() == Eigen::Success, ErrorCode::SingularMatrix,
              "simplicial factorization failed; system may be singular");
      check_ldlt_pivots(backend->solver().vectorD());
      factor = backend;
    } else if (!factor) {
      using Ldlt = Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower,
                                         Eigen::AMDOrdering<int>>;
      auto backend = std::make_shared<BackendFactor<Ldlt>>(std::move(matrix), order);
      backend->solver().compute(backend->matrix());
      require(backend->solver().info() == Eigen::Success, ErrorCode::SingularMatrix,
              "simplicial factorization failed; system may be singular");
      check_ldlt_pivots(backend->solver().vectorD());
      factor = backend;
    }
  } else {
    using Slu = Eigen::SparseLU<Eigen::SparseMatrix<double>>;
    auto backend = std::make_shared<BackendFactor<Slu>>(std::move(matrix), order);
    backend->solver().compute(backend->matrix());
    require(backend->solver().info() == Eigen::Success, ErrorCode::SingularMatrix,
            "sparse lu factorization failed; system may be singular");
    factor = backend;
  }

  LuResult result;
  result.factor = factor;
  result.x = factor->solve(system.rhs);
  require(result.x.allFinite(), ErrorCode::SingularMatrix,
          "solve produced non-finite entries; system may be singular");
  return result;
}

}  // namespace pbb
