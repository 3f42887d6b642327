#pragma once

// Linear solvers backing the flow, adjoint, and reaction-diffusion code:
//  - matrix-free preconditioned conjugate gradients,
//  - geometric multigrid for cell-centered variable-coefficient Poisson
//    problems (used as the CG preconditioner for pressure corrections),
//  - banded LU with partial pivoting for the coupled Jacobian systems.

#include <cstddef>
#include <functional>
#include <vector>

#include "turingflow/errors.hpp"

namespace turingflow {

struct IterStats {
    int iterations = 0;
    double residual = 0.0;  // relative to ||b||
    bool converged = false;
};

using LinearOp = std::function<void(const double* x, double* y)>;

/// Preconditioned CG for SPD systems. x holds the initial guess on entry and
/// the solution on exit. `precond` applies z = M^{-1} r (identity if null).
IterStats conjugate_gradient(const LinearOp& apply, const std::vector<double>& b,
                             std::vector<double>& x, double rel_tol, int max_iter,
                             const LinearOp& precond = nullptr);

/// Geometric multigrid hierarchy for  A p = b  with
///   (A p)_ij = (gx_i + gx_{i+1} + gy_j + gy_{j+1} + dext_ij) p_ij
///              - gx_i p_{i-1,j} - ... ,
/// where gx/gy are face conductances (zero on no-flux boundary faces) and
/// dext carries Dirichlet couplings folded onto the diagonal. Coarse levels
/// are built by 2x2 cell aggregation with interface conductances summed,
/// which is the Galerkin product for piecewise-constant transfer operators.
class PoissonMultigrid {
public:
    PoissonMultigrid(int nx, int ny, std::vector<double> gx, std::vector<double> gy,
                     std::vector<double> dext);
    ~PoissonMultigrid();
    PoissonMultigrid(PoissonMultigrid&&) noexcept;
    PoissonMultigrid& operator=(PoissonMultigrid&&) noexcept;

    void apply(const double* x, double* y) const;

    /// One V(2,2) cycle with z = 0 initial guess; symmetric, so usable as a
    /// CG preconditioner.
    void vcycle(const double* r, double* z) const;

    /// PCG solve preconditioned by this hierarchy.
    IterStats solve(const std::vector<double>& b, std::vector<double>& x, double rel_tol,
                    int max_iter) const;

    int nx() const;
    int ny() const;

private:
    struct Level;
    void cycle(std::size_t level) const;
    std::vector<Level> levels_;
};

/// General band matrix with LAPACK-style storage and partial-pivoting LU.
class BandMatrix {
public:
    BandMatrix(std::size_t n, int kl, int ku);

    std::size_t n() const { return n_; }

    double& at(std::size_t i, std::size_t j);
    void add(std::size_t i, std::size_t j, double v) { at(i, j) += v; }

    /// In-place LU factorization. Throws NumericalFailure on a zero pivot.
    void factor();

    /// Solve A x = b using the factorization (b overwritten with x).
    void solve(std::vector<double>& b) const;

    bool factored() const { return factored_; }

private:
    std::size_t n_;
    int kl_, ku_;
    int ldab_;
    std::vector<double> ab_;
    std::vector<std::size_t> pivots_;
    bool factored_ = false;
};

/// Coordinate-format accumulator used while assembling Jacobians.
struct TripletMatrix {
    std::size_t n = 0;
    std::vector<std::size_t> rows, cols;
    std::vector<double> values;

    void add(std::size_t i, std::size_t j, double v) {
        rows.push_back(i);
        cols.push_back(j);
        values.push_back(v);
    }

    /// Dense y = A x (test helper for small systems).
    void apply(const std::vector<double>& x, std::vector<double>& y) const;

    /// y = A^T x.
    void apply_transpose(const std::vector<double>& x, std::vector<double>& y) const;

    int bandwidth_lower() const;
    int bandwidth_upper() const;

    /// Materialize as a band matrix; `transpose` swaps row/column roles.
    BandMatrix to_band(bool transpose) const;
};

}  // namespace turingflow
