#pragma once

#include <map>
#include <vector>

#include "qlie/scalar.hpp"

namespace qlie {

using SparseVec = std::map<int, Scalar>; // index -> nonzero coefficient

// Outcome of solving A x = b for one right-hand side against a factorization
// shared across many right-hand sides.
struct SolveOutcome {
    bool consistent = false;
    std::vector<Scalar> particular; // one entry per column; free variables set to 0
    SparseVec residual;             // rows that cannot be matched (empty when consistent)
};

// Exact Gaussian elimination over the coefficient field for sparse systems.
// Columns are unknowns; rows are arbitrary integer keys supplied by the
// caller.  The elimination is performed once; any number of right-hand
// sides can then be solved, and the kernel basis extracted, without
// re-factorizing.
class SparseSolver {
  public:
    // Column order fixes the unknown order; call before factorize().
    void add_column(SparseVec column);
    int num_columns() const { return static_cast<int>(columns_.size()); }

    // Right-hand sides ride along in the same elimination so they are only
    // reduced once.  Returns the slot index used to query the outcome.
    int add_rhs(SparseVec rhs);

    void factorize();
    bool factorized() const { return factorized_; }

    int rank() const;
    SolveOutcome solve(int rhs_slot) const;
    // Basis of A x = 0, one vector (length = num_columns) per free column.
    std::vector<std::vector<Scalar>> kernel_basis() const;
    // Columns that did not receive a pivot, in ascending order.
    std::vector<int> free_columns() const;

  private:
    std::vector<SparseVec> columns_;
    std::vector<SparseVec> rhs_;
    int num_rhs_ = 0;
    bool factorized_ = false;

    // Echelon form state: pivot column -> reduced row (cols >= pivot plus
    // augmented slots at index num_columns()+slot).
    std::map<int, SparseVec> pivot_rows_;
    // Rows with empty unknown part but nonzero augmented part (defects),
    // keyed by the row index that produced them (for diagnostics).
    std::vector<std::pair<int, SparseVec>> defect_rows_;
};

using DenseMatrix = std::vector<std::vector<Scalar>>;

// Exact inverse of a square matrix; throws NonInvertibleBasisError when the
// matrix is singular.
DenseMatrix dense_inverse(const DenseMatrix& m);

} // namespace qlie
