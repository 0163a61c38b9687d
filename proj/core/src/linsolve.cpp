#include "qlie/linsolve.hpp"

#include <algorithm>

namespace qlie {

namespace {

// target += s * src
void axpy(SparseVec& target, const Scalar& s, const SparseVec& src) {
    if (s.is_zero()) return;
    for (const auto& [k, v] : src) {
        auto [it, inserted] = target.try_emplace(k, s * v);
        if (!inserted) {
            it->second += s * v;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

} // namespace

void SparseSolver::add_column(SparseVec column) {
    if (factorized_) throw BadRequestError("cannot add columns after factorization");
    columns_.push_back(std::move(column));
}

int SparseSolver::add_rhs(SparseVec rhs) {
    if (factorized_) throw BadRequestError("cannot add right-hand sides after factorization");
    // Stash the right-hand side as an augmented column; it is spliced into
    // the rows at factorization time.
    rhs_.push_back(std::move(rhs));
    return num_rhs_++;
}

void SparseSolver::factorize() {
    if (factorized_) return;
    factorized_ = true;
    const int n = num_columns();

    // Transpose the column-wise input into rows keyed by the caller's row
    // indices; augmented slots live at column index n + slot.
    std::map<int, SparseVec> rows;
    for (int c = 0; c < n; ++c) {
        for (const auto& [rkey, v] : columns_[c]) rows[rkey][c] = v;
    }
    for (int s = 0; s < num_rhs_; ++s) {
        for (const auto& [rkey, v] : rhs_[s]) rows[rkey][n + s] = v;
    }

    for (auto& [rkey, row_entry] : rows) {
        SparseVec row = std::move(row_entry);
        // Reduce against the pivots accumulated so far.
        while (!row.empty()) {
            const int c = row.begin()->first;
            if (c >= n) break;
            auto it = pivot_rows_.find(c);
            if (it == pivot_rows_.end()) break;
            axpy(row, -row.begin()->second, it->second);
        }
        if (row.empty()) continue;
        const int c = row.begin()->first;
        if (c < n) {
            const Scalar lead_inv = row.begin()->second.inverse();
            for (auto& [k, v] : row) v *= lead_inv;
            pivot_rows_.emplace(c, std::move(row));
        } else {
            defect_rows_.emplace_back(rkey, std::move(row));
        }
    }
    rhs_.clear();
}

int SparseSolver::rank() const {
    if (!factorized_) throw BadRequestError("factorize() must run before rank()");
    return static_cast<int>(pivot_rows_.size());
}

SolveOutcome SparseSolver::solve(int rhs_slot) const {
    if (!factorized_) throw BadRequestError("factorize() must run before solve()");
    if (rhs_slot < 0 || rhs_slot >= num_rhs_) throw BadRequestError("unknown right-hand-side slot");
    const int n = num_columns();
    const int aug = n + rhs_slot;

    SolveOutcome out;
    for (const auto& [rkey, row] : defect_rows_) {
        auto it = row.find(aug);
        if (it != row.end()) out.residual[rkey] = it->second;
    }
    if (!out.residual.empty()) return out;

    out.consistent = true;
    out.particular.assign(n, Scalar::zero());
    // Back substitution over pivot columns in descending order; free
    // variables stay at zero.
    for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
        const int c = it->first;
        const SparseVec& row = it->second;
        Scalar value = Scalar::zero();
        auto aug_it = row.find(aug);
        if (aug_it != row.end()) value = aug_it->second;
        for (const auto& [k, v] : row) {
            if (k > c && k < n) value -= v * out.particular[k];
        }
        out.particular[c] = value;
    }
    return out;
}

std::vector<int> SparseSolver::free_columns() const {
    if (!factorized_) throw BadRequestError("factorize() must run before free_columns()");
    std::vector<int> free_cols;
    for (int c = 0; c < num_columns(); ++c) {
        if (!pivot_rows_.count(c)) free_cols.push_back(c);
    }
    return free_cols;
}

std::vector<std::vector<Scalar>> SparseSolver::kernel_basis() const {
    const int n = num_columns();
    std::vector<std::vector<Scalar>> basis;
    for (int f : free_columns()) {
        std::vector<Scalar> v(n, Scalar::zero());
        v[f] = Scalar::one();
        for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
            const int c = it->first;
            if (c > f) continue; // rows reduced, pivot row cannot reach earlier free col
            Scalar value = Scalar::zero();
            for (const auto& [k, w] : it->second) {
                if (k > c && k < n) value -= w * v[k];
            }
            v[c] = value;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

DenseMatrix dense_inverse(const DenseMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw BadRequestError("matrix must be square");
    }
    DenseMatrix a = m;
    DenseMatrix inv(n, std::vector<Scalar>(n, Scalar::zero()));
    for (std::size_t k = 0; k < n; ++k) inv[k][k] = Scalar::one();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw NonInvertibleBasisError("matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Scalar lead_inv = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= lead_inv;
            inv[col][j] *= lead_inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Scalar factor = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= factor * a[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace qlie
