#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlie/linsolve.hpp"
#include "qlie/scalar.hpp"

namespace qlie {

using PairKey = std::pair<int, int>;
using Element = std::map<int, Scalar>;     // vector in the algebra, generator index -> coefficient
using Tensor2 = std::map<PairKey, Scalar>; // element of g (x) g, (left index, right index) -> coefficient

// A finite-dimensional Lie bialgebra presented by structure constants:
//   [X_p, X_q]  = sum_r f^r_{p,q} X_r                       (brackets)
//   delta(X_r)  = sum_{p<q} w_r^{p,q} (X_p (x) X_q - X_q (x) X_p)   (cocommutators)
// Brackets are stored for p < q and completed antisymmetrically; the
// cocommutator is stored on the wedge basis (p < q) and expands to the skew
// plain tensor c_r^{p,q} = w_r^{p,q} = -c_r^{q,p}.
class LieBialgebra {
  public:
    explicit LieBialgebra(std::vector<std::string> generators);

    int dim() const { return static_cast<int>(generators_.size()); }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::string& generator_name(int k) const { return generators_.at(k); }
    int index_of(const std::string& name) const; // throws UnknownGeneratorError

    // [X_p, X_q] += v X_r (p != q; stored canonically).
    void set_bracket(int p, int q, int r, const Scalar& v);
    // delta(X_r) += v (X_p (x) X_q - X_q (x) X_p) (p != q; stored canonically).
    void set_cocommutator(int r, int p, int q, const Scalar& v);

    // f^r_{p,q}, antisymmetry applied; zero when unset.
    Scalar bracket_coeff(int p, int q, int r) const;
    // Plain-tensor coefficient c_r^{p,q} of X_p (x) X_q in delta(X_r).
    Scalar cocom_coeff(int r, int p, int q) const;

    Element bracket(const Element& x, const Element& y) const;
    Tensor2 cocommutator(const Element& x) const;
    Tensor2 cocommutator_of(int r) const;
    bool cocommutator_is_zero() const;

    // (ad_x (x) 1 + 1 (x) ad_x) applied to a 2-tensor.
    Tensor2 ad_action(const Element& x, const Tensor2& t) const;

    // Swap brackets and cocommutators; an involution up to generator names.
    LieBialgebra dualized() const;
    // New basis Y_i = sum_j m[i][j] X_j (m invertible).
    LieBialgebra transformed(const DenseMatrix& m, std::vector<std::string> new_names) const;
    // Sub-bialgebra on the kept generators; every bracket and cocommutator
    // of kept generators must stay inside the span of kept generators.
    LieBialgebra restricted(const std::vector<int>& keep) const;

    bool check_jacobi(std::string* detail = nullptr) const;
    bool check_cojacobi(std::string* detail = nullptr) const;
    bool check_cocycle(std::string* detail = nullptr) const;
    // The cocycle condition in fully indexed form; must agree with
    // check_cocycle on every input.
    bool check_compatibility(std::string* detail = nullptr) const;

    // Raw canonical tables (keys have p < q).
    const std::map<PairKey, Element>& bracket_table() const { return brackets_; }
    const std::map<int, std::map<PairKey, Scalar>>& cocom_table() const { return cocoms_; }

  private:
    std::vector<std::string> generators_;
    std::map<std::string, int> index_;
    std::map<PairKey, Element> brackets_;                // (p<q) -> {r -> f^r_{p,q}}
    std::map<int, std::map<PairKey, Scalar>> cocoms_;    // r -> {(p<q) -> w_r^{p,q}}
};

// Outcome of the validation checks, with human-readable failure notes.
struct BialgebraChecks {
    bool jacobi = false;
    bool cojacobi = false;
    bool cocycle = false;
    bool compatibility = false;
    std::vector<std::string> issues;
    bool all_ok() const { return jacobi && cojacobi && cocycle && compatibility; }
};

BialgebraChecks run_bialgebra_checks(const LieBialgebra& b);

std::string render_element(const LieBialgebra& b, const Element& e);
std::string render_tensor2(const LieBialgebra& b, const Tensor2& t);

// The standard quantized-rotation example: generators J3, J+, J- with
// [J3, J+] = J+, [J3, J-] = -J-, [J+, J-] = J3 and
// delta(J+-) = 1/2 (J3 (x) J+- - J+- (x) J3), delta(J3) = 0.
LieBialgebra builtin_su2();

} // namespace qlie
