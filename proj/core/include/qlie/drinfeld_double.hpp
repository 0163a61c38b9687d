#pragma once

#include <string>
#include <vector>

#include "qlie/bialgebra.hpp"

namespace qlie {

// A Lie bialgebra equipped with the canonical invariant pairing of a
// classical double, written in whatever basis the algebra currently uses.
struct DoubleAlgebra {
    LieBialgebra algebra;
    DenseMatrix pairing; // Gram matrix over the algebra's basis
    int half_dim = 0;    // generators 0..half_dim-1 came from the original half
};

// Classical double of a Lie bialgebra.  With half structure constants
// f^r_{p,q} (brackets) and c_r^{p,q} (cocommutators), the double carries
//   [Z_p, Z_q] = f^r_{p,q} Z_r,       [z^p, z^q] = c_r^{p,q} z^r,
//   [z^p, Z_q] = f^p_{q,r} z^r - c_q^{p,r} Z_r,
// a cocommutator
//   delta(Z_p) = -c_p^{q,r} Z_q (x) Z_r,   delta(z^p) = +f^p_{q,r} z^q (x) z^r,
// and the pairing <Z_p, z^q> = delta_p^q, <Z,Z> = <z,z> = 0.
DoubleAlgebra build_double(const LieBialgebra& half, std::vector<std::string> dual_names);
DoubleAlgebra build_double(const LieBialgebra& half); // dual names get a "^*" suffix

// <x, y> under the Gram matrix of d.
Scalar pair_elements(const DoubleAlgebra& d, const Element& x, const Element& y);

// Ad-invariance <[x,y], w> + <y, [x,w]> = 0 over all basis triples.
bool check_pairing_invariance(const DoubleAlgebra& d, std::string* detail = nullptr);

// Half self-duality: the cocommutator table equals the negated bracket
// table entrywise (c_r^{p,q} == -f^r_{p,q}).
bool is_self_dual_half(const LieBialgebra& half);

// Move a double to the mixed self-dual basis: each half index m listed in
// `mixed` is replaced by the pair
//   H = (Z_m + z^m) / 2^(1/2),   I = -(i / 2^(1/2)) (Z_m - z^m),
// and the remaining Z / z generators are kept.  New generator order:
// all H (in listed order), all I, remaining Z ascending, remaining z
// ascending; `new_names` follows that order.  The pairing moves covariantly.
DoubleAlgebra mixed_basis(const DoubleAlgebra& d, const std::vector<int>& mixed,
                          std::vector<std::string> new_names);

// --- built-in families ------------------------------------------------

// Two-generator half: [Z1, Z2] = (1/2^(1/2)) Z2, cocommutator = negated
// bracket table.  Its double in the mixed basis is su2 (+) t1.
LieBialgebra su2_t1_half();
// Mixed basis of the double, generators (J3, I, J+, J-).
DoubleAlgebra su2_t1_double_mixed();

// Upper-triangular half of gl(N) (+) t_N, N in 2..9: Cartan generators
// Z1..ZN and raising generators Zij (i<j), with
//   [Zi, Zjk] = (1/2^(1/2)) (delta_ij - delta_ik) Zjk,
//   [Zij, Zkl] = delta_jk Zil - delta_il Zkj,
// cocommutator = negated bracket table.
LieBialgebra gl_tn_half(int N);
// Mixed basis of the double, generators (H1..HN, I1..IN, Fij upper block
// in lex order, Fji lower block in the same pair order).
DoubleAlgebra gl_tn_double_mixed(int N);

// Closed-form cocommutator table expected for gl_tn_double_mixed(N), on the
// same generator order: H and I are cocommutator-free, and with the wedge
// a /\ b = a (x) b - b (x) a,
//   i < j:  delta(Fij) = -1/2 Fij /\ (Hi - Hj) - i/2 Fij /\ (Ii - Ij)
//                        + sum_{i<k<j} Fik /\ Fkj,
//   i > j:  delta(Fij) = +1/2 Fij /\ (Hi - Hj) - i/2 Fij /\ (Ii - Ij)
//                        - sum_{j<k<i} Fik /\ Fkj.
std::map<int, std::map<PairKey, Scalar>> canonical_gl_cocommutators(int N);

// Quotient by central, cocommutator-free generators (the trivial abelian
// block of a mixed-basis double): the listed generators are set to zero and
// every remaining table entry is projected onto the kept span.  Throws
// NotCentralError when a listed generator has a nonzero bracket with
// anything, and BadRequestError when its own cocommutator is nonzero.
LieBialgebra drop_central_block(const LieBialgebra& b, const std::vector<int>& kill);

// Builtin registry for the command-line surface: "su2", "su2+t1", "gl:N"
// (mixed-basis doubles) and "su2+t1:half", "gl:N:half" (the halves).
LieBialgebra lookup_builtin(const std::string& name);
std::vector<std::string> builtin_names();

} // namespace qlie
