#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlie/bialgebra.hpp"
#include "qlie/closedform.hpp"
#include "qlie/pbw.hpp"
#include "qlie/scalar.hpp"

namespace qlie {

// All monomials of the exact total degree, ascending in the monomial order.
std::vector<Monomial> monomials_of_degree(int num_gens, int degree);

// Mixed part of the primitive coproduct of P (degree >= 2):
//   Delta0(P) - P (x) 1 - 1 (x) P.
// These span the coboundary directions at each degree; distinct P have
// disjoint coordinate supports, so they are independent and can be projected
// away one at a time.
std::map<PairMono, Scalar> gauge_tensor(const Monomial& P);

// Result of the order-by-order deformation of U(g) driven by the
// cocommutator: coproduct images and commutator table exact through z^order,
// with first-order layer pinned to the input cocommutator and all coboundary
// freedom projected away, which makes the output canonical.
struct QuantizationResult {
    LieBialgebra classical;
    int order;      // z-orders 0..order are exact
    int degree_cap; // maximum monomial degree allowed in corrections
    UEA algebra;
    Coproduct coproduct;
    // Per order k = 1..order: dim ker(order-k linear system) minus the number
    // of coboundary directions.  Zero means the correction was unique up to
    // the projected gauge freedom.
    std::vector<int> residual_gauge_dims;
    std::map<std::string, FactoredCoproduct> recognized_coproducts;   // by generator name
    std::map<std::string, SeriesClosedForm> recognized_commutators;   // by "[A,B]"
    std::vector<std::string> warnings;
};

// Compute the canonical deformation of the validated input through z^order.
// Throws BadRequestError when the input fails the bialgebra axioms,
// NoSolutionError when an order is obstructed or the degree cap binds.
QuantizationResult quantize(const LieBialgebra& b, int order, int degree_cap);
QuantizationResult quantize(const LieBialgebra& b, int order); // degree_cap = order + 2

// Skew part of the first-order coproduct layer, read back as a cocommutator
// table in the same shape as LieBialgebra::cocom_table().  Round-trips the
// input of quantize().
std::map<int, std::map<PairKey, Scalar>> extract_cocommutator(const QuantizationResult& r);

struct BasisChangeEntry {
    int zord;       // z-order of the subtracted correction
    int degree;     // total degree of the subtracted monomials (0 = constants)
    int generator;  // which basis element was corrected
    UEAElement subtracted;
};

struct PrimitivizeResult {
    std::vector<UEAElement> recovered;
    std::vector<BasisChangeEntry> log;
};

// Iteratively subtract the higher-degree tail of each basis element, reading
// the correction at each (z-order, degree) off the mixed part of its
// coproduct, until the coproduct of each element matches the stored images of
// its own linear part (classically: until each element is primitive).
// Corrections stop at degree_cap.  Requires one element per generator with an
// invertible linear part at z^0 (throws NonInvertibleBasisError otherwise).
PrimitivizeResult friedrichs_primitivize(const UEA& algebra, const Coproduct& cop,
                                         const std::vector<UEAElement>& basis, int degree_cap);
// Classical convenience: primitive coproduct at the algebra's truncation order.
PrimitivizeResult friedrichs_primitivize(const UEA& algebra,
                                         const std::vector<UEAElement>& basis, int degree_cap);

} // namespace qlie
