#include "qlie/quantize.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "qlie/errors.hpp"
#include "qlie/linsolve.hpp"

namespace qlie {

namespace {

void enumerate_monomials(int num_gens, int pos, int remaining, std::vector<int>& exps,
                         std::vector<Monomial>& out) {
    if (pos == num_gens - 1) {
        exps[static_cast<std::size_t>(pos)] = remaining;
        Monomial m(num_gens);
        for (int g = 0; g < num_gens; ++g)
            for (int e = 0; e < exps[static_cast<std::size_t>(g)]; ++e) m = m.times(g);
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[static_cast<std::size_t>(pos)] = e;
        enumerate_monomials(num_gens, pos + 1, remaining - e, exps, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int num_gens, int degree) {
    if (num_gens < 1 || degree < 0) throw BadRequestError("monomials_of_degree: bad arguments");
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(num_gens), 0);
    enumerate_monomials(num_gens, 0, degree, exps, out);
    return out;
}

std::map<PairMono, Scalar> gauge_tensor(const Monomial& P) {
    if (P.degree() < 2) throw BadRequestError("gauge_tensor: monomial degree must be >= 2");
    std::map<PairMono, Scalar> splits = primitive_splits(P);
    const Monomial unit = Monomial::unit(P.num_gens());
    splits.erase(PairMono{P, unit});
    splits.erase(PairMono{unit, P});
    return splits;
}

namespace {

// -------------------------------------------------------------------------
// Shared helpers for the order-k linear solves.

struct RowInterner {
    std::map<std::tuple<Monomial, Monomial, Monomial>, int> ids;
    std::vector<std::tuple<Monomial, Monomial, Monomial>> by_id;
    int id(const Monomial& a, const Monomial& b, const Monomial& c) {
        auto key = std::make_tuple(a, b, c);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        const int fresh = static_cast<int>(by_id.size());
        by_id.push_back(key);
        ids.emplace(std::move(key), fresh);
        return fresh;
    }
    std::string render(const UEA& u, int row) const {
        if (row < 0) return "skew-normalization row " + std::to_string(-1 - row);
        const auto& [a, b, c] = by_id.at(static_cast<std::size_t>(row));
        return render_monomial(u, a) + " (x) " + render_monomial(u, b) + " (x) " +
               render_monomial(u, c);
    }
};

void sparse_add(SparseVec& v, int row, const Scalar& value) {
    if (value.is_zero()) return;
    auto [it, fresh] = v.emplace(row, value);
    if (!fresh) {
        it->second = it->second + value;
        if (it->second.is_zero()) v.erase(it);
    }
}

void map_add(std::map<PairMono, Scalar>& v, const PairMono& key, const Scalar& value) {
    if (value.is_zero()) return;
    auto [it, fresh] = v.emplace(key, value);
    if (!fresh) {
        it->second = it->second + value;
        if (it->second.is_zero()) v.erase(it);
    }
}

// True when the monomial never appears inside deformation corrections on its
// own account: single powers are reproduced by every split pattern, and
// generators with zero cocommutator stay undeformed.
bool monomial_is_plain(const Monomial& m, const std::vector<bool>& delta_null) {
    if (m.is_single_power()) return true;
    for (int g = 0; g < m.num_gens(); ++g)
        if (m.exp(g) > 0 && !delta_null[static_cast<std::size_t>(g)]) return false;
    return true;
}

struct GaugeDirection {
    Monomial mono;
    std::map<PairMono, Scalar> tensor;
    std::vector<PairMono> marker; // coordinates used by the normalization functional
    Scalar norm = Scalar::zero(); // sum of squared marker coefficients (> 0)
};

std::vector<GaugeDirection> build_gauge_directions(int num_gens, int degree,
                                                   const std::vector<bool>& delta_null) {
    std::vector<GaugeDirection> out;
    for (const Monomial& P : monomials_of_degree(num_gens, degree)) {
        GaugeDirection dir{P, gauge_tensor(P), {}, Scalar::zero()};
        for (const auto& [pm, c] : dir.tensor) {
            (void)c;
            if (!monomial_is_plain(pm.left, delta_null) ||
                !monomial_is_plain(pm.right, delta_null))
                dir.marker.push_back(pm);
        }
        if (dir.marker.empty())
            for (const auto& [pm, c] : dir.tensor) {
                (void)c;
                dir.marker.push_back(pm);
            }
        for (const PairMono& pm : dir.marker) {
            const Scalar& c = dir.tensor.at(pm);
            dir.norm = dir.norm + c * c;
        }
        out.push_back(std::move(dir));
    }
    return out;
}

// Remove every coboundary component, measured on the marker coordinates.
// The supports of distinct directions are disjoint, so order does not matter.
void project_out_gauge(std::map<PairMono, Scalar>& T, const std::vector<GaugeDirection>& dirs) {
    for (const GaugeDirection& dir : dirs) {
        Scalar phi = Scalar::zero();
        for (const PairMono& pm : dir.marker) {
            auto it = T.find(pm);
            if (it != T.end()) phi = phi + dir.tensor.at(pm) * it->second;
        }
        if (phi.is_zero()) continue;
        const Scalar ratio = phi * dir.norm.inverse();
        for (const auto& [pm, c] : dir.tensor) map_add(T, pm, -(ratio * c));
    }
}

int single_generator_of(const Monomial& m) {
    for (int g = 0; g < m.num_gens(); ++g)
        if (m.exp(g) > 0) return g;
    return -1;
}

// Mixed part of the primitive coproduct of a polynomial layer.
std::map<PairMono, Scalar> mixed_coproduct(const std::map<Monomial, Scalar>& poly, int num_gens) {
    std::map<PairMono, Scalar> out;
    const Monomial unit = Monomial::unit(num_gens);
    for (const auto& [m, c] : poly) {
        std::map<PairMono, Scalar> splits = primitive_splits(m);
        splits.erase(PairMono{m, unit});
        splits.erase(PairMono{unit, m});
        for (const auto& [pm, w] : splits) map_add(out, pm, c * w);
    }
    return out;
}

std::string render_tensor3_layer(const UEA& u, const UEATensor3& t, int k) {
    std::string out;
    for (const auto& [key, v] : t.terms()) {
        if (key.zord != k) continue;
        if (!out.empty()) out += " + ";
        out += "(" + v.render() + ") " + render_monomial(u, key.a) + " (x) " +
               render_monomial(u, key.b) + " (x) " + render_monomial(u, key.c);
    }
    return out.empty() ? "0" : out;
}

std::string render_pair_layer(const UEA& u, const std::map<PairMono, Scalar>& layer) {
    std::string out;
    for (const auto& [pm, v] : layer) {
        if (!out.empty()) out += " + ";
        out += "(" + v.render() + ") " + render_monomial(u, pm.left) + " (x) " +
               render_monomial(u, pm.right);
    }
    return out.empty() ? "0" : out;
}

// -------------------------------------------------------------------------
// Order-k coproduct correction: solve the linearized coassociativity
// equation for the degree-(k+1) layer of every generator image, then project
// away the coboundary freedom.

void solve_coproduct_order(const LieBialgebra& b, const UEA& u, Coproduct& cop, int k,
                           const std::vector<GaugeDirection>& dirs, int& gauge_defect) {
    const int n = u.num_gens();
    const Monomial unit = Monomial::unit(n);

    // Unknown slots: tensor pairs of total degree k+1, unit slots included.
    std::vector<PairMono> pairs;
    for (int dl = 0; dl <= k + 1; ++dl) {
        for (const Monomial& ml : monomials_of_degree(n, dl))
            for (const Monomial& mr : monomials_of_degree(n, k + 1 - dl))
                pairs.push_back(PairMono{ml, mr});
    }

    // First-order normalization rows: the skew part of the new layer must
    // reproduce the input cocommutator.  Synthetic rows use negative keys so
    // they can never collide with interned equation rows.
    std::map<PairMono, SparseVec> constraint_cols;
    std::vector<std::pair<int, PairKey>> constraint_rows;
    if (k == 1) {
        int cidx = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const int rid = -1 - cidx++;
                constraint_cols[PairMono{Monomial::generator(n, p), Monomial::generator(n, q)}]
                    .emplace(rid, Scalar::one());
                constraint_cols[PairMono{Monomial::generator(n, q), Monomial::generator(n, p)}]
                    .emplace(rid, -Scalar::one());
                constraint_rows.emplace_back(rid, PairKey{p, q});
            }
    }

    RowInterner rows;
    SparseSolver solver;
    for (const PairMono& pm : pairs) {
        SparseVec col;
        for (const auto& [ab, c] : primitive_splits(pm.left))
            sparse_add(col, rows.id(ab.left, ab.right, pm.right), c);
        for (const auto& [ab, c] : primitive_splits(pm.right))
            sparse_add(col, rows.id(pm.left, ab.left, ab.right), -c);
        sparse_add(col, rows.id(pm.left, pm.right, unit), Scalar::one());
        sparse_add(col, rows.id(unit, pm.left, pm.right), -Scalar::one());
        auto cit = constraint_cols.find(pm);
        if (cit != constraint_cols.end())
            for (const auto& [rid, v] : cit->second) sparse_add(col, rid, v);
        solver.add_column(std::move(col));
    }

    // Right-hand sides: minus the order-k coassociativity residual of the
    // partial structure, one slot per generator.
    std::vector<int> slots;
    for (int g = 0; g < n; ++g) {
        const UEAElement y = UEAElement::generator(n, g, u.zcap());
        const UEATensor3 defect = cop.coassociativity_defect(u, y, k);
        SparseVec rhs;
        for (const auto& [key, v] : defect.terms()) {
            if (key.zord < k)
                throw ComputeError(
                    "internal: stale coassociativity residual below the current order");
            if (key.zord > k) continue;
            const int deg = key.a.degree() + key.b.degree() + key.c.degree();
            if (deg != k + 1)
                throw NoSolutionError(
                    "coassociativity residual at order " + std::to_string(k) + " for " +
                    u.name(g) + " is not weight-homogeneous: " + render_tensor3_layer(u, defect, k));
            rhs.emplace(rows.id(key.a, key.b, key.c), -v);
        }
        if (k == 1)
            for (const auto& [rid, pq] : constraint_rows) {
                const Scalar w = b.cocom_coeff(g, pq.first, pq.second);
                sparse_add(rhs, rid, w + w);
            }
        slots.push_back(solver.add_rhs(std::move(rhs)));
    }

    solver.factorize();
    const int kernel_dim = solver.num_columns() - solver.rank();
    gauge_defect = kernel_dim - static_cast<int>(dirs.size());

    for (int g = 0; g < n; ++g) {
        const SolveOutcome outcome = solver.solve(slots[static_cast<std::size_t>(g)]);
        if (!outcome.consistent) {
            std::string rendered;
            for (const auto& [row, v] : outcome.residual) {
                if (!rendered.empty()) rendered += " + ";
                rendered += "(" + v.render() + ") " + rows.render(u, row);
            }
            throw NoSolutionError("obstruction at order " + std::to_string(k) +
                                  " solving the coproduct layer of " + u.name(g) +
                                  ": unreachable residual " + rendered);
        }
        std::map<PairMono, Scalar> T;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (!outcome.particular[i].is_zero()) T.emplace(pairs[i], outcome.particular[i]);
        project_out_gauge(T, dirs);
        for (const auto& [pm, v] : T) {
            (void)v;
            if (pm.left.is_unit() || pm.right.is_unit())
                throw ComputeError("internal: counit axiom violated by the order-" +
                                   std::to_string(k) + " coproduct layer of " + u.name(g));
        }
        if (!T.empty()) cop.add_image_layer(g, k, T);
    }

    // The projected layers must still satisfy coassociativity exactly.
    for (int g = 0; g < n; ++g) {
        const UEAElement y = UEAElement::generator(n, g, u.zcap());
        if (!cop.coassociativity_defect(u, y, k).is_zero())
            throw ComputeError("internal: coboundary projection broke coassociativity at order " +
                               std::to_string(k) + " for " + u.name(g));
    }
}

// -------------------------------------------------------------------------
// Order-k commutator correction: the deformed coproduct must stay an algebra
// map, which pins the z^k layer of every table entry.

void solve_commutator_order(UEA& u, Coproduct& cop, int k, std::vector<std::string>& warnings) {
    const int n = u.num_gens();

    struct Update {
        int p, q;
        std::map<Monomial, Scalar> layer;
    };
    std::vector<Update> updates;

    // All residuals are computed against the table truncated below order k
    // before any entry is extended, so the read-off is well defined.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const UEATensor2 ab = u.multiply(cop.image(p), cop.image(q), k);
            const UEATensor2 ba = u.multiply(cop.image(q), cop.image(p), k);
            const UEATensor2 im = cop.apply(u, u.table_entry(p, q), k);
            const std::map<PairMono, Scalar> residual = (ab - ba - im).layer(k);
            if (residual.empty()) continue;

            // The residual must match the mixed primitive coproduct of the
            // correction; single-letter right slots determine it uniquely.
            std::map<Monomial, Scalar> correction;
            for (const auto& [pm, v] : residual) {
                if (pm.right.degree() != 1) continue;
                const int y = single_generator_of(pm.right);
                const Monomial m = pm.left.times(y);
                if (correction.count(m)) continue;
                correction.emplace(m, v * Scalar::of_fraction(1, pm.left.exp(y) + 1));
            }
            if (mixed_coproduct(correction, n) != residual)
                throw NoSolutionError(
                    "obstruction at order " + std::to_string(k) + " deforming [" + u.name(p) +
                    "," + u.name(q) + "]: residual " + render_pair_layer(u, residual) +
                    " is not the mixed coproduct of any correction");
            for (const auto& [m, c] : correction) {
                (void)c;
                if (m.degree() != k + 1)
                    warnings.push_back("commutator correction of unexpected degree " +
                                       std::to_string(m.degree()) + " at order " +
                                       std::to_string(k) + " in [" + u.name(p) + "," + u.name(q) +
                                       "]");
            }
            updates.push_back(Update{p, q, std::move(correction)});
        }
    }

    for (const Update& up : updates) {
        UEAElement entry = u.table_entry(up.p, up.q);
        entry.add_layer(k, up.layer);
        u.set_table_entry(up.p, up.q, entry);
    }
    cop.invalidate_cache();

    // The extended table must make the coproduct an exact algebra map
    // through order k.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const UEATensor2 ab = u.multiply(cop.image(p), cop.image(q), k);
            const UEATensor2 ba = u.multiply(cop.image(q), cop.image(p), k);
            const UEATensor2 im = cop.apply(u, u.table_entry(p, q), k);
            if (!(ab - ba - im).is_zero())
                throw ComputeError("internal: table extension failed the algebra-map check at "
                                   "order " +
                                   std::to_string(k) + " for [" + u.name(p) + "," + u.name(q) +
                                   "]");
        }
    }
}

} // namespace

QuantizationResult quantize(const LieBialgebra& b, int order, int degree_cap) {
    if (order < 0) throw BadRequestError("quantize: order must be >= 0");
    if (degree_cap < 1) throw BadRequestError("quantize: degree cap must be >= 1");
    const BialgebraChecks checks = run_bialgebra_checks(b);
    if (!checks.all_ok()) {
        std::string msg = "quantize: input is not a Lie bialgebra";
        for (const std::string& issue : checks.issues) msg += "; " + issue;
        throw BadRequestError(msg);
    }

    const int n = b.dim();
    UEA u = UEA::classical(b, order);
    Coproduct cop(n, order);
    std::vector<int> gauge_dims;
    std::vector<std::string> warnings;

    std::vector<bool> delta_null(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g)
        delta_null[static_cast<std::size_t>(g)] = b.cocommutator_of(g).empty();

    if (b.cocommutator_is_zero()) {
        // Nothing deforms: primitive coproduct and the classical table are
        // already exact to every order.
        gauge_dims.assign(static_cast<std::size_t>(order), 0);
    } else {
        for (int k = 1; k <= order; ++k) {
            if (k + 1 > degree_cap)
                throw NoSolutionError("quantize: degree cap " + std::to_string(degree_cap) +
                                      " is too small for order " + std::to_string(k) +
                                      " (corrections need degree " + std::to_string(k + 1) + ")");
            const std::vector<GaugeDirection> dirs = build_gauge_directions(n, k + 1, delta_null);
            int defect = 0;
            solve_coproduct_order(b, u, cop, k, dirs, defect);
            gauge_dims.push_back(defect);
            solve_commutator_order(u, cop, k, warnings);
        }
    }

    QuantizationResult result{b,        order, degree_cap, std::move(u), std::move(cop),
                              std::move(gauge_dims), {},    {},          std::move(warnings)};

    for (int g = 0; g < n; ++g)
        if (auto f = factor_coproduct(result.coproduct, g))
            result.recognized_coproducts.emplace(b.generator_name(g), *f);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const UEAElement entry = result.algebra.table_entry(p, q);
            if (entry.is_zero()) continue;
            if (auto s = recognize_single_power_series(entry))
                result.recognized_commutators.emplace(
                    "[" + b.generator_name(p) + "," + b.generator_name(q) + "]", *s);
        }
    return result;
}

QuantizationResult quantize(const LieBialgebra& b, int order) {
    return quantize(b, order, order + 2);
}

std::map<int, std::map<PairKey, Scalar>> extract_cocommutator(const QuantizationResult& r) {
    if (r.order < 1)
        throw BadRequestError("extract_cocommutator: result must hold at least order 1");
    const int n = r.classical.dim();
    const Scalar half = Scalar::of_fraction(1, 2);
    std::map<int, std::map<PairKey, Scalar>> out;
    for (int g = 0; g < n; ++g) {
        const std::map<PairMono, Scalar> layer = r.coproduct.image(g).layer(1);
        std::map<PairMono, Scalar> skew;
        for (const auto& [pm, v] : layer) {
            map_add(skew, pm, half * v);
            map_add(skew, PairMono{pm.right, pm.left}, -(half * v));
        }
        std::map<PairKey, Scalar> wedge;
        for (const auto& [pm, v] : skew) {
            if (pm.left.degree() != 1 || pm.right.degree() != 1)
                throw ComputeError("extract_cocommutator: first-order layer of " +
                                   r.classical.generator_name(g) +
                                   " is not a tensor of generators");
            const int p = single_generator_of(pm.left);
            const int q = single_generator_of(pm.right);
            if (p < q) wedge.emplace(PairKey{p, q}, v);
        }
        if (!wedge.empty()) out.emplace(g, std::move(wedge));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Friedrichs-style recovery of an analytical basis.

namespace {

// Defect of x against the stored images of its own linear part:
//   Delta(x) - sum_j a_j(z) image_j - c(z) 1(x)1 - (x - linear)(x)1 - 1(x)(x - linear).
// Vanishes exactly when the tail of x above degree 1 is zero.
UEATensor2 recovery_defect(const UEA& u, const Coproduct& cop, const UEAElement& x) {
    const int n = u.num_gens();
    const int zcap = x.zcap();
    const Monomial unit = Monomial::unit(n);

    UEATensor2 defect = cop.apply(u, x, zcap);
    for (const auto& [key, v] : x.terms()) {
        const int deg = key.mono.degree();
        if (deg == 0) {
            defect.add_term(key.zord, unit, unit, -v);
        } else if (deg == 1) {
            const int j = single_generator_of(key.mono);
            for (const auto& [ikey, iv] : cop.image(j).terms()) {
                if (key.zord + ikey.zord > zcap) continue;
                defect.add_term(key.zord + ikey.zord, ikey.slots.left, ikey.slots.right,
                                -(v * iv));
            }
        } else {
            defect.add_term(key.zord, key.mono, unit, -v);
            defect.add_term(key.zord, unit, key.mono, -v);
        }
    }
    return defect;
}

} // namespace

PrimitivizeResult friedrichs_primitivize(const UEA& u, const Coproduct& cop,
                                         const std::vector<UEAElement>& basis, int degree_cap) {
    const int n = u.num_gens();
    const int zcap = cop.zcap();
    if (static_cast<int>(basis.size()) != n)
        throw BadRequestError("friedrichs_primitivize: need exactly one element per generator");
    for (const UEAElement& x : basis)
        if (x.num_gens() != n || x.zcap() != zcap)
            throw BadRequestError("friedrichs_primitivize: basis element shape mismatch");
    if (degree_cap < 1) throw BadRequestError("friedrichs_primitivize: degree cap must be >= 1");

    // The classical linear parts must form an invertible change of basis.
    DenseMatrix linear(static_cast<std::size_t>(n),
                       std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            linear[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                basis[static_cast<std::size_t>(i)].coeff(0, Monomial::generator(n, j));
    dense_inverse(linear); // throws NonInvertibleBasisError when singular

    PrimitivizeResult result{basis, {}};
    const Monomial unit = Monomial::unit(n);

    for (int i = 0; i < n; ++i) {
        UEAElement& x = result.recovered[static_cast<std::size_t>(i)];

        // Constants are never primitive; strip them first.
        {
            UEAElement constants(n, zcap);
            for (int t = 0; t <= zcap; ++t) {
                const Scalar c = x.coeff(t, unit);
                if (!c.is_zero()) constants.add_term(t, unit, c);
            }
            if (!constants.is_zero()) {
                x -= constants;
                result.log.push_back(BasisChangeEntry{0, 0, i, std::move(constants)});
            }
        }

        // Ascending (z-order, degree): corrections read off the defect only
        // ever propagate upward in this order.
        for (int k = 0; k <= zcap; ++k) {
            for (int d = 2; d <= degree_cap; ++d) {
                const UEATensor2 defect = recovery_defect(u, cop, x);
                std::map<Monomial, Scalar> tail;
                for (const auto& [pm, v] : defect.layer(k)) {
                    if (pm.right.degree() != 1) continue;
                    if (pm.left.degree() + 1 != d) continue;
                    const int y = single_generator_of(pm.right);
                    const Monomial m = pm.left.times(y);
                    if (tail.count(m)) continue;
                    tail.emplace(m, v * Scalar::of_fraction(1, pm.left.exp(y) + 1));
                }
                if (tail.empty()) continue;
                UEAElement sub(n, zcap);
                for (const auto& [m, c] : tail) sub.add_term(k, m, c);
                x -= sub;
                result.log.push_back(BasisChangeEntry{k, d, i, std::move(sub)});
            }
        }

        // Exactness: within the caps nothing mixed may survive.
        const UEATensor2 final_defect = recovery_defect(u, cop, x);
        for (const auto& [key, v] : final_defect.terms()) {
            (void)v;
            if (key.slots.left.is_unit() || key.slots.right.is_unit()) continue;
            if (key.slots.left.degree() + key.slots.right.degree() <= degree_cap)
                throw ComputeError("friedrichs_primitivize: basis element " + std::to_string(i) +
                                   " could not be reduced within the degree cap");
        }
    }
    return result;
}

PrimitivizeResult friedrichs_primitivize(const UEA& u, const std::vector<UEAElement>& basis,
                                         int degree_cap) {
    const Coproduct primitive(u.num_gens(), u.zcap());
    return friedrichs_primitivize(u, primitive, basis, degree_cap);
}

} // namespace qlie
