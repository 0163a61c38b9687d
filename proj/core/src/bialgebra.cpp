#include "qlie/bialgebra.hpp"

#include <algorithm>
#include <sstream>

namespace qlie {

namespace {

void accumulate(Element& target, int key, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = target.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) target.erase(it);
    }
}

void accumulate(Tensor2& target, PairKey key, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = target.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) target.erase(it);
    }
}

} // namespace

LieBialgebra::LieBialgebra(std::vector<std::string> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) throw BadRequestError("a bialgebra needs at least one generator");
    for (int k = 0; k < dim(); ++k) {
        if (generators_[k].empty()) throw BadRequestError("generator names must be nonempty");
        auto [it, inserted] = index_.try_emplace(generators_[k], k);
        if (!inserted) throw DuplicateEntryError("duplicate generator name: '" + generators_[k] + "'");
    }
}

int LieBialgebra::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownGeneratorError("unknown generator: '" + name + "'");
    return it->second;
}

void LieBialgebra::set_bracket(int p, int q, int r, const Scalar& v) {
    if (p == q) throw BadRequestError("bracket of a generator with itself is zero");
    if (p < 0 || q < 0 || r < 0 || p >= dim() || q >= dim() || r >= dim()) {
        throw BadRequestError("generator index out of range");
    }
    const bool flip = p > q;
    const PairKey key = flip ? PairKey{q, p} : PairKey{p, q};
    Element& row = brackets_[key];
    accumulate(row, r, flip ? -v : v);
    if (row.empty()) brackets_.erase(key);
}

void LieBialgebra::set_cocommutator(int r, int p, int q, const Scalar& v) {
    if (p == q) throw BadRequestError("cocommutator wedge needs two distinct generators");
    if (p < 0 || q < 0 || r < 0 || p >= dim() || q >= dim() || r >= dim()) {
        throw BadRequestError("generator index out of range");
    }
    const bool flip = p > q;
    const PairKey key = flip ? PairKey{q, p} : PairKey{p, q};
    auto& row = cocoms_[r];
    const Scalar signed_v = flip ? -v : v;
    auto [it, inserted] = row.try_emplace(key, signed_v);
    if (!inserted) {
        it->second += signed_v;
        if (it->second.is_zero()) row.erase(it);
    }
    if (row.empty()) cocoms_.erase(r);
}

Scalar LieBialgebra::bracket_coeff(int p, int q, int r) const {
    if (p == q) return Scalar::zero();
    const bool flip = p > q;
    const PairKey key = flip ? PairKey{q, p} : PairKey{p, q};
    auto row = brackets_.find(key);
    if (row == brackets_.end()) return Scalar::zero();
    auto it = row->second.find(r);
    if (it == row->second.end()) return Scalar::zero();
    return flip ? -it->second : it->second;
}

Scalar LieBialgebra::cocom_coeff(int r, int p, int q) const {
    if (p == q) return Scalar::zero();
    auto row = cocoms_.find(r);
    if (row == cocoms_.end()) return Scalar::zero();
    const bool flip = p > q;
    const PairKey key = flip ? PairKey{q, p} : PairKey{p, q};
    auto it = row->second.find(key);
    if (it == row->second.end()) return Scalar::zero();
    return flip ? -it->second : it->second;
}

Element LieBialgebra::bracket(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [p, xp] : x) {
        for (const auto& [q, yq] : y) {
            if (p == q) continue;
            const bool flip = p > q;
            const PairKey key = flip ? PairKey{q, p} : PairKey{p, q};
            auto row = brackets_.find(key);
            if (row == brackets_.end()) continue;
            const Scalar factor = flip ? -(xp * yq) : xp * yq;
            for (const auto& [r, f] : row->second) accumulate(out, r, factor * f);
        }
    }
    return out;
}

Tensor2 LieBialgebra::cocommutator_of(int r) const {
    Tensor2 out;
    auto row = cocoms_.find(r);
    if (row == cocoms_.end()) return out;
    for (const auto& [pq, w] : row->second) {
        accumulate(out, pq, w);
        accumulate(out, {pq.second, pq.first}, -w);
    }
    return out;
}

Tensor2 LieBialgebra::cocommutator(const Element& x) const {
    Tensor2 out;
    for (const auto& [r, xr] : x) {
        auto row = cocoms_.find(r);
        if (row == cocoms_.end()) continue;
        for (const auto& [pq, w] : row->second) {
            accumulate(out, pq, xr * w);
            accumulate(out, {pq.second, pq.first}, -(xr * w));
        }
    }
    return out;
}

bool LieBialgebra::cocommutator_is_zero() const {
    return cocoms_.empty();
}

Tensor2 LieBialgebra::ad_action(const Element& x, const Tensor2& t) const {
    Tensor2 out;
    for (const auto& [ab, v] : t) {
        const Element left = bracket(x, Element{{ab.first, Scalar::one()}});
        for (const auto& [m, f] : left) accumulate(out, {m, ab.second}, v * f);
        const Element right = bracket(x, Element{{ab.second, Scalar::one()}});
        for (const auto& [m, f] : right) accumulate(out, {ab.first, m}, v * f);
    }
    return out;
}

LieBialgebra LieBialgebra::dualized() const {
    std::vector<std::string> names;
    names.reserve(generators_.size());
    for (const auto& g : generators_) names.push_back(g + "*");
    LieBialgebra dual(std::move(names));
    for (const auto& [r, row] : cocoms_) {
        for (const auto& [pq, w] : row) dual.set_bracket(pq.first, pq.second, r, w);
    }
    for (const auto& [pq, row] : brackets_) {
        for (const auto& [r, f] : row) dual.set_cocommutator(r, pq.first, pq.second, f);
    }
    return dual;
}

LieBialgebra LieBialgebra::transformed(const DenseMatrix& m, std::vector<std::string> new_names) const {
    const int n = dim();
    if (static_cast<int>(m.size()) != n || static_cast<int>(new_names.size()) != n) {
        throw BadRequestError("basis change needs a square matrix and one name per generator");
    }
    const DenseMatrix minv = dense_inverse(m);
    LieBialgebra out(std::move(new_names));

    auto to_new_coords = [&](const Element& old) {
        Element res;
        for (const auto& [j, v] : old) {
            for (int k = 0; k < n; ++k) accumulate(res, k, v * minv[j][k]);
        }
        return res;
    };

    for (int i = 0; i < n; ++i) {
        Element yi;
        for (int a = 0; a < n; ++a) accumulate(yi, a, m[i][a]);
        for (int j = i + 1; j < n; ++j) {
            Element yj;
            for (int a = 0; a < n; ++a) accumulate(yj, a, m[j][a]);
            const Element br = to_new_coords(bracket(yi, yj));
            for (const auto& [r, f] : br) out.set_bracket(i, j, r, f);
        }
        // delta(Y_i) in old coordinates, then both tensor slots moved to the
        // new basis; the result stays skew, so reading p < q suffices.
        Tensor2 moved;
        for (const auto& [pq, v] : cocommutator(yi)) {
            for (int s = 0; s < n; ++s) {
                if (minv[pq.first][s].is_zero()) continue;
                for (int t = 0; t < n; ++t) {
                    accumulate(moved, {s, t}, v * minv[pq.first][s] * minv[pq.second][t]);
                }
            }
        }
        for (const auto& [st, v] : moved) {
            if (st.first < st.second) out.set_cocommutator(i, st.first, st.second, v);
        }
    }
    return out;
}

LieBialgebra LieBialgebra::restricted(const std::vector<int>& keep) const {
    std::map<int, int> remap;
    std::vector<std::string> names;
    for (int old : keep) {
        if (old < 0 || old >= dim()) throw BadRequestError("generator index out of range");
        auto [it, inserted] = remap.try_emplace(old, static_cast<int>(names.size()));
        if (!inserted) throw DuplicateEntryError("generator kept twice in restriction");
        names.push_back(generators_[old]);
    }
    LieBialgebra out(names);

    auto remapped = [&](int old, const char* what) {
        auto it = remap.find(old);
        if (it == remap.end()) {
            throw BadRequestError(std::string("restriction is not closed: ") + what +
                                  " escapes into '" + generators_[old] + "'");
        }
        return it->second;
    };

    for (const auto& [pq, row] : brackets_) {
        if (!remap.count(pq.first) || !remap.count(pq.second)) continue;
        for (const auto& [r, f] : row) {
            out.set_bracket(remap.at(pq.first), remap.at(pq.second), remapped(r, "a bracket"), f);
        }
    }
    for (const auto& [r, row] : cocoms_) {
        if (!remap.count(r)) continue;
        for (const auto& [pq, w] : row) {
            out.set_cocommutator(remap.at(r), remapped(pq.first, "a cocommutator"),
                                 remapped(pq.second, "a cocommutator"), w);
        }
    }
    return out;
}

bool LieBialgebra::check_jacobi(std::string* detail) const {
    for (int p = 0; p < dim(); ++p) {
        const Element ep{{p, Scalar::one()}};
        for (int q = p + 1; q < dim(); ++q) {
            const Element eq{{q, Scalar::one()}};
            for (int r = q + 1; r < dim(); ++r) {
                const Element er{{r, Scalar::one()}};
                Element sum = bracket(bracket(ep, eq), er);
                for (const auto& [k, v] : bracket(bracket(eq, er), ep)) accumulate(sum, k, v);
                for (const auto& [k, v] : bracket(bracket(er, ep), eq)) accumulate(sum, k, v);
                if (!sum.empty()) {
                    if (detail) {
                        *detail = "Jacobi fails on (" + generators_[p] + ", " + generators_[q] +
                                  ", " + generators_[r] + "): residual " + render_element(*this, sum);
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

bool LieBialgebra::check_cojacobi(std::string* detail) const {
    std::string inner;
    if (dualized().check_jacobi(detail ? &inner : nullptr)) return true;
    if (detail) *detail = "dual bracket: " + inner;
    return false;
}

bool LieBialgebra::check_cocycle(std::string* detail) const {
    for (int p = 0; p < dim(); ++p) {
        const Element ep{{p, Scalar::one()}};
        for (int q = p + 1; q < dim(); ++q) {
            const Element eq{{q, Scalar::one()}};
            Tensor2 lhs = cocommutator(bracket(ep, eq));
            const Tensor2 rhs_p = ad_action(ep, cocommutator_of(q));
            const Tensor2 rhs_q = ad_action(eq, cocommutator_of(p));
            for (const auto& [k, v] : rhs_p) accumulate(lhs, k, -v);
            for (const auto& [k, v] : rhs_q) accumulate(lhs, k, v);
            if (!lhs.empty()) {
                if (detail) {
                    *detail = "cocycle identity fails on (" + generators_[p] + ", " +
                              generators_[q] + "): residual " + render_tensor2(*this, lhs);
                }
                return false;
            }
        }
    }
    return true;
}

bool LieBialgebra::check_compatibility(std::string* detail) const {
    // Indexed form of the cocycle condition: for all s < t, the tensor with
    // (p,q) entry  sum_r c_r^{p,q} f^r_{s,t}  must equal the four-term sum
    //   sum_r [ c_s^{p,r} f^q_{r,t} + c_s^{r,q} f^p_{r,t}
    //         + c_t^{p,r} f^q_{s,r} + c_t^{r,q} f^p_{s,r} ].
    for (int s = 0; s < dim(); ++s) {
        const Element es{{s, Scalar::one()}};
        for (int t = s + 1; t < dim(); ++t) {
            const Element et{{t, Scalar::one()}};
            Tensor2 lhs;
            for (const auto& [r, f] : bracket(es, et)) {
                for (const auto& [pq, v] : cocommutator_of(r)) accumulate(lhs, pq, f * v);
            }
            Tensor2 rhs;
            for (const auto& [pr, v] : cocommutator_of(s)) {
                const int p = pr.first, r = pr.second;
                // c_s^{p,r} f^q_{r,t} lands at (p, q); the c_s^{r,q} term is
                // the same sum read with the tensor slots swapped.
                const Element br = bracket(Element{{r, Scalar::one()}}, et);
                for (const auto& [q, f] : br) {
                    accumulate(rhs, {p, q}, v * f);
                    accumulate(rhs, {q, p}, -v * f); // c_s^{r,q} with swap (p<->q), skewness of c
                }
            }
            for (const auto& [pr, v] : cocommutator_of(t)) {
                const int p = pr.first, r = pr.second;
                const Element br = bracket(es, Element{{r, Scalar::one()}});
                for (const auto& [q, f] : br) {
                    accumulate(rhs, {p, q}, v * f);
                    accumulate(rhs, {q, p}, -v * f);
                }
            }
            for (const auto& [k, v] : rhs) accumulate(lhs, k, -v);
            if (!lhs.empty()) {
                if (detail) {
                    *detail = "compatibility identity fails on (" + generators_[s] + ", " +
                              generators_[t] + "): residual " + render_tensor2(*this, lhs);
                }
                return false;
            }
        }
    }
    return true;
}

BialgebraChecks run_bialgebra_checks(const LieBialgebra& b) {
    BialgebraChecks out;
    std::string detail;
    out.jacobi = b.check_jacobi(&detail);
    if (!out.jacobi) out.issues.push_back(detail);
    out.cojacobi = b.check_cojacobi(&detail);
    if (!out.cojacobi) out.issues.push_back(detail);
    out.cocycle = b.check_cocycle(&detail);
    if (!out.cocycle) out.issues.push_back(detail);
    out.compatibility = b.check_compatibility(&detail);
    if (!out.compatibility) out.issues.push_back(detail);
    return out;
}

std::string render_element(const LieBialgebra& b, const Element& e) {
    if (e.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : e) {
        if (!first) out << " + ";
        first = false;
        out << "(" << v.render() << ") " << b.generator_name(k);
    }
    return out.str();
}

std::string render_tensor2(const LieBialgebra& b, const Tensor2& t) {
    if (t.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [pq, v] : t) {
        if (!first) out << " + ";
        first = false;
        out << "(" << v.render() << ") " << b.generator_name(pq.first) << " (x) "
            << b.generator_name(pq.second);
    }
    return out.str();
}

LieBialgebra builtin_su2() {
    LieBialgebra b({"J3", "J+", "J-"});
    b.set_bracket(0, 1, 1, Scalar(1));  // [J3, J+] = J+
    b.set_bracket(0, 2, 2, Scalar(-1)); // [J3, J-] = -J-
    b.set_bracket(1, 2, 0, Scalar(1));  // [J+, J-] = J3
    const Scalar half(Rational(1, 2));
    b.set_cocommutator(1, 0, 1, half); // delta(J+) = 1/2 (J3 (x) J+ - J+ (x) J3)
    b.set_cocommutator(2, 0, 2, half); // delta(J-) = 1/2 (J3 (x) J- - J- (x) J3)
    return b;
}

} // namespace qlie
