#include "qlie/drinfeld_double.hpp"

#include <algorithm>
#include <set>

namespace qlie {

DoubleAlgebra build_double(const LieBialgebra& half, std::vector<std::string> dual_names) {
    const int n = half.dim();
    if (static_cast<int>(dual_names.size()) != n) {
        throw BadRequestError("need exactly one dual name per generator");
    }
    std::vector<std::string> names = half.generators();
    names.insert(names.end(), dual_names.begin(), dual_names.end());
    LieBialgebra d(std::move(names));

    // [Z_p, Z_q] copies the half bracket.
    for (const auto& [pq, row] : half.bracket_table()) {
        for (const auto& [r, f] : row) d.set_bracket(pq.first, pq.second, r, f);
    }
    // [z^p, z^q] = c_r^{p,q} z^r: the dual half bracket.
    for (const auto& [r, row] : half.cocom_table()) {
        for (const auto& [pq, w] : row) d.set_bracket(n + pq.first, n + pq.second, n + r, w);
    }
    // Crossed part: [z^p, Z_q] = f^p_{q,r} z^r - c_q^{p,r} Z_r.
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            for (int r = 0; r < n; ++r) {
                const Scalar f = half.bracket_coeff(q, r, p);
                if (!f.is_zero()) d.set_bracket(n + p, q, n + r, f);
                const Scalar c = half.cocom_coeff(q, p, r);
                if (!c.is_zero()) d.set_bracket(n + p, q, r, -c);
            }
        }
    }
    // delta(Z_p) = -c_p^{q,r} Z_q (x) Z_r.
    for (const auto& [r, row] : half.cocom_table()) {
        for (const auto& [pq, w] : row) d.set_cocommutator(r, pq.first, pq.second, -w);
    }
    // delta(z^p) = +f^p_{q,r} z^q (x) z^r.
    for (const auto& [pq, row] : half.bracket_table()) {
        for (const auto& [r, f] : row) d.set_cocommutator(n + r, n + pq.first, n + pq.second, f);
    }

    DenseMatrix pairing(2 * n, std::vector<Scalar>(2 * n, Scalar::zero()));
    for (int p = 0; p < n; ++p) {
        pairing[p][n + p] = Scalar::one();
        pairing[n + p][p] = Scalar::one();
    }
    return DoubleAlgebra{std::move(d), std::move(pairing), n};
}

DoubleAlgebra build_double(const LieBialgebra& half) {
    std::vector<std::string> dual_names;
    for (const auto& g : half.generators()) dual_names.push_back(g + "^*");
    return build_double(half, std::move(dual_names));
}

Scalar pair_elements(const DoubleAlgebra& d, const Element& x, const Element& y) {
    Scalar out = Scalar::zero();
    for (const auto& [a, xa] : x) {
        for (const auto& [b, yb] : y) out += xa * yb * d.pairing[a][b];
    }
    return out;
}

bool check_pairing_invariance(const DoubleAlgebra& d, std::string* detail) {
    const int dim = d.algebra.dim();
    std::vector<Element> basis(dim);
    for (int k = 0; k < dim; ++k) basis[k] = Element{{k, Scalar::one()}};
    // Cache [e_x, e_y] for all pairs.
    std::vector<std::vector<Element>> br(dim, std::vector<Element>(dim));
    for (int x = 0; x < dim; ++x) {
        for (int y = 0; y < dim; ++y) br[x][y] = d.algebra.bracket(basis[x], basis[y]);
    }
    for (int x = 0; x < dim; ++x) {
        for (int y = 0; y < dim; ++y) {
            for (int w = 0; w < dim; ++w) {
                const Scalar r =
                    pair_elements(d, br[x][y], basis[w]) + pair_elements(d, basis[y], br[x][w]);
                if (!r.is_zero()) {
                    if (detail) {
                        *detail = "pairing invariance fails on (" +
                                  d.algebra.generator_name(x) + ", " +
                                  d.algebra.generator_name(y) + ", " +
                                  d.algebra.generator_name(w) + "): residual " + r.render();
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_self_dual_half(const LieBialgebra& half) {
    // Compare c == -f on the canonical tables: same keys, negated values.
    std::map<PairKey, Element> negated;
    for (const auto& [r, row] : half.cocom_table()) {
        for (const auto& [pq, w] : row) negated[pq][r] = -w;
    }
    return negated == half.bracket_table();
}

DoubleAlgebra mixed_basis(const DoubleAlgebra& d, const std::vector<int>& mixed,
                          std::vector<std::string> new_names) {
    const int n = d.half_dim;
    const int dim = d.algebra.dim();
    std::set<int> mixed_set;
    for (int m : mixed) {
        if (m < 0 || m >= n) throw BadRequestError("mixed index outside the half");
        if (!mixed_set.insert(m).second) throw DuplicateEntryError("mixed index listed twice");
    }

    DenseMatrix m_rows;
    const Scalar inv_r2 = Scalar::inv_sqrt2();
    const Scalar minus_i_inv_r2 = -(Scalar::i() * inv_r2);
    for (int m : mixed) { // H block
        std::vector<Scalar> row(dim, Scalar::zero());
        row[m] = inv_r2;
        row[n + m] = inv_r2;
        m_rows.push_back(std::move(row));
    }
    for (int m : mixed) { // I block
        std::vector<Scalar> row(dim, Scalar::zero());
        row[m] = minus_i_inv_r2;
        row[n + m] = -minus_i_inv_r2;
        m_rows.push_back(std::move(row));
    }
    for (int k = 0; k < n; ++k) { // kept Z block
        if (mixed_set.count(k)) continue;
        std::vector<Scalar> row(dim, Scalar::zero());
        row[k] = Scalar::one();
        m_rows.push_back(std::move(row));
    }
    for (int k = 0; k < n; ++k) { // kept z block
        if (mixed_set.count(k)) continue;
        std::vector<Scalar> row(dim, Scalar::zero());
        row[n + k] = Scalar::one();
        m_rows.push_back(std::move(row));
    }

    LieBialgebra moved = d.algebra.transformed(m_rows, std::move(new_names));

    DenseMatrix gram(dim, std::vector<Scalar>(dim, Scalar::zero()));
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            Scalar sum = Scalar::zero();
            for (int s = 0; s < dim; ++s) {
                if (m_rows[a][s].is_zero()) continue;
                for (int t = 0; t < dim; ++t) {
                    sum += m_rows[a][s] * d.pairing[s][t] * m_rows[b][t];
                }
            }
            gram[a][b] = sum;
        }
    }
    return DoubleAlgebra{std::move(moved), std::move(gram), d.half_dim};
}

LieBialgebra su2_t1_half() {
    LieBialgebra b({"Z1", "Z2"});
    b.set_bracket(0, 1, 1, Scalar::inv_sqrt2());
    b.set_cocommutator(1, 0, 1, -Scalar::inv_sqrt2());
    return b;
}

DoubleAlgebra su2_t1_double_mixed() {
    DoubleAlgebra d = build_double(su2_t1_half(), {"z1", "z2"});
    return mixed_basis(d, {0}, {"J3", "I", "J+", "J-"});
}

namespace {

void require_gl_range(int N) {
    if (N < 2 || N > 9) {
        throw BadRequestError("the gl family is available for sizes 2 through 9");
    }
}

std::string digit(int i) { return std::to_string(i); }

// Lex position of the pair (i,j), 1 <= i < j <= N, among all such pairs.
int upper_pos(int i, int j, int N) {
    int pos = 0;
    for (int a = 1; a < i; ++a) pos += N - a;
    return pos + (j - i - 1);
}

} // namespace

LieBialgebra gl_tn_half(int N) {
    require_gl_range(N);
    const int M = N * (N - 1) / 2;
    std::vector<std::string> names;
    for (int i = 1; i <= N; ++i) names.push_back("Z" + digit(i));
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) names.push_back("Z" + digit(i) + digit(j));
    }
    LieBialgebra b(std::move(names));
    auto cartan = [&](int i) { return i - 1; };
    auto upper = [&](int i, int j) { return N + upper_pos(i, j, N); };

    const Scalar inv_r2 = Scalar::inv_sqrt2();
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            for (int k = j + 1; k <= N; ++k) {
                const int sign = (i == j ? 1 : 0) - (i == k ? 1 : 0);
                if (sign != 0) b.set_bracket(cartan(i), upper(j, k), upper(j, k), sign * inv_r2);
            }
        }
    }
    // [Zij, Zkl] = delta_jk Zil - delta_il Zkj; iterating pairs in lex order
    // only the delta_jk term can fire.
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            for (int l = j + 1; l <= N; ++l) {
                b.set_bracket(upper(i, j), upper(j, l), upper(i, l), Scalar::one());
            }
        }
    }
    // Self-dual cocommutator: c = -f entrywise.
    const auto table = b.bracket_table();
    for (const auto& [pq, row] : table) {
        for (const auto& [r, f] : row) b.set_cocommutator(r, pq.first, pq.second, -f);
    }
    (void)M;
    return b;
}

DoubleAlgebra gl_tn_double_mixed(int N) {
    require_gl_range(N);
    const LieBialgebra half = gl_tn_half(N);
    std::vector<std::string> dual_names;
    for (const auto& g : half.generators()) dual_names.push_back("z" + g.substr(1));
    DoubleAlgebra d = build_double(half, std::move(dual_names));

    std::vector<int> mixed;
    std::vector<std::string> names;
    for (int i = 0; i < N; ++i) mixed.push_back(i);
    for (int i = 1; i <= N; ++i) names.push_back("H" + digit(i));
    for (int i = 1; i <= N; ++i) names.push_back("I" + digit(i));
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) names.push_back("F" + digit(i) + digit(j));
    }
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) names.push_back("F" + digit(j) + digit(i));
    }
    return mixed_basis(d, mixed, std::move(names));
}

std::map<int, std::map<PairKey, Scalar>> canonical_gl_cocommutators(int N) {
    require_gl_range(N);
    const int M = N * (N - 1) / 2;
    auto h_idx = [&](int i) { return i - 1; };
    auto i_idx = [&](int i) { return N + i - 1; };
    auto f_idx = [&](int i, int j) {
        return i < j ? 2 * N + upper_pos(i, j, N) : 2 * N + M + upper_pos(j, i, N);
    };

    // Accumulate into a scratch bialgebra to reuse the canonical wedge
    // bookkeeping, then hand back its table.
    std::vector<std::string> names;
    for (int k = 0; k < 2 * N + 2 * M; ++k) names.push_back("g" + std::to_string(k));
    LieBialgebra scratch(std::move(names));

    const Scalar half(Rational(1, 2));
    const Scalar half_i = Scalar::i() * half;
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (i == j) continue;
            const int r = f_idx(i, j);
            const Scalar h_coeff = i < j ? -half : half;
            scratch.set_cocommutator(r, r, h_idx(i), h_coeff);
            scratch.set_cocommutator(r, r, h_idx(j), -h_coeff);
            scratch.set_cocommutator(r, r, i_idx(i), -half_i);
            scratch.set_cocommutator(r, r, i_idx(j), half_i);
            if (i < j) {
                for (int k = i + 1; k < j; ++k) {
                    scratch.set_cocommutator(r, f_idx(i, k), f_idx(k, j), Scalar::one());
                }
            } else {
                for (int k = j + 1; k < i; ++k) {
                    scratch.set_cocommutator(r, f_idx(i, k), f_idx(k, j), -Scalar::one());
                }
            }
        }
    }
    return scratch.cocom_table();
}

LieBialgebra drop_central_block(const LieBialgebra& b, const std::vector<int>& kill) {
    std::set<int> killed(kill.begin(), kill.end());
    for (int k : kill) {
        if (k < 0 || k >= b.dim()) throw BadRequestError("generator index out of range");
        for (int x = 0; x < b.dim(); ++x) {
            if (x == k) continue;
            if (!b.bracket(Element{{k, Scalar::one()}}, Element{{x, Scalar::one()}}).empty()) {
                throw NotCentralError("cannot drop '" + b.generator_name(k) +
                                      "': it does not commute with '" + b.generator_name(x) + "'");
            }
        }
        if (!b.cocommutator_of(k).empty()) {
            throw BadRequestError("cannot drop '" + b.generator_name(k) +
                                  "': its cocommutator is nonzero");
        }
    }

    std::map<int, int> remap;
    std::vector<std::string> names;
    for (int old = 0; old < b.dim(); ++old) {
        if (killed.count(old)) continue;
        remap[old] = static_cast<int>(names.size());
        names.push_back(b.generator_name(old));
    }
    if (names.empty()) throw BadRequestError("cannot drop every generator");

    LieBialgebra out(std::move(names));
    for (const auto& [pq, row] : b.bracket_table()) {
        if (killed.count(pq.first) || killed.count(pq.second)) continue;
        for (const auto& [r, f] : row) {
            if (killed.count(r)) continue; // projected away by the quotient
            out.set_bracket(remap.at(pq.first), remap.at(pq.second), remap.at(r), f);
        }
    }
    for (const auto& [r, row] : b.cocom_table()) {
        if (killed.count(r)) continue;
        for (const auto& [pq, w] : row) {
            if (killed.count(pq.first) || killed.count(pq.second)) continue;
            out.set_cocommutator(remap.at(r), remap.at(pq.first), remap.at(pq.second), w);
        }
    }
    return out;
}

LieBialgebra lookup_builtin(const std::string& name) {
    if (name == "su2") return builtin_su2();
    if (name == "su2+t1") return su2_t1_double_mixed().algebra;
    if (name == "su2+t1:half") return su2_t1_half();
    if (name.rfind("gl:", 0) == 0) {
        std::string rest = name.substr(3);
        bool half = false;
        if (rest.size() > 5 && rest.substr(rest.size() - 5) == ":half") {
            half = true;
            rest = rest.substr(0, rest.size() - 5);
        }
        if (rest.size() == 1 && rest[0] >= '2' && rest[0] <= '9') {
            const int N = rest[0] - '0';
            return half ? gl_tn_half(N) : gl_tn_double_mixed(N).algebra;
        }
    }
    throw UnknownBuiltinError("unknown builtin '" + name + "'; available: su2, su2+t1, "
                              "su2+t1:half, gl:N, gl:N:half (N = 2..9)");
}

std::vector<std::string> builtin_names() {
    return {"su2", "su2+t1", "su2+t1:half", "gl:N", "gl:N:half"};
}

} // namespace qlie
