#include "qlie/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qlie/errors.hpp"

namespace qlie {

namespace {

void check_same_shape(int ng1, int ng2, const char* what) {
    if (ng1 != ng2) {
        throw BadRequestError(std::string(what) + ": generator counts differ (" +
                              std::to_string(ng1) + " vs " + std::to_string(ng2) + ")");
    }
}

template <typename Map, typename Key>
void accumulate(Map& m, const Key& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
}

} // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::generator(int num_gens, int g) {
    Monomial m(num_gens);
    m.exps_.at(g) = 1;
    return m;
}

Monomial Monomial::from_word(int num_gens, const std::vector<int>& word) {
    Monomial m(num_gens);
    for (int g : word) m.exps_.at(g) += 1;
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

bool Monomial::is_single_power() const {
    int nonzero = 0;
    for (int e : exps_)
        if (e != 0) ++nonzero;
    return nonzero <= 1;
}

Monomial Monomial::times(int g) const {
    Monomial m = *this;
    m.exps_.at(g) += 1;
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    check_same_shape(num_gens(), o.num_gens(), "monomial product");
    Monomial m = *this;
    for (int g = 0; g < num_gens(); ++g) m.exps_[g] += o.exps_[g];
    return m;
}

std::vector<int> Monomial::word() const {
    std::vector<int> w;
    w.reserve(degree());
    for (int g = 0; g < num_gens(); ++g)
        for (int e = 0; e < exps_[g]; ++e) w.push_back(g);
    return w;
}

bool Monomial::operator<(const Monomial& o) const {
    const int d1 = degree(), d2 = o.degree();
    if (d1 != d2) return d1 < d2;
    return exps_ < o.exps_;
}

// ---------------------------------------------------------------------------
// UEAElement

UEAElement::UEAElement(int num_gens, int zcap) : num_gens_(num_gens), zcap_(zcap) {
    if (zcap < 0) throw BadRequestError("element truncation order must be >= 0");
}

UEAElement UEAElement::unit(int num_gens, int zcap) {
    UEAElement e(num_gens, zcap);
    e.add_term(0, Monomial::unit(num_gens), Scalar::one());
    return e;
}

UEAElement UEAElement::generator(int num_gens, int g, int zcap) {
    UEAElement e(num_gens, zcap);
    e.add_term(0, Monomial::generator(num_gens, g), Scalar::one());
    return e;
}

int UEAElement::max_degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.mono.degree());
    return d;
}

void UEAElement::add_term(int zord, const Monomial& m, const Scalar& c) {
    check_same_shape(num_gens_, m.num_gens(), "element term");
    if (zord < 0) throw BadRequestError("negative power of z");
    if (zord > zcap_) return;
    accumulate(terms_, TermKey{zord, m}, c);
}

Scalar UEAElement::coeff(int zord, const Monomial& m) const {
    if (zord < 0 || zord > zcap_) {
        throw SeriesIncompleteError("coefficient of z^" + std::to_string(zord) +
                                    " is beyond truncation order " + std::to_string(zcap_));
    }
    auto it = terms_.find(TermKey{zord, m});
    return it == terms_.end() ? Scalar::zero() : it->second;
}

std::map<Monomial, Scalar> UEAElement::layer(int k) const {
    if (k < 0 || k > zcap_) {
        throw SeriesIncompleteError("layer z^" + std::to_string(k) +
                                    " is beyond truncation order " + std::to_string(zcap_));
    }
    std::map<Monomial, Scalar> out;
    for (auto it = terms_.lower_bound(TermKey{k, Monomial(num_gens_)});
         it != terms_.end() && it->first.zord == k; ++it) {
        out.emplace(it->first.mono, it->second);
    }
    return out;
}

void UEAElement::add_layer(int k, const std::map<Monomial, Scalar>& values) {
    for (const auto& [m, v] : values) add_term(k, m, v);
}

UEAElement UEAElement::operator-() const {
    UEAElement out(num_gens_, zcap_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
    check_same_shape(num_gens_, o.num_gens_, "element sum");
    UEAElement out = truncated(std::min(zcap_, o.zcap_));
    for (const auto& [key, c] : o.terms_) out.add_term(key.zord, key.mono, c);
    return out;
}

UEAElement UEAElement::operator-(const UEAElement& o) const { return *this + (-o); }

UEAElement UEAElement::operator*(const Scalar& s) const {
    UEAElement out(num_gens_, zcap_);
    if (s.is_zero()) return out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
    return out;
}

UEAElement UEAElement::shifted(int dz) const {
    if (dz < 0) throw BadRequestError("negative power of z");
    UEAElement out(num_gens_, zcap_);
    for (const auto& [key, c] : terms_) out.add_term(key.zord + dz, key.mono, c);
    return out;
}

UEAElement UEAElement::truncated(int new_zcap) const {
    if (new_zcap > zcap_) {
        throw SeriesIncompleteError("cannot extend element truncation from " +
                                    std::to_string(zcap_) + " to " + std::to_string(new_zcap));
    }
    UEAElement out(num_gens_, new_zcap);
    for (const auto& [key, c] : terms_) {
        if (key.zord <= new_zcap) out.terms_.emplace(key, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// UEATensor2

UEATensor2::UEATensor2(int num_gens, int zcap) : num_gens_(num_gens), zcap_(zcap) {
    if (zcap < 0) throw BadRequestError("tensor truncation order must be >= 0");
}

void UEATensor2::add_term(int zord, const Monomial& l, const Monomial& r, const Scalar& c) {
    check_same_shape(num_gens_, l.num_gens(), "tensor term");
    check_same_shape(num_gens_, r.num_gens(), "tensor term");
    if (zord < 0) throw BadRequestError("negative power of z");
    if (zord > zcap_) return;
    accumulate(terms_, Tensor2Key{zord, PairMono{l, r}}, c);
}

std::map<PairMono, Scalar> UEATensor2::layer(int k) const {
    if (k < 0 || k > zcap_) {
        throw SeriesIncompleteError("layer z^" + std::to_string(k) +
                                    " is beyond truncation order " + std::to_string(zcap_));
    }
    std::map<PairMono, Scalar> out;
    const Monomial u(num_gens_);
    for (auto it = terms_.lower_bound(Tensor2Key{k, PairMono{u, u}});
         it != terms_.end() && it->first.zord == k; ++it) {
        out.emplace(it->first.slots, it->second);
    }
    return out;
}

void UEATensor2::add_layer(int k, const std::map<PairMono, Scalar>& values) {
    for (const auto& [pm, v] : values) add_term(k, pm.left, pm.right, v);
}

UEATensor2 UEATensor2::operator-() const {
    UEATensor2 out(num_gens_, zcap_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

UEATensor2 UEATensor2::operator+(const UEATensor2& o) const {
    check_same_shape(num_gens_, o.num_gens_, "tensor sum");
    UEATensor2 out = truncated(std::min(zcap_, o.zcap_));
    for (const auto& [key, c] : o.terms_) {
        out.add_term(key.zord, key.slots.left, key.slots.right, c);
    }
    return out;
}

UEATensor2 UEATensor2::operator-(const UEATensor2& o) const { return *this + (-o); }

UEATensor2 UEATensor2::operator*(const Scalar& s) const {
    UEATensor2 out(num_gens_, zcap_);
    if (s.is_zero()) return out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * s);
    return out;
}

UEATensor2 UEATensor2::flipped() const {
    UEATensor2 out(num_gens_, zcap_);
    for (const auto& [key, c] : terms_) {
        out.terms_.emplace(Tensor2Key{key.zord, PairMono{key.slots.right, key.slots.left}}, c);
    }
    return out;
}

UEATensor2 UEATensor2::truncated(int new_zcap) const {
    if (new_zcap > zcap_) {
        throw SeriesIncompleteError("cannot extend tensor truncation from " +
                                    std::to_string(zcap_) + " to " + std::to_string(new_zcap));
    }
    UEATensor2 out(num_gens_, new_zcap);
    for (const auto& [key, c] : terms_) {
        if (key.zord <= new_zcap) out.terms_.emplace(key, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// UEATensor3

UEATensor3::UEATensor3(int num_gens, int zcap) : num_gens_(num_gens), zcap_(zcap) {}

void UEATensor3::add_term(int zord, const Monomial& a, const Monomial& b, const Monomial& c,
                          const Scalar& v) {
    if (zord < 0) throw BadRequestError("negative power of z");
    if (zord > zcap_) return;
    accumulate(terms_, Tensor3Key{zord, a, b, c}, v);
}

UEATensor3 UEATensor3::operator-(const UEATensor3& o) const {
    UEATensor3 out(num_gens_, std::min(zcap_, o.zcap_));
    for (const auto& [key, v] : terms_) {
        if (key.zord <= out.zcap_) out.terms_.emplace(key, v);
    }
    for (const auto& [key, v] : o.terms_) out.add_term(key.zord, key.a, key.b, key.c, -v);
    return out;
}

// ---------------------------------------------------------------------------
// UEA

UEA::UEA(std::vector<std::string> names, int zcap) : names_(std::move(names)), zcap_(zcap) {
    if (names_.empty()) throw BadRequestError("enveloping algebra needs at least one generator");
    if (zcap < 0) throw BadRequestError("truncation order must be >= 0");
}

UEA UEA::classical(const LieBialgebra& b, int zcap) {
    UEA u(b.generators(), zcap);
    const int n = b.dim();
    for (const auto& [pq, components] : b.bracket_table()) {
        UEAElement value(n, zcap);
        for (const auto& [r, f] : components) {
            value.add_term(0, Monomial::generator(n, r), f);
        }
        if (!value.is_zero()) u.set_table_entry(pq.first, pq.second, value);
    }
    return u;
}

void UEA::set_table_entry(int p, int q, const UEAElement& value) {
    if (p < 0 || q < 0 || p >= num_gens() || q >= num_gens() || p == q) {
        throw BadRequestError("bad generator pair in commutator table");
    }
    check_same_shape(num_gens(), value.num_gens(), "table entry");
    if (p > q) {
        set_table_entry(q, p, -value);
        return;
    }
    // Degree bound on the classical layer keeps rewriting terminating.
    for (const auto& [key, c] : value.terms()) {
        if (key.zord == 0 && key.mono.degree() > 1) {
            throw BadRequestError("z^0 layer of a commutator table entry must have degree <= 1");
        }
    }
    UEAElement stored = value;
    if (stored.zcap() < zcap_) {
        throw SeriesIncompleteError("commutator table entry truncated below the algebra order");
    }
    table_.insert_or_assign(PairKey{p, q}, stored.truncated(zcap_));
}

UEAElement UEA::table_entry(int p, int q) const {
    if (p < 0 || q < 0 || p >= num_gens() || q >= num_gens() || p >= q) {
        throw BadRequestError("table entries are indexed by p < q");
    }
    auto it = table_.find(PairKey{p, q});
    return it == table_.end() ? UEAElement(num_gens(), zcap_) : it->second;
}

UEAElement UEA::generator_commutator(int p, int q) const {
    if (p == q) return UEAElement(num_gens(), zcap_);
    return p < q ? table_entry(p, q) : -table_entry(q, p);
}

UEAElement UEA::normal_order_word(const std::vector<int>& word, int zord0, const Scalar& coeff,
                                  int zcap_out) const {
    if (zcap_out > zcap_) {
        throw SeriesIncompleteError("requested product order exceeds the table order");
    }
    UEAElement out(num_gens(), zcap_out);
    if (coeff.is_zero() || zord0 > zcap_out) return out;
    for (int g : word) {
        if (g < 0 || g >= num_gens()) throw BadRequestError("generator index out of range");
    }

    struct Item {
        Scalar c;
        int zord;
        std::vector<int> w;
    };
    std::vector<Item> work;
    work.push_back(Item{coeff, zord0, word});

    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();

        std::size_t pos = it.w.size();
        for (std::size_t i = 0; i + 1 < it.w.size(); ++i) {
            if (it.w[i] > it.w[i + 1]) {
                pos = i;
                break;
            }
        }
        if (pos == it.w.size()) {
            out.add_term(it.zord, Monomial::from_word(num_gens(), it.w), it.c);
            continue;
        }

        const int a = it.w[pos], b = it.w[pos + 1]; // a > b
        // Y_a Y_b = Y_b Y_a + [Y_a, Y_b]  with  [Y_a, Y_b] = -[Y_b, Y_a].
        std::vector<int> swapped = it.w;
        std::swap(swapped[pos], swapped[pos + 1]);

        auto entry = table_.find(PairKey{b, a});
        if (entry != table_.end()) {
            for (const auto& [key, ct] : entry->second.terms()) {
                const int z = it.zord + key.zord;
                if (z > zcap_out) continue;
                std::vector<int> w2(it.w.begin(), it.w.begin() + static_cast<long>(pos));
                const std::vector<int> mid = key.mono.word();
                w2.insert(w2.end(), mid.begin(), mid.end());
                w2.insert(w2.end(), it.w.begin() + static_cast<long>(pos) + 2, it.w.end());
                work.push_back(Item{it.c * (-ct), z, std::move(w2)});
            }
        }
        work.push_back(Item{std::move(it.c), it.zord, std::move(swapped)});
    }
    return out;
}

UEAElement UEA::multiply(const UEAElement& a, const UEAElement& b) const {
    return multiply(a, b, std::min(a.zcap(), b.zcap()));
}

UEAElement UEA::multiply(const UEAElement& a, const UEAElement& b, int zcap_out) const {
    check_same_shape(a.num_gens(), num_gens(), "product");
    check_same_shape(b.num_gens(), num_gens(), "product");
    zcap_out = std::min({zcap_out, a.zcap(), b.zcap(), zcap_});
    UEAElement out(num_gens(), zcap_out);
    for (const auto& [ka, ca] : a.terms()) {
        if (ka.zord > zcap_out) continue;
        for (const auto& [kb, cb] : b.terms()) {
            const int z = ka.zord + kb.zord;
            if (z > zcap_out) continue;
            std::vector<int> w = ka.mono.word();
            const std::vector<int> wb = kb.mono.word();
            w.insert(w.end(), wb.begin(), wb.end());
            out += normal_order_word(w, z, ca * cb, zcap_out);
        }
    }
    return out;
}

UEAElement UEA::commutator(const UEAElement& a, const UEAElement& b) const {
    return multiply(a, b) - multiply(b, a);
}

UEATensor2 UEA::multiply(const UEATensor2& a, const UEATensor2& b) const {
    return multiply(a, b, std::min(a.zcap(), b.zcap()));
}

UEATensor2 UEA::multiply(const UEATensor2& a, const UEATensor2& b, int zcap_out) const {
    check_same_shape(a.num_gens(), num_gens(), "tensor product");
    check_same_shape(b.num_gens(), num_gens(), "tensor product");
    zcap_out = std::min({zcap_out, a.zcap(), b.zcap(), zcap_});
    UEATensor2 out(num_gens(), zcap_out);
    for (const auto& [ka, ca] : a.terms()) {
        if (ka.zord > zcap_out) continue;
        for (const auto& [kb, cb] : b.terms()) {
            const int zbase = ka.zord + kb.zord;
            if (zbase > zcap_out) continue;
            std::vector<int> wl = ka.slots.left.word();
            {
                const std::vector<int> w2 = kb.slots.left.word();
                wl.insert(wl.end(), w2.begin(), w2.end());
            }
            std::vector<int> wr = ka.slots.right.word();
            {
                const std::vector<int> w2 = kb.slots.right.word();
                wr.insert(wr.end(), w2.begin(), w2.end());
            }
            const UEAElement left = normal_order_word(wl, 0, ca * cb, zcap_out - zbase);
            const UEAElement right = normal_order_word(wr, 0, Scalar::one(), zcap_out - zbase);
            for (const auto& [kl, cl] : left.terms()) {
                for (const auto& [kr, cr] : right.terms()) {
                    out.add_term(zbase + kl.zord + kr.zord, kl.mono, kr.mono, cl * cr);
                }
            }
        }
    }
    return out;
}

UEATensor2 UEA::commutator(const UEATensor2& a, const UEATensor2& b) const {
    return multiply(a, b) - multiply(b, a);
}

// ---------------------------------------------------------------------------
// Coproduct

Coproduct::Coproduct(int num_gens, int zcap) : num_gens_(num_gens), zcap_(zcap) {
    if (num_gens <= 0) throw BadRequestError("coproduct needs at least one generator");
    if (zcap < 0) throw BadRequestError("truncation order must be >= 0");
    for (int g = 0; g < num_gens_; ++g) {
        UEATensor2 t(num_gens_, zcap_);
        t.add_term(0, Monomial::generator(num_gens_, g), Monomial::unit(num_gens_), Scalar::one());
        t.add_term(0, Monomial::unit(num_gens_), Monomial::generator(num_gens_, g), Scalar::one());
        images_.push_back(std::move(t));
    }
}

void Coproduct::add_image_layer(int g, int k, const std::map<PairMono, Scalar>& values) {
    images_.at(g).add_layer(k, values);
    cache_.clear();
}

UEATensor2 Coproduct::apply_monomial(const UEA& u, const Monomial& m, int zcap_out) const {
    check_same_shape(num_gens_, u.num_gens(), "coproduct");
    if (zcap_out > zcap_) {
        throw SeriesIncompleteError("requested coproduct order exceeds the stored order");
    }
    auto it = cache_.find(m);
    if (it == cache_.end()) {
        UEATensor2 acc(num_gens_, zcap_);
        acc.add_term(0, Monomial::unit(num_gens_), Monomial::unit(num_gens_), Scalar::one());
        for (int g : m.word()) acc = u.multiply(acc, images_.at(g), zcap_);
        it = cache_.emplace(m, std::move(acc)).first;
    }
    return it->second.truncated(zcap_out);
}

UEATensor2 Coproduct::apply(const UEA& u, const UEAElement& x, int zcap_out) const {
    zcap_out = std::min(zcap_out, x.zcap());
    UEATensor2 out(num_gens_, zcap_out);
    for (const auto& [key, c] : x.terms()) {
        if (key.zord > zcap_out) continue;
        const UEATensor2 dm = apply_monomial(u, key.mono, zcap_out - key.zord);
        for (const auto& [kt, ct] : dm.terms()) {
            out.add_term(key.zord + kt.zord, kt.slots.left, kt.slots.right, c * ct);
        }
    }
    return out;
}

UEATensor3 Coproduct::expand_left(const UEA& u, const UEATensor2& t, int zcap_out) const {
    zcap_out = std::min(zcap_out, t.zcap());
    UEATensor3 out(num_gens_, zcap_out);
    for (const auto& [key, c] : t.terms()) {
        if (key.zord > zcap_out) continue;
        const UEATensor2 dm = apply_monomial(u, key.slots.left, zcap_out - key.zord);
        for (const auto& [kt, ct] : dm.terms()) {
            out.add_term(key.zord + kt.zord, kt.slots.left, kt.slots.right, key.slots.right,
                         c * ct);
        }
    }
    return out;
}

UEATensor3 Coproduct::expand_right(const UEA& u, const UEATensor2& t, int zcap_out) const {
    zcap_out = std::min(zcap_out, t.zcap());
    UEATensor3 out(num_gens_, zcap_out);
    for (const auto& [key, c] : t.terms()) {
        if (key.zord > zcap_out) continue;
        const UEATensor2 dm = apply_monomial(u, key.slots.right, zcap_out - key.zord);
        for (const auto& [kt, ct] : dm.terms()) {
            out.add_term(key.zord + kt.zord, key.slots.left, kt.slots.left, kt.slots.right,
                         c * ct);
        }
    }
    return out;
}

UEATensor3 Coproduct::coassociativity_defect(const UEA& u, const UEAElement& x,
                                             int zcap_out) const {
    const UEATensor2 dx = apply(u, x, zcap_out);
    return expand_left(u, dx, zcap_out) - expand_right(u, dx, zcap_out);
}

// ---------------------------------------------------------------------------
// primitive splits

Scalar binomial_scalar(int n, int k) {
    if (k < 0 || k > n) return Scalar::zero();
    Rational out = 1;
    for (int j = 1; j <= k; ++j) {
        out *= Rational(n - j + 1);
        out /= Rational(j);
    }
    return Scalar(out);
}

std::map<PairMono, Scalar> primitive_splits(const Monomial& m) {
    const int n = m.num_gens();
    std::map<PairMono, Scalar> out;
    std::vector<std::pair<PairMono, Scalar>> acc;
    acc.emplace_back(PairMono{Monomial::unit(n), Monomial::unit(n)}, Scalar::one());
    for (int g = 0; g < n; ++g) {
        const int e = m.exp(g);
        if (e == 0) continue;
        std::vector<std::pair<PairMono, Scalar>> next;
        next.reserve(acc.size() * static_cast<std::size_t>(e + 1));
        for (const auto& [pm, c] : acc) {
            for (int a = 0; a <= e; ++a) {
                PairMono p2 = pm;
                p2.left.exp_ref(g) += a;
                p2.right.exp_ref(g) += e - a;
                next.emplace_back(std::move(p2), c * binomial_scalar(e, a));
            }
        }
        acc = std::move(next);
    }
    for (auto& [pm, c] : acc) accumulate(out, pm, c);
    return out;
}

// ---------------------------------------------------------------------------
// rendering

std::string render_monomial(const UEA& u, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int g = 0; g < m.num_gens(); ++g) {
        const int e = m.exp(g);
        if (e == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << u.name(g);
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

namespace {

std::string render_term_prefix(const Scalar& c, int zord) {
    std::string out = "(" + c.render() + ")";
    if (zord == 1) {
        out += " z";
    } else if (zord > 1) {
        out += " z^" + std::to_string(zord);
    }
    return out;
}

} // namespace

std::string render_uea_element(const UEA& u, const UEAElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        os << render_term_prefix(c, key.zord);
        if (!key.mono.is_unit()) {
            os << ' ' << render_monomial(u, key.mono);
        } else if (key.zord == 0) {
            os << " 1";
        }
    }
    return os.str();
}

std::string render_uea_tensor2(const UEA& u, const UEATensor2& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        if (!first) os << " + ";
        first = false;
        os << render_term_prefix(c, key.zord);
        os << ' ' << render_monomial(u, key.slots.left) << " (x) "
           << render_monomial(u, key.slots.right);
    }
    return os.str();
}

} // namespace qlie
