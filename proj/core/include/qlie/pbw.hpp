#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlie/bialgebra.hpp"
#include "qlie/scalar.hpp"

namespace qlie {

// Normal-ordered monomial over a fixed generator list: one exponent per
// generator, letters implicitly in ascending generator order.
class Monomial {
  public:
    explicit Monomial(int num_gens) : exps_(num_gens, 0) {}

    static Monomial unit(int num_gens) { return Monomial(num_gens); }
    static Monomial generator(int num_gens, int g);
    static Monomial from_word(int num_gens, const std::vector<int>& word);

    int num_gens() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    int exp(int g) const { return exps_.at(g); }
    bool is_unit() const { return degree() == 0; }
    // True when the monomial is a power of one single generator (units count).
    bool is_single_power() const;

    Monomial times(int g) const;
    Monomial times(const Monomial& o) const;
    std::vector<int> word() const;
    const std::vector<int>& exps() const { return exps_; }
    int& exp_ref(int g) { return exps_.at(g); }

    // Graded lexicographic: degree first, then the exponent vector.
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  private:
    std::vector<int> exps_;
};

struct TermKey {
    int zord;
    Monomial mono;
    bool operator<(const TermKey& o) const {
        if (zord != o.zord) return zord < o.zord;
        return mono < o.mono;
    }
    bool operator==(const TermKey& o) const { return zord == o.zord && mono == o.mono; }
};

// z-truncated element of the (possibly deformed) enveloping algebra on a
// fixed generator list: exact coefficients for z^0 .. z^zcap only.  Binary
// operations truncate to the smaller zcap, as for scalar series.
class UEAElement {
  public:
    UEAElement(int num_gens, int zcap);

    static UEAElement unit(int num_gens, int zcap);
    static UEAElement generator(int num_gens, int g, int zcap);

    int num_gens() const { return num_gens_; }
    int zcap() const { return zcap_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;

    void add_term(int zord, const Monomial& m, const Scalar& c);
    Scalar coeff(int zord, const Monomial& m) const;
    const std::map<TermKey, Scalar>& terms() const { return terms_; }

    // Coefficient map of the z^k layer.
    std::map<Monomial, Scalar> layer(int k) const;
    void add_layer(int k, const std::map<Monomial, Scalar>& values);

    UEAElement operator-() const;
    UEAElement operator+(const UEAElement& o) const;
    UEAElement operator-(const UEAElement& o) const;
    UEAElement operator*(const Scalar& s) const;
    UEAElement& operator+=(const UEAElement& o) { *this = *this + o; return *this; }
    UEAElement& operator-=(const UEAElement& o) { *this = *this - o; return *this; }

    UEAElement shifted(int dz) const;  // multiply by z^dz (dz >= 0)
    UEAElement truncated(int new_zcap) const;

    bool operator==(const UEAElement& o) const {
        return zcap_ == o.zcap_ && terms_ == o.terms_;
    }
    bool operator!=(const UEAElement& o) const { return !(*this == o); }

  private:
    int num_gens_;
    int zcap_;
    std::map<TermKey, Scalar> terms_;
};

struct PairMono {
    Monomial left, right;
    bool operator<(const PairMono& o) const {
        if (!(left == o.left)) return left < o.left;
        return right < o.right;
    }
    bool operator==(const PairMono& o) const { return left == o.left && right == o.right; }
};

struct Tensor2Key {
    int zord;
    PairMono slots;
    bool operator<(const Tensor2Key& o) const {
        if (zord != o.zord) return zord < o.zord;
        return slots < o.slots;
    }
    bool operator==(const Tensor2Key& o) const { return zord == o.zord && slots == o.slots; }
};

// z-truncated element of U (x) U.
class UEATensor2 {
  public:
    UEATensor2(int num_gens, int zcap);

    int num_gens() const { return num_gens_; }
    int zcap() const { return zcap_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int zord, const Monomial& l, const Monomial& r, const Scalar& c);
    const std::map<Tensor2Key, Scalar>& terms() const { return terms_; }
    std::map<PairMono, Scalar> layer(int k) const;
    void add_layer(int k, const std::map<PairMono, Scalar>& values);

    UEATensor2 operator-() const;
    UEATensor2 operator+(const UEATensor2& o) const;
    UEATensor2 operator-(const UEATensor2& o) const;
    UEATensor2 operator*(const Scalar& s) const;
    UEATensor2& operator+=(const UEATensor2& o) { *this = *this + o; return *this; }
    UEATensor2& operator-=(const UEATensor2& o) { *this = *this - o; return *this; }

    UEATensor2 flipped() const; // swap tensor slots
    UEATensor2 truncated(int new_zcap) const;

    bool operator==(const UEATensor2& o) const {
        return zcap_ == o.zcap_ && terms_ == o.terms_;
    }
    bool operator!=(const UEATensor2& o) const { return !(*this == o); }

  private:
    int num_gens_;
    int zcap_;
    std::map<Tensor2Key, Scalar> terms_;
};

struct Tensor3Key {
    int zord;
    Monomial a, b, c;
    bool operator<(const Tensor3Key& o) const {
        if (zord != o.zord) return zord < o.zord;
        if (!(a == o.a)) return a < o.a;
        if (!(b == o.b)) return b < o.b;
        return c < o.c;
    }
    bool operator==(const Tensor3Key& o) const {
        return zord == o.zord && a == o.a && b == o.b && c == o.c;
    }
};

// z-truncated element of U (x) U (x) U (accumulation and comparison only).
class UEATensor3 {
  public:
    UEATensor3(int num_gens, int zcap);

    int zcap() const { return zcap_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int zord, const Monomial& a, const Monomial& b, const Monomial& c,
                  const Scalar& v);
    const std::map<Tensor3Key, Scalar>& terms() const { return terms_; }

    UEATensor3 operator-(const UEATensor3& o) const;
    bool operator==(const UEATensor3& o) const {
        return zcap_ == o.zcap_ && terms_ == o.terms_;
    }

  private:
    int num_gens_;
    int zcap_;
    std::map<Tensor3Key, Scalar> terms_;
};

// Enveloping algebra with a z-truncated commutator table.  The z^0 layer of
// each table entry must have degree <= 1 (a Lie bracket); higher layers may
// have degree up to zord + 1, which keeps normal ordering terminating.
class UEA {
  public:
    UEA(std::vector<std::string> names, int zcap);
    // Table filled from the brackets of a bialgebra (z^0 only).
    static UEA classical(const LieBialgebra& b, int zcap);

    int num_gens() const { return static_cast<int>(names_.size()); }
    int zcap() const { return zcap_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int g) const { return names_.at(g); }

    // [Y_p, Y_q] := value for p < q.
    void set_table_entry(int p, int q, const UEAElement& value);
    // Entry for p < q; zero element if unset.
    UEAElement table_entry(int p, int q) const;
    // [Y_p, Y_q] with antisymmetry for any p != q.
    UEAElement generator_commutator(int p, int q) const;

    // Rewrite an arbitrary word (times coeff * z^zord0) into normal order.
    UEAElement normal_order_word(const std::vector<int>& word, int zord0, const Scalar& coeff,
                                 int zcap_out) const;

    UEAElement multiply(const UEAElement& a, const UEAElement& b) const;
    UEAElement multiply(const UEAElement& a, const UEAElement& b, int zcap_out) const;
    UEAElement commutator(const UEAElement& a, const UEAElement& b) const;

    UEATensor2 multiply(const UEATensor2& a, const UEATensor2& b) const;
    UEATensor2 multiply(const UEATensor2& a, const UEATensor2& b, int zcap_out) const;
    UEATensor2 commutator(const UEATensor2& a, const UEATensor2& b) const;

  private:
    std::vector<std::string> names_;
    int zcap_;
    std::map<PairKey, UEAElement> table_;
};

// Coproduct given by generator images in U (x) U, extended multiplicatively
// with the (deformed) product of whichever algebra is passed in.  The
// monomial cache assumes the same algebra (same commutator table state) is
// used between invalidations; callers that mutate the table must call
// invalidate_cache().
class Coproduct {
  public:
    Coproduct(int num_gens, int zcap); // starts with primitive images

    int num_gens() const { return num_gens_; }
    int zcap() const { return zcap_; }
    const UEATensor2& image(int g) const { return images_.at(g); }
    void add_image_layer(int g, int k, const std::map<PairMono, Scalar>& values);
    void invalidate_cache() const { cache_.clear(); }

    UEATensor2 apply(const UEA& u, const UEAElement& x, int zcap_out) const;
    UEATensor2 apply_monomial(const UEA& u, const Monomial& m, int zcap_out) const;

    UEATensor3 expand_left(const UEA& u, const UEATensor2& t, int zcap_out) const;
    UEATensor3 expand_right(const UEA& u, const UEATensor2& t, int zcap_out) const;

    // Coassociativity defect (Delta (x) 1) Delta - (1 (x) Delta) Delta on x.
    UEATensor3 coassociativity_defect(const UEA& u, const UEAElement& x, int zcap_out) const;

  private:
    int num_gens_;
    int zcap_;
    std::vector<UEATensor2> images_;
    mutable std::map<Monomial, UEATensor2> cache_; // full-zcap images of monomials
};

// All splits of the primitive (classical, undeformed) coproduct of a
// monomial, with multinomial coefficients; includes the unit splits.
std::map<PairMono, Scalar> primitive_splits(const Monomial& m);

// exact binomial coefficient
Scalar binomial_scalar(int n, int k);

std::string render_monomial(const UEA& u, const Monomial& m);
std::string render_uea_element(const UEA& u, const UEAElement& e);
std::string render_uea_tensor2(const UEA& u, const UEATensor2& t);

} // namespace qlie
