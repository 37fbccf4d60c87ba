#pragma once

#include "wreathfock/partition.hpp"
#include "wreathfock/series.hpp"
#include "wreathfock/wreath.hpp"

#include <map>
#include <string>
#include <vector>

namespace wreathfock {

// Sector label p = sum n_i diamond_i in the rank-r lattice P.
struct Charge {
    explicit Charge(unsigned r) : coords(r, 0) {}
    Charge(unsigned r_in, std::vector<int> c) : coords(std::move(c)) {
        if (coords.size() != r_in) throw std::invalid_argument("Charge: coordinate count != r");
    }

    unsigned r() const { return static_cast<unsigned>(coords.size()); }
    std::vector<int> coords;

    friend Charge operator+(Charge a, const Charge& b) {
        if (a.coords.size() != b.coords.size()) throw std::invalid_argument("Charge: rank mismatch");
        for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
        return a;
    }
    friend bool operator==(const Charge&, const Charge&) = default;
};

// Element of H^2_T in diamond coordinates; <diamond_i, diamond_j> = delta_ij.
class H1Vector {
public:
    H1Vector(unsigned r, std::vector<Rational> coords) : coords_(std::move(coords)) {
        if (coords_.size() != r) throw std::invalid_argument("H1Vector: coordinate count != r");
    }

    static H1Vector zero(unsigned r) { return H1Vector(r, std::vector<Rational>(r, Rational(0))); }
    static H1Vector diamond(unsigned r, unsigned i);
    // rt = diamond_0 + ... + diamond_{r-1}; t = rt / r.
    static H1Vector rt(unsigned r);
    static H1Vector t(unsigned r);
    // Exceptional-curve classes: [Sigma_0] = -diamond_0,
    // [Sigma_i] = diamond_{i-1} - diamond_i for 1 <= i <= r-1,
    // [Sigma_r] = diamond_{r-1}.
    static H1Vector sigma_class(unsigned r, unsigned i);
    // c_1^T(L_k) = (1/r)(sum_{i<k} (k-r) diamond_i + sum_{i>=k} k diamond_i).
    static H1Vector first_chern(unsigned r, unsigned k);

    unsigned r() const { return static_cast<unsigned>(coords_.size()); }
    const Rational& coord(unsigned i) const { return coords_.at(i); }

    H1Vector& operator+=(const H1Vector& o);
    H1Vector& operator-=(const H1Vector& o);
    H1Vector scaled(const Rational& c) const;
    friend H1Vector operator+(H1Vector a, const H1Vector& b) { return a += b; }
    friend H1Vector operator-(H1Vector a, const H1Vector& b) { return a -= b; }
    friend bool operator==(const H1Vector& a, const H1Vector& b) { return a.coords_ == b.coords_; }

    friend Rational inner(const H1Vector& a, const H1Vector& b);
    Rational pair_charge(const Charge& p) const;

private:
    std::vector<Rational> coords_;
};

inline Rational scale_rat(const Rational& a, const Rational& q) { return a * q; }
inline Cyclotomic scale_rat(const Cyclotomic& a, const Rational& q) { return a * Cyclotomic(q); }
template <typename T>
LaurentSeries<T> scale_rat(const LaurentSeries<T>& a, const Rational& q) {
    return a.scaled(scalar_from_rational<T>(q));
}
template <typename T>
MultiSeries<T> scale_rat(const MultiSeries<T>& a, const Rational& q) {
    return a.scaled(scalar_from_rational<T>(q));
}

inline bool scalar_is_zero(const Rational& a) { return a == 0; }
inline bool scalar_is_zero(const Cyclotomic& a) { return a.is_zero(); }
template <typename T>
bool scalar_is_zero(const LaurentSeries<T>& a) { return a.is_zero(); }
template <typename T>
bool scalar_is_zero(const MultiSeries<T>& a) { return a.is_zero(); }

// Finite combination of basis classes [lambda]^{(p)}, coefficients in S.
template <typename S>
class FockVector {
public:
    explicit FockVector(unsigned r) : r_(r), charge_(r) {}
    FockVector(unsigned r, Charge charge) : r_(r), charge_(std::move(charge)) {
        if (charge_.r() != r_) throw std::invalid_argument("FockVector: charge rank != r");
    }

    static FockVector vacuum(unsigned r, const S& one = S(1)) {
        FockVector v(r);
        v.add_term(MultiPartition::empty(r), one);
        return v;
    }
    static FockVector basis(unsigned r, const MultiPartition& mp, const S& one = S(1)) {
        FockVector v(r);
        v.add_term(mp, one);
        return v;
    }

    unsigned r() const { return r_; }
    const Charge& charge() const { return charge_; }
    void set_charge(Charge c) {
        if (c.r() != r_) throw std::invalid_argument("FockVector: charge rank != r");
        charge_ = std::move(c);
    }
    const std::map<MultiPartition, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coeff(const MultiPartition& mp) const
        requires std::is_constructible_v<S, int>
    {
        auto it = terms_.find(mp);
        return it == terms_.end() ? S(0) : it->second;
    }

    const S* find_term(const MultiPartition& mp) const {
        auto it = terms_.find(mp);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(const MultiPartition& mp, const S& c) {
        if (mp.r() != r_) throw std::invalid_argument("FockVector: term rank != r");
        auto it = terms_.find(mp);
        if (it == terms_.end()) {
            if (!scalar_is_zero(c)) terms_.emplace(mp, c);
        } else {
            it->second = it->second + c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    // Largest ||lambda|| appearing (0 for the zero vector).
    int max_norm() const {
        int m = 0;
        for (const auto& [mp, c] : terms_) m = std::max(m, mp.norm());
        return m;
    }

    FockVector scaled(const S& c) const {
        FockVector out(r_, charge_);
        if (scalar_is_zero(c)) return out;
        for (const auto& [mp, x] : terms_) out.add_term(mp, x * c);
        return out;
    }
    FockVector scaled_rational(const Rational& q) const {
        FockVector out(r_, charge_);
        if (q == 0) return out;
        for (const auto& [mp, x] : terms_) out.add_term(mp, scale_rat(x, q));
        return out;
    }

    FockVector& operator+=(const FockVector& o) {
        require_compatible(o);
        for (const auto& [mp, c] : o.terms_) add_term(mp, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        require_compatible(o);
        for (const auto& [mp, c] : o.terms_) add_term(mp, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

    friend bool operator==(const FockVector& a, const FockVector& b) {
        if (a.r_ != b.r_ || !(a.charge_ == b.charge_)) return false;
        FockVector diff = a;
        diff -= b;
        return diff.is_zero();
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

private:
    void require_compatible(const FockVector& o) const {
        if (r_ != o.r_ || !(charge_ == o.charge_))
            throw std::invalid_argument("FockVector: mixing different sectors");
    }

    unsigned r_;
    Charge charge_;
    std::map<MultiPartition, S> terms_;
};

// <[lambda], [mu]> = delta_{lambda,mu}; sectors with different charges pair to 0.
template <typename S>
    requires std::is_constructible_v<S, int>
S fock_pairing(const FockVector<S>& u, const FockVector<S>& v) {
    if (u.r() != v.r()) throw std::invalid_argument("fock_pairing: rank mismatch");
    S acc(0);
    if (!(u.charge() == v.charge())) return acc;
    for (const auto& [mp, c] : u.terms()) {
        auto it = v.terms().find(mp);
        if (it != v.terms().end()) acc = acc + c * it->second;
    }
    return acc;
}

// p_m(diamond_i) on the [lambda] basis: m < 0 adds border strips of size |m|
// to lambda^i with the Murnaghan-Nakayama sign, m > 0 removes them (the
// adjoint). Extended linearly over alpha. Charge is preserved.
template <typename S>
FockVector<S> heis_apply(int m, const H1Vector& alpha, const FockVector<S>& v) {
    if (m == 0) throw std::invalid_argument("heis_apply: m must be nonzero");
    if (alpha.r() != v.r()) throw std::invalid_argument("heis_apply: rank mismatch");
    FockVector<S> out(v.r(), v.charge());
    const int size = m < 0 ? -m : m;
    for (unsigned i = 0; i < v.r(); ++i) {
        const Rational& a = alpha.coord(i);
        if (a == 0) continue;
        for (const auto& [mp, c] : v.terms()) {
            const Partition& comp = mp.component(i);
            const auto moves = (m < 0) ? add_border_strips(comp, size) : remove_border_strips(comp, size);
            for (const auto& mv : moves)
                out.add_term(mp.with_component(i, mv.shape), scale_rat(c, a * mv.sign));
        }
    }
    return out;
}

// p_0(alpha) acts on the sector p by <alpha, p>.
template <typename S>
FockVector<S> heis_zero(const H1Vector& alpha, const FockVector<S>& v) {
    return v.scaled_rational(alpha.pair_charge(v.charge()));
}

// S_alpha: same expansion, charge moved by alpha.
template <typename S>
FockVector<S> shift(const Charge& alpha, const FockVector<S>& v) {
    FockVector<S> out = v;
    out.set_charge(v.charge() + alpha);
    return out;
}

// [lambda] * [mu] = delta_{lambda,mu} r^n h(lambda) [lambda], bilinearly;
// different sectors multiply to zero.
template <typename S>
FockVector<S> star(const FockVector<S>& u, const FockVector<S>& v) {
    if (u.r() != v.r()) throw std::invalid_argument("star: rank mismatch");
    FockVector<S> out(u.r(), u.charge());
    if (!(u.charge() == v.charge())) return out;
    for (const auto& [mp, c] : u.terms()) {
        auto it = v.terms().find(mp);
        if (it == v.terms().end()) continue;
        Rational eigen(int_pow(BigInt(u.r()), static_cast<unsigned>(mp.norm())) * mp.hook_product());
        out.add_term(mp, scale_rat(c * it->second, eigen));
    }
    return out;
}

// p_m(c^i) = sum_j eps^{-ij} p_m(diamond_j), on cyclotomic coefficients.
FockVector<Cyclotomic> heis_apply_c(int m, unsigned i, const FockVector<Cyclotomic>& v);

FockVector<Cyclotomic> to_cyclotomic(const FockVector<Rational>& v);
FockVector<Rational> to_rational(const FockVector<Cyclotomic>& v);  // throws on a zeta part

// phi: [lambda] -> s_lambda on the charge-0 sector; input must be
// homogeneous (single ||lambda||).
ClassFunction phi(const FockVector<Rational>& v);
ClassFunction phi(const FockVector<Cyclotomic>& v);
FockVector<Cyclotomic> phi_inverse(const ClassFunction& f);

// Monomials of creation operators on the vacuum.
FockVector<Rational> p_basis(unsigned r, const MultiPartition& lambda);       // p_{-lambda}
FockVector<Cyclotomic> pprime_basis(unsigned r, const MultiPartition& lambda);  // p'_{-lambda}
FockVector<Rational> qT_basis(unsigned r, const MultiPartition& lambda);      // q^T_{-lambda}

// Half vertex operator Gamma^{(i)}_{+/-}(t) = exp(sum_m (t_m/m) p_{+/-m}(diamond_i))
// expanded to the given total degree in the t-variables. `t_index` maps the
// part size m to the position of t_m in `vars`.
FockVector<RatMultiSeries> half_vertex(int sign, unsigned color,
                                       const std::vector<std::string>& vars,
                                       const std::map<int, std::size_t>& t_index,
                                       const FockVector<Rational>& v, int degree);

// w^0 Fourier mode of the vertex operator
// V(gamma_i; w, q) = exp(sum_k ((q^k-1) w^k / k) p_{-k}(diamond_i))
//                    exp(sum_k ((1-q^{-k}) w^{-k} / k) p_k(diamond_i))
// at q = e^{rz}, as a Fock vector with z-series coefficients.
FockVector<RatSeries> vertex_v0(unsigned color, const FockVector<Rational>& v, int order);

// (e^{rz}/(e^{rz}-1)^2) (V_0(gamma_i; e^{rz}) - 1) applied to v; diagonal on
// the [lambda] basis with the jm_spectrum eigenvalue series.
FockVector<RatSeries> jm_vertex_composite(unsigned color, const FockVector<Rational>& v, int order);

}  // namespace wreathfock
