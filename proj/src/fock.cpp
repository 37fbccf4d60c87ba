#include "wreathfock/fock.hpp"

#include "wreathfock/characters.hpp"

namespace wreathfock {

H1Vector H1Vector::diamond(unsigned r, unsigned i) {
    if (i >= r) throw std::invalid_argument("H1Vector::diamond: index out of range");
    std::vector<Rational> c(r, Rational(0));
    c[i] = 1;
    return H1Vector(r, std::move(c));
}

H1Vector H1Vector::rt(unsigned r) {
    return H1Vector(r, std::vector<Rational>(r, Rational(1)));
}

H1Vector H1Vector::t(unsigned r) {
    return H1Vector(r, std::vector<Rational>(r, Rational(1, static_cast<long>(r))));
}

H1Vector H1Vector::sigma_class(unsigned r, unsigned i) {
    if (i > r) throw std::invalid_argument("H1Vector::sigma_class: index out of range");
    if (i == 0) return diamond(r, 0).scaled(-1);
    if (i == r) return diamond(r, r - 1);
    return diamond(r, i - 1) - diamond(r, i);
}

H1Vector H1Vector::first_chern(unsigned r, unsigned k) {
    if (k >= r) throw std::invalid_argument("H1Vector::first_chern: index out of range");
    std::vector<Rational> c(r);
    for (unsigned i = 0; i < r; ++i) {
        long num = (i < k) ? static_cast<long>(k) - static_cast<long>(r) : static_cast<long>(k);
        c[i] = Rational(num, static_cast<long>(r));
    }
    return H1Vector(r, std::move(c));
}

H1Vector& H1Vector::operator+=(const H1Vector& o) {
    if (coords_.size() != o.coords_.size()) throw std::invalid_argument("H1Vector: rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

H1Vector& H1Vector::operator-=(const H1Vector& o) {
    if (coords_.size() != o.coords_.size()) throw std::invalid_argument("H1Vector: rank mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

H1Vector H1Vector::scaled(const Rational& c) const {
    H1Vector out = *this;
    for (auto& x : out.coords_) x *= c;
    return out;
}

Rational inner(const H1Vector& a, const H1Vector& b) {
    if (a.coords_.size() != b.coords_.size()) throw std::invalid_argument("inner: rank mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.coords_.size(); ++i) acc += a.coords_[i] * b.coords_[i];
    return acc;
}

Rational H1Vector::pair_charge(const Charge& p) const {
    if (p.r() != r()) throw std::invalid_argument("pair_charge: rank mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) acc += coords_[i] * p.coords[i];
    return acc;
}

FockVector<Cyclotomic> heis_apply_c(int m, unsigned i, const FockVector<Cyclotomic>& v) {
    const unsigned r = v.r();
    FockVector<Cyclotomic> out(r, v.charge());
    for (unsigned j = 0; j < r; ++j) {
        Cyclotomic w = Cyclotomic::zeta(r, ((r - (i % r)) % r * j) % r);  // eps^{-ij}
        out += heis_apply(m, H1Vector::diamond(r, j), v).scaled(w);
    }
    return out;
}

FockVector<Cyclotomic> to_cyclotomic(const FockVector<Rational>& v) {
    FockVector<Cyclotomic> out(v.r(), v.charge());
    for (const auto& [mp, c] : v.terms()) out.add_term(mp, Cyclotomic(c));
    return out;
}

FockVector<Rational> to_rational(const FockVector<Cyclotomic>& v) {
    FockVector<Rational> out(v.r(), v.charge());
    for (const auto& [mp, c] : v.terms()) out.add_term(mp, c.to_rational());
    return out;
}

namespace {

template <typename S>
ClassFunction phi_impl(const FockVector<S>& v) {
    if (!(v.charge() == Charge(v.r())))
        throw std::invalid_argument("phi: defined on the charge-0 sector only");
    int n = -1;
    for (const auto& [mp, c] : v.terms()) {
        if (n < 0)
            n = mp.norm();
        else if (mp.norm() != n)
            throw std::invalid_argument("phi: input must be homogeneous");
    }
    if (n < 0) n = 0;
    const CharacterTable& table = wreath_char_table(v.r(), n);
    ClassFunction out{v.r(), n, {}};
    for (const auto& [mp, c] : v.terms()) {
        Cyclotomic coeff;
        if constexpr (std::is_same_v<S, Rational>)
            coeff = Cyclotomic(c);
        else
            coeff = c;
        ClassFunction row = table.irreducible(table.index(mp));
        out += row.scaled(coeff);
    }
    return out;
}

}  // namespace

ClassFunction phi(const FockVector<Rational>& v) { return phi_impl(v); }
ClassFunction phi(const FockVector<Cyclotomic>& v) { return phi_impl(v); }

FockVector<Cyclotomic> phi_inverse(const ClassFunction& f) {
    const CharacterTable& table = wreath_char_table(f.r, f.n);
    FockVector<Cyclotomic> out(f.r);
    for (std::size_t lam = 0; lam < table.classes().size(); ++lam) {
        Cyclotomic c = class_inner(f, table.irreducible(lam));
        out.add_term(table.classes()[lam], c);
    }
    return out;
}

FockVector<Rational> p_basis(unsigned r, const MultiPartition& lambda) {
    FockVector<Rational> v = FockVector<Rational>::vacuum(r);
    for (unsigned i = 0; i < r; ++i)
        for (int m : lambda.component(i).parts()) v = heis_apply(-m, H1Vector::diamond(r, i), v);
    return v;
}

FockVector<Cyclotomic> pprime_basis(unsigned r, const MultiPartition& lambda) {
    FockVector<Cyclotomic> v = FockVector<Cyclotomic>::vacuum(r);
    for (unsigned i = 0; i < r; ++i)
        for (int m : lambda.component(i).parts()) v = heis_apply_c(-m, i, v);
    return v;
}

FockVector<Rational> qT_basis(unsigned r, const MultiPartition& lambda) {
    FockVector<Rational> v = FockVector<Rational>::vacuum(r);
    for (int m : lambda.component(0).parts()) v = heis_apply(-m, H1Vector::rt(r), v);
    for (unsigned i = 1; i < r; ++i)
        for (int m : lambda.component(i).parts())
            v = heis_apply(-m, H1Vector::sigma_class(r, i), v);
    return v;
}

namespace {

// exp(sum_m coeff_m X_m) applied term by term: sum over part-multisets mu of
// prod_m coeff_m^{j_m}/j_m! X_mu. `apply` performs a single X_m.
template <typename Apply>
void fold_exponential(const std::vector<int>& sizes, int max_factors,
                      const Apply& apply_chain) {
    // enumerate multisets as multiplicity vectors over `sizes`
    std::vector<int> mult(sizes.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int used) -> void {
        if (pos == sizes.size()) {
            apply_chain(mult);
            return;
        }
        for (int j = 0; used + j <= max_factors; ++j) {
            mult[pos] = j;
            self(self, pos + 1, used + j);
        }
        mult[pos] = 0;
    };
    rec(rec, 0, 0);
}

}  // namespace

FockVector<RatMultiSeries> half_vertex(int sign, unsigned color,
                                       const std::vector<std::string>& vars,
                                       const std::map<int, std::size_t>& t_index,
                                       const FockVector<Rational>& v, int degree) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("half_vertex: sign must be +1 or -1");
    const unsigned r = v.r();
    std::vector<int> sizes;
    for (const auto& [m, idx] : t_index) {
        if (m <= 0 || idx >= vars.size())
            throw std::invalid_argument("half_vertex: bad t-variable mapping");
        sizes.push_back(m);
    }
    FockVector<RatMultiSeries> out(r, v.charge());
    const H1Vector dir = H1Vector::diamond(r, color);
    fold_exponential(sizes, degree, [&](const std::vector<int>& mult) {
        // prod coeff: prod_m (1/m)^{j_m} / j_m!; monomial exps
        Rational coeff = 1;
        std::vector<int> exps(vars.size(), 0);
        int total_parts = 0, total_size = 0;
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            const int m = sizes[k], j = mult[k];
            if (j == 0) continue;
            total_parts += j;
            total_size += m * j;
            coeff /= int_pow(BigInt(m), static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(j));
            exps[t_index.at(m)] = j;
        }
        if (sign == 1 && total_size > v.max_norm()) return;  // annihilated
        FockVector<Rational> w = v;
        for (std::size_t k = 0; k < sizes.size(); ++k)
            for (int rep = 0; rep < mult[k]; ++rep) w = heis_apply(sign * sizes[k], dir, w);
        if (w.is_zero()) return;
        RatMultiSeries mono(vars, degree);
        mono.add_term(exps, coeff);
        for (const auto& [mp, c] : w.terms()) out.add_term(mp, mono.scaled(c));
        (void)total_parts;
    });
    return out;
}

namespace {

// coefficient series prod_k a_k(z)^{j_k} / j_k! for the vertex exponentials
RatSeries vertex_weight(const std::vector<int>& sizes, const std::vector<int>& mult,
                        const std::vector<RatSeries>& base, int work) {
    RatSeries acc = RatSeries::monomial("z", 1, 0, work);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        for (int rep = 0; rep < mult[k]; ++rep) acc = (acc * base[k]).truncated(work);
        if (mult[k] > 0)
            acc = acc.scaled(Rational(1) / Rational(factorial(static_cast<unsigned>(mult[k]))));
    }
    return acc;
}

}  // namespace

FockVector<RatSeries> vertex_v0(unsigned color, const FockVector<Rational>& v, int order) {
    const unsigned r = v.r();
    const int work = order + 4;
    const Rational rr(static_cast<long>(r));
    const int budget = v.max_norm();

    std::vector<int> sizes;
    for (int m = 1; m <= budget; ++m) sizes.push_back(m);
    std::vector<RatSeries> ann_base, cre_base;  // (1-e^{-krz})/k and (e^{krz}-1)/k
    for (int m : sizes) {
        RatSeries one = RatSeries::monomial("z", 1, 0, work);
        ann_base.push_back((one - RatSeries::exp_linear("z", -rr * m, work)).scaled(Rational(1, m)));
        cre_base.push_back((RatSeries::exp_linear("z", rr * m, work) - one).scaled(Rational(1, m)));
    }

    const H1Vector dir = H1Vector::diamond(r, color);
    FockVector<RatSeries> out(r, v.charge());
    // annihilation side grouped by total degree d, then creation side of the
    // same degree (the w^0 mode pairs them up)
    std::map<int, std::vector<std::pair<FockVector<Rational>, RatSeries>>> lowered;
    fold_exponential(sizes, budget, [&](const std::vector<int>& mult) {
        int total = 0;
        for (std::size_t k = 0; k < sizes.size(); ++k) total += sizes[k] * mult[k];
        if (total > budget) return;
        FockVector<Rational> w = v;
        for (std::size_t k = 0; k < sizes.size() && !w.is_zero(); ++k)
            for (int rep = 0; rep < mult[k]; ++rep) w = heis_apply(sizes[k], dir, w);
        if (w.is_zero() && total > 0) return;
        lowered[total].push_back({w, vertex_weight(sizes, mult, ann_base, work)});
    });
    for (const auto& [d, pieces] : lowered) {
        fold_exponential(sizes, budget, [&](const std::vector<int>& mult) {
            int total = 0;
            for (std::size_t k = 0; k < sizes.size(); ++k) total += sizes[k] * mult[k];
            if (total != d) return;  // only the w^0 mode survives
            RatSeries weight = vertex_weight(sizes, mult, cre_base, work);
            for (const auto& [w, ann_weight] : pieces) {
                FockVector<Rational> u = w;
                for (std::size_t k = 0; k < sizes.size() && !u.is_zero(); ++k)
                    for (int rep = 0; rep < mult[k]; ++rep) u = heis_apply(-sizes[k], dir, u);
                if (u.is_zero()) continue;
                RatSeries total_weight = (weight * ann_weight).truncated(work);
                for (const auto& [mp, c] : u.terms())
                    out.add_term(mp, total_weight.scaled(c));
            }
        });
    }
    return out;
}

FockVector<RatSeries> jm_vertex_composite(unsigned color, const FockVector<Rational>& v, int order) {
    const unsigned r = v.r();
    const int work = order + 6;
    FockVector<RatSeries> v0 = vertex_v0(color, v, work);
    // subtract the identity term
    for (const auto& [mp, c] : v.terms())
        v0.add_term(mp, RatSeries::monomial("z", -c, 0, work + 4));
    RatSeries sigma = RatSeries::sigma("z", Rational(static_cast<long>(r)), work + 4);
    RatSeries prefactor = (sigma * sigma).inverse();  // e^{rz}/(e^{rz}-1)^2
    FockVector<RatSeries> out(r, v.charge());
    for (const auto& [mp, c] : v0.terms()) {
        RatSeries prod = prefactor * c;
        if (prod.trunc() > order) prod = prod.truncated(order);
        out.add_term(mp, prod);
    }
    return out;
}

}  // namespace wreathfock
