#include "wreathfock/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace wreathfock {

namespace {

using PartsPair = std::pair<std::vector<int>, std::vector<int>>;

BigInt sym_char_memo(const Partition& nu, const Partition& mu,
                     std::map<PartsPair, BigInt>& memo) {
    if (mu.empty()) return 1;
    PartsPair key{nu.parts(), mu.parts()};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // peel the largest part of mu as a border strip of nu
    const int strip = mu.parts()[0];
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    BigInt total = 0;
    for (const StripMove& mv : remove_border_strips(nu, strip))
        total += BigInt(mv.sign) * sym_char_memo(mv.shape, rest, memo);
    memo[key] = total;
    return total;
}

}  // namespace

BigInt sym_char(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size())
        throw std::invalid_argument("sym_char: partitions must have equal size");
    static std::mutex mu_lock;
    static std::map<PartsPair, BigInt> memo;
    std::lock_guard<std::mutex> lock(mu_lock);
    return sym_char_memo(nu, mu, memo);
}

CharacterTable::CharacterTable(unsigned r, int n, std::vector<MultiPartition> classes,
                               std::vector<std::vector<Cyclotomic>> matrix)
    : r_(r), n_(n), classes_(std::move(classes)), matrix_(std::move(matrix)) {
    centralizers_.reserve(classes_.size());
    for (const auto& mp : classes_) centralizers_.push_back(mp.centralizer_order());
}

std::size_t CharacterTable::index(const MultiPartition& mp) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), mp);
    if (it == classes_.end() || *it != mp)
        throw std::invalid_argument("CharacterTable::index: unknown class " + mp.to_string());
    return static_cast<std::size_t>(it - classes_.begin());
}

std::vector<Cyclotomic> CharacterTable::degrees() const {
    MultiPartition id_class = MultiPartition::empty(r_);
    if (n_ > 0) id_class = id_class.with_component(0, Partition(std::vector<int>(n_, 1)));
    const std::size_t col = index(id_class);
    std::vector<Cyclotomic> out;
    out.reserve(classes_.size());
    for (std::size_t row = 0; row < classes_.size(); ++row) out.push_back(matrix_[row][col]);
    return out;
}

ClassFunction CharacterTable::irreducible(std::size_t lambda) const {
    ClassFunction f{r_, n_, {}};
    for (std::size_t rho = 0; rho < classes_.size(); ++rho) f.set(classes_[rho], matrix_[lambda][rho]);
    return f;
}

namespace {

// s_nu(gamma_i) expanded in the class-colored power-sum monomial basis:
// sum_{mu |- |nu|} (chi^nu_mu / z_mu) prod_{m in mu} p_m(gamma_i), with
// p_m(gamma_i) = (1/r) sum_j eps^{ij} p_m(c^j).
std::map<MultiPartition, Cyclotomic> expand_schur_color(unsigned r, const Partition& nu,
                                                        unsigned color) {
    std::map<MultiPartition, Cyclotomic> result;
    const Rational inv_r = Rational(1, static_cast<long>(r));
    for (const Partition& mu : partitions_of(nu.size())) {
        Cyclotomic base(Rational(sym_char(nu, mu)) / Rational(mu.z_order()));
        if (base.is_zero()) continue;
        std::map<MultiPartition, Cyclotomic> cur;
        cur[MultiPartition::empty(r)] = base;
        for (int m : mu.parts()) {
            std::map<MultiPartition, Cyclotomic> next;
            for (const auto& [rho, c] : cur) {
                for (unsigned j = 0; j < r; ++j) {
                    Cyclotomic w = c * Cyclotomic(inv_r) *
                                   Cyclotomic::zeta(r, (color * j) % r);
                    MultiPartition grown = add_part(rho, j, m);
                    auto it = next.find(grown);
                    if (it == next.end())
                        next[grown] = w;
                    else
                        it->second += w;
                }
            }
            cur = std::move(next);
        }
        for (const auto& [rho, c] : cur) {
            auto it = result.find(rho);
            if (it == result.end())
                result[rho] = c;
            else
                it->second += c;
        }
    }
    return result;
}

std::unique_ptr<CharacterTable> build_char_table(unsigned r, int n) {
    std::vector<MultiPartition> classes = enumerate_multipartitions(n, r);
    std::vector<std::vector<Cyclotomic>> matrix(classes.size());
    for (std::size_t row = 0; row < classes.size(); ++row) {
        const MultiPartition& lambda = classes[row];
        // product over colors of the per-color expansions
        std::map<MultiPartition, Cyclotomic> acc;
        acc[MultiPartition::empty(r)] = Cyclotomic(1);
        for (unsigned i = 0; i < r; ++i) {
            if (lambda.component(i).empty()) continue;
            auto factor = expand_schur_color(r, lambda.component(i), i);
            std::map<MultiPartition, Cyclotomic> next;
            for (const auto& [rho1, c1] : acc) {
                for (const auto& [rho2, c2] : factor) {
                    MultiPartition merged = rho1;
                    for (unsigned j = 0; j < r; ++j)
                        for (int part : rho2.component(j).parts()) merged = add_part(merged, j, part);
                    Cyclotomic w = c1 * c2;
                    auto it = next.find(merged);
                    if (it == next.end())
                        next[merged] = w;
                    else
                        it->second += w;
                }
            }
            acc = std::move(next);
        }
        // s_lambda(rho) = (coefficient of the rho monomial) * Z_rho
        matrix[row].assign(classes.size(), Cyclotomic(0));
        for (const auto& [rho, c] : acc) {
            auto it = std::lower_bound(classes.begin(), classes.end(), rho);
            std::size_t col = static_cast<std::size_t>(it - classes.begin());
            matrix[row][col] = c * Cyclotomic(Rational(rho.centralizer_order()));
        }
    }
    return std::make_unique<CharacterTable>(r, n, std::move(classes), std::move(matrix));
}

}  // namespace

const CharacterTable& wreath_char_table(unsigned r, int n) {
    static std::mutex lock;
    static std::map<std::pair<unsigned, int>, std::unique_ptr<CharacterTable>> memo;
    std::lock_guard<std::mutex> guard(lock);
    auto& slot = memo[{r, n}];
    if (!slot) slot = build_char_table(r, n);
    return *slot;
}

ClassFunction irreducible_character(unsigned r, int n, const MultiPartition& lambda) {
    const CharacterTable& table = wreath_char_table(r, n);
    return table.irreducible(table.index(lambda));
}

Cyclotomic class_inner(const ClassFunction& f, const ClassFunction& g) {
    if (f.r != g.r || f.n != g.n) throw std::invalid_argument("class_inner: mismatched (r, n)");
    Cyclotomic acc(0);
    for (const auto& [mp, v] : f.values) {
        Cyclotomic gv = g.value(mp);
        if (gv.is_zero()) continue;
        acc += v * gv.conj() * Cyclotomic(Rational(1) / Rational(mp.centralizer_order()));
    }
    return acc;
}

ClassFunction convolve_fast(const ClassFunction& f, const ClassFunction& g) {
    if (f.r != g.r || f.n != g.n) throw std::invalid_argument("convolve_fast: mismatched (r, n)");
    const CharacterTable& table = wreath_char_table(f.r, f.n);
    const std::size_t count = table.classes().size();
    const BigInt rn = int_pow(BigInt(f.r), static_cast<unsigned>(f.n));
    ClassFunction out{f.r, f.n, {}};
    std::vector<Cyclotomic> accum(count, Cyclotomic(0));
    for (std::size_t lam = 0; lam < count; ++lam) {
        ClassFunction s = table.irreducible(lam);
        Cyclotomic cf = class_inner(f, s);
        if (cf.is_zero()) continue;
        Cyclotomic cg = class_inner(g, s);
        if (cg.is_zero()) continue;
        BigInt scale = rn * table.classes()[lam].hook_product();
        Cyclotomic w = cf * cg * Cyclotomic(Rational(scale));
        for (std::size_t rho = 0; rho < count; ++rho) accum[rho] += w * table.value(lam, rho);
    }
    for (std::size_t rho = 0; rho < count; ++rho) out.set(table.classes()[rho], accum[rho]);
    return out;
}

std::map<MultiPartition, RatSeries> jm_spectrum(unsigned r, int n, unsigned color, int order) {
    if (color >= r) throw std::invalid_argument("jm_spectrum: color out of range");
    const int work = order + 4;
    const Rational rr(static_cast<long>(r));
    RatSeries inv_sigma = RatSeries::sigma("z", rr, work).inverse();
    std::map<MultiPartition, RatSeries> out;
    for (const MultiPartition& lambda : enumerate_multipartitions(n, r)) {
        const Partition& part = lambda.component(color);
        RatSeries num = RatSeries::zero("z", work);
        for (int j = 1; j <= part.length(); ++j) {
            Rational top = (Rational(part.part(j - 1)) - j + Rational(1, 2)) * rr;
            Rational tail = (Rational(1, 2) - j) * rr;
            num += RatSeries::exp_linear("z", top, work) - RatSeries::exp_linear("z", tail, work);
        }
        out.emplace(lambda, (inv_sigma * num).truncated(order));
    }
    return out;
}

BigInt GradedStructureConstants::value(std::size_t rho, std::size_t sigma, std::size_t tau) const {
    auto it = top.find({rho, sigma, tau});
    return it == top.end() ? BigInt(0) : it->second;
}

GradedStructureConstants graded_constants(unsigned r, int n) {
    // Guarded like the brute-force oracle that certifies it.
    long size = 1;
    for (int k = 1; k <= n; ++k) size *= k;
    for (int k = 0; k < n; ++k) size *= static_cast<long>(r);
    if (size > WreathGroup::kSizeGuard) throw guard_error("graded_constants: size guard exceeded");

    GradedStructureConstants out;
    out.r = r;
    out.n = n;
    out.classes = enumerate_multipartitions(n, r);
    for (std::size_t a = 0; a < out.classes.size(); ++a) {
        ClassFunction fa = indicator_class_function(r, n, out.classes[a]);
        for (std::size_t b = 0; b < out.classes.size(); ++b) {
            ClassFunction fb = indicator_class_function(r, n, out.classes[b]);
            ClassFunction conv = convolve_fast(fa, fb);
            const int target = out.classes[a].degree() + out.classes[b].degree();
            for (std::size_t c = 0; c < out.classes.size(); ++c) {
                if (out.classes[c].degree() != target) continue;
                Cyclotomic v = conv.value(out.classes[c]);
                if (v.is_zero()) continue;
                Rational q = v.to_rational();
                if (denominator(q) != 1 || q < 0)
                    throw std::logic_error("graded_constants: entry not a nonnegative integer");
                out.top[{a, b, c}] = numerator(q);
            }
        }
    }
    return out;
}

namespace {

Rational centralizer_rat(const MultiPartition& mp) { return Rational(mp.centralizer_order()); }

}  // namespace

ClassFunction heis_class_create_c(int m, unsigned j, const ClassFunction& f) {
    if (m <= 0) throw std::invalid_argument("heis_class_create_c: m must be positive");
    ClassFunction out{f.r, f.n + m, {}};
    for (const auto& [rho, v] : f.values) {
        MultiPartition grown = add_part(rho, j, m);
        Cyclotomic coeff = v * Cyclotomic(centralizer_rat(grown) / centralizer_rat(rho));
        out.set(grown, out.value(grown) + coeff);
    }
    return out;
}

ClassFunction heis_class_annihilate_c(int m, unsigned i, const ClassFunction& f) {
    if (m <= 0) throw std::invalid_argument("heis_class_annihilate_c: m must be positive");
    ClassFunction out{f.r, f.n - m, {}};
    if (f.n < m) return out;
    const unsigned j = (f.r - (i % f.r)) % f.r;  // pairing c^i with c^{r-i}
    for (const auto& [rho, v] : f.values) {
        int mult = rho.component(j).multiplicity(m);
        if (mult == 0) continue;
        MultiPartition shrunk = remove_part(rho, j, m);
        Rational factor = Rational(static_cast<long>(f.r)) * m * mult *
                          centralizer_rat(shrunk) / centralizer_rat(rho);
        out.set(shrunk, out.value(shrunk) + v * Cyclotomic(factor));
    }
    return out;
}

ClassFunction heis_class_create_gamma(int m, unsigned i, const ClassFunction& f) {
    ClassFunction out{f.r, f.n + m, {}};
    const Cyclotomic inv_r(Rational(1, static_cast<long>(f.r)));
    for (unsigned j = 0; j < f.r; ++j) {
        ClassFunction piece = heis_class_create_c(m, j, f);
        out += piece.scaled(inv_r * Cyclotomic::zeta(f.r, (i * j) % f.r));
    }
    return out;
}

ClassFunction heis_class_annihilate_gamma(int m, unsigned i, const ClassFunction& f) {
    ClassFunction out{f.r, f.n - m, {}};
    if (f.n < m) return out;
    const Cyclotomic inv_r(Rational(1, static_cast<long>(f.r)));
    for (unsigned j = 0; j < f.r; ++j) {
        ClassFunction piece = heis_class_annihilate_c(m, j, f);
        out += piece.scaled(inv_r * Cyclotomic::zeta(f.r, (i * j) % f.r));
    }
    return out;
}

ClassFunction class_vacuum(unsigned r) {
    ClassFunction f{r, 0, {}};
    f.set(MultiPartition::empty(r), Cyclotomic(1));
    return f;
}

ClassFunction a_basis(unsigned r, const MultiPartition& lambda) {
    ClassFunction f = class_vacuum(r);
    for (unsigned i = 0; i < r; ++i)
        for (int m : lambda.component(i).parts()) f = heis_class_create_c(m, i, f);
    return f;
}

ClassFunction aR_basis(unsigned r, const MultiPartition& lambda) {
    ClassFunction f = class_vacuum(r);
    for (unsigned i = 0; i < r; ++i)
        for (int m : lambda.component(i).parts()) f = heis_class_create_gamma(m, i, f);
    return f;
}

ClassFunction b_basis(unsigned r, const MultiPartition& lambda) {
    ClassFunction f = class_vacuum(r);
    for (int m : lambda.component(0).parts()) f = heis_class_create_c(m, 0, f);
    for (unsigned i = 1; i < r; ++i)
        for (int m : lambda.component(i).parts()) {
            ClassFunction upper = heis_class_create_gamma(m, i - 1, f);
            ClassFunction lower = heis_class_create_gamma(m, i, f);
            f = upper - lower;
        }
    return f;
}

}  // namespace wreathfock
