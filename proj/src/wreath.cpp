#include "wreathfock/wreath.hpp"

#include <algorithm>
#include <numeric>

namespace wreathfock {

WreathElement wreath_mul(const WreathElement& a, const WreathElement& b) {
    if (a.r != b.r || a.n() != b.n())
        throw std::invalid_argument("wreath_mul: mismatched groups");
    const int n = a.n();
    WreathElement out;
    out.r = a.r;
    out.colors.resize(static_cast<std::size_t>(n));
    out.perm.resize(static_cast<std::size_t>(n));
    std::vector<int> a_inv(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) a_inv[static_cast<std::size_t>(a.perm[static_cast<std::size_t>(j)])] = j;
    for (int j = 0; j < n; ++j) {
        out.colors[static_cast<std::size_t>(j)] =
            (a.colors[static_cast<std::size_t>(j)] +
             b.colors[static_cast<std::size_t>(a_inv[static_cast<std::size_t>(j)])]) %
            static_cast<int>(a.r);
        out.perm[static_cast<std::size_t>(j)] =
            a.perm[static_cast<std::size_t>(b.perm[static_cast<std::size_t>(j)])];
    }
    return out;
}

WreathElement wreath_inv(const WreathElement& a) {
    const int n = a.n();
    WreathElement out;
    out.r = a.r;
    out.colors.resize(static_cast<std::size_t>(n));
    out.perm.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) out.perm[static_cast<std::size_t>(a.perm[static_cast<std::size_t>(j)])] = j;
    for (int j = 0; j < n; ++j) {
        int image = a.perm[static_cast<std::size_t>(j)];
        out.colors[static_cast<std::size_t>(j)] =
            (static_cast<int>(a.r) - a.colors[static_cast<std::size_t>(image)]) % static_cast<int>(a.r);
    }
    return out;
}

WreathElement wreath_identity(unsigned r, int n) {
    WreathElement e;
    e.r = r;
    e.colors.assign(static_cast<std::size_t>(n), 0);
    e.perm.resize(static_cast<std::size_t>(n));
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
}

MultiPartition element_type(const WreathElement& x) {
    const int n = x.n();
    std::vector<std::vector<int>> parts(x.r);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0, color = 0, j = start;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            color = (color + x.colors[static_cast<std::size_t>(j)]) % static_cast<int>(x.r);
            j = x.perm[static_cast<std::size_t>(j)];
            ++len;
        } while (j != start);
        parts[static_cast<std::size_t>(color)].push_back(len);
    }
    std::vector<Partition> comps;
    comps.reserve(x.r);
    for (auto& p : parts) {
        std::sort(p.rbegin(), p.rend());
        comps.emplace_back(std::move(p));
    }
    return MultiPartition(x.r, std::move(comps));
}

WreathGroup::WreathGroup(unsigned r, int n) : r_(r), n_(n) {
    if (r == 0 || n < 0) throw std::invalid_argument("WreathGroup: bad parameters");
    long size = 1;
    for (int k = 1; k <= n; ++k) {
        size *= k;
        if (size > kSizeGuard) throw guard_error("WreathGroup: size guard exceeded");
    }
    for (int k = 0; k < n; ++k) {
        size *= static_cast<long>(r);
        if (size > kSizeGuard) throw guard_error("WreathGroup: size guard exceeded");
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        while (true) {
            WreathElement x;
            x.r = r_;
            x.colors = colors;
            x.perm = perm;
            index_[{colors, perm}] = elements_.size();
            elements_.push_back(std::move(x));
            // increment base-r counter
            int pos = 0;
            while (pos < n) {
                if (++colors[static_cast<std::size_t>(pos)] < static_cast<int>(r)) break;
                colors[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    classes_ = enumerate_multipartitions(n, r);
    std::map<MultiPartition, std::size_t> class_idx;
    for (std::size_t k = 0; k < classes_.size(); ++k) class_idx[classes_[k]] = k;
    type_of_.resize(elements_.size());
    reps_.assign(classes_.size(), elements_.size());
    std::vector<BigInt> sizes(classes_.size(), BigInt(0));
    for (std::size_t e = 0; e < elements_.size(); ++e) {
        std::size_t k = class_idx.at(element_type(elements_[e]));
        type_of_[e] = k;
        if (reps_[k] == elements_.size()) reps_[k] = e;
        sizes[k] += 1;
    }
    class_sizes_ = std::move(sizes);
}

std::size_t WreathGroup::index_of(const WreathElement& x) const {
    auto it = index_.find({x.colors, x.perm});
    if (it == index_.end()) throw std::invalid_argument("WreathGroup::index_of: not an element");
    return it->second;
}

std::size_t WreathGroup::mul(std::size_t a, std::size_t b) const {
    return index_of(wreath_mul(elements_[a], elements_[b]));
}

std::size_t WreathGroup::inv(std::size_t a) const {
    return index_of(wreath_inv(elements_[a]));
}

std::size_t WreathGroup::class_index(const MultiPartition& mp) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), mp);
    if (it == classes_.end() || *it != mp)
        throw std::invalid_argument("WreathGroup::class_index: unknown class " + mp.to_string());
    return static_cast<std::size_t>(it - classes_.begin());
}

Cyclotomic ClassFunction::value(const MultiPartition& mp) const {
    auto it = values.find(mp);
    return it == values.end() ? Cyclotomic(0) : it->second;
}

void ClassFunction::set(const MultiPartition& mp, const Cyclotomic& v) {
    if (v.is_zero())
        values.erase(mp);
    else
        values[mp] = v;
}

bool ClassFunction::is_zero() const {
    for (const auto& [mp, v] : values)
        if (!v.is_zero()) return false;
    return true;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (r != o.r || n != o.n) throw std::invalid_argument("ClassFunction: mismatched (r, n)");
    for (const auto& [mp, v] : o.values) set(mp, value(mp) + v);
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (r != o.r || n != o.n) throw std::invalid_argument("ClassFunction: mismatched (r, n)");
    for (const auto& [mp, v] : o.values) set(mp, value(mp) - v);
    return *this;
}

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
    ClassFunction out{r, n, {}};
    if (c.is_zero()) return out;
    for (const auto& [mp, v] : values) out.set(mp, v * c);
    return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    if (a.r != b.r || a.n != b.n) return false;
    ClassFunction diff = a;
    diff -= b;
    return diff.is_zero();
}

ClassFunction indicator_class_function(unsigned r, int n, const MultiPartition& mp) {
    ClassFunction f{r, n, {}};
    f.set(mp, Cyclotomic(1));
    return f;
}

Cyclotomic evaluate(const ClassFunction& f, const WreathElement& x) {
    if (f.r != x.r || f.n != x.n()) throw std::invalid_argument("evaluate: mismatched (r, n)");
    return f.value(element_type(x));
}

ClassFunction convolve_bruteforce(const WreathGroup& G, const ClassFunction& f,
                                  const ClassFunction& g) {
    if (f.r != G.r() || f.n != G.n() || g.r != G.r() || g.n != G.n())
        throw std::invalid_argument("convolve_bruteforce: mismatched (r, n)");
    // value arrays over class indices
    const auto& classes = G.classes();
    std::vector<Cyclotomic> fv(classes.size()), gv(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        fv[k] = f.value(classes[k]);
        gv[k] = g.value(classes[k]);
    }
    ClassFunction out{G.r(), G.n(), {}};
    for (std::size_t k = 0; k < classes.size(); ++k) {
        std::size_t x = G.representative(k);
        Cyclotomic acc(0);
        for (std::size_t y = 0; y < G.size(); ++y) {
            const Cyclotomic& gy = gv[G.type_index(y)];
            if (gy.is_zero()) continue;
            acc += fv[G.type_index(G.mul(x, G.inv(y)))] * gy;
        }
        out.set(classes[k], acc);
    }
    return out;
}

GroupAlgebraElement group_algebra_mul(const WreathGroup& G, const GroupAlgebraElement& a,
                                      const GroupAlgebraElement& b) {
    GroupAlgebraElement out;
    for (const auto& [x, cx] : a) {
        if (cx.is_zero()) continue;
        for (const auto& [y, cy] : b) {
            if (cy.is_zero()) continue;
            std::size_t z = G.mul(x, y);
            auto it = out.find(z);
            if (it == out.end())
                out[z] = cx * cy;
            else
                it->second += cx * cy;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

GroupAlgebraElement jm_element(const WreathGroup& G, int j) {
    if (j < 1 || j > G.n()) throw std::invalid_argument("jm_element: index out of range");
    GroupAlgebraElement out;
    for (int i = 1; i < j; ++i) {
        for (int c = 0; c < static_cast<int>(G.r()); ++c) {
            WreathElement x = wreath_identity(G.r(), G.n());
            x.perm[static_cast<std::size_t>(i - 1)] = j - 1;
            x.perm[static_cast<std::size_t>(j - 1)] = i - 1;
            x.colors[static_cast<std::size_t>(i - 1)] = c;
            x.colors[static_cast<std::size_t>(j - 1)] = (static_cast<int>(G.r()) - c) % static_cast<int>(G.r());
            out[G.index_of(x)] = Cyclotomic(1);
        }
    }
    return out;
}

ClassFunction jm_class_function(const WreathGroup& G, int m, const std::vector<Cyclotomic>& alpha) {
    if (m < 0) throw std::invalid_argument("jm_class_function: m must be nonnegative");
    if (alpha.size() != G.r()) throw std::invalid_argument("jm_class_function: alpha must have r values");
    GroupAlgebraElement total;
    for (int i = 1; i <= G.n(); ++i) {
        // M_i^m
        GroupAlgebraElement power;
        power[G.index_of(wreath_identity(G.r(), G.n()))] = Cyclotomic(1);
        if (m > 0) {
            GroupAlgebraElement mi = jm_element(G, i);
            for (int k = 0; k < m; ++k) power = group_algebra_mul(G, power, mi);
        }
        // alpha^{(i)} = sum_g alpha(g) (g in slot i)
        GroupAlgebraElement slot;
        for (int c = 0; c < static_cast<int>(G.r()); ++c) {
            if (alpha[static_cast<std::size_t>(c)].is_zero()) continue;
            WreathElement x = wreath_identity(G.r(), G.n());
            x.colors[static_cast<std::size_t>(i - 1)] = c;
            slot[G.index_of(x)] = alpha[static_cast<std::size_t>(c)];
        }
        for (const auto& [idx, v] : group_algebra_mul(G, power, slot)) {
            auto it = total.find(idx);
            if (it == total.end())
                total[idx] = v;
            else
                it->second += v;
        }
    }
    // Normalized by 1/(r m!): this is the scaling under which convolution by
    // Xi_n^m acts on every irreducible character with the z^m coefficient of
    // the content-series spectrum (see characters::jm_spectrum).
    Cyclotomic norm =
        Cyclotomic(Rational(1) / (BigInt(G.r()) * factorial(static_cast<unsigned>(m))));
    // Read back as a class function; the coefficient must be constant on
    // classes for this to be well defined.
    ClassFunction out{G.r(), G.n(), {}};
    std::vector<bool> assigned(G.classes().size(), false);
    std::vector<Cyclotomic> vals(G.classes().size(), Cyclotomic(0));
    for (const auto& [idx, v] : total) {
        std::size_t k = G.type_index(idx);
        Cyclotomic scaled = v * norm;
        if (!assigned[k]) {
            vals[k] = scaled;
            assigned[k] = true;
        } else if (vals[k] != scaled) {
            throw std::logic_error("jm_class_function: result not constant on classes");
        }
    }
    // elements missing from `total` carry coefficient 0
    for (std::size_t k = 0; k < G.classes().size(); ++k) {
        if (!assigned[k]) continue;
        BigInt csize = G.class_size(k);
        GroupAlgebraElement::size_type present = 0;
        for (const auto& [idx, v] : total)
            if (G.type_index(idx) == k) ++present;
        if (BigInt(present) != csize && !vals[k].is_zero())
            throw std::logic_error("jm_class_function: result not constant on classes");
        out.set(G.classes()[k], vals[k]);
    }
    return out;
}

}  // namespace wreathfock
