#include "wreathfock/verify.hpp"

#include "wreathfock/characters.hpp"
#include "wreathfock/chern.hpp"
#include "wreathfock/correlators.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/wreath.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace wreathfock {

namespace {

std::string format_case(unsigned r, int n) {
    return "(r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")";
}

std::vector<Charge> charge_box(unsigned r, int bound) {
    std::vector<Charge> out;
    std::vector<int> cur(r, -bound);
    while (true) {
        out.emplace_back(r, cur);
        unsigned pos = 0;
        while (pos < r) {
            if (++cur[pos] <= bound) break;
            cur[pos] = -bound;
            ++pos;
        }
        if (pos == r) break;
    }
    return out;
}

// --- criterion 1: dimension generating function ---------------------------

VerifyResult verify_dims(const VerifyOptions& opts) {
    VerifyResult res{"dims", true, ""};
    const unsigned r_max = opts.r.value_or(4);
    const int n_max = opts.n.value_or(8);
    for (unsigned r = 1; r <= r_max; ++r) {
        for (int n = 0; n <= n_max; ++n) {
            if (BigInt(enumerate_multipartitions(n, r).size()) != colored_partition_count(n, r)) {
                res.pass = false;
                res.detail += "dimension mismatch at " + format_case(r, n) + "; ";
            }
        }
    }
    if (res.pass) res.detail = "|P_n(r)| matches the eta expansion for r <= " +
                               std::to_string(r_max) + ", n <= " + std::to_string(n_max);
    return res;
}

// --- criterion 2: Heisenberg commutation -----------------------------------

VerifyResult verify_heisenberg(const VerifyOptions& opts) {
    VerifyResult res{"heisenberg", true, ""};
    const unsigned r_max = opts.r.value_or(3);
    const int norm_max = opts.n.value_or(5);
    const std::vector<int> modes{1, 2, 3};
    long checked = 0;
    for (unsigned r = 1; r <= r_max; ++r) {
        std::vector<H1Vector> dirs;
        for (unsigned i = 0; i < r; ++i) dirs.push_back(H1Vector::diamond(r, i));
        for (unsigned i = 1; i < r; ++i) dirs.push_back(H1Vector::sigma_class(r, i));

        // memoized single-generator actions on basis vectors
        std::map<std::tuple<std::vector<std::vector<int>>, std::size_t, int>, FockVector<Rational>>
            memo;
        auto key_of = [](const MultiPartition& mp) {
            std::vector<std::vector<int>> key;
            for (const auto& c : mp.components()) key.push_back(c.parts());
            return key;
        };
        std::function<FockVector<Rational>(const FockVector<Rational>&, std::size_t, int)> apply =
            [&](const FockVector<Rational>& v, std::size_t dir, int m) {
                FockVector<Rational> out(r);
                for (const auto& [mp, c] : v.terms()) {
                    auto key = std::make_tuple(key_of(mp), dir, m);
                    auto it = memo.find(key);
                    if (it == memo.end()) {
                        it = memo
                                 .emplace(key, heis_apply(m, dirs[dir],
                                                          FockVector<Rational>::basis(r, mp)))
                                 .first;
                    }
                    out += it->second.scaled_rational(c);
                }
                return out;
            };

        for (int n = 0; n <= norm_max; ++n) {
            for (const auto& lambda : enumerate_multipartitions(n, r)) {
                auto v = FockVector<Rational>::basis(r, lambda);
                for (int m_abs : modes) {
                    for (int k_abs : modes) {
                        for (int m : {m_abs, -m_abs}) {
                            for (int k : {k_abs, -k_abs}) {
                                if (m < k) continue;  // commutators are antisymmetric
                                for (std::size_t a = 0; a < dirs.size(); ++a) {
                                    for (std::size_t b = 0; b < dirs.size(); ++b) {
                                        auto ab = apply(apply(v, b, k), a, m);
                                        auto ba = apply(apply(v, a, m), b, k);
                                        Rational expect =
                                            (m == -k) ? Rational(m) * inner(dirs[a], dirs[b])
                                                      : Rational(0);
                                        if (ab - ba != v.scaled_rational(expect)) {
                                            res.pass = false;
                                            res.detail += "commutator fails at r=" +
                                                          std::to_string(r) + " lambda=" +
                                                          lambda.to_string() + "; ";
                                        }
                                        ++checked;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if (res.pass)
        res.detail = "Heisenberg relations hold on " + std::to_string(checked) + " commutators";
    return res;
}

// --- criterion 3: ring isomorphism phi -------------------------------------

VerifyResult verify_isom1(const VerifyOptions& opts) {
    VerifyResult res{"isom1", true, ""};
    std::vector<std::pair<unsigned, int>> cases{{1, 3}, {2, 2}, {2, 3}, {3, 2}};
    if (opts.r && opts.n) cases = {{*opts.r, *opts.n}};
    for (auto [r, n] : cases) {
        WreathGroup G(r, n);
        const CharacterTable& table = wreath_char_table(r, n);
        const auto& classes = table.classes();
        bool ok = true;
        // the fast convolution is certified against the group oracle
        for (std::size_t a = 0; a < classes.size() && ok; ++a) {
            ClassFunction sa = table.irreducible(a);
            ClassFunction ia = indicator_class_function(r, n, classes[a]);
            for (std::size_t b = a; b < classes.size() && ok; ++b) {
                ClassFunction sb = table.irreducible(b);
                ClassFunction ib = indicator_class_function(r, n, classes[b]);
                if (convolve_fast(sa, sb) != convolve_bruteforce(G, sa, sb)) ok = false;
                if (convolve_fast(ia, ib) != convolve_bruteforce(G, ia, ib)) ok = false;
            }
        }
        // phi turns star into convolution on all basis pairs
        for (std::size_t a = 0; a < classes.size() && ok; ++a) {
            auto u = FockVector<Rational>::basis(r, classes[a]);
            ClassFunction fu = phi(u);
            for (std::size_t b = 0; b < classes.size() && ok; ++b) {
                auto v = FockVector<Rational>::basis(r, classes[b]);
                auto prod = star(u, v);
                ClassFunction rhs = convolve_fast(fu, phi(v));
                if (prod.is_zero() ? !rhs.is_zero() : (phi(prod) != rhs)) ok = false;
            }
        }
        if (!ok) {
            res.pass = false;
            res.detail += "phi fails at " + format_case(r, n) + "; ";
        }
    }
    if (res.pass) res.detail = "phi(u * v) = phi(u) o phi(v), with o certified by brute force";
    return res;
}

// --- criterion 4: JM eigenvalues -------------------------------------------

VerifyResult verify_jm(const VerifyOptions& opts) {
    VerifyResult res{"jm", true, ""};
    const unsigned r_max = opts.r.value_or(2);
    const int n_max = opts.n.value_or(3);
    for (unsigned r = 1; r <= r_max; ++r) {
        for (int n = 1; n <= n_max; ++n) {
            WreathGroup G(r, n);
            const CharacterTable& table = wreath_char_table(r, n);
            for (unsigned color = 0; color < r; ++color) {
                auto spectrum = jm_spectrum(r, n, color, 3);
                std::vector<Cyclotomic> alpha;
                for (unsigned k = 0; k < r; ++k)
                    alpha.push_back(Cyclotomic::zeta(r, (k * color) % r));
                for (int m = 0; m <= 3; ++m) {
                    ClassFunction xi = jm_class_function(G, m, alpha);
                    for (std::size_t lam = 0; lam < table.classes().size(); ++lam) {
                        ClassFunction s = table.irreducible(lam);
                        Rational eig = spectrum.at(table.classes()[lam]).coeff(m);
                        if (convolve_bruteforce(G, xi, s) != s.scaled(Cyclotomic(eig))) {
                            res.pass = false;
                            res.detail += "JM eigenvalue fails at " + format_case(r, n) +
                                          " color " + std::to_string(color) + " m=" +
                                          std::to_string(m) + "; ";
                        }
                    }
                }
            }
        }
    }
    if (res.pass) res.detail = "group-algebra JM convolution matches the content-series spectrum";
    return res;
}

// --- criterion 5: vertex operator identity ----------------------------------

VerifyResult verify_vertex(const VerifyOptions& opts) {
    VerifyResult res{"vertex", true, ""};
    const unsigned r_max = opts.r.value_or(2);
    const int norm_max = opts.n.value_or(3);
    const int order = 6;
    for (unsigned r = 1; r <= r_max; ++r) {
        for (int n = 0; n <= norm_max; ++n) {
            for (unsigned color = 0; color < r; ++color) {
                auto spectrum = jm_spectrum(r, n, color, order);
                for (const auto& lambda : enumerate_multipartitions(n, r)) {
                    auto image =
                        jm_vertex_composite(color, FockVector<Rational>::basis(r, lambda), order);
                    for (const auto& [mp, c] : image.terms()) {
                        bool good = (mp == lambda) ? (c == spectrum.at(lambda)) : c.is_zero();
                        if (!good) {
                            res.pass = false;
                            res.detail += "vertex composite fails at r=" + std::to_string(r) +
                                          " lambda=" + lambda.to_string() + "; ";
                        }
                    }
                    if (image.find_term(lambda) == nullptr && !spectrum.at(lambda).is_zero()) {
                        res.pass = false;
                        res.detail += "vertex composite dropped the diagonal term at lambda=" +
                                      lambda.to_string() + "; ";
                    }
                }
            }
        }
    }
    if (res.pass) res.detail = "V_0 composite reproduces the JM spectrum to z-order 6";
    return res;
}

// --- criterion 6: H = tilde-G identification --------------------------------

VerifyResult verify_gh(const VerifyOptions& opts) {
    VerifyResult res{"gh", true, ""};
    const unsigned r_max = opts.r.value_or(3);
    const int norm_max = opts.n.value_or(4);
    const int order = 8;
    for (unsigned r = 1; r <= r_max; ++r) {
        for (const Charge& p : charge_box(r, 2)) {
            // sector constant series, one per k
            std::vector<RatSeries> c_series;
            for (unsigned k = 0; k < r; ++k) c_series.push_back(c_const_series(k, p, order));
            for (int n = 0; n <= norm_max; ++n) {
                for (const auto& lambda : enumerate_multipartitions(n, r)) {
                    std::vector<RatSeries> eps;
                    for (unsigned i = 0; i < r; ++i)
                        eps.push_back(eps_eigen(i, p, lambda, order + 2));
                    for (unsigned k = 0; k < r; ++k) {
                        RatSeries h = RatSeries::zero("z", order + 2);
                        for (unsigned i = 0; i < r; ++i)
                            h += RatSeries::exp_linear("z", sector_exponent(r, k, i), order + 4) *
                                 eps[i];
                        RatSeries g = gk_eigen(k, p, lambda, order) + c_series[k];
                        if (h.truncated(order) != g) {
                            res.pass = false;
                            res.detail += "G=H fails at r=" + std::to_string(r) + " k=" +
                                          std::to_string(k) + " lambda=" + lambda.to_string() +
                                          "; ";
                        }
                    }
                }
            }
        }
    }
    if (res.pass) res.detail = "H_k(z) = tilde-G_k^{(p)}(z) for all tested sectors to z-order 8";
    return res;
}

// --- criterion 7: N-point color reduction -----------------------------------

VerifyResult verify_npoint(const VerifyOptions& opts) {
    VerifyResult res{"npoint", true, ""};
    const unsigned r = opts.r.value_or(2);
    const int norm_max = opts.n.value_or(3);
    const int order = 6;
    for (int n = 0; n <= norm_max; ++n) {
        auto mps = enumerate_multipartitions(n, r);
        for (const auto& lambda : mps) {
            for (const auto& mu : mps) {
                for (int N = 1; N <= 3; ++N) {
                    std::vector<unsigned> ks(static_cast<std::size_t>(N), 0);
                    while (true) {
                        auto direct = npoint_direct(lambda, mu, ks, order);
                        auto reduced = npoint_reduced(lambda, mu, ks, order);
                        if (direct.series != reduced.series) {
                            res.pass = false;
                            res.detail += "reduction fails at lambda=" + lambda.to_string() +
                                          " mu=" + mu.to_string() + "; ";
                        }
                        std::size_t pos = 0;
                        while (pos < ks.size()) {
                            if (++ks[pos] < r) break;
                            ks[pos] = 0;
                            ++pos;
                        }
                        if (pos == ks.size()) break;
                    }
                }
            }
        }
    }
    if (res.pass) res.detail = "npoint_reduced == npoint_direct for all tested insertions";
    return res;
}

// --- criterion 8: tau factorization ------------------------------------------

VerifyResult verify_taufact(const VerifyOptions& opts) {
    VerifyResult res{"taufact", true, ""};
    const unsigned r_max = opts.r.value_or(3);
    TauParams params;
    params.degree = 4;
    params.t_max = 4;
    params.x_modes = {0};
    for (unsigned r = 1; r <= r_max; ++r) {
        for (const Charge& p : charge_box(r, 1)) {
            auto report = tau_factorization_check(p, params);
            if (!report.ok) {
                res.pass = false;
                res.detail += "factorization fails at r=" + std::to_string(r) + "; ";
            }
        }
    }
    if (res.pass) res.detail = "tau(x,t,s,p) = prod_k tau(x_k,t_k,s_k,n_k) to total degree 4";
    return res;
}

// --- criterion 9: lowest 2-Toda equation --------------------------------------

VerifyResult verify_toda(const VerifyOptions& opts) {
    VerifyResult res{"toda", true, ""};
    TauParams params;
    params.degree = opts.n.value_or(4);
    params.t_max = 4;
    auto run_family = [&](unsigned r, unsigned color) {
        TodaConvention conv = calibrate_toda_convention(r, color, params.degree, params.t_max);
        for (std::vector<int> modes : {std::vector<int>{}, {0}}) {
            TauParams active = params;
            active.x_modes = modes;
            for (const auto& [n, residual] : toda_residual(r, color, -2, 2, active, conv)) {
                if (!residual.is_zero()) {
                    res.pass = false;
                    res.detail += "Toda residual nonzero at r=" + std::to_string(r) + " color=" +
                                  std::to_string(color) + " charge=" + std::to_string(n) + "; ";
                }
            }
        }
    };
    run_family(1, 0);
    for (unsigned color = 0; color < 2; ++color) run_family(2, color);
    if (res.pass)
        res.detail = "lowest bilinear Toda equation holds for charges -2..2 at the calibrated sign";
    return res;
}

// --- criterion 10: graded ring ---------------------------------------------

VerifyResult verify_graded(const VerifyOptions& opts) {
    VerifyResult res{"graded", true, ""};
    const unsigned r = opts.r.value_or(2);
    const int n_max = opts.n.value_or(3);
    // subadditivity of the degree under convolution
    for (int n = 1; n <= n_max; ++n) {
        auto classes = enumerate_multipartitions(n, r);
        for (const auto& rho : classes) {
            for (const auto& sigma : classes) {
                ClassFunction conv = convolve_fast(indicator_class_function(r, n, rho),
                                                   indicator_class_function(r, n, sigma));
                for (const auto& [tau, v] : conv.values) {
                    if (tau.degree() > rho.degree() + sigma.degree()) {
                        res.pass = false;
                        res.detail += "degree grows at " + rho.to_string() + " * " +
                                      sigma.to_string() + "; ";
                    }
                }
            }
        }
    }
    // nonnegative integer top constants (asserted inside graded_constants),
    // stable under appending 1-cycles
    auto g2 = graded_constants(r, 2);
    auto g3 = graded_constants(r, 3);
    auto index_of = [](const GradedStructureConstants& g, const MultiPartition& mp) {
        return static_cast<std::size_t>(
            std::lower_bound(g.classes.begin(), g.classes.end(), mp) - g.classes.begin());
    };
    for (std::size_t a = 0; a < g2.classes.size(); ++a)
        for (std::size_t b = 0; b < g2.classes.size(); ++b)
            for (std::size_t c = 0; c < g2.classes.size(); ++c) {
                if (g2.classes[c].degree() != g2.classes[a].degree() + g2.classes[b].degree())
                    continue;
                BigInt up = g3.value(index_of(g3, add_part(g2.classes[a], 0, 1)),
                                     index_of(g3, add_part(g2.classes[b], 0, 1)),
                                     index_of(g3, add_part(g2.classes[c], 0, 1)));
                if (g2.value(a, b, c) != up) {
                    res.pass = false;
                    res.detail += "instability at (" + g2.classes[a].to_string() + ", " +
                                  g2.classes[b].to_string() + "); ";
                }
            }
    if (res.pass)
        res.detail = "degree filtration subadditive; top constants are stable nonnegative integers";
    return res;
}

// --- criterion 11: McKay / first Chern ---------------------------------------

VerifyResult verify_mckay(const VerifyOptions& opts) {
    VerifyResult res{"mckay", true, ""};
    const unsigned r_max = opts.r.value_or(6);
    for (unsigned r = 2; r <= r_max; ++r) {
        auto report = mckay_check(r);
        if (!report.ok) {
            res.pass = false;
            res.detail += "r=" + std::to_string(r) + ": " + report.detail + "; ";
        }
    }
    if (res.pass) res.detail = "Cartan and first-Chern lattice identities hold for 2 <= r <= " +
                               std::to_string(r_max);
    return res;
}

// --- criterion 12: modified Chern classes generate ----------------------------

VerifyResult verify_generators(const VerifyOptions& opts) {
    VerifyResult res{"generators", true, ""};
    std::vector<std::pair<unsigned, int>> cases{{1, 3}, {2, 2}};
    if (opts.r && opts.n) cases = {{*opts.r, *opts.n}};
    for (auto [r, n] : cases) {
        auto classes = enumerate_multipartitions(n, r);
        const std::size_t dim = classes.size();
        // eigenvalue tuples of the generators in the idempotent basis
        std::vector<std::vector<Rational>> generators;
        for (unsigned k = 0; k < r; ++k)
            for (int m = 0; m < n; ++m) {
                std::vector<Rational> tuple;
                for (const auto& lambda : classes)
                    tuple.push_back(modified_chern_eigen(k, m, Charge(r), lambda));
                generators.push_back(std::move(tuple));
            }
        // close the unital span under pointwise products and measure its rank
        std::vector<std::vector<Rational>> basis;  // reduced row echelon rows
        std::vector<std::size_t> pivots;
        auto reduce_insert = [&](std::vector<Rational> row) -> bool {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (row[pivots[b]] == 0) continue;
                Rational f = row[pivots[b]];
                for (std::size_t j = 0; j < dim; ++j) row[j] -= f * basis[b][j];
            }
            std::size_t piv = dim;
            for (std::size_t j = 0; j < dim; ++j)
                if (row[j] != 0) {
                    piv = j;
                    break;
                }
            if (piv == dim) return false;
            Rational inv = Rational(1) / row[piv];
            for (auto& x : row) x *= inv;
            basis.push_back(std::move(row));
            pivots.push_back(piv);
            return true;
        };
        std::vector<std::vector<Rational>> frontier;
        frontier.push_back(std::vector<Rational>(dim, Rational(1)));  // the star-unit
        reduce_insert(frontier.back());
        while (!frontier.empty() && basis.size() < dim) {
            std::vector<std::vector<Rational>> next;
            for (const auto& f : frontier) {
                for (const auto& g : generators) {
                    std::vector<Rational> prod(dim);
                    for (std::size_t j = 0; j < dim; ++j) prod[j] = f[j] * g[j];
                    if (reduce_insert(prod)) next.push_back(std::move(prod));
                }
            }
            frontier = std::move(next);
        }
        if (basis.size() != dim) {
            res.pass = false;
            res.detail += "generators span rank " + std::to_string(basis.size()) + " < " +
                          std::to_string(dim) + " at " + format_case(r, n) + "; ";
        }
    }
    if (res.pass) res.detail = "modified Chern classes generate the star-algebra over Q";
    return res;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"dims",  "heisenberg", "isom1", "jm",
                                                "vertex", "gh",        "npoint", "taufact",
                                                "toda",  "graded",     "mckay", "generators"};
    return names;
}

std::vector<VerifyResult> run_verify_suite(const std::string& name, const VerifyOptions& opts) {
    using Runner = std::function<VerifyResult(const VerifyOptions&)>;
    static const std::map<std::string, Runner> table{
        {"dims", verify_dims},       {"heisenberg", verify_heisenberg},
        {"isom1", verify_isom1},     {"jm", verify_jm},
        {"vertex", verify_vertex},   {"gh", verify_gh},
        {"npoint", verify_npoint},   {"taufact", verify_taufact},
        {"toda", verify_toda},       {"graded", verify_graded},
        {"mckay", verify_mckay},     {"generators", verify_generators},
    };
    std::vector<VerifyResult> out;
    if (name == "all") {
        for (const auto& suite : verify_suite_names()) out.push_back(table.at(suite)(opts));
        return out;
    }
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown verify suite: " + name);
    out.push_back(it->second(opts));
    return out;
}

}  // namespace wreathfock
