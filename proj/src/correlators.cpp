#include "wreathfock/correlators.hpp"

#include "wreathfock/characters.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wreathfock {

namespace {

std::vector<std::string> z_variables(std::size_t n) {
    std::vector<std::string> vars;
    for (std::size_t j = 1; j <= n; ++j) vars.push_back("z" + std::to_string(j));
    return vars;
}

// sum of prod_j series_j(z_j) over exponent tuples within the degree bound
void accumulate_product(RatMultiSeries& out, const std::vector<RatSeries>& factors,
                        const Rational& scale) {
    const int order = out.trunc();
    std::vector<int> exps(factors.size(), 0);
    std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t j, int used, Rational acc) {
        if (j == factors.size()) {
            out.add_term(exps, acc);
            return;
        }
        for (int m = 0; used + m <= order; ++m) {
            Rational c = factors[j].coeff(m);
            if (c == 0) continue;
            exps[j] = m;
            rec(j + 1, used + m, acc * c);
        }
        exps[j] = 0;
    };
    if (scale != 0) rec(0, 0, scale);
}

}  // namespace

NPointResult npoint_direct(const MultiPartition& lambda, const MultiPartition& mu,
                           const std::vector<unsigned>& ks, int order) {
    const unsigned r = lambda.r();
    if (mu.r() != r) throw std::invalid_argument("npoint_direct: rank mismatch");
    if (lambda.norm() != mu.norm())
        throw std::invalid_argument("npoint_direct: ||lambda|| != ||mu||");
    for (unsigned k : ks)
        if (k >= r) throw std::invalid_argument("npoint_direct: color out of range");

    RatMultiSeries series(z_variables(ks.size()), order);
    const Charge zero(r);
    FockVector<Rational> left = p_basis(r, lambda);
    FockVector<Rational> right = p_basis(r, mu);
    for (const auto& [nu, cl] : left.terms()) {
        const Rational* cr = right.find_term(nu);
        if (!cr) continue;
        std::vector<RatSeries> factors;
        factors.reserve(ks.size());
        for (unsigned k : ks) factors.push_back(gk_eigen(k, zero, nu, order));
        accumulate_product(series, factors, cl * *cr);
    }
    return NPointResult(lambda, mu, ks, std::move(series));
}

NPointResult npoint_reduced(const MultiPartition& lambda, const MultiPartition& mu,
                            const std::vector<unsigned>& ks, int order) {
    const unsigned r = lambda.r();
    if (mu.r() != r) throw std::invalid_argument("npoint_reduced: rank mismatch");
    if (lambda.norm() != mu.norm())
        throw std::invalid_argument("npoint_reduced: ||lambda|| != ||mu||");
    const std::size_t N = ks.size();
    const auto vars = z_variables(N);
    RatMultiSeries total(vars, order);

    // vanishing rule: zero unless the color sizes match slotwise
    for (unsigned i = 0; i < r; ++i)
        if (lambda.component(i).size() != mu.component(i).size())
            return NPointResult(lambda, mu, ks, std::move(total));

    // assignments of the N slots to the r colors
    std::vector<unsigned> assign(N, 0);
    while (true) {
        RatMultiSeries piece = RatMultiSeries::constant(vars, 1, order);
        for (std::size_t j = 0; j < N; ++j) {
            piece *= RatMultiSeries::exp_linear_var(
                vars, j, Rational(sector_exponent(r, ks[j], assign[j])), order);
        }
        for (unsigned i = 0; i < r && !piece.is_zero(); ++i) {
            std::vector<std::size_t> block;
            for (std::size_t j = 0; j < N; ++j)
                if (assign[j] == i) block.push_back(j);
            // one-color factor G_{lambda^i, mu^i; 1}(r z_{block}) through the
            // rank-1 direct correlator
            MultiPartition l1(1, {lambda.component(i)});
            MultiPartition m1(1, {mu.component(i)});
            NPointResult sub =
                npoint_direct(l1, m1, std::vector<unsigned>(block.size(), 0), order);
            // embed into the ambient variables with z -> r z
            RatMultiSeries embedded(vars, order);
            for (const auto& [exps, c] : sub.series.terms()) {
                std::vector<int> target(N, 0);
                int degree = 0;
                for (std::size_t b = 0; b < block.size(); ++b) {
                    target[block[b]] = exps[b];
                    degree += exps[b];
                }
                embedded.add_term(target,
                                  c * rat_pow(Rational(static_cast<long>(r)), degree));
            }
            piece *= embedded;
        }
        total += piece;
        // next assignment
        std::size_t pos = 0;
        while (pos < N) {
            if (++assign[pos] < r) break;
            assign[pos] = 0;
            ++pos;
        }
        if (pos == N || N == 0) break;
    }
    return NPointResult(lambda, mu, ks, std::move(total));
}

std::vector<unsigned> TauParams::active_colors(unsigned r) const {
    if (colors.empty()) {
        std::vector<unsigned> all(r);
        for (unsigned k = 0; k < r; ++k) all[k] = k;
        return all;
    }
    for (unsigned k : colors)
        if (k >= r) throw std::invalid_argument("TauParams: color out of range");
    return colors;
}

std::vector<std::string> tau_variables(unsigned r, const TauParams& params) {
    std::vector<std::string> vars;
    for (unsigned k = 0; k < r; ++k)
        for (int m = 1; m <= params.t_max; ++m)
            vars.push_back("t" + std::to_string(k) + "_" + std::to_string(m));
    for (unsigned k = 0; k < r; ++k)
        for (int m = 1; m <= params.t_max; ++m)
            vars.push_back("s" + std::to_string(k) + "_" + std::to_string(m));
    for (unsigned k = 0; k < r; ++k)
        for (int m : params.x_modes)
            vars.push_back("x" + std::to_string(k) + "_" + std::to_string(m));
    return vars;
}

namespace {

struct TauWorkspace {
    unsigned r;
    const TauParams& params;
    std::vector<std::string> vars;
    std::map<std::string, std::size_t> var_index;
    std::map<std::tuple<unsigned, int, std::vector<int>, int>, Rational> eigen_cache;

    TauWorkspace(unsigned r_in, const TauParams& p) : r(r_in), params(p), vars(tau_variables(r_in, p)) {
        for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = i;
    }

    std::size_t index(char family, unsigned color, int m) const {
        std::string name;
        name += family;
        name += std::to_string(color) + "_" + std::to_string(m);
        auto it = var_index.find(name);
        if (it == var_index.end()) throw std::logic_error("tau variable missing: " + name);
        return it->second;
    }

    // E_{k;m} eigenvalue on the one-color state nu at charge n_k
    Rational eigen(unsigned color, int m, const Partition& nu, int charge) {
        auto key = std::make_tuple(color, m, nu.parts(), charge);
        auto it = eigen_cache.find(key);
        if (it != eigen_cache.end()) return it->second;
        MultiPartition mp = MultiPartition::empty(r).with_component(color, nu);
        Charge p(r);
        p.coords[color] = charge;
        Rational value = modified_chern_eigen(color, m, p, mp);
        eigen_cache.emplace(key, value);
        return value;
    }
};

// partitions of n with parts <= bound
std::vector<Partition> bounded_partitions(int n, int bound) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(n))
        if (p.empty() || p.parts()[0] <= bound) out.push_back(p);
    return out;
}

int min_length(int n, int bound) { return n == 0 ? 0 : (n + bound - 1) / bound; }

RatMultiSeries tau_compute(const Charge& p, const TauParams& params, TauWorkspace& ws) {
    const unsigned r = ws.r;
    const auto colors = params.active_colors(r);
    RatMultiSeries total(ws.vars, params.degree);

    // enumerate per-color sizes with 2 * minimal-length budget within degree
    std::vector<int> sizes(colors.size(), 0);
    std::function<void(std::size_t, int)> loop = [&](std::size_t pos, int budget) {
        if (pos == colors.size()) {
            // per-color transition tables T[nu], S[nu]
            std::vector<std::vector<Partition>> nus(colors.size());
            std::vector<std::map<std::vector<int>, RatMultiSeries>> tside(colors.size()),
                sside(colors.size());
            for (std::size_t ci = 0; ci < colors.size(); ++ci) {
                const unsigned k = colors[ci];
                nus[ci] = partitions_of(sizes[ci]);
                for (const Partition& nu : nus[ci]) {
                    RatMultiSeries t_acc(ws.vars, params.degree);
                    RatMultiSeries s_acc(ws.vars, params.degree);
                    for (const Partition& lam : bounded_partitions(sizes[ci], params.t_max)) {
                        if (lam.length() > params.degree) continue;
                        Rational coeff = Rational(sym_char(nu, lam)) / Rational(lam.z_order());
                        if (coeff == 0) continue;
                        std::vector<int> t_exps(ws.vars.size(), 0), s_exps(ws.vars.size(), 0);
                        for (int part : lam.parts()) {
                            ++t_exps[ws.index('t', k, part)];
                            ++s_exps[ws.index('s', k, part)];
                        }
                        t_acc.add_term(t_exps, coeff);
                        s_acc.add_term(s_exps, coeff);
                    }
                    tside[ci].emplace(nu.parts(), std::move(t_acc));
                    sside[ci].emplace(nu.parts(), std::move(s_acc));
                }
            }
            // assemble over nu tuples
            std::vector<std::size_t> pick(colors.size(), 0);
            while (true) {
                RatMultiSeries term = RatMultiSeries::constant(ws.vars, 1, params.degree);
                for (std::size_t ci = 0; ci < colors.size() && !term.is_zero(); ++ci) {
                    const Partition& nu = nus[ci][pick[ci]];
                    term *= tside[ci].at(nu.parts());
                    term *= sside[ci].at(nu.parts());
                }
                if (!term.is_zero() || colors.empty()) {
                    // diagonal exponential in the x variables
                    RatMultiSeries arg(ws.vars, params.degree);
                    for (std::size_t ci = 0; ci < colors.size(); ++ci) {
                        const unsigned k = colors[ci];
                        for (int m : params.x_modes) {
                            Rational e = ws.eigen(k, m, nus[ci][pick[ci]], p.coords[k]);
                            if (e == 0) continue;
                            std::vector<int> exps(ws.vars.size(), 0);
                            exps[ws.index('x', k, m)] = 1;
                            arg.add_term(exps, e);
                        }
                    }
                    term *= arg.exp();
                    total += term;
                }
                std::size_t pos2 = 0;
                while (pos2 < colors.size()) {
                    if (++pick[pos2] < nus[pos2].size()) break;
                    pick[pos2] = 0;
                    ++pos2;
                }
                if (pos2 == colors.size() || colors.empty()) break;
            }
            return;
        }
        for (int n = 0;; ++n) {
            int cost = 2 * min_length(n, params.t_max);
            if (cost > budget) break;
            sizes[pos] = n;
            loop(pos + 1, budget - cost);
        }
        sizes[pos] = 0;
    };
    loop(0, params.degree);
    return total;
}

}  // namespace

TauTruncation tau_truncated(const Charge& p, const TauParams& params) {
    TauWorkspace ws(p.r(), params);
    return TauTruncation(p, params, tau_compute(p, params, ws));
}

TauFactorizationReport tau_factorization_check(const Charge& p, const TauParams& params) {
    const unsigned r = p.r();
    TauWorkspace ws(r, params);
    RatMultiSeries full = tau_compute(p, params, ws);
    RatMultiSeries prod = RatMultiSeries::constant(ws.vars, 1, params.degree);
    for (unsigned k = 0; k < r; ++k) {
        TauParams single = params;
        single.colors = {k};
        Charge pk(r);
        pk.coords[k] = p.coords[k];
        prod *= tau_compute(pk, single, ws);
    }
    TauFactorizationReport report;
    if (full != prod) {
        report.ok = false;
        std::ostringstream os;
        os << "tau factorization fails at r=" << r << " degree=" << params.degree;
        report.detail = os.str();
    } else {
        report.detail = "tau factorizes over colors";
    }
    return report;
}

namespace {

RatMultiSeries toda_tau(unsigned r, unsigned color, int charge, const TauParams& params,
                        TauWorkspace& ws, bool reflect_s) {
    TauParams single = params;
    single.colors = {color};
    Charge p(r);
    p.coords[color] = charge;
    RatMultiSeries tau = tau_compute(p, single, ws);
    if (reflect_s) {
        for (int m = 1; m <= params.t_max; ++m)
            tau = tau.scaled_var(ws.index('s', color, m), -1);
    }
    return tau;
}

RatMultiSeries toda_residual_single(const RatMultiSeries& tau_n, const RatMultiSeries& tau_up,
                                    const RatMultiSeries& tau_dn, std::size_t t1, std::size_t s1,
                                    int epsilon, int out_degree) {
    RatMultiSeries dt = tau_n.derivative(t1);
    RatMultiSeries dtds = dt.derivative(s1).truncated(out_degree);
    RatMultiSeries ds = tau_n.derivative(s1).truncated(out_degree);
    RatMultiSeries res = dtds * tau_n.truncated(out_degree) -
                         dt.truncated(out_degree) * ds -
                         (tau_up.truncated(out_degree) * tau_dn.truncated(out_degree))
                             .scaled(Rational(epsilon));
    return res;
}

}  // namespace

TodaConvention calibrate_toda_convention(unsigned r, unsigned color, int degree, int t_max) {
    TauParams params;
    params.degree = degree + 2;
    params.t_max = t_max;
    params.x_modes = {};
    TauWorkspace ws(r, params);
    // x = 0: the family is charge independent, so one tau per reflection choice
    for (bool reflect : {false, true}) {
        RatMultiSeries tau = toda_tau(r, color, 0, params, ws, reflect);
        std::size_t t1 = ws.index('t', color, 1), s1 = ws.index('s', color, 1);
        for (int eps : {1, -1}) {
            RatMultiSeries res = toda_residual_single(tau, tau, tau, t1, s1, eps, degree);
            if (res.is_zero()) return TodaConvention{eps, reflect};
        }
    }
    throw std::logic_error("calibrate_toda_convention: no convention annihilates the x=0 family");
}

std::map<int, RatMultiSeries> toda_residual(unsigned r, unsigned color, int charge_lo,
                                            int charge_hi, const TauParams& params,
                                            const TodaConvention& conv) {
    if (charge_lo > charge_hi) throw std::invalid_argument("toda_residual: empty charge range");
    TauParams work = params;
    work.degree = params.degree + 2;  // derivative headroom
    TauWorkspace ws(r, work);
    std::map<int, RatMultiSeries> taus;
    for (int n = charge_lo - 1; n <= charge_hi + 1; ++n)
        taus.emplace(n, toda_tau(r, color, n, work, ws, conv.reflect_s));
    std::size_t t1 = ws.index('t', color, 1), s1 = ws.index('s', color, 1);
    std::map<int, RatMultiSeries> out;
    for (int n = charge_lo; n <= charge_hi; ++n)
        out.emplace(n, toda_residual_single(taus.at(n), taus.at(n + 1), taus.at(n - 1), t1, s1,
                                            conv.epsilon, params.degree));
    return out;
}

}  // namespace wreathfock
