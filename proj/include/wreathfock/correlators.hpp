#pragma once

#include "wreathfock/chern.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace wreathfock {

// N-point function of Chern character operators between p_{-lambda} and
// p_{-mu}, as a series in z_1..z_N.
struct NPointResult {
    MultiPartition lambda;
    MultiPartition mu;
    std::vector<unsigned> ks;
    RatMultiSeries series;

    NPointResult(MultiPartition l, MultiPartition m, std::vector<unsigned> k, RatMultiSeries s)
        : lambda(std::move(l)), mu(std::move(m)), ks(std::move(k)), series(std::move(s)) {}
};

// <p_{-lambda}, G_{k_1}(z_1) ... G_{k_N}(z_N) p_{-mu}>: expand both sides in
// the [nu] basis and multiply the diagonal eigenvalue series.
NPointResult npoint_direct(const MultiPartition& lambda, const MultiPartition& mu,
                           const std::vector<unsigned>& ks, int order);

// Color-reduction route: sum over assignments of the N slots to colors of
// exponential prefactors times one-color correlators evaluated at r z.
NPointResult npoint_reduced(const MultiPartition& lambda, const MultiPartition& mu,
                            const std::vector<unsigned>& ks, int order);

struct TauParams {
    int degree = 4;               // total-degree truncation
    int t_max = 4;                // t_{k,m}, s_{k,m} kept for m <= t_max
    std::vector<int> x_modes;     // m values with x_{k,m} kept as variables
    std::vector<unsigned> colors; // active colors; empty means all

    std::vector<unsigned> active_colors(unsigned r) const;
};

struct TauTruncation {
    Charge p;
    TauParams params;
    RatMultiSeries series;

    TauTruncation(Charge charge, TauParams prm, RatMultiSeries s)
        : p(std::move(charge)), params(std::move(prm)), series(std::move(s)) {}
};

// Canonical variable list for rank r and the given parameters: t variables
// first, then s, then x, each ordered by (color, mode).
std::vector<std::string> tau_variables(unsigned r, const TauParams& params);

// Vacuum expectation <0| S_p^{-1} prod_k Gamma_+^{(k)}(t) exp(sum x_{k,m} E_{k;m})
// prod_k Gamma_-^{(k)}(s) S_p |0>, truncated by total degree.
TauTruncation tau_truncated(const Charge& p, const TauParams& params);

struct TauFactorizationReport {
    bool ok = true;
    std::string detail;
};

// Compares tau at charge p against the product of the r single-color taus.
TauFactorizationReport tau_factorization_check(const Charge& p, const TauParams& params);

struct TodaConvention {
    int epsilon = 1;       // sign on tau_{n+1} tau_{n-1}
    bool reflect_s = false;  // evaluate tau at s -> -s before forming the residual
};

// Fixes the convention on the x = 0 family, whose closed form
// prod_m exp(t_m s_m / m) is independent of the charge.
TodaConvention calibrate_toda_convention(unsigned r, unsigned color, int degree, int t_max);

// Residual of the lowest bilinear Toda equation
//   (d_t1 d_s1 tau_n) tau_n - (d_t1 tau_n)(d_s1 tau_n) - eps tau_{n+1} tau_{n-1}
// for the single-color family tau_n over n in [charge_lo, charge_hi], with x
// restricted to the modes listed in params.x_modes. One series per charge.
std::map<int, RatMultiSeries> toda_residual(unsigned r, unsigned color, int charge_lo,
                                            int charge_hi, const TauParams& params,
                                            const TodaConvention& conv);

}  // namespace wreathfock
