#include "wreathfock/chern.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace wreathfock {

namespace {

// 1/sigma(rz) to the given window, shared by every eigenvalue call.
const RatSeries& inverse_sigma(unsigned r, int work) {
    static std::mutex lock;
    static std::map<std::pair<unsigned, int>, RatSeries> memo;
    std::lock_guard<std::mutex> guard(lock);
    auto it = memo.find({r, work});
    if (it == memo.end()) {
        it = memo.emplace(std::pair{r, work},
                          RatSeries::sigma("z", Rational(static_cast<long>(r)), work + 2).inverse())
                 .first;
    }
    return it->second;
}

}  // namespace

RatSeries content_series(const Partition& lambda, int order, const Rational& scale) {
    RatSeries out = RatSeries::zero("z", order);
    for (int c : lambda.contents()) out += RatSeries::exp_linear("z", scale * c, order);
    return out;
}

int sector_exponent(unsigned r, unsigned k, unsigned i) {
    if (k >= r || i >= r) throw std::invalid_argument("sector_exponent: index out of range");
    return (i < k) ? static_cast<int>(k) - static_cast<int>(r) : static_cast<int>(k);
}

RatSeries eps_eigen(unsigned color, const Charge& p, const MultiPartition& lambda, int order) {
    const unsigned r = lambda.r();
    if (color >= r) throw std::invalid_argument("eps_eigen: color out of range");
    if (p.r() != r) throw std::invalid_argument("eps_eigen: charge rank mismatch");
    const int work = order + 6;
    const Rational rr(static_cast<long>(r));
    const Rational ni(p.coords[color]);

    const RatSeries& inv_sigma = inverse_sigma(r, work);
    const Partition& part = lambda.component(color);
    RatSeries num = RatSeries::zero("z", work);
    for (int j = 1; j <= part.length(); ++j) {
        Rational top = (Rational(part.part(j - 1)) - j + Rational(1, 2) + ni) * rr;
        Rational tail = (ni - j + Rational(1, 2)) * rr;
        num += RatSeries::exp_linear("z", top, work) - RatSeries::exp_linear("z", tail, work);
    }
    RatSeries out = inv_sigma * num;
    // telescoped tail: (e^{n_i r z} - 1) / sigma(rz)^2
    RatSeries tail_num =
        RatSeries::exp_linear("z", ni * rr, work) - RatSeries::exp_linear("z", 0, work);
    out += tail_num * (inv_sigma * inv_sigma);
    return out.truncated(order);
}

RatSeries hk_eigen(unsigned k, const Charge& p, const MultiPartition& lambda, int order) {
    const unsigned r = lambda.r();
    const int work = order + 2;
    RatSeries out = RatSeries::zero("z", work);
    for (unsigned i = 0; i < r; ++i) {
        RatSeries expo = RatSeries::exp_linear("z", sector_exponent(r, k, i), work + 2);
        out += expo * eps_eigen(i, p, lambda, work);
    }
    return out.truncated(order);
}

RatSeries gk_eigen(unsigned k, const Charge& p, const MultiPartition& lambda, int order) {
    const unsigned r = lambda.r();
    if (k >= r) throw std::invalid_argument("gk_eigen: k out of range");
    if (p.r() != r) throw std::invalid_argument("gk_eigen: charge rank mismatch");
    const Rational rr(static_cast<long>(r));
    RatSeries out = RatSeries::zero("z", order);
    for (unsigned i = 0; i < r; ++i) {
        Rational prefix = Rational(p.coords[i]) * rr + sector_exponent(r, k, i);
        out += RatSeries::exp_linear("z", prefix, order) *
               content_series(lambda.component(i), order, rr);
    }
    return out;
}

RatSeries c_const_series(unsigned k, const Charge& p, int order) {
    const unsigned r = p.r();
    if (k >= r) throw std::invalid_argument("c_const_series: k out of range");
    const int work = order + 6;
    const Rational rr(static_cast<long>(r));
    RatSeries inv_sigma_sq = inverse_sigma(r, work);
    inv_sigma_sq *= inv_sigma_sq;
    RatSeries acc = RatSeries::zero("z", work);
    RatSeries one = RatSeries::exp_linear("z", 0, work);
    for (unsigned i = 0; i < r; ++i) {
        RatSeries jump = RatSeries::exp_linear("z", Rational(p.coords[i]) * rr, work) - one;
        acc += RatSeries::exp_linear("z", sector_exponent(r, k, i), work) * jump;
    }
    return (acc * inv_sigma_sq).truncated(order);
}

RatSeries gk_tilde_eigen(unsigned k, const Charge& p, const MultiPartition& lambda, int order) {
    return gk_eigen(k, p, lambda, order) + c_const_series(k, p, order);
}

Rational n_coeff(unsigned r, unsigned k, int d) {
    if (k > r) throw std::invalid_argument("n_coeff: k out of range");
    if (d < -1) throw std::invalid_argument("n_coeff: d >= -1 required");
    const int work = d + 6;
    RatSeries one = RatSeries::exp_linear("z", 0, work);
    RatSeries denom = one - RatSeries::exp_linear("z", -Rational(static_cast<long>(r)), work);
    RatSeries series = RatSeries::exp_linear("z", -Rational(static_cast<long>(k)), work) * denom.inverse();
    return series.coeff(d);
}

Rational c_const(const Charge& p, unsigned k, int m) {
    if (m < -1) throw std::invalid_argument("c_const: m >= -1 required");
    return c_const_series(k, p, std::max(m, 0)).coeff(m);
}

Rational modified_chern_eigen(unsigned k, int m, const Charge& p, const MultiPartition& lambda) {
    const unsigned r = lambda.r();
    if (k >= r) throw std::invalid_argument("modified_chern_eigen: k out of range");
    if (m < -1) throw std::invalid_argument("modified_chern_eigen: m >= -1 required");
    const int order = m + 2;

    // route (a): n-coefficient combination of tilde-G coefficients, with the
    // color index wrapping at r back to 0
    RatSeries g_k = gk_tilde_eigen(k, p, lambda, order);
    RatSeries g_k1 = gk_tilde_eigen((k + 1) % r, p, lambda, order);
    Rational combo = 0;
    for (int d = -1; d <= m + 1; ++d) {
        const int j = m - d;  // >= -1
        combo += n_coeff(r, k, d) * g_k.coeff(j) - n_coeff(r, k + 1, d) * g_k1.coeff(j);
    }

    // route (b): straight z^m coefficient of the diagonal E-operator
    Rational direct = eps_eigen(k, p, lambda, std::max(m, 0)).coeff(m);

    if (combo != direct) {
        std::ostringstream os;
        os << "modified_chern_eigen: route mismatch at k=" << k << " m=" << m
           << " lambda=" << lambda.to_string();
        throw std::logic_error(os.str());
    }
    return direct;
}

McKayReport mckay_check(unsigned r) {
    if (r < 2) throw std::invalid_argument("mckay_check: r >= 2 required");
    McKayReport report;
    std::ostringstream detail;

    // Cartan matrix of type A_{r-1}
    auto cartan = [&](unsigned a, unsigned b) -> int {
        if (a == b) return 2;
        if (a + 1 == b || b + 1 == a) return -1;
        return 0;
    };

    // ([Sigma_1], ..., [Sigma_{r-1}]) = -(c_1(L_1), ..., c_1(L_{r-1})) C_{r-1}
    for (unsigned j = 1; j < r; ++j) {
        H1Vector rhs = H1Vector::zero(r);
        for (unsigned k = 1; k < r; ++k)
            rhs += H1Vector::first_chern(r, k).scaled(Rational(-cartan(k, j)));
        if (!(rhs == H1Vector::sigma_class(r, j))) {
            report.ok = false;
            detail << "Cartan relation fails at column " << j << "; ";
        }
    }

    // diamond_k = c_1(L_k) - c_1(L_{k+1}) + t for k < r-1,
    // diamond_{r-1} = c_1(L_{r-1}) + t
    for (unsigned k = 0; k < r; ++k) {
        H1Vector rhs = (k + 1 < r)
                           ? H1Vector::first_chern(r, k) - H1Vector::first_chern(r, k + 1) +
                                 H1Vector::t(r)
                           : H1Vector::first_chern(r, r - 1) + H1Vector::t(r);
        if (!(rhs == H1Vector::diamond(r, k))) {
            report.ok = false;
            detail << "first-Chern relation fails at k=" << k << "; ";
        }
    }

    report.detail = report.ok ? "all lattice identities hold" : detail.str();
    return report;
}

}  // namespace wreathfock
