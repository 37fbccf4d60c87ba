#pragma once

#include "wreathfock/cyclotomic.hpp"
#include "wreathfock/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreathfock {

template <typename S>
S scalar_from_rational(const Rational& q);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& q) { return q; }

template <>
inline Cyclotomic scalar_from_rational<Cyclotomic>(const Rational& q) { return Cyclotomic(q); }

// Truncated Laurent series in one variable. Coefficients are exact for
// exponents in [min_exp, trunc]; everything outside that window is
// unknown, and the window is propagated honestly through arithmetic
// (e.g. multiplying by a series of valuation v extends the reliable
// window by v). Asking for a coefficient beyond trunc throws.
template <typename S>
class LaurentSeries {
public:
    LaurentSeries(std::string var, int min_exp, int trunc)
        : var_(std::move(var)), min_exp_(min_exp), trunc_(trunc) {
        if (min_exp_ > trunc_ + 1)
            throw std::invalid_argument("LaurentSeries: min_exp beyond trunc");
        coeffs_.assign(static_cast<std::size_t>(trunc_ - min_exp_ + 1), S(0));
    }

    static LaurentSeries zero(const std::string& var, int trunc) {
        return LaurentSeries(var, 0, trunc);
    }

    static LaurentSeries monomial(const std::string& var, const S& c, int exp, int trunc) {
        LaurentSeries s(var, std::min(exp, 0), trunc);
        if (exp <= trunc) s.set_coeff(exp, c);
        return s;
    }

    // e^{a z}, exact to z^trunc.
    static LaurentSeries exp_linear(const std::string& var, const Rational& a, int trunc) {
        LaurentSeries s(var, 0, trunc);
        Rational term = 1;
        for (int k = 0; k <= trunc; ++k) {
            if (k > 0) term = term * a / k;
            s.set_coeff(k, scalar_from_rational<S>(term));
        }
        return s;
    }

    // sigma(a z) = e^{az/2} - e^{-az/2}
    static LaurentSeries sigma(const std::string& var, const Rational& a, int trunc) {
        return exp_linear(var, a / 2, trunc) - exp_linear(var, -a / 2, trunc);
    }

    const std::string& var() const { return var_; }
    int min_exp() const { return min_exp_; }
    int trunc() const { return trunc_; }

    const S& coeff(int exp) const {
        if (exp > trunc_)
            throw std::domain_error("LaurentSeries::coeff: exponent beyond truncation");
        if (exp < min_exp_) return zero_scalar();
        return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
    }

    void set_coeff(int exp, const S& c) {
        if (exp < min_exp_ || exp > trunc_)
            throw std::out_of_range("LaurentSeries::set_coeff: exponent outside window");
        coeffs_[static_cast<std::size_t>(exp - min_exp_)] = c;
    }

    // Lowest exponent with a nonzero stored coefficient, if any.
    std::optional<int> valuation() const {
        for (int e = min_exp_; e <= trunc_; ++e)
            if (coeff(e) != S(0)) return e;
        return std::nullopt;
    }

    bool is_zero() const { return !valuation().has_value(); }

    LaurentSeries truncated(int new_trunc) const {
        if (new_trunc > trunc_)
            throw std::invalid_argument("LaurentSeries::truncated: cannot extend knowledge window");
        LaurentSeries out(var_, std::min(min_exp_, new_trunc), new_trunc);
        for (int e = out.min_exp_; e <= new_trunc; ++e) out.set_coeff(e, coeff(e));
        return out;
    }

    LaurentSeries operator-() const {
        LaurentSeries out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        check_vars(a, b);
        LaurentSeries out(a.var_, std::min(a.min_exp_, b.min_exp_), std::min(a.trunc_, b.trunc_));
        for (int e = out.min_exp_; e <= out.trunc_; ++e) out.set_coeff(e, a.window_coeff(e) + b.window_coeff(e));
        return out;
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        check_vars(a, b);
        const int va = a.valuation().value_or(a.trunc_ + 1);
        const int vb = b.valuation().value_or(b.trunc_ + 1);
        const int tr = std::min(a.trunc_ + vb, b.trunc_ + va);
        LaurentSeries out(a.var_, std::min(va + vb, tr + 1) , tr);
        for (int ea = va; ea <= a.trunc_; ++ea) {
            if (a.coeff(ea) == S(0)) continue;
            for (int eb = vb; eb <= b.trunc_ && ea + eb <= tr; ++eb) {
                if (b.coeff(eb) == S(0)) continue;
                out.set_coeff(ea + eb, out.coeff(ea + eb) + a.coeff(ea) * b.coeff(eb));
            }
        }
        return out;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries scaled(const S& c) const {
        LaurentSeries out = *this;
        for (auto& x : out.coeffs_) x = x * c;
        return out;
    }

    // Multiplicative inverse; the reliable window shrinks by twice the
    // valuation. Throws if the series is zero to truncation.
    LaurentSeries inverse() const {
        auto val = valuation();
        if (!val) throw std::domain_error("LaurentSeries::inverse: series is zero to truncation");
        const int v = *val;
        const int order = trunc_ - v;  // working precision of the unit part
        // unit part u with u_0 = 1: f = c z^v (1 + g)
        const S lead = coeff(v);
        const S lead_inv = invert_scalar(lead);
        std::vector<S> g(static_cast<std::size_t>(order + 1), S(0));
        for (int k = 0; k <= order; ++k) g[static_cast<std::size_t>(k)] = coeff(v + k) * lead_inv;
        std::vector<S> h(static_cast<std::size_t>(order + 1), S(0));
        h[0] = S(1);
        for (int k = 1; k <= order; ++k) {
            S acc(0);
            for (int j = 1; j <= k; ++j) acc = acc + g[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
            h[static_cast<std::size_t>(k)] = -acc;
        }
        LaurentSeries out(var_, -v, trunc_ - 2 * v);
        for (int k = 0; k <= order && -v + k <= out.trunc_; ++k)
            out.set_coeff(-v + k, h[static_cast<std::size_t>(k)] * lead_inv);
        return out;
    }

    // exp(f) for f with valuation >= 1; throws on a constant or principal part.
    LaurentSeries exp() const {
        for (int e = min_exp_; e <= std::min(0, trunc_); ++e)
            if (coeff(e) != S(0))
                throw std::domain_error("LaurentSeries::exp: nonzero constant or principal part");
        LaurentSeries out(var_, 0, trunc_);
        out.set_coeff(0, S(1));
        LaurentSeries term = out;  // f^k / k!
        for (int k = 1; k <= trunc_; ++k) {
            term = (term * *this).truncated(trunc_);
            term = term.scaled(scalar_from_rational<S>(Rational(1) / k));
            if (term.is_zero()) break;
            out += term;
        }
        return out;
    }

    // f(c z): multiplies the coefficient of z^e by c^e.
    LaurentSeries scaled_arg(const Rational& c) const {
        LaurentSeries out = *this;
        for (int e = out.min_exp_; e <= out.trunc_; ++e)
            out.set_coeff(e, out.coeff(e) * scalar_from_rational<S>(rat_pow(c, e)));
        return out;
    }

    // Equality on the common knowledge window.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.var_ != b.var_) return false;
        const int hi = std::min(a.trunc_, b.trunc_);
        for (int e = std::min(a.min_exp_, b.min_exp_); e <= hi; ++e)
            if (a.window_coeff(e) != b.window_coeff(e)) return false;
        return true;
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

private:
    static const S& zero_scalar() {
        static const S z = S(0);
        return z;
    }
    static void check_vars(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.var_ != b.var_)
            throw std::invalid_argument("LaurentSeries: variable mismatch " + a.var_ + " vs " + b.var_);
    }
    const S& window_coeff(int e) const { return (e < min_exp_ || e > trunc_) ? zero_scalar() : coeffs_[static_cast<std::size_t>(e - min_exp_)]; }

    static S invert_scalar(const S& c) {
        if constexpr (std::is_same_v<S, Rational>) {
            return Rational(1) / c;
        } else {
            return c.inverse();
        }
    }

    std::string var_;
    int min_exp_;
    int trunc_;
    std::vector<S> coeffs_;
};

using RatSeries = LaurentSeries<Rational>;

// Multivariate power series truncated by total degree; exponents are
// nonnegative. Used for N-point functions (z_1..z_N) and tau expansions
// (t/s/x families).
template <typename S>
class MultiSeries {
public:
    MultiSeries(std::vector<std::string> vars, int trunc)
        : vars_(std::move(vars)), trunc_(trunc) {}

    static MultiSeries constant(std::vector<std::string> vars, const S& c, int trunc) {
        MultiSeries s(std::move(vars), trunc);
        if (c != S(0)) s.terms_[std::vector<int>(s.vars_.size(), 0)] = c;
        return s;
    }

    // e^{a x_i} truncated by total degree.
    static MultiSeries exp_linear_var(std::vector<std::string> vars, std::size_t index,
                                      const Rational& a, int trunc) {
        MultiSeries s(std::move(vars), trunc);
        Rational term = 1;
        for (int k = 0; k <= trunc; ++k) {
            if (k > 0) term = term * a / k;
            std::vector<int> e(s.vars_.size(), 0);
            e[index] = k;
            if (term != 0) s.terms_[e] = scalar_from_rational<S>(term);
        }
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    const std::map<std::vector<int>, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("MultiSeries: unknown variable " + name);
    }

    S coeff(const std::vector<int>& exps) const {
        if (total_degree(exps) > trunc_)
            throw std::domain_error("MultiSeries::coeff: exponent beyond truncation");
        auto it = terms_.find(exps);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(const std::vector<int>& exps, const S& c) {
        if (exps.size() != vars_.size())
            throw std::invalid_argument("MultiSeries::add_term: exponent arity mismatch");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("MultiSeries::add_term: negative exponent");
        if (total_degree(exps) > trunc_) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (c != S(0)) terms_[exps] = c;
        } else {
            it->second = it->second + c;
            if (it->second == S(0)) terms_.erase(it);
        }
    }

    MultiSeries operator-() const {
        MultiSeries out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
        check_vars(a, b);
        MultiSeries out(a.vars_, std::min(a.trunc_, b.trunc_));
        for (const auto& [e, c] : a.terms_) out.add_term(e, c);
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }

    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        check_vars(a, b);
        MultiSeries out(a.vars_, std::min(a.trunc_, b.trunc_));
        std::vector<int> e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > out.trunc_) continue;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    MultiSeries& operator+=(const MultiSeries& o) { return *this = *this + o; }
    MultiSeries& operator-=(const MultiSeries& o) { return *this = *this - o; }
    MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

    MultiSeries scaled(const S& c) const {
        MultiSeries out(vars_, trunc_);
        if (c == S(0)) return out;
        out.terms_ = terms_;
        for (auto& [e, x] : out.terms_) x = x * c;
        return out;
    }

    MultiSeries truncated(int new_trunc) const {
        if (new_trunc > trunc_)
            throw std::invalid_argument("MultiSeries::truncated: cannot extend knowledge window");
        MultiSeries out(vars_, new_trunc);
        for (const auto& [e, c] : terms_) out.add_term(e, c);
        return out;
    }

    // exp(f) for f with zero constant term.
    MultiSeries exp() const {
        if (terms_.count(std::vector<int>(vars_.size(), 0)))
            throw std::domain_error("MultiSeries::exp: nonzero constant term");
        MultiSeries out = constant(vars_, S(1), trunc_);
        MultiSeries term = out;
        for (int k = 1; k <= trunc_; ++k) {
            term = term * *this;
            term = term.scaled(scalar_from_rational<S>(Rational(1) / k));
            if (term.is_zero()) break;
            out += term;
        }
        return out;
    }

    MultiSeries derivative(std::size_t index) const {
        MultiSeries out(vars_, trunc_ > 0 ? trunc_ - 1 : 0);
        std::vector<int> e(vars_.size());
        for (const auto& [exps, c] : terms_) {
            if (exps[index] == 0) continue;
            e = exps;
            e[index] -= 1;
            out.add_term(e, c * scalar_from_rational<S>(Rational(exps[index])));
        }
        return out;
    }

    // f with x_index replaced by c * x_index.
    MultiSeries scaled_var(std::size_t index, const Rational& c) const {
        MultiSeries out(vars_, trunc_);
        for (const auto& [e, x] : terms_)
            out.add_term(e, x * scalar_from_rational<S>(rat_pow(c, e[index])));
        return out;
    }

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        if (a.vars_ != b.vars_) return false;
        const int tr = std::min(a.trunc_, b.trunc_);
        auto within = [tr](const std::vector<int>& e) { return total_degree(e) <= tr; };
        for (const auto& [e, c] : a.terms_)
            if (within(e) && b.coeff_or_zero(e) != c) return false;
        for (const auto& [e, c] : b.terms_)
            if (within(e) && a.coeff_or_zero(e) != c) return false;
        return true;
    }
    friend bool operator!=(const MultiSeries& a, const MultiSeries& b) { return !(a == b); }

    static int total_degree(const std::vector<int>& exps) {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }

private:
    static void check_vars(const MultiSeries& a, const MultiSeries& b) {
        if (a.vars_ != b.vars_)
            throw std::invalid_argument("MultiSeries: variable list mismatch");
    }
    S coeff_or_zero(const std::vector<int>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    std::vector<std::string> vars_;
    int trunc_;
    std::map<std::vector<int>, S> terms_;
};

using RatMultiSeries = MultiSeries<Rational>;

}  // namespace wreathfock
