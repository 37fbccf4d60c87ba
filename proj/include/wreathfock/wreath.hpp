#pragma once

#include "wreathfock/cyclotomic.hpp"
#include "wreathfock/partition.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace wreathfock {

// Thrown when a brute-force computation would exceed the enumeration guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element (g, sigma) of Gamma_n = (Z/rZ)^n x| S_n. Colors are the residues
// g_1..g_n; perm stores images, perm[j] = sigma(j), 0-based.
struct WreathElement {
    unsigned r = 1;
    std::vector<int> colors;
    std::vector<int> perm;

    int n() const { return static_cast<int>(perm.size()); }
    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

// (g, sigma)(h, tau) = (g sigma(h), sigma tau) with sigma(h)_j = h_{sigma^{-1}(j)}.
WreathElement wreath_mul(const WreathElement& a, const WreathElement& b);
WreathElement wreath_inv(const WreathElement& a);
WreathElement wreath_identity(unsigned r, int n);

// Conjugacy type: for each cycle of sigma, the cycle length is recorded in
// the component indexed by the cycle-product color.
MultiPartition element_type(const WreathElement& x);

// Fully enumerated Gamma_n with multiplication handled through element
// indices. Oracle only; construction refuses groups above the guard.
class WreathGroup {
public:
    static constexpr long kSizeGuard = 100000;

    WreathGroup(unsigned r, int n);

    unsigned r() const { return r_; }
    int n() const { return n_; }
    std::size_t size() const { return elements_.size(); }

    const WreathElement& element(std::size_t idx) const { return elements_[idx]; }
    std::size_t index_of(const WreathElement& x) const;
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const;

    std::size_t type_index(std::size_t elem) const { return type_of_[elem]; }
    const std::vector<MultiPartition>& classes() const { return classes_; }
    std::size_t class_index(const MultiPartition& mp) const;
    std::size_t representative(std::size_t class_idx) const { return reps_[class_idx]; }
    BigInt class_size(std::size_t class_idx) const { return class_sizes_[class_idx]; }

private:
    unsigned r_;
    int n_;
    std::vector<WreathElement> elements_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index_;
    std::vector<std::size_t> type_of_;
    std::vector<MultiPartition> classes_;
    std::vector<std::size_t> reps_;
    std::vector<BigInt> class_sizes_;
};

// Class function on Gamma_n; absent key means 0.
struct ClassFunction {
    unsigned r = 1;
    int n = 0;
    std::map<MultiPartition, Cyclotomic> values;

    Cyclotomic value(const MultiPartition& mp) const;
    void set(const MultiPartition& mp, const Cyclotomic& v);
    bool is_zero() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction scaled(const Cyclotomic& c) const;
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);
    friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }
};

ClassFunction indicator_class_function(unsigned r, int n, const MultiPartition& mp);

Cyclotomic evaluate(const ClassFunction& f, const WreathElement& x);

// (f o g)(x) = sum_y f(x y^{-1}) g(y), summed over the whole group.
ClassFunction convolve_bruteforce(const WreathGroup& G, const ClassFunction& f,
                                  const ClassFunction& g);

// Element of the group algebra C[Gamma_n], keyed by group element index.
using GroupAlgebraElement = std::map<std::size_t, Cyclotomic>;

GroupAlgebraElement group_algebra_mul(const WreathGroup& G, const GroupAlgebraElement& a,
                                      const GroupAlgebraElement& b);

// Jucys-Murphy element M_j = sum over K_{[2 1^{n-2}]}(j); M_1 = 0.
GroupAlgebraElement jm_element(const WreathGroup& G, int j);

// Xi_n^m(alpha) = (1/(r m!)) sum_i M_i^m alpha^{(i)}, expanded in the
// group algebra and read back as a class function. `alpha` lists the values
// of a class function on Gamma at a^0, ..., a^{r-1}.
ClassFunction jm_class_function(const WreathGroup& G, int m, const std::vector<Cyclotomic>& alpha);

}  // namespace wreathfock
