#pragma once

#include "wreathfock/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wreathfock {

// Integer partition, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                 // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int j) const { return j < length() ? parts_[static_cast<std::size_t>(j)] : 0; }
    bool empty() const { return parts_.empty(); }

    // Multiplicity of part k (exponent notation 1^{m_1} 2^{m_2} ...).
    int multiplicity(int k) const;

    // z_mu = prod_k k^{m_k} m_k!
    BigInt z_order() const;

    BigInt hook_product() const;
    std::vector<int> contents() const;  // one entry per cell, row-major

    Partition conjugate() const;

    // Canonical order: larger parts first ((3) < (2,1) < (1,1,1)); shorter
    // prefix with a larger entry wins. Sizes may differ.
    friend bool operator<(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

std::vector<Partition> partitions_of(int n);

// Border strips: the result of adding (removing) a connected skew strip of
// `size` cells with no 2x2 square. `sign` is (-1)^(height-1), i.e. the
// Murnaghan-Nakayama coefficient of the move.
struct StripMove {
    Partition shape;
    int sign;  // +1 or -1
};
std::vector<StripMove> add_border_strips(const Partition& p, int size);
std::vector<StripMove> remove_border_strips(const Partition& p, int size);

// r-tuple of partitions (lambda^0, ..., lambda^{r-1}).
class MultiPartition {
public:
    MultiPartition() = default;
    MultiPartition(unsigned r, std::vector<Partition> components);
    static MultiPartition empty(unsigned r) { return MultiPartition(r, std::vector<Partition>(r)); }

    unsigned r() const { return static_cast<unsigned>(components_.size()); }
    const std::vector<Partition>& components() const { return components_; }
    const Partition& component(unsigned i) const { return components_.at(i); }
    MultiPartition with_component(unsigned i, Partition p) const;

    int norm() const;    // ||lambda|| = sum of component sizes
    int length() const;  // total number of parts

    // Z_lambda = r^{l(lambda)} prod_i z_{lambda^i}
    BigInt centralizer_order() const;

    // h(lambda) = prod_i h(lambda^i)
    BigInt hook_product() const;

    // ||lambda|| - l(lambda^0)
    int degree() const;
    // lambda^0 parts each reduced by one (zeros dropped), other colors kept.
    MultiPartition modified_type() const;

    friend bool operator<(const MultiPartition& a, const MultiPartition& b);
    friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const MultiPartition& a, const MultiPartition& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<Partition> components_;
};

// Copy of mp with one part of the given size inserted in (removed from)
// color i; removal throws if no such part exists.
MultiPartition add_part(const MultiPartition& mp, unsigned i, int part);
MultiPartition remove_part(const MultiPartition& mp, unsigned i, int part);

// All of P_n(r) in the canonical order.
std::vector<MultiPartition> enumerate_multipartitions(int n, unsigned r);

// Number of r-colored partitions of n, as the q^n coefficient of
// prod_k (1-q^k)^{-r}; independent of the enumeration above.
BigInt colored_partition_count(int n, unsigned r);

}  // namespace wreathfock
