#include "wreathfock/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreathfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

BigInt Partition::z_order() const {
    BigInt z = 1;
    int run_value = 0, run_len = 0;
    for (int p : parts_) {
        if (p == run_value) {
            ++run_len;
        } else {
            run_value = p;
            run_len = 1;
        }
        z *= BigInt(run_value) * run_len;
    }
    return z;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
    return Partition(std::move(conj));
}

BigInt Partition::hook_product() const {
    // hook(j,k) = lambda_j - k + lambda'_k - j + 1 with 1-based indices
    Partition conj = conjugate();
    BigInt h = 1;
    for (int j = 1; j <= length(); ++j)
        for (int k = 1; k <= part(j - 1); ++k)
            h *= part(j - 1) - k + conj.part(k - 1) - j + 1;
    return h;
}

std::vector<int> Partition::contents() const {
    std::vector<int> cs;
    for (int j = 1; j <= length(); ++j)
        for (int k = 1; k <= part(j - 1); ++k) cs.push_back(k - j);
    return cs;
}

bool operator<(const Partition& a, const Partition& b) {
    const int n = std::max(a.length(), b.length());
    for (int j = 0; j < n; ++j) {
        if (a.part(j) != b.part(j)) return a.part(j) > b.part(j);
    }
    return false;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j) os << ",";
        os << parts_[j];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    // parts nonincreasing, largest first
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StripMove> add_border_strips(const Partition& p, int size) {
    if (size <= 0) throw std::invalid_argument("add_border_strips: size must be positive");
    std::vector<StripMove> out;
    // Scan partitions mu of |p|+size containing p and keep those where mu/p
    // is a ribbon: touched rows contiguous and mu_{j+1} = p_j + 1 between
    // consecutive touched rows (connected, no 2x2 block).
    const int target = p.size() + size;
    for (const Partition& mu : partitions_of(target)) {
        if (mu.length() < p.length()) continue;
        bool contains = true;
        for (int j = 0; j < mu.length(); ++j)
            if (mu.part(j) < p.part(j)) { contains = false; break; }
        if (!contains) continue;
        // rows touched by mu/p
        int top = -1, bottom = -1;
        bool ok = true;
        for (int j = 0; j < mu.length(); ++j) {
            if (mu.part(j) == p.part(j)) continue;
            if (top < 0) top = j;
            bottom = j;
        }
        for (int j = top; j <= bottom && ok; ++j)
            if (mu.part(j) == p.part(j)) ok = false;  // must be contiguous rows
        if (!ok) continue;
        for (int j = top; j < bottom && ok; ++j)
            if (mu.part(j + 1) != p.part(j) + 1) ok = false;
        if (!ok) continue;
        const int height = bottom - top + 1;
        out.push_back(StripMove{mu, (height - 1) % 2 == 0 ? 1 : -1});
    }
    return out;
}

std::vector<StripMove> remove_border_strips(const Partition& p, int size) {
    if (size <= 0) throw std::invalid_argument("remove_border_strips: size must be positive");
    std::vector<StripMove> out;
    if (p.size() < size) return out;
    for (const Partition& mu : partitions_of(p.size() - size)) {
        for (const StripMove& mv : add_border_strips(mu, size)) {
            if (mv.shape == p) out.push_back(StripMove{mu, mv.sign});
        }
    }
    return out;
}

MultiPartition::MultiPartition(unsigned r, std::vector<Partition> components)
    : components_(std::move(components)) {
    if (r == 0) throw std::invalid_argument("MultiPartition: r must be positive");
    if (components_.size() != r)
        throw std::invalid_argument("MultiPartition: component count must equal r");
}

MultiPartition MultiPartition::with_component(unsigned i, Partition p) const {
    std::vector<Partition> comps = components_;
    comps.at(i) = std::move(p);
    return MultiPartition(r(), std::move(comps));
}

int MultiPartition::norm() const {
    int n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
}

int MultiPartition::length() const {
    int l = 0;
    for (const auto& c : components_) l += c.length();
    return l;
}

BigInt MultiPartition::centralizer_order() const {
    BigInt z = int_pow(BigInt(r()), static_cast<unsigned>(length()));
    for (const auto& c : components_) z *= c.z_order();
    return z;
}

BigInt MultiPartition::hook_product() const {
    BigInt h = 1;
    for (const auto& c : components_) h *= c.hook_product();
    return h;
}

int MultiPartition::degree() const {
    return norm() - components_[0].length();
}

MultiPartition MultiPartition::modified_type() const {
    std::vector<Partition> comps = components_;
    std::vector<int> reduced;
    for (int p : comps[0].parts())
        if (p > 1) reduced.push_back(p - 1);
    comps[0] = Partition(std::move(reduced));
    return MultiPartition(r(), std::move(comps));
}

bool operator<(const MultiPartition& a, const MultiPartition& b) {
    if (a.r() != b.r())
        throw std::invalid_argument("MultiPartition: comparing different r");
    for (unsigned i = 0; i < a.r(); ++i) {
        if (a.components_[i] != b.components_[i]) return a.components_[i] < b.components_[i];
    }
    return false;
}

std::string MultiPartition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < r(); ++i) {
        if (i) os << ",";
        os << components_[i].to_string();
    }
    os << "]";
    return os.str();
}

MultiPartition add_part(const MultiPartition& mp, unsigned i, int part) {
    std::vector<int> parts = mp.component(i).parts();
    parts.insert(std::upper_bound(parts.begin(), parts.end(), part, std::greater<int>()), part);
    return mp.with_component(i, Partition(std::move(parts)));
}

MultiPartition remove_part(const MultiPartition& mp, unsigned i, int part) {
    std::vector<int> parts = mp.component(i).parts();
    auto it = std::find(parts.begin(), parts.end(), part);
    if (it == parts.end())
        throw std::invalid_argument("remove_part: no part " + std::to_string(part) +
                                    " in color " + std::to_string(i));
    parts.erase(it);
    return mp.with_component(i, Partition(std::move(parts)));
}

std::vector<MultiPartition> enumerate_multipartitions(int n, unsigned r) {
    if (n < 0) throw std::invalid_argument("enumerate_multipartitions: negative n");
    if (r == 0) throw std::invalid_argument("enumerate_multipartitions: r must be positive");
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(r);
    auto rec = [&](auto&& self, unsigned color, int rest) -> void {
        if (color + 1 == r) {
            for (const Partition& p : partitions_of(rest)) {
                cur[color] = p;
                out.emplace_back(r, cur);
            }
            return;
        }
        for (int k = 0; k <= rest; ++k) {
            for (const Partition& p : partitions_of(k)) {
                cur[color] = p;
                self(self, color + 1, rest - k);
            }
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt colored_partition_count(int n, unsigned r) {
    // dp over prod_{k>=1} (1-q^k)^{-r}: r independent colors of each part size
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1, BigInt(0));
    dp[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (unsigned color = 0; color < r; ++color) {
            for (int m = k; m <= n; ++m)
                dp[static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(m - k)];
        }
    }
    return dp[static_cast<std::size_t>(n)];
}

}  // namespace wreathfock
