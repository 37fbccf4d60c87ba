#pragma once

#include "wreathfock/partition.hpp"
#include "wreathfock/series.hpp"
#include "wreathfock/wreath.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace wreathfock {

// Symmetric group character chi^nu_mu via the Murnaghan-Nakayama border
// strip recursion. Requires |nu| = |mu|.
BigInt sym_char(const Partition& nu, const Partition& mu);

// Character table of Gamma_n. Rows are the irreducibles s_lambda, columns
// the conjugacy classes, both indexed by P_n(r) in the canonical order.
class CharacterTable {
public:
    CharacterTable(unsigned r, int n, std::vector<MultiPartition> classes,
                   std::vector<std::vector<Cyclotomic>> matrix);

    unsigned r() const { return r_; }
    int n() const { return n_; }
    const std::vector<MultiPartition>& classes() const { return classes_; }
    std::size_t index(const MultiPartition& mp) const;

    const Cyclotomic& value(std::size_t lambda, std::size_t rho) const {
        return matrix_[lambda][rho];
    }
    const std::vector<std::vector<Cyclotomic>>& matrix() const { return matrix_; }

    const BigInt& centralizer(std::size_t rho) const { return centralizers_[rho]; }
    // Degrees d_lambda (the identity-class column).
    std::vector<Cyclotomic> degrees() const;

    ClassFunction irreducible(std::size_t lambda) const;

private:
    unsigned r_;
    int n_;
    std::vector<MultiPartition> classes_;
    std::vector<BigInt> centralizers_;
    std::vector<std::vector<Cyclotomic>> matrix_;
};

// Computed bosonically: each Schur component expanded in power sums via
// sym_char, colors transformed through the order-r character table, the
// product read off in the class-monomial basis. Memoized per (r, n).
const CharacterTable& wreath_char_table(unsigned r, int n);

// Same table, backed by an on-disk JSON cache when `cache_dir` is nonempty.
const CharacterTable& wreath_char_table_cached(unsigned r, int n, const std::string& cache_dir);

ClassFunction irreducible_character(unsigned r, int n, const MultiPartition& lambda);

// Hermitian pairing <f, g> = sum_rho f(rho) conj(g(rho)) / Z_rho under which
// the irreducible characters are orthonormal.
Cyclotomic class_inner(const ClassFunction& f, const ClassFunction& g);

// Convolution through the character table: expand in irreducibles, scale
// each s_lambda component by |Gamma_n| / d_lambda = r^n h(lambda), expand back.
ClassFunction convolve_fast(const ClassFunction& f, const ClassFunction& g);

// Eigenvalue series of the JM generating operator on each s_lambda:
// (1/sigma(rz)) (sum_j e^{(lambda^i_j - j + 1/2) r z} - 1/sigma(rz)),
// telescoped to a finite sum before evaluation.
std::map<MultiPartition, RatSeries> jm_spectrum(unsigned r, int n, unsigned color, int order);

// Structure constants of the degree-graded ring in the basis of class
// indicator functions: only products landing in degree deg(rho)+deg(sigma)
// are recorded. Values are certified nonnegative integers.
struct GradedStructureConstants {
    unsigned r = 1;
    int n = 0;
    std::vector<MultiPartition> classes;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, BigInt> top;

    BigInt value(std::size_t rho, std::size_t sigma, std::size_t tau) const;
};

GradedStructureConstants graded_constants(unsigned r, int n);

// Heisenberg operators on the class-function side, acting through the
// class-monomial basis. m > 0 throughout; creation maps R(Gamma_n) into
// R(Gamma_{n+m}), annihilation the other way.
ClassFunction heis_class_create_c(int m, unsigned j, const ClassFunction& f);
ClassFunction heis_class_annihilate_c(int m, unsigned i, const ClassFunction& f);
ClassFunction heis_class_create_gamma(int m, unsigned i, const ClassFunction& f);
ClassFunction heis_class_annihilate_gamma(int m, unsigned i, const ClassFunction& f);

ClassFunction class_vacuum(unsigned r);

// The three distinguished bases, built by applying creation operators to
// the vacuum: a_{-lambda} (class monomials, value Z_lambda on its class),
// a^R_{-lambda} (gamma-colored power sums), and b_{-lambda} (the graded
// basis mixing c^0 with consecutive gamma differences).
ClassFunction a_basis(unsigned r, const MultiPartition& lambda);
ClassFunction aR_basis(unsigned r, const MultiPartition& lambda);
ClassFunction b_basis(unsigned r, const MultiPartition& lambda);

}  // namespace wreathfock
