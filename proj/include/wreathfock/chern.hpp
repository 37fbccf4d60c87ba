#pragma once

#include "wreathfock/fock.hpp"
#include "wreathfock/partition.hpp"
#include "wreathfock/series.hpp"

#include <string>

namespace wreathfock {

// sum over cells of e^{c_box a z}; entire, so the full window is reliable.
RatSeries content_series(const Partition& lambda, int order, const Rational& scale = Rational(1));

// a(k, i): k - r for i < k, else k.
int sector_exponent(unsigned r, unsigned k, unsigned i);

// Eigenvalue of E^{(i)}(z) on [lambda]^{(p)}:
// (1/sigma(rz)) (sum_j e^{(lambda^i_j - j + 1/2 + n_i) rz} - 1/sigma(rz)),
// evaluated with the infinite j-tail telescoped into (e^{n_i rz}-1)/sigma(rz)^2.
RatSeries eps_eigen(unsigned color, const Charge& p, const MultiPartition& lambda, int order);

// Eigenvalue of H_k(z) = sum_i e^{a(k,i) z} E^{(i)}(z).
RatSeries hk_eigen(unsigned k, const Charge& p, const MultiPartition& lambda, int order);

// Eigenvalue of G_k^{(p)}(z), computed cell by cell:
// sum_i e^{(n_i r + a(k,i)) z} sum_{box in lambda^i} e^{r c_box z}; pole-free.
RatSeries gk_eigen(unsigned k, const Charge& p, const MultiPartition& lambda, int order);

// The charge-dependent constant series added by the tilde modification:
// (1/sigma(rz)^2)(e^{(k-r)z} sum_{i<k}(e^{n_i rz}-1) + e^{kz} sum_{i>=k}(e^{n_i rz}-1)).
RatSeries c_const_series(unsigned k, const Charge& p, int order);

RatSeries gk_tilde_eigen(unsigned k, const Charge& p, const MultiPartition& lambda, int order);

// [z^d] of e^{-kz}/(1-e^{-rz}) for d >= -1; k ranges over 0..r (the k = r
// row is what the wrap-around in the modified Chern combination uses).
Rational n_coeff(unsigned r, unsigned k, int d);

// [z^m] of c_const_series; zero for p = 0.
Rational c_const(const Charge& p, unsigned k, int m);

// Eigenvalue of the modified Chern character operator E_{k;m} on
// [lambda]^{(p)}, m >= -1. Computed along two routes - the n-coefficient
// combination of tilde-G coefficients and the z^m coefficient of eps_eigen -
// which are asserted equal before returning.
Rational modified_chern_eigen(unsigned k, int m, const Charge& p, const MultiPartition& lambda);

// Exact lattice arithmetic: the exceptional classes against the Cartan
// matrix of type A_{r-1}, and the first-Chern expressions for diamond_k.
struct McKayReport {
    bool ok = true;
    std::string detail;
};
McKayReport mckay_check(unsigned r);

}  // namespace wreathfock
