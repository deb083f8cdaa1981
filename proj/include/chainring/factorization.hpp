#ifndef CHAINRING_FACTORIZATION_HPP
#define CHAINRING_FACTORIZATION_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "chainring/modring.hpp"

namespace chainring {

/// One fully-derived problem instance: the modulus, the unit w and its
/// derived companions, the ordered basic-irreducible factors of y^n - 1 over
/// Z_{p^s}, the reciprocal permutation mu with its scalars delta_i, and the
/// (lambda, epsilon) block structure (fixed factors first, then paired
/// blocks with mu(lambda+j) = lambda+epsilon+j). Immutable once built.
struct Context {
    Modulus mod;        // Z_{p^s}
    uint32_t p = 2;
    uint32_t s = 2;
    uint32_t k = 1;
    uint64_t n = 1;
    uint64_t N = 2;     // p^k * n
    uint64_t pk = 2;    // p^k
    uint64_t w = 1;     // defining unit, gamma = 1 + p w
    uint64_t w0 = 1;    // (1 + p w0)^n = 1 + p w, canonical unit rep < p^{s-1}
    uint64_t what = 1;  // 1 + p what = (1 + p w)^{-1}, canonical rep < p^{s-1}
    uint64_t what0 = 1; // 1 + p what0 = (1 + p w0)^{-1}, canonical rep < p^{s-1}
    uint64_t seed = 0;

    std::vector<PolyZps> factors;    // monic basic irreducible, product = y^n - 1
    std::vector<uint32_t> degrees;   // d_i
    size_t r = 0;
    std::vector<size_t> mu;          // involution on {0..r-1}, reordered indexing
    std::vector<uint64_t> delta;     // f~_i = delta_i * f_{mu(i)}
    size_t lambda = 0;               // number of fixed factors
    size_t epsilon = 0;              // number of factor pairs

    uint64_t gamma() const { return mod.reduce(1 + uint64_t(p) * w); }
    uint64_t gamma_hat() const { return mod.reduce(1 + uint64_t(p) * what); }
    uint64_t eta() const { return mod.reduce(1 + uint64_t(p) * w0); }
    uint64_t eta_hat() const { return mod.reduce(1 + uint64_t(p) * what0); }
    uint64_t nu() const { return pk * s; }  // nilpotency index of f_i(x) in R_i
};

/// Factor y^n - 1 into monic basic irreducible polynomials over Z_{p^s}:
/// distinct-degree plus (seeded) equal-degree splitting over F_p, then
/// Hensel lifting to p^s. Canonical order: ascending degree, then
/// low-index-first lexicographic on the coefficient sequence. The exact
/// product identity and mod-p irreducibility of each factor are checked on
/// every run.
std::vector<PolyZps> factor_xn_minus_1(uint32_t p, uint32_t s, uint64_t n,
                                       uint64_t seed = 0);

/// The canonical w0 with (1 + p w0)^n = 1 + p w: exponentiate by n^{-1}
/// mod p^{s-1} (the order of 1 + p Z_{p^s}) and extract the digit.
uint64_t solve_w0(uint32_t p, uint32_t s, uint64_t n, uint64_t w);

/// what from 1 + p what = (1 + p w)^{-1}; the representative < p^{s-1}.
uint64_t hat_of(uint32_t p, const Modulus& mod, uint64_t w);

/// Coefficient reversal y^d f(1/y); requires f(0) != 0.
PolyZps reciprocal(const PolyZps& f);

struct MuDelta {
    std::vector<PolyZps> factors;  // reordered: fixed blocks first, then pairs
    std::vector<size_t> mu;
    std::vector<uint64_t> delta;
    size_t lambda = 0;
    size_t epsilon = 0;
};

/// Match every factor against the monic normalization of its reciprocal and
/// reorder so that mu-fixed factors come first.
MuDelta build_mu_delta(const std::vector<PolyZps>& factors);

/// Build the full Context; validates p prime, s >= 2, k >= 1, gcd(p, n) = 1
/// and w a unit.
Context build_context(uint32_t p, uint32_t s, uint32_t k, uint64_t n, uint64_t w,
                      uint64_t seed = 0);

bool is_prime_u32(uint32_t v);

}  // namespace chainring

#endif
