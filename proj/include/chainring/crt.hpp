#ifndef CHAINRING_CRT_HPP
#define CHAINRING_CRT_HPP

#include <memory>
#include <utility>
#include <vector>

#include "chainring/chain_ring.hpp"

namespace chainring {

/// Z_{p^s}[x] / <x^N - gamma> with gamma = 1 + p w (plain) or 1 + p what
/// (hat). Elements of the u-extension are (xi, eta) pairs meaning xi + u eta.
class AmbientRing {
   public:
    AmbientRing(std::shared_ptr<const Context> ctx, Variant variant);

    const Context& ctx() const { return *ctx_; }
    Variant variant() const { return variant_; }
    uint64_t gamma() const { return gamma_; }
    size_t N() const { return N_; }

    PolyZps reduce(const PolyZps& f) const;
    PolyZps mul(const PolyZps& a, const PolyZps& b) const;
    PolyZps mul_by_x(const PolyZps& a) const;

   private:
    std::shared_ptr<const Context> ctx_;
    Variant variant_;
    uint64_t gamma_;
    size_t N_;
};

/// xi + u eta in A + uA (or the hat variant).
struct AmbientElem {
    const AmbientRing* ring;
    PolyZps a;  // xi
    PolyZps b;  // eta

    bool operator==(const AmbientElem& o) const { return a == o.a && b == o.b; }
};

AmbientElem operator+(const AmbientElem& x, const AmbientElem& y);
AmbientElem operator-(const AmbientElem& x, const AmbientElem& y);
AmbientElem operator*(const AmbientElem& x, const AmbientElem& y);

struct IdempotentSet {
    std::vector<PolyZps> theta;      // mod x^N - (1 + p w)
    std::vector<PolyZps> theta_hat;  // mod x^N - (1 + p what)
};

/// Bezout pairs a_i F_i + b_i f_i = 1 are computed over F_p and refined by
/// Newton steps until exact mod p^s, then y is substituted by
/// eta^{-1} x^{p^k}. All idempotent identities are checked before returning.
IdempotentSet compute_idempotents(const Context& ctx);

/// Everything derived from one Context: both ambient rings, all 2r chain
/// rings and the idempotents. Built once, immutable, shareable.
class System {
   public:
    explicit System(const Context& ctx);

    const Context& ctx() const { return *ctx_; }
    std::shared_ptr<const Context> ctx_ptr() const { return ctx_; }
    const IdempotentSet& idempotents() const { return idem_; }
    const AmbientRing& ambient(Variant v) const {
        return v == Variant::plain ? amb_plain_ : amb_hat_;
    }
    const ChainRing& ring(Variant v, size_t i) const {
        return v == Variant::plain ? plain_[i] : hat_[i];
    }
    const PolyZps& theta(Variant v, size_t i) const {
        return v == Variant::plain ? idem_.theta[i] : idem_.theta_hat[i];
    }
    size_t r() const { return ctx_->r; }

    /// tau: (pairs in R_i + uR_i) -> sum theta_i (xi_i + u eta_i).
    AmbientElem tau_join(Variant v,
                         const std::vector<std::pair<ChainElem, ChainElem>>& parts) const;
    /// Inverse of tau_join: reduce both components mod each defining poly.
    std::vector<std::pair<ChainElem, ChainElem>> tau_split(const AmbientElem& e) const;

    /// x -> x^{-1} between the two ambient variants, applied to both
    /// u-components. In the target ring x^{-j} = gamma_target^{-1} x^{N-j},
    /// and gamma_target^{-1} equals the source ring's gamma.
    AmbientElem mu_ambient(const AmbientElem& e) const;

    /// mu_i: R_i -> Rhat_{mu(i)} (and symmetrically from hat rings),
    /// substituting x by the inverse of x in the target ring.
    ChainElem mu_map(const ChainElem& a) const;

   private:
    std::shared_ptr<const Context> ctx_;
    IdempotentSet idem_;
    AmbientRing amb_plain_;
    AmbientRing amb_hat_;
    std::vector<ChainRing> plain_;
    std::vector<ChainRing> hat_;
};

}  // namespace chainring

#endif
