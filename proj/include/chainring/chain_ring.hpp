#ifndef CHAINRING_CHAIN_RING_HPP
#define CHAINRING_CHAIN_RING_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "chainring/factorization.hpp"
#include "chainring/modring.hpp"

namespace chainring {

enum class Variant : uint8_t { plain, hat };

inline Variant other(Variant v) {
    return v == Variant::plain ? Variant::hat : Variant::plain;
}

class ChainElem;

/// The local chain ring attached to factor i of the Context:
///   Z_{p^s}[x] / < eta^{d_i} * f_i(eta^{-1} x^{p^k}) >
/// with eta = 1 + p w0 (plain) or 1 + p what0 (hat). The defining polynomial
/// is the monic normalization of f_i(x^{p^k} eta^{-1}); the maximal ideal is
/// generated by pi = f_i(x), whose nilpotency index is nu = p^k s. Immutable
/// after construction; the pi multiplication matrix is cached.
class ChainRing {
   public:
    ChainRing(std::shared_ptr<const Context> ctx, size_t index, Variant variant);

    const Context& ctx() const { return *ctx_; }
    std::shared_ptr<const Context> ctx_ptr() const { return ctx_; }
    size_t index() const { return index_; }
    Variant variant() const { return variant_; }
    uint32_t d() const { return d_; }
    size_t dim() const { return dim_; }           // p^k * d_i
    uint64_t nu() const { return nu_; }           // p^k * s
    const PolyZps& defining_poly() const { return defining_; }
    const PolyFp& fbar() const { return fbar_; }  // f_i mod p (residue field modulus)

    ChainElem zero() const;
    ChainElem one() const;
    ChainElem x() const;
    ChainElem x_inverse() const;  // x is a unit: f_i(0) is a unit
    ChainElem pi() const;         // image of f_i(x)
    ChainElem from_poly(const PolyZps& rep) const;
    ChainElem from_digits(const std::vector<PolyFp>& digits) const;

    bool same_ring(const ChainRing& o) const {
        return ctx_.get() == o.ctx_.get() && index_ == o.index_ && variant_ == o.variant_;
    }

    /// The unique T_i-digit expansion: digit 0 through the residue-field
    /// map, higher digits by repeated division by pi (a verified linear
    /// solve against the cached pi matrix).
    std::vector<PolyFp> digits(const ChainElem& a) const;
    /// Smallest j with digit_j != 0; nu() for the zero element.
    uint64_t val_pi(const ChainElem& a) const;
    bool in_pi_power(const ChainElem& a, uint64_t m) const;
    bool is_unit(const ChainElem& a) const;
    /// Newton lift of the residue-field inverse; throws NotAUnit.
    ChainElem inverse(const ChainElem& a) const;

    /// The unit theta with p * theta = pi^{p^k}, extracted from the exact
    /// integer quotient (f_i(x)^{p^k} - eta^{d_i} f_i(eta^{-1} x^{p^k})) / p;
    /// both defining properties are asserted.
    ChainElem theta_unit() const;

    uint64_t ring_size_log_p() const { return nu_ * d_; }  // |R| = p^{nu d}

   private:
    std::shared_ptr<const Context> ctx_;
    size_t index_;
    Variant variant_;
    uint32_t d_;
    size_t dim_;
    uint64_t nu_;
    uint64_t eta_;
    PolyZps defining_;
    PolyZps pi_rep_;
    PolyZps x_inv_rep_;
    PolyFp fbar_;
    std::vector<std::vector<uint64_t>> pi_matrix_;  // column j = pi * x^j

    friend class ChainElem;
};

/// Canonical representative (degree < dim) of an element of a ChainRing.
class ChainElem {
   public:
    const ChainRing& ring() const { return *ring_; }
    const PolyZps& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    bool operator==(const ChainElem& o) const {
        return ring_->same_ring(*o.ring_) && rep_ == o.rep_;
    }
    bool operator!=(const ChainElem& o) const { return !(*this == o); }

    friend ChainElem operator+(const ChainElem& a, const ChainElem& b);
    friend ChainElem operator-(const ChainElem& a, const ChainElem& b);
    friend ChainElem operator*(const ChainElem& a, const ChainElem& b);
    friend ChainElem operator-(const ChainElem& a);

    ChainElem scaled(uint64_t c) const;
    ChainElem pow(uint64_t e) const;

   private:
    ChainElem(const ChainRing* r, PolyZps rep) : ring_(r), rep_(std::move(rep)) {}
    const ChainRing* ring_;
    PolyZps rep_;
    friend class ChainRing;
};

/// Sum of lift(digit_j) * pi^j; inverse of ChainRing::digits.
ChainElem reconstruct(const ChainRing& ring, const std::vector<PolyFp>& digits);

/// Streams Delta_l = units of R_i / <pi^l>: all digit tuples
/// (b_0, ..., b_{l-1}) with b_0 != 0, lexicographic (digit 0 most
/// significant, PolyFp coefficients compared low-index-first).
class DeltaEnumerator {
   public:
    DeltaEnumerator(const ChainRing& ring, uint64_t l);
    bool next();  // advance; false when exhausted
    const std::vector<PolyFp>& digits() const { return digits_; }
    ChainElem element() const;
    /// (p^d - 1) * p^{(l-1) d}
    static uint64_t count(uint32_t p, uint32_t d, uint64_t l);

   private:
    const ChainRing* ring_;
    uint64_t l_;
    bool fresh_ = true;
    bool done_ = false;
    std::vector<PolyFp> digits_;
    std::vector<uint64_t> idx_;  // mixed-radix counter per digit
    uint64_t tcount_;            // |T_i| = p^d
    PolyFp nth_t(uint64_t n) const;
};

/// Element text form: canonical representative in polynomial text format,
/// prefixed by the ring id, e.g. "R[2]:7,5,6,1" or "Rhat[1]:0,1".
std::string to_text(const ChainElem& a);

}  // namespace chainring

#endif
