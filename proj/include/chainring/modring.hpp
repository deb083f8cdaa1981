#ifndef CHAINRING_MODRING_HPP
#define CHAINRING_MODRING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainring/errors.hpp"

namespace chainring {

/// Residue arithmetic modulo p^s. Values are plain uint64_t in [0, p^s);
/// every operation takes them through a Modulus instance. p^s is capped at
/// 2^31 so products of two residues always fit in uint64_t.
class Modulus {
   public:
    Modulus(uint32_t p, uint32_t s);

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint64_t ps() const { return ps_; }

    uint64_t reduce(uint64_t a) const { return a % ps_; }
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % ps_; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + ps_ - b % ps_) % ps_; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % ps_; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : ps_ - a; }
    uint64_t pow(uint64_t a, uint64_t e) const;

    bool is_unit(uint64_t a) const { return (a % p_) != 0; }

    /// Inverse of a unit; throws NotAUnit when p divides a.
    uint64_t inv(uint64_t a) const;

    /// The s digits of the p-adic expansion a = sum_j p^j d_j, low digit first.
    std::vector<uint32_t> padic_digits(uint64_t a) const;

    bool operator==(const Modulus& o) const { return p_ == o.p_ && s_ == o.s_; }
    bool operator!=(const Modulus& o) const { return !(*this == o); }

   private:
    uint32_t p_;
    uint32_t s_;
    uint64_t ps_;
};

/// Dense polynomial over Z_{p^s}, coefficients low-to-high, canonically
/// trimmed (no trailing zeros). The zero polynomial has an empty coefficient
/// vector and degree() == nullopt.
class PolyZps {
   public:
    PolyZps() : mod_(2, 1) {}  // zero polynomial over a placeholder modulus
    explicit PolyZps(const Modulus& m) : mod_(m) {}
    PolyZps(const Modulus& m, std::vector<uint64_t> coeffs);

    const Modulus& modulus() const { return mod_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    std::optional<size_t> degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    uint64_t constant() const { return coeff(0); }

    bool operator==(const PolyZps& o) const { return mod_ == o.mod_ && c_ == o.c_; }
    bool operator!=(const PolyZps& o) const { return !(*this == o); }

    static PolyZps zero(const Modulus& m) { return PolyZps(m); }
    static PolyZps constant_poly(const Modulus& m, uint64_t a);
    static PolyZps monomial(const Modulus& m, size_t deg, uint64_t a = 1);

   private:
    Modulus mod_;
    std::vector<uint64_t> c_;
    void trim();
};

PolyZps operator+(const PolyZps& a, const PolyZps& b);
PolyZps operator-(const PolyZps& a, const PolyZps& b);
PolyZps operator*(const PolyZps& a, const PolyZps& b);
PolyZps operator-(const PolyZps& a);
PolyZps scale(const PolyZps& a, uint64_t c);

/// Division with remainder. The divisor's leading coefficient must be a unit
/// (it is normalized internally); otherwise NonUnitLeadingCoeff is thrown.
struct DivRem {
    PolyZps quot;
    PolyZps rem;
};
DivRem divrem(const PolyZps& a, const PolyZps& b);
PolyZps poly_mod(const PolyZps& a, const PolyZps& b);

/// Exact quotient a / b; throws InternalInconsistency when b does not
/// divide a.
PolyZps exact_div(const PolyZps& a, const PolyZps& b);

uint64_t eval(const PolyZps& f, uint64_t x);
/// f(g), optionally reduced mod m after every Horner step.
PolyZps compose(const PolyZps& f, const PolyZps& g, const PolyZps* m = nullptr);
PolyZps poly_pow(const PolyZps& f, uint64_t e, const PolyZps* m = nullptr);

/// Dense polynomial over F_p (for factor-mod-p and residue-field work).
class PolyFp {
   public:
    PolyFp() : p_(2) {}
    explicit PolyFp(uint32_t p) : p_(p) {}
    PolyFp(uint32_t p, std::vector<uint32_t> coeffs);

    uint32_t p() const { return p_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    std::optional<size_t> degree() const;
    bool is_zero() const { return c_.empty(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const PolyFp& o) const { return !(*this == o); }
    bool operator<(const PolyFp& o) const;  // low-index-first lexicographic

    static PolyFp zero(uint32_t p) { return PolyFp(p); }
    static PolyFp constant_poly(uint32_t p, uint32_t a);
    static PolyFp monomial(uint32_t p, size_t deg, uint32_t a = 1);

   private:
    uint32_t p_;
    std::vector<uint32_t> c_;
    void trim();
};

PolyFp operator+(const PolyFp& a, const PolyFp& b);
PolyFp operator-(const PolyFp& a, const PolyFp& b);
PolyFp operator*(const PolyFp& a, const PolyFp& b);
PolyFp scale(const PolyFp& a, uint32_t c);

struct DivRemFp {
    PolyFp quot;
    PolyFp rem;
};
DivRemFp divrem(const PolyFp& a, const PolyFp& b);
PolyFp poly_mod(const PolyFp& a, const PolyFp& b);
PolyFp exact_div(const PolyFp& a, const PolyFp& b);
PolyFp monic(const PolyFp& a);
PolyFp pow_mod(const PolyFp& base, uint64_t e, const PolyFp& m);

/// Monic gcd g together with u, v such that u*a + v*b = g.
struct Bezout {
    PolyFp g;
    PolyFp u;
    PolyFp v;
};
Bezout fp_gcd_bezout(const PolyFp& a, const PolyFp& b);

/// Coefficientwise reduction Z_{p^s}[y] -> F_p[y].
PolyFp reduce_mod_p(const PolyZps& f);
/// F_p[y] -> Z_{p^s}[y] with coefficients in {0, ..., p-1}.
PolyZps lift_to_zps(const PolyFp& f, const Modulus& m);

/// Solve M x = b over Z_{p^s}: row reduction with unit-part normalization and
/// minimum-p-valuation pivoting (ties broken by lowest index). Returns any
/// solution, verified by substitution, or nullopt when inconsistent.
std::optional<std::vector<uint64_t>> solve_linear_mod_ps(
    std::vector<std::vector<uint64_t>> M, std::vector<uint64_t> b, const Modulus& mod);

/// Text format used by all interfaces: coefficients low-to-high,
/// comma-separated ("7,5,6,1" reads as y^3+6y^2+5y+7). Parsing rejects
/// coefficients >= p^s.
std::string to_text(const PolyZps& f);
PolyZps parse_poly(const std::string& text, const Modulus& m);
std::string to_text(const PolyFp& f);

}  // namespace chainring

#endif
