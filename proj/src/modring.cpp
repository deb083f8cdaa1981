#include "chainring/modring.hpp"

#include <algorithm>
#include <sstream>

namespace chainring {

namespace {

uint64_t checked_pow_u64(uint64_t base, uint32_t e, uint64_t cap) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > cap / base) throw InvalidInput("modulus p^s exceeds 2^31");
        r *= base;
    }
    return r;
}

}  // namespace

Modulus::Modulus(uint32_t p, uint32_t s) : p_(p), s_(s) {
    if (p < 2) throw InvalidInput("p must be >= 2");
    if (s < 1) throw InvalidInput("s must be >= 1");
    ps_ = checked_pow_u64(p, s, uint64_t(1) << 31);
}

uint64_t Modulus::pow(uint64_t a, uint64_t e) const {
    a %= ps_;
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t Modulus::inv(uint64_t a) const {
    a %= ps_;
    if (!is_unit(a)) throw NotAUnit("inverse of non-unit " + std::to_string(a) +
                                    " mod " + std::to_string(ps_));
    // extended Euclid on (a, p^s)
    int64_t r0 = int64_t(ps_), r1 = int64_t(a);
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    int64_t t = t0 % int64_t(ps_);
    if (t < 0) t += int64_t(ps_);
    return uint64_t(t);
}

std::vector<uint32_t> Modulus::padic_digits(uint64_t a) const {
    a %= ps_;
    std::vector<uint32_t> d(s_);
    for (uint32_t j = 0; j < s_; ++j) {
        d[j] = uint32_t(a % p_);
        a /= p_;
    }
    return d;
}

// ---------- PolyZps ----------

PolyZps::PolyZps(const Modulus& m, std::vector<uint64_t> coeffs)
    : mod_(m), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= mod_.ps();
    trim();
}

void PolyZps::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<size_t> PolyZps::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

bool PolyZps::is_monic() const { return !c_.empty() && c_.back() == 1; }

PolyZps PolyZps::constant_poly(const Modulus& m, uint64_t a) {
    return PolyZps(m, {a});
}

PolyZps PolyZps::monomial(const Modulus& m, size_t deg, uint64_t a) {
    std::vector<uint64_t> c(deg + 1, 0);
    c[deg] = a;
    return PolyZps(m, std::move(c));
}

PolyZps operator+(const PolyZps& a, const PolyZps& b) {
    const Modulus& m = a.modulus();
    std::vector<uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = m.add(a.coeff(i), b.coeff(i));
    return PolyZps(m, std::move(c));
}

PolyZps operator-(const PolyZps& a, const PolyZps& b) {
    const Modulus& m = a.modulus();
    std::vector<uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = m.sub(a.coeff(i), b.coeff(i));
    return PolyZps(m, std::move(c));
}

PolyZps operator-(const PolyZps& a) {
    return PolyZps::zero(a.modulus()) - a;
}

PolyZps operator*(const PolyZps& a, const PolyZps& b) {
    const Modulus& m = a.modulus();
    if (a.is_zero() || b.is_zero()) return PolyZps::zero(m);
    std::vector<uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = (c[i + j] + a.coeffs()[i] * b.coeffs()[j]) % m.ps();
    }
    return PolyZps(m, std::move(c));
}

PolyZps scale(const PolyZps& a, uint64_t c) {
    const Modulus& m = a.modulus();
    std::vector<uint64_t> r(a.coeffs());
    for (auto& x : r) x = m.mul(x, c);
    return PolyZps(m, std::move(r));
}

DivRem divrem(const PolyZps& a, const PolyZps& b) {
    const Modulus& m = a.modulus();
    if (b.is_zero()) throw NonUnitLeadingCoeff("division by zero polynomial");
    if (!m.is_unit(b.leading()))
        throw NonUnitLeadingCoeff("divisor leading coefficient " +
                                  std::to_string(b.leading()) + " is not a unit");
    uint64_t lc_inv = m.inv(b.leading());
    std::vector<uint64_t> rem(a.coeffs());
    size_t db = *b.degree();
    if (a.is_zero() || *a.degree() < db)
        return {PolyZps::zero(m), a};
    std::vector<uint64_t> quot(a.coeffs().size() - db, 0);
    for (size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        uint64_t q = m.mul(rem[i], lc_inv);
        quot[i - db] = q;
        for (size_t j = 0; j <= db; ++j)
            rem[i - db + j] = m.sub(rem[i - db + j], m.mul(q, b.coeff(j)));
    }
    return {PolyZps(m, std::move(quot)), PolyZps(m, std::move(rem))};
}

PolyZps poly_mod(const PolyZps& a, const PolyZps& b) { return divrem(a, b).rem; }

PolyZps exact_div(const PolyZps& a, const PolyZps& b) {
    DivRem d = divrem(a, b);
    if (!d.rem.is_zero())
        throw InternalInconsistency("exact_div: division left a remainder");
    return d.quot;
}

uint64_t eval(const PolyZps& f, uint64_t x) {
    const Modulus& m = f.modulus();
    uint64_t r = 0;
    for (size_t i = f.coeffs().size(); i-- > 0;)
        r = m.add(m.mul(r, x), f.coeffs()[i]);
    return r;
}

PolyZps compose(const PolyZps& f, const PolyZps& g, const PolyZps* m) {
    PolyZps r = PolyZps::zero(f.modulus());
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        r = r * g + PolyZps::constant_poly(f.modulus(), f.coeffs()[i]);
        if (m) r = poly_mod(r, *m);
    }
    return r;
}

PolyZps poly_pow(const PolyZps& f, uint64_t e, const PolyZps* m) {
    PolyZps r = PolyZps::constant_poly(f.modulus(), 1);
    PolyZps base = m ? poly_mod(f, *m) : f;
    while (e) {
        if (e & 1) {
            r = r * base;
            if (m) r = poly_mod(r, *m);
        }
        base = base * base;
        if (m) base = poly_mod(base, *m);
        e >>= 1;
    }
    return r;
}

// ---------- PolyFp ----------

PolyFp::PolyFp(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
}

void PolyFp::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<size_t> PolyFp::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

bool PolyFp::operator<(const PolyFp& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i) {
        if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
    }
    return false;
}

PolyFp PolyFp::constant_poly(uint32_t p, uint32_t a) { return PolyFp(p, {a}); }

PolyFp PolyFp::monomial(uint32_t p, size_t deg, uint32_t a) {
    std::vector<uint32_t> c(deg + 1, 0);
    c[deg] = a;
    return PolyFp(p, std::move(c));
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
    std::vector<uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p();
    return PolyFp(a.p(), std::move(c));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
    std::vector<uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + a.p() - b.coeff(i) % a.p()) % a.p();
    return PolyFp(a.p(), std::move(c));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
    if (a.is_zero() || b.is_zero()) return PolyFp::zero(a.p());
    std::vector<uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = uint32_t((c[i + j] + uint64_t(a.coeffs()[i]) * b.coeffs()[j]) % a.p());
    }
    return PolyFp(a.p(), std::move(c));
}

PolyFp scale(const PolyFp& a, uint32_t c) {
    std::vector<uint32_t> r(a.coeffs());
    for (auto& x : r) x = uint32_t(uint64_t(x) * c % a.p());
    return PolyFp(a.p(), std::move(r));
}

namespace {
uint32_t fp_inv(uint32_t a, uint32_t p) {
    int64_t r0 = p, r1 = a % p, t0 = 0, t1 = 1;
    if (r1 == 0) throw NotAUnit("zero has no inverse in F_p");
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    t0 %= p;
    if (t0 < 0) t0 += p;
    return uint32_t(t0);
}
}  // namespace

DivRemFp divrem(const PolyFp& a, const PolyFp& b) {
    if (b.is_zero()) throw NonUnitLeadingCoeff("division by zero polynomial");
    uint32_t p = a.p();
    uint32_t lc_inv = fp_inv(b.leading(), p);
    std::vector<uint32_t> rem(a.coeffs());
    size_t db = *b.degree();
    if (a.is_zero() || *a.degree() < db) return {PolyFp::zero(p), a};
    std::vector<uint32_t> quot(a.coeffs().size() - db, 0);
    for (size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        uint32_t q = uint32_t(uint64_t(rem[i]) * lc_inv % p);
        quot[i - db] = q;
        for (size_t j = 0; j <= db; ++j) {
            uint64_t sub = uint64_t(q) * b.coeff(j) % p;
            rem[i - db + j] = uint32_t((rem[i - db + j] + p - sub) % p);
        }
    }
    return {PolyFp(p, std::move(quot)), PolyFp(p, std::move(rem))};
}

PolyFp poly_mod(const PolyFp& a, const PolyFp& b) { return divrem(a, b).rem; }

PolyFp exact_div(const PolyFp& a, const PolyFp& b) {
    DivRemFp d = divrem(a, b);
    if (!d.rem.is_zero())
        throw InternalInconsistency("exact_div(F_p): division left a remainder");
    return d.quot;
}

PolyFp monic(const PolyFp& a) {
    if (a.is_zero()) return a;
    return scale(a, fp_inv(a.leading(), a.p()));
}

PolyFp pow_mod(const PolyFp& base, uint64_t e, const PolyFp& m) {
    PolyFp r = PolyFp::constant_poly(base.p(), 1);
    PolyFp b = poly_mod(base, m);
    while (e) {
        if (e & 1) r = poly_mod(r * b, m);
        b = poly_mod(b * b, m);
        e >>= 1;
    }
    return r;
}

Bezout fp_gcd_bezout(const PolyFp& a, const PolyFp& b) {
    if (a.is_zero() && b.is_zero())
        throw InvalidInput("gcd(0, 0) is undefined");
    uint32_t p = a.p();
    PolyFp r0 = a, r1 = b;
    PolyFp u0 = PolyFp::constant_poly(p, 1), u1 = PolyFp::zero(p);
    PolyFp v0 = PolyFp::zero(p), v1 = PolyFp::constant_poly(p, 1);
    while (!r1.is_zero()) {
        DivRemFp d = divrem(r0, r1);
        PolyFp r2 = d.rem;
        PolyFp u2 = u0 - d.quot * u1;
        PolyFp v2 = v0 - d.quot * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    uint32_t lc = r0.leading();
    uint32_t lci = fp_inv(lc, p);
    return {scale(r0, lci), scale(u0, lci), scale(v0, lci)};
}

PolyFp reduce_mod_p(const PolyZps& f) {
    std::vector<uint32_t> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = uint32_t(f.coeffs()[i] % f.modulus().p());
    return PolyFp(f.modulus().p(), std::move(c));
}

PolyZps lift_to_zps(const PolyFp& f, const Modulus& m) {
    std::vector<uint64_t> c(f.coeffs().begin(), f.coeffs().end());
    return PolyZps(m, std::move(c));
}

// ---------- linear solving mod p^s ----------

namespace {
uint32_t p_valuation(uint64_t a, uint32_t p, uint32_t s) {
    if (a == 0) return s;
    uint32_t v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}
}  // namespace

std::optional<std::vector<uint64_t>> solve_linear_mod_ps(
    std::vector<std::vector<uint64_t>> M, std::vector<uint64_t> b, const Modulus& mod) {
    const size_t rows = M.size();
    const size_t cols = rows ? M[0].size() : 0;
    if (b.size() != rows) throw InvalidInput("solve_linear_mod_ps: shape mismatch");
    for (auto& row : M) {
        if (row.size() != cols) throw InvalidInput("solve_linear_mod_ps: ragged matrix");
        for (auto& x : row) x %= mod.ps();
    }
    for (auto& x : b) x %= mod.ps();
    const std::vector<std::vector<uint64_t>> M0 = M;
    const std::vector<uint64_t> b0 = b;

    // Full pivoting on minimal p-valuation (ties: lowest column, then lowest
    // row). With this rule every non-pivot entry of a pivot row has valuation
    // >= the pivot's, so back-substitution divisibility holds for every
    // consistent system.
    struct Pivot {
        size_t row;
        size_t col;
        uint32_t val;
    };
    std::vector<Pivot> pivots;
    std::vector<bool> col_used(cols, false);
    size_t step = 0;
    while (step < rows) {
        size_t best_r = SIZE_MAX, best_c = SIZE_MAX;
        uint32_t best_v = mod.s();
        for (size_t c = 0; c < cols; ++c) {
            if (col_used[c]) continue;
            for (size_t r = step; r < rows; ++r) {
                uint32_t v = p_valuation(M[r][c], mod.p(), mod.s());
                if (v < best_v) {
                    best_v = v;
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (best_r == SIZE_MAX) break;  // remaining submatrix is zero
        std::swap(M[best_r], M[step]);
        std::swap(b[best_r], b[step]);
        // normalize so the pivot entry is exactly p^v
        uint64_t pv = 1;
        for (uint32_t i = 0; i < best_v; ++i) pv *= mod.p();
        uint64_t unit = M[step][best_c] / pv;  // exact: valuation is best_v
        uint64_t uinv = mod.inv(unit % mod.ps());
        for (auto& x : M[step]) x = mod.mul(x, uinv);
        b[step] = mod.mul(b[step], uinv);
        // eliminate below: entries in this column have valuation >= best_v
        for (size_t r = step + 1; r < rows; ++r) {
            if (M[r][best_c] == 0) continue;
            uint64_t factor = M[r][best_c] / pv;  // exact by pivot minimality
            for (size_t j = 0; j < cols; ++j)
                M[r][j] = mod.sub(M[r][j], mod.mul(factor, M[step][j]));
            b[r] = mod.sub(b[r], mod.mul(factor, b[step]));
        }
        col_used[best_c] = true;
        pivots.push_back({step, best_c, best_v});
        ++step;
    }
    // rows below the staircase must be consistent
    for (size_t r = step; r < rows; ++r)
        if (b[r] % mod.ps() != 0) return std::nullopt;

    std::vector<uint64_t> x(cols, 0);
    for (size_t k = pivots.size(); k-- > 0;) {
        const Pivot& pv_info = pivots[k];
        uint64_t rhs = b[pv_info.row];
        for (size_t j = 0; j < cols; ++j) {
            if (j == pv_info.col) continue;
            rhs = mod.sub(rhs, mod.mul(M[pv_info.row][j], x[j]));
        }
        uint64_t pv = 1;
        for (uint32_t i = 0; i < pv_info.val; ++i) pv *= mod.p();
        if (rhs % pv != 0) return std::nullopt;
        x[pv_info.col] = rhs / pv;
    }
    // verified-solution post-condition
    for (size_t r = 0; r < rows; ++r) {
        uint64_t acc = 0;
        for (size_t j = 0; j < cols; ++j) acc = mod.add(acc, mod.mul(M0[r][j], x[j]));
        if (acc != b0[r])
            throw InternalInconsistency("solve_linear_mod_ps: verification failed");
    }
    return x;
}

// ---------- text format ----------

std::string to_text(const PolyZps& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) os << ',';
        os << f.coeffs()[i];
    }
    return os.str();
}

std::string to_text(const PolyFp& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) os << ',';
        os << f.coeffs()[i];
    }
    return os.str();
}

PolyZps parse_poly(const std::string& text, const Modulus& m) {
    std::vector<uint64_t> c;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            throw InvalidInput("bad coefficient '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw InvalidInput("bad coefficient '" + tok + "'");
        if (v >= m.ps())
            throw InvalidInput("coefficient " + tok + " >= modulus " +
                               std::to_string(m.ps()));
        c.push_back(v);
    }
    if (c.empty()) throw InvalidInput("empty polynomial text");
    return PolyZps(m, std::move(c));
}

}  // namespace chainring
