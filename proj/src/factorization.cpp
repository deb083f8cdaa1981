#include "chainring/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace chainring {

bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

PolyFp fp_gcd(const PolyFp& a, const PolyFp& b) {
    PolyFp r0 = a, r1 = b;
    while (!r1.is_zero()) {
        PolyFp r2 = poly_mod(r0, r1);
        r0 = r1;
        r1 = r2;
    }
    return monic(r0);
}

PolyFp random_poly(uint32_t p, size_t max_deg, std::mt19937_64& rng) {
    std::vector<uint32_t> c(max_deg + 1);
    for (auto& x : c) x = uint32_t(rng() % p);
    return PolyFp(p, std::move(c));
}

/// Cantor–Zassenhaus equal-degree splitting: F is squarefree, monic, and a
/// product of irreducibles all of degree d.
void edf(const PolyFp& F, size_t d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
    size_t degF = *F.degree();
    if (degF == d) {
        out.push_back(monic(F));
        return;
    }
    uint32_t p = F.p();
    PolyFp splitter = PolyFp::zero(p);
    while (true) {
        PolyFp r = random_poly(p, degF - 1, rng);
        if (r.is_zero()) continue;
        PolyFp g = fp_gcd(r, F);
        if (!g.is_zero() && *g.degree() > 0 && *g.degree() < degF) {
            splitter = g;
            break;
        }
        if (p == 2) {
            // trace map r + r^2 + r^4 + ... + r^{2^{d-1}} mod F
            PolyFp t = r;
            PolyFp acc = r;
            for (size_t i = 1; i < d; ++i) {
                t = poly_mod(t * t, F);
                acc = acc + t;
            }
            g = fp_gcd(acc, F);
        } else {
            // r^((p^d - 1)/2) - 1 mod F, exponent done by square-and-multiply
            // over the d * ceil(log2 p) bits of (p^d - 1)/2
            PolyFp t = PolyFp::constant_poly(p, 1);
            // compute exponent (p^d - 1) / 2 as big binary via repeated
            // exponentiation: r^(p^d - 1) = prod over base-p digits; simpler:
            // build by d successive p-power steps: r^(1+p+...+p^{d-1}) has
            // order dividing (p^d-1)/(p-1); instead use the standard route:
            // exponentiation via binary on a multiword exponent.
            std::vector<uint64_t> e;  // little-endian 64-bit limbs of (p^d-1)/2
            {
                // (p^d - 1) / 2 computed in multiword arithmetic
                std::vector<uint64_t> pd{1};
                for (size_t i = 0; i < d; ++i) {
                    unsigned __int128 carry = 0;
                    for (auto& limb : pd) {
                        unsigned __int128 v = (unsigned __int128)limb * p + carry;
                        limb = uint64_t(v);
                        carry = v >> 64;
                    }
                    if (carry) pd.push_back(uint64_t(carry));
                }
                // subtract 1
                for (auto& limb : pd) {
                    if (limb) {
                        --limb;
                        break;
                    }
                    limb = UINT64_MAX;
                }
                // halve
                uint64_t borrow = 0;
                for (size_t i = pd.size(); i-- > 0;) {
                    uint64_t cur = pd[i];
                    pd[i] = (cur >> 1) | (borrow << 63);
                    borrow = cur & 1;
                }
                e = pd;
            }
            PolyFp base = poly_mod(r, F);
            t = PolyFp::constant_poly(p, 1);
            bool started = false;
            for (size_t i = e.size(); i-- > 0;) {
                for (int bit = 63; bit >= 0; --bit) {
                    if (!started && !((e[i] >> bit) & 1)) continue;
                    if (started) t = poly_mod(t * t, F);
                    if ((e[i] >> bit) & 1) {
                        t = started ? poly_mod(t * base, F) : base;
                        started = true;
                    }
                }
            }
            g = fp_gcd(t - PolyFp::constant_poly(p, 1), F);
        }
        if (!g.is_zero() && *g.degree() > 0 && *g.degree() < degF) {
            splitter = g;
            break;
        }
    }
    edf(splitter, d, rng, out);
    edf(exact_div(F, splitter), d, rng, out);
}

/// Factor a squarefree monic polynomial over F_p.
std::vector<PolyFp> factor_squarefree_fp(const PolyFp& f, std::mt19937_64& rng) {
    std::vector<PolyFp> out;
    uint32_t p = f.p();
    PolyFp rest = monic(f);
    PolyFp x = PolyFp::monomial(p, 1);
    PolyFp h = x;  // y^{p^d} mod rest, advanced one degree at a time
    size_t d = 0;
    while (!rest.is_zero() && *rest.degree() > 0) {
        ++d;
        if (2 * d > *rest.degree()) {
            out.push_back(rest);  // remainder is irreducible
            break;
        }
        h = pow_mod(h, p, rest);
        PolyFp g = fp_gcd(h - x, rest);
        if (!g.is_zero() && *g.degree() > 0) {
            edf(g, d, rng, out);
            rest = exact_div(rest, g);
            h = poly_mod(h, rest);
        }
    }
    return out;
}

bool irreducible_fp(const PolyFp& f) {
    if (f.is_zero() || *f.degree() == 0) return false;
    size_t d = *f.degree();
    uint32_t p = f.p();
    PolyFp x = PolyFp::monomial(p, 1);
    PolyFp h = x;
    for (size_t i = 0; i < d; ++i) h = pow_mod(h, p, f);
    if (!(poly_mod(h - x, f)).is_zero()) return false;
    // for each prime divisor q of d: gcd(y^{p^{d/q}} - y, f) must be 1
    size_t m = d;
    for (size_t q = 2; q * q <= m; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        PolyFp t = x;
        for (size_t i = 0; i < d / q; ++i) t = pow_mod(t, p, f);
        PolyFp g = fp_gcd(t - x, f);
        if (g.is_zero() || *g.degree() != 0) return false;
    }
    if (m > 1) {  // m is the last prime factor of d
        PolyFp t = x;
        for (size_t i = 0; i < d / m; ++i) t = pow_mod(t, p, f);
        PolyFp g = fp_gcd(t - x, f);
        if (g.is_zero() || *g.degree() != 0) return false;
    }
    return true;
}

/// Lift a two-way monic factorization fbar = gbar * hbar (coprime over F_p)
/// to f = g * h over Z_{p^s}, one p-digit at a time.
void hensel_pair(const PolyZps& f, const PolyFp& gbar, const PolyFp& hbar,
                 PolyZps& g, PolyZps& h) {
    const Modulus& m = f.modulus();
    uint32_t p = m.p();
    Bezout bz = fp_gcd_bezout(gbar, hbar);
    if (bz.g.is_zero() || *bz.g.degree() != 0)
        throw InternalInconsistency("hensel_pair: factors not coprime mod p");
    g = lift_to_zps(gbar, m);
    h = lift_to_zps(hbar, m);
    uint64_t pj = p;
    for (uint32_t j = 1; j < m.s(); ++j, pj *= p) {
        PolyZps e = f - g * h;
        // e == 0 (mod p^j); peel the digit
        std::vector<uint32_t> ec(e.coeffs().size());
        for (size_t i = 0; i < ec.size(); ++i) {
            uint64_t c = e.coeffs()[i];
            if (c % pj)
                throw InternalInconsistency("hensel_pair: defect not divisible by p^j");
            ec[i] = uint32_t((c / pj) % p);
        }
        PolyFp ebar(p, std::move(ec));
        if (ebar.is_zero()) continue;
        PolyFp dh = poly_mod(bz.u * ebar, hbar);
        PolyFp dg = exact_div(ebar - gbar * dh, hbar);
        g = g + scale(lift_to_zps(dg, m), pj % m.ps());
        h = h + scale(lift_to_zps(dh, m), pj % m.ps());
    }
    if (!(f == g * h))
        throw InternalInconsistency("hensel_pair: lift failed to converge");
}

/// Balanced multi-factor Hensel lift of f from its mod-p factor list.
std::vector<PolyZps> hensel_tree(const PolyZps& f, const std::vector<PolyFp>& fbars) {
    if (fbars.size() == 1) {
        if (!f.is_monic())
            throw InternalInconsistency("hensel_tree: non-monic leaf");
        return {f};
    }
    size_t half = fbars.size() / 2;
    PolyFp gbar = PolyFp::constant_poly(fbars[0].p(), 1);
    PolyFp hbar = PolyFp::constant_poly(fbars[0].p(), 1);
    for (size_t i = 0; i < half; ++i) gbar = gbar * fbars[i];
    for (size_t i = half; i < fbars.size(); ++i) hbar = hbar * fbars[i];
    PolyZps g(f.modulus()), h(f.modulus());
    hensel_pair(f, gbar, hbar, g, h);
    std::vector<PolyFp> left(fbars.begin(), fbars.begin() + half);
    std::vector<PolyFp> right(fbars.begin() + half, fbars.end());
    std::vector<PolyZps> out = hensel_tree(g, left);
    std::vector<PolyZps> rr = hensel_tree(h, right);
    out.insert(out.end(), rr.begin(), rr.end());
    return out;
}

bool canonical_less(const PolyZps& a, const PolyZps& b) {
    size_t da = a.coeffs().size(), db = b.coeffs().size();
    if (da != db) return da < db;
    for (size_t i = 0; i < da; ++i)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

}  // namespace

std::vector<PolyZps> factor_xn_minus_1(uint32_t p, uint32_t s, uint64_t n,
                                       uint64_t seed) {
    if (!is_prime_u32(p)) throw InvalidInput("p must be prime");
    if (n < 1) throw InvalidInput("n must be >= 1");
    if (n % p == 0) throw InvalidInput("gcd(p, n) must be 1");
    Modulus mod(p, s);
    PolyZps target = PolyZps::monomial(mod, size_t(n)) -
                     PolyZps::constant_poly(mod, 1);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    PolyFp fbar = reduce_mod_p(target);
    std::vector<PolyFp> mods = factor_squarefree_fp(fbar, rng);
    std::sort(mods.begin(), mods.end(), [](const PolyFp& a, const PolyFp& b) {
        if (a.coeffs().size() != b.coeffs().size())
            return a.coeffs().size() < b.coeffs().size();
        return a < b;
    });
    std::vector<PolyZps> lifted = hensel_tree(target, mods);
    std::sort(lifted.begin(), lifted.end(), canonical_less);

    // every-run post-checks: exact product identity and basic irreducibility
    PolyZps prod = PolyZps::constant_poly(mod, 1);
    for (const auto& f : lifted) {
        if (!f.is_monic())
            throw InternalInconsistency("factor_xn_minus_1: non-monic factor");
        if (!irreducible_fp(reduce_mod_p(f)))
            throw InternalInconsistency("factor_xn_minus_1: factor not basic irreducible");
        prod = prod * f;
    }
    if (!(prod == target))
        throw InternalInconsistency("factor_xn_minus_1: product != y^n - 1");
    return lifted;
}

uint64_t solve_w0(uint32_t p, uint32_t s, uint64_t n, uint64_t w) {
    Modulus mod(p, s);
    w = mod.reduce(w);
    if (!mod.is_unit(w)) throw NotAUnit("w must be a unit");
    if (n % p == 0) throw InvalidInput("gcd(p, n) must be 1");
    // 1 + p Z_{p^s} has order p^{s-1}; the n-th power map is inverted by
    // raising to n^{-1} mod p^{s-1}
    uint64_t order = 1;
    for (uint32_t i = 0; i + 1 < s; ++i) order *= p;
    uint64_t ninv = 1;
    {
        // n^{-1} mod order via extended Euclid (order is a prime power, n coprime)
        int64_t r0 = int64_t(order), r1 = int64_t(n % order), t0 = 0, t1 = 1;
        if (order == 1) {
            ninv = 0;
        } else {
            while (r1 != 0) {
                int64_t q = r0 / r1;
                int64_t r2 = r0 - q * r1;
                r0 = r1;
                r1 = r2;
                int64_t t2 = t0 - q * t1;
                t0 = t1;
                t1 = t2;
            }
            int64_t t = t0 % int64_t(order);
            if (t < 0) t += int64_t(order);
            ninv = uint64_t(t);
        }
    }
    uint64_t gamma = mod.reduce(1 + uint64_t(p) * w);
    uint64_t g0 = mod.pow(gamma, ninv == 0 ? 1 : ninv);
    uint64_t w0 = (g0 - 1) / p;  // exact: g0 = 1 mod p
    if ((g0 - 1) % p)
        throw InternalInconsistency("solve_w0: group element not in 1 + pZ");
    if (mod.pow(mod.reduce(1 + uint64_t(p) * w0), n) != gamma)
        throw InternalInconsistency("solve_w0: verification failed");
    if (!mod.is_unit(w0))
        throw InternalInconsistency("solve_w0: extracted w0 is not a unit");
    return w0;
}

uint64_t hat_of(uint32_t p, const Modulus& mod, uint64_t w) {
    uint64_t gamma = mod.reduce(1 + uint64_t(p) * w);
    uint64_t ginv = mod.inv(gamma);
    return (ginv - 1) / p;
}

PolyZps reciprocal(const PolyZps& f) {
    if (f.is_zero() || f.constant() == 0)
        throw ZeroConstantTerm("reciprocal of polynomial with zero constant term");
    std::vector<uint64_t> c(f.coeffs().rbegin(), f.coeffs().rend());
    return PolyZps(f.modulus(), std::move(c));
}

MuDelta build_mu_delta(const std::vector<PolyZps>& factors) {
    const size_t r = factors.size();
    if (r == 0) throw InvalidInput("empty factor list");
    const Modulus& mod = factors[0].modulus();
    std::vector<size_t> match(r, SIZE_MAX);
    std::vector<uint64_t> delta(r, 1);
    for (size_t i = 0; i < r; ++i) {
        PolyZps rec = reciprocal(factors[i]);
        uint64_t lc = rec.leading();  // = f_i(0), a unit for divisors of y^n-1
        if (!mod.is_unit(lc))
            throw InternalInconsistency("build_mu_delta: reciprocal has non-unit lc");
        PolyZps monic_rec = scale(rec, mod.inv(lc));
        for (size_t j = 0; j < r; ++j) {
            if (monic_rec == factors[j]) {
                match[i] = j;
                delta[i] = lc;
                break;
            }
        }
        if (match[i] == SIZE_MAX)
            throw InternalInconsistency("build_mu_delta: no reciprocal partner found");
    }
    for (size_t i = 0; i < r; ++i)
        if (match[match[i]] != i)
            throw InternalInconsistency("build_mu_delta: matching is not an involution");

    // reorder: fixed points first (canonical order), then pair blocks
    std::vector<size_t> order;
    for (size_t i = 0; i < r; ++i)
        if (match[i] == i) order.push_back(i);
    size_t lambda = order.size();
    std::vector<size_t> first_of_pair;
    for (size_t i = 0; i < r; ++i)
        if (match[i] != i && i < match[i]) first_of_pair.push_back(i);
    size_t epsilon = first_of_pair.size();
    for (size_t j = 0; j < epsilon; ++j) order.push_back(first_of_pair[j]);
    for (size_t j = 0; j < epsilon; ++j) order.push_back(match[first_of_pair[j]]);

    MuDelta out;
    out.lambda = lambda;
    out.epsilon = epsilon;
    std::vector<size_t> pos(r);  // old index -> new index
    for (size_t newi = 0; newi < r; ++newi) pos[order[newi]] = newi;
    for (size_t newi = 0; newi < r; ++newi) {
        out.factors.push_back(factors[order[newi]]);
        out.delta.push_back(delta[order[newi]]);
    }
    out.mu.resize(r);
    for (size_t newi = 0; newi < r; ++newi) out.mu[newi] = pos[match[order[newi]]];
    return out;
}

Context build_context(uint32_t p, uint32_t s, uint32_t k, uint64_t n, uint64_t w,
                      uint64_t seed) {
    if (!is_prime_u32(p)) throw InvalidInput("p must be prime");
    if (s < 2) throw InvalidInput("s must be >= 2");
    if (k < 1) throw InvalidInput("k must be >= 1");
    if (n < 1) throw InvalidInput("n must be >= 1");
    if (gcd_u64(p, n) != 1) throw InvalidInput("gcd(p, n) must be 1");
    Modulus mod(p, s);
    w = mod.reduce(w);
    if (!mod.is_unit(w)) throw NotAUnit("w must be a unit mod p^s");

    Context ctx{mod};
    ctx.p = p;
    ctx.s = s;
    ctx.k = k;
    ctx.n = n;
    ctx.w = w;
    ctx.seed = seed;
    ctx.pk = 1;
    for (uint32_t i = 0; i < k; ++i) {
        ctx.pk *= p;
        if (ctx.pk > (uint64_t(1) << 31)) throw InvalidInput("p^k too large");
    }
    ctx.N = ctx.pk * n;
    ctx.w0 = solve_w0(p, s, n, w);
    ctx.what = hat_of(p, mod, w);
    ctx.what0 = hat_of(p, mod, ctx.w0);
    // (1 + p what0)^n = 1 + p what must hold; verify rather than assume
    if (mod.pow(ctx.eta_hat(), n) != ctx.gamma_hat())
        throw InternalInconsistency("build_context: hat parameters inconsistent");

    MuDelta md = build_mu_delta(factor_xn_minus_1(p, s, n, seed));
    ctx.factors = std::move(md.factors);
    ctx.mu = std::move(md.mu);
    ctx.delta = std::move(md.delta);
    ctx.lambda = md.lambda;
    ctx.epsilon = md.epsilon;
    ctx.r = ctx.factors.size();
    for (const auto& f : ctx.factors)
        ctx.degrees.push_back(uint32_t(*f.degree()));
    uint64_t dsum = std::accumulate(ctx.degrees.begin(), ctx.degrees.end(), uint64_t(0));
    if (dsum != n)
        throw InternalInconsistency("build_context: factor degrees do not sum to n");
    return ctx;
}

}  // namespace chainring
