#include "chainring/codes.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace chainring {

bigint code_cardinality(const System& sys, const CodeSpec& code) {
    const Context& ctx = sys.ctx();
    if (code.comps.size() != ctx.r)
        throw InvalidInput("code must have one component per factor");
    bigint total = 1;
    for (size_t i = 0; i < ctx.r; ++i)
        total *= cardinality(code.comps[i], ctx.p, ctx.degrees[i], ctx.nu());
    return total;
}

Codeword to_codeword(const AmbientElem& e) {
    size_t N = e.ring->N();
    Codeword w(N);
    for (size_t j = 0; j < N; ++j) w[j] = {e.a.coeff(j), e.b.coeff(j)};
    return w;
}

AmbientElem to_ambient(const System& sys, Variant v, const Codeword& w) {
    const AmbientRing& amb = sys.ambient(v);
    std::vector<uint64_t> a(amb.N(), 0), b(amb.N(), 0);
    if (w.size() != amb.N()) throw LengthMismatch("codeword has wrong length");
    for (size_t j = 0; j < w.size(); ++j) {
        a[j] = w[j].first;
        b[j] = w[j].second;
    }
    return {&amb, PolyZps(sys.ctx().mod, std::move(a)),
            PolyZps(sys.ctx().mod, std::move(b))};
}

std::string to_text(const Codeword& w) {
    std::ostringstream os;
    for (size_t j = 0; j < w.size(); ++j) {
        if (j) os << ' ';
        os << w[j].first << '+' << w[j].second << 'u';
    }
    return os.str();
}

CodewordSet materialize(const System& sys, const CodeSpec& code, uint64_t cap) {
    const Context& ctx = sys.ctx();
    bigint size = code_cardinality(sys, code);
    if (size > cap)
        throw CapExceeded("code has " + size.str() + " words, cap is " +
                          std::to_string(cap));
    const AmbientRing& amb = sys.ambient(code.variant);
    const Modulus& mod = ctx.mod;

    // ambient module generators: x^j theta_i g and x^j theta_i u g
    std::vector<AmbientElem> gens;
    for (size_t i = 0; i < ctx.r; ++i) {
        const ChainRing& R = sys.ring(code.variant, i);
        for (const auto& g : generators(code.comps[i], R)) {
            AmbientElem base{&amb, amb.mul(sys.theta(code.variant, i), g.first.rep()),
                             amb.mul(sys.theta(code.variant, i), g.second.rep())};
            AmbientElem ubase{&amb, PolyZps::zero(mod), base.a};
            for (size_t j = 0; j < amb.N(); ++j) {
                gens.push_back(base);
                gens.push_back(ubase);
                base = {&amb, amb.mul_by_x(base.a), amb.mul_by_x(base.b)};
                ubase = {&amb, PolyZps::zero(mod), base.a};
            }
        }
    }

    CodewordSet S;
    S.insert(Codeword(amb.N(), {0, 0}));
    for (const auto& g : gens) {
        Codeword gw = to_codeword(g);
        if (S.count(gw)) continue;
        // close the current span under adding multiples of g
        CodewordSet next;
        for (const auto& s : S) {
            Codeword cur = s;
            for (uint64_t c = 0; c < mod.ps(); ++c) {
                next.insert(cur);
                for (size_t j = 0; j < cur.size(); ++j) {
                    cur[j].first = mod.add(cur[j].first, gw[j].first);
                    cur[j].second = mod.add(cur[j].second, gw[j].second);
                }
            }
        }
        S.swap(next);
        if (S.size() > cap) throw CapExceeded("materialize grew past cap");
    }
    if (bigint(S.size()) != size)
        throw InternalInconsistency("materialize: span size " +
                                    std::to_string(S.size()) + " != cardinality " +
                                    size.str());
    return S;
}

bool is_constacyclic(const CodewordSet& S, Symbol gamma, const Modulus& mod) {
    if (S.empty()) return false;
    auto mul_sym = [&](const Symbol& x, const Symbol& y) -> Symbol {
        return {mod.mul(x.first, y.first),
                mod.add(mod.mul(x.first, y.second), mod.mul(x.second, y.first))};
    };
    for (const auto& w : S) {
        // twisted shift (gamma w_{N-1}, w_0, ..., w_{N-2})
        Codeword sh(w.size());
        sh[0] = mul_sym(gamma, w.back());
        for (size_t j = 1; j < w.size(); ++j) sh[j] = w[j - 1];
        if (!S.count(sh)) return false;
        // scalar closure
        for (uint64_t a = 0; a < mod.ps(); ++a)
            for (uint64_t b = 0; b < mod.ps(); ++b) {
                Symbol c{a, b};
                Codeword sw(w.size());
                for (size_t j = 0; j < w.size(); ++j) sw[j] = mul_sym(c, w[j]);
                if (!S.count(sw)) return false;
            }
    }
    // additive closure
    for (const auto& x : S)
        for (const auto& y : S) {
            Codeword z(x.size());
            for (size_t j = 0; j < x.size(); ++j)
                z[j] = {mod.add(x[j].first, y[j].first),
                        mod.add(x[j].second, y[j].second)};
            if (!S.count(z)) return false;
        }
    return true;
}

Symbol inner_product(const Codeword& a, const Codeword& b, const Modulus& mod) {
    if (a.size() != b.size()) throw LengthMismatch("inner product length mismatch");
    Symbol acc{0, 0};
    for (size_t j = 0; j < a.size(); ++j) {
        acc.first = mod.add(acc.first, mod.mul(a[j].first, b[j].first));
        acc.second = mod.add(acc.second, mod.add(mod.mul(a[j].first, b[j].second),
                                                 mod.mul(a[j].second, b[j].first)));
    }
    return acc;
}

// ---------- duality ----------

namespace {

/// hhat = -delta_i^{t-l} x^{(l-t) d_i} h(x^{-1}) computed in the target
/// ring; t = 0 covers the rows that omit the pi^t factor.
ChainElem twisted_h(const System& sys, Variant v, size_t i, const IdealSpec& spec,
                    const ChainRing& target) {
    const Context& ctx = sys.ctx();
    const ChainRing& R = sys.ring(v, i);
    ChainElem h = reconstruct(R, spec.h);
    ChainElem hmu = sys.mu_map(h);  // h(x^{-1}) in the target ring
    uint64_t delta = ctx.delta[i];
    uint64_t l = spec.l, t = spec.t;
    // delta^{t-l} with t <= l: inverse power
    uint64_t dpow = ctx.mod.pow(ctx.mod.inv(delta), l - t);
    ChainElem xpow = target.x().pow((l - t) * ctx.degrees[i]);
    return -(hmu * xpow).scaled(dpow);
}

}  // namespace

IdealSpec dual_component(const System& sys, Variant v, size_t i, const IdealSpec& spec) {
    const Context& ctx = sys.ctx();
    const ChainRing& R = sys.ring(v, i);
    validate_spec(spec, R);
    const uint64_t nu = ctx.nu();
    size_t j = ctx.mu[i];
    const ChainRing& T = sys.ring(other(v), j);
    ChainElem pih = T.pi();
    ChainElem zero = T.zero();
    std::vector<std::pair<ChainElem, ChainElem>> dgens;

    switch (spec.c) {
        case IdealCase::I:
            dgens = {{pih.pow(nu - spec.l), zero}};
            break;
        case IdealCase::II:
            dgens = {{pih.pow(nu - spec.m), zero}, {zero, T.one()}};
            break;
        case IdealCase::IIIa: {
            ChainElem hh = twisted_h(sys, v, i, spec, T);
            dgens = {{pih.pow(nu - spec.l), pih.pow(nu + spec.t - 2 * spec.l) * hh}};
            break;
        }
        case IdealCase::IIIb: {
            ChainElem hh = twisted_h(sys, v, i, spec, T);
            if (spec.t == 0) {
                dgens = {{pih.pow(spec.l), hh}};
            } else {
                dgens = {{pih.pow(spec.l - spec.t), hh}, {zero, pih.pow(nu - spec.l)}};
            }
            break;
        }
        case IdealCase::IV:
            dgens = {{pih.pow(nu - spec.m), zero}, {zero, pih.pow(nu - spec.l)}};
            break;
        case IdealCase::V: {
            ChainElem hh = twisted_h(sys, v, i, spec, T);
            if (spec.t == 0) {
                dgens = {{pih.pow(nu - spec.m), pih.pow(nu - spec.l - spec.m) * hh}};
            } else {
                dgens = {{pih.pow(nu - spec.m), pih.pow(nu + spec.t - spec.l - spec.m) * hh},
                         {zero, pih.pow(nu - spec.l)}};
            }
            break;
        }
    }
    IdealSpec d = normalize_ideal(dgens, T);
    // |C| |D| = p^{2 nu d} always
    bigint lhs = cardinality(spec, ctx.p, ctx.degrees[i], nu) *
                 cardinality(d, ctx.p, ctx.degrees[j], nu);
    bigint rhs = 1;
    for (uint64_t e = 0; e < 2 * nu * ctx.degrees[i]; ++e) rhs *= ctx.p;
    if (lhs != rhs)
        throw InternalInconsistency("dual_component: |C||D| != p^{2 nu d}");
    return d;
}

CodeSpec dual_code(const System& sys, const CodeSpec& code) {
    const Context& ctx = sys.ctx();
    if (code.comps.size() != ctx.r)
        throw InvalidInput("code must have one component per factor");
    CodeSpec dual;
    dual.variant = other(code.variant);
    dual.comps.resize(ctx.r);
    for (size_t i = 0; i < ctx.r; ++i)
        dual.comps[ctx.mu[i]] = dual_component(sys, code.variant, i, code.comps[i]);
    return dual;
}

// ---------- self-duality ----------

bool selfdual_compatible(const Context& ctx) {
    uint64_t g = ctx.gamma();
    return ctx.p == 2 && ctx.mod.mul(g, g) == 1;
}

namespace {

/// h(x) + delta^{e} x^{xd} h(x^{-1}) = 0 (mod pi^{L}); exponent e is
/// passed as (neg, mag) with delta^{-mag} when neg.
bool congruence_holds(const System& sys, size_t i, const std::vector<PolyFp>& hdigits,
                      uint64_t delta_inv_pow, uint64_t x_pow, uint64_t L) {
    const ChainRing& R = sys.ring(Variant::plain, i);
    ChainElem h = reconstruct(R, hdigits);
    ChainElem hmu = sys.mu_map(h);  // lands in Rhat_i = R_i here
    const ChainRing& T = hmu.ring();
    ChainElem expr = T.from_poly(h.rep()) +
                     (hmu * T.x().pow(x_pow)).scaled(delta_inv_pow);
    return T.in_pi_power(expr, L);
}

}  // namespace

std::vector<IdealSpec> selfdual_fixed_candidates(const System& sys, size_t i) {
    const Context& ctx = sys.ctx();
    if (!selfdual_compatible(ctx))
        throw NotSelfDualCompatible("(1+pw)^2 != 1: no self-dual codes exist");
    if (i >= ctx.lambda) throw InvalidInput("not a fixed factor index");
    const ChainRing& R = sys.ring(Variant::plain, i);
    const uint64_t nu = ctx.nu();
    const uint64_t half = nu / 2;  // nu = 2^k s is even
    const uint64_t d = ctx.degrees[i];
    const Modulus& mod = ctx.mod;
    uint64_t dinv = mod.inv(ctx.delta[i]);
    std::vector<IdealSpec> out;

    // (i) <pi^{nu/2}>   (ii) <u>
    out.push_back(IdealSpec{IdealCase::I, half, 0, 0, {}});
    out.push_back(IdealSpec{IdealCase::II, 0, 0, 0, {}});
    // (iii) l = nu/2, h + delta^{t-l} x^{(l-t)d} h(x^{-1}) = 0 mod pi^{l-t}
    for (uint64_t t = 0; t < half; ++t) {
        DeltaEnumerator de(R, half - t);
        while (de.next()) {
            if (congruence_holds(sys, i, de.digits(), mod.pow(dinv, half - t),
                                 (half - t) * d, half - t))
                out.push_back(IdealSpec{IdealCase::IIIa, half, t, 0, de.digits()});
        }
    }
    // (iv) <pi^l + u h>, l > nu/2, h + delta^{-l} x^{l d} h(x^{-1}) = 0 mod pi^{nu-l}
    for (uint64_t l = half + 1; l + 1 <= nu; ++l) {
        DeltaEnumerator de(R, nu - l);
        while (de.next()) {
            if (congruence_holds(sys, i, de.digits(), mod.pow(dinv, l), l * d, nu - l))
                out.push_back(IdealSpec{IdealCase::IIIb, l, 0, 0, de.digits()});
        }
    }
    // (v) <pi^l, u pi^{nu-l}>, l > nu/2 (boundary validated by the
    // exhaustive small-instance duality check)
    for (uint64_t l = half + 1; l + 1 <= nu; ++l)
        out.push_back(IdealSpec{IdealCase::IV, l, 0, nu - l, {}});
    // (vi) <pi^l + u pi^t h, u pi^{nu-l}>, 1 <= t < nu-l, l > nu/2,
    //      h + delta^{t-l} x^{(l-t)d} h(x^{-1}) = 0 mod pi^{nu-l-t}
    for (uint64_t l = half + 1; l + 1 <= nu; ++l)
        for (uint64_t t = 1; t < nu - l; ++t) {
            DeltaEnumerator de(R, nu - l - t);
            while (de.next()) {
                if (congruence_holds(sys, i, de.digits(), mod.pow(dinv, l - t),
                                     (l - t) * d, nu - l - t))
                    out.push_back(IdealSpec{IdealCase::V, l, t, nu - l, de.digits()});
            }
        }
    return out;
}

bool is_self_dual(const System& sys, const CodeSpec& code) {
    const Context& ctx = sys.ctx();
    if (!selfdual_compatible(ctx))
        throw NotSelfDualCompatible("(1+pw)^2 != 1: no self-dual codes exist");
    if (code.comps.size() != ctx.r)
        throw InvalidInput("code must have one component per factor");
    // fixed blocks: membership in the six-condition candidate set
    for (size_t i = 0; i < ctx.lambda; ++i) {
        auto cands = selfdual_fixed_candidates(sys, i);
        if (std::find(cands.begin(), cands.end(), code.comps[i]) == cands.end())
            return false;
    }
    // paired blocks: the eight-row pairing table, both directions
    for (size_t j = 0; j < ctx.epsilon; ++j) {
        size_t i = ctx.lambda + j;
        size_t ip = ctx.lambda + ctx.epsilon + j;
        if (dual_component(sys, code.variant, i, code.comps[i]) != code.comps[ip])
            return false;
        if (dual_component(sys, code.variant, ip, code.comps[ip]) != code.comps[i])
            return false;
    }
    return true;
}

namespace {

std::vector<std::vector<IdealSpec>> all_fixed_candidates(const System& sys,
                                                         unsigned jobs) {
    const Context& ctx = sys.ctx();
    std::vector<std::vector<IdealSpec>> out(ctx.lambda);
    if (jobs <= 1 || ctx.lambda <= 1) {
        for (size_t i = 0; i < ctx.lambda; ++i)
            out[i] = selfdual_fixed_candidates(sys, i);
        return out;
    }
    std::vector<std::future<std::vector<IdealSpec>>> futs;
    for (size_t i = 0; i < ctx.lambda; ++i)
        futs.push_back(std::async(std::launch::async,
                                  [&sys, i] { return selfdual_fixed_candidates(sys, i); }));
    for (size_t i = 0; i < ctx.lambda; ++i) out[i] = futs[i].get();
    return out;
}

}  // namespace

bigint count_self_dual(const System& sys, unsigned jobs) {
    const Context& ctx = sys.ctx();
    if (!selfdual_compatible(ctx))
        throw NotSelfDualCompatible("(1+pw)^2 != 1: no self-dual codes exist");
    bigint total = 1;
    for (const auto& cands : all_fixed_candidates(sys, jobs))
        total *= bigint(cands.size());
    for (size_t j = 0; j < ctx.epsilon; ++j)
        total *= count_ideals(ctx.p, ctx.degrees[ctx.lambda + j], ctx.nu());
    return total;
}

uint64_t enumerate_self_dual(const System& sys,
                             const std::function<bool(const CodeSpec&)>& sink,
                             unsigned jobs) {
    const Context& ctx = sys.ctx();
    if (!selfdual_compatible(ctx))
        throw NotSelfDualCompatible("(1+pw)^2 != 1: no self-dual codes exist");
    // one candidate list per fixed block, one ideal stream per pair
    std::vector<std::vector<IdealSpec>> fixed = all_fixed_candidates(sys, jobs);

    CodeSpec cur;
    cur.variant = Variant::plain;
    cur.comps.assign(ctx.r, IdealSpec{});
    uint64_t emitted = 0;
    bool stop = false;

    // recursive cartesian walk: fixed blocks, then free pair members
    std::function<void(size_t)> walk = [&](size_t slot) {
        if (stop) return;
        if (slot == ctx.lambda + ctx.epsilon) {
            ++emitted;
            if (!sink(cur)) stop = true;
            return;
        }
        if (slot < ctx.lambda) {
            for (const auto& spec : fixed[slot]) {
                cur.comps[slot] = spec;
                walk(slot + 1);
                if (stop) return;
            }
            return;
        }
        size_t j = slot - ctx.lambda;      // pair number
        size_t partner = ctx.lambda + ctx.epsilon + j;
        IdealEnumerator en(sys.ring(Variant::plain, slot));
        while (en.next()) {
            cur.comps[slot] = en.spec();
            cur.comps[partner] = dual_component(sys, Variant::plain, slot, en.spec());
            walk(slot + 1);
            if (stop) return;
        }
    };
    walk(0);
    return emitted;
}

}  // namespace chainring
