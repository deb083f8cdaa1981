#include "chainring/crt.hpp"

namespace chainring {

AmbientRing::AmbientRing(std::shared_ptr<const Context> ctx, Variant variant)
    : ctx_(std::move(ctx)), variant_(variant) {
    gamma_ = variant_ == Variant::plain ? ctx_->gamma() : ctx_->gamma_hat();
    N_ = size_t(ctx_->N);
}

PolyZps AmbientRing::reduce(const PolyZps& f) const {
    if (f.coeffs().size() <= N_) return f;
    const Modulus& m = ctx_->mod;
    std::vector<uint64_t> c(f.coeffs());
    for (size_t i = c.size(); i-- > N_;) {
        if (c[i] == 0) continue;
        c[i - N_] = m.add(c[i - N_], m.mul(c[i], gamma_));
        c[i] = 0;
    }
    c.resize(N_);
    return PolyZps(m, std::move(c));
}

PolyZps AmbientRing::mul(const PolyZps& a, const PolyZps& b) const {
    return reduce(a * b);
}

PolyZps AmbientRing::mul_by_x(const PolyZps& a) const {
    return reduce(a * PolyZps::monomial(ctx_->mod, 1));
}

AmbientElem operator+(const AmbientElem& x, const AmbientElem& y) {
    if (x.ring != y.ring) throw VariantMismatch("ambient add across variants");
    return {x.ring, x.a + y.a, x.b + y.b};
}

AmbientElem operator-(const AmbientElem& x, const AmbientElem& y) {
    if (x.ring != y.ring) throw VariantMismatch("ambient sub across variants");
    return {x.ring, x.a - y.a, x.b - y.b};
}

AmbientElem operator*(const AmbientElem& x, const AmbientElem& y) {
    if (x.ring != y.ring) throw VariantMismatch("ambient mul across variants");
    // (a + ub)(c + ud) = ac + u(ad + bc)
    return {x.ring, x.ring->mul(x.a, y.a),
            x.ring->mul(x.a, y.b) + x.ring->mul(x.b, y.a)};
}

namespace {

/// Lift the F_p Bezout pair for (F_i, f_i) one p-digit at a time until
/// a F + b f = 1 holds exactly mod p^s, keeping deg a < deg f and
/// deg b < deg F throughout.
void lift_bezout(const PolyZps& F, const PolyZps& f, PolyZps& a, PolyZps& b) {
    const Modulus& m = F.modulus();
    const uint32_t p = m.p();
    PolyFp Fbar = reduce_mod_p(F), fbar = reduce_mod_p(f);
    Bezout bz = fp_gcd_bezout(Fbar, fbar);
    if (bz.g.is_zero() || *bz.g.degree() != 0)
        throw InternalInconsistency("lift_bezout: F_i and f_i not coprime mod p");
    PolyFp u0 = poly_mod(bz.u, fbar);
    PolyFp v0 = exact_div(PolyFp::constant_poly(p, 1) - Fbar * u0, fbar);
    a = lift_to_zps(u0, m);
    b = lift_to_zps(v0, m);
    PolyZps one = PolyZps::constant_poly(m, 1);
    uint64_t pj = p;
    for (uint32_t j = 1; j < m.s(); ++j, pj *= p) {
        PolyZps e = one - a * F - b * f;
        std::vector<uint32_t> ec(e.coeffs().size());
        for (size_t i = 0; i < ec.size(); ++i) {
            if (e.coeffs()[i] % pj)
                throw InternalInconsistency("lift_bezout: defect not divisible by p^j");
            ec[i] = uint32_t((e.coeffs()[i] / pj) % p);
        }
        PolyFp ebar(p, std::move(ec));
        if (ebar.is_zero()) continue;
        PolyFp da = poly_mod(bz.u * ebar, fbar);
        PolyFp db = exact_div(ebar - Fbar * da, fbar);
        a = a + scale(lift_to_zps(da, m), pj % m.ps());
        b = b + scale(lift_to_zps(db, m), pj % m.ps());
    }
    if (!(a * F + b * f == one))
        throw InternalInconsistency("lift_bezout: lift failed to converge");
}

/// rho(y) -> rho(eta^{-1} x^{p^k}); degree < n maps below N, no reduction.
PolyZps substitute(const PolyZps& rho, uint64_t eta, uint64_t pk, size_t N) {
    const Modulus& m = rho.modulus();
    uint64_t eta_inv = m.inv(eta);
    std::vector<uint64_t> c(N, 0);
    uint64_t pw = 1;
    for (size_t j = 0; j < rho.coeffs().size(); ++j) {
        c[j * pk] = m.mul(rho.coeffs()[j], pw);
        pw = m.mul(pw, eta_inv);
    }
    return PolyZps(m, std::move(c));
}

}  // namespace

IdempotentSet compute_idempotents(const Context& ctx) {
    const Modulus& m = ctx.mod;
    PolyZps yn1 = PolyZps::monomial(m, size_t(ctx.n)) - PolyZps::constant_poly(m, 1);
    IdempotentSet out;
    for (size_t i = 0; i < ctx.r; ++i) {
        const PolyZps& f = ctx.factors[i];
        PolyZps F = exact_div(yn1, f);
        PolyZps a(m), b(m);
        lift_bezout(F, f, a, b);
        PolyZps rho = a * F;  // degree < n already
        out.theta.push_back(substitute(rho, ctx.eta(), ctx.pk, size_t(ctx.N)));
        out.theta_hat.push_back(substitute(rho, ctx.eta_hat(), ctx.pk, size_t(ctx.N)));
    }
    // post-check the full orthogonal idempotent system in both variants
    auto shared = std::make_shared<Context>(ctx);
    for (Variant v : {Variant::plain, Variant::hat}) {
        const auto& th = v == Variant::plain ? out.theta : out.theta_hat;
        AmbientRing amb(shared, v);
        PolyZps sum = PolyZps::zero(m);
        for (size_t i = 0; i < ctx.r; ++i) {
            sum = sum + th[i];
            if (!(amb.mul(th[i], th[i]) == th[i]))
                throw InternalInconsistency("idempotents: theta_i^2 != theta_i");
            for (size_t j = i + 1; j < ctx.r; ++j)
                if (!amb.mul(th[i], th[j]).is_zero())
                    throw InternalInconsistency("idempotents: theta_i theta_j != 0");
        }
        if (!(sum == PolyZps::constant_poly(m, 1)))
            throw InternalInconsistency("idempotents: sum theta_i != 1");
    }
    return out;
}

System::System(const Context& ctx)
    : ctx_(std::make_shared<Context>(ctx)),
      idem_(compute_idempotents(ctx)),
      amb_plain_(ctx_, Variant::plain),
      amb_hat_(ctx_, Variant::hat) {
    plain_.reserve(ctx_->r);
    hat_.reserve(ctx_->r);
    for (size_t i = 0; i < ctx_->r; ++i) {
        plain_.emplace_back(ctx_, i, Variant::plain);
        hat_.emplace_back(ctx_, i, Variant::hat);
    }
}

AmbientElem System::tau_join(
    Variant v, const std::vector<std::pair<ChainElem, ChainElem>>& parts) const {
    if (parts.size() != ctx_->r) throw InvalidInput("tau_join: need r components");
    const AmbientRing& amb = ambient(v);
    PolyZps a = PolyZps::zero(ctx_->mod), b = PolyZps::zero(ctx_->mod);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].first.ring().variant() != v)
            throw VariantMismatch("tau_join: component variant mismatch");
        a = a + amb.mul(theta(v, i), parts[i].first.rep());
        b = b + amb.mul(theta(v, i), parts[i].second.rep());
    }
    return {&amb, a, b};
}

std::vector<std::pair<ChainElem, ChainElem>> System::tau_split(
    const AmbientElem& e) const {
    Variant v = e.ring->variant();
    std::vector<std::pair<ChainElem, ChainElem>> parts;
    parts.reserve(ctx_->r);
    for (size_t i = 0; i < ctx_->r; ++i) {
        const ChainRing& R = ring(v, i);
        parts.emplace_back(R.from_poly(e.a), R.from_poly(e.b));
    }
    return parts;
}

AmbientElem System::mu_ambient(const AmbientElem& e) const {
    Variant v = e.ring->variant();
    const AmbientRing& target = ambient(other(v));
    const Modulus& m = ctx_->mod;
    // multiplier gamma_target^{-1} = gamma_source
    uint64_t mult = e.ring->gamma();
    auto apply = [&](const PolyZps& f) {
        std::vector<uint64_t> c(target.N(), 0);
        c[0] = f.coeff(0);
        for (size_t j = 1; j < target.N(); ++j)
            c[target.N() - j] = m.mul(mult, f.coeff(j));
        return PolyZps(m, std::move(c));
    };
    return {&target, apply(e.a), apply(e.b)};
}

ChainElem System::mu_map(const ChainElem& a) const {
    Variant sv = a.ring().variant();
    size_t i = a.ring().index();
    const ChainRing& target = ring(other(sv), ctx_->mu[i]);
    ChainElem xinv = target.inverse(target.x());
    // Horner over the canonical representative
    ChainElem acc = target.zero();
    const auto& c = a.rep().coeffs();
    for (size_t j = c.size(); j-- > 0;) {
        acc = acc * xinv + target.one().scaled(c[j]);
    }
    return acc;
}

}  // namespace chainring
