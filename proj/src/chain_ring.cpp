#include "chainring/chain_ring.hpp"

#include <sstream>

namespace chainring {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

}  // namespace

ChainRing::ChainRing(std::shared_ptr<const Context> ctx, size_t index, Variant variant)
    : ctx_(std::move(ctx)), index_(index), variant_(variant) {
    const Context& c = *ctx_;
    if (index_ >= c.r) throw InvalidInput("factor index out of range");
    d_ = c.degrees[index_];
    dim_ = size_t(c.pk) * d_;
    nu_ = c.pk * c.s;
    eta_ = variant_ == Variant::plain ? c.eta() : c.eta_hat();
    const Modulus& mod = c.mod;
    const PolyZps& f = c.factors[index_];

    // defining poly: eta^{d} f(eta^{-1} x^{p^k}), monic of degree p^k d
    std::vector<uint64_t> dc(dim_ + 1, 0);
    for (uint32_t j = 0; j <= d_; ++j) {
        // coefficient of x^{j p^k}: f_j * eta^{d-j}
        dc[size_t(j) * c.pk] = mod.mul(f.coeff(j), mod.pow(eta_, d_ - j));
    }
    defining_ = PolyZps(mod, std::move(dc));
    if (!defining_.is_monic())
        throw InternalInconsistency("ChainRing: defining polynomial not monic");

    pi_rep_ = poly_mod(f, defining_);
    fbar_ = reduce_mod_p(f);

    // multiplication-by-pi matrix, used to divide by pi inside digits()
    pi_matrix_.assign(dim_, std::vector<uint64_t>(dim_, 0));
    for (size_t j = 0; j < dim_; ++j) {
        PolyZps col = poly_mod(pi_rep_ * PolyZps::monomial(mod, j), defining_);
        for (size_t i = 0; i < dim_; ++i) pi_matrix_[i][j] = col.coeff(i);
    }
    x_inv_rep_ = inverse(x()).rep();
}

ChainElem ChainRing::x_inverse() const { return ChainElem(this, x_inv_rep_); }

ChainElem ChainRing::zero() const { return ChainElem(this, PolyZps::zero(ctx_->mod)); }
ChainElem ChainRing::one() const {
    return ChainElem(this, PolyZps::constant_poly(ctx_->mod, 1));
}
ChainElem ChainRing::x() const {
    return from_poly(PolyZps::monomial(ctx_->mod, 1));
}
ChainElem ChainRing::pi() const { return ChainElem(this, pi_rep_); }

ChainElem ChainRing::from_poly(const PolyZps& rep) const {
    return ChainElem(this, poly_mod(rep, defining_));
}

ChainElem ChainRing::from_digits(const std::vector<PolyFp>& digits) const {
    return reconstruct(*this, digits);
}

ChainElem operator+(const ChainElem& a, const ChainElem& b) {
    if (!a.ring_->same_ring(*b.ring_)) throw RingMismatch("add across rings");
    return ChainElem(a.ring_, a.rep_ + b.rep_);
}

ChainElem operator-(const ChainElem& a, const ChainElem& b) {
    if (!a.ring_->same_ring(*b.ring_)) throw RingMismatch("sub across rings");
    return ChainElem(a.ring_, a.rep_ - b.rep_);
}

ChainElem operator*(const ChainElem& a, const ChainElem& b) {
    if (!a.ring_->same_ring(*b.ring_)) throw RingMismatch("mul across rings");
    return ChainElem(a.ring_, poly_mod(a.rep_ * b.rep_, a.ring_->defining_poly()));
}

ChainElem operator-(const ChainElem& a) { return ChainElem(&a.ring(), -a.rep()); }

ChainElem ChainElem::scaled(uint64_t c) const {
    return ChainElem(ring_, scale(rep_, c));
}

ChainElem ChainElem::pow(uint64_t e) const {
    ChainElem r = ring_->one();
    ChainElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::vector<PolyFp> ChainRing::digits(const ChainElem& a) const {
    const Modulus& mod = ctx_->mod;
    std::vector<PolyFp> out;
    out.reserve(nu_);
    PolyZps cur = a.rep();
    for (uint64_t j = 0; j < nu_; ++j) {
        PolyFp d0 = poly_mod(reduce_mod_p(cur), fbar_);
        out.push_back(d0);
        PolyZps rest = cur - poly_mod(lift_to_zps(d0, mod), defining_);
        if (rest.is_zero()) {
            cur = rest;
            continue;
        }
        std::vector<uint64_t> rhs(dim_, 0);
        for (size_t i = 0; i < dim_; ++i) rhs[i] = rest.coeff(i);
        auto q = solve_linear_mod_ps(pi_matrix_, rhs, mod);
        if (!q)
            throw InternalInconsistency("digits: element minus digit not divisible by pi");
        cur = PolyZps(mod, *q);
    }
    return out;
}

ChainElem reconstruct(const ChainRing& ring, const std::vector<PolyFp>& digits) {
    ChainElem acc = ring.zero();
    ChainElem pipow = ring.one();
    for (size_t j = 0; j < digits.size(); ++j) {
        if (j) pipow = pipow * ring.pi();
        acc = acc + ring.from_poly(lift_to_zps(digits[j], ring.ctx().mod)) * pipow;
    }
    return acc;
}

uint64_t ChainRing::val_pi(const ChainElem& a) const {
    auto d = digits(a);
    for (uint64_t j = 0; j < d.size(); ++j)
        if (!d[j].is_zero()) return j;
    return nu_;
}

bool ChainRing::in_pi_power(const ChainElem& a, uint64_t m) const {
    if (m > nu_) throw InvalidRange("in_pi_power: exponent beyond nilpotency");
    return val_pi(a) >= m;
}

bool ChainRing::is_unit(const ChainElem& a) const {
    return !poly_mod(reduce_mod_p(a.rep()), fbar_).is_zero();
}

ChainElem ChainRing::inverse(const ChainElem& a) const {
    if (!is_unit(a)) throw NotAUnit("inverse of non-unit chain ring element");
    // residue-field inverse, then Newton steps b <- b (2 - a b)
    PolyFp a0 = poly_mod(reduce_mod_p(a.rep()), fbar_);
    Bezout bz = fp_gcd_bezout(a0, fbar_);
    if (bz.g.is_zero() || *bz.g.degree() != 0)
        throw InternalInconsistency("inverse: residue not invertible");
    ChainElem b = from_poly(lift_to_zps(bz.u, ctx_->mod));
    ChainElem two = one() + one();
    for (int iter = 0; iter < 128; ++iter) {
        ChainElem ab = a * b;
        if (ab == one()) return b;
        b = b * (two - ab);
    }
    throw InternalInconsistency("inverse: Newton iteration did not converge");
}

ChainElem ChainRing::theta_unit() const {
    // Work with canonical integer representatives mod p^{s+1}: the quotient
    // by p of f^{p^k} - eta^d f(eta^{-1} x^{p^k}) is only determined mod p^s
    // once the inputs are known mod p^{s+1}.
    const Context& c = *ctx_;
    const uint64_t p = c.p;
    const uint64_t big = c.mod.ps() * p;  // p^{s+1} < 2^62
    const PolyZps& f = c.factors[index_];
    const size_t deg = d_;

    uint64_t eta_inv_ps = c.mod.inv(eta_);  // canonical rep in [0, p^s)

    // A = f(x)^{p^k} mod p^{s+1}
    std::vector<uint64_t> A{1};
    std::vector<uint64_t> base(f.coeffs().begin(), f.coeffs().end());
    uint64_t e = c.pk;
    auto mul_big = [&](const std::vector<uint64_t>& u, const std::vector<uint64_t>& v) {
        std::vector<uint64_t> w(u.size() + v.size() - 1, 0);
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j)
                w[i + j] = (w[i + j] + mulmod_u64(u[i], v[j], big)) % big;
        return w;
    };
    while (e) {
        if (e & 1) A = mul_big(A, base);
        base = mul_big(base, base);
        e >>= 1;
    }
    // B = eta^d f(eta^{-1} x^{p^k}) mod p^{s+1}, with eta^{-1} the canonical
    // representative of the inverse mod p^s
    std::vector<uint64_t> B(size_t(deg) * c.pk + 1, 0);
    std::vector<uint64_t> eta_pows(deg + 1);
    eta_pows[0] = 1;
    for (size_t j = 1; j <= deg; ++j) eta_pows[j] = mulmod_u64(eta_pows[j - 1], eta_, big);
    std::vector<uint64_t> etainv_pows(deg + 1);
    etainv_pows[0] = 1;
    for (size_t j = 1; j <= deg; ++j)
        etainv_pows[j] = mulmod_u64(etainv_pows[j - 1], eta_inv_ps, big);
    // eta^d (eta^{-1})^j kept as separate integer powers: eta_inv_ps is an
    // inverse only mod p^s, not mod p^{s+1}
    for (uint32_t j = 0; j <= deg; ++j)
        B[size_t(j) * c.pk] =
            mulmod_u64(f.coeff(j), mulmod_u64(eta_pows[deg], etainv_pows[j], big), big);

    size_t len = std::max(A.size(), B.size());
    std::vector<uint64_t> tc(len, 0);
    for (size_t i = 0; i < len; ++i) {
        uint64_t ai = i < A.size() ? A[i] : 0;
        uint64_t bi = i < B.size() ? B[i] : 0;
        uint64_t di = (ai + big - bi) % big;
        if (di % p)
            throw InternalInconsistency("theta_unit: difference not divisible by p");
        tc[i] = (di / p) % c.mod.ps();
    }
    ChainElem theta = from_poly(PolyZps(c.mod, std::move(tc)));

    // defining identities
    ChainElem ppow = pi().pow(c.pk);
    if (!(theta.scaled(p) == ppow))
        throw InternalInconsistency("theta_unit: p * theta != pi^{p^k}");
    if (!is_unit(theta))
        throw InternalInconsistency("theta_unit: theta is not a unit");
    return theta;
}

// ---------- Delta enumeration ----------

DeltaEnumerator::DeltaEnumerator(const ChainRing& ring, uint64_t l)
    : ring_(&ring), l_(l) {
    if (l < 1 || l > ring.nu()) throw InvalidRange("Delta_l needs 1 <= l <= p^k s");
    tcount_ = 1;
    for (uint32_t i = 0; i < ring.d(); ++i) tcount_ *= ring.ctx().p;
    idx_.assign(size_t(l_), 0);
    idx_[0] = 1;  // digit 0 ranges over nonzero T_i
    digits_.assign(size_t(l_), PolyFp::zero(ring.ctx().p));
}

PolyFp DeltaEnumerator::nth_t(uint64_t n) const {
    // index decoded with coefficient 0 most significant
    uint32_t p = ring_->ctx().p;
    uint32_t d = ring_->d();
    std::vector<uint32_t> c(d, 0);
    for (uint32_t i = d; i-- > 0;) {
        c[i] = uint32_t(n % p);
        n /= p;
    }
    return PolyFp(p, std::move(c));
}

bool DeltaEnumerator::next() {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
    } else {
        // highest index varies fastest; digit 0 stays nonzero
        size_t pos = idx_.size() - 1;
        while (true) {
            ++idx_[pos];
            if (idx_[pos] < tcount_) break;
            if (pos == 0) {
                done_ = true;
                return false;
            }
            idx_[pos] = 0;
            --pos;
        }
    }
    for (size_t j = 0; j < idx_.size(); ++j) digits_[j] = nth_t(idx_[j]);
    return true;
}

ChainElem DeltaEnumerator::element() const { return reconstruct(*ring_, digits_); }

uint64_t DeltaEnumerator::count(uint32_t p, uint32_t d, uint64_t l) {
    uint64_t pd = 1;
    for (uint32_t i = 0; i < d; ++i) pd *= p;
    uint64_t c = pd - 1;
    for (uint64_t j = 1; j < l; ++j) c *= pd;
    return c;
}

std::string to_text(const ChainElem& a) {
    std::ostringstream os;
    os << (a.ring().variant() == Variant::plain ? "R[" : "Rhat[")
       << (a.ring().index() + 1) << "]:" << to_text(a.rep());
    return os.str();
}

}  // namespace chainring
