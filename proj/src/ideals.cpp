#include "chainring/ideals.hpp"

#include <sstream>

namespace chainring {

const char* to_string(IdealCase c) {
    switch (c) {
        case IdealCase::I: return "I";
        case IdealCase::II: return "II";
        case IdealCase::IIIa: return "III-a";
        case IdealCase::IIIb: return "III-b";
        case IdealCase::IV: return "IV";
        case IdealCase::V: return "V";
    }
    return "?";
}

bool IdealSpec::operator==(const IdealSpec& o) const {
    if (c != o.c) return false;
    switch (c) {
        case IdealCase::I: return l == o.l;
        case IdealCase::II: return m == o.m;
        case IdealCase::IIIa:
        case IdealCase::IIIb: return l == o.l && t == o.t && h == o.h;
        case IdealCase::IV: return l == o.l && m == o.m;
        case IdealCase::V: return l == o.l && m == o.m && t == o.t && h == o.h;
    }
    return false;
}

std::string to_text(const IdealSpec& spec) {
    std::ostringstream os;
    os << to_string(spec.c) << '(';
    auto h_text = [&]() {
        std::string s;
        for (size_t i = 0; i < spec.h.size(); ++i) {
            if (i) s += '|';
            s += to_text(spec.h[i]);
        }
        return s;
    };
    switch (spec.c) {
        case IdealCase::I: os << "l=" << spec.l; break;
        case IdealCase::II: os << "m=" << spec.m; break;
        case IdealCase::IIIa:
        case IdealCase::IIIb:
            os << "l=" << spec.l << ",t=" << spec.t << ",h=" << h_text();
            break;
        case IdealCase::IV: os << "l=" << spec.l << ",m=" << spec.m; break;
        case IdealCase::V:
            os << "l=" << spec.l << ",m=" << spec.m << ",t=" << spec.t
               << ",h=" << h_text();
            break;
    }
    os << ')';
    return os.str();
}

uint64_t h_len(const IdealSpec& spec, uint64_t nu) {
    switch (spec.c) {
        case IdealCase::IIIa: return spec.l - spec.t;
        case IdealCase::IIIb: return nu - spec.l;
        case IdealCase::V: return spec.m - spec.t;
        default: return 0;
    }
}

void validate_spec(const IdealSpec& spec, const ChainRing& ring) {
    const uint64_t nu = ring.nu();
    auto fail = [&](const char* why) {
        throw SpecOutOfRange(std::string(why) + " in " + to_text(spec));
    };
    switch (spec.c) {
        case IdealCase::I:
            if (spec.l > nu) fail("l out of range");
            break;
        case IdealCase::II:
            if (spec.m + 1 > nu) fail("m out of range");
            break;
        case IdealCase::IIIa:
            if (!(spec.t < spec.l && spec.l <= nu - 1)) fail("need t < l <= nu-1");
            if (spec.t + nu < 2 * spec.l) fail("need t >= 2l - nu");
            break;
        case IdealCase::IIIb:
            if (!(spec.t < spec.l && spec.l <= nu - 1)) fail("need t < l <= nu-1");
            if (spec.t + nu >= 2 * spec.l) fail("need t < 2l - nu");
            break;
        case IdealCase::IV:
            if (!(spec.m < spec.l && spec.l <= nu - 1)) fail("need m < l <= nu-1");
            break;
        case IdealCase::V:
            if (!(spec.t < spec.m && spec.m < spec.l && spec.l <= nu - 1))
                fail("need t < m < l <= nu-1");
            if (spec.l + spec.m + 1 > nu + spec.t) fail("need l+m <= nu+t-1");
            break;
    }
    uint64_t want = h_len(spec, nu);
    if (spec.h.size() != want) fail("h has wrong digit count");
    if (want) {
        if (spec.h[0].is_zero()) fail("h digit 0 must be nonzero");
        for (const auto& d : spec.h) {
            if (d.p() != ring.ctx().p) fail("h digit over wrong prime");
            if (!d.is_zero() && *d.degree() >= ring.d()) fail("h digit degree too big");
        }
    }
}

std::vector<std::pair<ChainElem, ChainElem>> generators(const IdealSpec& spec,
                                                        const ChainRing& ring) {
    validate_spec(spec, ring);
    ChainElem zero = ring.zero();
    ChainElem pi = ring.pi();
    switch (spec.c) {
        case IdealCase::I:
            return {{pi.pow(spec.l), zero}};
        case IdealCase::II:
            return {{zero, pi.pow(spec.m)}};
        case IdealCase::IIIa:
        case IdealCase::IIIb: {
            ChainElem h = reconstruct(ring, spec.h);
            return {{pi.pow(spec.l), pi.pow(spec.t) * h}};
        }
        case IdealCase::IV:
            return {{pi.pow(spec.l), zero}, {zero, pi.pow(spec.m)}};
        case IdealCase::V: {
            ChainElem h = reconstruct(ring, spec.h);
            return {{pi.pow(spec.l), pi.pow(spec.t) * h}, {zero, pi.pow(spec.m)}};
        }
    }
    throw InternalInconsistency("generators: bad case");
}

bigint cardinality(const IdealSpec& spec, uint32_t p, uint32_t d, uint64_t nu) {
    auto ppow = [&](uint64_t e) {
        bigint r = 1;
        for (uint64_t i = 0; i < e; ++i) r *= p;
        return r;
    };
    switch (spec.c) {
        case IdealCase::I: return ppow(2 * d * (nu - spec.l));
        case IdealCase::II: return ppow(d * (nu - spec.m));
        case IdealCase::IIIa: return ppow(2 * d * (nu - spec.l));
        case IdealCase::IIIb: return ppow(d * (nu - spec.t));
        case IdealCase::IV:
        case IdealCase::V: return ppow(d * (2 * nu - (spec.l + spec.m)));
    }
    throw InternalInconsistency("cardinality: bad case");
}

// ---------- enumeration ----------

IdealEnumerator::IdealEnumerator(const ChainRing& ring)
    : ring_(&ring), nu_(ring.nu()) {}

bool IdealEnumerator::next() {
    while (stage_ <= 5) {
        if (stage_fresh_) {
            stage_fresh_ = false;
            if (advance_stage()) return true;
            ++stage_;
            stage_fresh_ = true;
            continue;
        }
        if (advance_within()) return true;
        ++stage_;
        stage_fresh_ = true;
    }
    return false;
}

// first spec of the current stage, or false when the stage is empty
bool IdealEnumerator::advance_stage() {
    delta_.reset();
    switch (stage_) {
        case 0:
            cur_ = IdealSpec{IdealCase::I, 0, 0, 0, {}};
            return true;
        case 1:
            if (nu_ < 1) return false;
            cur_ = IdealSpec{IdealCase::II, 0, 0, 0, {}};
            return true;
        case 2: {  // III-a: l from 1, t from max(0, 2l-nu)
            for (uint64_t l = 1; l + 1 <= nu_; ++l) {
                uint64_t t0 = 2 * l > nu_ ? 2 * l - nu_ : 0;
                if (t0 >= l) continue;
                delta_ = std::make_unique<DeltaEnumerator>(*ring_, l - t0);
                delta_->next();
                cur_ = IdealSpec{IdealCase::IIIa, l, t0, 0, delta_->digits()};
                return true;
            }
            return false;
        }
        case 3: {  // III-b: l with 2l > nu, t < 2l - nu
            for (uint64_t l = 1; l + 1 <= nu_; ++l) {
                if (2 * l <= nu_) continue;
                delta_ = std::make_unique<DeltaEnumerator>(*ring_, nu_ - l);
                delta_->next();
                cur_ = IdealSpec{IdealCase::IIIb, l, 0, 0, delta_->digits()};
                return true;
            }
            return false;
        }
        case 4:
            if (nu_ < 2) return false;
            cur_ = IdealSpec{IdealCase::IV, 1, 0, 0, {}};
            return true;
        case 5: {  // V: lex on (l, m, t), then h
            for (uint64_t l = 2; l + 1 <= nu_; ++l)
                for (uint64_t m = 1; m < l; ++m)
                    for (uint64_t t = 0; t < m; ++t) {
                        if (l + m + 1 > nu_ + t) continue;
                        delta_ = std::make_unique<DeltaEnumerator>(*ring_, m - t);
                        delta_->next();
                        cur_ = IdealSpec{IdealCase::V, l, t, m, delta_->digits()};
                        return true;
                    }
            return false;
        }
        default:
            return false;
    }
}

bool IdealEnumerator::advance_within() {
    switch (stage_) {
        case 0:
            if (cur_.l >= nu_) return false;
            ++cur_.l;
            return true;
        case 1:
            if (cur_.m + 1 >= nu_) return false;
            ++cur_.m;
            return true;
        case 2: {
            if (delta_ && delta_->next()) {
                cur_.h = delta_->digits();
                return true;
            }
            uint64_t l = cur_.l, t = cur_.t;
            while (true) {
                ++t;
                if (t >= l) {
                    ++l;
                    if (l + 1 > nu_) return false;
                    t = 2 * l > nu_ ? 2 * l - nu_ : 0;
                    if (t >= l) continue;
                }
                delta_ = std::make_unique<DeltaEnumerator>(*ring_, l - t);
                delta_->next();
                cur_ = IdealSpec{IdealCase::IIIa, l, t, 0, delta_->digits()};
                return true;
            }
        }
        case 3: {
            if (delta_ && delta_->next()) {
                cur_.h = delta_->digits();
                return true;
            }
            uint64_t l = cur_.l, t = cur_.t;
            while (true) {
                ++t;
                if (2 * l <= nu_ || t + nu_ >= 2 * l) {
                    ++l;
                    if (l + 1 > nu_) return false;
                    if (2 * l <= nu_) continue;
                    t = 0;
                }
                delta_ = std::make_unique<DeltaEnumerator>(*ring_, nu_ - l);
                delta_->next();
                cur_ = IdealSpec{IdealCase::IIIb, l, t, 0, delta_->digits()};
                return true;
            }
        }
        case 4: {
            uint64_t l = cur_.l, m = cur_.m;
            ++m;
            if (m >= l) {
                ++l;
                m = 0;
            }
            if (l + 1 > nu_) return false;
            cur_ = IdealSpec{IdealCase::IV, l, 0, m, {}};
            return true;
        }
        case 5: {
            if (delta_ && delta_->next()) {
                cur_.h = delta_->digits();
                return true;
            }
            uint64_t l = cur_.l, m = cur_.m, t = cur_.t + 1;
            while (true) {
                if (t >= m) {
                    ++m;
                    t = 0;
                    if (m >= l) {
                        ++l;
                        m = 1;
                        if (l + 1 > nu_) return false;
                    }
                    continue;
                }
                if (l + m + 1 > nu_ + t) {
                    ++t;
                    continue;
                }
                delta_ = std::make_unique<DeltaEnumerator>(*ring_, m - t);
                delta_->next();
                cur_ = IdealSpec{IdealCase::V, l, t, m, delta_->digits()};
                return true;
            }
        }
        default:
            return false;
    }
}

// ---------- counting ----------

namespace {
bigint ppow_big(uint32_t p, uint64_t e) {
    bigint r = 1;
    for (uint64_t i = 0; i < e; ++i) r *= p;
    return r;
}
}  // namespace

bigint omega(uint32_t p, uint32_t d, uint64_t m) {
    bigint q = ppow_big(p, d);  // p^{d}
    if (m % 2 == 0) {
        bigint acc = (ppow_big(p, d * (m / 2 + 1)) + ppow_big(p, d * (m / 2)) - 2) / (q - 1);
        acc -= bigint(m + 1);
        bigint s = 0;
        for (uint64_t j = m / 2 + 1; j + 1 <= m; ++j)
            s += bigint(2 * j - m) * ppow_big(p, d * (m - j - 1));
        acc += (q - 1) * s;
        return acc;
    }
    bigint acc = 2 * (ppow_big(p, d * ((m + 1) / 2)) - 1) / (q - 1);
    acc -= bigint(m + 1);
    bigint s = 0;
    for (uint64_t j = (m + 1) / 2; j + 1 <= m; ++j)
        s += bigint(2 * j - m) * ppow_big(p, d * (m - j - 1));
    acc += (q - 1) * s;
    return acc;
}

bigint omega_direct(uint32_t p, uint32_t d, uint64_t m) {
    // literal sum of |Delta| sizes over the case-III parameter region
    bigint q = ppow_big(p, d);
    bigint acc = 0;
    for (uint64_t l = 1; l + 1 <= m; ++l)
        for (uint64_t t = 0; t < l; ++t) {
            uint64_t len = (t + m >= 2 * l) ? (l - t) : (m - l);
            acc += (q - 1) * ppow_big(p, d * (len - 1));
        }
    return acc;
}

bigint psi(uint32_t p, uint32_t d, uint64_t m) {
    if (m <= 3) return 0;
    if (m == 4) return 1;
    bigint acc = psi(p, d, m - 1);
    for (uint64_t j = 1; j + 1 <= m / 2; ++j)
        acc += bigint(m - 2 * j - 1) * ppow_big(p, d * (j - 1));
    return acc;
}

bigint psi_direct(uint32_t p, uint32_t d, uint64_t m) {
    // triple sum over 0 <= t < m_i < l_i <= m-1 with l_i + m_i <= m + t - 1
    bigint acc = 0;
    if (m < 4) return 0;
    for (uint64_t t = 0; t + 4 <= m; ++t)
        for (uint64_t mi = t + 1; mi + 1 <= m; ++mi)
            for (uint64_t li = mi + 1; li + 1 <= m && li + mi + 1 <= m + t; ++li)
                acc += ppow_big(p, d * (mi - t - 1));
    return acc;
}

bigint count_ideals(uint32_t p, uint32_t d, uint64_t m) {
    if (m < 1) throw InvalidInput("count_ideals: m must be >= 1");
    bigint total = 0;
    if (m % 2 == 0) {
        uint64_t lam = m / 2;
        for (uint64_t j = 0; j <= lam; ++j)
            total += bigint(1 + 4 * j) * ppow_big(p, (lam - j) * d);
    } else {
        uint64_t lam = (m - 1) / 2;
        for (uint64_t j = 0; j <= lam; ++j)
            total += bigint(3 + 4 * j) * ppow_big(p, (lam - j) * d);
    }
    // cross-check against the structural count
    bigint structural = 1 + bigint(m) * (m + 3) / 2 + omega(p, d, m) +
                        (ppow_big(p, d) - 1) * psi(p, d, m);
    if (total != structural)
        throw InternalInconsistency("count_ideals: closed form != structural count");
    return total;
}

// ---------- normalization ----------

namespace {

/// Truncate the digit vector of an element to len digits (the digits are
/// exactly the pi-adic digits of h).
std::vector<PolyFp> truncated_digits(const ChainRing& ring, const ChainElem& h,
                                     uint64_t len) {
    auto d = ring.digits(h);
    d.resize(size_t(len), PolyFp::zero(ring.ctx().p));
    return d;
}

/// Divide by pi^t via digit shift: requires val(a) >= t.
ChainElem shift_down(const ChainRing& ring, const ChainElem& a, uint64_t t) {
    auto d = ring.digits(a);
    std::vector<PolyFp> shifted(d.begin() + std::min<size_t>(size_t(t), d.size()),
                                d.end());
    return reconstruct(ring, shifted);
}

}  // namespace

IdealSpec normalize_ideal(const std::vector<std::pair<ChainElem, ChainElem>>& gens,
                          const ChainRing& ring) {
    if (gens.empty()) throw NotAnIdealForm("empty generator list");
    const uint64_t nu = ring.nu();
    for (const auto& g : gens)
        if (!g.first.ring().same_ring(ring) || !g.second.ring().same_ring(ring))
            throw NotAnIdealForm("generator from a different ring");

    // Reduce to the form < pi^l + u b', u c >: pick the a-part of smallest
    // valuation, scale it to pi^l exactly, and fold every other generator
    // into the u-only part.
    size_t main_idx = SIZE_MAX;
    uint64_t l = nu;
    for (size_t i = 0; i < gens.size(); ++i) {
        uint64_t v = ring.val_pi(gens[i].first);
        if (v < l) {
            l = v;
            main_idx = i;
        }
    }
    uint64_t m_val = nu;  // valuation of the u-only ideal part
    ChainElem bprime = ring.zero();
    if (main_idx == SIZE_MAX) {
        // no a-part at all: ideal is < u pi^m >
        for (const auto& g : gens) m_val = std::min(m_val, ring.val_pi(g.second));
        if (m_val >= nu) return IdealSpec::zero_ideal(nu);
        return IdealSpec{IdealCase::II, 0, 0, m_val, {}};
    }
    {
        const auto& g = gens[main_idx];
        // a = pi^l * unit; multiply the whole generator by unit^{-1}
        ChainElem unit = shift_down(ring, g.first, l);
        ChainElem uinv = ring.inverse(unit);
        bprime = g.second * uinv;
        // post-check: a * uinv == pi^l
        if (!(g.first * uinv == ring.pi().pow(l)))
            throw InternalInconsistency("normalize_ideal: unit scaling failed");
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i == main_idx) continue;
        const auto& g = gens[i];
        uint64_t vi = ring.val_pi(g.first);
        if (vi >= nu) {
            m_val = std::min(m_val, ring.val_pi(g.second));
            continue;
        }
        // subtract (unit_i pi^{vi-l}) * (pi^l + u b') to zero the a-part
        ChainElem unit_i = shift_down(ring, g.first, vi);
        ChainElem factor = unit_i * ring.pi().pow(vi - l);
        ChainElem urest = g.second - factor * bprime;
        m_val = std::min(m_val, ring.val_pi(urest));
    }

    uint64_t t = ring.val_pi(bprime);
    // rho(J : u) = < pi^l, pi^{nu-l} b', c > = pi^min(l, nu-l+t, val c)
    uint64_t m_colon = std::min({l, nu - l + std::min(t, nu), m_val});

    if (m_colon >= l) {
        // single generator; t >= l collapses the u-part entirely
        if (t >= l) {
            return IdealSpec{IdealCase::I, l, 0, 0, {}};
        }
        ChainElem h = shift_down(ring, bprime, t);
        // t >= 2l - nu is automatic here
        return IdealSpec{IdealCase::IIIa, l, t, 0, truncated_digits(ring, h, l - t)};
    }
    // two-generator shape with m = m_colon < l
    if (t >= m_colon) {
        return IdealSpec{IdealCase::IV, l, 0, m_colon, {}};
    }
    ChainElem h = shift_down(ring, bprime, t);
    if (m_colon == nu - l + t) {
        // the u pi^m generator is redundant: single generator, case III-b
        return IdealSpec{IdealCase::IIIb, l, t, 0, truncated_digits(ring, h, nu - l)};
    }
    return IdealSpec{IdealCase::V, l, t, m_colon,
                     truncated_digits(ring, h, m_colon - t)};
}

}  // namespace chainring
