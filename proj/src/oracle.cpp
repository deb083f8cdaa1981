#include "chainring/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <sstream>

namespace chainring {

PairRingTable::PairRingTable(const ChainRing& ring, uint64_t bound) : ring_(&ring) {
    uint64_t half = 1;
    const uint64_t ps = ring.ctx().mod.ps();
    for (size_t i = 0; i < ring.dim(); ++i) {
        half *= ps;
        if (half * half > bound)
            throw BoundExceeded("pair ring larger than brute-force bound");
    }
    half_ = uint32_t(half);
    size_ = uint32_t(half * half);

    add_.resize(size_t(size_) * size_);
    mul_.resize(size_t(size_) * size_);
    std::vector<std::pair<ChainElem, ChainElem>> elems;
    elems.reserve(size_);
    for (uint32_t i = 0; i < size_; ++i) elems.push_back(decode(i));
    for (uint32_t a = 0; a < size_; ++a) {
        for (uint32_t b = 0; b <= a; ++b) {
            const auto& x = elems[a];
            const auto& y = elems[b];
            uint32_t s = encode({x.first + y.first, x.second + y.second});
            // (x1 + u x2)(y1 + u y2) = x1 y1 + u (x1 y2 + x2 y1)
            uint32_t m = encode({x.first * y.first,
                                 x.first * y.second + x.second * y.first});
            add_[size_t(a) * size_ + b] = add_[size_t(b) * size_ + a] = s;
            mul_[size_t(a) * size_ + b] = mul_[size_t(b) * size_ + a] = m;
        }
    }
}

uint32_t PairRingTable::encode_elem(const ChainElem& e) const {
    const uint64_t ps = ring_->ctx().mod.ps();
    uint64_t idx = 0;
    for (size_t i = ring_->dim(); i-- > 0;) idx = idx * ps + e.rep().coeff(i);
    return uint32_t(idx);
}

ChainElem PairRingTable::decode_elem(uint32_t idx) const {
    const uint64_t ps = ring_->ctx().mod.ps();
    std::vector<uint64_t> c(ring_->dim());
    uint64_t v = idx;
    for (size_t i = 0; i < ring_->dim(); ++i) {
        c[i] = v % ps;
        v /= ps;
    }
    return ring_->from_poly(PolyZps(ring_->ctx().mod, std::move(c)));
}

uint32_t PairRingTable::encode(const std::pair<ChainElem, ChainElem>& e) const {
    return encode_elem(e.first) + half_ * encode_elem(e.second);
}

std::pair<ChainElem, ChainElem> PairRingTable::decode(uint32_t idx) const {
    return {decode_elem(idx % half_), decode_elem(idx / half_)};
}

namespace {

ElementSet from_bits(const std::vector<uint8_t>& bits) {
    ElementSet s;
    for (uint32_t i = 0; i < bits.size(); ++i)
        if (bits[i]) s.push_back(i);
    return s;
}

/// principal span r*g over all ring elements r
std::vector<uint8_t> principal_bits(uint32_t g, const PairRingTable& T) {
    std::vector<uint8_t> bits(T.size(), 0);
    for (uint32_t r = 0; r < T.size(); ++r) bits[T.mul(r, g)] = 1;
    return bits;
}

std::vector<uint8_t> sum_bits(const std::vector<uint8_t>& A,
                              const std::vector<uint8_t>& B, const PairRingTable& T) {
    std::vector<uint8_t> bits(T.size(), 0);
    for (uint32_t a = 0; a < T.size(); ++a) {
        if (!A[a]) continue;
        for (uint32_t b = 0; b < T.size(); ++b)
            if (B[b]) bits[T.add(a, b)] = 1;
    }
    return bits;
}

}  // namespace

ElementSet closure(const std::vector<uint32_t>& gens, const PairRingTable& T) {
    std::vector<uint8_t> acc(T.size(), 0);
    acc[0] = 1;
    for (uint32_t g : gens) acc = sum_bits(acc, principal_bits(g, T), T);
    return from_bits(acc);
}

std::vector<ElementSet> all_ideals_bruteforce(const PairRingTable& T) {
    // distinct principal spans
    std::map<ElementSet, std::vector<uint8_t>> found;
    std::vector<std::vector<uint8_t>> principals;
    for (uint32_t g = 0; g < T.size(); ++g) {
        auto bits = principal_bits(g, T);
        auto key = from_bits(bits);
        if (found.emplace(key, bits).second) principals.push_back(bits);
    }
    // sums of two principal spans (every ideal here is <= 2-generated;
    // the closure-under-sums check below proves nothing was missed)
    size_t np = principals.size();
    for (size_t i = 0; i < np; ++i)
        for (size_t j = i + 1; j < np; ++j) {
            auto bits = sum_bits(principals[i], principals[j], T);
            found.emplace(from_bits(bits), bits);
        }
    // closed under pairwise ideal sums?
    std::vector<std::pair<ElementSet, std::vector<uint8_t>>> list(found.begin(),
                                                                  found.end());
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j) {
            auto bits = sum_bits(list[i].second, list[j].second, T);
            if (!found.count(from_bits(bits)))
                throw InternalInconsistency(
                    "all_ideals_bruteforce: collection not closed under sums");
        }
    // and under intersections (sanity)
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j) {
            std::vector<uint8_t> bits(T.size(), 0);
            for (uint32_t e = 0; e < T.size(); ++e)
                bits[e] = list[i].second[e] && list[j].second[e];
            if (!found.count(from_bits(bits)))
                throw InternalInconsistency(
                    "all_ideals_bruteforce: collection not closed under intersection");
        }
    std::vector<ElementSet> out;
    out.reserve(found.size());
    for (auto& kv : found) out.push_back(kv.first);
    return out;
}

CodewordSet dual_bruteforce(const CodewordSet& S, const System& sys) {
    const Context& ctx = sys.ctx();
    const Modulus& mod = ctx.mod;
    const size_t N = size_t(ctx.N);
    // |alphabet|^N = p^{2 s N}
    double log2size = 2.0 * ctx.s * N * std::log2(double(ctx.p));
    if (log2size > 24.0)
        throw BoundExceeded("ambient space larger than 2^24 vectors");
    uint64_t total = 1;
    for (size_t j = 0; j < 2 * N; ++j) total *= mod.ps();

    CodewordSet out;
    Codeword v(N, {0, 0});
    for (uint64_t it = 0; it < total; ++it) {
        bool ok = true;
        for (const auto& c : S) {
            Symbol ip = inner_product(v, c, mod);
            if (ip.first != 0 || ip.second != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(v);
        // odometer over 2N residues
        for (size_t j = 0; j < N; ++j) {
            if (++v[j].first < mod.ps()) goto next;
            v[j].first = 0;
            if (++v[j].second < mod.ps()) goto next;
            v[j].second = 0;
        }
    next:;
    }
    return out;
}

bool VerifyReport::all_pass() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

VerifyReport verify_small_instance(const System& sys, unsigned jobs,
                                   uint64_t cap) {
    VerifyReport rep;
    const Context& ctx = sys.ctx();
    auto add_line = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.lines.push_back({name, pass, detail});
    };

    // --- ideal classification against exhaustive search, per factor ---
    for (size_t i = 0; i < ctx.r; ++i) {
        const ChainRing& R = sys.ring(Variant::plain, i);
        PairRingTable T(R);
        auto oracle_ideals = all_ideals_bruteforce(T);
        bigint predicted = count_ideals(ctx.p, ctx.degrees[i], ctx.nu());
        {
            std::ostringstream d;
            d << "found " << oracle_ideals.size() << ", closed form " << predicted;
            add_line("ideal count, factor " + std::to_string(i + 1),
                     bigint(oracle_ideals.size()) == predicted, d.str());
        }
        // bijection: every enumerated spec closes to a distinct oracle ideal
        std::map<ElementSet, IdealSpec> seen;
        bool sizes_ok = true, distinct_ok = true;
        uint64_t count = 0;
        IdealEnumerator en(R);
        while (en.next()) {
            ++count;
            auto gens = generators(en.spec(), R);
            std::vector<uint32_t> enc;
            for (const auto& g : gens) enc.push_back(T.encode(g));
            ElementSet cl = closure(enc, T);
            if (bigint(cl.size()) !=
                cardinality(en.spec(), ctx.p, ctx.degrees[i], ctx.nu()))
                sizes_ok = false;
            if (!seen.emplace(cl, en.spec()).second) distinct_ok = false;
            // round trip through normalize_ideal
            if (normalize_ideal(gens, R) != en.spec()) distinct_ok = false;
        }
        add_line("per-ideal cardinalities, factor " + std::to_string(i + 1), sizes_ok,
                 "closure size vs formula over " + std::to_string(count) + " specs");
        add_line("spec <-> ideal bijection, factor " + std::to_string(i + 1),
                 distinct_ok && seen.size() == oracle_ideals.size() &&
                     count == oracle_ideals.size(),
                 std::to_string(seen.size()) + " distinct closures of " +
                     std::to_string(count) + " specs");
    }

    // --- dual codes against the exhaustive annihilator, all codes ---
    {
        std::vector<CodeSpec> all_codes;
        {
            CodeSpec cur;
            cur.variant = Variant::plain;
            cur.comps.assign(ctx.r, IdealSpec{});
            std::function<void(size_t)> walk = [&](size_t i) {
                if (i == ctx.r) {
                    all_codes.push_back(cur);
                    return;
                }
                IdealEnumerator en(sys.ring(Variant::plain, i));
                while (en.next()) {
                    cur.comps[i] = en.spec();
                    walk(i + 1);
                }
            };
            walk(0);
        }
        auto check_code = [&](const CodeSpec& code) -> std::pair<bool, bool> {
            CodewordSet C = materialize(sys, code, cap);
            CodewordSet Dset = materialize(sys, dual_code(sys, code), cap);
            CodewordSet brute = dual_bruteforce(C, sys);
            bool dual_ok = Dset == brute;
            bool sd_ok = true;
            if (selfdual_compatible(ctx))
                sd_ok = is_self_dual(sys, code) == (C == brute);
            return {dual_ok, sd_ok};
        };
        bool dual_all = true, sd_all = true;
        if (jobs <= 1) {
            for (const auto& code : all_codes) {
                auto [d, s] = check_code(code);
                dual_all &= d;
                sd_all &= s;
            }
        } else {
            std::vector<std::future<std::pair<bool, bool>>> futs;
            for (const auto& code : all_codes)
                futs.push_back(std::async(std::launch::async, check_code, code));
            for (auto& f : futs) {
                auto [d, s] = f.get();
                dual_all &= d;
                sd_all &= s;
            }
        }
        add_line("dual table vs exhaustive annihilator", dual_all,
                 std::to_string(all_codes.size()) + " codes");
        if (selfdual_compatible(ctx))
            add_line("self-duality test vs set equality", sd_all,
                     std::to_string(all_codes.size()) + " codes");
    }
    return rep;
}

}  // namespace chainring
