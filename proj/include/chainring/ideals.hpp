#ifndef CHAINRING_IDEALS_HPP
#define CHAINRING_IDEALS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "chainring/chain_ring.hpp"

namespace chainring {

using bigint = boost::multiprecision::cpp_int;

/// Tags for the five-case classification of ideals of R_i + uR_i. Case III
/// is split by the domain of h: IIIa has t >= 2l - nu and h in Delta_{l-t};
/// IIIb has t < 2l - nu and h in Delta_{nu-l} (different cardinality).
enum class IdealCase : uint8_t { I, II, IIIa, IIIb, IV, V };

const char* to_string(IdealCase c);

/// Canonical parametrization of one ideal of R_i + uR_i:
///   I:    <pi^l>,                       0 <= l <= nu
///   II:   <u pi^m>,                     0 <= m <= nu-1
///   IIIa: <pi^l + u pi^t h>,            0 <= t < l <= nu-1, t >= 2l-nu,
///         h in Delta_{l-t}
///   IIIb: same generator,               t < 2l-nu, h in Delta_{nu-l}
///   IV:   <pi^l, u pi^m>,               0 <= m < l <= nu-1
///   V:    <pi^l + u pi^t h, u pi^m>,    0 <= t < m < l <= nu-1,
///         l + m <= nu + t - 1, h in Delta_{m-t}
/// h is stored as its truncated digit vector (digit 0 nonzero).
struct IdealSpec {
    IdealCase c = IdealCase::I;
    uint64_t l = 0;
    uint64_t t = 0;
    uint64_t m = 0;
    std::vector<PolyFp> h;

    bool operator==(const IdealSpec& o) const;
    bool operator!=(const IdealSpec& o) const { return !(*this == o); }

    static IdealSpec whole_ring() { return IdealSpec{IdealCase::I, 0, 0, 0, {}}; }
    static IdealSpec zero_ideal(uint64_t nu) { return IdealSpec{IdealCase::I, nu, 0, 0, {}}; }
};

/// Stable text form, e.g. "I(l=3)", "III-a(l=3,t=1,h=1)"; h digits are
/// printed in polynomial text format, joined by '|'.
std::string to_text(const IdealSpec& spec);

/// Expected digit-vector length of h for the case (0 when h is absent).
uint64_t h_len(const IdealSpec& spec, uint64_t nu);

/// Throws SpecOutOfRange unless every parameter sits in its table row range
/// and h has the right shape for the ring.
void validate_spec(const IdealSpec& spec, const ChainRing& ring);

/// The one or two generators as (a, b) pairs meaning a + u b.
std::vector<std::pair<ChainElem, ChainElem>> generators(const IdealSpec& spec,
                                                        const ChainRing& ring);

/// |C_i| per the classification table.
bigint cardinality(const IdealSpec& spec, uint32_t p, uint32_t d, uint64_t nu);

/// Streams every IdealSpec of the ring exactly once: case order
/// I, II, III-a, III-b, IV, V; parameters lexicographic; h in Delta order.
class IdealEnumerator {
   public:
    explicit IdealEnumerator(const ChainRing& ring);
    bool next();
    const IdealSpec& spec() const { return cur_; }

   private:
    const ChainRing* ring_;
    uint64_t nu_;
    IdealSpec cur_;
    int stage_ = 0;  // 0..5 = cases, 6 = done
    bool stage_fresh_ = true;
    std::unique_ptr<DeltaEnumerator> delta_;
    bool advance_stage();
    bool advance_within();
};

/// Closed-form ideal count N_{(p,d,m)} (m = p^k s), cross-checked against
/// 1 + m(m+3)/2 + Omega + (p^d - 1) Psi at every call.
bigint count_ideals(uint32_t p, uint32_t d, uint64_t m);

/// Case III count: closed form (even/odd branches) and the literal
/// per-(l,t) sum of |Delta| sizes.
bigint omega(uint32_t p, uint32_t d, uint64_t m);
bigint omega_direct(uint32_t p, uint32_t d, uint64_t m);

/// Case V count divided by (p^d - 1): recurrence and the literal triple sum.
bigint psi(uint32_t p, uint32_t d, uint64_t m);
bigint psi_direct(uint32_t p, uint32_t d, uint64_t m);

/// Recover the canonical IdealSpec from an arbitrary finite generator list:
/// reduce to <pi^l + u b', u pi^m> form via valuations, then extract (t, h)
/// digits with the case-appropriate truncation.
IdealSpec normalize_ideal(const std::vector<std::pair<ChainElem, ChainElem>>& gens,
                          const ChainRing& ring);

}  // namespace chainring

#endif
