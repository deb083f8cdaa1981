#ifndef CHAINRING_ORACLE_HPP
#define CHAINRING_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chainring/codes.hpp"

namespace chainring {

/// Dense model of R_i + uR_i for brute-force work: every element encoded as
/// an index below p^{2 d nu}, with full addition and multiplication tables.
/// Refuses rings above the bound (default 2^12 elements).
class PairRingTable {
   public:
    explicit PairRingTable(const ChainRing& ring, uint64_t bound = uint64_t(1) << 12);

    const ChainRing& ring() const { return *ring_; }
    uint32_t size() const { return size_; }
    uint32_t encode(const std::pair<ChainElem, ChainElem>& e) const;
    std::pair<ChainElem, ChainElem> decode(uint32_t idx) const;
    uint32_t add(uint32_t a, uint32_t b) const { return add_[size_t(a) * size_ + b]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[size_t(a) * size_ + b]; }

   private:
    const ChainRing* ring_;
    uint32_t size_;
    uint32_t half_;  // |R_i|
    std::vector<uint32_t> add_;
    std::vector<uint32_t> mul_;
    uint32_t encode_elem(const ChainElem& e) const;
    ChainElem decode_elem(uint32_t idx) const;
};

/// Sorted element-index set; the canonical signature of an ideal.
using ElementSet = std::vector<uint32_t>;

/// Smallest subset containing the generators and closed under addition and
/// multiplication by every ring element (= sum of the principal spans).
ElementSet closure(const std::vector<uint32_t>& gens, const PairRingTable& T);

/// Every distinct ideal: all principal spans plus all pairwise sums,
/// verified closed under ideal sum (which proves completeness, since every
/// ideal is a finite sum of principal ones) and intersection.
std::vector<ElementSet> all_ideals_bruteforce(const PairRingTable& T);

/// Exhaustive annihilator of S under the Euclidean inner product over all
/// p^{2sN} vectors. Throws BoundExceeded above 2^24 vectors.
CodewordSet dual_bruteforce(const CodewordSet& S, const System& sys);

/// The oracle battery for one small instance; every line of the report is
/// an independently-computed ground truth matched against the closed forms.
struct VerifyReport {
    struct Line {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Line> lines;
    bool all_pass() const;
};

VerifyReport verify_small_instance(const System& sys, unsigned jobs = 1,
                                   uint64_t cap = uint64_t(1) << 20);

}  // namespace chainring

#endif
