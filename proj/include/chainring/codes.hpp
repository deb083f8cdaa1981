#ifndef CHAINRING_CODES_HPP
#define CHAINRING_CODES_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "chainring/crt.hpp"
#include "chainring/ideals.hpp"

namespace chainring {

/// One constacyclic code in canonical form: an IdealSpec per factor.
/// Plain-variant codes live in A + uA, hat-variant codes in Ahat + uAhat.
struct CodeSpec {
    Variant variant = Variant::plain;
    std::vector<IdealSpec> comps;

    bool operator==(const CodeSpec& o) const {
        return variant == o.variant && comps == o.comps;
    }
    bool operator!=(const CodeSpec& o) const { return !(*this == o); }
};

/// Length-N vector of a + u b symbols.
using Symbol = std::pair<uint64_t, uint64_t>;
using Codeword = std::vector<Symbol>;
using CodewordSet = std::set<Codeword>;

/// |C| = prod |C_i|, exact.
bigint code_cardinality(const System& sys, const CodeSpec& code);

/// The exact codeword set, built as the module span of
/// { x^j theta_i g : g generator of C_i, 0 <= j < N }. Throws CapExceeded
/// when code_cardinality exceeds cap.
CodewordSet materialize(const System& sys, const CodeSpec& code,
                        uint64_t cap = uint64_t(1) << 20);

/// Set-level check: closed under the gamma-twisted shift, all scalar
/// multiples and pairwise sums.
bool is_constacyclic(const CodewordSet& S, Symbol gamma, const Modulus& mod);

/// Euclidean inner product, (a+ub)(c+ud) = ac + u(ad + bc) summed.
Symbol inner_product(const Codeword& a, const Codeword& b, const Modulus& mod);

/// Codeword <-> ambient element conversions.
Codeword to_codeword(const AmbientElem& e);
AmbientElem to_ambient(const System& sys, Variant v, const Codeword& w);

std::string to_text(const Codeword& w);

/// The dual of component i: generators built per the eight-case table
/// (hat-twists computed via mu_map), then normalized. Returns the spec of
/// D_{mu(i)}, an ideal of the opposite-variant ring at index mu(i).
IdealSpec dual_component(const System& sys, Variant v, size_t i, const IdealSpec& spec);

/// C^perp as a CodeSpec over the opposite variant.
CodeSpec dual_code(const System& sys, const CodeSpec& code);

/// True when (1 + p w)^2 = 1, i.e. p = 2 and the self-dual machinery
/// applies (both ring variants coincide).
bool selfdual_compatible(const Context& ctx);

/// Per-component self-duality conditions: the pairing table on paired
/// blocks, six explicit conditions on fixed blocks (congruences checked
/// with in_pi_power). Throws NotSelfDualCompatible if the context fails
/// the (p, w) precondition.
bool is_self_dual(const System& sys, const CodeSpec& code);

/// All fixed-block candidates for factor i <= lambda, deterministic order.
std::vector<IdealSpec> selfdual_fixed_candidates(const System& sys, size_t i);

/// Number of self-dual codes: product of fixed-block candidate counts and
/// one full ideal count per factor pair; no codewords are materialized.
/// jobs > 1 computes the per-block candidate lists in parallel.
bigint count_self_dual(const System& sys, unsigned jobs = 1);

/// Streams every self-dual CodeSpec in deterministic order; returns the
/// count emitted. jobs only parallelizes the up-front candidate filtering.
uint64_t enumerate_self_dual(const System& sys,
                             const std::function<bool(const CodeSpec&)>& sink,
                             unsigned jobs = 1);

}  // namespace chainring

#endif
