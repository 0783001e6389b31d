#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwa/algebra.hpp"
#include "dwa/derivation.hpp"

namespace dwa {

// The inclusion Phi_{j,a}: D(s,n) -> D(phi_{j,a}(s),n) splitting red j into
// the adjacent pair (s_j - a, a). Generator images follow the four case
// tables; strand positions right of the split shift by one.
struct SplitMap {
    Flavor source;
    Flavor target;
    int j;
    int a;
};

SplitMap make_split_map(const Flavor& source, int j, int a);
Element split_apply(const SplitMap& map, const PrimeConfig& cfg, const Element& elem);

// Per-generator measurement of Phi o d = d o Phi (only the E cases are
// computed in the source text; x and psi are measured, not asserted).
CheckReport split_commutes_with_derivation(const SplitMap& map, const PrimeConfig& cfg,
                                           int budget = 0);

// Relation images under Phi prove zero (the map is an algebra homomorphism).
CheckReport split_preserves_relations(const SplitMap& map, const PrimeConfig& cfg,
                                      int budget = 0);

// D(s,n) ->> W_n^s: kill every E-dot and every diagram with a leftmost black.
struct QuotientMap {
    Flavor source;  // deformed
    Flavor target;  // cyclotomic
};

QuotientMap make_quotient_map(const Flavor& source);
Element quotient_apply(const QuotientMap& q, const Element& elem);

// q(d_D(g)) = d_W(q(g)) on every generator, and d_D(I) stays inside I.
CheckReport quotient_intertwines(const Flavor& source, const PrimeConfig& cfg, int budget = 0);

// Splitter bimodules over the adjacent pair (j, j+1):
//   merge-on-top    (triangle up):  the e^_j block of D(s,n) seen from above,
//                                   left action of D(s^j,n) through Phi,
//                                   degree shift -s_j * s_{j+1};
//   merge-on-bottom (triangle down): the mirror block, right action through Phi,
//                                   no printed degree shift.
class SplitterBimodule {
public:
    enum class Side { merge_top, merge_bottom };

    SplitterBimodule(Flavor base, int j, Side side);

    const Flavor& base() const { return base_; }      // D(s,n)
    const Flavor& merged() const { return merged_; }  // D(s^j,n)
    int j() const { return j_; }
    Side side() const { return side_; }
    int degree_shift() const { return shift_; }

    // Sum of the block idempotents e^_j.
    Element block_idempotent(const PrimeConfig& cfg) const;

    // Projection of a D(s,n) element to the block (top in Seq^j for merge_top,
    // bottom in Seq^j for merge_bottom).
    Element project(const Element& elem) const;
    bool in_block(const Element& elem) const;

private:
    Flavor base_;
    Flavor merged_;
    int j_;
    Side side_;
    int shift_;
};

// outer . m . inner; the merged-algebra side acts through Phi_{j, s_{j+1}}.
// For merge_top: outer is D(s^j,n), inner is D(s,n); mirrored for merge_bottom.
Element bimodule_act(const SplitterBimodule& bm, const PrimeConfig& cfg, const Element& outer,
                     const Element& m, const Element& inner);

// d on the underlying D(s,n) element; block preservation makes this well-typed.
Element bimodule_deriv(const SplitterBimodule& bm, const PrimeConfig& cfg, const Element& m);

// Degree of a homogeneous bimodule element, including the grading shift.
std::optional<int> bimodule_degree(const SplitterBimodule& bm, const Element& m);

// The two expansions of d(E(i) x 1) = d(1 x sum E(a)E(b)) agree on the block,
// for 1 <= i <= s_j + s_{j+1}; plus p-nilpotency on block generators.
CheckReport bimodule_compatibility(const SplitterBimodule& bm, const PrimeConfig& cfg,
                                   int budget = 0);
CheckReport bimodule_p_nilpotency(const SplitterBimodule& bm, const PrimeConfig& cfg,
                                  int budget = 0);

}  // namespace dwa
