#pragma once

#include <string>
#include <vector>

#include "dwa/algebra.hpp"
#include "dwa/rewrite.hpp"

namespace dwa {

// Generator-level rules of the degree-2 derivation, fixed by the flavor:
//   x        -> x^2
//   E(d)     -> E(d)E(1) - (d+1)E(d+1), the last term dropped at d = label
//   psi (bb) -> -x_j psi - psi x_{j+1}
//   psi (red s left)  -> s psi x_{j+1}
//   psi (black, red s right) -> psi E(1)_{j+1}   (zero in W flavor)
//   e(i)     -> 0
// Extended to elements by the Leibniz rule on the free layered form;
// rewriting is applied only afterwards.
class DerivationTable {
public:
    DerivationTable(Flavor flavor, PrimeConfig cfg)
        : flavor_(std::move(flavor)), cfg_(cfg) {}

    const Flavor& flavor() const { return flavor_; }
    const PrimeConfig& prime() const { return cfg_; }

    // The image of a single layer in its color context, as raw windows.
    struct WindowTerm {
        std::vector<Layer> layers;
        int coeff;
    };
    std::vector<WindowTerm> layer_image(const Layer& layer, const StrandSeq& context) const;

private:
    Flavor flavor_;
    PrimeConfig cfg_;
};

Element derive(const DerivationTable& table, const Element& a);
Element derive_iterate(const DerivationTable& table, const Element& a, int k);

struct CheckItem {
    std::string id;
    std::uint32_t p;
    std::string status;  // "proven" | "unknown"
    std::size_t trace;   // rule applications spent in the reduction
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_proven = true;

    void add(std::string id, std::uint32_t p, Proof proof, std::size_t trace) {
        bool ok = proof == Proof::proven;
        items.push_back({std::move(id), p, ok ? "proven" : "unknown", trace});
        all_proven = all_proven && ok;
    }
};

// All single-layer generators of the flavor, over every bottom sequence.
std::vector<std::pair<std::string, Element>> flavor_generators(const Flavor& flavor,
                                                               const PrimeConfig& cfg);

// For every generator g: prove_zero(d^p(g)).
CheckReport check_p_nilpotent_generators(const DerivationTable& table, int budget = 0);

// For every defining relation r: prove_zero(d(r)).
CheckReport check_relation_preservation(const DerivationTable& table, int budget = 0);

// d^p(ab) = d^p(a) b + a d^p(b).
bool check_leibniz_power(const DerivationTable& table, const Element& a, const Element& b,
                         int budget = 0);

}  // namespace dwa
