#pragma once

#include <cstdint>
#include <string>

#include "dwa/algebra.hpp"

namespace dwa {

// Result of reducing an element to the PBW-style shape: per monomial, the
// canonical reduced crossing word on top of a sorted dot pile on top of the
// bottom idempotent.
struct NormalFormReport {
    Element input;
    Element reduced;
    std::size_t steps = 0;  // relation applications along the way
    // Every monomial reached the target shape. Equality of normal forms is
    // still only a sufficient test: linear independence of the shapes is not
    // established here, so equality questions route through oracle_equal.
    bool canonical = true;
};

enum class Proof { proven, unknown };

struct OracleCaps {
    int max_degree = 12;
    int max_strands = 4;
    std::uint32_t max_p = 5;
    std::size_t max_stack_len = 9;   // pre-form length cap for ideal rows
    std::size_t max_rows = 60000;    // saturation budget
};

class Rewriter {
public:
    Rewriter(Flavor flavor, PrimeConfig cfg) : flavor_(std::move(flavor)), cfg_(cfg) {}

    const Flavor& flavor() const { return flavor_; }

    // Oriented rewriting to a fixed point; sound by construction (each step
    // applies a defining relation), terminating (crossing count, then dot
    // height, strictly decrease through the recursion). When trace is given,
    // one line per rule application: rule name, window position, term count.
    NormalFormReport reduce(const Element& a, std::vector<std::string>* trace = nullptr) const;

    // "proven" guarantees a = 0 in the algebra; "unknown" implies nothing.
    // budget bounds the number of exploratory braid-orientation variants
    // tried after plain reduction fails.
    Proof prove_zero(const Element& a, int budget = 0) const;

    // Independent equality decision by exact linear algebra over F_p:
    // membership of a - b in the bounded-length slice of the relation ideal.
    // Never calls reduce. Throws resource_error when the caps are exceeded.
    bool oracle_equal(const Element& a, const Element& b, const OracleCaps& caps = {}) const;

private:
    Flavor flavor_;
    PrimeConfig cfg_;
};

}  // namespace dwa
