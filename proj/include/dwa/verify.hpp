#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwa/derivation.hpp"

namespace dwa {

// Grid of configurations a verification suite runs over.
struct VerifyOptions {
    std::vector<std::uint32_t> primes = {2, 3};
    int s_max = 3;                // largest red label in the generated grid
    int m_max = 2;                // most red strands
    int n_max = 2;                // most black strands
    std::vector<RedSpec> specs;   // when non-empty, replaces the generated grid
    std::optional<int> n;         // when set, a single black count
    int budget = 0;               // exploratory budget handed to prove_zero
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckItem> items;
    bool all_proven = true;

    void absorb(const CheckReport& report, const std::string& prefix);
    void add(std::string id, std::uint32_t p, bool ok);
    std::string to_json() const;
    // Pass/fail one-liner per item family plus every failing instance.
    std::string summary() const;
};

// suite: polyring | nilhecke | webster | deformed | bimodules | quotient | all
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);

// The h_k coefficient pattern: reduce(d^k(psi e(b,s))) vs k! psi h_k(E) e(b,s)
// with h_k expanded through the polynomial oracle. Proves each k <= k_max.
CheckReport check_h_pattern(int s, const PrimeConfig& cfg, int k_max);

// d^k(psi e(s,b)) carries the rising factorial s(s+1)...(s+k-1) on psi x^k.
CheckReport check_product_formula(int s, const PrimeConfig& cfg);

}  // namespace dwa
