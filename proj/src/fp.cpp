#include "dwa/fp.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

namespace dwa {

using boost::multiprecision::cpp_int;

namespace {

cpp_int factorial(std::uint64_t n) {
    cpp_int f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

Fp multinomial(std::uint64_t p_top, const std::vector<std::uint64_t>& parts, const PrimeConfig& cfg) {
    std::uint64_t sum = std::accumulate(parts.begin(), parts.end(), std::uint64_t(0));
    if (sum != p_top)
        throw argument_error("multinomial: parts sum to " + std::to_string(sum) +
                             ", expected " + std::to_string(p_top));
    cpp_int value = factorial(p_top);
    for (std::uint64_t part : parts) value /= factorial(part);
    cpp_int residue = value % cfg.p();
    return Fp(residue.convert_to<std::int64_t>(), cfg);
}

bool weighted_multinomial_vanishes(std::uint64_t p_top, const std::vector<std::uint64_t>& parts,
                                   std::size_t i, const PrimeConfig& cfg) {
    if (i >= parts.size()) throw argument_error("weighted_multinomial_vanishes: index out of range");
    std::uint64_t sum = std::accumulate(parts.begin(), parts.end(), std::uint64_t(0));
    if (sum != p_top)
        throw argument_error("weighted_multinomial_vanishes: parts do not sum to p_top");
    cpp_int value = factorial(p_top);
    for (std::uint64_t part : parts) value /= factorial(part);
    value *= factorial(parts[i]);
    return value % cfg.p() == 0;
}

}  // namespace dwa
