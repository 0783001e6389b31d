#pragma once

#include <cstdint>
#include <vector>

#include "dwa/error.hpp"

namespace dwa {

// Session-scoped prime; passed explicitly, never global.
class PrimeConfig {
public:
    explicit PrimeConfig(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw config_error("p = " + std::to_string(p) + " is not prime");
    }

    std::uint32_t p() const { return p_; }
    bool operator==(const PrimeConfig&) const = default;

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

// Element of F_p with canonical representative in [0, p).
class Fp {
public:
    Fp(std::int64_t value, const PrimeConfig& cfg) : p_(cfg.p()) {
        std::int64_t r = value % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t p() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        return raw((v_ + o.v_) % p_, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return raw((v_ + p_ - o.v_) % p_, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_), p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    // Multiplicative inverse via Fermat; a = 0 is a division-by-zero error.
    Fp inverse() const {
        if (v_ == 0) throw argument_error("division by zero in F_p");
        return pow(p_ - 2);
    }

    Fp pow(std::uint64_t e) const {
        Fp acc = raw(1 % p_, p_);
        Fp base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp f;
        f.v_ = v;
        f.p_ = p;
        return f;
    }

private:
    Fp() : v_(0), p_(2) {}
    void check(const Fp& o) const {
        if (p_ != o.p_) throw config_error("mixed primes in F_p arithmetic");
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline Fp fp(std::int64_t v, const PrimeConfig& cfg) { return Fp(v, cfg); }

// Multinomial coefficient p_top! / (parts[0]! ... parts[k]!) reduced mod p.
// Computed over exact arbitrary-precision integers, then reduced.
Fp multinomial(std::uint64_t p_top, const std::vector<std::uint64_t>& parts, const PrimeConfig& cfg);

// True iff multinomial(p_top; parts) * parts[i]! == 0 mod p.
bool weighted_multinomial_vanishes(std::uint64_t p_top, const std::vector<std::uint64_t>& parts,
                                   std::size_t i, const PrimeConfig& cfg);

}  // namespace dwa
