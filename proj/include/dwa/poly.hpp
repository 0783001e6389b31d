#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwa/fp.hpp"

namespace dwa {

// F_p[t_1..t_n] with deg t_i = 2 and the degree-2 derivation t_i -> t_i^2.
// Dense exponent vectors; desk-scale n.
class Polynomial {
public:
    using Exponents = std::vector<std::uint16_t>;

    Polynomial(int nvars, const PrimeConfig& cfg) : nvars_(nvars), p_(cfg.p()) {}

    static Polynomial zero(int nvars, const PrimeConfig& cfg) { return Polynomial(nvars, cfg); }
    static Polynomial constant(std::int64_t c, int nvars, const PrimeConfig& cfg);
    static Polynomial variable(int i, int nvars, const PrimeConfig& cfg);  // t_i, 1-based
    static Polynomial monomial(const Exponents& e, std::int64_t c, const PrimeConfig& cfg);

    int nvars() const { return nvars_; }
    std::uint32_t p() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Fp>& terms() const { return terms_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Fp& c) const;
    Polynomial scaled(std::int64_t c) const;
    bool operator==(const Polynomial& o) const;

    void add_term(const Exponents& e, const Fp& c);

    // Grading with deg t_i = 2; nullopt marks an inhomogeneous value.
    std::optional<int> degree() const;

    std::string to_string() const;

private:
    int nvars_;
    std::uint32_t p_;
    std::map<Exponents, Fp> terms_;
};

// The derivation with t_i -> t_i^2, extended by the Leibniz rule.
Polynomial deriv(const Polynomial& f);
Polynomial deriv_iterate(const Polynomial& f, int k);
bool check_p_nilpotent_on(const Polynomial& f, const PrimeConfig& cfg);

// i-th elementary symmetric polynomial in n variables; zero for i > n, one for i = 0.
Polynomial elementary(int i, int n, const PrimeConfig& cfg);

// deriv(E_i) == E_1 E_i - (i+1) E_{i+1} (with E_{n+1} = 0), as polynomials.
bool check_elementary_derivative(int i, int n, const PrimeConfig& cfg);

// Expression in the symbols E_1..E_cap, with E_d = 0 for d > cap.
// Stored as a polynomial whose k-th variable stands for E_k.
class SymFunExpr {
public:
    SymFunExpr(int cap, const PrimeConfig& cfg) : cap_(cap), expr_(cap, cfg) {}
    SymFunExpr(int cap, Polynomial expr) : cap_(cap), expr_(std::move(expr)) {}

    int cap() const { return cap_; }
    const Polynomial& expr() const { return expr_; }

    // Substitute E_k -> elementary(k, n); requires n >= cap for faithful evaluation.
    Polynomial evaluate(int n, const PrimeConfig& cfg) const;

    bool operator==(const SymFunExpr& o) const { return cap_ == o.cap_ && expr_ == o.expr_; }

private:
    int cap_;
    Polynomial expr_;
};

// Complete homogeneous symmetric function h_k written in the elementary basis,
// truncated at E_cap, via h_k = sum_{i=1..k} (-1)^{i-1} E_i h_{k-i}.
SymFunExpr complete_h_in_elementary(int k, int cap, const PrimeConfig& cfg);

// Demazure operator (f - s_i f) / (t_i - t_{i+1}); i is 1-based, i < nvars.
Polynomial demazure(const Polynomial& f, int i);

// Swap t_i and t_{i+1}.
Polynomial swap_vars(const Polynomial& f, int i);

}  // namespace dwa
