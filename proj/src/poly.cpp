#include "dwa/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dwa {

Polynomial Polynomial::constant(std::int64_t c, int nvars, const PrimeConfig& cfg) {
    Polynomial f(nvars, cfg);
    f.add_term(Exponents(nvars, 0), Fp(c, cfg));
    return f;
}

Polynomial Polynomial::variable(int i, int nvars, const PrimeConfig& cfg) {
    if (i < 1 || i > nvars) throw argument_error("variable index out of range");
    Polynomial f(nvars, cfg);
    Exponents e(nvars, 0);
    e[i - 1] = 1;
    f.add_term(e, Fp(1, cfg));
    return f;
}

Polynomial Polynomial::monomial(const Exponents& e, std::int64_t c, const PrimeConfig& cfg) {
    Polynomial f(static_cast<int>(e.size()), cfg);
    f.add_term(e, Fp(c, cfg));
    return f;
}

void Polynomial::add_term(const Exponents& e, const Fp& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || p_ != o.p_) throw argument_error("polynomial ring mismatch");
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || p_ != o.p_) throw argument_error("polynomial ring mismatch");
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || p_ != o.p_) throw argument_error("polynomial ring mismatch");
    Polynomial out(nvars_, PrimeConfig(p_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int k = 0; k < nvars_; ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Fp& c) const {
    Polynomial out(nvars_, PrimeConfig(p_));
    for (const auto& [e, coef] : terms_) out.add_term(e, coef * c);
    return out;
}

Polynomial Polynomial::scaled(std::int64_t c) const { return scaled(Fp(c, PrimeConfig(p_))); }

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && p_ == o.p_ && terms_ == o.terms_;
}

std::optional<int> Polynomial::degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (auto x : e) d += 2 * x;
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.value();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            os << "*t" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

Polynomial deriv(const Polynomial& f) {
    PrimeConfig cfg(f.p());
    Polynomial out(f.nvars(), cfg);
    // d(t^a) = sum_i a_i t^(a + unit_i)
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0; i < f.nvars(); ++i) {
            if (e[i] == 0) continue;
            Fp coef = c * Fp(e[i], cfg);
            if (coef.is_zero()) continue;
            Polynomial::Exponents e2 = e;
            e2[i] += 1;
            out.add_term(e2, coef);
        }
    }
    return out;
}

Polynomial deriv_iterate(const Polynomial& f, int k) {
    Polynomial out = f;
    for (int step = 0; step < k; ++step) out = deriv(out);
    return out;
}

bool check_p_nilpotent_on(const Polynomial& f, const PrimeConfig& cfg) {
    return deriv_iterate(f, static_cast<int>(cfg.p())).is_zero();
}

Polynomial elementary(int i, int n, const PrimeConfig& cfg) {
    if (i < 0) throw argument_error("elementary: negative index");
    if (i > n) return Polynomial::zero(n, cfg);
    if (i == 0) return Polynomial::constant(1, n, cfg);
    Polynomial out(n, cfg);
    // subsets of {1..n} of size i, lexicographic
    std::vector<int> idx(i);
    for (int k = 0; k < i; ++k) idx[k] = k;
    while (true) {
        Polynomial::Exponents e(n, 0);
        for (int k : idx) e[k] = 1;
        out.add_term(e, Fp(1, cfg));
        int k = i - 1;
        while (k >= 0 && idx[k] == n - i + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int l = k + 1; l < i; ++l) idx[l] = idx[l - 1] + 1;
    }
    return out;
}

bool check_elementary_derivative(int i, int n, const PrimeConfig& cfg) {
    if (i < 1 || i > n) throw argument_error("check_elementary_derivative: i out of range");
    Polynomial lhs = deriv(elementary(i, n, cfg));
    Polynomial rhs =
        elementary(1, n, cfg) * elementary(i, n, cfg) -
        elementary(i + 1, n, cfg).scaled(i + 1);
    return lhs == rhs;
}

Polynomial SymFunExpr::evaluate(int n, const PrimeConfig& cfg) const {
    Polynomial out(n, cfg);
    for (const auto& [e, c] : expr_.terms()) {
        Polynomial prod = Polynomial::constant(1, n, cfg);
        for (int k = 0; k < cap_; ++k)
            for (int rep = 0; rep < e[k]; ++rep) prod = prod * elementary(k + 1, n, cfg);
        out = out + prod.scaled(c);
    }
    return out;
}

SymFunExpr complete_h_in_elementary(int k, int cap, const PrimeConfig& cfg) {
    if (k < 0) throw argument_error("complete_h_in_elementary: negative k");
    std::vector<Polynomial> h;
    h.push_back(Polynomial::constant(1, cap, cfg));  // h_0 = 1
    for (int m = 1; m <= k; ++m) {
        Polynomial hm(cap, cfg);
        for (int i = 1; i <= std::min(m, cap); ++i) {
            Polynomial ei = Polynomial::variable(i, cap, cfg);  // symbol E_i
            Polynomial term = ei * h[m - i];
            hm = (i % 2 == 1) ? hm + term : hm - term;
        }
        h.push_back(hm);
    }
    return SymFunExpr(cap, h[k]);
}

Polynomial swap_vars(const Polynomial& f, int i) {
    if (i < 1 || i >= f.nvars()) throw argument_error("swap_vars: index out of range");
    PrimeConfig cfg(f.p());
    Polynomial out(f.nvars(), cfg);
    for (const auto& [e, c] : f.terms()) {
        Polynomial::Exponents e2 = e;
        std::swap(e2[i - 1], e2[i]);
        out.add_term(e2, c);
    }
    return out;
}

Polynomial demazure(const Polynomial& f, int i) {
    if (i < 1 || i >= f.nvars()) throw argument_error("demazure: index out of range");
    PrimeConfig cfg(f.p());
    Polynomial g = f - swap_vars(f, i);
    // g is antisymmetric in (t_i, t_{i+1}), hence divisible by t_i - t_{i+1}.
    // Horner division treating g as a polynomial in t_i with coefficients in the rest:
    // quotient exponent (a_i = k) collects g-terms with exponent > k evaluated at t_i = t_{i+1}.
    Polynomial out(f.nvars(), cfg);
    for (const auto& [e, c] : g.terms()) {
        int a = e[i - 1];
        for (int k = 0; k < a; ++k) {
            Polynomial::Exponents e2 = e;
            e2[i - 1] = static_cast<std::uint16_t>(k);
            e2[i] = static_cast<std::uint16_t>(e2[i] + (a - 1 - k));
            out.add_term(e2, c);
        }
    }
    return out;
}

}  // namespace dwa
