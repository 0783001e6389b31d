#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwa/fp.hpp"
#include "dwa/seq.hpp"

namespace dwa {

enum class AlgebraKind {
    nil_hecke,           // NH_n: no reds
    deformed_webster,    // D(s,n)
    cyclotomic_webster,  // W_n^s: no E-dots, leftmost-black diagrams vanish
};

// Which algebra an element lives in. NilHecke(n) and DeformedWebster({}, n) coincide.
class Flavor {
public:
    Flavor(AlgebraKind kind, RedSpec spec, int n);

    static Flavor nil_hecke(int n) { return Flavor(AlgebraKind::nil_hecke, RedSpec{}, n); }
    static Flavor deformed(RedSpec spec, int n) {
        return Flavor(AlgebraKind::deformed_webster, std::move(spec), n);
    }
    static Flavor cyclotomic(RedSpec spec, int n) {
        return Flavor(AlgebraKind::cyclotomic_webster, std::move(spec), n);
    }

    AlgebraKind kind() const { return kind_; }
    const RedSpec& spec() const { return spec_; }
    int n() const { return n_; }
    int strands() const { return spec_.m() + n_; }
    bool cyclotomic_flavor() const { return kind_ == AlgebraKind::cyclotomic_webster; }
    bool allows_red_dots() const { return kind_ != AlgebraKind::cyclotomic_webster && spec_.m() > 0; }

    std::vector<StrandSeq> sequences() const { return enumerate_seq(spec_, n_); }

    // NilHecke(n) is identified with DeformedWebster(empty spec, n).
    bool operator==(const Flavor& o) const;
    std::string name() const;

private:
    AlgebraKind kind_;
    RedSpec spec_;
    int n_;
};

enum class LayerKind : std::uint8_t { black_dot = 0, red_dot = 1, crossing = 2 };

// One elementary layer of a diagram, at strand position pos (1-based).
// d is the E-dot order for red_dot layers, 0 otherwise.
struct Layer {
    LayerKind kind;
    int pos;
    int d = 0;

    static Layer black_dot(int pos) { return Layer{LayerKind::black_dot, pos, 0}; }
    static Layer red_dot(int pos, int d) { return Layer{LayerKind::red_dot, pos, d}; }
    static Layer crossing(int pos) { return Layer{LayerKind::crossing, pos, 0}; }

    auto operator<=>(const Layer&) const = default;
};

// True when adjacent layers commute freely: dots always commute with dots;
// a dot passes a crossing it does not touch; crossings at distance >= 2 commute.
bool layers_commute(const Layer& a, const Layer& b);

// A layered diagram: bottom labeling plus layers read bottom-to-top.
// Never materialized in an invalid state; Monomial::make returns nullopt
// exactly when a relation forces the diagram to zero (dot on the wrong color,
// E-order above the label, red-red crossing, leftmost black in W flavor).
class Monomial {
public:
    static std::optional<Monomial> make(const Flavor& flavor, StrandSeq bottom,
                                        std::vector<Layer> layers);

    const StrandSeq& bottom() const { return bottom_; }
    const StrandSeq& top() const { return top_; }
    const std::vector<Layer>& layers() const { return layers_; }
    int degree() const { return degree_; }

    // Sequence directly below layer index h (h = layers().size() gives the top).
    StrandSeq sequence_below(int h) const;

    bool operator==(const Monomial& o) const {
        return bottom_ == o.bottom_ && layers_ == o.layers_;
    }
    auto operator<=>(const Monomial& o) const {
        if (auto c = bottom_ <=> o.bottom_; c != 0) return c;
        return layers_ <=> o.layers_;
    }

private:
    Monomial(StrandSeq bottom, StrandSeq top, std::vector<Layer> layers, int degree)
        : bottom_(std::move(bottom)), top_(std::move(top)), layers_(std::move(layers)),
          degree_(degree) {}

    StrandSeq bottom_;
    StrandSeq top_;
    std::vector<Layer> layers_;
    int degree_;
};

// Sort layers into the lexicographically least representative of their
// commutation class. Deterministic map keys without invoking the rewrite engine.
std::vector<Layer> canonical_layer_order(std::vector<Layer> layers);

// Finite F_p-linear combination of monomials of one flavor.
class Element {
public:
    Element(Flavor flavor, PrimeConfig cfg) : flavor_(std::move(flavor)), cfg_(cfg) {}

    static Element zero(const Flavor& flavor, const PrimeConfig& cfg) { return Element(flavor, cfg); }
    // e(i); the zero element in W flavor when the leftmost strand is black.
    static Element idempotent(const Flavor& flavor, const PrimeConfig& cfg, const StrandSeq& seq);
    // Single-layer generator over seq; zero rather than an error when context validity fails.
    static Element generator(const Flavor& flavor, const PrimeConfig& cfg, const Layer& layer,
                             const StrandSeq& seq);
    // Sum of all idempotents: the unit.
    static Element unit(const Flavor& flavor, const PrimeConfig& cfg);
    static Element from_monomial(const Flavor& flavor, const PrimeConfig& cfg, const Monomial& m,
                                 const Fp& c);

    const Flavor& flavor() const { return flavor_; }
    const PrimeConfig& prime() const { return cfg_; }
    const std::map<Monomial, Fp>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Fp& c);
    // Raw layered term over `bottom`; silently drops relation-zero diagrams.
    void add_raw(const StrandSeq& bottom, std::vector<Layer> layers, const Fp& c);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Fp& c) const;
    Element scaled(std::int64_t c) const;

    // Vertical concatenation, bilinear; in a*b the right factor is the lower diagram.
    Element operator*(const Element& o) const;

    bool operator==(const Element& o) const;

    // Common degree of all monomials; nullopt marks a mixed element. Zero reports 0.
    std::optional<int> degree() const;
    bool is_homogeneous() const { return degree().has_value(); }

    std::string to_string() const;

private:
    void check_compatible(const Element& o) const;

    Flavor flavor_;
    PrimeConfig cfg_;
    std::map<Monomial, Fp> terms_;
};

}  // namespace dwa
