#include "dwa/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace dwa {

Flavor::Flavor(AlgebraKind kind, RedSpec spec, int n) : kind_(kind), spec_(std::move(spec)), n_(n) {
    if (n < 0) throw argument_error("black strand count must be non-negative");
    if (kind == AlgebraKind::nil_hecke && spec_.m() != 0)
        throw argument_error("nilHecke flavor carries no red spec");
    for (int label : spec_.labels)
        if (label < 0) throw argument_error("red labels must be non-negative");
}

bool Flavor::operator==(const Flavor& o) const {
    auto norm = [](AlgebraKind k) {
        return k == AlgebraKind::nil_hecke ? AlgebraKind::deformed_webster : k;
    };
    return norm(kind_) == norm(o.kind_) && spec_ == o.spec_ && n_ == o.n_;
}

std::string Flavor::name() const {
    std::ostringstream os;
    switch (kind_) {
        case AlgebraKind::nil_hecke: os << "NH"; break;
        case AlgebraKind::deformed_webster: os << "D"; break;
        case AlgebraKind::cyclotomic_webster: os << "W"; break;
    }
    os << "(";
    for (int k = 0; k < spec_.m(); ++k) {
        if (k) os << ",";
        os << spec_.labels[k];
    }
    os << ";" << n_ << ")";
    return os.str();
}

bool layers_commute(const Layer& a, const Layer& b) {
    bool a_dot = a.kind != LayerKind::crossing;
    bool b_dot = b.kind != LayerKind::crossing;
    if (a_dot && b_dot) return true;
    if (a_dot != b_dot) {
        const Layer& dot = a_dot ? a : b;
        const Layer& cross = a_dot ? b : a;
        return dot.pos != cross.pos && dot.pos != cross.pos + 1;
    }
    return std::abs(a.pos - b.pos) >= 2;
}

std::vector<Layer> canonical_layer_order(std::vector<Layer> layers) {
    std::vector<Layer> out;
    out.reserve(layers.size());
    std::vector<bool> used(layers.size(), false);
    for (std::size_t step = 0; step < layers.size(); ++step) {
        int best = -1;
        for (std::size_t i = 0; i < layers.size(); ++i) {
            if (used[i]) continue;
            bool movable = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (!used[j] && !layers_commute(layers[j], layers[i])) {
                    movable = false;
                    break;
                }
            }
            if (movable && (best < 0 || layers[i] < layers[static_cast<std::size_t>(best)]))
                best = static_cast<int>(i);
        }
        out.push_back(layers[static_cast<std::size_t>(best)]);
        used[static_cast<std::size_t>(best)] = true;
    }
    return out;
}

std::optional<Monomial> Monomial::make(const Flavor& flavor, StrandSeq bottom,
                                       std::vector<Layer> layers) {
    if (bottom.spec() != flavor.spec() || bottom.black_count() != flavor.n())
        throw argument_error("sequence does not match the flavor");
    const bool cyc = flavor.cyclotomic_flavor();
    if (cyc && bottom.size() >= 1 && bottom.is_black(1)) return std::nullopt;

    StrandSeq running = bottom;
    int degree = 0;
    for (const Layer& layer : layers) {
        switch (layer.kind) {
            case LayerKind::black_dot:
                if (layer.pos < 1 || layer.pos > running.size()) return std::nullopt;
                if (!running.is_black(layer.pos)) return std::nullopt;
                degree += 2;
                break;
            case LayerKind::red_dot: {
                if (!flavor.allows_red_dots()) return std::nullopt;
                if (layer.pos < 1 || layer.pos > running.size()) return std::nullopt;
                if (!running.is_red(layer.pos)) return std::nullopt;
                if (layer.d < 1 || layer.d > running.red_label(layer.pos)) return std::nullopt;
                degree += 2 * layer.d;
                break;
            }
            case LayerKind::crossing: {
                if (layer.pos < 1 || layer.pos >= running.size()) return std::nullopt;
                bool left_red = running.is_red(layer.pos);
                bool right_red = running.is_red(layer.pos + 1);
                if (left_red && right_red) return std::nullopt;
                if (!left_red && !right_red) degree -= 2;
                else degree += left_red ? running.red_label(layer.pos)
                                        : running.red_label(layer.pos + 1);
                auto swapped = transpose(running, layer.pos);
                running = *swapped;
                if (cyc && running.is_black(1)) return std::nullopt;
                break;
            }
        }
    }
    return Monomial(std::move(bottom), std::move(running), canonical_layer_order(std::move(layers)),
                    degree);
}

StrandSeq Monomial::sequence_below(int h) const {
    StrandSeq running = bottom_;
    for (int k = 0; k < h; ++k)
        if (layers_[static_cast<std::size_t>(k)].kind == LayerKind::crossing)
            running = *transpose(running, layers_[static_cast<std::size_t>(k)].pos);
    return running;
}

Element Element::idempotent(const Flavor& flavor, const PrimeConfig& cfg, const StrandSeq& seq) {
    if (seq.spec() != flavor.spec() || seq.black_count() != flavor.n())
        throw argument_error("sequence does not match the flavor");
    Element out(flavor, cfg);
    out.add_raw(seq, {}, Fp(1, cfg));
    return out;
}

Element Element::generator(const Flavor& flavor, const PrimeConfig& cfg, const Layer& layer,
                           const StrandSeq& seq) {
    Element out(flavor, cfg);
    out.add_raw(seq, {layer}, Fp(1, cfg));
    return out;
}

Element Element::unit(const Flavor& flavor, const PrimeConfig& cfg) {
    Element out(flavor, cfg);
    for (const auto& seq : flavor.sequences()) out.add_raw(seq, {}, Fp(1, cfg));
    return out;
}

Element Element::from_monomial(const Flavor& flavor, const PrimeConfig& cfg, const Monomial& m,
                               const Fp& c) {
    Element out(flavor, cfg);
    out.add_term(m, c);
    return out;
}

void Element::add_term(const Monomial& m, const Fp& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::add_raw(const StrandSeq& bottom, std::vector<Layer> layers, const Fp& c) {
    if (c.is_zero()) return;
    auto m = Monomial::make(flavor_, bottom, std::move(layers));
    if (m) add_term(*m, c);
}

void Element::check_compatible(const Element& o) const {
    if (!(flavor_ == o.flavor_)) throw argument_error("flavor mismatch");
    if (!(cfg_ == o.cfg_)) throw config_error("prime mismatch");
}

Element Element::operator+(const Element& o) const {
    check_compatible(o);
    Element out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Element Element::operator-(const Element& o) const {
    check_compatible(o);
    Element out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Element Element::operator-() const { return scaled(-1); }

Element Element::scaled(const Fp& c) const {
    Element out(flavor_, cfg_);
    for (const auto& [m, coef] : terms_) out.add_term(m, coef * c);
    return out;
}

Element Element::scaled(std::int64_t c) const { return scaled(Fp(c, cfg_)); }

Element Element::operator*(const Element& o) const {
    check_compatible(o);
    Element out(flavor_, cfg_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if (!(ma.bottom() == mb.top())) continue;
            std::vector<Layer> layers = mb.layers();
            layers.insert(layers.end(), ma.layers().begin(), ma.layers().end());
            out.add_raw(mb.bottom(), std::move(layers), ca * cb);
        }
    }
    return out;
}

bool Element::operator==(const Element& o) const {
    return flavor_ == o.flavor_ && cfg_ == o.cfg_ && terms_ == o.terms_;
}

std::optional<int> Element::degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        if (!deg) deg = m.degree();
        else if (*deg != m.degree()) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.value() != 1 || m.layers().empty()) os << c.value() << " ";
        for (auto it = m.layers().rbegin(); it != m.layers().rend(); ++it) {
            switch (it->kind) {
                case LayerKind::black_dot: os << "x@" << it->pos << " "; break;
                case LayerKind::red_dot: os << "E(" << it->d << ")@" << it->pos << " "; break;
                case LayerKind::crossing: os << "psi@" << it->pos << " "; break;
            }
        }
        os << "e(" << m.bottom().to_string() << ")";
    }
    return os.str();
}

}  // namespace dwa
