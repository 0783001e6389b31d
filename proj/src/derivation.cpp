#include "dwa/derivation.hpp"

#include "dwa/relations.hpp"

namespace dwa {

std::vector<DerivationTable::WindowTerm> DerivationTable::layer_image(
    const Layer& layer, const StrandSeq& context) const {
    std::vector<WindowTerm> out;
    switch (layer.kind) {
        case LayerKind::black_dot:
            out.push_back({{Layer::black_dot(layer.pos), Layer::black_dot(layer.pos)}, 1});
            break;
        case LayerKind::red_dot: {
            int label = context.red_label(layer.pos);
            out.push_back({{Layer::red_dot(layer.pos, layer.d), Layer::red_dot(layer.pos, 1)}, 1});
            if (layer.d < label)
                out.push_back({{Layer::red_dot(layer.pos, layer.d + 1)}, -(layer.d + 1)});
            break;
        }
        case LayerKind::crossing: {
            int j = layer.pos;
            bool lred = context.is_red(j), rred = context.is_red(j + 1);
            if (!lred && !rred) {
                out.push_back({{Layer::crossing(j), Layer::black_dot(j)}, -1});
                out.push_back({{Layer::black_dot(j + 1), Layer::crossing(j)}, -1});
            } else if (lred && !rred) {
                int s = context.red_label(j);
                out.push_back({{Layer::black_dot(j + 1), Layer::crossing(j)}, s});
            } else if (!lred && rred) {
                if (flavor_.kind() != AlgebraKind::cyclotomic_webster)
                    out.push_back({{Layer::red_dot(j + 1, 1), Layer::crossing(j)}, 1});
            }
            break;
        }
    }
    return out;
}

Element derive(const DerivationTable& table, const Element& a) {
    if (!(a.flavor() == table.flavor())) throw argument_error("flavor mismatch in derive");
    const PrimeConfig& cfg = table.prime();
    Element out(a.flavor(), cfg);
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t h = 0; h < m.layers().size(); ++h) {
            StrandSeq context = m.sequence_below(static_cast<int>(h));
            for (const auto& window : table.layer_image(m.layers()[h], context)) {
                std::vector<Layer> layers(m.layers().begin(),
                                          m.layers().begin() + static_cast<long>(h));
                layers.insert(layers.end(), window.layers.begin(), window.layers.end());
                layers.insert(layers.end(), m.layers().begin() + static_cast<long>(h) + 1,
                              m.layers().end());
                out.add_raw(m.bottom(), std::move(layers), c * Fp(window.coeff, cfg));
            }
        }
    }
    return out;
}

Element derive_iterate(const DerivationTable& table, const Element& a, int k) {
    Element out = a;
    for (int step = 0; step < k; ++step) out = derive(table, out);
    return out;
}

std::vector<std::pair<std::string, Element>> flavor_generators(const Flavor& flavor,
                                                               const PrimeConfig& cfg) {
    std::vector<std::pair<std::string, Element>> out;
    for (const auto& seq : flavor.sequences()) {
        std::string at = "@(" + seq.to_string() + ")";
        out.emplace_back("e" + at, Element::idempotent(flavor, cfg, seq));
        for (int pos = 1; pos <= seq.size(); ++pos) {
            if (seq.is_black(pos)) {
                out.emplace_back("x[" + std::to_string(pos) + "]" + at,
                                 Element::generator(flavor, cfg, Layer::black_dot(pos), seq));
            } else if (flavor.allows_red_dots()) {
                for (int d = 1; d <= seq.red_label(pos); ++d)
                    out.emplace_back(
                        "E(" + std::to_string(d) + ")[" + std::to_string(pos) + "]" + at,
                        Element::generator(flavor, cfg, Layer::red_dot(pos, d), seq));
            }
        }
        for (int j = 1; j < seq.size(); ++j) {
            if (seq.is_red(j) && seq.is_red(j + 1)) continue;
            out.emplace_back("psi[" + std::to_string(j) + "]" + at,
                             Element::generator(flavor, cfg, Layer::crossing(j), seq));
        }
    }
    return out;
}

CheckReport check_p_nilpotent_generators(const DerivationTable& table, int budget) {
    CheckReport report;
    Rewriter rw(table.flavor(), table.prime());
    int p = static_cast<int>(table.prime().p());
    for (const auto& [id, gen] : flavor_generators(table.flavor(), table.prime())) {
        Element iterated = derive_iterate(table, gen, p);
        auto nf = rw.reduce(iterated);
        Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(iterated, budget);
        report.add("nilpotent:" + id, table.prime().p(), proof, nf.steps);
    }
    return report;
}

CheckReport check_relation_preservation(const DerivationTable& table, int budget) {
    CheckReport report;
    Rewriter rw(table.flavor(), table.prime());
    for (const auto& inst : relation_instances(table.flavor(), table.prime())) {
        Element image = derive(table, inst.element);
        auto nf = rw.reduce(image);
        Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(image, budget);
        report.add("preserve:" + inst.id, table.prime().p(), proof, nf.steps);
    }
    return report;
}

bool check_leibniz_power(const DerivationTable& table, const Element& a, const Element& b,
                         int budget) {
    int p = static_cast<int>(table.prime().p());
    Element lhs = derive_iterate(table, a * b, p);
    Element rhs = derive_iterate(table, a, p) * b + a * derive_iterate(table, b, p);
    Rewriter rw(table.flavor(), table.prime());
    return rw.prove_zero(lhs - rhs, budget) == Proof::proven;
}

}  // namespace dwa
