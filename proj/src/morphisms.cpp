#include "dwa/morphisms.hpp"

#include "dwa/relations.hpp"
#include "dwa/rewrite.hpp"

namespace dwa {

namespace {

int red_position(const StrandSeq& seq, int ordinal) {
    for (int pos = 1; pos <= seq.size(); ++pos)
        if (seq.is_red(pos) && seq.red_ordinal(pos) == ordinal) return pos;
    throw error("internal: red ordinal not present in sequence");
}

}  // namespace

SplitMap make_split_map(const Flavor& source, int j, int a) {
    if (source.kind() == AlgebraKind::cyclotomic_webster)
        throw argument_error("split maps are defined on the deformed flavor");
    RedSpec target_spec = split_spec(source.spec(), j, a);
    return SplitMap{source, Flavor::deformed(std::move(target_spec), source.n()), j, a};
}

Element split_apply(const SplitMap& map, const PrimeConfig& cfg, const Element& elem) {
    if (!(elem.flavor() == map.source)) throw argument_error("flavor mismatch in split_apply");
    Element out(map.target, cfg);
    for (const auto& [m, c] : elem.terms()) {
        StrandSeq target_bottom = split_sequence(m.bottom(), map.j, map.a);
        // expand the image of the layer stack; only the E-dot at the split
        // strand produces a sum
        std::vector<std::pair<std::vector<Layer>, int>> partial{{{}, 1}};
        StrandSeq running = m.bottom();
        for (const Layer& layer : m.layers()) {
            int lp = red_position(running, map.j);
            std::vector<std::pair<std::vector<Layer>, int>> windows;
            switch (layer.kind) {
                case LayerKind::black_dot:
                    windows.push_back(
                        {{Layer::black_dot(layer.pos < lp ? layer.pos : layer.pos + 1)}, 1});
                    break;
                case LayerKind::red_dot:
                    if (layer.pos < lp) {
                        windows.push_back({{Layer::red_dot(layer.pos, layer.d)}, 1});
                    } else if (layer.pos > lp) {
                        windows.push_back({{Layer::red_dot(layer.pos + 1, layer.d)}, 1});
                    } else {
                        for (int d1 = 0; d1 <= layer.d; ++d1) {
                            int d2 = layer.d - d1;
                            std::vector<Layer> w;
                            if (d1 > 0) w.push_back(Layer::red_dot(layer.pos, d1));
                            if (d2 > 0) w.push_back(Layer::red_dot(layer.pos + 1, d2));
                            windows.push_back({std::move(w), 1});
                        }
                    }
                    break;
                case LayerKind::crossing:
                    if (layer.pos < lp - 1) {
                        windows.push_back({{Layer::crossing(layer.pos)}, 1});
                    } else if (layer.pos == lp - 1) {
                        // black under the pair: psi_{l+1} psi_l
                        windows.push_back(
                            {{Layer::crossing(layer.pos), Layer::crossing(layer.pos + 1)}, 1});
                    } else if (layer.pos == lp) {
                        // the pair over the black: psi_l psi_{l+1}
                        windows.push_back(
                            {{Layer::crossing(layer.pos + 1), Layer::crossing(layer.pos)}, 1});
                    } else {
                        windows.push_back({{Layer::crossing(layer.pos + 1)}, 1});
                    }
                    running = *transpose(running, layer.pos);
                    break;
            }
            std::vector<std::pair<std::vector<Layer>, int>> next;
            for (const auto& [stack, coeff] : partial) {
                for (const auto& [w, wc] : windows) {
                    auto s2 = stack;
                    s2.insert(s2.end(), w.begin(), w.end());
                    next.push_back({std::move(s2), coeff * wc});
                }
            }
            partial = std::move(next);
        }
        for (auto& [stack, coeff] : partial)
            out.add_raw(target_bottom, std::move(stack), c * Fp(coeff, cfg));
    }
    return out;
}

CheckReport split_preserves_relations(const SplitMap& map, const PrimeConfig& cfg, int budget) {
    CheckReport report;
    Rewriter rw(map.target, cfg);
    for (const auto& inst : relation_instances(map.source, cfg)) {
        Element image = split_apply(map, cfg, inst.element);
        auto nf = rw.reduce(image);
        Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(image, budget);
        report.add("split:" + inst.id, cfg.p(), proof, nf.steps);
    }
    return report;
}

CheckReport split_commutes_with_derivation(const SplitMap& map, const PrimeConfig& cfg,
                                           int budget) {
    CheckReport report;
    DerivationTable src_table(map.source, cfg);
    DerivationTable dst_table(map.target, cfg);
    Rewriter rw(map.target, cfg);
    for (const auto& [id, g] : flavor_generators(map.source, cfg)) {
        Element route1 = split_apply(map, cfg, derive(src_table, g));
        Element route2 = derive(dst_table, split_apply(map, cfg, g));
        Element diff = route1 - route2;
        auto nf = rw.reduce(diff);
        Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(diff, budget);
        report.add("split-deriv:" + id, cfg.p(), proof, nf.steps);
    }
    return report;
}

QuotientMap make_quotient_map(const Flavor& source) {
    if (source.kind() != AlgebraKind::deformed_webster &&
        source.kind() != AlgebraKind::nil_hecke)
        throw argument_error("quotient map starts from the deformed flavor");
    return QuotientMap{source, Flavor::cyclotomic(source.spec(), source.n())};
}

Element quotient_apply(const QuotientMap& q, const Element& elem) {
    if (!(elem.flavor() == q.source)) throw argument_error("flavor mismatch in quotient_apply");
    Element out(q.target, elem.prime());
    // the W-flavor constructor drops E-dots and leftmost-black diagrams
    for (const auto& [m, c] : elem.terms()) out.add_raw(m.bottom(), m.layers(), c);
    return out;
}

CheckReport quotient_intertwines(const Flavor& source, const PrimeConfig& cfg, int budget) {
    CheckReport report;
    QuotientMap q = make_quotient_map(source);
    DerivationTable d_table(source, cfg);
    DerivationTable w_table(q.target, cfg);
    Rewriter rw(q.target, cfg);
    for (const auto& [id, g] : flavor_generators(source, cfg)) {
        Element diff = quotient_apply(q, derive(d_table, g)) - derive(w_table, quotient_apply(q, g));
        auto nf = rw.reduce(diff);
        Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(diff, budget);
        report.add("intertwine:" + id, cfg.p(), proof, nf.steps);
    }
    // d_D of each ideal generator stays in the ideal: its q-image vanishes
    for (const auto& [id, g] : flavor_generators(source, cfg)) {
        if (id.rfind("E(", 0) != 0) continue;
        Element image = quotient_apply(q, derive(d_table, g));
        auto nf = rw.reduce(image);
        Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(image, budget);
        report.add("ideal-stability:" + id, cfg.p(), proof, nf.steps);
    }
    return report;
}

SplitterBimodule::SplitterBimodule(Flavor base, int j, Side side)
    : base_(std::move(base)),
      merged_(Flavor::deformed(merge_spec(base_.spec(), j), base_.n())),
      j_(j),
      side_(side),
      shift_(side == Side::merge_top ? -base_.spec().label(j) * base_.spec().label(j + 1) : 0) {
    if (base_.kind() != AlgebraKind::deformed_webster)
        throw argument_error("splitter bimodules live over the deformed flavor");
}

Element SplitterBimodule::block_idempotent(const PrimeConfig& cfg) const {
    Element out(base_, cfg);
    for (const auto& seq : adjacent_pair_idempotents(base_.spec(), base_.n(), j_))
        out = out + Element::idempotent(base_, cfg, seq);
    return out;
}

Element SplitterBimodule::project(const Element& elem) const {
    if (!(elem.flavor() == base_)) throw argument_error("flavor mismatch in bimodule projection");
    Element out(base_, elem.prime());
    for (const auto& [m, c] : elem.terms()) {
        const StrandSeq& gate = side_ == Side::merge_top ? m.top() : m.bottom();
        if (is_adjacent_pair(gate, j_)) out.add_term(m, c);
    }
    return out;
}

bool SplitterBimodule::in_block(const Element& elem) const { return project(elem) == elem; }

Element bimodule_act(const SplitterBimodule& bm, const PrimeConfig& cfg, const Element& outer,
                     const Element& m, const Element& inner) {
    SplitMap phi = make_split_map(bm.merged(), bm.j(), bm.base().spec().label(bm.j() + 1));
    if (!(phi.target == bm.base())) throw error("internal: split map does not target the base");
    if (bm.side() == SplitterBimodule::Side::merge_top) {
        if (!(outer.flavor() == bm.merged()) || !(inner.flavor() == bm.base()))
            throw argument_error("bimodule_act: acting flavors do not match the sides");
        return bm.project(split_apply(phi, cfg, outer) * m * inner);
    }
    if (!(outer.flavor() == bm.base()) || !(inner.flavor() == bm.merged()))
        throw argument_error("bimodule_act: acting flavors do not match the sides");
    return bm.project(outer * m * split_apply(phi, cfg, inner));
}

Element bimodule_deriv(const SplitterBimodule& bm, const PrimeConfig& cfg, const Element& m) {
    DerivationTable table(bm.base(), cfg);
    return derive(table, m);
}

std::optional<int> bimodule_degree(const SplitterBimodule& bm, const Element& m) {
    auto deg = m.degree();
    if (!deg) return std::nullopt;
    return *deg + bm.degree_shift();
}

CheckReport bimodule_compatibility(const SplitterBimodule& bm, const PrimeConfig& cfg,
                                   int budget) {
    CheckReport report;
    SplitMap phi = make_split_map(bm.merged(), bm.j(), bm.base().spec().label(bm.j() + 1));
    DerivationTable merged_table(bm.merged(), cfg);
    DerivationTable base_table(bm.base(), cfg);
    Rewriter rw(bm.base(), cfg);
    int total = bm.base().spec().label(bm.j()) + bm.base().spec().label(bm.j() + 1);
    for (const auto& seq : bm.merged().sequences()) {
        int lp = red_position(seq, bm.j());
        for (int i = 1; i <= total; ++i) {
            Element g = Element::generator(bm.merged(), cfg, Layer::red_dot(lp, i), seq);
            // d(E(i) (x) 1) via the merged factor vs d(1 (x) sum E(a)E(b))
            Element route1 = split_apply(phi, cfg, derive(merged_table, g));
            Element route2 = derive(base_table, split_apply(phi, cfg, g));
            Element diff = route1 - route2;
            auto nf = rw.reduce(diff);
            Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(diff, budget);
            report.add("compat:E(" + std::to_string(i) + ")@(" + seq.to_string() + ")", cfg.p(),
                       proof, nf.steps);
        }
    }
    return report;
}

CheckReport bimodule_p_nilpotency(const SplitterBimodule& bm, const PrimeConfig& cfg, int budget) {
    CheckReport report;
    DerivationTable table(bm.base(), cfg);
    Rewriter rw(bm.base(), cfg);
    int p = static_cast<int>(cfg.p());
    for (const auto& [id, g] : flavor_generators(bm.base(), cfg)) {
        Element m = bm.project(g);
        if (m.is_zero()) continue;
        Element iterated = derive_iterate(table, m, p);
        auto nf = rw.reduce(iterated);
        Proof proof = nf.reduced.is_zero() ? Proof::proven : rw.prove_zero(iterated, budget);
        report.add("bimodule-nilpotent:" + id, cfg.p(), proof, nf.steps);
    }
    return report;
}

}  // namespace dwa
