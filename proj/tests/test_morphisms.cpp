#include "doctest.h"
#include "dwa/json_io.hpp"
#include "dwa/morphisms.hpp"
#include "dwa/relations.hpp"
#include "dwa/rewrite.hpp"

#include <random>

using namespace dwa;

namespace {

Element mono(const Flavor& fl, const PrimeConfig& cfg, const std::string& bottom,
             std::vector<Layer> layers, int coeff = 1) {
    Element out(fl, cfg);
    out.add_raw(StrandSeq::parse(bottom, fl.spec()), std::move(layers), Fp(coeff, cfg));
    return out;
}

}  // namespace

TEST_CASE("split map on idempotents and E-dots") {
    PrimeConfig p3(3);
    Flavor d3 = Flavor::deformed(RedSpec{{3}}, 0);
    SplitMap phi = make_split_map(d3, 1, 1);
    CHECK(phi.target.spec() == RedSpec{{2, 1}});

    // E(1)_1 e((3)) -> (E(1)_1 + E(1)_2) e((2,1))
    Element img = split_apply(phi, p3, mono(d3, p3, "3", {Layer::red_dot(1, 1)}));
    Element expect = mono(phi.target, p3, "2,1", {Layer::red_dot(1, 1)}) +
                     mono(phi.target, p3, "2,1", {Layer::red_dot(2, 1)});
    CHECK(img == expect);

    // convolution at d = 2: E(2) -> E(2)_1 + E(1)_1 E(1)_2 + E(2)_2;
    // the E(2)_2 term dies against the label cap a = 1
    Element img2 = split_apply(phi, p3, mono(d3, p3, "3", {Layer::red_dot(1, 2)}));
    Element expect2 = mono(phi.target, p3, "2,1", {Layer::red_dot(1, 2)}) +
                      mono(phi.target, p3, "2,1", {Layer::red_dot(1, 1), Layer::red_dot(2, 1)});
    CHECK(img2 == expect2);
}

TEST_CASE("split map on crossings shifts and doubles") {
    PrimeConfig p3(3);
    Flavor d31 = Flavor::deformed(RedSpec{{3}}, 1);
    SplitMap phi = make_split_map(d31, 1, 1);

    // psi_1 e(b,3) -> psi_2 psi_1 e(b,2,1): the black climbs past both reds
    Element img = split_apply(phi, p3, mono(d31, p3, "b,3", {Layer::crossing(1)}));
    Element expect = mono(phi.target, p3, "b,2,1", {Layer::crossing(1), Layer::crossing(2)});
    CHECK(img == expect);
    CHECK(!img.is_zero());

    // psi_1 e(3,b) -> psi_1 psi_2 e(2,1,b)
    Element img2 = split_apply(phi, p3, mono(d31, p3, "3,b", {Layer::crossing(1)}));
    Element expect2 = mono(phi.target, p3, "2,1,b", {Layer::crossing(2), Layer::crossing(1)});
    CHECK(img2 == expect2);
    CHECK(!img2.is_zero());

    // far generators shift by one past the split
    Flavor d2 = Flavor::deformed(RedSpec{{2}}, 2);
    SplitMap phi2 = make_split_map(d2, 1, 1);
    Element img3 = split_apply(phi2, p3, mono(d2, p3, "2,b,b", {Layer::crossing(2)}));
    CHECK(img3 == mono(phi2.target, p3, "1,1,b,b", {Layer::crossing(3)}));
    Element img4 = split_apply(phi2, p3, mono(d2, p3, "b,b,2", {Layer::black_dot(2)}));
    CHECK(img4 == mono(phi2.target, p3, "b,b,1,1", {Layer::black_dot(2)}));
}

TEST_CASE("split map is an algebra homomorphism") {
    PrimeConfig p3(3);
    // relation images prove zero
    for (int label = 1; label <= 3; ++label) {
        for (int n = 0; n <= 1; ++n) {
            Flavor src = Flavor::deformed(RedSpec{{label}}, n);
            for (int a = 0; a <= label; ++a) {
                SplitMap phi = make_split_map(src, 1, a);
                CheckReport report = split_preserves_relations(phi, p3);
                for (const auto& item : report.items) {
                    INFO("s=(", label, ") n=", n, " a=", a, " ", item.id);
                    CHECK(item.status == "proven");
                }
            }
        }
    }

    // multiplicativity on random pairs
    Flavor src = Flavor::deformed(RedSpec{{2}}, 1);
    SplitMap phi = make_split_map(src, 1, 1);
    Rewriter rw(phi.target, p3);
    auto gens = flavor_generators(src, p3);
    std::mt19937 rng(777);
    int nontrivial = 0;
    for (int rep = 0; rep < 40; ++rep) {
        const Element& a = gens[rng() % gens.size()].second;
        const Element& b = gens[rng() % gens.size()].second;
        Element ab = a * b;
        if (ab.is_zero()) continue;
        ++nontrivial;
        Element diff = split_apply(phi, p3, ab) - split_apply(phi, p3, a) * split_apply(phi, p3, b);
        CHECK(rw.prove_zero(diff) == Proof::proven);
    }
    CHECK(nontrivial > 5);
}

TEST_CASE("split maps measured against the derivation") {
    PrimeConfig p3(3);
    for (int label = 1; label <= 2; ++label) {
        Flavor src = Flavor::deformed(RedSpec{{label}}, 1);
        for (int a = 0; a <= label; ++a) {
            SplitMap phi = make_split_map(src, 1, a);
            CheckReport report = split_commutes_with_derivation(phi, p3);
            for (const auto& item : report.items) {
                INFO("label=", label, " a=", a, " ", item.id);
                CHECK(item.status == "proven");
            }
        }
    }
}

TEST_CASE("quotient map") {
    PrimeConfig p3(3);
    Flavor d = Flavor::deformed(RedSpec{{2}}, 1);
    QuotientMap q = make_quotient_map(d);

    CHECK(quotient_apply(q, mono(d, p3, "2,b", {Layer::red_dot(1, 1)})).is_zero());
    CHECK(quotient_apply(q, mono(d, p3, "b,2", {})).is_zero());

    // q(psi^2 e(2,b)): only the d = 0 term of the expansion survives
    Rewriter rwd(d, p3);
    Element sq = rwd.reduce(mono(d, p3, "2,b", {Layer::crossing(1), Layer::crossing(1)})).reduced;
    Element img = quotient_apply(q, sq);
    Element expect = mono(q.target, p3, "2,b", {Layer::black_dot(2), Layer::black_dot(2)});
    CHECK(img == expect);
}

TEST_CASE("quotient intertwines the derivations") {
    for (std::uint32_t p : {2u, 3u}) {
        PrimeConfig cfg(p);
        for (int label = 0; label <= 3; ++label) {
            Flavor d = Flavor::deformed(RedSpec{{label}}, 1);
            CheckReport report = quotient_intertwines(d, cfg);
            for (const auto& item : report.items) {
                INFO("label=", label, " p=", p, " ", item.id);
                CHECK(item.status == "proven");
            }
        }
    }
}

TEST_CASE("splitter bimodule blocks and actions") {
    PrimeConfig p3(3);
    Flavor base = Flavor::deformed(RedSpec{{2, 1}}, 1);
    SplitterBimodule tri_up(base, 1, SplitterBimodule::Side::merge_top);
    CHECK(tri_up.merged().spec() == RedSpec{{3}});
    CHECK(tri_up.degree_shift() == -2);
    SplitterBimodule tri_down(base, 1, SplitterBimodule::Side::merge_bottom);
    CHECK(tri_down.degree_shift() == 0);

    Element ehat = tri_up.block_idempotent(p3);
    CHECK(ehat.term_count() == 2);  // (2,1,b) and (b,2,1)

    // e^_j fixes every bimodule element
    Rewriter rw(base, p3);
    for (const auto& [id, g] : flavor_generators(base, p3)) {
        Element m = tri_up.project(g);
        if (m.is_zero()) continue;
        CHECK(rw.prove_zero(ehat * m - m) == Proof::proven);
    }

    // unit actions are identities
    Element unit_merged = Element::unit(tri_up.merged(), p3);
    Element unit_base = Element::unit(base, p3);
    for (const auto& [id, g] : flavor_generators(base, p3)) {
        Element m = tri_up.project(g);
        if (m.is_zero()) continue;
        Element acted = bimodule_act(tri_up, p3, unit_merged, m, unit_base);
        INFO(id);
        CHECK(rw.prove_zero(acted - m) == Proof::proven);
    }

    // associativity (a.m).b = a.(m.b) on random small triples
    std::mt19937 rng(2025);
    auto merged_gens = flavor_generators(tri_up.merged(), p3);
    auto base_gens = flavor_generators(base, p3);
    Element ehat_el = tri_up.block_idempotent(p3);
    int nontrivial = 0;
    for (int rep = 0; rep < 30; ++rep) {
        const Element& a = merged_gens[rng() % merged_gens.size()].second;
        const Element& b = base_gens[rng() % base_gens.size()].second;
        Element m = tri_up.project(ehat_el * base_gens[rng() % base_gens.size()].second);
        if (m.is_zero()) continue;
        Element left = bimodule_act(tri_up, p3, a, bimodule_act(tri_up, p3, unit_merged, m, b),
                                    unit_base);
        Element right = bimodule_act(tri_up, p3, a, m, b);
        if (right.is_zero() && left.is_zero()) continue;
        ++nontrivial;
        CHECK(rw.prove_zero(left - right) == Proof::proven);
    }
    CHECK(nontrivial > 0);

    // degree shift reporting
    Element m0 = Element::idempotent(base, p3, StrandSeq::parse("2,1,b", base.spec()));
    CHECK(bimodule_degree(tri_up, m0) == -2);
    CHECK(bimodule_degree(tri_down, m0) == 0);
}

TEST_CASE("bimodule compatibility identity and nilpotency") {
    PrimeConfig p3(3);
    for (const RedSpec& spec : {RedSpec{{2, 1}}, RedSpec{{1, 1}}}) {
        for (int n = 0; n <= 1; ++n) {
            Flavor base = Flavor::deformed(spec, n);
            for (auto side :
                 {SplitterBimodule::Side::merge_top, SplitterBimodule::Side::merge_bottom}) {
                SplitterBimodule bm(base, 1, side);
                CheckReport compat = bimodule_compatibility(bm, p3);
                for (const auto& item : compat.items) {
                    INFO("spec m=", spec.m(), " n=", n, " ", item.id);
                    CHECK(item.status == "proven");
                }
                CheckReport nil = bimodule_p_nilpotency(bm, p3);
                for (const auto& item : nil.items) {
                    INFO("spec m=", spec.m(), " n=", n, " ", item.id);
                    CHECK(item.status == "proven");
                }
            }
        }
    }
}

TEST_CASE("module Leibniz rule for the left action") {
    PrimeConfig p3(3);
    Flavor base = Flavor::deformed(RedSpec{{1, 1}}, 1);
    SplitterBimodule bm(base, 1, SplitterBimodule::Side::merge_top);
    SplitMap phi = make_split_map(bm.merged(), 1, 1);
    DerivationTable merged_table(bm.merged(), p3);
    Rewriter rw(base, p3);
    Element unit_base = Element::unit(base, p3);
    Element unit_merged = Element::unit(bm.merged(), p3);

    std::mt19937 rng(808);
    auto merged_gens = flavor_generators(bm.merged(), p3);
    auto base_gens = flavor_generators(base, p3);
    int nontrivial = 0;
    for (int rep = 0; rep < 25; ++rep) {
        const Element& a = merged_gens[rng() % merged_gens.size()].second;
        Element m = bm.project(bm.block_idempotent(p3) * base_gens[rng() % base_gens.size()].second);
        if (m.is_zero() || a.is_zero()) continue;
        Element lhs = bimodule_deriv(bm, p3, bimodule_act(bm, p3, a, m, unit_base));
        Element rhs = bimodule_act(bm, p3, derive(merged_table, a), m, unit_base) +
                      bimodule_act(bm, p3, a, bimodule_deriv(bm, p3, m), unit_base);
        if (lhs.is_zero() && rhs.is_zero()) continue;
        ++nontrivial;
        CHECK(rw.prove_zero(lhs - rhs) == Proof::proven);
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("quotient surjects onto the W spanning shapes within small caps") {
    PrimeConfig p3(3);
    Flavor d = Flavor::deformed(RedSpec{{2}}, 1);
    QuotientMap q = make_quotient_map(d);
    Rewriter rw(q.target, p3);
    // every W-flavor PBW shape lifts to the same layered diagram upstairs
    for (const auto& seq : q.target.sequences()) {
        for (int dots = 0; dots <= 2; ++dots) {
            for (int cross = 0; cross <= 1; ++cross) {
                std::vector<Layer> layers;
                for (int r = 0; r < dots; ++r) layers.push_back(Layer::black_dot(2));
                if (cross) layers.push_back(Layer::crossing(1));
                Element w(q.target, p3);
                w.add_raw(seq, layers, Fp(1, p3));
                if (w.is_zero()) continue;
                Element lift(d, p3);
                lift.add_raw(seq, layers, Fp(1, p3));
                CHECK(quotient_apply(q, lift) == w);
            }
        }
    }
}

TEST_CASE("bimodule elements serialize with their tags") {
    PrimeConfig p3(3);
    Flavor base = Flavor::deformed(RedSpec{{2, 1}}, 1);
    SplitterBimodule bm(base, 1, SplitterBimodule::Side::merge_top);
    Element m = bm.project(bm.block_idempotent(p3) *
                           Element::generator(base, p3, Layer::black_dot(1),
                                              StrandSeq::parse("b,2,1", base.spec())));
    REQUIRE(!m.is_zero());
    std::string json = bimodule_element_to_json(bm, m);
    CHECK(json.find("\"side\":\"up\"") != std::string::npos);
    CHECK(json.find("\"shift\":-2") != std::string::npos);
    Element back = bimodule_element_from_json(bm, json, p3);
    CHECK(back == m);

    SplitterBimodule down(base, 1, SplitterBimodule::Side::merge_bottom);
    CHECK_THROWS_AS(bimodule_element_from_json(down, json, p3), argument_error);
}
