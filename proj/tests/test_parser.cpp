#include "doctest.h"
#include "dwa/json_io.hpp"
#include "dwa/parser.hpp"
#include "dwa/render.hpp"
#include "dwa/rewrite.hpp"

#include <random>

using namespace dwa;

TEST_CASE("grammar basics") {
    PrimeConfig p3(3);
    Flavor fl = Flavor::deformed(RedSpec{{1}}, 1);

    // the red-black dot slide has zero right-hand side
    Element rel = parse_expression("x@1 psi@1 e(b,1) - psi@1 x@2 e(b,1)", fl, p3);
    Rewriter rw(fl, p3);
    CHECK(rw.reduce(rel).reduced.is_zero());

    Element idem = parse_expression("e(b,1) e(b,1)", fl, p3);
    CHECK(idem == Element::idempotent(fl, p3, StrandSeq::parse("b,1", fl.spec())));

    // scalars, parentheses, explicit '*', unary minus
    Element a = parse_expression("2 x@2 e(1,b)", fl, p3);
    Element b = parse_expression("x@2 * e(1,b) + x@2 e(1,b)", fl, p3);
    CHECK(a == b);
    Element c = parse_expression("-x@2 e(1,b) + (x@2 e(1,b) + x@2 e(1,b))", fl, p3);
    CHECK(c == parse_expression("x@2 e(1,b)", fl, p3));
    CHECK(parse_expression("0", fl, p3).is_zero());
    CHECK(parse_expression("3 e(1,b)", fl, p3).is_zero());  // characteristic

    // derivation operator
    Element d1 = parse_expression("D(psi@1 e(1,b))", fl, p3);
    Element d2 = parse_expression("psi@1 x@2 e(1,b)", fl, p3);
    CHECK(d1 == d2);  // s = 1 red-black rule
    Element dd = parse_expression("D^3(x@1 e(b,1))", fl, p3);
    CHECK(dd.is_zero());  // 3! = 0 mod 3

    // E-dots
    Flavor f2 = Flavor::deformed(RedSpec{{2}}, 1);
    Element e2 = parse_expression("E(2)@1 e(2,b)", f2, p3);
    CHECK(e2.degree() == 4);
}

TEST_CASE("parse errors carry the offset") {
    PrimeConfig p3(3);
    Flavor fl = Flavor::nil_hecke(2);
    auto offset_of = [&](const std::string& text) {
        try {
            parse_expression(text, fl, p3);
        } catch (const parse_error& e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("x@@") == 2);
    CHECK(offset_of("x@1 +") == 5);
    CHECK(offset_of("e(b,b") == 5);
    CHECK(offset_of("q@1") == 0);
    CHECK(offset_of("e(b,2)") == 2);  // label mismatch inside the literal
}

TEST_CASE("print then parse is the identity") {
    PrimeConfig p3(3);
    Flavor fl = Flavor::deformed(RedSpec{{2, 1}}, 1);
    Rewriter rw(fl, p3);
    auto seqs = fl.sequences();
    std::mt19937 rng(404);
    int nontrivial = 0;
    for (int rep = 0; rep < 40; ++rep) {
        Element acc = Element::zero(fl, p3);
        for (int t = 0; t < 2; ++t) {
            const StrandSeq& bottom = seqs[rng() % seqs.size()];
            std::vector<Layer> layers;
            StrandSeq running = bottom;
            for (int h = 0; h < static_cast<int>(rng() % 4); ++h) {
                int pos = 1 + static_cast<int>(rng() % static_cast<unsigned>(running.size()));
                switch (rng() % 3) {
                    case 0: layers.push_back(Layer::black_dot(pos)); break;
                    case 1: layers.push_back(Layer::red_dot(pos, 1)); break;
                    default:
                        if (pos == running.size()) --pos;
                        if (pos >= 1) {
                            if (auto tr = transpose(running, pos)) {
                                layers.push_back(Layer::crossing(pos));
                                running = *tr;
                            }
                        }
                }
            }
            Element m(fl, p3);
            m.add_raw(bottom, layers, Fp(1 + static_cast<int>(rng() % 2), p3));
            acc = acc + m;
        }
        if (acc.is_zero()) continue;
        ++nontrivial;
        Element back = parse_expression(print_element(acc), fl, p3);
        CHECK(back == acc);
        CHECK(element_to_json(back) == element_to_json(acc));
    }
    CHECK(nontrivial > 20);
}

TEST_CASE("json round trips") {
    PrimeConfig p3(3);
    Flavor fl = Flavor::deformed(RedSpec{{2}}, 1);
    Element e = parse_expression("psi@1 psi@1 e(b,2) + 2 E(1)@1 e(2,b)", fl, p3);
    Element back = element_from_json(element_to_json(e), p3);
    CHECK(back == e);

    PrimeConfig p5(5);
    CHECK_THROWS_AS(element_from_json(element_to_json(e), p5), config_error);
}

TEST_CASE("svg and tikz rendering") {
    PrimeConfig p3(3);
    Flavor fl = Flavor::deformed(RedSpec{{2}}, 1);
    Element e = parse_expression("psi@1 e(b,2)", fl, p3);
    std::string svg = render_svg(e);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("#c02020") != std::string::npos);  // a red strand is present
    std::string svg2 = render_svg(e);
    CHECK(svg == svg2);  // deterministic

    std::string tikz = render_tikz(e);
    CHECK(tikz.find("tikzpicture") != std::string::npos);
    CHECK(tikz.find("red, double") != std::string::npos);

    // E-dots carry their order label
    Element ed = parse_expression("E(2)@1 e(2,b)", fl, p3);
    CHECK(render_svg(ed).find("E2") != std::string::npos);

    // splitter decoration draws the merged label
    Flavor base = Flavor::deformed(RedSpec{{2, 1}}, 0);
    Element block = Element::idempotent(base, p3, StrandSeq::parse("2,1", base.spec()));
    RenderOptions opts;
    opts.splitter_j = 1;
    std::string deco = render_svg(block, opts);
    CHECK(deco.find(">3<") != std::string::npos);

    // zero renders as 0
    CHECK(render_svg(Element::zero(fl, p3)).find(">0<") != std::string::npos);

    // term cap is a resource error
    RenderOptions tight;
    tight.max_terms = 1;
    Element two = parse_expression("e(b,2) + e(2,b)", fl, p3);
    CHECK_THROWS_AS(render_svg(two, tight), resource_error);
}
