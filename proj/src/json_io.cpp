#include "dwa/json_io.hpp"

#include <json.hpp>

#include "dwa/morphisms.hpp"

namespace dwa {

namespace {

using nlohmann::json;

json flavor_to_json(const Flavor& flavor) {
    const char* kind = "D";
    if (flavor.kind() == AlgebraKind::nil_hecke) kind = "NH";
    else if (flavor.kind() == AlgebraKind::cyclotomic_webster) kind = "W";
    return json{{"kind", kind}, {"s", flavor.spec().labels}, {"n", flavor.n()}};
}

Flavor flavor_from_json(const json& j) {
    RedSpec spec{j.at("s").get<std::vector<int>>()};
    int n = j.at("n").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "NH") return Flavor::nil_hecke(n);
    if (kind == "W") return Flavor::cyclotomic(std::move(spec), n);
    if (kind == "D") return Flavor::deformed(std::move(spec), n);
    throw argument_error("unknown flavor kind '" + kind + "'");
}

json layer_to_json(const Layer& layer) {
    switch (layer.kind) {
        case LayerKind::black_dot: return json{{"kind", "x"}, {"pos", layer.pos}};
        case LayerKind::red_dot: return json{{"kind", "E"}, {"pos", layer.pos}, {"d", layer.d}};
        default: return json{{"kind", "psi"}, {"pos", layer.pos}};
    }
}

Layer layer_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    int pos = j.at("pos").get<int>();
    if (kind == "x") return Layer::black_dot(pos);
    if (kind == "E") return Layer::red_dot(pos, j.at("d").get<int>());
    if (kind == "psi") return Layer::crossing(pos);
    throw argument_error("unknown layer kind '" + kind + "'");
}

}  // namespace

std::string element_to_json(const Element& elem) {
    json terms = json::array();
    for (const auto& [m, c] : elem.terms()) {
        json layers = json::array();
        for (const Layer& layer : m.layers()) layers.push_back(layer_to_json(layer));
        terms.push_back(json{{"bottom", m.bottom().to_string()},
                             {"layers", std::move(layers)},
                             {"coeff", c.value()}});
    }
    json out{{"flavor", flavor_to_json(elem.flavor())},
             {"p", elem.prime().p()},
             {"terms", std::move(terms)}};
    return out.dump();
}

Element element_from_json(const std::string& text, const PrimeConfig& cfg) {
    json j = json::parse(text);
    if (j.at("p").get<std::uint32_t>() != cfg.p())
        throw config_error("element prime does not match the session");
    Flavor flavor = flavor_from_json(j.at("flavor"));
    Element out(flavor, cfg);
    for (const auto& term : j.at("terms")) {
        StrandSeq bottom = StrandSeq::parse(term.at("bottom").get<std::string>(), flavor.spec());
        std::vector<Layer> layers;
        for (const auto& lj : term.at("layers")) layers.push_back(layer_from_json(lj));
        out.add_raw(bottom, std::move(layers), Fp(term.at("coeff").get<std::int64_t>(), cfg));
    }
    return out;
}

std::string bimodule_element_to_json(const SplitterBimodule& bm, const Element& elem) {
    json out{{"side", bm.side() == SplitterBimodule::Side::merge_top ? "up" : "down"},
             {"j", bm.j()},
             {"shift", bm.degree_shift()},
             {"element", json::parse(element_to_json(bm.project(elem)))}};
    return out.dump();
}

Element bimodule_element_from_json(const SplitterBimodule& bm, const std::string& text,
                                   const PrimeConfig& cfg) {
    json j = json::parse(text);
    std::string side = j.at("side").get<std::string>();
    bool up = side == "up";
    if (!up && side != "down") throw argument_error("bimodule side must be up or down");
    if ((up ? SplitterBimodule::Side::merge_top : SplitterBimodule::Side::merge_bottom) !=
        bm.side())
        throw argument_error("bimodule side mismatch");
    if (j.at("j").get<int>() != bm.j()) throw argument_error("bimodule merge index mismatch");
    Element elem = element_from_json(j.at("element").dump(), cfg);
    return bm.project(elem);
}

}  // namespace dwa
