#include "dwa.h"

#include <cstring>
#include <json.hpp>
#include <memory>
#include <string>

#include "dwa/derivation.hpp"
#include "dwa/json_io.hpp"
#include "dwa/parser.hpp"
#include "dwa/render.hpp"
#include "dwa/rewrite.hpp"
#include "dwa/verify.hpp"

struct dwa_session {
    dwa::PrimeConfig cfg;
    dwa::Flavor flavor;
    int32_t budget = 0;
    int32_t degree_cap = 12;
    std::string last_error;
};

struct dwa_element {
    dwa::Element value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dwa_status classify(const std::exception& e) {
    if (dynamic_cast<const dwa::parse_error*>(&e)) return DWA_ERR_PARSE;
    if (dynamic_cast<const dwa::argument_error*>(&e)) return DWA_ERR_ARGUMENT;
    if (dynamic_cast<const dwa::config_error*>(&e)) return DWA_ERR_CONFIG;
    if (dynamic_cast<const dwa::resource_error*>(&e)) return DWA_ERR_RESOURCE;
    return DWA_ERR_INTERNAL;
}

template <typename Fn>
dwa_status guarded(dwa_session* session, Fn&& fn) {
    try {
        fn();
        if (session) session->last_error.clear();
        return DWA_OK;
    } catch (const std::exception& e) {
        if (session) session->last_error = e.what();
        return classify(e);
    } catch (...) {
        if (session) session->last_error = "unknown error";
        return DWA_ERR_INTERNAL;
    }
}

dwa_status check_element(dwa_session* session, const dwa_element* elem) {
    if (!elem) {
        if (session) session->last_error = "null element handle";
        return DWA_ERR_ARGUMENT;
    }
    if (!(elem->value.flavor() == session->flavor) ||
        !(elem->value.prime() == session->cfg)) {
        session->last_error = "element does not belong to this session";
        return DWA_ERR_ARGUMENT;
    }
    return DWA_OK;
}

dwa::VerifyOptions options_from_json(const char* options_json) {
    dwa::VerifyOptions opts;
    if (!options_json || !*options_json) return opts;
    nlohmann::json j = nlohmann::json::parse(options_json);
    if (j.contains("primes")) opts.primes = j["primes"].get<std::vector<std::uint32_t>>();
    if (j.contains("s_max")) opts.s_max = j["s_max"].get<int>();
    if (j.contains("m_max")) opts.m_max = j["m_max"].get<int>();
    if (j.contains("n_max")) opts.n_max = j["n_max"].get<int>();
    if (j.contains("n")) opts.n = j["n"].get<int>();
    if (j.contains("budget")) opts.budget = j["budget"].get<int>();
    if (j.contains("specs"))
        for (const auto& s : j["specs"])
            opts.specs.push_back(dwa::RedSpec{s.get<std::vector<int>>()});
    for (std::uint32_t p : opts.primes) dwa::PrimeConfig check(p);
    return opts;
}

}  // namespace

extern "C" {

dwa_status dwa_session_new(uint32_t p, const char* algebra, const int32_t* s, size_t s_len,
                           uint32_t n, dwa_session** out) {
    if (!out || !algebra) return DWA_ERR_ARGUMENT;
    *out = nullptr;
    try {
        dwa::PrimeConfig cfg(p);
        dwa::RedSpec spec;
        for (size_t k = 0; k < s_len; ++k) spec.labels.push_back(s[k]);
        std::string kind = algebra;
        dwa::Flavor flavor = [&] {
            if (kind == "NH") {
                if (!spec.labels.empty())
                    throw dwa::argument_error("NH takes no red labels");
                return dwa::Flavor::nil_hecke(static_cast<int>(n));
            }
            if (kind == "D") return dwa::Flavor::deformed(spec, static_cast<int>(n));
            if (kind == "W") return dwa::Flavor::cyclotomic(spec, static_cast<int>(n));
            throw dwa::argument_error("algebra must be NH, D or W");
        }();
        *out = new dwa_session{cfg, flavor, 0, 12, {}};
        return DWA_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

void dwa_session_free(dwa_session* session) { delete session; }

const char* dwa_session_error(const dwa_session* session) {
    return session ? session->last_error.c_str() : "";
}

dwa_status dwa_session_set_caps(dwa_session* session, int32_t degree_cap, int32_t budget) {
    if (!session) return DWA_ERR_ARGUMENT;
    if (degree_cap >= 0) session->degree_cap = degree_cap;
    if (budget >= 0) session->budget = budget;
    return DWA_OK;
}

dwa_status dwa_parse(dwa_session* session, const char* text, dwa_element** out) {
    if (!session || !text || !out) return DWA_ERR_ARGUMENT;
    *out = nullptr;
    return guarded(session, [&] {
        *out = new dwa_element{dwa::parse_expression(text, session->flavor, session->cfg)};
    });
}

dwa_status dwa_element_clone(dwa_session* session, const dwa_element* elem, dwa_element** out) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, elem); st != DWA_OK) return st;
    *out = new dwa_element{elem->value};
    return DWA_OK;
}

void dwa_element_free(dwa_element* elem) { delete elem; }

dwa_status dwa_add(dwa_session* session, const dwa_element* a, const dwa_element* b,
                   dwa_element** out) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    if (auto st = check_element(session, b); st != DWA_OK) return st;
    return guarded(session, [&] { *out = new dwa_element{a->value + b->value}; });
}

dwa_status dwa_multiply(dwa_session* session, const dwa_element* a, const dwa_element* b,
                        dwa_element** out) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    if (auto st = check_element(session, b); st != DWA_OK) return st;
    return guarded(session, [&] { *out = new dwa_element{a->value * b->value}; });
}

dwa_status dwa_scale(dwa_session* session, const dwa_element* a, int64_t k, dwa_element** out) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    return guarded(session, [&] { *out = new dwa_element{a->value.scaled(k)}; });
}

dwa_status dwa_derive(dwa_session* session, const dwa_element* a, uint32_t k, dwa_element** out) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    return guarded(session, [&] {
        dwa::DerivationTable table(session->flavor, session->cfg);
        *out = new dwa_element{dwa::derive_iterate(table, a->value, static_cast<int>(k))};
    });
}

dwa_status dwa_reduce(dwa_session* session, const dwa_element* a, dwa_element** out,
                      uint64_t* steps, int32_t* canonical) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    return guarded(session, [&] {
        dwa::Rewriter rw(session->flavor, session->cfg);
        auto report = rw.reduce(a->value);
        if (steps) *steps = report.steps;
        if (canonical) *canonical = report.canonical ? 1 : 0;
        *out = new dwa_element{std::move(report.reduced)};
    });
}

dwa_status dwa_reduce_trace(dwa_session* session, const dwa_element* a, dwa_element** out,
                            char** trace) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    return guarded(session, [&] {
        dwa::Rewriter rw(session->flavor, session->cfg);
        std::vector<std::string> lines;
        auto report = rw.reduce(a->value, &lines);
        if (trace) {
            std::string joined;
            for (const auto& line : lines) {
                joined += line;
                joined += '\n';
            }
            *trace = dup_string(joined);
        }
        *out = new dwa_element{std::move(report.reduced)};
    });
}

dwa_status dwa_prove_zero(dwa_session* session, const dwa_element* a, int32_t budget,
                          int32_t* proven) {
    if (!session || !proven) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    return guarded(session, [&] {
        dwa::Rewriter rw(session->flavor, session->cfg);
        *proven = rw.prove_zero(a->value, budget > 0 ? budget : session->budget) ==
                          dwa::Proof::proven
                      ? 1
                      : 0;
    });
}

dwa_status dwa_oracle_equal(dwa_session* session, const dwa_element* a, const dwa_element* b,
                            int32_t* equal) {
    if (!session || !equal) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    if (auto st = check_element(session, b); st != DWA_OK) return st;
    return guarded(session, [&] {
        dwa::Rewriter rw(session->flavor, session->cfg);
        dwa::OracleCaps caps;
        caps.max_degree = session->degree_cap;
        *equal = rw.oracle_equal(a->value, b->value, caps) ? 1 : 0;
    });
}

dwa_status dwa_element_is_zero(dwa_session* session, const dwa_element* a, int32_t* zero) {
    if (!session || !zero) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    *zero = a->value.is_zero() ? 1 : 0;
    return DWA_OK;
}

dwa_status dwa_element_degree(dwa_session* session, const dwa_element* a, int32_t* degree,
                              int32_t* homogeneous) {
    if (!session) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    auto deg = a->value.degree();
    if (homogeneous) *homogeneous = deg ? 1 : 0;
    if (degree) *degree = deg ? *deg : 0;
    return DWA_OK;
}

dwa_status dwa_format_element(dwa_session* session, const dwa_element* a, dwa_format format,
                              char** out) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    return guarded(session, [&] {
        switch (format) {
            case DWA_FORMAT_TEXT: *out = dup_string(a->value.to_string()); break;
            case DWA_FORMAT_JSON: *out = dup_string(dwa::element_to_json(a->value)); break;
            case DWA_FORMAT_SVG: *out = dup_string(dwa::render_svg(a->value)); break;
            case DWA_FORMAT_TIKZ: *out = dup_string(dwa::render_tikz(a->value)); break;
            default: throw dwa::argument_error("unknown format");
        }
    });
}

dwa_status dwa_render(dwa_session* session, const dwa_element* a, dwa_format format,
                      int32_t splitter_j, int32_t merge_top, char** out) {
    if (!session || !out) return DWA_ERR_ARGUMENT;
    if (auto st = check_element(session, a); st != DWA_OK) return st;
    return guarded(session, [&] {
        dwa::RenderOptions opts;
        opts.splitter_j = splitter_j;
        opts.merge_top = merge_top != 0;
        if (format == DWA_FORMAT_SVG) *out = dup_string(dwa::render_svg(a->value, opts));
        else if (format == DWA_FORMAT_TIKZ) *out = dup_string(dwa::render_tikz(a->value, opts));
        else throw dwa::argument_error("render formats are svg and tikz");
    });
}

dwa_status dwa_verify(const char* suite, const char* options_json, char** report_json,
                      int32_t* all_proven, char** error_message) {
    if (!suite) return DWA_ERR_ARGUMENT;
    try {
        dwa::VerifyOptions opts = options_from_json(options_json);
        dwa::VerifyReport report = dwa::run_suite(suite, opts);
        if (report_json) *report_json = dup_string(report.to_json());
        if (all_proven) *all_proven = report.all_proven ? 1 : 0;
        return DWA_OK;
    } catch (const std::exception& e) {
        if (error_message) *error_message = dup_string(e.what());
        return classify(e);
    }
}

void dwa_string_free(char* text) { std::free(text); }

}  // extern "C"
