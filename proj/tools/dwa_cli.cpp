// Command-line front end over the dwa C API.
// Exit codes: 0 ok, 1 verification/equality failure, 2 parse or usage error,
// 3 resource cap exceeded.

#include "dwa.h"

#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct SessionFlags {
    uint32_t p = 3;
    std::string algebra = "D";
    std::vector<int32_t> s;
    uint32_t n = 1;
    int32_t budget = 0;
    int32_t degree_cap = 12;
    std::string format = "text";
    uint64_t seed = 0;
};

int exit_code(dwa_status status) {
    switch (status) {
        case DWA_OK: return 0;
        case DWA_ERR_RESOURCE: return 3;
        case DWA_ERR_PARSE:
        case DWA_ERR_ARGUMENT:
        case DWA_ERR_CONFIG: return 2;
        default: return 4;
    }
}

struct SessionHandle {
    dwa_session* ptr = nullptr;
    ~SessionHandle() { dwa_session_free(ptr); }
};

struct ElementHandle {
    dwa_element* ptr = nullptr;
    ~ElementHandle() { dwa_element_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { dwa_string_free(ptr); }
};

int open_session(const SessionFlags& flags, SessionHandle& session) {
    dwa_status st = dwa_session_new(flags.p, flags.algebra.c_str(),
                                    flags.s.empty() ? nullptr : flags.s.data(), flags.s.size(),
                                    flags.n, &session.ptr);
    if (st != DWA_OK) {
        std::fprintf(stderr, "error: cannot open session (p=%u, algebra=%s)\n", flags.p,
                     flags.algebra.c_str());
        return exit_code(st);
    }
    dwa_session_set_caps(session.ptr, flags.degree_cap, flags.budget);
    return 0;
}

int fail_with(dwa_session* session, dwa_status st) {
    std::fprintf(stderr, "error: %s\n", dwa_session_error(session));
    return exit_code(st);
}

dwa_format parse_format(const std::string& name) {
    if (name == "json") return DWA_FORMAT_JSON;
    if (name == "svg") return DWA_FORMAT_SVG;
    if (name == "tikz") return DWA_FORMAT_TIKZ;
    return DWA_FORMAT_TEXT;
}

int print_element(dwa_session* session, const dwa_element* elem, const std::string& format) {
    StringHandle text;
    dwa_status st = dwa_format_element(session, elem, parse_format(format), &text.ptr);
    if (st != DWA_OK) return fail_with(session, st);
    std::printf("%s\n", text.ptr);
    return 0;
}

int cmd_reduce(const SessionFlags& flags, const std::string& expr, bool trace) {
    SessionHandle session;
    if (int rc = open_session(flags, session)) return rc;
    ElementHandle parsed, reduced;
    dwa_status st = dwa_parse(session.ptr, expr.c_str(), &parsed.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    if (trace) {
        StringHandle lines;
        st = dwa_reduce_trace(session.ptr, parsed.ptr, &reduced.ptr, &lines.ptr);
        if (st != DWA_OK) return fail_with(session.ptr, st);
        std::fputs(lines.ptr, stderr);
    } else {
        st = dwa_reduce(session.ptr, parsed.ptr, &reduced.ptr, nullptr, nullptr);
        if (st != DWA_OK) return fail_with(session.ptr, st);
    }
    return print_element(session.ptr, reduced.ptr, flags.format);
}

int cmd_mult(const SessionFlags& flags, const std::string& lhs, const std::string& rhs) {
    SessionHandle session;
    if (int rc = open_session(flags, session)) return rc;
    ElementHandle a, b, prod, reduced;
    dwa_status st = dwa_parse(session.ptr, lhs.c_str(), &a.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    st = dwa_parse(session.ptr, rhs.c_str(), &b.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    st = dwa_multiply(session.ptr, a.ptr, b.ptr, &prod.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    st = dwa_reduce(session.ptr, prod.ptr, &reduced.ptr, nullptr, nullptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    return print_element(session.ptr, reduced.ptr, flags.format);
}

int cmd_diff(const SessionFlags& flags, const std::string& expr, uint32_t k) {
    SessionHandle session;
    if (int rc = open_session(flags, session)) return rc;
    ElementHandle parsed, derived, reduced;
    dwa_status st = dwa_parse(session.ptr, expr.c_str(), &parsed.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    st = dwa_derive(session.ptr, parsed.ptr, k, &derived.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    st = dwa_reduce(session.ptr, derived.ptr, &reduced.ptr, nullptr, nullptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    return print_element(session.ptr, reduced.ptr, flags.format);
}

int cmd_oracle_equal(const SessionFlags& flags, const std::string& lhs, const std::string& rhs) {
    SessionHandle session;
    if (int rc = open_session(flags, session)) return rc;
    ElementHandle a, b;
    dwa_status st = dwa_parse(session.ptr, lhs.c_str(), &a.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    st = dwa_parse(session.ptr, rhs.c_str(), &b.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    int32_t equal = 0;
    st = dwa_oracle_equal(session.ptr, a.ptr, b.ptr, &equal);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    std::printf("%s\n", equal ? "equal" : "not-equal");
    return equal ? 0 : 1;
}

int cmd_render(const SessionFlags& flags, const std::string& expr, int32_t splitter,
               const std::string& side, bool raw) {
    SessionFlags f = flags;
    if (f.format == "text" || f.format == "json") f.format = "svg";
    SessionHandle session;
    if (int rc = open_session(f, session)) return rc;
    ElementHandle parsed, shown;
    dwa_status st = dwa_parse(session.ptr, expr.c_str(), &parsed.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    const dwa_element* target = parsed.ptr;
    if (!raw) {
        st = dwa_reduce(session.ptr, parsed.ptr, &shown.ptr, nullptr, nullptr);
        if (st != DWA_OK) return fail_with(session.ptr, st);
        target = shown.ptr;
    }
    StringHandle text;
    st = dwa_render(session.ptr, target, parse_format(f.format), splitter, side != "down",
                    &text.ptr);
    if (st != DWA_OK) return fail_with(session.ptr, st);
    std::printf("%s\n", text.ptr);
    return 0;
}

int cmd_verify(const SessionFlags& flags, const std::string& suite,
               const std::vector<uint32_t>& primes, int s_max, int m_max, int n_max, bool have_n,
               bool have_spec, bool json_out) {
    std::string opts = "{";
    opts += "\"budget\":" + std::to_string(flags.budget);
    if (!primes.empty()) {
        opts += ",\"primes\":[";
        for (std::size_t i = 0; i < primes.size(); ++i)
            opts += (i ? "," : "") + std::to_string(primes[i]);
        opts += "]";
    }
    opts += ",\"s_max\":" + std::to_string(s_max);
    opts += ",\"m_max\":" + std::to_string(m_max);
    opts += ",\"n_max\":" + std::to_string(n_max);
    if (have_n) opts += ",\"n\":" + std::to_string(flags.n);
    if (have_spec) {
        opts += ",\"specs\":[[";
        for (std::size_t i = 0; i < flags.s.size(); ++i)
            opts += (i ? "," : "") + std::to_string(flags.s[i]);
        opts += "]]";
    }
    opts += "}";

    StringHandle report, error;
    int32_t all_proven = 0;
    dwa_status st = dwa_verify(suite.c_str(), opts.c_str(), &report.ptr, &all_proven, &error.ptr);
    if (st != DWA_OK) {
        std::fprintf(stderr, "error: %s\n", error.ptr ? error.ptr : "verification failed to run");
        return exit_code(st);
    }
    if (json_out) {
        std::printf("%s\n", report.ptr);
    } else {
        // print failing instances plus a per-suite count
        std::string text = report.ptr;
        std::size_t proven = 0, total = 0, at = 0;
        while ((at = text.find("\"status\": \"", at)) != std::string::npos) {
            at += 11;
            ++total;
            if (text.compare(at, 6, "proven") == 0) ++proven;
        }
        at = 0;
        while ((at = text.find("\"id\": \"", at)) != std::string::npos) {
            at += 7;
            std::size_t end = text.find('"', at);
            std::size_t status = text.find("\"status\": \"", end);
            if (status != std::string::npos && text.compare(status + 11, 6, "proven") != 0)
                std::printf("FAIL %s\n", text.substr(at, end - at).c_str());
            at = end;
        }
        std::printf("%s: %zu/%zu instances proven\n", suite.c_str(), proven, total);
    }
    return all_proven ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in deformed Webster algebras over F_p"};
    app.require_subcommand(1);
    app.fallthrough();

    SessionFlags flags;
    app.add_option("--p", flags.p, "prime of the ground field")->capture_default_str();
    app.add_option("--algebra", flags.algebra, "NH, D or W")->capture_default_str();
    auto* s_opt = app.add_option("--s", flags.s, "red labels, comma separated")->delimiter(',');
    auto* n_opt = app.add_option("--n", flags.n, "number of black strands")->capture_default_str();
    app.add_option("--budget", flags.budget, "exploratory prove-zero budget");
    app.add_option("--degree-cap", flags.degree_cap, "degree cap for the equality oracle");
    app.add_option("--format", flags.format, "text, json, svg or tikz")->capture_default_str();
    app.add_option("--seed", flags.seed, "seed for randomized drivers (reserved)");

    std::string expr, expr2, suite, side = "up";
    uint32_t diff_k = 1;
    int32_t splitter = 0;
    bool raw = false, json_report = false;
    std::vector<uint32_t> primes;
    int s_max = 3, m_max = 2, n_max = 2;

    bool trace = false;
    auto* reduce = app.add_subcommand("reduce", "rewrite an expression to normal form");
    reduce->add_option("expr", expr)->required();
    reduce->add_flag("--trace", trace, "print one rule application per line to stderr");

    auto* mult = app.add_subcommand("mult", "multiply two expressions and reduce");
    mult->add_option("lhs", expr)->required();
    mult->add_option("rhs", expr2)->required();

    auto* diff = app.add_subcommand("diff", "apply the p-derivation and reduce");
    diff->add_option("expr", expr)->required();
    diff->add_option("--k", diff_k, "how many times to derive")->capture_default_str();

    auto* oracle = app.add_subcommand("oracle-equal", "decide equality by exact linear algebra");
    oracle->add_option("lhs", expr)->required();
    oracle->add_option("rhs", expr2)->required();

    auto* render = app.add_subcommand("render", "emit an SVG or TikZ picture");
    render->add_option("expr", expr)->required();
    render->add_option("--splitter", splitter, "decorate with the merge vertex of reds j, j+1");
    render->add_option("--side", side, "up (merge on top) or down")->capture_default_str();
    render->add_flag("--raw", raw, "render without reducing first");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "polyring|nilhecke|webster|deformed|bimodules|quotient|all")
        ->required();
    verify->add_option("--p", primes, "primes, comma separated")->delimiter(',');
    verify->add_option("--s-max", s_max, "largest red label in the grid")->capture_default_str();
    verify->add_option("--m-max", m_max, "most red strands")->capture_default_str();
    verify->add_option("--n-max", n_max, "most black strands")->capture_default_str();
    verify->add_flag("--json", json_report, "print the full JSON report");

    CLI11_PARSE(app, argc, argv);

    if (reduce->parsed()) return cmd_reduce(flags, expr, trace);
    if (mult->parsed()) return cmd_mult(flags, expr, expr2);
    if (diff->parsed()) return cmd_diff(flags, expr, diff_k);
    if (oracle->parsed()) return cmd_oracle_equal(flags, expr, expr2);
    if (render->parsed()) return cmd_render(flags, expr, splitter, side, raw);
    if (verify->parsed())
        return cmd_verify(flags, suite, primes, s_max, m_max, n_max, n_opt->count() > 0,
                          s_opt->count() > 0, json_report || flags.format == "json");
    return 2;
}
