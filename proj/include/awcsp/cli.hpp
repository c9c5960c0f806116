#pragma once

// Command-line front end. Parsing and execution live here so the test suite
// can drive them in-process; tools/awcsp.cpp is a thin main.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bijection.hpp"
#include "blocks.hpp"
#include "errors.hpp"
#include "ffpoly.hpp"
#include "json_io.hpp"
#include "qseries.hpp"
#include "symplectic_labels.hpp"

namespace awcsp::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_usage = 2,
    exit_cap = 3,
    exit_assertion = 4,
};

enum class Format { json, tsv };

struct RunConfig {
    std::string command;
    int n = -1;
    std::uint32_t q = 0;
    int max_degree = -1;  // truncation for `identities`, polynomial degree for `divisors`
    std::optional<int> block;
    std::string kind = "brauer";
    bool odd_order_only = false;
    std::string out;  // empty means the given stream
    Format format = Format::json;
    Caps caps;
};

/// A rendered result: the JSON document, an optional TSV rendering, and
/// whether every internal identity held.
struct Output {
    json doc;
    std::string tsv;
    bool ok = true;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond)
        throw std::invalid_argument(what);
}

inline const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

inline Output identities(const RunConfig& c) {
    const int n = c.max_degree < 0 ? 512 : c.max_degree;
    c.caps.check(n <= c.caps.max_truncation, "truncation " + std::to_string(n));
    const auto N = static_cast<std::size_t>(n);
    const std::vector<IdentityCheck> checks{jacobi_triangular(N), jacobi_doubled(N),
                                            gf_identity(LabelSet::scU, LabelSet::scT, N),
                                            gf_identity(LabelSet::scU1, LabelSet::scT1prime, N)};
    Output o;
    o.doc["max_degree"] = n;
    o.doc["identities"] = json::array();
    o.tsv = "identity\ttruncation\tresult\tfirst_mismatch\n";
    for (const auto& chk : checks) {
        o.ok = o.ok && chk.passed();
        o.doc["identities"].push_back(to_json(chk));
        o.tsv += chk.name + "\t" + std::to_string(chk.truncation) + "\t" + pass_fail(chk.passed()) + "\t" +
                 (chk.first_mismatch ? std::to_string(*chk.first_mismatch) : "-") + "\n";
    }
    o.doc["result"] = pass_fail(o.ok);
    return o;
}

template <class Visit>
std::uint64_t count(Visit&& visit_all) {
    std::uint64_t k = 0;
    visit_all([&](const auto&) { ++k; });
    return k;
}

inline Output counts(const RunConfig& c) {
    require(c.n >= 0, "counts needs --n >= 0");
    c.caps.check(c.n <= c.caps.max_count_n, "n = " + std::to_string(c.n));
    const auto N = static_cast<std::size_t>(c.n);
    const auto gf_u = gf_counts(LabelSet::scU, N), gf_t = gf_counts(LabelSet::scT, N);
    const auto gf_u1 = gf_counts(LabelSet::scU1, N), gf_t1 = gf_counts(LabelSet::scT1prime, N);
    Output o;
    o.doc["n"] = c.n;
    o.doc["rows"] = json::array();
    o.tsv = "n\tscU\tscT\tscU1\tscT1prime\tresult\n";
    for (int k = 0; k <= c.n; ++k) {
        const auto K = static_cast<std::size_t>(k);
        const std::uint64_t u = count([k](auto&& v) { for_each_scU(k, v); });
        const std::uint64_t t = count([k](auto&& v) { for_each_scT(k, v); });
        const std::uint64_t u1 = count([k](auto&& v) { for_each_scU1(k, v); });
        const std::uint64_t t1 = count([k](auto&& v) { for_each_scT1_prime(k, v); });
        const bool ok = u == t && u1 == t1 && gf_u[K] == u && gf_t[K] == t && gf_u1[K] == u1 && gf_t1[K] == t1;
        o.ok = o.ok && ok;
        o.doc["rows"].push_back({{"n", k},
                                 {"scU", u},
                                 {"scT", t},
                                 {"scU1", u1},
                                 {"scT1prime", t1},
                                 {"gf", {{"scU", to_json(gf_u[K])},
                                         {"scT", to_json(gf_t[K])},
                                         {"scU1", to_json(gf_u1[K])},
                                         {"scT1prime", to_json(gf_t1[K])}}},
                                 {"result", pass_fail(ok)}});
        o.tsv += std::to_string(k) + "\t" + std::to_string(u) + "\t" + std::to_string(t) + "\t" + std::to_string(u1) +
                 "\t" + std::to_string(t1) + "\t" + pass_fail(ok) + "\n";
    }
    o.doc["result"] = pass_fail(o.ok);
    return o;
}

inline Output divisors(const RunConfig& c) {
    require(c.max_degree >= 1, "divisors needs --max-degree >= 1");
    const FieldContext ctx = FieldContext::make(c.q);
    Output o;
    o.doc["q"] = c.q;
    o.doc["max_degree"] = c.max_degree;
    o.doc["odd_order_only"] = c.odd_order_only;
    o.doc["field"] = to_json(ctx);
    o.doc["divisors"] = json::array();
    o.tsv = "class\tpoly\tdegree\treduced_degree\tsign\talpha\troot_order\n";
    for (const auto& d : enumerate_divisors(ctx, c.max_degree, c.caps)) {
        if (c.odd_order_only && !has_odd_order_roots(d))
            continue;
        o.doc["divisors"].push_back(to_json(d));
        o.tsv += to_string(d.cls) + "\t" + d.to_string() + "\t" + std::to_string(d.degree) + "\t" +
                 std::to_string(d.reduced_degree) + "\t" + std::to_string(d.sign) + "\t" + std::to_string(d.alpha) +
                 "\t" + std::to_string(d.root_order) + "\n";
    }
    return o;
}

inline std::vector<BlockLabel> blocks_for(const RunConfig& c) {
    require(c.n >= 1, "needs --n >= 1");
    return enum_blocks(c.n, c.q, c.caps);
}

inline const BlockLabel& select_block(const std::vector<BlockLabel>& blocks, const RunConfig& c) {
    require(c.block.has_value(), "needs --block INDEX");
    require(*c.block >= 0 && static_cast<std::size_t>(*c.block) < blocks.size(),
            "--block must be in [0, " + std::to_string(blocks.size()) + ")");
    return blocks[static_cast<std::size_t>(*c.block)];
}

inline Output blocks(const RunConfig& c) {
    const auto bs = blocks_for(c);
    Output o;
    o.doc["n"] = c.n;
    o.doc["q"] = c.q;
    o.doc["blocks"] = json::array();
    o.tsv = "index\tlabel\tcentralizer\tibr\tweights\tresult\n";
    for (std::size_t i = 0; i < bs.size(); ++i) {
        const auto& b = bs[i];
        const auto ibr = enum_brauer_labels(b).size();
        const auto w = enum_weight_labels(b).size();
        const bool ok = ibr == w && brauer_label_count(b) == ibr && weight_label_count(b) == w;
        o.ok = o.ok && ok;
        o.doc["blocks"].push_back({{"index", i},
                                   {"label", to_json(b)},
                                   {"text", b.to_string()},
                                   {"w_symplectic", b.w_symplectic()},
                                   {"centralizer", to_json(centralizer_shape(b))},
                                   {"ibr_count", ibr},
                                   {"weight_count", w},
                                   {"result", pass_fail(ok)}});
        o.tsv += std::to_string(i) + "\t" + b.to_string() + "\t" + centralizer_shape(b).to_string() + "\t" +
                 std::to_string(ibr) + "\t" + std::to_string(w) + "\t" + pass_fail(ok) + "\n";
    }
    o.doc["result"] = pass_fail(o.ok);
    return o;
}

inline Output labels(const RunConfig& c) {
    require(c.kind == "brauer" || c.kind == "weight", "--kind must be brauer or weight");
    const auto bs = blocks_for(c);
    const auto& b = select_block(bs, c);
    Output o;
    o.doc["block"] = to_json(b);
    o.doc["kind"] = c.kind;
    o.doc["labels"] = json::array();
    o.tsv = "index\tlabel\n";
    auto emit = [&](const auto& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            o.doc["labels"].push_back({{"index", i}, {"label", to_json(xs[i])}, {"text", xs[i].to_string()}});
            o.tsv += std::to_string(i) + "\t" + xs[i].to_string() + "\n";
        }
    };
    if (c.kind == "brauer")
        emit(enum_brauer_labels(b));
    else
        emit(enum_weight_labels(b));
    return o;
}

template <class T>
json orbit_side(const std::vector<T>& xs, long step) {
    auto delta = [](const T& x) { return act_delta(x); };
    auto field = [step](const T& x) { return act_field(x, step); };
    json side;
    side["size"] = xs.size();
    side["delta_fixed"] = count_fixed(xs, delta);
    side["field_fixed"] = count_fixed(xs, field);
    side["delta_orbits"] = orbit_indices(xs, delta);
    side["orbits"] = orbit_indices(xs, delta, field);
    json text = json::array();
    for (const auto& x : xs)
        text.push_back(x.to_string());
    side["labels"] = text;
    return side;
}

inline Output orbits(const RunConfig& c) {
    const auto bs = blocks_for(c);
    const auto& b = select_block(bs, c);
    const long step = field_stabilizer_step(b);
    Output o;
    o.doc["block"] = to_json(b);
    o.doc["field_step"] = step;
    o.doc["brauer"] = orbit_side(enum_brauer_labels(b), step);
    o.doc["weight"] = orbit_side(enum_weight_labels(b), step);
    o.ok = o.doc["brauer"]["delta_fixed"] == o.doc["weight"]["delta_fixed"] &&
           o.doc["brauer"]["orbits"].size() == o.doc["weight"]["orbits"].size();
    o.doc["result"] = pass_fail(o.ok);
    return o;
}

inline Output bijection(const RunConfig& c) {
    const auto bs = blocks_for(c);
    std::vector<BlockLabel> chosen;
    if (c.block)
        chosen.push_back(select_block(bs, c));
    else
        chosen = bs;
    Output o;
    o.doc["n"] = c.n;
    o.doc["q"] = c.q;
    o.doc["blocks"] = json::array();
    for (const auto& b : chosen) {
        const auto pairing = build_bijection(b);
        const auto report = verify_equivariance(pairing);
        o.ok = o.ok && report.ok();
        o.doc["blocks"].push_back({{"pairing", to_json(pairing)}, {"report", to_json(report)}});
    }
    o.doc["result"] = pass_fail(o.ok);
    return o;
}

inline json error_doc(const std::string& kind, const std::string& message) {
    return {{"schema_version", schema_version}, {"error", {{"kind", kind}, {"message", message}}}};
}

inline void write_line(std::ostream& os, const std::string& text) {
    os << text;
    if (text.empty() || text.back() != '\n')
        os << '\n';
}

}  // namespace detail

/// Runs one subcommand. The artifact goes to `c.out` when set, otherwise to
/// `os`; errors are reported on `os` as a JSON object.
inline int run(const RunConfig& c, std::ostream& os) {
    try {
        Output o;
        if (c.command == "identities")
            o = detail::identities(c);
        else if (c.command == "counts")
            o = detail::counts(c);
        else if (c.command == "divisors")
            o = detail::divisors(c);
        else if (c.command == "blocks")
            o = detail::blocks(c);
        else if (c.command == "labels")
            o = detail::labels(c);
        else if (c.command == "orbits")
            o = detail::orbits(c);
        else if (c.command == "bijection")
            o = detail::bijection(c);
        else
            throw std::invalid_argument("unknown subcommand '" + c.command + "'");

        if (c.format == Format::tsv && o.tsv.empty())
            throw std::invalid_argument(c.command + " has no TSV form");
        o.doc["schema_version"] = schema_version;
        o.doc["command"] = c.command;
        const std::string text = c.format == Format::tsv ? o.tsv : o.doc.dump(2);
        if (c.out.empty()) {
            detail::write_line(os, text);
        } else {
            std::ofstream f(c.out, std::ios::binary);
            if (!f)
                throw std::runtime_error("cannot open " + c.out + " for writing");
            detail::write_line(f, text);
        }
        if (!o.ok) {
            detail::write_line(os, detail::error_doc("assertion", c.command + " reported a failed identity").dump());
            return exit_assertion;
        }
        return exit_ok;
    } catch (const cap_error& e) {
        detail::write_line(os, detail::error_doc("cap", e.what()).dump());
        return exit_cap;
    } catch (const structural_error& e) {
        detail::write_line(os, detail::error_doc("assertion", e.what()).dump());
        return exit_assertion;
    } catch (const std::invalid_argument& e) {
        detail::write_line(os, detail::error_doc("usage", e.what()).dump());
        return exit_usage;
    } catch (const std::exception& e) {
        detail::write_line(os, detail::error_doc("error", e.what()).dump());
        return exit_error;
    }
}

/// Parses argv into `c`. Returns an exit code when the process should stop
/// right away (help requested or a usage error, reported on `os`).
inline std::optional<int> parse(int argc, const char* const* argv, RunConfig& c, std::ostream& os) {
    CLI::App app{"Label-level enumeration and verification for 2-blocks of Sp_2n(q)", "awcsp"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    auto* ids = app.add_subcommand("identities", "Check the generating-function identities");
    ids->add_option("--max-degree", c.max_degree, "Truncation degree (default 512)");

    auto* cnt = app.add_subcommand("counts", "Label-set sizes for n = 0..N");
    cnt->add_option("--n", c.n, "Largest n")->required();

    auto* div = app.add_subcommand("divisors", "Classified elementary divisors over F_q");
    div->add_option("--q", c.q, "Odd prime power")->required();
    div->add_option("--max-degree", c.max_degree, "Largest divisor degree")->required();
    div->add_flag("--odd-order-only", c.odd_order_only, "Keep divisors whose roots have odd order");

    auto* blk = app.add_subcommand("blocks", "2-blocks of Sp_2n(q)");
    auto* lab = app.add_subcommand("labels", "Brauer or weight labels of one block");
    auto* orb = app.add_subcommand("orbits", "Automorphism orbits on the labels of one block");
    auto* bij = app.add_subcommand("bijection", "Equivariant bijection with its verification report");
    for (auto* sub : {blk, lab, orb, bij}) {
        sub->add_option("--n", c.n, "Rank: the group is Sp_2n(q)")->required();
        sub->add_option("--q", c.q, "Odd prime power")->required();
    }
    for (auto* sub : {lab, orb, bij}) {
        auto* opt = sub->add_option_function<int>("--block", [&c](int i) { c.block = i; }, "0-based block index");
        if (sub != bij)
            opt->required();
    }
    lab->add_option("--kind", c.kind, "brauer or weight")->check(CLI::IsMember({"brauer", "weight"}));
    bij->add_option("--out", c.out, "Write the JSON artifact here");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        os << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            os << app.help();
            return exit_ok;
        }
        detail::write_line(os, detail::error_doc("usage", e.what()).dump());
        return exit_usage;
    }
    c.command = app.get_subcommands().front()->get_name();
    c.format = format == "tsv" ? Format::tsv : Format::json;
    return std::nullopt;
}

}  // namespace awcsp::cli
