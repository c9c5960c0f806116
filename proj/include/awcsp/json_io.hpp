#pragma once

// JSON encodings. nlohmann::json objects keep keys sorted, which the CLI
// relies on for byte-stable output.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "bijection.hpp"
#include "blocks.hpp"
#include "ffpoly.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "symplectic_labels.hpp"

namespace awcsp {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

inline json to_json(const Partition& p) { return p.parts(); }

inline json to_json(const std::vector<Partition>& ps) {
    json a = json::array();
    for (const auto& p : ps)
        a.push_back(to_json(p));
    return a;
}

inline json to_json(const TwoCoreTower& t) {
    json a = json::array();
    for (const auto& level : t.levels())
        a.push_back(to_json(level));
    return a;
}

inline json to_json(const BigInt& v) {
    // exact values that fit are emitted as numbers, larger ones as strings
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
        return static_cast<std::int64_t>(v);
    return v.str();
}

/// Little-endian coefficient array.
inline json to_json(const FqPoly& f) { return f.coeffs(); }

inline json to_json(const FieldContext& ctx) {
    return {{"p", ctx.p}, {"e", ctx.e}, {"q", ctx.q}, {"a", ctx.a}, {"eps", ctx.eps}};
}

inline json to_json(const ElementaryDivisor& d) {
    json j{{"class", to_string(d.cls)},
           {"poly", to_json(d.poly)},
           {"text", d.to_string()},
           {"degree", d.degree},
           {"reduced_degree", d.reduced_degree},
           {"sign", d.sign},
           {"alpha", d.alpha},
           {"odd_reduced_degree", d.odd_reduced_degree},
           {"root_order", d.root_order},
           {"odd_order_roots", has_odd_order_roots(d)}};
    if (d.cls == DivisorClass::F2)
        j["factors"] = json::array({to_json(d.factor), to_json(star(d.factor))});
    return j;
}

inline json to_json(const BlockLabel& b) {
    json mult = json::array();
    for (std::size_t i = 0; i < b.mult.size(); ++i) {
        const auto& [d, m] = b.mult[i];
        mult.push_back({{"divisor", to_json(d.poly)},
                        {"text", d.to_string()},
                        {"class", to_string(d.cls)},
                        {"m", m},
                        {"w", i == 0 ? b.w_symplectic() : m}});
    }
    return {{"n", b.n}, {"q", b.ctx.q}, {"multiplicities", mult}};
}

inline json to_json(const CentralizerShape& s) {
    json factors = json::array();
    for (const auto& f : s.gl)
        factors.push_back({{"divisor", to_json(f.divisor.poly)},
                           {"rank", f.rank},
                           {"q_exponent", f.q_exponent},
                           {"sign", f.sign},
                           {"type", f.sign < 0 ? "GU" : "GL"}});
    return {{"symplectic_dim", s.symplectic_dim}, {"gl_factors", factors}, {"text", s.to_string()}};
}

inline json to_json(const ScUElement& x) {
    json mult = json::array();
    for (const auto& [j, m] : x.mult)
        mult.push_back({j, m});
    return {{"n", x.n}, {"multiplicities", mult}, {"copy_index", x.copy_index}};
}

inline json to_json(const ScTElement& x) {
    return {{"m", x.m}, {"lambda1", to_json(x.lambda1)}, {"lambda2", to_json(x.lambda2)}, {"kappa", to_json(x.kappa)}};
}

inline json to_json(const BrauerLabel& x) { return {{"scU", to_json(x.symplectic)}, {"gl", to_json(x.gl)}}; }

inline json to_json(const WeightLabel& x) { return {{"scT", to_json(x.symplectic)}, {"gl", to_json(x.gl)}}; }

inline json to_json(const IdentityCheck& c) {
    return {{"name", c.name},
            {"truncation", c.truncation},
            {"result", c.passed() ? "PASS" : "FAIL"},
            {"first_mismatch", c.first_mismatch ? json(*c.first_mismatch) : json(nullptr)}};
}

inline json to_json(const EquivarianceReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"check", f.check}, {"witness", f.witness}});
    return {{"checked", r.checked}, {"failures", failures}, {"result", r.ok() ? "PASS" : "FAIL"}};
}

inline json to_json(const OrbitPairing& p) {
    json pairs = json::array();
    for (std::size_t i = 0; i < p.brauer.size(); ++i)
        pairs.push_back({{"brauer", to_json(p.brauer[i])}, {"weight", to_json(p.apply(i))}});
    json orbits = json::array();
    for (const auto& m : p.orbits)
        orbits.push_back({{"brauer", m.brauer}, {"weight", m.weight}, {"size", m.brauer.size()}});
    return {{"block", to_json(p.block)}, {"field_step", p.field_step}, {"pairs", pairs}, {"orbits", orbits}};
}

}  // namespace awcsp
