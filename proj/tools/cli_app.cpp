#include "cli_app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "sumprod/decompose.hpp"
#include "sumprod/dioph.hpp"
#include "sumprod/error.hpp"
#include "sumprod/families.hpp"
#include "sumprod/pell.hpp"
#include "sumprod/roots.hpp"
#include "sumprod/zeros.hpp"

namespace sumprod::cli {

using nlohmann::json;

namespace {

// ---- argument access -------------------------------------------------------

class Args {
public:
    explicit Args(const json& inputs) : inputs_(inputs) {
        if (!inputs_.is_object()) throw UsageError("inputs must be an object");
    }

    bool has(const std::string& key) const { return inputs_.contains(key); }

    std::string text(const std::string& key) const {
        if (!has(key)) throw UsageError("missing required option --" + key);
        const auto& v = inputs_.at(key);
        if (!v.is_string()) throw UsageError("option --" + key + " must be a string");
        return v.get<std::string>();
    }

    std::string text_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? text(key) : fallback;
    }

    Integer integer(const std::string& key) const {
        try {
            return parse_integer(text(key));
        } catch (const DomainError&) {
            throw UsageError("option --" + key + " expects an integer, got '" + text(key) + "'");
        }
    }

    std::int64_t i64(const std::string& key) const {
        const Integer v = integer(key);
        if (!v.fits_slong_p()) throw UsageError("option --" + key + " is out of range");
        return v.get_si();
    }

    std::int64_t i64_or(const std::string& key, std::int64_t fallback) const { return has(key) ? i64(key) : fallback; }

    unsigned u32(const std::string& key, unsigned min_value) const {
        const std::int64_t v = i64(key);
        if (v < static_cast<std::int64_t>(min_value) || v > std::numeric_limits<unsigned>::max())
            throw UsageError("option --" + key + " must be an integer >= " + std::to_string(min_value));
        return static_cast<unsigned>(v);
    }

    unsigned u32_or(const std::string& key, unsigned min_value, unsigned fallback) const {
        return has(key) ? u32(key, min_value) : fallback;
    }

    Rational rational(const std::string& key) const {
        try {
            return parse_rational(text(key));
        } catch (const DomainError&) {
            throw UsageError("option --" + key + " expects a rational p or p/q, got '" + text(key) + "'");
        }
    }

    Poly poly(const std::string& key) const {
        try {
            return parse_poly_csv(text(key));
        } catch (const DomainError&) {
            throw UsageError("option --" + key + " expects comma-separated rationals, low degree first");
        }
    }

private:
    const json& inputs_;
};

// ---- rendering -------------------------------------------------------------

json int_json(const Integer& n) {
    if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
    return json(to_string(n));
}

json poly_json(const Poly& p) { return json(to_interchange(p)); }

json pairs_json(const std::vector<IntegerPair>& pairs) {
    json out = json::array();
    for (const auto& p : pairs) out.push_back(json::array({int_json(p.x), int_json(p.y)}));
    return out;
}

json pell_json(const std::vector<PellSolution>& sols) {
    json out = json::array();
    for (const auto& s : sols) out.push_back(json::array({int_json(s.u), int_json(s.v)}));
    return out;
}

json verdict_json(const Verdict& v) {
    json witness = json::object();
    for (const auto& [k, val] : v.witness) witness[k] = val;
    return {{"regime", std::string(to_string(v.regime))}, {"citation", v.citation}, {"witness", witness}};
}

json profile_json(const MultiplicityProfile& profile) {
    json out = json::array();
    for (const auto& e : profile.entries) out.push_back(json::array({e.multiplicity, e.distinct_roots}));
    return out;
}

json report_json(const Poly& p) {
    const ZeroReport r = zero_report(p);
    return {{"poly", poly_json(p)},
            {"profile", profile_json(r.profile)},
            {"simple_zero_count", r.simple_zero_count},
            {"distinct_real_roots", r.distinct_real_roots},
            {"has_nonreal_zero", r.has_nonreal_zero}};
}

json with_schema(const std::string& name, json body) {
    body["schema"] = "sumprod/" + name + "/1";
    return body;
}

EquationInstance instance_of(const Args& args) {
    EquationInstance inst{args.i64("a"), args.i64("b"), args.i64("c"), args.u32("k", 1), args.u32("l", 2)};
    try {
        inst.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return inst;
}

json instance_json(const EquationInstance& inst) {
    return {{"a", inst.a}, {"b", inst.b}, {"c", inst.c}, {"k", inst.k}, {"l", inst.ell}};
}

std::pair<std::int64_t, std::int64_t> range_of(const Args& args) {
    const std::int64_t lo = args.i64("from"), hi = args.i64("to");
    if (lo > hi) throw UsageError("--from must not exceed --to");
    return {lo, hi};
}

// ---- commands --------------------------------------------------------------

json cmd_family(const Args& args) {
    const std::string name = args.text("family");
    Poly p;
    if (name == "powersum") p = power_sum_poly(args.i64("a"), args.i64("b"), args.u32("k", 1));
    else if (name == "product") p = product_poly(args.i64("c"), args.u32("l", 2));
    else if (name == "bernoulli") p = bernoulli_poly(args.u32("n", 0));
    else if (name == "dickson") p = dickson_poly(args.u32("mu", 1), args.rational("delta"));
    else if (name == "hat-product") p = product_hat_poly(args.i64("c"), args.u32("m", 1));
    else if (name == "hat-powersum") p = power_sum_hat_poly(args.i64("a"), args.i64("b"), args.u32("v", 1));
    else if (name == "falling-plus-q") p = falling_product_plus_q(args.u32("l", 1), args.rational("q"));
    else throw UsageError("unknown family '" + name + "'");
    return poly_json(p);
}

json cmd_classify(const Args& args) {
    const EquationInstance inst = instance_of(args);
    json out = verdict_json(classify(inst));
    out["instance"] = instance_json(inst);
    return with_schema("classify", out);
}

json cmd_search(const Args& args) {
    const EquationInstance inst = instance_of(args);
    const auto [lo, hi] = range_of(args);
    const auto sols = search_solutions(inst, lo, hi);
    std::vector<IntegerPair> counting;
    for (const auto& p : sols)
        if (p.x >= 0) counting.push_back(p);
    return with_schema("search", {{"instance", instance_json(inst)},
                                  {"range", json::array({lo, hi})},
                                  {"solutions", pairs_json(sols)},
                                  {"combinatorial_solutions", pairs_json(counting)},
                                  {"verdict", verdict_json(classify(inst))}});
}

json cmd_power_search(const Args& args) {
    const std::int64_t a = args.i64("a"), b = args.i64("b");
    const unsigned k = args.u32("k", 1), l = args.u32("l", 2);
    const auto [lo, hi] = range_of(args);
    const auto r = power_value_search(a, b, k, l, lo, hi);
    return with_schema("power-search", {{"instance", {{"a", a}, {"b", b}, {"k", k}, {"l", l}}},
                                        {"range", json::array({lo, hi})},
                                        {"solutions", pairs_json(r.solutions)},
                                        {"trivial", pairs_json(r.trivial)}});
}

json cmd_zeros(const Args& args) {
    if (args.has("poly") == args.has("family")) throw UsageError("zeros needs exactly one of --poly or --family");
    if (args.has("poly")) return with_schema("zeros", report_json(args.poly("poly")));
    const std::string family = args.text("family");
    Poly p;
    SimpleZeroCheck check;
    if (family == "bernoulli-shift") {
        const unsigned k = args.u32("k", 3);
        const Rational d = args.rational("d");
        check = bernoulli_shift_simple_zeros(k, d);
        p = bernoulli_poly(k) + Poly::constant(d);
    } else if (family == "falling-plus-q") {
        const unsigned l = args.u32("l", 3);
        const Rational q = args.rational("q");
        check = falling_product_simple_zeros(l, q);
        p = falling_product_plus_q(l, q);
    } else {
        throw UsageError("unknown zeros family '" + family + "'");
    }
    json out = report_json(p);
    out["exceptional"] = check.exceptional;
    out["meets_lemma"] = check.meets_lemma;
    return with_schema("zeros", out);
}

json cmd_decompose(const Args& args) {
    const Poly p = args.poly("poly");
    json list = json::array();
    for (const auto& d : decompose_all(p)) list.push_back({{"outer", poly_json(d.outer)}, {"inner", poly_json(d.inner)}});
    const bool indecomposable = list.empty();
    return with_schema("decompose", {{"poly", poly_json(p)}, {"decompositions", list}, {"indecomposable", indecomposable}});
}

json cmd_pell(const Args& args) {
    const Integer D = args.integer("D");
    const Integer N = args.has("N") ? args.integer("N") : Integer(1);
    const unsigned count = args.u32_or("count", 1, 3);
    const PellOrbit orbit = make_pell_orbit(D, N);
    return with_schema("pell", {{"D", int_json(D)},
                                {"N", int_json(N)},
                                {"fundamental", json::array({int_json(orbit.fundamental.u), int_json(orbit.fundamental.v)})},
                                {"base_solutions", pell_json(orbit.base_solutions)},
                                {"search_bound", int_json(orbit.search_bound)},
                                {"solutions", pell_json(pell_orbit_solutions(orbit, count))}});
}

json cmd_family_solutions(const Args& args) {
    const std::string family = args.text("family");
    const unsigned count = args.u32_or("count", 1, 5);
    if (family == "pellian") {
        const std::int64_t a = args.i64("a"), b = args.i64("b"), c = args.i64("c");
        return with_schema("family-solutions", {{"family", family},
                                                {"instance", {{"a", a}, {"b", b}, {"c", c}, {"k", 1}, {"l", 2}}},
                                                {"solutions", pairs_json(pellian_family_k1l2(a, b, c, count))}});
    }
    if (family == "nsw") {
        return with_schema("family-solutions", {{"family", family},
                                                {"instance", {{"a", 2}, {"b", 1}, {"c", 0}, {"k", 3}, {"l", 2}}},
                                                {"solutions", pairs_json(nsw_family_3_2_2_1(count))}});
    }
    throw UsageError("unknown solution family '" + family + "' (expected pellian or nsw)");
}

// ---- verify ----------------------------------------------------------------

Integer summed(std::int64_t a, std::int64_t b, unsigned k, std::int64_t x) {
    Integer total = 0;
    for (std::int64_t i = 0; i < x; ++i) total += pow(to_integer(a * i + b), k);
    return total;
}

std::vector<std::pair<std::string, std::function<bool()>>> identity_suite() {
    return {
        {"power_sum_matches_summation",
         [] {
             for (unsigned k = 1; k <= 6; ++k)
                 for (std::int64_t a = 1; a <= 4; ++a)
                     for (std::int64_t b = -4; b <= 4; ++b) {
                         if (std::gcd(a, b) != 1) continue;
                         const Poly s = power_sum_poly(a, b, k);
                         for (std::int64_t t = 0; t <= 12; ++t)
                             if (s(Rational(to_integer(t))) != Rational(summed(a, b, k, t))) return false;
                     }
             return true;
         }},
        {"closed_forms_s21",
         [] {
             return power_sum_poly(2, 1, 3) == Poly(std::vector<Rational>{0, 0, -1, 0, 2}) &&
                    power_sum_poly(2, 1, 5) == Poly(std::vector<Rational>{0, 0, 7, 0, -20, 0, 16}) * Rational(1, 3);
         }},
        {"bernoulli_difference",
         [] {
             for (unsigned n = 1; n <= 20; ++n)
                 if (compose(bernoulli_poly(n), Poly::linear(1, 1)) - bernoulli_poly(n) != Poly::monomial(n, n - 1))
                     return false;
             return true;
         }},
        {"bernoulli_symmetry",
         [] {
             for (unsigned l = 1; l <= 10; ++l)
                 if (compose(bernoulli_poly(2 * l), Poly::linear(-1, 1)) != bernoulli_poly(2 * l)) return false;
             return true;
         }},
        {"hat_product_identity",
         [] {
             for (std::int64_t c : {-2, -1, 1, 2, 3})
                 for (unsigned m = 1; m <= 4; ++m) {
                     const Poly sq = pow(Poly::linear(1, make_rational(to_integer(static_cast<std::int64_t>(2 * m - 1) * c), 2)), 2);
                     if (compose(product_hat_poly(c, m), sq) != product_poly(c, 2 * m)) return false;
                 }
             return true;
         }},
        {"hat_powersum_identity",
         [] {
             for (std::int64_t a = 1; a <= 4; ++a)
                 for (std::int64_t b = 1; b <= 4; ++b) {
                     if (std::gcd(a, b) != 1) continue;
                     const Poly sq = pow(Poly::linear(1, make_rational(to_integer(b), to_integer(a)) - Rational(1, 2)), 2);
                     for (unsigned v = 1; v <= 4; ++v)
                         if (compose(power_sum_hat_poly(a, b, v), sq) != power_sum_poly(a, b, 2 * v - 1)) return false;
                 }
             return true;
         }},
        {"disc_s3_formula",
         [] {
             for (std::int64_t a = 1; a <= 6; ++a)
                 for (std::int64_t b = -6; b <= 6; ++b) {
                     if (b == 0 || std::gcd(a, b) != 1) continue;
                     const Rational A(to_integer(a)), B(to_integer(b));
                     const Rational f = pow(A, 6) * pow(B, 4) * pow(A - B, 4) * pow(A - 2 * B, 2) * (A * A + 4 * A * B - 4 * B * B) / 256;
                     if (discriminant(power_sum_poly(a, b, 3)) != f) return false;
                 }
             return true;
         }},
        {"dickson_functional_equation",
         [] {
             for (unsigned mu = 1; mu <= 8; ++mu)
                 for (long zn : {-3L, 1L, 2L, 5L})
                     for (long dn : {-2L, 1L, 3L}) {
                         const Rational z = make_rational(zn, 2), d = make_rational(dn, 3);
                         if (dickson_poly(mu, d)(z + d / z) != pow(z, mu) + pow(d / z, mu)) return false;
                     }
             return true;
         }},
        {"reduction_identities",
         [] {
             for (auto kind : {ReductionKind::k1_square, ReductionKind::k3_square, ReductionKind::l2_square, ReductionKind::l4_square})
                 for (std::int64_t a = 1; a <= 3; ++a)
                     for (std::int64_t b = -2; b <= 2; ++b)
                         for (std::int64_t c = 1; c <= 3; ++c)
                             if (!reduction_identity_check(kind, {a, b, c})) return false;
             return true;
         }},
        {"simple_zero_exceptions",
         [] {
             for (const auto& e : bernoulli_shift_exceptions())
                 if (bernoulli_shift_simple_zeros(e.k, e.d).count >= 3) return false;
             for (const auto& e : falling_product_exceptions())
                 if (falling_product_simple_zeros(e.ell, e.q).count >= 3) return false;
             return true;
         }},
        {"pell_fundamental_minimal",
         [] {
             for (long d = 2; d <= 30; ++d) {
                 if (is_square(Integer(d))) continue;
                 const PellSolution f = pell_fundamental(d);
                 if (f.u * f.u - d * f.v * f.v != 1) return false;
                 for (Integer v = 1; v < f.v; ++v)
                     if (is_square(1 + d * v * v)) return false;
             }
             return true;
         }},
        {"nsw_family",
         [] {
             for (const auto& p : nsw_family_3_2_2_1(6))
                 if (p.x * p.x * (2 * p.x * p.x - 1) != p.y * p.y) return false;
             return true;
         }},
    };
}

json cmd_verify(const Args& args) {
    if (args.has("replay")) throw UsageError("internal: replay is handled by the front end");
    json checks = json::array();
    bool all = true;
    for (const auto& [name, run] : identity_suite()) {
        const bool ok = run();
        all = all && ok;
        checks.push_back({{"name", name}, {"pass", ok}});
    }
    return with_schema("verify", {{"checks", checks}, {"all_pass", all}});
}

using Handler = json (*)(const Args&);
const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"family", cmd_family},         {"classify", cmd_classify}, {"search", cmd_search},
        {"power-search", cmd_power_search}, {"zeros", cmd_zeros},   {"decompose", cmd_decompose},
        {"pell", cmd_pell},             {"family-solutions", cmd_family_solutions}, {"verify", cmd_verify},
    };
    return table;
}

std::string timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0') t = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

json run_command(const std::string& command, const json& inputs) {
    const auto it = handlers().find(command);
    if (it == handlers().end()) throw UsageError("unknown command '" + command + "'");
    return it->second(Args(inputs));
}

json make_manifest(const std::string& command, const json& inputs, const json& outputs) {
    return {{"schema", "sumprod/manifest/1"}, {"command", command},       {"inputs", inputs},
            {"outputs", outputs},             {"tool_version", tool_version}, {"timestamp", timestamp()}};
}

json replay_manifest(const json& manifest) {
    if (!manifest.is_object() || !manifest.contains("command") || !manifest.contains("inputs") ||
        !manifest.contains("outputs") || !manifest["command"].is_string())
        throw UsageError("not a run manifest");
    const std::string command = manifest["command"].get<std::string>();
    const json outputs = run_command(command, manifest["inputs"]);
    const bool same = outputs.dump() == manifest["outputs"].dump();
    return with_schema("replay", {{"command", command}, {"reproduced", same}});
}

std::string render_text(const std::string& command, const json& outputs, bool pretty) {
    if (command == "family" && pretty) {
        std::vector<std::string> coeffs = outputs.get<std::vector<std::string>>();
        return to_pretty(from_interchange(coeffs));
    }
    if (command == "verify") {
        std::ostringstream out;
        for (const auto& c : outputs["checks"])
            out << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>() << "\n";
        out << (outputs["all_pass"].get<bool>() ? "all identities hold" : "some identities FAILED");
        return out.str();
    }
    return {};
}

}  // namespace sumprod::cli
