#include "elliptica/cli.hpp"

#include "elliptica/decompose.hpp"
#include "elliptica/errors.hpp"
#include "elliptica/parallel.hpp"
#include "elliptica/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace elliptica::cli {

namespace {

enum class Style { Json, Table };

// Exponent data together with the model space it came from, if any.
struct Input {
    std::optional<SpaceExpr> space;
    ExponentData data;
};

struct InputOptions {
    std::string space;
    std::string data;
    std::string from_json;
};

void add_input_options(CLI::App* sub, InputOptions& in) {
    auto* s = sub->add_option("--space", in.space, "model space, e.g. \"S4 x CP2^3\"");
    auto* d = sub->add_option("--data", in.data, "exponent data, e.g. \"b=2,3;a=1,1\"");
    auto* f = sub->add_option("--from-json", in.from_json, "JSON file (or - for stdin) with b/a, data or space");
    s->excludes(d)->excludes(f);
    d->excludes(f);
}

Json read_json_file(const std::string& path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw DomainError("cannot open " + path);
        buffer << file.rdbuf();
    }
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

Input input_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("expected a JSON object");
    if (j.contains("space") && j.at("space").is_string()) {
        SpaceExpr e = parse_space(j.at("space").get<std::string>());
        return {e, exponent_data(e)};
    }
    if (j.contains("data")) return {std::nullopt, exponent_data_from_json(j.at("data"))};
    if (j.contains("b") || j.contains("a")) return {std::nullopt, exponent_data_from_json(j)};
    throw DomainError("JSON input needs \"space\", \"data\" or \"b\"/\"a\"");
}

Input resolve_input(const InputOptions& in) {
    if (!in.space.empty()) {
        SpaceExpr e = parse_space(in.space);
        return {e, exponent_data(e)};
    }
    if (!in.data.empty()) return {std::nullopt, parse_data(in.data)};
    if (!in.from_json.empty()) return input_from_json(read_json_file(in.from_json));
    throw DomainError("one of --space, --data or --from-json is required");
}

Json input_header(const Input& in) {
    Json j = Json::object();
    if (in.space) j["space"] = render(*in.space);
    j["data"] = to_json(in.data);
    return j;
}

Json with_header(Json header, const Json& body) {
    for (const auto& [key, value] : body.items()) header[key] = value;
    return header;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_array()) {
        std::string s;
        for (const auto& x : j) s += (s.empty() ? "" : ", ") + scalar_text(x);
        rows.emplace_back(prefix, "[" + s + "]");
    } else {
        rows.emplace_back(prefix, scalar_text(j));
    }
}

std::string table(const Json& j) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::size_t width = 0;
    for (const auto& [k, _] : rows) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return os.str();
}

std::string threshold_table(const Json& header, const ThresholdResult& r) {
    std::ostringstream os;
    if (header.contains("space")) os << "space      " << header["space"].get<std::string>() << '\n';
    os << "data       " << header["data"].dump() << '\n'
       << "eps        " << r.eps.get_str() << '\n'
       << "threshold  " << r.threshold << '\n'
       << "N*         " << r.tail_constant << '\n';
    for (const auto& c : r.per_n)
        os << "  n=" << c.n << "  " << (c.holds ? "[x]" : "[ ]") << "  " << c.method << '\n';
    if (r.counterexample_alarm) os << "ALARM: threshold >= 4 at eps = 1\n";
    return os.str();
}

void emit(std::ostream& out, Style style, const Json& j) {
    if (style == Style::Json)
        out << j.dump(2) << '\n';
    else
        out << table(j);
}

ConditionMode parse_mode(std::string mode) {
    std::transform(mode.begin(), mode.end(), mode.begin(), [](unsigned char c) { return std::tolower(c); });
    if (mode == "sac") return ConditionMode::SAC;
    if (mode == "ac") return ConditionMode::AC;
    throw DomainError("--mode must be sac or ac");
}

RatPoly poly_from_json(const Json& j) {
    if (j.is_object() && j.contains("poly")) return ratpoly_from_json(j.at("poly"));
    return ratpoly_from_json(j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational homotopy invariants, bounds and stabilization thresholds of elliptic model spaces",
                 "elliptica"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    bool json_flag = false, table_flag = false;
    std::optional<unsigned> threads_opt;
    std::optional<unsigned long> seed;
    auto* json_opt = app.add_flag("--json", json_flag, "JSON output (default)");
    app.add_flag("--table", table_flag, "human-readable output")->excludes(json_opt);
    app.add_option("--threads", threads_opt, "worker threads (default: ELLIPTICA_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "reserved; no command is randomized");

    InputOptions inv_in, sac_in, bounds_in, hilali_in, thr_in;

    auto* inv = app.add_subcommand("invariants", "q, r, dim pi, n_X, chi and dim H");
    add_input_options(inv, inv_in);

    auto* sac = app.add_subcommand("sac", "arithmetic condition with witnesses");
    add_input_options(sac, sac_in);
    std::string mode = "sac";
    sac->add_option("--mode", mode, "sac or ac");

    auto* bnd = app.add_subcommand("bounds", "Q_X and the upper bounds on dim H");
    add_input_options(bnd, bounds_in);

    auto* hil = app.add_subcommand("hilali", "dim pi versus dim H verdict");
    add_input_options(hil, hilali_in);

    auto* cen = app.add_subcommand("census", "every S.A.C. pair up to a formal dimension, as NDJSON");
    int max_dim = 0;
    bool summary = false;
    cen->add_option("--max", max_dim, "largest formal dimension")->required();
    cen->add_flag("--summary", summary, "emit only the summary report");

    auto* thr = app.add_subcommand("threshold", "stabilization threshold on [eps, inf)");
    add_input_options(thr, thr_in);
    std::string eps_text = "1";
    thr->add_option("--eps", eps_text, "exact rational eps > 0");

    auto* dec = app.add_subcommand("decompose", "factor a Poincare polynomial into CP^m (and S^2n) factors");
    std::string poly_text, poly_json;
    bool allow_spheres = false;
    auto* poly_opt = dec->add_option("--poly", poly_text, "e.g. \"1 + 2t^2 + 3t^4 + 2t^6 + t^8\"");
    dec->add_option("--from-json", poly_json, "JSON file with coeffs or poly")->excludes(poly_opt);
    dec->add_flag("--allow-spheres", allow_spheres, "also try even sphere factors 1 + t^2n");

    auto* mh = app.add_subcommand("mh", "mixed Hodge polynomials of products of CP^m");
    std::string mh_space, mh_op = "model", mh_eps = "1", mh_rmax = "2";
    unsigned mh_n = 1;
    int max_depth = kDefaultMaxDepth;
    mh->add_option("--space", mh_space, "product of CP^m")->required();
    mh->add_option("--op", mh_op, "model, pi, box or threshold")
        ->check(CLI::IsMember({"model", "pi", "box", "threshold"}));
    mh->add_option("--n", mh_n, "power for --op box")->check(CLI::PositiveNumber);
    mh->add_option("--eps", mh_eps, "box lower end");
    mh->add_option("--rmax", mh_rmax, "box upper end");
    mh->add_option("--max-depth", max_depth, "bisection depth")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Style style = table_flag ? Style::Table : Style::Json;
    const unsigned threads = resolve_threads(threads_opt);

    try {
        if (inv->parsed()) {
            const Input in = resolve_input(inv_in);
            const InvariantReport rep = in.space ? invariants(*in.space) : invariants(in.data);
            emit(out, style, with_header(input_header(in), to_json(rep)));
        } else if (sac->parsed()) {
            const Input in = resolve_input(sac_in);
            emit(out, style, with_header(input_header(in), to_json(check_condition(in.data, parse_mode(mode)))));
        } else if (bnd->parsed()) {
            const Input in = resolve_input(bounds_in);
            emit(out, style, with_header(input_header(in), to_json(bounds_report(in.data))));
        } else if (hil->parsed()) {
            const Input in = resolve_input(hilali_in);
            const HilaliVerdict v = hilali_verdict(in.data);
            emit(out, style, with_header(input_header(in), to_json(v)));
            if (v.kind == VerdictKind::PureFail) return kExitAlarm;
        } else if (cen->parsed()) {
            CensusSummary s;
            s.max_formal_dim = max_dim;
            enumerate_sac(max_dim, threads, [&](const CensusEntry& e) {
                s.add(e);
                if (summary) return;
                if (style == Style::Json)
                    out << to_json(e).dump() << '\n';
                else
                    out << render(e.data) << "  n_X=" << e.invariants.formal_dim << "  "
                        << to_string(e.verdict.kind) << '\n';
            });
            if (summary) emit(out, style, to_json(s));
            for (const auto& v : s.violations) err << "violation: " << v << '\n';
            if (s.alarm()) {
                err << "ALARM: census found a would-be counterexample\n";
                return kExitAlarm;
            }
        } else if (thr->parsed()) {
            const Input in = resolve_input(thr_in);
            const Rational eps = parse_rational(eps_text);
            const ThresholdResult r = in.space ? stabilization_threshold(*in.space, eps, threads)
                                               : stabilization_threshold(in.data, eps, threads);
            const Json header = input_header(in);
            if (style == Style::Json)
                emit(out, style, with_header(header, to_json(r)));
            else
                out << threshold_table(header, r);
            if (r.counterexample_alarm) {
                err << "ALARM: threshold " << r.threshold << " at eps = 1 exceeds 3; for elliptic data this would contradict the Hilali conjecture\n";
                return kExitAlarm;
            }
        } else if (dec->parsed()) {
            if (poly_text.empty() && poly_json.empty()) throw DomainError("one of --poly or --from-json is required");
            const RatPoly p = poly_text.empty() ? poly_from_json(read_json_file(poly_json)) : parse_poly(poly_text);
            const auto factors = decompose_projective(p, allow_spheres);
            Json j{{"poly", to_json(p)}, {"palindromic", is_palindromic(p)}, {"allow_spheres", allow_spheres}};
            if (factors) {
                Json list = Json::array();
                for (const auto& f : *factors) list.push_back(to_json(f));
                j["factors"] = std::move(list);
                j["product"] = factors->empty() ? std::string("point") : render(SpaceExpr(*factors));
            } else {
                j["factors"] = nullptr;
                j["product"] = nullptr;
            }
            emit(out, style, j);
        } else if (mh->parsed()) {
            const SpaceExpr e = parse_space(mh_space);
            Json j{{"space", render(e)}, {"op", mh_op}};
            if (mh_op == "model") {
                j["mh"] = to_json(mh_model(e));
            } else if (mh_op == "pi") {
                j["mh_pi"] = to_json(mh_pi_model(e));
            } else if (mh_op == "box") {
                const Rational eps = parse_rational(mh_eps), rmax = parse_rational(mh_rmax);
                j["n"] = mh_n;
                j["eps"] = to_json(eps);
                j["rmax"] = to_json(rmax);
                j["max_depth"] = max_depth;
                j["result"] = to_json(mh_box_inequality(e, mh_n, eps, rmax, max_depth, threads));
            } else {
                const Rational eps = parse_rational(mh_eps), rmax = parse_rational(mh_rmax);
                j["result"] = to_json(mh_box_threshold(e, eps, rmax, max_depth, threads));
            }
            emit(out, style, j);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace elliptica::cli
