#include "elliptica/serialize.hpp"

#include "elliptica/errors.hpp"

namespace elliptica {

Json to_json(const Integer& x) { return x.get_str(); }
Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const RatPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"coeffs", std::move(coeffs)}};
}

Json to_json(const SturmCertificate& c) {
    Json chain = Json::array();
    for (const auto& p : c.chain) chain.push_back(to_json(p));
    return Json{{"chain", std::move(chain)},
                {"lo", to_json(c.lo)},
                {"hi", c.hi ? to_json(*c.hi) : Json("inf")},
                {"variations_lo", c.variations_lo},
                {"variations_hi", c.variations_hi},
                {"root_count", c.root_count}};
}

Json to_json(const Leaf& leaf) { return render(leaf); }

Json to_json(const ExponentData& d) { return Json{{"b", d.b()}, {"a", d.a()}}; }

Json to_json(const InvariantReport& r) {
    return Json{{"q", r.q},
                {"r", r.r},
                {"dim_pi", r.dim_pi},
                {"n_X", r.formal_dim},
                {"chi_pi", r.chi_pi},
                {"chi", to_json(r.chi)},
                {"dim_H", r.dim_H ? to_json(*r.dim_H) : Json(nullptr)}};
}

Json to_json(const SacReport& r) {
    Json subsets = Json::array();
    for (const auto& s : r.per_subset) {
        Json witnesses = Json::array();
        for (const auto& w : s.witnesses) witnesses.push_back(Json{{"b_index", w.b_index}, {"gamma", w.gamma}});
        subsets.push_back(Json{{"subset", s.subset},
                               {"covered_b_indices", s.covered_b_indices},
                               {"witnesses", std::move(witnesses)}});
    }
    return Json{{"mode", to_string(r.mode)},
                {"holds", r.holds},
                {"per_subset", std::move(subsets)},
                {"failing_subset", r.failing_subset ? Json(*r.failing_subset) : Json(nullptr)}};
}

Json to_json(const Check& c) {
    return Json{{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"holds", c.holds}};
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& x) {
    return x ? to_json(*x) : Json(nullptr);
}

Json checks_json(const std::vector<Check>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) out.push_back(to_json(c));
    return out;
}

Json named_bounds(const std::vector<std::pair<std::string, Rational>>& bounds) {
    Json out = Json::object();
    for (const auto& [name, value] : bounds) out[name] = to_json(value);
    return out;
}

}  // namespace

Json to_json(const BoundsReport& r) {
    Json pavlov = Json::array();
    for (const auto& c : r.pavlov_perdegree) pavlov.push_back(to_json(c));
    return Json{{"q_poly", to_json(r.q_poly)},
                {"q_at_1", to_json(r.q_at_1)},
                {"fh_bound", to_json(r.fh_bound)},
                {"pow2_nx", to_json(r.pow2_nx)},
                {"pow2_nx_minus_r", to_json(r.pow2_nx_minus_r)},
                {"b1_bound", optional_json(r.b1_bound)},
                {"amgm_bound", optional_json(r.amgm_bound)},
                {"pavlov_perdegree", std::move(pavlov)},
                {"pavlov_total", to_json(r.pavlov_total)},
                {"giant", to_json(r.giant)},
                {"sac_holds", r.sac_holds},
                {"ordering_checks", checks_json(r.ordering_checks)}};
}

Json to_json(const HilaliVerdict& v) {
    Json j{{"kind", to_string(v.kind)}, {"dim_pi", v.dim_pi}};
    switch (v.kind) {
        case VerdictKind::Verified:
        case VerdictKind::PureFail:
            j["dim_H"] = optional_json(v.dim_H);
            break;
        case VerdictKind::BoundsConsistent:
            j["upper_bounds"] = named_bounds(v.upper_bounds);
            j["min_upper_bound"] = to_json(v.min_upper_bound);
            j["dim_H_lower_bound"] = to_json(v.dim_H_lower_bound);
            j["dim_pi_within_upper_bound"] = v.dim_pi_within_upper_bound;
            break;
        case VerdictKind::NotApplicable:
            j["reason"] = v.reason;
            break;
    }
    return j;
}

Json to_json(const CensusEntry& e) {
    return Json{{"data", to_json(e.data)},
                {"invariants", to_json(e.invariants)},
                {"sac", to_json(e.sac)},
                {"bounds", to_json(e.bounds)},
                {"verdict", to_json(e.verdict)}};
}

Json to_json(const CensusSummary& s) {
    Json per_dim = Json::object();
    for (const auto& [n, count] : s.per_formal_dim) per_dim[std::to_string(n)] = count;
    Json per_qr = Json::array();
    for (const auto& [qr, count] : s.per_qr) per_qr.push_back(Json{{"q", qr.first}, {"r", qr.second}, {"count", count}});
    return Json{{"max_formal_dim", s.max_formal_dim},
                {"total", s.total},
                {"per_n_X", std::move(per_dim)},
                {"per_qr", std::move(per_qr)},
                {"verified", s.verified},
                {"bounds_consistent", s.bounds_consistent},
                {"pure_fail", s.pure_fail},
                {"not_applicable", s.not_applicable},
                {"violations", s.violations},
                {"alarm", s.alarm()}};
}

Json to_json(const PowerCheck& c) {
    Json j{{"n", c.n}, {"holds", c.holds}, {"method", c.method}, {"value_at_eps", to_json(c.value_at_eps)}};
    if (c.chain_length) j["chain_length"] = *c.chain_length;
    if (c.root_count) j["root_count"] = *c.root_count;
    if (c.cells) j["cells"] = *c.cells;
    if (c.tail_from) j["tail_from"] = to_json(*c.tail_from);
    if (c.witness) j["witness"] = to_json(*c.witness);
    return j;
}

Json to_json(const ThresholdResult& r) {
    Json per_n = Json::array();
    for (const auto& c : r.per_n) per_n.push_back(to_json(c));
    return Json{{"eps", to_json(r.eps)},
                {"threshold", r.threshold},
                {"tail_constant", r.tail_constant},
                {"degenerate", r.degenerate},
                {"counterexample_alarm", r.counterexample_alarm},
                {"per_n", std::move(per_n)}};
}

Json to_json(const MHPoly& m) {
    Json terms = Json::array();
    for (const auto& [key, dim] : m.terms()) {
        const auto [k, p, q] = key;
        terms.push_back(Json{{"k", k}, {"p", p}, {"q", q}, {"dim", to_json(dim)}});
    }
    return Json{{"terms", std::move(terms)}};
}

Json to_json(const BoxResult& r) {
    Json j{{"verdict", to_string(r.verdict)}, {"cells", r.cells}};
    if (r.witness)
        j["witness"] = Json{{"t", to_json((*r.witness)[0])}, {"u", to_json((*r.witness)[1])}, {"v", to_json((*r.witness)[2])}};
    return j;
}

Json to_json(const BoxThresholdResult& r) {
    Json per_n = Json::array();
    for (std::size_t i = 0; i < r.per_n.size(); ++i) {
        Json item{{"n", i + 1}};
        item.update(to_json(r.per_n[i]));
        per_n.push_back(std::move(item));
    }
    return Json{{"eps", to_json(r.eps)},
                {"rmax", to_json(r.rmax)},
                {"max_depth", r.max_depth},
                {"decided", r.decided},
                {"threshold", r.threshold ? Json(*r.threshold) : Json(nullptr)},
                {"tail_constant", r.tail_constant},
                {"per_n", std::move(per_n)}};
}

namespace {

std::vector<int> int_list(const Json& j, const char* key) {
    if (!j.contains(key)) return {};
    const Json& v = j.at(key);
    if (!v.is_array()) throw DomainError(std::string("\"") + key + "\" must be an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw DomainError(std::string("\"") + key + "\" must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Rational rational_from(const Json& x) {
    if (x.is_number_integer()) return Rational(x.get<long>());
    if (x.is_string()) return parse_rational(x.get<std::string>());
    throw DomainError("coefficient must be an integer or a rational string");
}

}  // namespace

ExponentData exponent_data_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("exponent data must be a JSON object");
    return ExponentData(int_list(j, "b"), int_list(j, "a"));
}

RatPoly ratpoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw DomainError("polynomial must be {\"coeffs\": [...]}");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from(c));
    return RatPoly(std::move(coeffs));
}

MHPoly mhpoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw DomainError("mixed Hodge polynomial must be {\"terms\": [...]}");
    MHPoly m;
    for (const auto& t : j.at("terms")) {
        const Rational dim = rational_from(t.at("dim"));
        if (dim.get_den() != 1) throw DomainError("dimensions must be integers");
        m.add_term(t.at("k").get<int>(), t.at("p").get<int>(), t.at("q").get<int>(), dim.get_num());
    }
    return m;
}

}  // namespace elliptica
