#include "homeoforge/json_io.hpp"

namespace homeoforge {

json to_json(const QuadScalar& v) {
    return v.str();
}

json to_json(const Interval& v) {
    return json{{"lo", v.lo.str()}, {"hi", v.hi.str()}};
}

json to_json(const PLSegmentMap& m) {
    json breaks = json::array();
    for (const BreakPoint& p : m.breakpoints())
        breaks.push_back(json::array({p.x.str(), p.y.str()}));
    return json{{"breaks", breaks}};
}

json to_json(const PeriodizedMap& m) {
    json j = to_json(m.fundamental());
    j["period"] = m.period().str();
    return j;
}

json to_json(const CircleMap& m) {
    json j = to_json(m.lift().fundamental());
    j["circumference"] = m.circumference().str();
    return j;
}

json to_json(const Word& w) {
    json arr = json::array();
    for (const Letter& l : w.letters()) arr.push_back(json{{"id", l.id}, {"exp", l.exp}});
    return arr;
}

json to_json(const CircleArc& a) {
    return json{{"lo", a.lo.str()}, {"hi", a.hi.str()}, {"circumference", a.circ.str()}};
}

QuadScalar scalar_from_json(const json& j) {
    return QuadScalar::parse(j.get<std::string>());
}

PLSegmentMap segment_from_json(const json& j) {
    std::vector<BreakPoint> pts;
    for (const auto& b : j.at("breaks"))
        pts.push_back({QuadScalar::parse(b.at(0).get<std::string>()),
                       QuadScalar::parse(b.at(1).get<std::string>())});
    return PLSegmentMap(std::move(pts));
}

PeriodizedMap periodized_from_json(const json& j) {
    return PeriodizedMap(scalar_from_json(j.at("period")), segment_from_json(j));
}

CircleMap circle_from_json(const json& j) {
    QuadScalar c = scalar_from_json(j.at("circumference"));
    return CircleMap(c, PeriodizedMap(c, segment_from_json(j)));
}

Word word_from_json(const json& j) {
    std::vector<Letter> letters;
    for (const auto& l : j)
        letters.push_back({l.at("id").get<std::string>(), l.at("exp").get<long>()});
    return Word(std::move(letters));
}

json ring_config_to_json(const RingConfig& config) {
    json intervals = json::array();
    for (const CircleArc& a : config.intervals)
        intervals.push_back(json{{"lo", a.lo.str()}, {"hi", a.hi.str()}});
    json generators = json::array();
    for (const CircleMap& f : config.generators) generators.push_back(to_json(f));
    return json{{"n", config.n},
                {"circumference", config.circumference.str()},
                {"intervals", intervals},
                {"generators", generators}};
}

RingConfig ring_config_from_json(const json& j) {
    RingConfig config;
    config.n = j.at("n").get<int>();
    config.circumference = scalar_from_json(j.at("circumference"));
    for (const auto& a : j.at("intervals"))
        config.intervals.push_back(CircleArc::make(scalar_from_json(a.at("lo")),
                                                   scalar_from_json(a.at("hi")),
                                                   config.circumference));
    for (const auto& g : j.at("generators")) config.generators.push_back(circle_from_json(g));
    if (static_cast<int>(config.intervals.size()) != config.n ||
        static_cast<int>(config.generators.size()) != config.n)
        throw std::invalid_argument("ring config: n does not match interval/generator counts");
    // marked points: the endpoint of J_{i+1} lying inside J_i (inf preferred)
    for (int i = 1; i <= config.n; ++i) {
        const CircleArc& next = config.intervals[i % config.n];
        QuadScalar lo = reduce_mod(next.lo, config.circumference);
        QuadScalar hi = reduce_mod(next.hi, config.circumference);
        const CircleArc& cur = config.intervals[i - 1];
        config.marked.push_back(cur.contains_point(lo) ? lo : hi);
    }
    finalize_ring(config);
    return config;
}

json star_check_to_json(const StarCheck& check) {
    if (star_ok(check)) {
        const auto& cert = std::get<StarCertificate>(check);
        json orbits = json::array();
        for (const auto& row : cert.orbits) {
            json r = json::array();
            for (const auto& [pt, idx] : row)
                r.push_back(json{{"point", pt.str()}, {"interval", idx}});
            orbits.push_back(r);
        }
        return json{{"status", "certificate"}, {"orbits", orbits}};
    }
    const auto& v = std::get<StarViolation>(check);
    static const char* kinds[] = {"cover", "adjacency", "support", "marked-point", "orbit"};
    return json{{"status", "violation"},
                {"clause", kinds[v.kind]},
                {"i", v.i},
                {"j", v.j},
                {"l", v.l},
                {"detail", v.detail}};
}

json small_family_to_json(const SmallFamily& fam) {
    json L = json::array();
    for (std::size_t i = 0; i < fam.L.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < fam.L[i].size(); ++j)
            row.push_back(json{{"arc", to_json(fam.L[i][j])},
                               {"container", fam.container[i][j]}});
        L.push_back(row);
    }
    return json{{"L", L}, {"epsilon_small", fam.epsilon_small.str()}};
}

json nu_family_to_json(const NuFamily& nu) {
    json out{{"verified", nu.verified}};
    if (!nu.error.empty()) out["error"] = nu.error;
    json rows = json::array();
    for (std::size_t i = 0; i < nu.nu_word.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < nu.nu_word[i].size(); ++j)
            row.push_back(json{{"lambda", to_json(nu.lambda_word[i][j])},
                               {"nu", to_json(nu.nu_word[i][j])},
                               {"support", to_json(nu.support[i][j])}});
        rows.push_back(row);
    }
    out["family"] = rows;
    return out;
}

json surgery_to_json(const SurgeryResult& res) {
    json out{{"ok", res.ok}};
    if (!res.error.empty()) out["error"] = res.error;
    if (!res.ok) return out;
    json intervals = json::array();
    for (const Interval& iv : res.chain.intervals) intervals.push_back(to_json(iv));
    json conjugators = json::array();
    for (const PLSegmentMap& g : res.chain.conjugators) conjugators.push_back(to_json(g));
    out["chain"] = json{{"intervals", intervals},
                        {"conjugators", conjugators},
                        {"exponents", res.chain.exponents},
                        {"eps", res.chain.eps.str()},
                        {"x", res.chain.x.str()},
                        {"y", res.chain.y.str()}};
    out["h"] = to_json(res.h);
    out["x_image"] = res.x_image.str();
    json checks = json::array();
    for (const auto& sc : res.substitution_checks)
        checks.push_back(json{{"bump", sc.bump_desc},
                              {"exponents", sc.exponents},
                              {"advancing", sc.advancing},
                              {"min_displacement", sc.min_displacement.str()}});
    out["substitution_checks"] = checks;
    return out;
}

namespace {

json point_checks_to_json(const std::vector<PointCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back(json{{"point", c.point.str()},
                           {"image", c.image.str()},
                           {"required", c.required.str()},
                           {"pass", c.pass}});
    return arr;
}

}  // namespace

json zeta_to_json(const ZetaResult& res) {
    json out{{"ok", res.ok}};
    if (!res.error.empty()) out["error"] = res.error;
    out["zeta1"] = to_json(res.zeta1);
    out["zeta2"] = to_json(res.zeta2);
    out["fixing"] = point_checks_to_json(res.fixes);
    out["advancing"] = point_checks_to_json(res.advances);
    // record the translation-conjugator convention used by the construction
    out["conjugator_convention"] = "t -> t + k for 0 <= k <= N";
    return out;
}

json stability_to_json(const StabilityCertificate& cert) {
    json witnesses = json::array();
    for (const Int& m : cert.witnesses) witnesses.push_back(m.get_str());
    return json{{"element", to_json(cert.element)},
                {"I", to_json(cert.I)},
                {"N", cert.N},
                {"model", to_json(cert.model)},
                {"window", to_json(cert.window)},
                {"witnesses", witnesses}};
}

json realize_to_json(const RealizeResult& res) {
    json out{{"ok", res.ok}};
    if (!res.error.empty()) out["error"] = res.error;
    if (res.failed_step >= 0) out["failed_step"] = res.failed_step;
    out["gamma"] = to_json(res.gamma);
    out["gamma_x"] = to_json(res.gamma_x);
    json trace = json::array();
    for (const CircleArc& a : res.small_trace) trace.push_back(to_json(a));
    out["small_trace"] = trace;
    return out;
}

json winding_to_json(const WindingReport& rep) {
    json orbit = json::array();
    for (const QuadScalar& p : rep.orbit) orbit.push_back(p.str());
    return json{{"winding", rep.winding.get_str()},
                {"reduced", rep.reduced},
                {"orbit", orbit},
                {"endpoint_hit", rep.endpoint_hit},
                {"hit_step", rep.hit_step}};
}

}  // namespace homeoforge
