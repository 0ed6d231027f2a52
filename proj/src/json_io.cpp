#include "zgdof/json_io.hpp"

#include <sstream>

namespace zgdof {

namespace {

long long to_i64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw DomainError("rational component exceeds 64-bit JSON range: " + v.str());
    return v.convert_to<long long>();
}

std::string topology_name(Topology t) { return t == Topology::IC ? "IC" : "BC"; }
std::string csit_name(Csit c) { return c == Csit::Perfect ? "p" : "fp"; }

} // namespace

Json rational_to_json(const Rational& r) {
    return Json{{"num", to_i64(numerator(r))}, {"den", to_i64(denominator(r))}};
}

Rational rational_from_json(const Json& j) {
    const long long den = j.at("den").get<long long>();
    if (den == 0) throw DomainError("rational with zero denominator in JSON");
    return Rational(Int(j.at("num").get<long long>()), Int(den));
}

Json region_to_json(const GdofRegion& region) {
    Json j;
    j["alpha"] = rational_to_json(region.params.alpha);
    j["beta"] = rational_to_json(region.params.beta);
    j["topology"] = topology_name(region.scenario.topology);
    j["csit"] = csit_name(region.scenario.csit);
    j["regime"] = regime_name(region.regime.id);
    j["halfspaces"] = Json::array();
    for (const auto& h : region.halfspaces)
        j["halfspaces"].push_back(Json{
            {"a", Json::array({rational_to_json(h.a1), rational_to_json(h.a2)})},
            {"b", rational_to_json(h.b)}});
    j["vertices"] = Json::array();
    for (const auto& v : region.vertices)
        j["vertices"].push_back(Json::array({rational_to_json(v.d1), rational_to_json(v.d2)}));
    return j;
}

GdofRegion region_from_json(const Json& j) {
    const ChannelParams params{rational_from_json(j.at("alpha")),
                               rational_from_json(j.at("beta"))};
    const ScenarioTag scenario{
        j.at("topology").get<std::string>() == "IC" ? Topology::IC : Topology::BC,
        j.at("csit").get<std::string>() == "p" ? Csit::Perfect : Csit::FinitePrecision};
    GdofRegion region{params, scenario, classify_regime(params, scenario), {}, {}};
    for (const auto& h : j.at("halfspaces"))
        region.halfspaces.push_back({rational_from_json(h.at("a").at(0)),
                                     rational_from_json(h.at("a").at(1)),
                                     rational_from_json(h.at("b"))});
    for (const auto& v : j.at("vertices"))
        region.vertices.push_back({rational_from_json(v.at(0)), rational_from_json(v.at(1))});
    return region;
}

std::string region_to_csv(const GdofRegion& region) {
    std::ostringstream out;
    out << "d1_num,d1_den,d2_num,d2_den,d1,d2\n";
    for (const auto& v : region.vertices)
        out << numerator(v.d1) << "," << denominator(v.d1) << "," << numerator(v.d2)
            << "," << denominator(v.d2) << "," << rational_to_double(v.d1) << ","
            << rational_to_double(v.d2) << "\n";
    return out.str();
}

Json stacking_problem_to_json(const StackingProblem& problem) {
    Json j;
    j["boxes"] = Json::array();
    for (const auto& b : problem.boxes)
        j["boxes"].push_back(Json{{"id", b.id},
                                  {"source", b.source == BoxSource::T ? "T" : "U"},
                                  {"level", rational_to_json(b.level)},
                                  {"height", rational_to_json(b.height)}});
    j["query"] = problem.query;
    return j;
}

StackingProblem stacking_problem_from_json(const Json& j) {
    StackingProblem problem;
    for (const auto& bj : j.at("boxes")) {
        Box b;
        b.id = bj.at("id").get<std::string>();
        const std::string src = bj.at("source").get<std::string>();
        if (src != "T" && src != "U") throw DomainError("box source must be T or U");
        b.source = src == "T" ? BoxSource::T : BoxSource::U;
        b.level = rational_from_json(bj.at("level"));
        b.height = rational_from_json(bj.at("height"));
        problem.boxes.push_back(std::move(b));
    }
    if (j.contains("query"))
        problem.query = j.at("query").get<std::vector<std::string>>();
    return problem;
}

Json window_plan_to_json(const WindowPlan& plan) {
    Json j;
    j["p"] = rational_to_string(plan.p);
    j["q"] = rational_to_string(plan.q);
    j["mu"] = rational_to_string(plan.mu);
    j["nu"] = rational_to_string(plan.nu);
    j["slice_height"] = rational_to_string(plan.slice_height);
    j["ptilde"] = plan.ptilde;
    j["qtilde"] = plan.qtilde;
    j["boxes"] = stacking_problem_to_json({plan.boxes, {}})["boxes"];
    j["windows"] = plan.windows;
    return j;
}

Json inequality_to_json(const InequalityStatement& st) {
    return Json{{"lhs_coeff", rational_to_string(st.lhs_coeff)},
                {"rhs_coeff", rational_to_string(st.rhs_coeff)},
                {"conditioning", st.conditioning},
                {"text", st.text}};
}

Json sim_point_to_json(const SimPoint& point) {
    Json j;
    j["P"] = point.P;
    j["trials"] = point.trials;
    j["seed"] = point.seed;
    j["kind"] = point.kind;
    j["preset"] = point.preset;
    if (!point.decoders.empty()) {
        j["decoders"] = Json::array();
        for (const auto& d : point.decoders)
            j["decoders"].push_back(Json{{"name", d.name},
                                         {"errors", d.errors},
                                         {"rate", d.rate},
                                         {"wilson_halfwidth", d.halfwidth}});
        j["joint_errors"] = point.joint_errors;
        j["joint_rate"] = point.joint_rate;
        j["joint_wilson_halfwidth"] = point.joint_halfwidth;
        j["analytic_bound"] = point.analytic_bound;
        j["leakage_bits"] = point.leakage_bits;
    }
    j["R1_lb"] = point.R1_lb;
    j["R2_lb"] = point.R2_lb;
    j["d1"] = point.d1;
    j["d2"] = point.d2;
    if (point.eavesdropper_sinr_mean != 0)
        j["eavesdropper_sinr_mean"] = point.eavesdropper_sinr_mean;
    if (point.residual_cross_power != 0)
        j["residual_cross_power"] = point.residual_cross_power;
    // Wall time deliberately omitted: output must be byte-identical across
    // runs with the same (subcommand, flags, seed). It goes to stderr.
    return j;
}

Json sim_report_to_json(const SimReport& report) {
    Json j;
    j["kind"] = scheme_kind_name(report.base.kind);
    j["preset"] = preset_name(report.base.preset);
    j["alpha"] = rational_to_string(report.base.params.alpha);
    j["beta"] = rational_to_string(report.base.params.beta);
    j["epsilon"] = report.base.epsilon;
    j["points"] = Json::array();
    for (const auto& p : report.points) j["points"].push_back(sim_point_to_json(p));
    return j;
}

std::string sim_report_to_csv(const SimReport& report) {
    std::ostringstream out;
    out << "P,metric,value\n";
    auto row = [&](double P, const std::string& metric, double value) {
        out << P << "," << metric << "," << value << "\n";
    };
    for (const auto& p : report.points) {
        for (const auto& d : p.decoders) row(p.P, "error_" + d.name, d.rate);
        if (!p.decoders.empty()) {
            row(p.P, "error_joint", p.joint_rate);
            row(p.P, "analytic_bound", p.analytic_bound);
            row(p.P, "leakage_bits", p.leakage_bits);
        }
        row(p.P, "R1_lb", p.R1_lb);
        row(p.P, "R2_lb", p.R2_lb);
        row(p.P, "d1", p.d1);
        row(p.P, "d2", p.d2);
    }
    return out.str();
}

Json const_lemma_to_json(const ConstLemmaReport& report) {
    return Json{{"observed_support_size", report.observed_support_size},
                {"bound", report.bound},
                {"pass", report.pass},
                {"min_value", report.min_value},
                {"max_value", report.max_value}};
}

Json bczf_to_json(const BcZfReport& report, const ChannelParams& params, double P) {
    return Json{{"alpha", rational_to_string(params.alpha)},
                {"beta", rational_to_string(params.beta)},
                {"P", P},
                {"residual_cross_power", report.residual_cross_power},
                {"d1", report.d1},
                {"d2", report.d2},
                {"snr1_mean_db", report.snr1_mean_db},
                {"snr2_mean_db", report.snr2_mean_db}};
}

std::string ratio_table_to_csv(const RatioScanResult& result) {
    std::ostringstream out;
    out << "alpha,beta,w1,w2,ratio_num,ratio_den,ratio\n";
    for (const auto& row : result.table)
        out << rational_to_string(row.alpha) << "," << rational_to_string(row.beta) << ","
            << rational_to_string(row.w1) << "," << rational_to_string(row.w2) << ","
            << numerator(row.ratio) << "," << denominator(row.ratio) << ","
            << rational_to_double(row.ratio) << "\n";
    return out.str();
}

} // namespace zgdof
