#include "zgdof/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "zgdof/json_io.hpp"
#include "zgdof/latticesim.hpp"
#include "zgdof/region.hpp"
#include "zgdof/rng.hpp"
#include "zgdof/sumset.hpp"

namespace zgdof {

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Json manifest(const std::vector<std::string>& args, std::uint64_t seed) {
    std::string joined;
    // --jobs cannot affect results (block-ordered reduction), so it is left
    // out of the digest: reruns at a different parallelism hash identically.
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--jobs") {
            ++i;
            continue;
        }
        joined += args[i];
        joined += '\x1f';
    }
    std::ostringstream digest;
    digest << std::hex << fnv1a(joined);
    return Json{{"version", kVersion}, {"seed", seed}, {"input_digest", digest.str()}};
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw std::invalid_argument("empty numeric list");
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

ScenarioTag parse_scenario(const std::string& topology, const std::string& csit) {
    ScenarioTag tag{};
    if (topology == "ic") tag.topology = Topology::IC;
    else if (topology == "bc") tag.topology = Topology::BC;
    else throw std::invalid_argument("topology must be ic or bc");
    if (csit == "p" || csit == "perfect") tag.csit = Csit::Perfect;
    else if (csit == "fp") tag.csit = Csit::FinitePrecision;
    else throw std::invalid_argument("csit must be p or fp");
    return tag;
}

SchemeKind parse_scheme_kind(const std::string& name) {
    if (name == "r1-perfect") return SchemeKind::LatticeR1Perfect;
    if (name == "r2-perfect") return SchemeKind::LatticeR2Perfect;
    if (name == "r1-fp") return SchemeKind::JamR1Fp;
    if (name == "r2-fp") return SchemeKind::JamR2Fp;
    if (name == "r4-fp") return SchemeKind::JamR4Fp;
    if (name == "bc-zf") return SchemeKind::BcZeroForcing;
    throw std::invalid_argument("unknown scheme: " + name);
}

Preset parse_preset(const std::string& name) {
    if (name == "verbatim") return Preset::Verbatim;
    if (name == "calibrated") return Preset::Calibrated;
    throw std::invalid_argument("preset must be verbatim or calibrated");
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ZGDOF_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

// Writes `text` to --out path, or to `fallback` when no path was given.
void deliver(const std::string& text, const std::string& out_path, std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << text;
        if (!text.empty() && text.back() != '\n') fallback << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot open output file: " + out_path);
    f << text;
}

Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open file: " + path);
    Json j;
    f >> j;
    return j;
}

struct SweepRunner {
    // Resumable grid execution: rows already present in the output CSV
    // (matched by their key column) are skipped on rerun.
    static void run(const Json& config, const std::string& out_path, std::ostream& err) {
        std::set<std::string> done;
        bool has_existing = false;
        {
            std::ifstream existing(out_path);
            std::string line;
            while (existing && std::getline(existing, line)) {
                has_existing = true;
                const auto comma = line.find(',');
                if (comma != std::string::npos && line.substr(0, comma) != "key")
                    done.insert(line.substr(0, comma));
            }
        }
        std::ofstream f(out_path, std::ios::app);
        if (!f) throw IoError("cannot open sweep output: " + out_path);

        const std::string type = config.at("type").get<std::string>();
        if (type == "ratio") {
            if (!has_existing) f << "key,alpha,beta,w1,w2,ratio\n";
            std::vector<WeightVector> weights;
            for (const auto& w : config.value("weights", Json::array()))
                weights.emplace_back(parse_rational(w.at(0).get<std::string>()),
                                     parse_rational(w.at(1).get<std::string>()));
            const bool extremal = config.value("extremal_weights", false);
            for (const auto& aj : config.at("alphas")) {
                const Rational alpha = parse_rational(aj.get<std::string>());
                std::vector<WeightVector> ws = weights;
                if (extremal && alpha > 1) {
                    ws.emplace_back(alpha - 1, Rational(1));
                    ws.emplace_back(Rational(1), alpha - 1);
                }
                for (const auto& bj : config.at("betas")) {
                    const Rational beta = parse_rational(bj.get<std::string>());
                    for (const auto& w : ws) {
                        const std::string key = rational_to_string(alpha) + "|" +
                                                rational_to_string(beta) + "|" +
                                                rational_to_string(w.w1) + "|" +
                                                rational_to_string(w.w2);
                        if (!done.insert(key).second) continue;
                        Rational ratio;
                        try {
                            ratio = fp_to_p_ratio({alpha, beta}, w);
                        } catch (const UndefinedRatio&) {
                            continue;
                        }
                        f << key << "," << rational_to_string(alpha) << ","
                          << rational_to_string(beta) << "," << rational_to_string(w.w1)
                          << "," << rational_to_string(w.w2) << ","
                          << rational_to_double(ratio) << "\n";
                        f.flush(); // partial results survive interruption
                    }
                }
            }
        } else if (type == "simulate") {
            if (!has_existing) f << "key,P,metric,value\n";
            SchemeConfig base{parse_scheme_kind(config.at("scheme").get<std::string>()),
                              ChannelParams{parse_rational(config.at("alpha").get<std::string>()),
                                            parse_rational(config.at("beta").get<std::string>())}};
            base.epsilon = config.value("epsilon", 0.05);
            base.preset = parse_preset(config.value("preset", std::string("calibrated")));
            base.delta = config.value("delta", 2.0);
            const std::size_t trials = config.value("trials", 10000);
            const std::uint64_t seed = config.value("seed", kDefaultSeed);
            for (const auto& pj : config.at("P")) {
                const double P = pj.get<double>();
                std::ostringstream keys;
                keys << scheme_kind_name(base.kind) << "|" << P << "|" << trials << "|" << seed;
                if (done.count(keys.str())) continue;
                SchemeConfig cfg = base;
                cfg.P = P;
                const SimPoint point = simulate(build_scheme(cfg), trials, seed, default_jobs());
                SimReport report{cfg, {point}};
                std::istringstream rows(sim_report_to_csv(report));
                std::string line;
                std::getline(rows, line); // drop header
                while (std::getline(rows, line)) f << keys.str() << "," << line << "\n";
                f.flush();
                err << "sweep: completed P=" << P << "\n";
            }
        } else {
            throw ConfigError("sweep type must be ratio or simulate");
        }
    }
};

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secure GDoF regions, box-stacking sum-set checks, and achievability simulators for the Z channel"};
    app.require_subcommand(1);

    // Shared option storage (each subcommand binds what it needs).
    std::string alpha_s, beta_s, topology = "ic", csit = "fp", format = "json", out_path;
    std::string w1_s = "1", w2_s = "0", d2_s;
    std::string alphas_s, betas_s, weights_s;
    bool extremal = false;
    double P = 1e6, epsilon = 0.05, delta = 2.0, g1 = 1.0, g2 = 1.0;
    bool have_g = false;
    std::string x_s, l1_s, l2_s;
    std::string file_path, query_s;
    bool with_oracle = false;
    std::string p_s = "1", q_s = "1", mu_s = "0", nu_s = "0";
    std::string scheme_s, preset_s = "calibrated";
    std::string P_list_s = "1000000";
    std::size_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = default_jobs();
    bool noiseless = false, exhaustive = false;
    std::string lambda_s = "2", muc_s = "1", nuc_s = "1";
    std::string config_path, in_path, kind_s;

    auto add_region_flags = [&](CLI::App* cmd, bool need_scenario) {
        cmd->add_option("--alpha", alpha_s, "direct-link exponent (rational, e.g. 3/2)")->required();
        cmd->add_option("--beta", beta_s, "cross-link exponent (rational)")->required();
        if (need_scenario) {
            cmd->add_option("--topology", topology, "ic or bc");
            cmd->add_option("--csit", csit, "p or fp");
        }
    };

    auto* c_classify = app.add_subcommand("classify", "classify (alpha, beta) into its regime");
    add_region_flags(c_classify, true);

    auto* c_region = app.add_subcommand("region", "compute the GDoF region polytope");
    add_region_flags(c_region, true);
    c_region->add_option("--format", format, "json or csv");
    c_region->add_option("--out", out_path, "output file (default stdout)");

    auto* c_wmax = app.add_subcommand("weighted-max", "maximize w1*d1 + w2*d2 over a region");
    add_region_flags(c_wmax, true);
    c_wmax->add_option("--w1", w1_s, "weight on d1 (rational)");
    c_wmax->add_option("--w2", w2_s, "weight on d2 (rational)");
    c_wmax->add_option("--d2", d2_s, "constrain d2 to this exact value");

    auto* c_rscan = app.add_subcommand("ratio-scan", "fp-to-perfect ratio over a grid");
    c_rscan->add_option("--alphas", alphas_s, "comma list of rationals")->required();
    c_rscan->add_option("--betas", betas_s, "comma list of rationals")->required();
    c_rscan->add_option("--weights", weights_s, "comma list of w1:w2 rational pairs");
    c_rscan->add_flag("--extremal-weights", extremal,
                      "add per-point weights (alpha-1,1) and (1,alpha-1)");
    c_rscan->add_option("--format", format, "json or csv");
    c_rscan->add_option("--out", out_path, "output file");

    auto* c_subsection = app.add_subcommand("subsection", "extract a power-level sub-section");
    c_subsection->add_option("--P", P, "nominal power (> 1)")->required();
    c_subsection->add_option("--x", x_s, "input value (nonnegative integer)")->required();
    c_subsection->add_option("--l1", l1_s, "lower level (rational)")->required();
    c_subsection->add_option("--l2", l2_s, "upper level (rational)")->required();

    auto* c_stack = app.add_subcommand("stack-check", "box-stacking feasibility");
    c_stack->add_option("--file", file_path, "StackingProblem JSON file")->required();
    c_stack->add_option("--query", query_s, "comma list of box ids (overrides file query)");
    c_stack->add_flag("--oracle", with_oracle, "also run the brute-force oracle");

    auto* c_window = app.add_subcommand("window-plan", "sliding-window slices and inequality");
    c_window->add_option("--p", p_s, "p (rational)")->required();
    c_window->add_option("--q", q_s, "q (rational)")->required();
    c_window->add_option("--mu", mu_s, "reserved top of T (rational)");
    c_window->add_option("--nu", nu_s, "reserved top of U (rational)");

    auto* c_sim = app.add_subcommand("simulate", "Monte Carlo scheme simulation");
    c_sim->add_option("--scheme", scheme_s,
                      "r1-perfect, r2-perfect, r1-fp, r2-fp, r4-fp, or bc-zf")->required();
    c_sim->add_option("--alpha", alpha_s, "rational")->required();
    c_sim->add_option("--beta", beta_s, "rational")->required();
    c_sim->add_option("--P", P_list_s, "comma list of power values");
    c_sim->add_option("--eps", epsilon, "lattice epsilon");
    c_sim->add_option("--trials", trials, "Monte Carlo trials per P");
    c_sim->add_option("--seed", seed, "RNG seed");
    c_sim->add_option("--jobs", jobs, "worker threads (default ZGDOF_JOBS or 1)");
    c_sim->add_option("--preset", preset_s, "verbatim or calibrated");
    c_sim->add_option("--delta", delta, "gain magnitude bound for fp/BC schemes");
    c_sim->add_flag("--noiseless", noiseless, "force zero noise");
    c_sim->add_flag("--exhaustive-oracle", exhaustive,
                    "run the exhaustive noiseless decoder oracle instead of sampling");
    c_sim->add_option("--format", format, "json or csv");
    c_sim->add_option("--out", out_path, "output file");

    auto* c_leak = app.add_subcommand("leakage", "exact lattice leakage proxy in bits");
    c_leak->add_option("--scheme", scheme_s, "r1-perfect or r2-perfect")->required();
    c_leak->add_option("--alpha", alpha_s, "rational")->required();
    c_leak->add_option("--beta", beta_s, "rational")->required();
    c_leak->add_option("--P", P, "power");
    c_leak->add_option("--eps", epsilon, "lattice epsilon");
    c_leak->add_option("--preset", preset_s, "verbatim or calibrated");

    auto* c_const = app.add_subcommand("verify-const", "bounded-support distortion check");
    c_const->add_option("--lambda", lambda_s, "section width of T (rational)");
    c_const->add_option("--mu", muc_s, "section width of U (rational)");
    c_const->add_option("--nu", nuc_s, "discarded bottom levels (rational)");
    c_const->add_option("--delta", delta, "gain magnitude bound");
    c_const->add_option("--trials", trials, "Monte Carlo trials (0 = exhaustive)");
    c_const->add_option("--P", P, "power");
    c_const->add_option("--seed", seed, "RNG seed");
    c_const->add_option("--g1", g1, "fixed gain 1")->each([&](const std::string&) { have_g = true; });
    c_const->add_option("--g2", g2, "fixed gain 2")->each([&](const std::string&) { have_g = true; });

    auto* c_bczf = app.add_subcommand("bc-zf", "broadcast zero-forcing diagnostics");
    c_bczf->add_option("--alpha", alpha_s, "rational")->required();
    c_bczf->add_option("--beta", beta_s, "rational")->required();
    c_bczf->add_option("--P", P, "power");
    c_bczf->add_option("--trials", trials, "gain draws");
    c_bczf->add_option("--seed", seed, "RNG seed");
    c_bczf->add_option("--delta", delta, "gain magnitude bound");

    auto* c_sweep = app.add_subcommand("sweep", "resumable grid sweep from a JSON config");
    c_sweep->add_option("--config", config_path, "sweep config JSON")->required();
    c_sweep->add_option("--out", out_path, "output CSV path")->required();

    auto* c_plot = app.add_subcommand("plot-data",
                                      "flatten a result JSON into plot-ready CSV.\n"
                                      "Columns: region -> vertex rows with exact num/den and "
                                      "decimal columns; error_curve -> P, joint error, analytic "
                                      "bound, leakage; ratio_surface -> alpha, beta, w1, w2, ratio");
    c_plot->add_option("--kind", kind_s, "region, error_curve, or ratio_surface")->required();
    c_plot->add_option("--in", in_path, "result JSON file")->required();
    c_plot->add_option("--out", out_path, "output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed); // CLI11 consumes in reverse order
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }

    auto emit = [&](const Json& j) { deliver(j.dump(2), out_path, out); };

    if (*c_classify) {
        const ChannelParams params{parse_rational(alpha_s), parse_rational(beta_s)};
        const RegimeId regime = classify_regime(params, parse_scenario(topology, csit));
        Json j{{"alpha", rational_to_string(params.alpha)},
               {"beta", rational_to_string(params.beta)},
               {"topology", topology},
               {"csit", csit},
               {"regime", regime_name(regime.id)},
               {"boundaries",
                Json{{"beta_eq_1", regime.on_beta_one},
                     {"alpha_eq_beta", regime.on_alpha_eq_beta},
                     {"alpha_eq_beta_minus_1", regime.on_alpha_eq_beta_minus_1}}},
               {"manifest", manifest(args, 0)}};
        emit(j);
    } else if (*c_region) {
        const GdofRegion region = gdof_region({parse_rational(alpha_s), parse_rational(beta_s)},
                                              parse_scenario(topology, csit));
        if (format == "csv") deliver(region_to_csv(region), out_path, out);
        else {
            Json j = region_to_json(region);
            j["manifest"] = manifest(args, 0);
            emit(j);
        }
    } else if (*c_wmax) {
        const GdofRegion region = gdof_region({parse_rational(alpha_s), parse_rational(beta_s)},
                                              parse_scenario(topology, csit));
        std::optional<Rational> constraint;
        if (!d2_s.empty()) constraint = parse_rational(d2_s);
        const MaxResult res = weighted_max(
            region, WeightVector{parse_rational(w1_s), parse_rational(w2_s)}, constraint);
        emit(Json{{"value", rational_to_string(res.value)},
                  {"argmax", Json::array({rational_to_string(res.argmax.d1),
                                          rational_to_string(res.argmax.d2)})},
                  {"manifest", manifest(args, 0)}});
    } else if (*c_rscan) {
        std::vector<WeightVector> weights;
        if (!weights_s.empty())
            for (const auto& pair : split(weights_s, ',')) {
                const auto parts = split(pair, ':');
                if (parts.size() != 2) throw std::invalid_argument("weights must be w1:w2 pairs");
                weights.emplace_back(parse_rational(parts[0]), parse_rational(parts[1]));
            }
        const RatioScanResult res = ratio_scan(parse_rational_list(alphas_s),
                                               parse_rational_list(betas_s), weights, extremal);
        if (format == "csv") deliver(ratio_table_to_csv(res), out_path, out);
        else {
            Json table = Json::array();
            for (const auto& row : res.table)
                table.push_back(Json{{"alpha", rational_to_string(row.alpha)},
                                     {"beta", rational_to_string(row.beta)},
                                     {"w1", rational_to_string(row.w1)},
                                     {"w2", rational_to_string(row.w2)},
                                     {"ratio", rational_to_string(row.ratio)},
                                     {"ratio_decimal", rational_to_double(row.ratio)}});
            emit(Json{{"min_ratio", rational_to_string(res.min_ratio)},
                      {"min_ratio_decimal", rational_to_double(res.min_ratio)},
                      {"argmin", Json{{"alpha", rational_to_string(res.argmin.alpha)},
                                      {"beta", rational_to_string(res.argmin.beta)},
                                      {"w1", rational_to_string(res.argmin.w1)},
                                      {"w2", rational_to_string(res.argmin.w2)}}},
                      {"table", table},
                      {"manifest", manifest(args, 0)}});
        }
    } else if (*c_subsection) {
        const PowerContext ctx(P);
        const Rational l1 = parse_rational(l1_s), l2 = parse_rational(l2_s);
        const LevelValue x{Int(x_s), l2};
        const LevelValue section = subsection(x, l1, l2, ctx);
        emit(Json{{"value", section.value.str()},
                  {"level_cap", rational_to_string(section.level_cap)},
                  {"pbar_l1", ctx.pbar(l1).str()},
                  {"pbar_l2", ctx.pbar(l2).str()},
                  {"manifest", manifest(args, 0)}});
    } else if (*c_stack) {
        StackingProblem problem = stacking_problem_from_json(load_json_file(file_path));
        if (!query_s.empty()) problem.query = split(query_s, ',');
        const StackResult res = stacking_feasible(problem);
        Json j{{"feasible", res.feasible}, {"order", res.order}};
        if (with_oracle) j["oracle_feasible"] = brute_force_feasible(problem);
        j["manifest"] = manifest(args, 0);
        emit(j);
    } else if (*c_window) {
        const WindowPlan plan = sliding_window_plan(parse_rational(p_s), parse_rational(q_s),
                                                    parse_rational(mu_s), parse_rational(nu_s));
        Json j = window_plan_to_json(plan);
        j["inequality"] = inequality_to_json(sumset_inequality(plan));
        j["manifest"] = manifest(args, seed);
        emit(j);
    } else if (*c_sim) {
        SchemeConfig cfg{parse_scheme_kind(scheme_s),
                         ChannelParams{parse_rational(alpha_s), parse_rational(beta_s)}};
        cfg.epsilon = epsilon;
        cfg.preset = parse_preset(preset_s);
        cfg.delta = delta;
        SimReport report{cfg, {}};
        for (double p_value : parse_double_list(P_list_s)) {
            cfg.P = p_value;
            const Scheme scheme = build_scheme(cfg);
            if (exhaustive) {
                const std::size_t failures = noiseless_exhaustive_failures(scheme);
                SimPoint point;
                point.P = p_value;
                point.kind = scheme_kind_name(cfg.kind);
                point.preset = preset_name(cfg.preset);
                point.joint_errors = failures;
                point.decoders.push_back({"exhaustive_oracle", failures, 0.0, 0.0});
                report.points.push_back(point);
                err << "exhaustive oracle at P=" << p_value << ": " << failures
                    << " failures\n";
                continue;
            }
            SimPoint point = simulate(scheme, trials, seed, jobs, noiseless);
            err << "simulated P=" << p_value << " in " << point.wall_seconds << "s\n";
            report.points.push_back(point);
        }
        report.base = cfg;
        if (format == "csv") deliver(sim_report_to_csv(report), out_path, out);
        else {
            Json j = sim_report_to_json(report);
            j["manifest"] = manifest(args, seed);
            emit(j);
        }
    } else if (*c_leak) {
        SchemeConfig cfg{parse_scheme_kind(scheme_s),
                         ChannelParams{parse_rational(alpha_s), parse_rational(beta_s)}};
        cfg.P = P;
        cfg.epsilon = epsilon;
        cfg.preset = parse_preset(preset_s);
        const double bits = leakage_check(build_scheme(cfg));
        emit(Json{{"leakage_bits", bits}, {"P", P}, {"manifest", manifest(args, 0)}});
    } else if (*c_const) {
        const PowerContext ctx(P);
        std::optional<std::pair<double, double>> fixed;
        if (have_g) fixed = std::make_pair(g1, g2);
        const ConstLemmaReport report =
            verify_const_lemma(parse_rational(lambda_s), parse_rational(muc_s),
                               parse_rational(nuc_s), delta, trials, ctx, seed, fixed);
        Json j = const_lemma_to_json(report);
        j["manifest"] = manifest(args, seed);
        emit(j);
    } else if (*c_bczf) {
        const ChannelParams params{parse_rational(alpha_s), parse_rational(beta_s)};
        const BcZfReport report = bc_zero_forcing(params, P, trials, seed, delta);
        Json j = bczf_to_json(report, params, P);
        j["manifest"] = manifest(args, seed);
        emit(j);
    } else if (*c_sweep) {
        SweepRunner::run(load_json_file(config_path), out_path, err);
        err << "sweep complete: " << out_path << "\n";
    } else if (*c_plot) {
        const Json input = load_json_file(in_path);
        std::string csv;
        if (kind_s == "region") {
            if (!input.contains("vertices")) throw KindMismatch("input is not a region result");
            csv = region_to_csv(region_from_json(input));
        } else if (kind_s == "error_curve") {
            if (!input.contains("points")) throw KindMismatch("input is not a simulate result");
            std::ostringstream rows;
            rows << "P,error_joint,analytic_bound,leakage_bits\n";
            for (const auto& p : input.at("points"))
                rows << p.at("P").get<double>() << "," << p.value("joint_rate", 0.0) << ","
                     << p.value("analytic_bound", 0.0) << "," << p.value("leakage_bits", 0.0)
                     << "\n";
            csv = rows.str();
        } else if (kind_s == "ratio_surface") {
            if (!input.contains("table")) throw KindMismatch("input is not a ratio-scan result");
            std::ostringstream rows;
            rows << "alpha,beta,w1,w2,ratio\n";
            for (const auto& r : input.at("table"))
                rows << r.at("alpha").get<std::string>() << "," << r.at("beta").get<std::string>()
                     << "," << r.at("w1").get<std::string>() << ","
                     << r.at("w2").get<std::string>() << "," << r.at("ratio_decimal").get<double>()
                     << "\n";
            csv = rows.str();
        } else {
            throw KindMismatch("unknown plot kind: " + kind_s);
        }
        deliver(csv, out_path, out);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace zgdof
