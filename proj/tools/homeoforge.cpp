// homeoforge: exact-arithmetic construction and verification CLI for the
// G_lambda and fast n-ring families. Certificates carry exact scalars only;
// floating point is quarantined to SVG rendering.

#include <homeoforge/batch.hpp>
#include <homeoforge/gline.hpp>
#include <homeoforge/json_io.hpp>
#include <homeoforge/ring.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

using namespace homeoforge;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct Manifest {
    std::string command;
    json parameters = json::object();
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    int exit_status = 0;
    long elapsed_ms = 0;
};

struct Output {
    std::string out_dir;  // empty = stdout only
    Manifest manifest;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const std::string& name, const json& artifact) {
        if (out_dir.empty()) {
            std::cout << artifact.dump(2) << "\n";
            return;
        }
        fs::create_directories(out_dir);
        fs::path path = fs::path(out_dir) / name;
        std::ofstream f(path);
        f << artifact.dump(2) << "\n";
        manifest.outputs.push_back(path.string());
    }
    void emit_text(const std::string& name, const std::string& text) {
        if (out_dir.empty()) {
            std::cout << text;
            return;
        }
        fs::create_directories(out_dir);
        fs::path path = fs::path(out_dir) / name;
        std::ofstream f(path);
        f << text;
        manifest.outputs.push_back(path.string());
    }
    int finish(int status) {
        manifest.exit_status = status;
        manifest.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        if (!out_dir.empty()) {
            fs::path path = fs::path(out_dir) / "manifest.json";
            std::ofstream f(path);
            f << json{{"command", manifest.command},
                      {"parameters", manifest.parameters},
                      {"inputs", manifest.inputs},
                      {"outputs", manifest.outputs},
                      {"exit_status", manifest.exit_status},
                      {"elapsed_ms", manifest.elapsed_ms}}
                     .dump(2)
              << "\n";
        }
        return status;
    }
};

json read_json_input(const std::string& path) {
    if (path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    json j;
    f >> j;
    return j;
}

std::pair<QuadScalar, QuadScalar> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected 'a,b' but got '" + text + "'");
    return {QuadScalar::parse(text.substr(0, comma)), QuadScalar::parse(text.substr(comma + 1))};
}

// SVG rendering: the only place exact scalars become doubles.
std::string svg_header(int w, int h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
           std::to_string(h) + "\">\n";
}

std::string svg_map(const PLSegmentMap& m) {
    double x0 = m.domain_lo().to_double(), x1 = m.domain_hi().to_double();
    double y0 = m.range_lo().to_double(), y1 = m.range_hi().to_double();
    const int W = 480, H = 480, pad = 20;
    auto X = [&](double x) { return pad + (x - x0) / (x1 - x0) * (W - 2 * pad); };
    auto Y = [&](double y) { return H - pad - (y - y0) / (y1 - y0) * (H - 2 * pad); };
    std::string s = svg_header(W, H);
    s += "<line x1=\"" + std::to_string(X(x0)) + "\" y1=\"" + std::to_string(Y(x0)) + "\" x2=\"" +
         std::to_string(X(x1)) + "\" y2=\"" + std::to_string(Y(x1)) +
         "\" stroke=\"#bbb\" stroke-dasharray=\"4\"/>\n";
    s += "<polyline fill=\"none\" stroke=\"#1a6\" stroke-width=\"2\" points=\"";
    for (const BreakPoint& p : m.breakpoints())
        s += std::to_string(X(p.x.to_double())) + "," + std::to_string(Y(p.y.to_double())) + " ";
    s += "\"/>\n";
    for (const BreakPoint& p : m.breakpoints())
        s += "<circle cx=\"" + std::to_string(X(p.x.to_double())) + "\" cy=\"" +
             std::to_string(Y(p.y.to_double())) + "\" r=\"3\" fill=\"#d33\"/>\n";
    return s + "</svg>\n";
}

std::string svg_ring(const RingConfig& config) {
    const int W = 480, H = 480;
    const double cx = W / 2.0, cy = H / 2.0;
    const double c = config.circumference.to_double();
    std::string s = svg_header(W, H);
    for (int i = 1; i <= config.n; ++i) {
        double r = 150 + 18.0 * i;
        double a0 = config.J(i).lo.to_double() / c * 2 * 3.14159265358979;
        double a1 = config.J(i).hi.to_double() / c * 2 * 3.14159265358979;
        const int steps = 64;
        std::string pts;
        for (int k = 0; k <= steps; ++k) {
            double a = a0 + (a1 - a0) * k / steps;
            pts += std::to_string(cx + r * std::cos(a)) + "," +
                   std::to_string(cy - r * std::sin(a)) + " ";
        }
        static const char* colors[] = {"#d33", "#1a6", "#36c", "#c93", "#939", "#399"};
        s += "<polyline fill=\"none\" stroke=\"" + std::string(colors[(i - 1) % 6]) +
             "\" stroke-width=\"4\" points=\"" + pts + "\"/>\n";
    }
    for (int i = 1; i <= config.n; ++i) {
        double a = config.x(i).to_double() / c * 2 * 3.14159265358979;
        s += "<circle cx=\"" + std::to_string(cx + 150 * std::cos(a)) + "\" cy=\"" +
             std::to_string(cy - 150 * std::sin(a)) + "\" r=\"4\" fill=\"#000\"/>\n";
    }
    return s + "</svg>\n";
}

std::string svg_orbit(const RingConfig& config, const std::vector<QuadScalar>& orbit) {
    const int W = 480, H = 480;
    const double cx = W / 2.0, cy = H / 2.0, r = 180;
    const double c = config.circumference.to_double();
    std::string s = svg_header(W, H);
    s += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" + std::to_string(cy) + "\" r=\"" +
         std::to_string(r) + "\" fill=\"none\" stroke=\"#bbb\"/>\n";
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        double a = orbit[k].to_double() / c * 2 * 3.14159265358979;
        double rr = r - 3.0 * k;
        s += "<circle cx=\"" + std::to_string(cx + rr * std::cos(a)) + "\" cy=\"" +
             std::to_string(cy - rr * std::sin(a)) + "\" r=\"3\" fill=\"#d33\"/>\n";
    }
    return s + "</svg>\n";
}

Word parse_ring_word(const std::string& text) {
    return Word::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification for two families of simple groups of Homeo+(R)"};
    app.require_subcommand(1);

    std::string lambda_text = "1+sqrt2";
    std::string out_dir;
    unsigned seed = 1;
    app.add_option("--lambda", lambda_text, "quadratic field element a+b*sqrt(d)")->capture_default_str();
    app.add_option("--out", out_dir, "output directory for artifacts + manifest");
    app.add_option("--seed", seed, "seed for randomized probes")->capture_default_str();

    // ring ------------------------------------------------------------
    auto* ring = app.add_subcommand("ring", "n-ring configurations and the H_n machinery");
    ring->require_subcommand(1);

    int synth_n = 3;
    std::string margin_text = "1/8";
    auto* ring_synth = ring->add_subcommand("synth", "synthesize a verified n-ring");
    ring_synth->add_option("-n", synth_n, "ring size")->capture_default_str();
    ring_synth->add_option("--margin", margin_text, "push margin (dyadic)")->capture_default_str();

    std::string config_path = "-";
    auto* ring_verify = ring->add_subcommand("verify", "check condition (*) and emit a certificate");
    ring_verify->add_option("config", config_path, "ring config JSON (- for stdin)");

    auto* ring_nu = ring->add_subcommand("nu", "build the small family and the nu elements");
    ring_nu->add_option("config", config_path, "ring config JSON (- for stdin)");

    auto* ring_x = ring->add_subcommand("X", "build and verify the generating set X of H_n");
    ring_x->add_option("config", config_path, "ring config JSON (- for stdin)");

    std::string realize_interval = "1/16,5/16";
    int realize_i = 1, realize_sign = -1;
    int depth = 64;
    auto* ring_realize = ring->add_subcommand("realize", "gamma in <X> restricting to f_i^s on J");
    ring_realize->add_option("config", config_path, "ring config JSON (- for stdin)");
    ring_realize->add_option("--interval", realize_interval, "target arc lo,hi")->capture_default_str();
    ring_realize->add_option("-i", realize_i, "generator index")->capture_default_str();
    ring_realize->add_option("-s,--sign", realize_sign, "+1 or -1")->capture_default_str();
    ring_realize->add_option("--depth", depth, "search depth cap")->capture_default_str();

    std::string winding_word;
    int winding_random = 0, winding_len = 8;
    auto* ring_winding = ring->add_subcommand("winding", "lifted winding + backtracking reduction");
    ring_winding->add_option("config", config_path, "ring config JSON (- for stdin)");
    ring_winding->add_option("--word", winding_word, "word over f1..fn, e.g. 'f1 f2^-1'");
    ring_winding->add_option("--random", winding_random, "check N random reduced words instead");
    ring_winding->add_option("--len", winding_len, "random word length")->capture_default_str();

    // gline -----------------------------------------------------------
    auto* gline = app.add_subcommand("gline", "the G_lambda constructive operations");
    gline->require_subcommand(1);

    std::string word_text, eps_text = "1/16", window_text = "-4,4", probes_text = "1/4,1/16,1/64";
    auto* gl_delta = gline->add_subcommand("delta", "perturbation continuity probe");
    gl_delta->add_option("--word", word_text, "word over the G_lambda registry")->required();
    gl_delta->add_option("--epsilon", eps_text, "epsilon")->capture_default_str();
    gl_delta->add_option("--probes", probes_text, "comma-separated probe deltas")->capture_default_str();

    auto* gl_rept = gline->add_subcommand("rept", "synchronized interval |m - k*lambda| < eps");
    gl_rept->add_option("--epsilon", eps_text, "epsilon")->capture_default_str();
    gl_rept->add_option("--window", window_text, "interval a,b")->capture_default_str();

    auto* gl_repet = gline->add_subcommand("repet", "repetitiveness witness for a word");
    gl_repet->add_option("--word", word_text, "word over the G_lambda registry")->required();
    gl_repet->add_option("--epsilon", eps_text, "epsilon")->capture_default_str();
    gl_repet->add_option("--window", window_text, "interval a,b")->capture_default_str();

    std::string surgery_interval = "1/4,1/2", surgery_x = "1/8", surgery_y = "3/4";
    auto* gl_surgery = gline->add_subcommand("surgery", "build and verify a surgery chain");
    gl_surgery->add_option("--interval", surgery_interval, "support interval lo,hi")->capture_default_str();
    gl_surgery->add_option("--epsilon", eps_text, "chain interval bound")->capture_default_str();
    gl_surgery->add_option("-x", surgery_x, "start point")->capture_default_str();
    gl_surgery->add_option("-y", surgery_y, "target point")->capture_default_str();

    int zeta_radius = 4;
    auto* gl_zeta = gline->add_subcommand("zeta", "the fixing-advancer pipeline at N = 1");
    gl_zeta->add_option("--interval", surgery_interval, "bump support lo,hi")->capture_default_str();
    gl_zeta->add_option("--window-radius", zeta_radius, "verification window radius")->capture_default_str();

    // word ------------------------------------------------------------
    auto* word_cmd = app.add_subcommand("word", "evaluate/restrict words over the registries");
    word_cmd->require_subcommand(1);
    std::string at_text = "0", ring_for_word;

    auto* w_eval = word_cmd->add_subcommand("eval", "exact evaluation at a point");
    w_eval->add_option("--word", word_text, "word text")->required();
    w_eval->add_option("-x", at_text, "evaluation point")->capture_default_str();
    w_eval->add_option("--ring", ring_for_word, "ring config JSON: use its registry");

    auto* w_restrict = word_cmd->add_subcommand("restrict", "exact PL restriction on a window");
    w_restrict->add_option("--word", word_text, "word text")->required();
    w_restrict->add_option("--window", window_text, "interval a,b")->capture_default_str();
    w_restrict->add_option("--ring", ring_for_word, "ring config JSON: use its registry");

    auto* w_idcheck = word_cmd->add_subcommand("idcheck", "identity test on a window (exit 1 if not)");
    w_idcheck->add_option("--word", word_text, "word text")->required();
    w_idcheck->add_option("--window", window_text, "interval a,b")->capture_default_str();
    w_idcheck->add_option("--ring", ring_for_word, "ring config JSON: use its registry");

    // torus -----------------------------------------------------------
    auto* torus = app.add_subcommand("torus", "the eta_1/eta_2 torus action");
    torus->require_subcommand(1);
    int eta_which = 1, torus_count = 100;
    std::string point_text = "0,0";

    auto* t_act = torus->add_subcommand("act", "apply eta_i(g) to a point");
    t_act->add_option("--word", word_text, "word over the Tbar registry")->required();
    t_act->add_option("--eta", eta_which, "1 or 2")->capture_default_str();
    t_act->add_option("--point", point_text, "point x,y")->capture_default_str();

    auto* t_check = torus->add_subcommand("check", "leaf-invariant + commutation property run");
    t_check->add_option("--count", torus_count, "number of random pairs")->capture_default_str();

    // plot ------------------------------------------------------------
    auto* plot = app.add_subcommand("plot", "SVG figures (floating point, rendering only)");
    plot->require_subcommand(1);
    int orbit_steps = 12;

    auto* p_map = plot->add_subcommand("map", "graph of a word's restriction");
    p_map->add_option("--word", word_text, "word text")->required();
    p_map->add_option("--window", window_text, "interval a,b")->capture_default_str();
    p_map->add_option("--ring", ring_for_word, "ring config JSON: use its registry");

    auto* p_orbit = plot->add_subcommand("orbit", "orbit of the marked point under a word");
    p_orbit->add_option("config", config_path, "ring config JSON (- for stdin)");
    p_orbit->add_option("--word", word_text, "word over f1..fn")->required();
    p_orbit->add_option("--steps", orbit_steps, "iterations")->capture_default_str();

    auto* p_ring = plot->add_subcommand("ring", "interval diagram of a config");
    p_ring->add_option("config", config_path, "ring config JSON (- for stdin)");

    // global flags (--out, --seed, --lambda) may appear after any subcommand
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Output out;
    out.out_dir = out_dir;

    auto record = [&](const std::string& cmd, std::initializer_list<std::pair<std::string, json>> params) {
        out.manifest.command = cmd;
        for (const auto& [k, v] : params) out.manifest.parameters[k] = v;
        out.manifest.parameters["lambda"] = lambda_text;
        out.manifest.parameters["seed"] = seed;
    };

    try {
        QuadScalar lambda = QuadScalar::parse(lambda_text);

        auto make_registry = [&](GLambdaContext& ctx) -> GeneratorRegistry& {
            return ctx.registry();
        };
        (void)make_registry;

        auto load_ring = [&](const std::string& path) {
            out.manifest.inputs.push_back(path);
            return ring_config_from_json(read_json_input(path));
        };

        if (ring_synth->parsed()) {
            record("ring synth", {{"n", synth_n}, {"margin", margin_text}});
            RingConfig config = synthesize_ring(synth_n, Rational::parse(margin_text));
            auto check = verify_star(config);
            out.emit("ring.json", ring_config_to_json(config));
            return out.finish(star_ok(check) ? kExitOk : kExitInfeasible);
        }
        if (ring_verify->parsed()) {
            record("ring verify", {{"config", config_path}});
            RingConfig config = load_ring(config_path);
            auto check = verify_star(config);
            out.emit("star.json", star_check_to_json(check));
            return out.finish(star_ok(check) ? kExitOk : kExitVerification);
        }
        if (ring_nu->parsed()) {
            record("ring nu", {{"config", config_path}});
            RingConfig config = load_ring(config_path);
            if (!star_ok(verify_star(config))) {
                out.emit("nu.json", json{{"error", "config fails verify_star"}});
                return out.finish(kExitVerification);
            }
            SmallFamily fam = build_small_family(config);
            NuFamily nu = build_nu(config, fam, depth);
            json artifact{{"family", small_family_to_json(fam)}, {"nu", nu_family_to_json(nu)}};
            out.emit("nu.json", artifact);
            return out.finish(nu.verified ? kExitOk : kExitInfeasible);
        }
        if (ring_x->parsed()) {
            record("ring X", {{"config", config_path}});
            RingConfig config = load_ring(config_path);
            SmallFamily fam = build_small_family(config);
            NuFamily nu = build_nu(config, fam, depth);
            if (!nu.verified) {
                out.emit("X.json", json{{"error", nu.error}});
                return out.finish(kExitInfeasible);
            }
            XSet xs = generating_set_X(config, fam, nu);
            json words = json::array();
            for (const auto& row : xs.words) {
                json r = json::array();
                for (const Word& w : row) r.push_back(to_json(w));
                words.push_back(r);
            }
            out.emit("X.json", json{{"X", words}, {"identities_verified", xs.identities_verified}});
            return out.finish(xs.identities_verified ? kExitOk : kExitVerification);
        }
        if (ring_realize->parsed()) {
            record("ring realize", {{"config", config_path},
                                    {"interval", realize_interval},
                                    {"i", realize_i},
                                    {"sign", realize_sign},
                                    {"depth", depth}});
            RingConfig config = load_ring(config_path);
            auto [lo, hi] = parse_pair(realize_interval);
            CircleArc J = CircleArc::make(lo, hi, config.circumference);
            SmallFamily fam = build_small_family(config);
            NuFamily nu = build_nu(config, fam, depth);
            if (!nu.verified) {
                out.emit("realize.json", json{{"error", nu.error}});
                return out.finish(kExitInfeasible);
            }
            XSet xs = generating_set_X(config, fam, nu);
            auto res = realize_generator_on(config, fam, nu, xs, J, realize_i, realize_sign, 64, depth);
            out.emit("realize.json", realize_to_json(res));
            return out.finish(res.ok ? kExitOk : kExitInfeasible);
        }
        if (ring_winding->parsed()) {
            record("ring winding", {{"config", config_path},
                                    {"word", winding_word},
                                    {"random", winding_random},
                                    {"len", winding_len}});
            RingConfig config = load_ring(config_path);
            std::string csv = "word,winding,reduced_length,endpoint_hit,rho_lower_k8,rho_upper_k8\n";
            bool all_ok = true;
            json reports = json::array();
            auto run_one = [&](const Word& w) {
                auto rep = lift_winding_check(config, w);
                auto rho = translation_number_estimate(config.reg, w, 8, config.circumference);
                csv += "\"" + w.str() + "\"," + rep.winding.get_str() + "," +
                       std::to_string(rep.reduced.size()) + "," +
                       (rep.endpoint_hit ? "yes" : "no") + "," + rho.lower.str() + "," +
                       rho.upper.str() + "\n";
                reports.push_back(winding_to_json(rep));
                all_ok = all_ok && !rep.endpoint_hit;
            };
            if (winding_random > 0) {
                std::mt19937_64 rng(seed);
                std::uniform_int_distribution<long> pick(0, batch::reduced_word_count(
                                                                config.n, winding_len) - 1);
                for (int t = 0; t < winding_random; ++t) {
                    auto letters = batch::decode_reduced_word(config.n, winding_len, pick(rng));
                    std::vector<Letter> ls;
                    for (int l : letters)
                        ls.push_back({"f" + std::to_string(std::abs(l)), l > 0 ? 1L : -1L});
                    run_one(Word(ls));
                }
            } else {
                run_one(parse_ring_word(winding_word));
            }
            out.emit("winding.json", reports);
            out.emit_text("winding.csv", csv);
            return out.finish(all_ok ? kExitOk : kExitVerification);
        }

        if (gl_delta->parsed()) {
            record("gline delta", {{"word", word_text}, {"epsilon", eps_text}, {"probes", probes_text}});
            GLambdaContext ctx(lambda);
            ctx.ensure_word_ids(Word::parse(word_text));
            std::vector<QuadScalar> probes;
            std::stringstream ss(probes_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) probes.push_back(QuadScalar::parse(tok));
            auto rep = continuity_delta(ctx, Word::parse(word_text), QuadScalar::parse(eps_text), probes);
            json pr = json::array();
            for (const auto& p : rep.probes)
                pr.push_back(json{{"delta", p.delta.str()}, {"distance", p.distance.str()}, {"pass", p.pass}});
            out.emit("delta.json", json{{"found", rep.found},
                                        {"delta1", rep.found ? rep.delta1.str() : ""},
                                        {"probes", pr}});
            return out.finish(rep.found ? kExitOk : kExitVerification);
        }
        if (gl_rept->parsed()) {
            record("gline rept", {{"epsilon", eps_text}, {"window", window_text}});
            auto [a, b] = parse_pair(window_text);
            auto res = find_synchronized_interval(lambda, QuadScalar::parse(eps_text),
                                                  Interval::closed(a, b));
            json j{{"found", res.found}};
            if (res.found) {
                j["m"] = res.m.get_str();
                j["k"] = res.k.get_str();
                j["distance"] = res.dist.str();
            } else {
                j["required_window_length"] = res.required_n.get_str();
            }
            out.emit("rept.json", j);
            return out.finish(res.found ? kExitOk : kExitInfeasible);
        }
        if (gl_repet->parsed()) {
            record("gline repet", {{"word", word_text}, {"epsilon", eps_text}, {"window", window_text}});
            GLambdaContext ctx(lambda);
            ctx.ensure_word_ids(Word::parse(word_text));
            auto [a, b] = parse_pair(window_text);
            auto res = repetitiveness_witness(ctx, Word::parse(word_text), QuadScalar::parse(eps_text),
                                              Interval::closed(a, b));
            json j{{"found", res.found}, {"candidates_checked", res.candidates_checked}};
            if (res.found) {
                j["m"] = res.m.get_str();
                j["distance"] = res.distance.str();
            } else if (res.candidates_checked > 0) {
                j["best_m"] = res.best_m.get_str();
                j["best_distance"] = res.best_distance.str();
            }
            out.emit("repet.json", j);
            return out.finish(res.found ? kExitOk : kExitVerification);
        }
        if (gl_surgery->parsed()) {
            record("gline surgery", {{"interval", surgery_interval},
                                     {"epsilon", eps_text},
                                     {"x", surgery_x},
                                     {"y", surgery_y}});
            GLambdaContext ctx(lambda);
            auto [ilo, ihi] = parse_pair(surgery_interval);
            PLSegmentMap alpha = f_bump(ilo.rational_part(), ihi.rational_part(), true);
            auto res = build_surgery_chain(ctx, Interval::open(ilo, ihi), QuadScalar::parse(eps_text),
                                           QuadScalar::parse(surgery_x), QuadScalar::parse(surgery_y),
                                           alpha, seed);
            out.emit("surgery.json", surgery_to_json(res));
            return out.finish(res.ok ? kExitOk : kExitInfeasible);
        }
        if (gl_zeta->parsed()) {
            record("gline zeta", {{"interval", surgery_interval}, {"window_radius", zeta_radius}});
            GLambdaContext ctx(lambda);
            auto [ilo, ihi] = parse_pair(surgery_interval);
            Interval I = Interval::open(ilo, ihi);
            PLSegmentMap bump = f_bump(ilo.rational_part(), ihi.rational_part(), true);
            std::string bid = ctx.register_auto("zeta.bump", nu_embed(bump));
            Word h = Word::single(bid);
            Interval window = Interval::closed(QuadScalar(-zeta_radius), QuadScalar(zeta_radius));
            auto stab = certify_stability(ctx, h, I, QuadScalar::parse(eps_text), window);
            if (!stab.ok) {
                out.emit("zeta.json", json{{"error", stab.error}});
                return out.finish(kExitInfeasible);
            }
            auto res = build_fixing_advancer(ctx, h, stab.cert, window);
            json j = zeta_to_json(res);
            j["certificate"] = stability_to_json(stab.cert);
            out.emit("zeta.json", j);
            return out.finish(res.ok ? kExitOk : kExitVerification);
        }

        auto word_registry = [&](GLambdaContext& ctx,
                                 std::optional<RingConfig>& ring_holder) -> const GeneratorRegistry& {
            if (!ring_for_word.empty()) {
                ring_holder = load_ring(ring_for_word);
                return ring_holder->reg;
            }
            return ctx.registry();
        };

        if (w_eval->parsed() || w_restrict->parsed() || w_idcheck->parsed() || p_map->parsed()) {
            GLambdaContext ctx(lambda);
            std::optional<RingConfig> holder;
            Word w = Word::parse(word_text);
            if (ring_for_word.empty()) ctx.ensure_word_ids(w);
            const GeneratorRegistry& reg = word_registry(ctx, holder);
            if (w_eval->parsed()) {
                record("word eval", {{"word", word_text}, {"x", at_text}});
                QuadScalar img = evaluate_word(reg, w, QuadScalar::parse(at_text));
                out.emit("eval.json", json{{"x", at_text}, {"image", img.str()}});
                return out.finish(kExitOk);
            }
            auto [a, b] = parse_pair(window_text);
            PLSegmentMap r = restrict_word(reg, w, Interval::closed(a, b));
            if (w_restrict->parsed()) {
                record("word restrict", {{"word", word_text}, {"window", window_text}});
                out.emit("restrict.json", to_json(r));
                return out.finish(kExitOk);
            }
            if (w_idcheck->parsed()) {
                record("word idcheck", {{"word", word_text}, {"window", window_text}});
                bool ok = r.is_identity();
                out.emit("idcheck.json", json{{"identity", ok}});
                return out.finish(ok ? kExitOk : kExitVerification);
            }
            record("plot map", {{"word", word_text}, {"window", window_text}});
            out.emit_text("map.svg", svg_map(r));
            return out.finish(kExitOk);
        }

        if (t_act->parsed()) {
            record("torus act", {{"word", word_text}, {"eta", eta_which}, {"point", point_text}});
            GLambdaContext ctx(lambda);
            ctx.ensure_word_ids(Word::parse(word_text));
            auto [px, py] = parse_pair(point_text);
            TorusPoint img = torus_action(ctx.registry(), lambda, Word::parse(word_text), eta_which,
                                          TorusPoint{px, py});
            out.emit("torus.json", json{{"x", img.x.str()},
                                        {"y", img.y.str()},
                                        {"leaf", (img.y - lambda * img.x).str()}});
            return out.finish(kExitOk);
        }
        if (t_check->parsed()) {
            record("torus check", {{"count", torus_count}});
            GLambdaContext ctx(lambda);
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<long> num(-50, 50);
            static const char* gens[] = {"x0bar", "x1bar", "rot", "c1"};
            std::uniform_int_distribution<int> pick(0, 3);
            long failures = 0;
            for (int t = 0; t < torus_count; ++t) {
                Word g = Word::single(gens[pick(rng)]) * Word::single(gens[pick(rng)], -1);
                TorusPoint p{QuadScalar(Rational(num(rng), 7)), QuadScalar(Rational(num(rng), 9))};
                for (int which : {1, 2}) {
                    TorusPoint o = torus_action(ctx.registry(), lambda, g, which, p);
                    if (o.y - lambda * o.x != p.y - lambda * p.x) ++failures;
                }
            }
            out.emit("torus_check.json", json{{"pairs", torus_count}, {"failures", failures}});
            return out.finish(failures == 0 ? kExitOk : kExitVerification);
        }

        if (p_orbit->parsed()) {
            record("plot orbit", {{"config", config_path}, {"word", word_text}, {"steps", orbit_steps}});
            RingConfig config = load_ring(config_path);
            Word w = parse_ring_word(word_text);
            std::vector<QuadScalar> orbit;
            QuadScalar z = reduce_mod(config.J(1).lo, config.circumference);
            orbit.push_back(z);
            for (int k = 0; k < orbit_steps; ++k) {
                z = reduce_mod(evaluate_word(config.reg, w, z), config.circumference);
                orbit.push_back(z);
            }
            out.emit_text("orbit.svg", svg_orbit(config, orbit));
            return out.finish(kExitOk);
        }
        if (p_ring->parsed()) {
            record("plot ring", {{"config", config_path}});
            RingConfig config = load_ring(config_path);
            out.emit_text("ring.svg", svg_ring(config));
            return out.finish(kExitOk);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return out.finish(kExitUsage);
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return out.finish(kExitUsage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return out.finish(kExitInfeasible);
    }
    return kExitUsage;
}
