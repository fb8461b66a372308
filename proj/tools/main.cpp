// ps-sieve-lab: command-line front end for the almost-prime sieve toolkit.
//
// Subcommands: bracket, admissible, sievefn, pair, lemma24, lemma25, psi,
// count, remainders, certify-partition, reproduce.  Defaults may come from
// a flat key=value config file named by PS_SIEVE_CONFIG.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pslab/arith.hpp"
#include "pslab/errors.hpp"
#include "pslab/exp_sums.hpp"
#include "pslab/params.hpp"
#include "pslab/partial_products.hpp"
#include "pslab/ps_counts.hpp"
#include "pslab/sieve_functions.hpp"
#include "pslab/verify.hpp"

using nlohmann::ordered_json;
using namespace pslab;

namespace {

struct RunConfig {
    std::vector<double> gamma_grid;
    double eta = 1e-6;
    double epsilon = 1e-9;
    std::vector<uint64_t> x_scales;
    std::string output_dir = "pslab-out";
    std::string format = "json";  // or csv
    int worker_count = 2;
    uint64_t seed = 0x5EED;
    bool explore = false;  // permit gamma outside (0.989, 1) with a warning
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

// flat key=value lines, '#' comments
void load_config_file(RunConfig& cfg) {
    const char* path = std::getenv("PS_SIEVE_CONFIG");
    if (!path) return;
    std::ifstream in(path);
    if (!in) throw config_error(std::string("config file not readable: ") + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](std::string v) {
            size_t a = v.find_first_not_of(" \t\r");
            size_t b = v.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        try {
            if (key == "eta")
                cfg.eta = std::stod(val);
            else if (key == "epsilon")
                cfg.epsilon = std::stod(val);
            else if (key == "output_dir")
                cfg.output_dir = val;
            else if (key == "format")
                cfg.format = val;
            else if (key == "worker_count")
                cfg.worker_count = std::stoi(val);
            else if (key == "seed")
                cfg.seed = std::stoull(val, nullptr, 0);
            else if (key == "gamma_grid") {
                cfg.gamma_grid.clear();
                for (const auto& tok : split(val, ','))
                    cfg.gamma_grid.push_back(std::stod(tok));
            } else if (key == "x_scales") {
                cfg.x_scales.clear();
                for (const auto& tok : split(val, ','))
                    cfg.x_scales.push_back(static_cast<uint64_t>(std::stod(tok)));
            } else if (key == "segment_size") {
                // accepted for compatibility; the sieve segment length is
                // compiled in (2^20 entries)
            } else {
                throw config_error("config line " + std::to_string(lineno) + ": unknown key " +
                                   key);
            }
        } catch (const config_error&) {
            throw;
        } catch (const std::exception&) {
            throw config_error("config line " + std::to_string(lineno) + ": bad value for " +
                               key);
        }
    }
}

void warn_gamma(const RunConfig& cfg, double gamma) {
    if (gamma >= 0.989 && gamma < 1.0) return;
    if (cfg.explore)
        std::cerr << "note: gamma=" << gamma << " lies outside the theorem range (0.989, 1)\n";
    else
        throw parameter_error("gamma outside (0.989, 1); pass --explore to evaluate anyway");
}

void emit(const RunConfig& cfg, const std::string& name, const ordered_json& j) {
    std::cout << j.dump(2) << "\n";
    if (!cfg.output_dir.empty()) {
        std::filesystem::create_directories(cfg.output_dir);
        std::ofstream out(std::filesystem::path(cfg.output_dir) / (name + ".json"));
        out << j.dump(2) << "\n";
    }
}

int run_cli(int argc, char** argv) {
    RunConfig cfg;
    load_config_file(cfg);

    CLI::App app{"ps-sieve-lab: computational checks for the [p^{1/gamma}] almost-prime sieve"};
    app.require_subcommand(1);
    app.add_option("--output-dir", cfg.output_dir, "artifact directory");
    app.add_option("--workers", cfg.worker_count, "worker threads");
    app.add_option("--seed", cfg.seed, "Monte Carlo seed");
    app.add_flag("--explore", cfg.explore, "allow gamma outside the theorem range");

    // bracket
    double gamma = 0.989;
    std::string method = "tensor";
    auto* bracket = app.add_subcommand("bracket", "final lower-bound bracket at gamma");
    bracket->add_option("--gamma", gamma, "gamma in (0.989, 1)")->required();
    bracket->add_option("--eta", cfg.eta, "eta (default 1e-6)");
    bracket->add_option("--epsilon", cfg.epsilon, "epsilon (default 1e-9)");
    bracket->add_option("--method", method, "tensor|mc")
        ->check(CLI::IsMember({"tensor", "mc"}));

    // admissible
    std::string grid_spec = "0.9891:0.9999:0.0001";
    auto* admissible = app.add_subcommand("admissible", "constraint slacks over a gamma grid");
    admissible->add_option("--gamma-grid", grid_spec, "a:b:step");

    // sievefn
    double s_arg = 2.5;
    auto* sievefn_cmd = app.add_subcommand("sievefn", "linear sieve functions F, f at s");
    sievefn_cmd->add_option("--s", s_arg, "argument s in (0, 6]")->required();

    // pair
    std::string word = "BA3B";
    auto* pair_cmd = app.add_subcommand("pair", "exponent pair from an A/B word");
    pair_cmd->add_option("--word", word, "word over A, B with repeat digits")->required();

    // lemma24
    int J = 8, L = 8, D = 8;
    double delta = 1e-6, lgamma = 0.99;
    auto* lemma24 = app.add_subcommand("lemma24", "lattice-point count vs bound");
    lemma24->add_option("--J", J);
    lemma24->add_option("--L", L);
    lemma24->add_option("--D", D);
    lemma24->add_option("--delta", delta);
    lemma24->add_option("--gamma", lgamma);

    // lemma25
    int H25 = 16, N25 = 16, M25 = 64;
    double X25 = 32.0, alpha25 = 1.0 / 0.99, beta25 = 1.0, gamma25 = 1.0;
    auto* lemma25 = app.add_subcommand("lemma25", "trilinear sum vs bound");
    lemma25->add_option("--H", H25);
    lemma25->add_option("--N", N25);
    lemma25->add_option("--M", M25);
    lemma25->add_option("--X", X25);
    lemma25->add_option("--alpha", alpha25);
    lemma25->add_option("--beta", beta25);
    lemma25->add_option("--gamma-e", gamma25);

    // psi
    int Hpsi = 100, nsamples = 10000;
    auto* psi_cmd = app.add_subcommand("psi", "sawtooth truncation ratio");
    psi_cmd->add_option("--H", Hpsi);
    psi_cmd->add_option("--samples", nsamples);

    // count
    double cx = 1e6, cgamma = 0.99;
    bool sifted = false;
    int omega_max = 7;
    auto* count_cmd = app.add_subcommand("count", "P_7 counts of [p^{1/gamma}]");
    count_cmd->add_option("--x", cx)->required();
    count_cmd->add_option("--gamma", cgamma)->required();
    count_cmd->add_flag("--sifted", sifted, "restrict to a free of factors < x^{1/17.41}");
    count_cmd->add_option("--omega-max", omega_max);

    // remainders
    double rx = 1e6, rgamma = 0.99;
    auto* rem_cmd = app.add_subcommand("remainders", "A_d cardinalities and R_d");
    rem_cmd->add_option("--x", rx)->required();
    rem_cmd->add_option("--gamma", rgamma)->required();

    // certify-partition
    double step = 5e-3, cert_gamma = 0.989, eta_s = 0.01;
    auto* cert_cmd = app.add_subcommand("certify-partition", "subset-sum window certificate");
    cert_cmd->add_option("--step", step);
    cert_cmd->add_option("--eta-s", eta_s);
    cert_cmd->add_option("--gamma", cert_gamma);

    // reproduce
    bool quick = false;
    auto* repro = app.add_subcommand("reproduce", "run the verification suite, write a report");
    repro->add_flag("--quick", quick, "reduced scales");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (bracket->parsed()) {
        warn_gamma(cfg, gamma);
        auto p = params::make_params(gamma, cfg.eta, cfg.epsilon);
        params::I7Options opts;
        opts.seed = cfg.seed;
        opts.workers = cfg.worker_count;
        auto m = method == "mc" ? params::I7Method::monte_carlo : params::I7Method::tensor_gauss;
        auto b = params::lower_bound_bracket(p, m, opts);
        auto rep = params::check_admissible(p);
        ordered_json j;
        j["eq"] = "W(a,1/17.41)-lower";
        j["gamma"] = gamma;
        j["eta"] = cfg.eta;
        j["epsilon"] = cfg.epsilon;
        j["xi"] = p.xi;
        j["u"] = p.u;
        j["lambda"] = p.lambda_w;
        j["I1"] = b.i1;
        j["I1_quad_gap"] = b.i1_quad_gap;
        j["I7"] = b.i7.value;
        j["I7_error"] = b.i7.error_estimate;
        j["I7_method"] = method;
        if (method == "mc") {
            j["mc_samples"] = b.i7.samples;
            j["seed"] = b.i7.seed;
        }
        j["first_term"] = b.first_term;
        j["bracket"] = b.bracket;
        ordered_json cons = ordered_json::array();
        for (const auto& c : rep.items)
            cons.push_back({{"name", c.name}, {"slack", c.slack}, {"pass", c.pass}});
        j["constraints"] = cons;
        emit(cfg, "bracket", j);
        return b.bracket >= 0.00024867 ? 0 : 1;
    }

    if (admissible->parsed()) {
        auto parts = split(grid_spec, ':');
        if (parts.size() != 3) throw config_error("--gamma-grid expects a:b:step");
        double a = std::stod(parts[0]), b = std::stod(parts[1]), h = std::stod(parts[2]);
        if (!(h > 0) || b < a) throw config_error("--gamma-grid: empty grid");
        std::cout << "# ps-sieve-lab v1, schema 1\n";
        bool header = false;
        bool all_ok = true;
        for (double g = a; g <= b + 1e-15; g += h) {
            if (!(g >= 0.989 && g < 1.0) && !cfg.explore) {
                std::cerr << "note: skipping gamma=" << g
                          << " outside (0.989, 1); pass --explore to include\n";
                continue;
            }
            auto rep = params::check_admissible(params::make_params(g, cfg.eta, cfg.epsilon));
            if (!header) {
                std::cout << "gamma";
                for (const auto& c : rep.items) std::cout << ",\"" << c.name << "\"";
                std::cout << ",all_pass\n";
                header = true;
            }
            std::printf("%.6f", g);
            for (const auto& c : rep.items) std::printf(",%.12e", c.slack);
            std::printf(",%d\n", rep.all_pass ? 1 : 0);
            all_ok = all_ok && rep.all_pass;
        }
        return all_ok ? 0 : 1;
    }

    if (sievefn_cmd->parsed()) {
        ordered_json j;
        j["eq"] = "diff-eq";
        j["s"] = s_arg;
        j["F"] = sievefn::eval_F(s_arg);
        j["f"] = sievefn::eval_f(s_arg);
        const auto& table = sievefn::default_table();
        if (s_arg > 2.0 + 1e-4 && s_arg < table.s_max() - 1e-4) {
            auto [rF, rf] = sievefn::dde_residual(s_arg, 1e-4);
            j["residual_F_equation"] = rF;
            j["residual_f_equation"] = rf;
        }
        emit(cfg, "sievefn", j);
        return 0;
    }

    if (pair_cmd->parsed()) {
        auto p = expsums::apply_word(word);
        ordered_json j;
        j["eq"] = "expo-pair-gernal";
        j["word"] = word;
        j["kappa"] = p.kappa.to_string();
        j["ell"] = p.ell.to_string();
        j["kappa_float"] = p.kappa.to_double();
        j["ell_float"] = p.ell.to_double();
        emit(cfg, "pair", j);
        return 0;
    }

    if (lemma24->parsed()) {
        auto r = expsums::lattice_count_oracle(J, L, D, delta, lgamma);
        ordered_json j;
        j["eq"] = "latticepoints";
        j["inputs"] = {{"J", J}, {"L", L}, {"D", D}, {"delta", delta}, {"gamma", lgamma}};
        j["count"] = r.count;
        j["bound"] = r.bound;
        j["ratio"] = static_cast<double>(r.count) / r.bound;
        emit(cfg, "lemma24", j);
        return 0;
    }

    if (lemma25->parsed()) {
        auto r = expsums::trilinear_sum_check(H25, N25, M25, X25, alpha25, beta25, gamma25);
        ordered_json j;
        j["eq"] = "Robert-Sargos-lemma";
        j["inputs"] = {{"H", H25}, {"N", N25}, {"M", M25}, {"X", X25},
                       {"alpha", alpha25}, {"beta", beta25}, {"gamma", gamma25}};
        j["S"] = r.S;
        j["bound"] = r.bound;
        j["ratio"] = r.S / r.bound;
        emit(cfg, "lemma25", j);
        return 0;
    }

    if (psi_cmd->parsed()) {
        auto samples = expsums::psi_samples(static_cast<size_t>(nsamples), cfg.seed);
        double ratio = expsums::psi_truncation_check(samples, Hpsi);
        ordered_json j;
        j["eq"] = "psi-expan";
        j["H"] = Hpsi;
        j["samples"] = nsamples;
        j["seed"] = cfg.seed;
        j["max_ratio"] = ratio;
        emit(cfg, "psi", j);
        return 0;
    }

    if (count_cmd->parsed()) {
        warn_gamma(cfg, cgamma);
        auto inst = pscounts::make_instance(static_cast<uint64_t>(cx), cgamma, cfg.eta,
                                            cfg.epsilon);
        auto p7 = pscounts::count_P7(inst, omega_max, sifted);
        std::cout << "# ps-sieve-lab v1, schema 1\n";
        std::cout << "gamma,x,count,benchmark,ratio\n";
        std::printf("%.6f,%llu,%llu,%.12e,%.12e\n", cgamma,
                    static_cast<unsigned long long>(inst.x),
                    static_cast<unsigned long long>(p7.count), p7.benchmark,
                    static_cast<double>(p7.count) / p7.benchmark);
        return 0;
    }

    if (rem_cmd->parsed()) {
        warn_gamma(cfg, rgamma);
        auto inst = pscounts::make_instance(static_cast<uint64_t>(rx), rgamma, cfg.eta,
                                            cfg.epsilon);
        auto recs = pscounts::count_A_all(inst, inst.d_max);
        std::cout << "# ps-sieve-lab v1, schema 1\n";
        std::cout << "d,card,main,R_d\n";
        for (const auto& r : recs)
            std::printf("%llu,%llu,%.12e,%.12e\n", static_cast<unsigned long long>(r.d),
                        static_cast<unsigned long long>(r.card), r.main_term, r.r_d);
        return 0;
    }

    if (cert_cmd->parsed()) {
        auto rep = partition::exhaustive_certify(step, eta_s, {}, cfg.worker_count);
        partition::WindowSlack slack =
            partition::window_inside_analytic(params::make_params(cert_gamma, 1e-12, 1e-12));
        ordered_json j;
        j["eq"] = "S_0-upp-condition";
        j["step"] = rep.step;
        j["eta_s"] = rep.eta_s;
        j["points_checked"] = rep.points_checked;
        j["counterexamples"] = ordered_json::array();
        for (const auto& p : rep.counterexamples) {
            ordered_json pt = ordered_json::array();
            for (double t : p) pt.push_back(t);
            j["counterexamples"].push_back(pt);
        }
        j["min_margin"] = rep.min_margin;
        j["gamma"] = cert_gamma;
        j["window_slack_left"] = slack.left_slack;
        j["window_slack_right"] = slack.right_slack;
        emit(cfg, "certify-partition", j);
        return rep.counterexamples.empty() && slack.pass ? 0 : 1;
    }

    if (repro->parsed()) {
        verify::VerifyOptions opts;
        opts.quick = quick;
        opts.output_dir = cfg.output_dir;
        opts.seed = cfg.seed;
        opts.workers = cfg.worker_count;
        auto results = verify::run_suite(opts);
        ordered_json report = ordered_json::array();
        int failures = 0;
        for (const auto& r : results) {
            std::printf("%s criterion %d: %s  [%s]\n", r.pass ? "PASS" : "FAIL", r.id,
                        r.name.c_str(), r.detail.c_str());
            report.push_back(
                {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            if (!r.pass) ++failures;
        }
        std::filesystem::create_directories(cfg.output_dir);
        std::ofstream out(std::filesystem::path(cfg.output_dir) / "report.json");
        out << report.dump(2) << "\n";
        return failures == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
