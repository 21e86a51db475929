#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hoj/errors.hpp"
#include "hoj/hypergroup.hpp"
#include "hoj/jacobi.hpp"
#include "hoj/report.hpp"
#include "hoj/sampling.hpp"
#include "hoj/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

struct Options {
    int q = 1;
    int d = 2;
    double mu = 2.0;
    int grid = 64;
    std::uint64_t samples = 20000;
    std::uint64_t seed = 0;
    std::vector<std::string> lambdas;
    std::string x_arg;
    std::string y_arg;
    std::vector<std::string> suites;
    std::string format = "json";
    std::string out;
    std::string config_path;
};

struct OptionHandles {
    CLI::Option* q = nullptr;
    CLI::Option* d = nullptr;
    CLI::Option* mu = nullptr;
    CLI::Option* grid = nullptr;
    CLI::Option* samples = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* lambda = nullptr;
    CLI::Option* x = nullptr;
    CLI::Option* y = nullptr;
    CLI::Option* suite = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* out = nullptr;
};

OptionHandles add_common_options(CLI::App* cmd, Options& o) {
    OptionHandles h;
    h.q = cmd->add_option("--q", o.q, "rank");
    h.d = cmd->add_option("--d", o.d, "field dimension (1, 2 or 4)");
    h.mu = cmd->add_option("--mu", o.mu, "interpolation parameter");
    h.grid = cmd->add_option("--grid", o.grid, "quadrature order per dimension");
    h.samples = cmd->add_option("--samples", o.samples, "Monte Carlo sample count");
    h.seed = cmd->add_option("--seed", o.seed, "rng seed (required for stochastic commands)");
    h.lambda = cmd->add_option("--lambda", o.lambdas,
                               "dominant weight, comma separated entries; repeatable");
    h.x = cmd->add_option("--x", o.x_arg, "alcove point, comma separated");
    h.y = cmd->add_option("--y", o.y_arg, "alcove point, comma separated");
    h.suite = cmd->add_option("--suite", o.suites, "verification suites to run; repeatable");
    h.format = cmd->add_option("--format", o.format, "output format: json or csv")
                   ->check(CLI::IsMember({"json", "csv"}));
    h.out = cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--config", o.config_path, "JSON config file mirroring the flags");
    return h;
}

// Config file keys mirror the flags; explicit flags win.
void apply_config(const Options& src, Options& o, const OptionHandles& h) {
    if (src.config_path.empty()) return;
    std::ifstream in(src.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + src.config_path);
    nlohmann::json j;
    in >> j;
    auto unset = [](CLI::Option* opt) { return opt && opt->count() == 0; };
    if (j.contains("q") && unset(h.q)) o.q = j["q"].get<int>();
    if (j.contains("d") && unset(h.d)) o.d = j["d"].get<int>();
    if (j.contains("mu") && unset(h.mu)) o.mu = j["mu"].get<double>();
    if (j.contains("grid") && unset(h.grid)) o.grid = j["grid"].get<int>();
    if (j.contains("samples") && unset(h.samples)) o.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("seed") && unset(h.seed)) {
        o.seed = j["seed"].get<std::uint64_t>();
        if (h.seed) h.seed->add_result(std::to_string(o.seed));
    }
    if (j.contains("lambda") && unset(h.lambda))
        for (const auto& v : j["lambda"]) o.lambdas.push_back(v.get<std::string>());
    if (j.contains("x") && unset(h.x)) o.x_arg = j["x"].get<std::string>();
    if (j.contains("y") && unset(h.y)) o.y_arg = j["y"].get<std::string>();
    if (j.contains("suite") && unset(h.suite))
        for (const auto& v : j["suite"]) o.suites.push_back(v.get<std::string>());
    if (j.contains("format") && unset(h.format)) o.format = j["format"].get<std::string>();
    if (j.contains("out") && unset(h.out)) o.out = j["out"].get<std::string>();
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    return v;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    return v;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + o.out);
    f << text;
}

void write_config_json(hoj::JsonWriter& w, const Options& o, bool with_seed) {
    w.key("config").begin_object();
    w.key("q").value(o.q);
    w.key("d").value(o.d);
    w.key("mu").value(o.mu);
    w.key("grid").value(o.grid);
    w.key("samples").value(o.samples);
    w.key("format").value(o.format);
    w.end_object();
    w.key("environment").begin_object();
    w.key("rng").value(hoj::Rng::kAlgorithm);
    if (with_seed) w.key("seed").value(o.seed);
    w.end_object();
}

std::vector<hoj::DominantWeight> parse_weights(const Options& o, const hoj::RankProfile& profile) {
    std::vector<hoj::DominantWeight> ws;
    for (const auto& s : o.lambdas) {
        auto entries = parse_int_list(s);
        if (static_cast<int>(entries.size()) != profile.rank())
            throw std::invalid_argument("lambda " + s + ": expected " +
                                        std::to_string(profile.rank()) + " entries");
        ws.emplace_back(entries, profile.weight_scale());
    }
    return ws;
}

int run_poly(const Options& o) {
    hoj::RankProfile profile(o.q, o.d, o.mu);
    auto weights = parse_weights(o, profile);
    if (weights.empty()) throw std::invalid_argument("poly: at least one --lambda is required");

    hoj::JacobiEngine engine(profile, {o.grid, 1e12});
    std::vector<std::shared_ptr<const hoj::JacobiPolynomial>> polys;
    for (const auto& lam : weights) polys.push_back(engine.polynomial(lam));

    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "lambda,mu,coeff,c_value,norm_sq,plancherel_weight,gram_condition\n";
        for (const auto& poly : polys)
            for (std::size_t k = 0; k < poly->support.size(); ++k)
                csv << hoj::weight_label(poly->lam) << "," << hoj::weight_label(poly->support[k])
                    << "," << hoj::format_double(poly->coeffs[k]) << ","
                    << hoj::format_double(poly->c_value) << ","
                    << hoj::format_double(poly->norm_sq) << ","
                    << hoj::format_double(poly->plancherel_weight) << ","
                    << hoj::format_double(poly->gram_condition) << "\n";
        emit(o, csv.str());
        return kExitPass;
    }

    hoj::JsonWriter w;
    w.begin_object();
    write_config_json(w, o, false);
    w.key("results").begin_array();
    for (const auto& poly : polys) {
        w.begin_object();
        w.key("lambda").value(poly->lam.entries());
        w.key("lower_set").begin_array();
        for (const auto& mu : poly->support) w.value(mu.entries());
        w.end_array();
        w.key("coeffs").value(poly->coeffs);
        w.key("c_value").value(poly->c_value);
        w.key("norm_sq").value(poly->norm_sq);
        w.key("plancherel_weight").value(poly->plancherel_weight);
        w.key("gram_condition").value(poly->gram_condition);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(o, w.str() + "\n");
    return kExitPass;
}

int run_verify(const Options& o) {
    hoj::RankProfile profile(o.q, o.d, o.mu);
    hoj::VerifyConfig cfg{profile, {}, o.grid, o.samples, o.seed};
    cfg.weights = parse_weights(o, profile);

    std::vector<std::string> suites = o.suites;
    if (suites.empty()) {
        suites = hoj::known_suites();
        if (profile.rank() != 1)
            suites.erase(std::remove(suites.begin(), suites.end(), "rank1"), suites.end());
    }
    for (const auto& s : suites)
        if (std::find(hoj::known_suites().begin(), hoj::known_suites().end(), s) ==
            hoj::known_suites().end())
            throw std::invalid_argument("unknown suite: " + s);

    std::vector<hoj::CheckResult> results;
    for (const auto& s : suites) {
        auto part = hoj::run_suite(s, cfg);
        results.insert(results.end(), part.begin(), part.end());
    }
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "suite,check,comparison,value,std_error,threshold,n_samples,pass\n";
        for (const auto& r : results)
            csv << r.suite << "," << r.name << "," << r.comparison << ","
                << hoj::format_double(r.value) << "," << hoj::format_double(r.std_error) << ","
                << hoj::format_double(r.threshold) << "," << r.n_samples << ","
                << (r.pass ? "true" : "false") << "\n";
        emit(o, csv.str());
    } else {
        hoj::JsonWriter w;
        w.begin_object();
        write_config_json(w, o, true);
        w.key("results").begin_array();
        for (const auto& r : results) {
            w.begin_object();
            w.key("suite").value(r.suite);
            w.key("check").value(r.name);
            w.key("comparison").value(r.comparison);
            w.key("value").value(r.value);
            w.key("std_error").value(r.std_error);
            w.key("threshold").value(r.threshold);
            w.key("n_samples").value(r.n_samples);
            w.key("pass").value(r.pass);
            if (!r.detail.empty()) w.key("detail").value(r.detail);
            w.end_object();
        }
        w.end_array();
        w.key("all_pass").value(all_pass);
        w.end_object();
        emit(o, w.str() + "\n");
    }
    return all_pass ? kExitPass : kExitCheckFailure;
}

int run_convolve(const Options& o) {
    hoj::RankProfile profile(o.q, o.d, o.mu);
    if (o.x_arg.empty() || o.y_arg.empty())
        throw std::invalid_argument("convolve: --x and --y are required");
    auto x = parse_double_list(o.x_arg);
    auto y = parse_double_list(o.y_arg);
    if (static_cast<int>(x.size()) != profile.rank() ||
        static_cast<int>(y.size()) != profile.rank())
        throw std::invalid_argument("convolve: points must have rank many coordinates");
    if (!hoj::in_closed_alcove(x) || !hoj::in_closed_alcove(y))
        throw std::invalid_argument("convolve: points must lie in the closed alcove");

    hoj::Rng rng(o.seed);
    auto measure = hoj::convolve(x, y, profile, o.samples, rng);

    if (o.format == "csv") {
        std::ostringstream csv;
        csv << "# q=" << o.q << " d=" << o.d << " mu=" << hoj::format_double(o.mu)
            << " seed=" << o.seed << " samples=" << o.samples << " rng=" << hoj::Rng::kAlgorithm
            << "\n";
        for (int i = 0; i < profile.rank(); ++i) csv << "z" << (i + 1) << ",";
        csv << "weight\n";
        for (std::size_t i = 0; i < measure.atoms.size(); ++i) {
            for (double c : measure.atoms[i]) csv << hoj::format_double(c) << ",";
            csv << hoj::format_double(measure.weights[i]) << "\n";
        }
        emit(o, csv.str());
        return kExitPass;
    }

    hoj::JsonWriter w;
    w.begin_object();
    write_config_json(w, o, true);
    w.key("x").value(x);
    w.key("y").value(y);
    w.key("atoms").begin_array();
    for (std::size_t i = 0; i < measure.atoms.size(); ++i) {
        w.begin_object();
        w.key("z").value(measure.atoms[i]);
        w.key("weight").value(measure.weights[i]);
        w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(o, w.str() + "\n");
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heckman-Opdam Jacobi polynomials and hypergroup convolution on the alcove"};
    app.require_subcommand(1);

    Options o;
    auto* poly = app.add_subcommand("poly", "construct polynomials and print coefficient tables");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    auto* convolve = app.add_subcommand("convolve", "sample delta_x * delta_y and dump atoms");
    auto hp = add_common_options(poly, o);
    auto hv = add_common_options(verify, o);
    auto hc = add_common_options(convolve, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitConfigError;
    }

    try {
        if (poly->parsed()) {
            apply_config(o, o, hp);
            return run_poly(o);
        }
        if (verify->parsed()) {
            apply_config(o, o, hv);
            if (hv.seed->count() == 0)
                throw std::invalid_argument("verify: --seed is required");
            return run_verify(o);
        }
        apply_config(o, o, hc);
        if (hc.seed->count() == 0)
            throw std::invalid_argument("convolve: --seed is required");
        return run_convolve(o);
    } catch (const hoj::IllConditioned& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
