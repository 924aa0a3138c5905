// hypercauchy command-line tool: density curves, reproducible sampling,
// verification suites, and figure-data reproduction.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercauchy/distributions.hpp"
#include "hypercauchy/grid.hpp"
#include "hypercauchy/sampling.hpp"
#include "hypercauchy/verification.hpp"

namespace hc = hypercauchy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

hc::GridSpec parse_grid(const std::string& s) {
    hc::GridSpec g;
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--grid expects min:max:points");
    g.x_min = std::stod(s.substr(0, c1));
    g.x_max = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    g.points = std::stoi(s.substr(c2 + 1));
    if (!(g.x_min < g.x_max) || g.points < 2)
        throw CLI::ValidationError("--grid expects min < max and points >= 2");
    return g;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output file " + path);
    return file;
}

struct PdfArgs {
    std::string law;
    int n = 2;
    int k = 1;
    int m = 2;
    double t = 1.0;
    std::string grid;
    std::string format = "csv";
    std::string output;
};

int run_pdf(const PdfArgs& a) {
    std::function<double(double)> f;
    std::string tag;
    if (a.law == "cauchy") {
        tag = "cauchy:t=" + std::to_string(a.t);
        f = [&a](double x) { return hc::cauchy_pdf(x, a.t); };
    } else if (a.law == "hyper") {
        hc::HyperCauchyParams p(a.n, a.t);
        tag = "hyper:n=" + std::to_string(a.n) + ",t=" + std::to_string(a.t);
        f = [p](double x) { return hc::hyper_cauchy_pdf(x, p); };
    } else if (a.law == "third") {
        tag = "third:t=" + std::to_string(a.t);
        f = [&a](double x) { return hc::third_order_pdf(x, a.t); };
    } else if (a.law == "p6") {
        tag = "p6:t=" + std::to_string(a.t);
        f = [&a](double x) { return hc::p6_pdf(x, a.t); };
    } else if (a.law == "asym") {
        const auto p = hc::AsymCauchyParams::composition(a.k, a.t);
        tag = "asym:k=" + std::to_string(a.k) + ",t=" + std::to_string(a.t);
        f = [p](double x) { return hc::asym_cauchy_pdf(x, p); };
    } else if (a.law == "asym_m") {
        const auto p = hc::AsymCauchyParams::generic(a.m, a.t);
        tag = "asym_m:m=" + std::to_string(a.m) + ",t=" + std::to_string(a.t);
        f = [p](double x) { return hc::asym_cauchy_pdf(x, p); };
    } else if (a.law == "gk") {
        tag = "gk:n=" + std::to_string(a.n) + ",k=" + std::to_string(a.k);
        f = [&a](double x) { return hc::disturbance_g(x, a.t, a.k, a.n); };
    } else if (a.law == "component") {
        const auto c = hc::make_component(a.n, a.k, a.t);
        tag = "component:n=" + std::to_string(a.n) + ",k=" + std::to_string(a.k);
        f = [c](double x) { return hc::component_pdf(x, c); };
    } else if (a.law == "folded") {
        const auto c = hc::make_component(a.n, a.k, a.t);
        tag = "folded:n=" + std::to_string(a.n) + ",k=" + std::to_string(a.k);
        f = [c](double x) { return hc::folded_pdf(x, c); };
    } else {
        throw CLI::ValidationError("unknown --law " + a.law);
    }

    hc::GridSpec g{-5.0 * a.t, 5.0 * a.t, 2001};
    if (a.law == "folded") g = {0.0, 5.0 * a.t, 1001};
    if (!a.grid.empty()) g = parse_grid(a.grid);

    const auto x = hc::grid_points(g);
    const auto y = hc::evaluate_grid(f, g);

    std::ofstream file;
    std::ostream& os = open_output(file, a.output);
    if (a.format == "csv") {
        hc::write_curve_csv(os, x, y);
    } else if (a.format == "json") {
        nlohmann::json j;
        j["law"] = tag;
        j["x"] = x;
        j["value"] = y;
        os << j.dump() << '\n';
    } else {
        throw CLI::ValidationError("--format must be csv or json");
    }
    return kExitOk;
}

struct SampleArgs {
    std::string law;
    int n = 2;
    int k = 1;
    double t = 1.0;
    std::uint64_t count = 1000;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string output;
};

int run_sample(const SampleArgs& a) {
    std::function<double(hc::RngState&)> draw;
    std::string tag;
    if (a.law == "cauchy") {
        tag = "cauchy:t=" + std::to_string(a.t);
        draw = [&a](hc::RngState& r) { return hc::sample_cauchy(0.0, a.t, r); };
    } else if (a.law == "hyper") {
        hc::HyperCauchyParams p(a.n, a.t);
        tag = "hyper:n=" + std::to_string(a.n) + ",t=" + std::to_string(a.t);
        draw = [p](hc::RngState& r) { return hc::sample_hyper_cauchy(p, r); };
    } else if (a.law == "asym") {
        const auto p = hc::AsymCauchyParams::composition(a.k, a.t);
        tag = "asym:k=" + std::to_string(a.k) + ",t=" + std::to_string(a.t);
        draw = [p](hc::RngState& r) { return hc::sample_asym_cauchy(p, r); };
    } else if (a.law == "third") {
        tag = "third:t=" + std::to_string(a.t);
        draw = [&a](hc::RngState& r) { return hc::sample_third_order(a.t, r); };
    } else if (a.law == "stable13") {
        tag = "stable13:t=" + std::to_string(a.t);
        draw = [&a](hc::RngState& r) { return hc::sample_stable13(a.t, r); };
    } else if (a.law == "component" || a.law == "folded" ||
               a.law == "symmetrized") {
        const auto c = hc::make_component(a.n, a.k, a.t);
        tag = a.law + ":n=" + std::to_string(a.n) + ",k=" + std::to_string(a.k) +
              ",t=" + std::to_string(a.t);
        if (a.law == "component")
            draw = [c](hc::RngState& r) {
                return hc::sample_component_exact(c, r);
            };
        else if (a.law == "folded")
            draw = [c](hc::RngState& r) { return hc::sample_folded(c, r); };
        else
            draw = [c](hc::RngState& r) {
                return hc::sample_symmetrized(c, r);
            };
    } else {
        throw CLI::ValidationError("unknown --law " + a.law);
    }

    const hc::SampleBatch batch = hc::make_batch(a.count, a.seed, tag, draw);
    std::ofstream file;
    std::ostream& os = open_output(file, a.output);
    if (a.format == "csv")
        os << batch.to_csv();
    else if (a.format == "json")
        os << batch.to_json() << '\n';
    else
        throw CLI::ValidationError("--format must be csv or json");
    return kExitOk;
}

int run_verify(const std::string& suite, bool json, const std::string& output) {
    const auto reports = hc::run_suite(suite);
    if (reports.empty())
        throw CLI::ValidationError("unknown suite filter: " + suite);
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    os << (json ? hc::report_json(reports) + "\n" : hc::report_table(reports));
    for (const auto& r : reports)
        if (!r.passed) return kExitCheckFailure;
    return kExitOk;
}

int run_figure(const std::string& id, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const auto files = hc::figures::write_figure(id, dir);
    for (const auto& f : files) std::cout << f << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyper-Cauchy distribution toolkit"};
    app.require_subcommand(1);

    PdfArgs pdf_args;
    auto* pdf = app.add_subcommand("pdf", "evaluate a density over a grid");
    pdf->add_option("--law", pdf_args.law,
                    "cauchy|hyper|third|p6|asym|asym_m|gk|component|folded")
        ->required();
    pdf->add_option("--n", pdf_args.n, "family index n (order 2^n)");
    pdf->add_option("--k", pdf_args.k, "odd component index / asym order k");
    pdf->add_option("--m", pdf_args.m, "generic asym index m");
    pdf->add_option("--t", pdf_args.t, "time scale t > 0");
    pdf->add_option("--grid", pdf_args.grid, "min:max:points");
    pdf->add_option("--format", pdf_args.format, "csv|json");
    pdf->add_option("--output", pdf_args.output, "output path (default stdout)");

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "draw reproducible samples");
    sample
        ->add_option("--law", sample_args.law,
                     "cauchy|hyper|asym|third|stable13|component|folded|"
                     "symmetrized")
        ->required();
    sample->add_option("--n", sample_args.n, "family index n");
    sample->add_option("--k", sample_args.k, "odd component index / asym k");
    sample->add_option("--t", sample_args.t, "time scale t > 0");
    sample->add_option("-n,--count", sample_args.count, "number of draws");
    sample->add_option("--seed", sample_args.seed, "64-bit seed");
    sample->add_option("--format", sample_args.format, "csv|json");
    sample->add_option("--output", sample_args.output, "output path");

    std::string suite = "all";
    bool verify_json = false;
    std::string verify_output;
    auto* verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("--suite", suite,
                       "all|identity|normalization|component|pde|halfline|"
                       "airy|bessel|initial|cf");
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_option("--output", verify_output, "output path");

    std::string figure_id;
    std::string figure_dir = ".";
    auto* figure = app.add_subcommand("figure", "write figure-data CSV files");
    figure->add_option("id", figure_id, "p4p8|gk|pn_large|fold_sym|third")
        ->required();
    figure->add_option("--output-dir", figure_dir, "target directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (pdf->parsed()) return run_pdf(pdf_args);
        if (sample->parsed()) return run_sample(sample_args);
        if (verify->parsed()) return run_verify(suite, verify_json, verify_output);
        if (figure->parsed()) return run_figure(figure_id, figure_dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
    return kExitUsage;
}
