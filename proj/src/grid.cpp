#include "hypercauchy/grid.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "hypercauchy/distributions.hpp"

namespace hypercauchy {

int thread_count() {
    if (const char* env = std::getenv("HYPERCAUCHY_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<double> grid_points(const GridSpec& g) {
    if (g.points < 2 || !(g.x_min < g.x_max))
        throw std::domain_error("grid_points: need x_min < x_max, points >= 2");
    std::vector<double> x(g.points);
    const double step = (g.x_max - g.x_min) / (g.points - 1);
    for (int i = 0; i < g.points; ++i) x[i] = g.x_min + i * step;
    x.back() = g.x_max;
    return x;
}

std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  const GridSpec& g) {
    const std::vector<double> x = grid_points(g);
    std::vector<double> y(x.size());
    const int workers = std::min<int>(thread_count(), static_cast<int>(x.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);
        return y;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (x.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(x.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&x, &y, &f, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) y[i] = f(x[i]);
        });
    }
    for (auto& th : pool) th.join();
    return y;
}

namespace {

std::string format_g12(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 12);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

void write_curve_csv(std::ostream& os, const std::vector<double>& x,
                     const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("write_curve_csv: size mismatch");
    os << "x,value\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        os << format_g12(x[i]) << ',' << format_g12(y[i]) << '\n';
}

namespace figures {

namespace {

std::string write_one(const std::filesystem::path& dir,
                      const std::string& name,
                      const std::function<double(double)>& f,
                      const GridSpec& g) {
    const auto x = grid_points(g);
    const auto y = evaluate_grid(f, g);
    std::ofstream os(dir / name);
    if (!os) throw std::runtime_error("cannot open " + (dir / name).string());
    write_curve_csv(os, x, y);
    return name;
}

}  // namespace

std::vector<std::string> write_p4p8(const std::filesystem::path& dir) {
    const GridSpec g{-5.0, 5.0, 2001};
    std::vector<std::string> files;
    for (int n : {2, 3}) {
        HyperCauchyParams p(n, 1.0);
        files.push_back(write_one(
            dir, "p4p8_p" + std::to_string(1 << n) + ".csv",
            [p](double x) { return hyper_cauchy_pdf(x, p); }, g));
    }
    return files;
}

std::vector<std::string> write_gk(const std::filesystem::path& dir) {
    const GridSpec g{-5.0, 5.0, 2001};
    std::vector<std::string> files;
    for (int k : {1, 3}) {
        files.push_back(write_one(
            dir, "gk_n3_k" + std::to_string(k) + ".csv",
            [k](double x) { return disturbance_g(x, 1.0, k, 3); }, g));
    }
    return files;
}

std::vector<std::string> write_pn_large(const std::filesystem::path& dir) {
    const GridSpec g{-5.0, 5.0, 2001};
    std::vector<std::string> files;
    for (int n : {5, 10, 15, 20}) {
        HyperCauchyParams p(n, 1.0);
        files.push_back(write_one(
            dir, "pn_large_n" + std::to_string(n) + ".csv",
            [p](double x) { return hyper_cauchy_pdf(x, p); }, g));
    }
    return files;
}

std::vector<std::string> write_fold_sym(const std::filesystem::path& dir) {
    std::vector<std::string> files;
    for (int k : {1, 3}) {
        const ComponentSpec c = make_component(3, k, 1.0);
        files.push_back(write_one(
            dir, "fold_sym_n3_k" + std::to_string(k) + "_folded.csv",
            [c](double w) { return folded_pdf(w, c); }, GridSpec{0.0, 5.0, 1001}));
        files.push_back(write_one(
            dir, "fold_sym_n3_k" + std::to_string(k) + "_symmetrized.csv",
            [c](double w) { return component_pdf(w, c); },
            GridSpec{-5.0, 5.0, 2001}));
    }
    return files;
}

std::vector<std::string> write_third(const std::filesystem::path& dir) {
    return {write_one(
        dir, "third_t1.csv", [](double x) { return third_order_pdf(x, 1.0); },
        GridSpec{-5.0, 5.0, 2001})};
}

std::vector<std::string> write_figure(const std::string& id,
                                      const std::filesystem::path& dir) {
    if (id == "p4p8") return write_p4p8(dir);
    if (id == "gk") return write_gk(dir);
    if (id == "pn_large") return write_pn_large(dir);
    if (id == "fold_sym") return write_fold_sym(dir);
    if (id == "third") return write_third(dir);
    throw std::invalid_argument("unknown figure id: " + id);
}

}  // namespace figures

}  // namespace hypercauchy
