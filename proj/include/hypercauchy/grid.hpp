#ifndef HYPERCAUCHY_GRID_HPP
#define HYPERCAUCHY_GRID_HPP

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hypercauchy/numerics.hpp"

namespace hypercauchy {

/// Worker-thread cap: HYPERCAUCHY_THREADS when set, otherwise the
/// hardware concurrency.
int thread_count();

std::vector<double> grid_points(const GridSpec& g);

/// Evaluates f over the grid, fanning out across worker threads;
/// output order matches the grid order.
std::vector<double> evaluate_grid(const std::function<double(double)>& f,
                                  const GridSpec& g);

/// Writes "x,value" CSV rows (%.12g, locale-independent).
void write_curve_csv(std::ostream& os, const std::vector<double>& x,
                     const std::vector<double>& y);

namespace figures {

/// Each writer emits one CSV per curve into `dir` and returns the file
/// names written.
std::vector<std::string> write_p4p8(const std::filesystem::path& dir);
std::vector<std::string> write_gk(const std::filesystem::path& dir);
std::vector<std::string> write_pn_large(const std::filesystem::path& dir);
std::vector<std::string> write_fold_sym(const std::filesystem::path& dir);
std::vector<std::string> write_third(const std::filesystem::path& dir);

/// Dispatch by figure id: p4p8, gk, pn_large, fold_sym, third.
std::vector<std::string> write_figure(const std::string& id,
                                      const std::filesystem::path& dir);

}  // namespace figures

}  // namespace hypercauchy

#endif
