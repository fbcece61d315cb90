// Serial reference vs OpenMP kernels: GW table fill and Tevelev batches.

#include "qhci/tevelev.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

namespace {

double seconds(const std::function<void()>& body, int repeats) {
  double best = 1e300;
  for (int t = 0; t < repeats; ++t) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark serial and parallel kernels"};
  int k_max = 12;
  int repeats = 3;
  int g_max = 3;
  int n_max = 6;
  app.add_option("--k", k_max, "Curve degree bound for the table fill");
  app.add_option("--repeats", repeats, "Timing repeats (best is reported)");
  app.add_option("--genus", g_max, "Largest genus in the Tevelev batch");
  app.add_option("--points", n_max, "Largest point count in the Tevelev batch");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-16s %-10s %10s %10s %10s %8s\n", "space", "kernel", "items", "serial_s",
              "parallel_s", "match");

  const std::vector<std::pair<int, std::vector<int>>> spaces = {
      {3, {4}}, {4, {2, 3}}, {5, {3, 4}}, {6, {4, 4}}, {6, {3}}};
  for (const auto& [r, degrees] : spaces) {
    const qhci::FanoSpace space = qhci::validate_space(r, degrees);

    qhci::GWTable serial(space, k_max);
    qhci::GWTable parallel(space, k_max);
    const double ts = seconds([&] { serial.clear(); qhci::fill_levels_serial(serial, k_max); }, repeats);
    const double tp =
        seconds([&] { parallel.clear(); qhci::fill_levels_parallel(parallel, k_max); }, repeats);
    std::printf("%-16s %-10s %10zu %10.4f %10.4f %8s\n", space.label().c_str(), "gw_fill",
                serial.memo().size(), ts, tp, serial.memo() == parallel.memo() ? "yes" : "NO");

    qhci::GWTable table(space, 1);
    const qhci::TevelevSolver solver(qhci::RingContext::make(space, qhci::Basis::HStar), table);
    const auto queries = qhci::valid_queries(space, g_max, n_max);
    std::vector<qhci::TevelevBreakdown> a, b;
    const double qs = seconds([&] { a = qhci::solve_batch_serial(solver, queries); }, repeats);
    const double qp = seconds([&] { b = qhci::solve_batch_parallel(solver, queries); }, repeats);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].value_direct == b[i].value_direct;
    std::printf("%-16s %-10s %10zu %10.4f %10.4f %8s\n", space.label().c_str(), "tevelev",
                queries.size(), qs, qp, same ? "yes" : "NO");
  }
  return 0;
}
