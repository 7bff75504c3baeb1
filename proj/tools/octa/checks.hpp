#pragma once
// Check registry the verify command runs. Each check draws its randomness
// from per-trial streams keyed by (seed, suite, check, trial), and folds
// trial results with commutative operations only (max residual, summed
// counts), so the report is identical for any worker count.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <octa/rng.hpp>

namespace octa::cli {

inline std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct CheckContext {
  std::uint64_t seed = 42;
  long long trials = 1000;
  int workers = 1;
  std::map<std::string, double> tol_overrides;
  std::string suite;

  // Override lookup: exact check name first, then its last dot component.
  double tol(const std::string& check, double fallback) const {
    auto it = tol_overrides.find(check);
    if (it != tol_overrides.end()) return it->second;
    const auto dot = check.rfind('.');
    if (dot != std::string::npos) {
      it = tol_overrides.find(check.substr(dot + 1));
      if (it != tol_overrides.end()) return it->second;
    }
    return fallback;
  }

  // Streams are keyed by the check's own suite prefix, not the suite that was
  // asked for on the command line, so "verify all" and "verify algebra"
  // produce identical rows for the same check.
  Rng rng(const std::string& check, std::uint64_t trial) const {
    return Rng::derive(seed, check.substr(0, check.find('.')), check, trial);
  }
};

struct CheckResult {
  std::string name;
  long long trials = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool informational = false;  // reported but excluded from the overall verdict
  std::string note;
};

struct Check {
  std::string name;
  std::function<CheckResult(const CheckContext&)> run;
};

// Per-trial outcome; folded as (max, +, +).
struct TrialOut {
  double res = 0.0;
  long long a = 0;
  long long b = 0;
};

struct TrialStats {
  double max_res = 0.0;
  long long a = 0;
  long long b = 0;
};

// Runs fn once per trial index in [0, n), partitioned over ctx.workers
// threads. fn must derive all randomness via ctx.rng(check, trial).
template <class Fn>
TrialStats run_trials(const CheckContext& ctx, const std::string& check, long long n,
                      Fn&& fn) {
  const int workers =
      static_cast<int>(std::max<long long>(1, std::min<long long>(ctx.workers, n)));
  std::vector<TrialStats> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](int w) {
    const long long lo = n * w / workers, hi = n * (w + 1) / workers;
    TrialStats& s = partial[w];
    try {
      for (long long t = lo; t < hi; ++t) {
        const TrialOut out = fn(t);
        if (out.res > s.max_res) s.max_res = out.res;
        s.a += out.a;
        s.b += out.b;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  TrialStats total;
  for (int w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    if (partial[w].max_res > total.max_res) total.max_res = partial[w].max_res;
    total.a += partial[w].a;
    total.b += partial[w].b;
  }
  return total;
}

std::vector<Check> algebra_checks();
std::vector<Check> geometry_checks();
std::vector<Check> reduction_checks();

}  // namespace octa::cli
