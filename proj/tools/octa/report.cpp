#include "report.hpp"

#include <chrono>
#include <cstdio>

#include <json.hpp>
#include <octa/version.hpp>

namespace octa::cli {

Report run_suite(const CheckContext& ctx) {
  std::vector<Check> checks;
  const auto append = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (ctx.suite == "algebra" || ctx.suite == "all") append(algebra_checks());
  if (ctx.suite == "geometry" || ctx.suite == "all") append(geometry_checks());
  if (ctx.suite == "reduction" || ctx.suite == "all") append(reduction_checks());

  Report rep;
  rep.suite = ctx.suite;
  rep.seed = ctx.seed;
  rep.trials = ctx.trials;

  const auto start = std::chrono::steady_clock::now();
  for (const Check& c : checks) {
    CheckResult res;
    try {
      res = c.run(ctx);
    } catch (const std::exception& e) {
      res.name = c.name;
      res.pass = false;
      res.max_residual = 1.0;
      res.note = std::string("unhandled: ") + e.what();
    }
    if (!res.informational && !res.pass) rep.overall_pass = false;
    rep.checks.push_back(std::move(res));
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

std::string report_text(const Report& r) {
  std::string out = "octa verify  suite=" + r.suite + "  seed=" + std::to_string(r.seed) +
                    "  trials=" + std::to_string(r.trials) + "  version=" + kVersion + "\n";
  std::size_t width = 0;
  for (const CheckResult& c : r.checks) width = std::max(width, c.name.size());
  for (const CheckResult& c : r.checks) {
    const char* status = c.informational ? "info" : (c.pass ? "PASS" : "FAIL");
    char line[256];
    std::snprintf(line, sizeof line, "%-4s  %-*s  trials=%-6lld max=%-12s thr=%s", status,
                  static_cast<int>(width), c.name.c_str(), c.trials,
                  sci(c.max_residual).c_str(), sci(c.threshold).c_str());
    out += line;
    if (!c.note.empty()) out += "  | " + c.note;
    out += "\n";
  }
  long long failed = 0, informational = 0;
  for (const CheckResult& c : r.checks) {
    if (c.informational)
      ++informational;
    else if (!c.pass)
      ++failed;
  }
  out += "overall: " + std::string(r.overall_pass ? "PASS" : "FAIL") + " (" +
         std::to_string(r.checks.size()) + " checks, " + std::to_string(failed) +
         " failed, " + std::to_string(informational) + " informational)\n";
  return out;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["schema"] = "octa.report/1";
  doc["version"] = kVersion;
  doc["suite"] = r.suite;
  doc["seed"] = r.seed;
  doc["trials"] = r.trials;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["trials"] = c.trials;
    jc["max_residual"] = c.max_residual;
    jc["threshold"] = c.threshold;
    jc["pass"] = c.pass;
    jc["informational"] = c.informational;
    jc["note"] = c.note;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  doc["overall_pass"] = r.overall_pass;
  doc["wall_ms"] = r.wall_ms;
  return doc.dump(2) + "\n";
}

}  // namespace octa::cli
