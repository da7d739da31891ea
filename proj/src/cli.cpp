#include "covrough/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "covrough/covering_io.hpp"
#include "covrough/neighborhoods.hpp"
#include "covrough/oracle.hpp"
#include "covrough/reduction.hpp"
#include "covrough/report.hpp"

namespace covrough::cli {

namespace {

struct Options {
  std::string file;
  bool lambda = false;
  bool json = false;
  std::optional<std::size_t> limit;
  std::size_t n = 0;
  unsigned threads = 1;
  bool census_only = false;
};

int cmd_cov(const Options& o, std::ostream& out) {
  out << render_covering(cov(load_covering(o.file)));
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto report = analyze(load_covering(o.file), o.lambda);
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
  }
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  out << render_covering(reduct(load_covering(o.file)));
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto d = load_covering(o.file);
  if (is_cov_fixed_point(d)) {
    out << "IS a neighborhoods: Cov(D) = D\n";
    return kExitOk;
  }
  out << "is NOT a neighborhoods";
  if (auto reason = quick_reject_neighborhoods(d)) {
    out << " (quick reject: " << to_string(*reason) << ")";
  } else {
    out << " (Cov(D) = " << format_family(d.universe(), cov(d).blocks()) << " differs from D)";
  }
  out << '\n';
  return kExitOk;
}

int cmd_preimages(const Options& o, std::ostream& out) {
  const auto d = load_covering(o.file);
  const auto found = preimages(d, o.limit);
  if (o.json) {
    nlohmann::ordered_json j;
    j["target"] = covering_to_json(d);
    j["count"] = found.size();
    auto list = nlohmann::ordered_json::array();
    for (const auto& c : found) list.push_back(covering_to_json(c));
    j["preimages"] = std::move(list);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << found.size() << " covering(s) C with Cov(C) = " << format_family(d.universe(), d.blocks());
  if (o.limit) out << " (limit " << *o.limit << ")";
  out << '\n';
  for (const auto& c : found) out << "  " << format_family(c.universe(), c.blocks()) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto summary = verify_laws(o.n, VerifyOptions{o.threads, o.census_only});
  if (o.json) {
    out << to_json(summary).dump() << '\n';
  } else {
    out << render_text(summary);
  }
  if (!summary.passed()) {
    err << "error: " << summary.violations.size() << " law violation(s)\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighborhoods, core blocks and reducible elements of finite coverings"};
  app.name("covrough");
  app.require_subcommand(1);

  Options o;
  auto* cov_cmd = app.add_subcommand("cov", "Print Cov(C) in the covering file format");
  cov_cmd->add_option("file", o.file, "Covering file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report of a covering");
  analyze_cmd->add_option("file", o.file, "Covering file")->required();
  analyze_cmd->add_flag("--lambda", o.lambda, "Include the common block repeat degree matrix");
  analyze_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the covering with all reducible elements removed");
  reduce_cmd->add_option("file", o.file, "Covering file")->required();

  auto* check_cmd = app.add_subcommand("check-neighborhoods", "Decide whether D is the neighborhoods of some covering");
  check_cmd->add_option("file", o.file, "Covering file")->required();

  auto* pre_cmd = app.add_subcommand("preimages", "List all coverings C with Cov(C) = D");
  pre_cmd->add_option("file", o.file, "Covering file")->required();
  pre_cmd->add_option("--limit", o.limit, "Stop after this many coverings");
  pre_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* verify_cmd = app.add_subcommand("verify", "Check every law over all coverings of an n-element universe");
  verify_cmd->add_option("--n", o.n, "Universe size")->required();
  verify_cmd->add_flag("--json", o.json, "Machine-readable output");
  verify_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  verify_cmd->add_flag("--census-only", o.census_only, "Allow n = 5 with only the per-covering census checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'covrough --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*cov_cmd) return cmd_cov(o, out);
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*reduce_cmd) return cmd_reduce(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*pre_cmd) return cmd_preimages(o, out);
    if (*verify_cmd) return cmd_verify(o, out, err);
  } catch (const Error& e) {
    err << "error";
    if (!o.file.empty()) err << " in " << o.file;
    err << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace covrough::cli
