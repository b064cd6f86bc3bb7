#include "loopstab/cli.hpp"

#include "loopstab/errors.hpp"
#include "loopstab/excluded.hpp"
#include "loopstab/loop_group.hpp"
#include "loopstab/permutation.hpp"
#include "loopstab/report.hpp"
#include "loopstab/stabilizer.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace loopstab::cli {

namespace {

std::optional<LoopSubgroup> parse_or_report(const std::string& text, std::ostream& err) {
  try {
    return parse_loops(text);
  } catch (const std::exception& e) {
    err << "error: invalid --loops '" << text << "': " << e.what() << '\n';
    return std::nullopt;
  }
}

bool write_output(const std::string& text, const std::string& path, std::ostream& out,
                  std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  file << text;
  return true;
}

void print_checks(const std::vector<Check>& checks, std::ostream& out) {
  for (const Check& c : checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
}

}  // namespace

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto u = parse_or_report(args.loops, err);
  if (!u) return kExitUsage;
  const int r = u->rank();
  const int looplets = looplet_count(*u);
  try {
    nlohmann::ordered_json report;
    bool passed = false;
    std::vector<Check> checks;
    if (looplets == r) {
      err << "error: every loop is a looplet (U = F_r); no theorem applies\n";
      return kExitUsage;
    }
    if (looplets == r - 1) {
      const auto& loops = u->loops();
      const int s1 = *std::max_element(loops.begin(), loops.end());
      ExcludedOptions options;
      options.cap = args.cap;
      const ExcludedReport excluded = verify_excluded(ExcludedCase(r, s1), options);
      report = to_json(excluded);
      passed = excluded.passed();
      checks = excluded.checks;
    } else {
      if (r < 3) {
        err << "error: the level-2 theorem needs r >= 3\n";
        return kExitUsage;
      }
      VerifyOptions options;
      options.cap = args.cap;
      options.max_rank = args.max_rank;
      const SharpboundReport sharp = verify_sharpbound(*u, options);
      report = to_json(sharp);
      passed = sharp.passed();
      checks = sharp.checks;
    }
    const std::string text = report.dump(2) + "\n";
    if (!write_output(text, args.out_path, out, err)) return kExitUsage;
    if (!args.out_path.empty()) print_checks(checks, out);
    return passed ? kExitPass : kExitFail;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_graph(const std::string& loops, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const auto u = parse_or_report(loops, err);
  if (!u) return kExitUsage;
  return write_output(coset_graph_dot(*u), out_path, out, err) ? kExitPass : kExitUsage;
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.format != "text" && args.format != "json")
      throw std::invalid_argument("--format must be text or json");
    const Permutation target = parse_cycles(args.n, args.cycles);
    const SWWord word = decompose_even(target, args.m);
    const Permutation sigma = Permutation::cycle(args.n, [&] {
      std::vector<int> pts;
      for (int p = 1; p <= args.m; ++p) pts.push_back(p);
      return pts;
    }());
    std::vector<int> omega_points{1};
    for (int p = args.m + 1; p <= args.n; ++p) omega_points.push_back(p);
    const Permutation omega = Permutation::cycle(args.n, omega_points);
    const Permutation value = evaluate(word, sigma, omega);
    const bool ok = value == target && word.exponent_sum(SWWord::Letter::S) == 0 &&
                    word.exponent_sum(SWWord::Letter::W) == 0;
    if (args.format == "json") {
      nlohmann::ordered_json j{{"schema", kReportSchema},
                       {"kind", "decompose"},
                       {"target", to_string(target)},
                       {"m", args.m},
                       {"n", args.n},
                       {"word", to_string(word)},
                       {"evaluation", to_string(value)},
                       {"passed", ok}};
      out << j.dump(2) << '\n';
    } else {
      out << to_string(word) << '\n';
      out << "check: evaluates to " << to_string(value) << (ok ? " ok" : " MISMATCH") << '\n';
    }
    return ok ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_preimage(const PreimageArgs& args, std::ostream& out, std::ostream& err) {
  const auto u = parse_or_report(args.loops, err);
  if (!u) return kExitUsage;
  try {
    CertifiedStabilizer s = [&] {
      if (args.kind == "odd") return preimage_elementary(*u, args.i, args.j);
      if (args.kind == "squared") return preimage_elementary_squared(*u, args.i, args.j);
      if (args.kind == "double") return preimage_double(*u, args.i, args.j, args.k);
      if (args.kind == "commutator") return preimage_via_commutator(*u, args.i, args.j);
      if (args.kind == "tau") return tau_preimage(*u, args.i);
      throw std::invalid_argument("--kind must be odd, squared, double, commutator or tau");
    }();
    const Certificate cert = check_certificate(*u, s);
    out << to_json(s, cert).dump(2) << '\n';
    return cert.passed() ? kExitPass : kExitFail;
  } catch (const std::logic_error& e) {
    // PreconditionError and std::invalid_argument both land here; a failed
    // certificate is reported by certify() as a plain logic_error.
    const bool usage = dynamic_cast<const std::invalid_argument*>(&e) != nullptr;
    err << "error: " << e.what() << '\n';
    return usage ? kExitUsage : kExitFail;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizers of loop subgroups of free groups and their images in GL_r(Z)"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check the mod-2 image of the stabilizer (or the excluded case)");
  verify_cmd->add_option("--loops", verify.loops, "loop lengths, e.g. 3,3,1")->required();
  verify_cmd->add_option("--cap", verify.cap, "closure element cap")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-rank", verify.max_rank, "largest rank to enumerate (default 4)");
  verify_cmd->add_option("--out", verify.out_path, "write the JSON report here");

  std::string graph_loops;
  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "print the coset graph as Graphviz DOT");
  graph_cmd->add_option("--loops", graph_loops, "loop lengths, e.g. 3,3,1")->required();
  graph_cmd->add_option("--out", graph_out, "write DOT here instead of stdout");

  DecomposeArgs decompose;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "write an even permutation as a word in (1..m), (1,m+1..n)");
  decompose_cmd->add_option("--n", decompose.n, "number of points")->required();
  decompose_cmd->add_option("--m", decompose.m, "length of sigma")->required();
  decompose_cmd->add_option("--cycles", decompose.cycles, "cycle notation, e.g. \"(1,2,4)\"")
      ->required();
  decompose_cmd->add_option("--format", decompose.format, "text or json");

  PreimageArgs preimage;
  auto* preimage_cmd = app.add_subcommand("preimage", "construct a certified stabilizer");
  preimage_cmd->add_option("--loops", preimage.loops, "loop lengths, e.g. 3,3,1")->required();
  preimage_cmd->add_option("--kind", preimage.kind, "odd, squared, double, commutator or tau")
      ->required();
  preimage_cmd->add_option("--i", preimage.i)->required();
  preimage_cmd->add_option("--j", preimage.j);
  preimage_cmd->add_option("--k", preimage.k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (*verify_cmd) return cmd_verify(verify, out, err);
  if (*graph_cmd) return cmd_graph(graph_loops, graph_out, out, err);
  if (*decompose_cmd) return cmd_decompose(decompose, out, err);
  if (*preimage_cmd) return cmd_preimage(preimage, out, err);
  return kExitUsage;
}

}  // namespace loopstab::cli
