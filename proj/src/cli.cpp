#include "hecke/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/bound.hpp"
#include "hecke/table.hpp"

namespace hecke::cli {

namespace {

// Runs `emit` against --output (or `out` when empty). Returns kIo if the
// file cannot be opened or written.
int with_output(const std::string& path, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(out);
    return kSuccess;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file '" << path << "'\n";
    return kIo;
  }
  emit(file);
  file.flush();
  if (!file) {
    err << "error: failed writing output file '" << path << "'\n";
    return kIo;
  }
  return kSuccess;
}

int compute(std::int64_t g, std::int64_t n, std::int64_t p, const std::string& format, const std::string& path,
            std::ostream& out, std::ostream& err) {
  std::optional<BoundBreakdown> row;
  try {
    row = hecke_bound(Parameters(g, n, p));
  } catch (const HypothesisError& e) {
    err << "error: hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  }
  return with_output(path, out, err, [&](std::ostream& os) {
    if (format == "json") {
      os << breakdown_json(*row) << '\n';
    } else {
      write_csv(os, SweepTable{{*row}});
    }
  });
}

int table(const std::string& g, const std::string& n, const std::string& p, const std::string& format,
          const std::string& path, std::ostream& out, std::ostream& err) {
  Range gr{}, nr{}, pr{};
  try {
    gr = Range::parse(g);
    nr = Range::parse(n);
    pr = Range::parse(p);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (gr.lo < 1) {
    err << "error: g range must start at 1 or above\n";
    return kUsage;
  }
  const SweepResult sweep = build_sweep(gr, nr, pr);
  const int code = with_output(path, out, err, [&](std::ostream& os) {
    if (format == "json") {
      write_jsonl(os, sweep.table);
    } else {
      write_csv(os, sweep.table);
    }
  });
  err << "table: " << sweep.table.rows.size() << " rows, " << sweep.skipped << " infeasible cells skipped\n";
  return code;
}

int constants(const std::string& g, const std::string& format, const std::string& path, std::ostream& out,
              std::ostream& err) {
  Range gr{};
  try {
    gr = Range::parse(g);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (gr.lo < 1) {
    err << "error: g range must start at 1 or above\n";
    return kUsage;
  }
  return with_output(path, out, err, [&](std::ostream& os) {
    if (format == "csv") os << "g,c_g,c_g_bernoulli,sign_agreement,n_exponent,p_exponent\n";
    for (auto gi = gr.lo; gi <= gr.hi; ++gi) {
      const int genus = static_cast<int>(gi);
      const ExactRational zeta_form = mass_constant(genus);
      const ExactRational bern_form = mass_constant_bernoulli(genus);
      const char* agreement = zeta_form == bern_form ? "agree" : "disagree";
      const auto exps = asymptotic_exponents(static_cast<unsigned>(genus));
      if (format == "json") {
        nlohmann::ordered_json row;
        row["g"] = gi;
        row["c_g"] = zeta_form.to_string();
        row["c_g_bernoulli"] = bern_form.to_string();
        row["sign_agreement"] = agreement;
        row["n_exponent"] = exps.n_exponent;
        row["p_exponent"] = exps.p_exponent;
        os << row.dump() << '\n';
      } else {
        os << gi << ',' << zeta_form << ',' << bern_form << ',' << agreement << ',' << exps.n_exponent << ','
           << exps.p_exponent << '\n';
      }
    }
  });
}

}  // namespace

int run_verify_command(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  const VerifyReport report = run_verify(options, out);
  if (report.ok()) return kSuccess;
  for (const auto& check : report.checks) {
    if (check.status == CheckStatus::Fail) err << "verification failed: " << check.name << ": " << check.detail << '\n';
  }
  return kVerifyFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bound on the number of systems of Hecke eigenvalues of mod-p Siegel modular forms",
               "heckebound"};
  app.require_subcommand(1);

  std::string output;
  std::string compute_format, table_format, constants_format;

  auto* compute_cmd = app.add_subcommand("compute", "Breakdown of the bound for one (g, N, p)");
  std::int64_t g = 0, n = 0, p = 0;
  compute_cmd->add_option("--g", g, "Dimension g >= 1")->required();
  compute_cmd->add_option("--N", n, "Level N >= 3, prime to p")->required();
  compute_cmd->add_option("--p", p, "Prime p")->required();
  compute_cmd->add_option("--format", compute_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("json");
  compute_cmd->add_option("--output", output, "Output path (default stdout)");

  auto* table_cmd = app.add_subcommand("table", "Sweep the bound over a parameter grid");
  std::string g_range, n_range, p_range;
  table_cmd->add_option("--g", g_range, "g value or range a..b")->required();
  table_cmd->add_option("--N", n_range, "N value or range a..b")->required();
  table_cmd->add_option("--p", p_range, "p value or range a..b")->required();
  table_cmd->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");
  table_cmd->add_option("--output", output, "Output path (default stdout)");

  auto* constants_cmd = app.add_subcommand("constants", "Mass constants in both forms and growth exponents");
  std::string c_range = "1..6";
  constants_cmd->add_option("--g", c_range, "g value or range a..b")->capture_default_str();
  constants_cmd->add_option("--format", constants_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");
  constants_cmd->add_option("--output", output, "Output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against brute-force oracles");
  std::uint64_t cutoff = kDefaultEnumerationCutoff;
  verify_cmd->add_option("--cutoff", cutoff, "Max candidate matrices per enumeration")
      ->check(CLI::Range(std::uint64_t{10'000}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (*compute_cmd) return compute(g, n, p, compute_format, output, out, err);
  if (*table_cmd) return table(g_range, n_range, p_range, table_format, output, out, err);
  if (*constants_cmd) return constants(c_range, constants_format, output, out, err);
  VerifyOptions options;
  options.cutoff = cutoff;
  return run_verify_command(options, out, err);
}

}  // namespace hecke::cli
