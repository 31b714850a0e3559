#include <cstring>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ffh/error.hpp"

namespace {

using ffh::app::ExperimentConfig;
using ffh::app::Json;

int exit_code(ffh::ErrorCode code) {
  switch (code) {
    case ffh::ErrorCode::Parse:
    case ffh::ErrorCode::Precondition: return 2;
    case ffh::ErrorCode::Budget: return 3;
    case ffh::ErrorCode::Consistency: return 4;
  }
  return 1;
}

int report_error(std::string_view code, const std::string& message, int status) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
  return status;
}

// The config file is read before any flag so that flags override its values.
std::string find_config(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) return argv[i + 1];
    if (std::strncmp(argv[i], "--config=", 9) == 0) return argv[i] + 9;
  }
  return {};
}

void add_options(CLI::App* cmd, ExperimentConfig& cfg, std::string& ell, std::string& config, int& cap_deg) {
  cmd->add_option("--config", config, "JSON file whose keys mirror the flags");
  cmd->add_option("--q", cfg.q, "field order p^e");
  cmd->add_option("--e", cfg.e, "extension degree (checked against --q)");
  cmd->add_option("--modulus", cfg.modulus, "defining polynomial of F_q over F_p, coefficients low to high")
      ->delimiter(',');
  cmd->add_option("--f", cfg.f, "polynomial, e.g. \"x0*x2 + x1^2\"");
  cmd->add_option("--f-file", cfg.f_file, "file holding the polynomial");
  cmd->add_option("--nvars", cfg.nvars, "number of variables (default: inferred)");
  cmd->add_option("--ell", ell, "height bound n or range a:b");
  cmd->add_option("--eps", cfg.eps, "epsilon in the regime split and bounds");
  cmd->add_option("--C", cfg.C, "constant in the bound shapes");
  cmd->add_option("--cap-deg", cap_deg, "bad prime degree cap");
  cmd->add_option("--cap-enum", cfg.cap_enum, "enumeration candidate budget");
  cmd->add_option("--cap-M", cfg.cap_M, "largest auxiliary degree tried");
  cmd->add_option("--seed", cfg.seed, "seed for the property suites");
  cmd->add_option("--out", cfg.out, "report path");
  cmd->add_option("--format", cfg.format, "json or csv");
  cmd->add_option("--mode", cfg.mode, "projective or affine");
  cmd->add_option("--thm3-exponent", cfg.thm3_exponent, "exponent of d in the dimension growth bound");
  cmd->add_option("--threads", cfg.threads, "enumeration threads, 0 for all cores");
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  std::string ell, config;
  int cap_deg = -1;
  std::string fault = "none";

  CLI::App app{"Rational points of bounded height over F_q[t]"};
  app.require_subcommand(1);
  CLI::App* count = app.add_subcommand("count", "count points of height < ell");
  CLI::App* aux = app.add_subcommand("aux", "auxiliary vanishing polynomial per ell");
  CLI::App* verify = app.add_subcommand("verify", "run every seeded property suite");
  for (CLI::App* cmd : {count, aux, verify}) add_options(cmd, cfg, ell, config, cap_deg);
  verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"none", "gcd"}));

  try {
    const std::string path = find_config(argc, argv);
    if (!path.empty()) ffh::app::merge_config_file(cfg, path);
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      return report_error("PARSE", e.what(), 2);
    }
    if (!ell.empty()) ffh::app::parse_ell_range(ell, cfg.ell_lo, cfg.ell_hi);
    if (cap_deg >= 0) cfg.cap_deg = cap_deg;

    if (verify->parsed()) {
      const auto out = ffh::app::cmd_verify(cfg, fault == "gcd" ? ffh::Fault::Gcd : ffh::Fault::None);
      const std::string text = out.report.dump(2) + "\n";
      if (!cfg.out.empty()) ffh::app::write_atomic(cfg.out, text);
      std::cout << text;
      if (!out.failed.empty()) {
        std::string names;
        for (const auto& n : out.failed) names += (names.empty() ? "" : ", ") + n;
        return report_error("CONSISTENCY", "failing suites: " + names, 4);
      }
      return 0;
    }

    const std::string command = count->parsed() ? "count" : "aux";
    const auto out = command == "count" ? ffh::app::cmd_count(cfg) : ffh::app::cmd_aux(cfg);
    if (cfg.out.empty()) {
      std::cout << (cfg.format == "csv" ? ffh::app::to_csv(out.records) : out.records.dump(2) + "\n");
    } else {
      ffh::app::write_outputs(cfg, command, out);
      for (const auto& line : out.summary) std::cout << line << "\n";
    }
    return 0;
  } catch (const ffh::Error& e) {
    return report_error(ffh::to_string(e.code()), e.what(), exit_code(e.code()));
  } catch (const std::exception& e) {
    return report_error("PRECONDITION", e.what(), 2);
  }
}
