#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "ffh/limits.hpp"

namespace ffh::app {

using Json = nlohmann::ordered_json;

struct RunOutput {
  Json records = Json::array();  // one experiment record per ell
  Json timings = Json::array();  // {ell, elapsed_ms}, kept out of the records
  std::vector<std::string> summary;
};

RunOutput cmd_count(const ExperimentConfig& cfg);
RunOutput cmd_aux(const ExperimentConfig& cfg);

struct VerifyOutput {
  Json report;
  std::vector<std::string> failed;
};
VerifyOutput cmd_verify(const ExperimentConfig& cfg, Fault fault = Fault::None);

// Field names of an experiment record, in column order.
const std::vector<std::string>& record_fields();

std::string to_csv(const Json& records);

// Writes through a temporary file in the same directory and renames it.
void write_atomic(const std::string& path, const std::string& content);

// The report at cfg.out plus the timing sidecar <stem>.timings.<ext> and the
// plot files <stem>.count.dat (ell, log_q count) and, for aux, <stem>.M.dat.
void write_outputs(const ExperimentConfig& cfg, const std::string& command, const RunOutput& out);

}  // namespace ffh::app
