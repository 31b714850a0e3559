#include "config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ffh/error.hpp"
#include "ffh/text.hpp"

namespace ffh::app {

using nlohmann::json;

void parse_ell_range(const std::string& text, int& lo, int& hi) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      lo = hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
      lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw ParseError("bad ell range '" + text + "' (expected n or a:b)", 0);
  }
}

void merge_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  merge_config_json(cfg, ss.str());
}

void merge_config_json(ExperimentConfig& cfg, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object", 0);
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "q") cfg.q = v.get<std::uint64_t>();
      else if (key == "e") cfg.e = v.get<int>();
      else if (key == "modulus") cfg.modulus = v.get<std::vector<std::uint32_t>>();
      else if (key == "f") cfg.f = v.get<std::string>();
      else if (key == "f_file") cfg.f_file = v.get<std::string>();
      else if (key == "nvars") cfg.nvars = v.get<int>();
      else if (key == "ell") {
        if (v.is_number_integer()) cfg.ell_lo = cfg.ell_hi = v.get<int>();
        else if (v.is_string()) parse_ell_range(v.get<std::string>(), cfg.ell_lo, cfg.ell_hi);
        else if (v.is_array() && v.size() == 2) {
          cfg.ell_lo = v[0].get<int>();
          cfg.ell_hi = v[1].get<int>();
        } else {
          throw ParseError("config key 'ell' must be n, \"a:b\" or [a, b]", 0);
        }
      }
      else if (key == "eps") cfg.eps = v.get<double>();
      else if (key == "C") cfg.C = v.get<double>();
      else if (key == "cap_deg") cfg.cap_deg = v.get<int>();
      else if (key == "cap_enum") cfg.cap_enum = v.get<std::uint64_t>();
      else if (key == "cap_M") cfg.cap_M = v.get<int>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "format") cfg.format = v.get<std::string>();
      else if (key == "mode") cfg.mode = v.get<std::string>();
      else if (key == "thm3_exponent") cfg.thm3_exponent = v.get<double>();
      else if (key == "threads") cfg.threads = v.get<unsigned>();
      else throw ParseError("unknown config key '" + key + "'", 0);
    }
  } catch (const json::type_error& e) {
    throw ParseError(std::string("config value has the wrong type: ") + e.what(), 0);
  }
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.ell_lo < 1 || cfg.ell_hi < cfg.ell_lo) throw PreconditionError("ell range must be nonempty with ell >= 1");
  if (cfg.cap_enum == 0 || cfg.cap_M < 1) throw PreconditionError("caps must be positive");
  if (cfg.cap_deg && *cfg.cap_deg < 0) throw PreconditionError("cap-deg must be >= 0");
  if (cfg.format != "json" && cfg.format != "csv") throw PreconditionError("format must be json or csv");
  if (cfg.mode != "projective" && cfg.mode != "affine") throw PreconditionError("mode must be projective or affine");
  if (cfg.eps < 0 || cfg.C <= 0) throw PreconditionError("eps must be >= 0 and C > 0");
}

Field make_field(const ExperimentConfig& cfg) {
  if (cfg.q < 2) throw PreconditionError("field order must be >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t c = 2; c * c <= cfg.q && !p; ++c) {
    if (cfg.q % c == 0) p = c;
  }
  if (!p) p = cfg.q;
  int e = 0;
  std::uint64_t rest = cfg.q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw PreconditionError("field order " + std::to_string(cfg.q) + " is not a prime power");
  if (cfg.e && *cfg.e != e) {
    throw PreconditionError("--e " + std::to_string(*cfg.e) + " does not match q = " + std::to_string(cfg.q));
  }
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!cfg.modulus.empty()) modulus = cfg.modulus;
  return Field::make(static_cast<std::uint32_t>(p), e, modulus);
}

MultiPoly load_polynomial(const ExperimentConfig& cfg, const Field& F) {
  std::string text = cfg.f;
  if (text.empty() && !cfg.f_file.empty()) {
    std::ifstream in(cfg.f_file);
    if (!in) throw PreconditionError("cannot read polynomial file " + cfg.f_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw PreconditionError("no polynomial given (--f or f_file)");
  return parse_poly(text, F, cfg.nvars);
}

}  // namespace ffh::app
