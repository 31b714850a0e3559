#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ffh/error.hpp"
#include "ffh/factor.hpp"
#include "ffh/text.hpp"
#include "suites.hpp"

namespace ffh::app {

namespace {

using Clock = std::chrono::steady_clock;

void apply_limits(const ExperimentConfig& cfg) {
  Limits l = limits();
  l.enumeration_candidates = cfg.cap_enum;
  l.threads = cfg.threads;
  set_limits(l);
}

// Everything in a record that does not depend on ell.
struct Context {
  Field F;
  MultiPoly f;
  int d = 0;
  int n = 0;  // dimension of the hypersurface
  std::optional<CharRegime> regime;
  std::optional<int> beta;
  bool bad_known = false;
  std::vector<PrimeElement> bad;
  int bad_cap = 0;
  Rational b_log{0};
};

// Largest cap whose residue fields, extended to degree d, fit the field budget.
int clamp_cap(std::uint64_t q, int d, int cap) {
  int k = 0;
  while (k < cap) {
    std::uint64_t size = 1;
    bool fits = true;
    for (int i = 0; i < (k + 1) * d && fits; ++i) {
      fits = size <= limits().max_field_order / q;
      size *= q;
    }
    if (!fits) break;
    ++k;
  }
  return k;
}

Context make_context(const ExperimentConfig& cfg) {
  Context c;
  c.F = make_field(cfg);
  c.f = load_polynomial(cfg, c.F);
  c.d = c.f.is_zero() ? 0 : std::max(0, c.f.degree());
  c.n = c.f.nvars() - 2;
  if (cfg.mode == "projective" && !c.f.is_homogeneous()) {
    throw PreconditionError("projective mode needs a homogeneous polynomial");
  }
  if (cfg.mode == "affine" && (c.f.nvars() < 2 || c.f.degree_in(0) > 0)) {
    throw PreconditionError("affine mode uses the variables x1..xn; x0 must not occur");
  }
  if (c.d >= 1) {
    c.regime = classify_regime(c.F.characteristic(), c.d, cfg.eps);
    c.beta = beta(c.F.order(), c.d, c.regime->tag);
    if (is_primitive(c.f) && absolute_irreducibility_certificate(c.f, limits().prime_degree_cap)) {
      const int wanted = cfg.cap_deg ? *cfg.cap_deg : *c.beta + 3;
      c.bad_cap = cfg.cap_deg ? wanted : clamp_cap(c.F.order(), c.d, wanted);
      c.bad = bad_primes(c.f, c.bad_cap);
      c.b_log = b_truncated(c.bad, c.bad_cap, *c.beta);
      c.bad_known = true;
    }
  }
  return c;
}

Json base_record(const ExperimentConfig& cfg, const Context& c, int ell) {
  Json r;
  r["q"] = c.F.order();
  r["p"] = c.F.characteristic();
  r["e"] = c.F.degree();
  r["f"] = to_string(c.f);
  r["d"] = c.d;
  r["n"] = c.n;
  r["ell"] = ell;
  r["mode"] = cfg.mode;
  r["regime"] = c.regime ? Json(to_string(c.regime->tag)) : Json();
  r["beta"] = c.beta ? Json(*c.beta) : Json();
  if (c.bad_known) {
    Json list = Json::array();
    for (const auto& p : c.bad) list.push_back(p.value().to_string());
    r["bad_primes"] = list;
    r["bad_prime_cap"] = c.bad_cap;
    r["b_log"] = boost::rational_cast<double>(c.b_log);
  } else {
    r["bad_primes"] = Json();
    r["bad_prime_cap"] = Json();
    r["b_log"] = Json();
  }
  r["count"] = Json();
  r["M"] = Json();
  r["deg_g"] = Json();
  r["g"] = Json();
  r["bound_thm"] = Json();
  r["bound"] = Json();
  r["ratio"] = Json();
  return r;
}

std::optional<BoundParams> bound_params(const ExperimentConfig& cfg, const Context& c, int ell, int n) {
  if (c.d < 1 || n < 1 || !c.regime) return std::nullopt;
  BoundParams P;
  P.q = c.F.order();
  P.d = c.d;
  P.n = n;
  P.ell = ell;
  P.eps = cfg.eps;
  P.C = cfg.C;
  P.regime = c.regime->tag;
  P.thm3_exponent = cfg.thm3_exponent;
  P.beta = *c.beta;
  const double q = static_cast<double>(P.q);
  P.b_f = std::pow(q, boost::rational_cast<double>(c.b_log));
  P.norm_f = std::pow(q, log_norm(c.f));
  return P;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

const std::vector<std::string>& record_fields() {
  static const std::vector<std::string> fields = {"q",     "p",        "e",    "f",      "d",           "n",
                                                  "ell",   "mode",     "regime", "beta", "bad_primes",  "bad_prime_cap",
                                                  "b_log", "count",    "M",    "deg_g",  "g",           "bound_thm",
                                                  "bound", "ratio"};
  return fields;
}

RunOutput cmd_count(const ExperimentConfig& cfg) {
  validate(cfg);
  apply_limits(cfg);
  const Context c = make_context(cfg);
  RunOutput out;
  for (int ell = cfg.ell_lo; ell <= cfg.ell_hi; ++ell) {
    const auto start = Clock::now();
    Json r = base_record(cfg, c, ell);
    std::uint64_t count = 0;
    std::optional<BoundParams> P;
    BoundKind kind = BoundKind::Thm3General;
    if (cfg.mode == "projective") {
      count = enumerate_projective(c.f, ell).count;
      // Plane curves against the projective curve bound, higher dimensions
      // against dimension growth in the ambient P^(nvars-1).
      if (c.n == 1) {
        P = bound_params(cfg, c, ell, 1);
        kind = BoundKind::Thm1;
      } else if (c.n >= 2) {
        P = bound_params(cfg, c, ell, c.f.nvars() - 1);
      }
    } else {
      count = enumerate_affine(c.f, ell).count;
      if (c.n == 1) {
        P = bound_params(cfg, c, ell, 1);
        kind = BoundKind::Thm2;
      } else if (c.n >= 2) {
        P = bound_params(cfg, c, ell, c.f.nvars() - 1);
      }
    }
    r["count"] = count;
    if (P) {
      const double b = bound_value(*P, kind);
      r["bound_thm"] = to_string(kind);
      r["bound"] = b;
      r["ratio"] = static_cast<double>(count) / b;
    }
    out.summary.push_back("count ell=" + std::to_string(ell) + ": " + std::to_string(count));
    out.records.push_back(std::move(r));
    out.timings.push_back(Json{{"ell", ell}, {"elapsed_ms", elapsed_ms(start)}});
  }
  return out;
}

RunOutput cmd_aux(const ExperimentConfig& cfg) {
  validate(cfg);
  apply_limits(cfg);
  if (cfg.mode != "projective") throw PreconditionError("aux works on projective hypersurfaces");
  const Context c = make_context(cfg);
  RunOutput out;
  for (int ell = cfg.ell_lo; ell <= cfg.ell_hi; ++ell) {
    const auto start = Clock::now();
    Json r = base_record(cfg, c, ell);
    AuxOptions opt;
    opt.cap_M = cfg.cap_M;
    opt.bound = bound_params(cfg, c, ell, c.n);
    const AuxResult a = auxiliary_poly(c.f, ell, opt);
    r["count"] = a.points.size();
    r["M"] = a.M;
    r["deg_g"] = a.g.degree();
    r["g"] = to_string(a.g);
    if (a.bound) {
      r["bound_thm"] = to_string(BoundKind::MainThm);
      r["bound"] = *a.bound;
      r["ratio"] = *a.ratio;
    }
    out.summary.push_back("aux ell=" + std::to_string(ell) + ": M=" + std::to_string(a.M) + " g=" + to_string(a.g));
    out.records.push_back(std::move(r));
    out.timings.push_back(Json{{"ell", ell}, {"elapsed_ms", elapsed_ms(start)}});
  }
  return out;
}

VerifyOutput cmd_verify(const ExperimentConfig& cfg, Fault fault) {
  inject_fault(fault);
  struct Reset {
    ~Reset() { inject_fault(Fault::None); }
  } reset;
  VerifyOutput out;
  const std::vector<SuiteResult> results = run_suites(cfg.seed);
  Json suites = Json::array();
  bool all = true;
  for (const auto& s : results) {
    suites.push_back(Json{{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"passed", s.failures == 0}});
    if (s.failures) {
      all = false;
      out.failed.push_back(s.name);
    }
  }
  out.report = Json{{"seed", cfg.seed}, {"suites", suites}, {"passed", all}};
  return out;
}

std::string to_csv(const Json& records) {
  auto cell = [](const Json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return quoted + "\"";
    }
    if (v.is_array()) {
      std::string joined;
      for (const auto& x : v) joined += (joined.empty() ? "" : ";") + x.get<std::string>();
      return joined;
    }
    return v.dump();
  };
  std::string out;
  const auto& fields = record_fields();
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i];
  out += "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + cell(r.at(fields[i]));
    out += "\n";
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw PreconditionError("cannot write " + tmp.string());
    o << content;
    if (!o.flush()) throw PreconditionError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_outputs(const ExperimentConfig& cfg, const std::string& command, const RunOutput& out) {
  if (cfg.out.empty()) return;
  namespace fs = std::filesystem;
  const fs::path target(cfg.out);
  const fs::path stem = target.parent_path() / target.stem();
  const bool csv = cfg.format == "csv";
  write_atomic(cfg.out, csv ? to_csv(out.records) : out.records.dump(2) + "\n");
  std::string timings;
  if (csv) {
    timings = "ell,elapsed_ms\n";
    for (const auto& t : out.timings) timings += t["ell"].dump() + "," + t["elapsed_ms"].dump() + "\n";
  } else {
    timings = out.timings.dump(2) + "\n";
  }
  write_atomic(stem.string() + ".timings." + (csv ? "csv" : "json"), timings);

  auto dat = [&](const std::string& key, bool log) {
    std::ostringstream s;
    s << "# ell " << (log ? "log_q(" + key + ")" : key) << "\n" << std::setprecision(10);
    for (const auto& r : out.records) {
      if (r[key].is_null()) continue;
      const double v = r[key].get<double>();
      if (log && v <= 0) continue;
      s << r["ell"].get<int>() << " " << (log ? std::log(v) / std::log(r["q"].get<double>()) : v) << "\n";
    }
    return s.str();
  };
  write_atomic(stem.string() + ".count.dat", dat("count", true));
  if (command == "aux") write_atomic(stem.string() + ".M.dat", dat("M", false));
}

}  // namespace ffh::app
