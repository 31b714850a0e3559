#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "ffh/determinant_method.hpp"
#include "ffh/error.hpp"
#include "ffh/factor.hpp"
#include "ffh/text.hpp"

namespace py = pybind11;
using namespace ffh;

namespace {

Field field(std::uint64_t q) {
  app::ExperimentConfig cfg;
  cfg.q = q;
  return app::make_field(cfg);
}

std::vector<std::string> strings(const std::vector<RingElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::vector<std::string> strings(const PolyMatrix& A) {
  std::vector<std::string> out;
  for (int i = 0; i < A.rows(); ++i) {
    std::string row;
    for (int j = 0; j < A.cols(); ++j) row += (j ? "," : "") + A(i, j).to_string();
    out.push_back(row);
  }
  return out;
}

std::string run(const std::string& command, const std::string& config_json) {
  app::ExperimentConfig cfg;
  app::merge_config_json(cfg, config_json);
  if (command == "verify") return app::cmd_verify(cfg).report.dump();
  if (command == "count") return app::cmd_count(cfg).records.dump();
  if (command == "aux") return app::cmd_aux(cfg).records.dump();
  throw PreconditionError("unknown command '" + command + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational points of bounded height over F_q[t]";

  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<BudgetError> budget(m, "BudgetError", base.ptr());
  static py::exception<PreconditionError> pre(m, "PreconditionError", base.ptr());
  static py::exception<ConsistencyError> cons(m, "ConsistencyError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const BudgetError& e) {
      py::set_error(budget, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(pre, e.what());
    } catch (const ConsistencyError& e) {
      py::set_error(cons, e.what());
    }
  });

  m.def("primes", [](std::uint64_t q, int n) {
    std::vector<RingElement> out;
    for (const auto& p : primes_of_degree(field(q), n)) out.push_back(p.value());
    return strings(out);
  }, py::arg("q"), py::arg("n"), "Monic irreducibles of degree n over F_q, as strings.");

  m.def("prime_count", [](std::uint64_t q, int n) { return prime_count(field(q), n).exact; },
        py::arg("q"), py::arg("n"));

  m.def("gcd", [](const std::string& a, const std::string& b, std::uint64_t q) {
    const Field F = field(q);
    return gcd(parse_ring_element(a, F), parse_ring_element(b, F)).to_string();
  }, py::arg("a"), py::arg("b"), py::arg("q") = 2);

  m.def("normalize", [](const std::string& f, std::uint64_t q, int nvars) {
    return to_string(parse_poly(f, field(q), nvars));
  }, py::arg("f"), py::arg("q") = 2, py::arg("nvars") = 0, "Parses and prints back in canonical form.");

  m.def("count", [](const std::string& f, std::uint64_t q, int ell, const std::string& mode, int nvars) {
    const MultiPoly P = parse_poly(f, field(q), nvars);
    if (mode == "affine") return enumerate_affine(P, ell).count;
    if (mode == "projective") return enumerate_projective(P, ell).count;
    throw PreconditionError("mode must be projective or affine");
  }, py::arg("f"), py::arg("q") = 2, py::arg("ell") = 1, py::arg("mode") = "projective", py::arg("nvars") = 0);

  m.def("points", [](const std::string& f, std::uint64_t q, int ell, const std::string& mode, int nvars) {
    const MultiPoly P = parse_poly(f, field(q), nvars);
    std::vector<std::vector<std::string>> out;
    if (mode == "affine") {
      for (const auto& p : enumerate_affine(P, ell, {true, 0}).points) out.push_back(strings(p.x));
    } else if (mode == "projective") {
      for (const auto& p : enumerate_projective(P, ell, {true, 0}).points) out.push_back(strings(p.coords()));
    } else {
      throw PreconditionError("mode must be projective or affine");
    }
    return out;
  }, py::arg("f"), py::arg("q") = 2, py::arg("ell") = 1, py::arg("mode") = "projective", py::arg("nvars") = 0);

  m.def("auxiliary", [](const std::string& f, std::uint64_t q, int ell, int cap_M) {
    AuxOptions opt;
    opt.cap_M = cap_M;
    const AuxResult a = auxiliary_poly(parse_poly(f, field(q)), ell, opt);
    py::dict d;
    d["M"] = a.M;
    d["g"] = to_string(a.g);
    d["points"] = a.points.size();
    d["t_degree"] = a.t_degree;
    py::list ranks;
    for (const auto& r : a.ranks) ranks.append(py::make_tuple(r.M, r.rank, r.target));
    d["ranks"] = ranks;
    d["bezout_holds"] = a.bezout_holds;
    return d;
  }, py::arg("f"), py::arg("q") = 2, py::arg("ell") = 1, py::arg("cap_M") = 40);

  m.def("determinant", [](const std::string& A, std::uint64_t q) {
    return determinant(parse_matrix(A, field(q))).to_string();
  }, py::arg("matrix"), py::arg("q") = 2, "Rows separated by ';', entries by ','.");

  m.def("hermite", [](const std::string& A, std::uint64_t q) {
    const HermiteResult h = hermite_form(parse_matrix(A, field(q)));
    return py::make_tuple(strings(h.H), strings(h.U));
  }, py::arg("matrix"), py::arg("q") = 2);

  m.def("thue_siegel", [](const std::string& A, std::uint64_t q) {
    const ThueSiegelResult r = thue_siegel_solve(parse_matrix(A, field(q)));
    const Rational& b = r.certificate.bound;
    return py::make_tuple(strings(r.x), py::make_tuple(b.numerator(), b.denominator()));
  }, py::arg("matrix"), py::arg("q") = 2, "Small kernel vector and its degree bound as (num, den).");

  m.def("regime", [](std::uint64_t c, int d, double eps) { return to_string(classify_regime(c, d, eps).tag); },
        py::arg("c"), py::arg("d"), py::arg("eps") = 0.1);

  m.def("beta", [](std::uint64_t q, int d, double eps) {
    return beta(q, d, classify_regime(field(q).characteristic(), d, eps).tag);
  }, py::arg("q"), py::arg("d"), py::arg("eps") = 0.1);

  m.def("bad_primes", [](const std::string& f, std::uint64_t q, int cap) {
    std::vector<RingElement> out;
    for (const auto& p : bad_primes(parse_poly(f, field(q)), cap)) out.push_back(p.value());
    return strings(out);
  }, py::arg("f"), py::arg("q"), py::arg("cap"));

  m.def("_run", &run, py::arg("command"), py::arg("config_json"));
}
