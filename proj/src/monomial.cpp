#include "ffh/monomial.hpp"

#include <algorithm>

#include "ffh/error.hpp"

namespace ffh {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    const int s = e[i] + o.e[i];
    if (s > 255) throw BudgetError("monomial exponent exceeds 255");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  return r;
}

Monomial Monomial::variable(int i, int power) {
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
  return m;
}

namespace {

void fill(int var, int nvars, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
    fill(var + 1, nvars, remaining - k, cur, out);
  }
  cur.e[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(int degree, int nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw PreconditionError("variable count out of range");
  if (degree < 0) return {};
  std::vector<Monomial> out;
  Monomial cur;
  fill(0, nvars, degree, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to(int degree, int nvars) {
  std::vector<Monomial> out;
  for (int d = degree; d >= 0; --d) {
    auto b = monomial_basis(d, nvars);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::string format_monomial(const Monomial& m, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    const int k = m.e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ffh
