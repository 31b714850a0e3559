#include "ffh/fqt.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ffh/error.hpp"
#include "ffh/limits.hpp"

namespace ffh {

namespace {

void check_fields(const Field& a, const Field& b) {
  if (!(a == b)) throw PreconditionError("F_q[t] operands over different fields");
}

}  // namespace

RingElement::RingElement(Field f, std::vector<std::uint32_t> coeffs)
    : field_(f), c_(std::move(coeffs)) {
  trim();
}

void RingElement::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RingElement RingElement::constant(Field f, std::uint32_t c) {
  return RingElement(f, std::vector<std::uint32_t>{c});
}

RingElement RingElement::monomial(Field f, int k, std::uint32_t c) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return RingElement(f, std::move(v));
}

std::uint32_t RingElement::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_fields(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_fields(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r = *this;
  r += o;
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement r = *this;
  r -= o;
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.c_) c = field_.neg(c);
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_fields(field_, o.field_);
  if (c_.empty() || o.c_.empty()) return RingElement(field_);
  std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  const Field& f = field_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
    }
  }
  return RingElement(field_, std::move(r));
}

RingElement RingElement::scale(std::uint32_t c) const {
  if (c == 0) return RingElement(field_);
  RingElement r = *this;
  for (auto& x : r.c_) x = field_.mul(x, c);
  return r;
}

RingElement RingElement::shift(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<std::uint32_t> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return RingElement(field_, std::move(v));
}

RingElement RingElement::pow(std::uint64_t k) const {
  RingElement result = constant(field_, 1);
  RingElement base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

RingElement RingElement::monic() const {
  if (c_.empty()) return *this;
  return scale(field_.inv(c_.back()));
}

RingElement RingElement::exact_div(const RingElement& d) const {
  auto [q, r] = divmod(*this, d);
  if (!r.is_zero()) {
    throw ConsistencyError("inexact division of " + to_string() + " by " + d.to_string());
  }
  return q;
}

std::uint32_t RingElement::evaluate(const FieldEmbedding& emb, std::uint32_t x) const {
  const Field& big = emb.target;
  std::uint32_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = big.add(big.mul(acc, x), emb.image[c_[i]]);
  return acc;
}

std::string RingElement::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    const std::string c = field_.format(c_[i]);
    if (i == 0) {
      out += c;
      continue;
    }
    if (c_[i] != 1) {
      out += c.find('+') == std::string::npos ? c : "(" + c + ")";
      out += "*";
    }
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::strong_ordering RingElement::operator<=>(const RingElement& o) const {
  if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  }
  return std::strong_ordering::equal;
}

std::pair<RingElement, RingElement> divmod(const RingElement& a, const RingElement& b) {
  if (b.is_zero()) throw PreconditionError("division by zero in F_q[t]");
  const Field& f = a.field();
  check_fields(f, b.field());
  if (a.degree() < b.degree()) return {RingElement(f), a};
  std::vector<std::uint32_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint32_t lead_inv = f.inv(bc.back());
  std::vector<std::uint32_t> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const std::uint32_t c = f.mul(r[i], lead_inv);
    if (c == 0) continue;
    const std::size_t s = i - db;
    q[s] = c;
    for (std::size_t j = 0; j <= db; ++j) r[s + j] = f.sub(r[s + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {RingElement(f, std::move(q)), RingElement(f, std::move(r))};
}

RingElement gcd(const RingElement& a, const RingElement& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  RingElement x = a, y = b;
  while (!y.is_zero()) {
    RingElement r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  RingElement g = x.monic();
  if (injected_fault() == Fault::Gcd) {
    g = g * (RingElement::t(g.field()) + RingElement::constant(g.field(), 1));
  }
  return g;
}

ExtendedGcd xgcd(const RingElement& a, const RingElement& b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  const Field& f = a.field();
  RingElement r0 = a, r1 = b;
  RingElement s0 = RingElement::constant(f, 1), s1(f);
  RingElement t0(f), t1 = RingElement::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const std::uint32_t li = f.inv(r0.leading());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  unsigned __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw BudgetError("integer power " + std::to_string(base) + "^" + std::to_string(exp) +
                        " exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

DegreeNorm norm_and_degree(const RingElement& a) {
  if (a.is_zero()) return {kNegInf, 0};
  return {a.degree(), checked_pow(a.field().order(), a.degree())};
}

int valuation(const RingElement& a, const RingElement& prime) {
  if (a.is_zero()) throw PreconditionError("valuation of zero");
  int v = 0;
  RingElement x = a;
  while (true) {
    auto [q, r] = divmod(x, prime);
    if (!r.is_zero()) break;
    x = std::move(q);
    ++v;
  }
  return v;
}

namespace {

RingElement powmod(RingElement base, std::uint64_t k, const RingElement& m) {
  RingElement result = RingElement::constant(m.field(), 1) % m;
  base = base % m;
  while (k) {
    if (k & 1) result = (result * base) % m;
    k >>= 1;
    if (k) base = (base * base) % m;
  }
  return result;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int moebius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

bool is_prime(const RingElement& a) {
  if (a.is_zero()) throw PreconditionError("is_prime of zero");
  if (!a.is_monic() || a.degree() < 1) return false;
  const int n = a.degree();
  if (n == 1) return true;
  const Field& f = a.field();
  const std::uint64_t q = f.order();
  const RingElement t = RingElement::t(f);
  // frob[k] = t^{q^k} mod a
  std::vector<RingElement> frob{t % a};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, a));
  if (!(frob[static_cast<std::size_t>(n)] == t % a)) return false;
  for (int r : prime_divisors(n)) {
    const RingElement h = frob[static_cast<std::size_t>(n / r)] - t;
    RingElement g = a;
    RingElement y = h % a;
    while (!y.is_zero()) {
      RingElement rr = g % y;
      g = std::move(y);
      y = std::move(rr);
    }
    if (g.degree() > 0) return false;
  }
  return true;
}

PrimeElement::PrimeElement(RingElement p) : p_(std::move(p)) {
  if (p_.is_zero() || !is_prime(p_)) {
    throw PreconditionError(p_.to_string() + " is not a monic irreducible polynomial");
  }
}

std::vector<PrimeElement> primes_of_degree(const Field& f, int n) {
  if (n < 1) throw PreconditionError("prime degree must be >= 1");
  static std::mutex cache_mutex;
  static std::map<std::pair<const void*, int>, std::vector<PrimeElement>> cache;
  const auto key = std::make_pair(static_cast<const void*>(&f.modulus()), n);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::uint64_t q = f.order();
  const std::uint64_t count = checked_pow(q, n);
  if (count > limits().enumeration_candidates) {
    throw BudgetError("prime enumeration of degree " + std::to_string(n) + " exceeds budget");
  }
  std::vector<PrimeElement> out;
  std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t x = idx;
    for (int i = 0; i < n; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    RingElement cand(f, c);
    if (is_prime(cand)) out.push_back(PrimeElement(std::move(cand), PrimeElement::Trusted{}));
  }
  std::lock_guard lock(cache_mutex);
  cache.emplace(key, out);
  return out;
}

PrimeCount prime_count(const Field& f, int n) {
  if (n < 1) throw PreconditionError("prime degree must be >= 1");
  const std::uint64_t q = f.order();
  PrimeCount pc;
  pc.exact = primes_of_degree(f, n).size();
  std::int64_t sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) sum += moebius(d) * static_cast<std::int64_t>(checked_pow(q, n / d));
  }
  pc.mobius = static_cast<std::uint64_t>(sum / n);
  pc.main_term = Rational(static_cast<std::int64_t>(checked_pow(q, n)), n);
  if (pc.exact != pc.mobius || sum % n != 0) {
    throw ConsistencyError("prime count " + std::to_string(pc.exact) +
                           " disagrees with Moebius sum " + std::to_string(pc.mobius));
  }
  return pc;
}

ElementsBelow::ElementsBelow(Field f, int k) : field_(f), k_(k) {
  if (k < 0) throw PreconditionError("elements_below bound must be >= 0");
  size_ = checked_pow(f.order(), k);
}

RingElement ElementsBelow::operator[](std::uint64_t i) const {
  const std::uint64_t q = field_.order();
  std::vector<std::uint32_t> c;
  c.reserve(static_cast<std::size_t>(k_));
  while (i) {
    c.push_back(static_cast<std::uint32_t>(i % q));
    i /= q;
  }
  return RingElement(field_, std::move(c));
}

ElementsBelow elements_below(const Field& f, int k) { return ElementsBelow(f, k); }

ResidueMap residue_map(const PrimeElement& prime) {
  const RingElement& p = prime.value();
  const Field& f = p.field();
  const int n = p.degree();
  ResidueMap rm;
  if (f.degree() == 1) {
    if (n == 1) {
      rm.residue = f;
      rm.coefficients = extend_field(f, 1);
      rm.theta = f.neg(p.coeff(0));
    } else {
      rm.residue = Field::make(f.characteristic(), n, p.coeffs());
      rm.coefficients = extend_field(f, 1);
      rm.coefficients.target = rm.residue;
      rm.theta = rm.residue.generator();
    }
    return rm;
  }
  rm.coefficients = extend_field(f, n);
  rm.residue = rm.coefficients.target;
  const Field& big = rm.residue;
  for (std::uint32_t x = 0; x < big.order(); ++x) {
    if (p.evaluate(rm.coefficients, x) == 0) {
      rm.theta = x;
      return rm;
    }
  }
  throw ConsistencyError("prime " + p.to_string() + " has no root in its residue field");
}

}  // namespace ffh
