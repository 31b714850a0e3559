#include "ffh/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "ffh/error.hpp"
#include "ffh/limits.hpp"

namespace ffh {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  int e = 1;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // exp_table[i] = g^i for i in [0, q-1); log_table[a] for a != 0.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  std::uint32_t primitive = 0;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Dense polynomial helpers over F_p, low-to-high coefficients.
void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  std::uint64_t k = p - 2;
  while (k) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

Coeffs unpack(std::uint32_t index, std::uint32_t p, int e) {
  Coeffs c(static_cast<std::size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    c[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return c;
}

std::uint32_t pack(const Coeffs& c, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible_over_prime_field(const Coeffs& m, std::uint32_t p) {
  const int d = static_cast<int>(m.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  for (int k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs cand = unpack(static_cast<std::uint32_t>(idx), p, k);
      cand.push_back(1);
      if (poly_mod(m, cand, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::unique_ptr<detail::FieldData> build_field(std::uint32_t p, int e, Coeffs modulus) {
  auto d = std::make_unique<detail::FieldData>();
  d->p = p;
  d->e = e;
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = std::move(modulus);

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    Coeffs prod = poly_mul(unpack(a, p, e), unpack(b, p, e), p);
    Coeffs r = poly_mod(prod, d->modulus, p);
    r.resize(static_cast<std::size_t>(e), 0);
    return pack(r, p);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t result = 1, base = a;
    while (k) {
      if (k & 1) result = slow_mul(result, base);
      base = slow_mul(base, base);
      k >>= 1;
    }
    return result;
  };

  if (q == 2) {
    d->primitive = 1;
  } else {
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t g = 2; g < q; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (slow_pow(g, (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        d->primitive = g;
        break;
      }
    }
  }
  d->exp_table.resize(q - 1);
  d->log_table.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    d->exp_table[i] = x;
    d->log_table[x] = i;
    x = slow_mul(x, d->primitive);
  }
  return d;
}

std::mutex g_registry_mutex;
std::map<std::pair<std::uint32_t, Coeffs>, std::unique_ptr<detail::FieldData>>& registry() {
  static std::map<std::pair<std::uint32_t, Coeffs>, std::unique_ptr<detail::FieldData>> r;
  return r;
}

}  // namespace

bool is_prime_integer(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::make(std::uint32_t p, int e, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime_integer(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw PreconditionError("extension degree must be >= 1");
  long double q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > static_cast<long double>(limits().max_field_order)) {
    throw BudgetError("field of order " + std::to_string(p) + "^" + std::to_string(e) +
                      " exceeds the configured cap");
  }

  Coeffs m;
  if (modulus) {
    m = *modulus;
    for (auto& c : m) {
      if (c >= p) throw PreconditionError("modulus coefficient not reduced mod p");
    }
    trim(m);
    if (static_cast<int>(m.size()) != e + 1 || m.back() != 1) {
      throw PreconditionError("modulus must be monic of degree " + std::to_string(e));
    }
    if (e == 1) {
      m.clear();  // any monic linear modulus gives F_p itself
    } else if (!is_irreducible_over_prime_field(m, p)) {
      throw PreconditionError("modulus is reducible over F_" + std::to_string(p));
    }
  } else if (e > 1) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs cand = unpack(static_cast<std::uint32_t>(idx), p, e);
      cand.push_back(1);
      if (is_irreducible_over_prime_field(cand, p)) {
        m = std::move(cand);
        break;
      }
    }
  }

  std::lock_guard lock(g_registry_mutex);
  auto key = std::make_pair(p, m);
  auto& slot = registry()[key];
  if (!slot) slot = build_field(p, e, m);
  return Field(slot.get());
}

std::uint32_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->e; }
std::uint32_t Field::order() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = data_->p;
  if (data_->e == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  if (p == 2) return a ^ b;
  std::uint32_t r = 0, pw = 1;
  while (a || b) {
    std::uint32_t da = a % p, db = b % p;
    std::uint32_t s = da + db;
    if (s >= p) s -= p;
    r += s * pw;
    a /= p;
    b /= p;
    pw *= p;
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  const std::uint32_t p = data_->p;
  if (data_->e == 1) return a == 0 ? 0 : p - a;
  if (p == 2) return a;
  std::uint32_t r = 0, pw = 1;
  while (a) {
    std::uint32_t da = a % p;
    r += (da == 0 ? 0 : p - da) * pw;
    a /= p;
    pw *= p;
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (data_->e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % data_->p);
  std::uint32_t s = data_->log_table[a] + data_->log_table[b];
  const std::uint32_t n = data_->q - 1;
  if (s >= n) s -= n;
  return data_->exp_table[s];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("inversion of zero in " + name());
  const std::uint32_t n = data_->q - 1;
  const std::uint32_t l = data_->log_table[a];
  return data_->exp_table[l == 0 ? 0 : n - l];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = data_->q - 1;
  return data_->exp_table[(std::uint64_t{data_->log_table[a]} * (k % n)) % n];
}

std::uint32_t Field::from_integer(std::int64_t n) const {
  const std::int64_t p = data_->p;
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::generator() const {
  if (data_->e == 1) throw PreconditionError("prime field " + name() + " has no generator u");
  return data_->p;
}

std::uint32_t Field::primitive_element() const { return data_->primitive; }

std::vector<std::uint32_t> Field::coordinates(std::uint32_t a) const {
  return unpack(a, data_->p, data_->e);
}

std::uint32_t Field::from_coordinates(std::span<const std::uint32_t> coords) const {
  Coeffs c(coords.begin(), coords.end());
  for (auto& x : c) x %= data_->p;
  if (static_cast<int>(c.size()) > data_->e) {
    c = poly_mod(c, data_->modulus, data_->p);
  }
  return pack(c, data_->p);
}

FieldElement Field::element(std::uint32_t index) const { return FieldElement(*this, index); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::string Field::format(std::uint32_t a) const {
  if (data_->e == 1) return std::to_string(a);
  if (a == 0) return "0";
  const Coeffs c = coordinates(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "u";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string Field::name() const {
  if (!data_) return "F_?";
  return "F_" + std::to_string(data_->q);
}

FieldElement::FieldElement(Field f, std::uint32_t index) : field_(f), value_(index) {
  if (index >= f.order()) throw PreconditionError("element index out of range for " + f.name());
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw PreconditionError("field descriptor mismatch: " + field_.name() + " vs " +
                            o.field_.name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(field_, field_.add(value_, o.value_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return FieldElement(field_, field_.sub(value_, o.value_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(field_, field_.mul(value_, o.value_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return FieldElement(field_, field_.div(value_, o.value_));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(value_)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(value_)); }
FieldElement FieldElement::pow(std::uint64_t k) const {
  return FieldElement(field_, field_.pow(value_, k));
}
bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return value_ == o.value_;
}

FieldElement FieldEmbedding::operator()(const FieldElement& a) const {
  if (!(a.field() == source)) throw PreconditionError("embedding applied to foreign element");
  return FieldElement(target, image[a.index()]);
}

FieldEmbedding extend_field(const Field& base, int r) {
  if (r < 1) throw PreconditionError("extension degree must be >= 1");
  FieldEmbedding emb;
  emb.source = base;
  const std::uint32_t q = base.order();
  if (r == 1) {
    emb.target = base;
    emb.image.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) emb.image[a] = a;
    return emb;
  }
  const std::uint32_t p = base.characteristic();
  const int e = base.degree();
  emb.target = Field::make(p, e * r);
  const Field& big = emb.target;
  emb.image.resize(q);
  if (e == 1) {
    for (std::uint32_t a = 0; a < q; ++a) emb.image[a] = a;
  } else {
    // Send u to the least root of the base modulus in the extension.
    const auto& m = base.modulus();
    std::optional<std::uint32_t> root;
    for (std::uint32_t x = 0; x < big.order() && !root; ++x) {
      std::uint32_t acc = 0;
      for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, x), m[i]);
      if (acc == 0) root = x;
    }
    if (!root) throw ConsistencyError("no root of the base modulus in the extension");
    std::vector<std::uint32_t> powers(static_cast<std::size_t>(e));
    powers[0] = 1;
    for (int i = 1; i < e; ++i) powers[i] = big.mul(powers[i - 1], *root);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto c = base.coordinates(a);
      std::uint32_t img = 0;
      for (int i = 0; i < e; ++i) img = big.add(img, big.mul(c[i], powers[i]));
      emb.image[a] = img;
    }
  }
  // Generator checks: 1 -> 1, additivity on 1, multiplicativity on the
  // generator, injectivity.
  if (emb.image[1] != 1) throw ConsistencyError("embedding does not fix 1");
  const std::uint32_t g = base.primitive_element();
  if (big.mul(emb.image[g], emb.image[g]) != emb.image[base.mul(g, g)]) {
    throw ConsistencyError("embedding is not multiplicative on the generator");
  }
  std::vector<std::uint32_t> sorted = emb.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConsistencyError("embedding is not injective");
  }
  return emb;
}

}  // namespace ffh
