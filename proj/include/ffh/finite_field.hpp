#pragma once

// Finite fields F_q, q = p^e, with elements packed as base-p integers of their
// power-basis coordinates: index = sum_i c_i p^i for the class of sum_i c_i u^i
// modulo the field's monic modulus. Prime-field elements are just 0..p-1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffh {

namespace detail {
struct FieldData;
}

class FieldElement;

// Handle to an interned, immutable field descriptor. Two handles compare equal
// exactly when they were built from the same (p, modulus); fields with equal
// order but different moduli are different fields and never mix.
class Field {
 public:
  Field() = default;

  // Throws PreconditionError for non-prime p, e < 1, or a modulus that is not
  // monic irreducible of degree e. Throws BudgetError past the configured cap.
  // Without a modulus the lexicographically least irreducible one is chosen.
  static Field make(std::uint32_t p, int e = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  bool valid() const { return data_ != nullptr; }
  std::uint32_t characteristic() const;
  int degree() const;
  std::uint32_t order() const;
  // Low-to-high coefficients of the monic modulus; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t from_integer(std::int64_t n) const;

  // Class of u in F_p[u]/(modulus). Only meaningful for e > 1.
  std::uint32_t generator() const;
  std::uint32_t primitive_element() const;
  std::vector<std::uint32_t> coordinates(std::uint32_t a) const;
  std::uint32_t from_coordinates(std::span<const std::uint32_t> coords) const;

  FieldElement element(std::uint32_t index) const;
  FieldElement zero() const;
  FieldElement one() const;

  std::string format(std::uint32_t a) const;
  std::string name() const;

  bool operator==(const Field& other) const { return data_ == other.data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_ = nullptr;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, std::uint32_t index);

  const Field& field() const { return field_; }
  std::uint32_t index() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;

  // Equality across different fields is an error, not false.
  bool operator==(const FieldElement& o) const;
  std::string to_string() const { return field_.format(value_); }

 private:
  void check_same(const FieldElement& o) const;
  Field field_;
  std::uint32_t value_ = 0;
};

// Injective ring map from a field into an extension of degree r.
struct FieldEmbedding {
  Field source;
  Field target;
  std::vector<std::uint32_t> image;  // indexed by source element

  std::uint32_t operator()(std::uint32_t a) const { return image[a]; }
  FieldElement operator()(const FieldElement& a) const;
};

FieldEmbedding extend_field(const Field& base, int r);

bool is_prime_integer(std::uint64_t n);

}  // namespace ffh
