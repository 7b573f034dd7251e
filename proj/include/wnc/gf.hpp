#pragma once
// Exact arithmetic in finite fields GF(p^m), desk scale (order <= 2^20).
//
// Prime fields store elements as integer residues. Extension fields store
// elements as coefficient vectors packed into a single canonical value
// (base-p, low degree first), reduced modulo the lexicographically smallest
// irreducible monic polynomial so that serialized codes are reproducible.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wnc {

class Fe;

class Field {
 public:
  // GF(p^m) with the deterministically chosen modulus.
  explicit Field(uint32_t p, uint32_t m = 1);
  // GF(p^m) with a caller-supplied modulus (m+1 coefficients, low degree
  // first, monic). The modulus is verified irreducible.
  Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

  uint32_t characteristic() const;
  uint32_t degree() const;
  uint32_t order() const;
  // Empty for prime fields, otherwise m+1 coefficients, low degree first.
  const std::vector<uint32_t>& modulus() const;
  Fe primitive() const;

  Fe element(uint32_t canonical) const;
  Fe zero() const;
  Fe one() const;
  Fe from_coeffs(const std::vector<uint32_t>& coeffs) const;

  // [a^0, a^1, ..., a^{q-2}] for the primitive element a.
  std::vector<Fe> primitive_powers() const;

  bool same_as(const Field& other) const;
  bool operator==(const Field& other) const { return same_as(other); }
  bool operator!=(const Field& other) const { return !same_as(other); }

  // "GF(p)" for prime fields, "GF(p^m;modulus=c0,c1,...,cm)" otherwise.
  std::string token() const;
  // Accepts the serialized forms plus the "GF(p^m)" shorthand.
  static Field from_token(std::string_view token);

  // Arithmetic on canonical values; the linear algebra runs on these.
  uint32_t add_v(uint32_t a, uint32_t b) const;
  uint32_t sub_v(uint32_t a, uint32_t b) const;
  uint32_t neg_v(uint32_t a) const;
  uint32_t mul_v(uint32_t a, uint32_t b) const;
  uint32_t inv_v(uint32_t a) const;
  uint32_t div_v(uint32_t a, uint32_t b) const;
  uint32_t pow_v(uint32_t a, uint64_t e) const;

  // Element tokens: plain integers for prime fields, "(c0,c1,...)" tuples
  // for extension fields.
  std::string value_token(uint32_t v) const;
  uint32_t value_from_token(std::string_view t) const;

 private:
  struct Rep;
  explicit Field(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

class Fe {
 public:
  Fe(Field field, uint32_t canonical);

  const Field& field() const { return field_; }
  uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<uint32_t> coeffs() const;

  Fe operator+(const Fe& o) const;
  Fe operator-(const Fe& o) const;
  Fe operator*(const Fe& o) const;
  Fe operator/(const Fe& o) const;
  Fe operator-() const;
  Fe inverse() const;
  Fe pow(uint64_t e) const;

  bool operator==(const Fe& o) const;
  bool operator!=(const Fe& o) const { return !(*this == o); }

  std::string token() const;

 private:
  Field field_;
  uint32_t v_;
};

}  // namespace wnc
