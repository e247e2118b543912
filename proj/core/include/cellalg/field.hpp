#ifndef CELLALG_FIELD_HPP
#define CELLALG_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cellalg {

enum class FieldKind { Rationals, Prime };

/// Ground field descriptor: the rationals or GF(p) with p prime, p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);

  // Accepts "q" or "f<p>", e.g. "f2".
  static std::optional<FieldSpec> parse(const std::string& s);

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

/// One exact field element. Which member is live depends on the ambient
/// FieldSpec; all access goes through Field, never directly.
struct Scalar {
  mpq_class q;        // rationals
  std::uint64_t r = 0;  // GF(p) canonical representative in [0, p)
};

/// Arithmetic context. Rationals are GMP mpq with normalized fractions;
/// prime fields are plain modular arithmetic (p < 2^31, products fit in
/// 64 bits without reduction tricks).
class Field {
 public:
  explicit Field(FieldSpec spec) : spec_(spec) {}

  const FieldSpec& spec() const { return spec_; }
  bool operator==(const Field& o) const { return spec_ == o.spec_; }

  Scalar zero() const { return {}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  std::string str(const Scalar& a) const;

 private:
  FieldSpec spec_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace cellalg

#endif
