#include "cellalg/field.hpp"

namespace cellalg {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("FieldSpec::prime: p must be prime and < 2^31");
  return {FieldKind::Prime, p};
}

std::optional<FieldSpec> FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'F')) {
    try {
      unsigned long p = std::stoul(s.substr(1));
      if (p < (1u << 31) && is_prime_u32(static_cast<std::uint32_t>(p)))
        return prime(static_cast<std::uint32_t>(p));
    } catch (...) {
    }
  }
  return std::nullopt;
}

std::string FieldSpec::name() const {
  return kind == FieldKind::Rationals ? "q" : "f" + std::to_string(p);
}

Scalar Field::from_int(long v) const {
  Scalar s;
  if (spec_.kind == FieldKind::Rationals) {
    s.q = v;
  } else {
    long long m = v % static_cast<long long>(spec_.p);
    if (m < 0) m += spec_.p;
    s.r = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (spec_.kind == FieldKind::Rationals) {
    s.q = a.q + b.q;
  } else {
    s.r = a.r + b.r;
    if (s.r >= spec_.p) s.r -= spec_.p;
  }
  return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (spec_.kind == FieldKind::Rationals) {
    s.q = a.q - b.q;
  } else {
    s.r = a.r + spec_.p - b.r;
    if (s.r >= spec_.p) s.r -= spec_.p;
  }
  return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (spec_.kind == FieldKind::Rationals)
    s.q = a.q * b.q;
  else
    s.r = (a.r * b.r) % spec_.p;
  return s;
}

Scalar Field::neg(const Scalar& a) const {
  Scalar s;
  if (spec_.kind == FieldKind::Rationals)
    s.q = -a.q;
  else
    s.r = a.r == 0 ? 0 : spec_.p - a.r;
  return s;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("Field::inv: division by zero");
  Scalar s;
  if (spec_.kind == FieldKind::Rationals) {
    s.q = 1 / a.q;
  } else {
    // extended Euclid
    long long t = 0, nt = 1;
    long long r = spec_.p, nr = static_cast<long long>(a.r);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += spec_.p;
    s.r = static_cast<std::uint64_t>(t);
  }
  return s;
}

bool Field::is_zero(const Scalar& a) const {
  return spec_.kind == FieldKind::Rationals ? a.q == 0 : a.r == 0;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  return spec_.kind == FieldKind::Rationals ? a.q == b.q : a.r == b.r;
}

std::string Field::str(const Scalar& a) const {
  return spec_.kind == FieldKind::Rationals ? a.q.get_str()
                                            : std::to_string(a.r);
}

}  // namespace cellalg
