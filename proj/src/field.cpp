#include "invsemi/field.hpp"

#include "invsemi/errors.hpp"

namespace invsemi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::from_characteristic(std::uint32_t c) {
  return c == 0 ? rationals() : prime(c);
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t residue_of(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce(value, field_.characteristic());
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint32_t p = field_.characteristic();
  std::uint64_t den = residue_of(value.get_den(), p);
  if (den == 0) {
    throw InvalidArgument("denominator vanishes in " + field_.name());
  }
  r_ = residue_of(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("cannot combine scalars over " + field_.name() + " and " +
                        o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.characteristic() - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = (r_ + o.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % field_.characteristic();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in " + field_.name());
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    const std::uint32_t p = field_.characteristic();
    out.r_ = pow_mod(r_, p - 2, p);
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Scalar Scalar::parse(FieldSpec f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw ParseError("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return Scalar(f, q);
}

}  // namespace invsemi
