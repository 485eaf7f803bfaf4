#include "soclelab/field.hpp"

#include <cassert>

namespace soclelab {

namespace {

bool is_prime_int(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Extended Euclid; returns x with a*x = 1 (mod p).
int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, new_t = 1;
  int64_t r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw error("not invertible modulo p");
  return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(int64_t p) {
  if (p <= 2 || p >= (int64_t{1} << 31) || !is_prime_int(p))
    throw error("field characteristic must be an odd prime < 2^31, got " +
                std::to_string(p));
  return Field(Kind::Prime, p);
}

Coeff Field::zero() const {
  return kind_ == Kind::Prime ? Coeff(int64_t{0}) : Coeff(mpq_class(0));
}

Coeff Field::one() const {
  return kind_ == Kind::Prime ? Coeff(int64_t{1}) : Coeff(mpq_class(1));
}

Coeff Field::from_int(int64_t n) const {
  if (kind_ == Kind::Rationals) return Coeff(mpq_class(static_cast<long>(n)));
  int64_t r = n % p_;
  if (r < 0) r += p_;
  return Coeff(r);
}

Coeff Field::from_string(const std::string& s) const {
  mpz_class z;
  if (z.set_str(s, 10) != 0) throw error("bad integer literal: " + s);
  if (kind_ == Kind::Rationals) return Coeff(mpq_class(z));
  mpz_class r = z % p_;
  int64_t v = r.get_si();
  if (v < 0) v += p_;
  return Coeff(v);
}

bool Field::is_zero(const Coeff& a) const {
  return kind_ == Kind::Prime ? a.rep() == 0 : a.rat() == 0;
}

bool Field::is_one(const Coeff& a) const {
  return kind_ == Kind::Prime ? a.rep() == 1 : a.rat() == 1;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Prime) {
    int64_t r = a.rep() + b.rep();
    if (r >= p_) r -= p_;
    return Coeff(r);
  }
  return Coeff(mpq_class(a.rat() + b.rat()));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Prime) {
    int64_t r = a.rep() - b.rep();
    if (r < 0) r += p_;
    return Coeff(r);
  }
  return Coeff(mpq_class(a.rat() - b.rat()));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::Prime) return Coeff((a.rep() * b.rep()) % p_);
  return Coeff(mpq_class(a.rat() * b.rat()));
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == Kind::Prime) return Coeff(a.rep() == 0 ? 0 : p_ - a.rep());
  return Coeff(mpq_class(-a.rat()));
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw error("division by zero");
  if (kind_ == Kind::Prime) return Coeff(mod_inverse(a.rep(), p_));
  return Coeff(mpq_class(1 / a.rat()));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
  return mul(a, inv(b));
}

std::string Field::to_string(const Coeff& a) const {
  if (kind_ == Kind::Prime) return std::to_string(a.rep());
  return a.rat().get_str();
}

}  // namespace soclelab
