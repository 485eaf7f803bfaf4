#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace soclelab {

// Base class for all computational failures that are meaningful outcomes
// (cap exhaustion, non-stabilization) rather than programming errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact coefficient: either a rational (arbitrary precision) or a canonical
// representative 0 <= v < p of a prime field element.  Elements do not know
// their field; all arithmetic goes through Field, which asserts consistency.
class Coeff {
 public:
  Coeff() : v_(static_cast<int64_t>(0)) {}
  explicit Coeff(int64_t rep) : v_(rep) {}
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  int64_t rep() const { return std::get<int64_t>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

  bool operator==(const Coeff& o) const { return v_ == o.v_; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

 private:
  std::variant<int64_t, mpq_class> v_;
};

// An exact coefficient field: the rationals or Z/p for an odd prime p.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(int64_t p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  int64_t characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(int64_t n) const;
  // Parses an integer literal (optionally signed).
  Coeff from_string(const std::string& s) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;

  std::string to_string(const Coeff& a) const;

 private:
  Field(Kind k, int64_t p) : kind_(k), p_(p) {}

  Kind kind_;
  int64_t p_;
};

}  // namespace soclelab
