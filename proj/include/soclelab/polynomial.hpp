#pragma once

#include <string>
#include <utility>
#include <vector>

#include "soclelab/field.hpp"
#include "soclelab/monomial.hpp"
#include "soclelab/order.hpp"

namespace soclelab {

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse multivariate polynomial over an exact field.  Terms are kept
// normalized: no zero coefficients, no duplicate monomials, sorted descending
// under grevlex.  Immutable in practice; all operations return new values.
class Polynomial {
 public:
  Polynomial(Field field, int nvars)
      : field_(std::move(field)), nvars_(nvars) {}
  Polynomial(Field field, int nvars, std::vector<Term> terms);

  static Polynomial zero(const Field& f, int nvars) {
    return Polynomial(f, nvars);
  }
  static Polynomial constant(const Field& f, int nvars, const Coeff& c);
  static Polynomial monomial(const Field& f, Monomial m,
                             const Coeff& c);
  static Polynomial variable(const Field& f, int nvars, int i);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Leading data under the canonical (grevlex) term order.
  const Monomial& leading_monomial() const;
  const Coeff& leading_coeff() const;

  int total_degree() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;

  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Monomial& m, const Coeff& c) const;
  Polynomial pow(int n) const;

  // Monic normalization (divides by the leading coefficient).
  Polynomial monic() const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  // Renders with the given variable names, terms in canonical order.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();

  Field field_;
  int nvars_;
  std::vector<Term> terms_;
};

}  // namespace soclelab
