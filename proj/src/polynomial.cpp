#include "soclelab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace soclelab {

namespace {
const MonomialOrder kCanonical = MonomialOrder::grevlex();
}

Polynomial::Polynomial(Field field, int nvars, std::vector<Term> terms)
    : field_(std::move(field)), nvars_(nvars), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  for (const Term& t : terms_)
    if (t.mono.nvars() != nvars_)
      throw std::invalid_argument("term with wrong variable count");
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return kCanonical.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
      if (field_.is_zero(out.back().coeff)) out.pop_back();
    } else if (!field_.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(const Field& f, int nvars, const Coeff& c) {
  return Polynomial(f, nvars, {Term{Monomial::one(nvars), c}});
}

Polynomial Polynomial::monomial(const Field& f, Monomial m, const Coeff& c) {
  int n = m.nvars();
  return Polynomial(f, n, {Term{std::move(m), c}});
}

Polynomial Polynomial::variable(const Field& f, int nvars, int i) {
  return Polynomial(f, nvars, {Term{Monomial::var(nvars, i), f.one()}});
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.front().mono;
}

const Coeff& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.front().coeff;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  if (field_ != g.field_ || nvars_ != g.nvars_)
    throw std::invalid_argument("polynomial arithmetic across rings");
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = kCanonical.compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      Coeff s = field_.add(terms_[i].coeff, g.terms_[j].coeff);
      if (!field_.is_zero(s)) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
  Polynomial r(field_, nvars_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const { return scale(field_.from_int(-1)); }

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return *this + (-g);
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
  if (field_.is_zero(c)) return Polynomial(field_, nvars_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_)
    out.push_back(Term{t.mono * m, field_.mul(t.coeff, c)});
  Polynomial r(field_, nvars_);
  r.terms_ = std::move(out);  // term-by-monomial keeps the sort
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  if (field_ != g.field_ || nvars_ != g.nvars_)
    throw std::invalid_argument("polynomial arithmetic across rings");
  Polynomial acc(field_, nvars_);
  for (const Term& t : g.terms_) acc = acc + mul_term(t.mono, t.coeff);
  return acc;
}

Polynomial Polynomial::scale(const Coeff& c) const {
  return mul_term(Monomial::one(nvars_), c);
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(field_, nvars_, field_.one());
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(field_.inv(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (nvars_ != g.nvars_ || terms_.size() != g.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != g.terms_[i].mono ||
        terms_[i].coeff != g.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c = field_.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mag = negative ? c.substr(1) : c;
    bool printed_coeff = false;
    if (mag != "1" || t.mono.is_one()) {
      os << mag;
      printed_coeff = true;
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (printed_coeff || !first_var) os << "*";
      os << names[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      first_var = false;
    }
  }
  return os.str();
}

}  // namespace soclelab
