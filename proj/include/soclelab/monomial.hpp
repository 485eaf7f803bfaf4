#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace soclelab {

// Exponent vector; the ambient variable count is its length.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial var(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    m.e_[i] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  int& operator[](int i) { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    for (int x : e_)
      if (x != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] += m.e_[i];
    return r;
  }

  // Exact quotient; caller guarantees m | *this.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] -= m.e_[i];
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i)
      if (m.e_[i] > r.e_[i]) r.e_[i] = m.e_[i];
    return r;
  }

  bool coprime(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

 private:
  std::vector<int> e_;
};

}  // namespace soclelab
