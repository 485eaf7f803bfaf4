#include "soclelab/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace soclelab {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
  for (const Monomial& g : gens)
    if (g.nvars() != nvars)
      throw std::invalid_argument("generator with wrong variable count");
  // minimal generators: drop anything divisible by another generator
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              return kGrevlex.less(a, b);
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : gens_)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_artinian() const {
  for (int v = 0; v < nvars_; ++v) {
    bool pure = false;
    for (const Monomial& g : gens_)
      if (g[v] > 0 && g.degree() == g[v]) {
        pure = true;
        break;
      }
    if (!pure) return false;
  }
  return true;
}

bool MonomialIdeal::is_irreducible() const {
  if (static_cast<int>(gens_.size()) != nvars_) return false;
  std::vector<bool> seen(nvars_, false);
  for (const Monomial& g : gens_) {
    int support = -1;
    for (int v = 0; v < nvars_; ++v)
      if (g[v] > 0) {
        if (support >= 0) return false;
        support = v;
      }
    if (support < 0 || seen[support]) return false;
    seen[support] = true;
  }
  return true;
}

Ideal MonomialIdeal::to_ideal(const RingPtr& ring) const {
  std::vector<Polynomial> gens;
  for (const Monomial& g : gens_)
    gens.push_back(
        Polynomial::monomial(ring->field(), g, ring->field().one()));
  return Ideal(ring, std::move(gens));
}

std::string MonomialIdeal::describe(
    const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    bool first = true;
    if (gens_[i].is_one()) os << "1";
    for (int v = 0; v < nvars_; ++v) {
      if (gens_[i][v] == 0) continue;
      if (!first) os << "*";
      os << names[v];
      if (gens_[i][v] > 1) os << "^" << gens_[i][v];
      first = false;
    }
  }
  os << ")";
  return os.str();
}

MonomialIdeal monomial_intersect(const MonomialIdeal& a,
                                 const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const Monomial& u : a.gens())
    for (const Monomial& v : b.gens()) gens.push_back(u.lcm(v));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

std::vector<Monomial> monomial_staircase(const MonomialIdeal& i) {
  if (!i.is_artinian()) throw error("staircase of a non-artinian ideal");
  const int n = i.nvars();
  std::vector<int> bound(n, 0);
  for (const Monomial& g : i.gens())
    for (int v = 0; v < n; ++v)
      if (g[v] > 0 && g.degree() == g[v]) bound[v] = g[v];
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  std::function<void(int)> walk = [&](int pos) {
    if (pos == n) {
      Monomial m(e);
      if (!i.contains(m)) out.push_back(std::move(m));
      return;
    }
    for (int v = 0; v < bound[pos]; ++v) {
      e[pos] = v;
      walk(pos + 1);
    }
    e[pos] = 0;
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return kGrevlex.less(a, b);
  });
  return out;
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i) {
  if (!i.is_artinian())
    throw error("irreducible decomposition requires an artinian ideal");
  const int n = i.nvars();
  std::vector<MonomialIdeal> components;
  // A standard monomial s is a socle monomial iff x_v * s lies in the ideal
  // for every variable; its component is (x_v^(s_v + 1) : all v).
  for (const Monomial& s : monomial_staircase(i)) {
    bool socle = true;
    for (int v = 0; v < n && socle; ++v)
      if (!i.contains(s * Monomial::var(n, v))) socle = false;
    if (!socle) continue;
    std::vector<Monomial> gens;
    for (int v = 0; v < n; ++v) gens.push_back(Monomial::var(n, v, s[v] + 1));
    components.push_back(MonomialIdeal(n, std::move(gens)));
  }
  return components;
}

bool verify_irredundant(const std::vector<MonomialIdeal>& components,
                        const MonomialIdeal& i) {
  if (components.empty()) return false;
  for (const MonomialIdeal& c : components)
    if (!c.is_irreducible() || !c.is_artinian()) return false;
  auto intersect_all = [&](size_t skip) -> std::optional<MonomialIdeal> {
    std::optional<MonomialIdeal> acc;
    for (size_t k = 0; k < components.size(); ++k) {
      if (k == skip) continue;
      acc = acc ? monomial_intersect(*acc, components[k]) : components[k];
    }
    return acc;
  };
  if (!(*intersect_all(components.size()) == i)) return false;
  for (size_t k = 0; k < components.size(); ++k) {
    std::optional<MonomialIdeal> rest = intersect_all(k);
    // dropping the only component leaves the unit ideal, always larger
    if (rest && *rest == i) return false;
  }
  return true;
}

}  // namespace soclelab
