#include "soclelab/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace soclelab {

RingPresentation::RingPresentation(Field field, std::vector<std::string> vars,
                                   std::vector<Polynomial> relations)
    : field_(std::move(field)),
      vars_(std::move(vars)),
      relations_(std::move(relations)) {
  if (vars_.empty()) throw std::invalid_argument("ring needs variables");
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw std::invalid_argument("duplicate variable " + vars_[i]);
  for (const Polynomial& r : relations_)
    if (r.nvars() != nvars() || r.field() != field_)
      throw std::invalid_argument("relation outside the ambient ring");
}

int RingPresentation::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<Polynomial> RingPresentation::maximal_ideal_gens() const {
  std::vector<Polynomial> gens;
  gens.reserve(vars_.size());
  for (int i = 0; i < nvars(); ++i) gens.push_back(var(i));
  return gens;
}

std::string RingPresentation::describe() const {
  std::ostringstream os;
  os << (field_.is_prime_field()
             ? "GF(" + std::to_string(field_.characteristic()) + ")"
             : "QQ");
  os << "[";
  for (size_t i = 0; i < vars_.size(); ++i)
    os << (i ? "," : "") << vars_[i];
  os << "]";
  if (!relations_.empty()) {
    os << "/(";
    for (size_t i = 0; i < relations_.size(); ++i)
      os << (i ? ", " : "") << relations_[i].to_string(vars_);
    os << ")";
  }
  return os.str();
}

}  // namespace soclelab
