#pragma once

#include <string>
#include <utility>
#include <vector>

#include "soclelab/parser.hpp"

namespace soclelab {

// A parsed ring-spec file: field, variables, defining relations, and any
// named ideals, e.g.
//
//   field prime 32003
//   vars x y w
//   relations x^2*w, w^2
//   ideal Q = x^3, y^3
struct RingSpec {
  RingPtr ring;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> named_ideals;
  std::string digest;  // FNV-1a of the source text, hex

  const std::vector<Polynomial>* find_ideal(const std::string& name) const;
};

RingSpec parse_ring_spec_text(const std::string& text);
RingSpec parse_ring_spec_file(const std::string& path);

// Renders a presentation in the ring-spec format (used by `idealize`).
std::string render_ring_spec(const RingPresentation& ring);

std::string fnv1a_hex(const std::string& text);

}  // namespace soclelab
