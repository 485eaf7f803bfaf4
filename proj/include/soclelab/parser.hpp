#pragma once

#include <string>

#include "soclelab/ring.hpp"

namespace soclelab {

class parse_error : public error {
 public:
  parse_error(const std::string& msg, size_t pos)
      : error(msg + " (at column " + std::to_string(pos + 1) + ")"),
        position(pos) {}
  size_t position;
};

// Parses the polynomial grammar: identifiers are variables, integer literals
// are coefficients, operators + - * ^ and parentheses; '*' may be omitted
// between a coefficient and a variable or parenthesis.
Polynomial parse_polynomial(const std::string& text,
                            const RingPresentation& ring);

}  // namespace soclelab
