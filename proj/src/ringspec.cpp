#include "soclelab/ringspec.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

namespace soclelab {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw error("ring spec line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

const std::vector<Polynomial>* RingSpec::find_ideal(
    const std::string& name) const {
  for (const auto& [n, gens] : named_ideals)
    if (n == name) return &gens;
  return nullptr;
}

RingSpec parse_ring_spec_text(const std::string& text) {
  std::optional<Field> field;
  std::vector<std::string> vars;
  std::vector<std::string> relation_texts;
  int relations_line = 0;
  std::vector<std::tuple<std::string, std::string, int>> ideal_texts;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    std::string rest = trim(line.substr(head.size()));
    if (head == "field") {
      std::vector<std::string> toks = split_ws(rest);
      if (toks.size() == 1 && toks[0] == "rational") {
        field = Field::rationals();
      } else if (toks.size() == 2 && toks[0] == "prime") {
        try {
          field = Field::prime(std::stoll(toks[1]));
        } catch (const std::exception& e) {
          fail(lineno, std::string("bad characteristic: ") + e.what());
        }
      } else {
        fail(lineno, "expected 'field rational' or 'field prime P'");
      }
    } else if (head == "vars") {
      vars = split_ws(rest);
      if (vars.empty()) fail(lineno, "no variables declared");
      for (const std::string& v : vars) {
        if (std::isdigit(static_cast<unsigned char>(v[0])))
          fail(lineno, "variable may not start with a digit: " + v);
        for (char c : v)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            fail(lineno, "bad character in variable name: " + v);
      }
    } else if (head == "relations") {
      relation_texts = split_commas(rest);
      relations_line = lineno;
    } else if (head == "ideal") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) fail(lineno, "expected 'ideal NAME = ...'");
      std::string name = trim(rest.substr(0, eq));
      if (name.empty()) fail(lineno, "ideal needs a name");
      ideal_texts.emplace_back(name, trim(rest.substr(eq + 1)), lineno);
    } else {
      fail(lineno, "unknown directive '" + head + "'");
    }
  }

  if (!field) throw error("ring spec: missing 'field' line");
  if (vars.empty()) throw error("ring spec: missing 'vars' line");

  // Parse relations against a bare presentation, then rebuild with them.
  RingPtr bare = make_ring(*field, vars);
  std::vector<Polynomial> relations;
  for (const std::string& t : relation_texts) {
    if (t.empty()) continue;
    try {
      relations.push_back(parse_polynomial(t, *bare));
    } catch (const parse_error& e) {
      fail(relations_line, std::string("in relation '") + t + "': " + e.what());
    }
  }
  RingPtr ring = make_ring(*field, vars, std::move(relations));

  RingSpec spec{ring, {}, fnv1a_hex(text)};
  for (const auto& [name, body, line] : ideal_texts) {
    std::vector<Polynomial> gens;
    for (const std::string& t : split_commas(body)) {
      if (t.empty()) continue;
      try {
        gens.push_back(parse_polynomial(t, *ring));
      } catch (const parse_error& e) {
        fail(line, std::string("in ideal ") + name + ", generator '" + t +
                       "': " + e.what());
      }
    }
    spec.named_ideals.emplace_back(name, std::move(gens));
  }
  return spec;
}

RingSpec parse_ring_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open ring spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_spec_text(buf.str());
}

std::string render_ring_spec(const RingPresentation& ring) {
  std::ostringstream os;
  if (ring.field().is_prime_field())
    os << "field prime " << ring.field().characteristic() << "\n";
  else
    os << "field rational\n";
  os << "vars";
  for (const std::string& v : ring.var_names()) os << " " << v;
  os << "\n";
  if (!ring.relations().empty()) {
    os << "relations ";
    for (size_t i = 0; i < ring.relations().size(); ++i)
      os << (i ? ", " : "")
         << ring.relations()[i].to_string(ring.var_names());
    os << "\n";
  }
  return os.str();
}

}  // namespace soclelab
