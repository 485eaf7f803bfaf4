#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "soclelab/idealize.hpp"
#include "soclelab/locoh.hpp"
#include "soclelab/monomial_ideal.hpp"
#include "soclelab/ringspec.hpp"

namespace soclelab {

using Record = nlohmann::ordered_json;

// A reproducible experiment run: same seed, byte-identical output.  Every
// record carries the exact ideal generators used, so any row can be
// re-checked independently through the library API.
struct ExperimentReport {
  std::string experiment;
  std::string spec_digest;
  uint64_t seed = 0;
  std::vector<Record> records;
  std::vector<std::string> notes;
  std::string verdict;  // PASS | FAIL | NOT-APPLICABLE

  std::string table() const;
  std::string jsonl() const;
  int exit_code() const { return verdict == "FAIL" ? 1 : 0; }
};

// Random nonzero combination of the degree-d monomials.
Polynomial random_form(const RingPtr& ring, int degree, Rng& rng);

// Samples a parameter system of dim(A) forms of the given degree; nullopt
// when every try failed the cofinite/origin-primary validation.
std::optional<std::vector<Polynomial>> sample_parameter_system(
    const RingPtr& ring, int degree, Rng& rng, int tries = 64);

// The deterministic candidate families inside m^degree: pure variable powers
// (x_1^l, ..., x_d^l) and the binomial family ((x_1+x_2)^l, x_1 x_2^(l-1),
// x_3^l, ...).  Only families that validate as parameter systems are kept.
std::vector<std::vector<Polynomial>> deterministic_parameter_families(
    const RingPtr& ring, int degree);

// Reproduces the dimension-d idealization example: for each n the parameter
// ideals Q = (x^n, y^n, ...) and Q' = ((x+y)^n, x y^(n-1), ...) of
// A = R x R/x^2 get indices 2 and 3, by the direct socle route, by the
// index-shift lemma, and (for Q') by monomial decomposition.
ExperimentReport cmd_reproduce_example(int d, int nmin, int nmax,
                                       const Field& field);

// Dimension-1 theorem: emits the certificate and samples parameter ideals
// inside m^ell, checking each index against the predicted value.
ExperimentReport cmd_verify_dim1(const RingSpec& spec, int samples,
                                 uint64_t seed);

// Dimension-2 theorem: searches l upward for empirical index stabilization
// and checks index = 2 socdim H^1 + socdim H^2 plus the directness
// identities; NOT-APPLICABLE when the H^1 realization is not finite length.
ExperimentReport cmd_verify_dim2(const RingSpec& spec, int samples,
                                 uint64_t seed, int cap = kDefaultAnnCap,
                                 int max_power = 6);

// Looks for irreducible (index 1) parameter ideals in each power of m.
ExperimentReport cmd_sci_probe(const RingSpec& spec, int max_power,
                               int samples, uint64_t seed);

}  // namespace soclelab
