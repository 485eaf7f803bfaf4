#include "doctest.h"
#include "soclelab/experiments.hpp"
#include "support/test_rings.hpp"

using namespace soclelab;

namespace {

const char* kCounterexampleSpec =
    "field prime 32003\n"
    "vars x y w\n"
    "relations x^2*w, w^2\n"
    "ideal Q = x^3, y^3\n"
    "ideal Qp = (x+y)^3, x*y^2\n";

const char* kFiberSpec =
    "field prime 32003\n"
    "vars x y u v\n"
    "relations x*u, x*v, y*u, y*v\n";

const char* kDim1Spec =
    "field prime 32003\n"
    "vars x y\n"
    "relations x^2, x*y\n";

}  // namespace

TEST_CASE("ring spec parsing") {
  RingSpec spec = parse_ring_spec_text(kCounterexampleSpec);
  CHECK(spec.ring->nvars() == 3);
  CHECK(spec.ring->field().characteristic() == 32003);
  CHECK(*ideal_dimension(Ideal(spec.ring, spec.ring->relations())) == 2);
  REQUIRE(spec.find_ideal("Q"));
  CHECK(spec.find_ideal("Q")->size() == 2);
  CHECK(spec.find_ideal("missing") == nullptr);

  RingSpec fib = parse_ring_spec_text(kFiberSpec);
  CHECK(*ideal_dimension(Ideal(fib.ring, fib.ring->relations())) == 2);

  // undeclared variable in a generator
  CHECK_THROWS_AS(parse_ring_spec_text("field rational\nvars x\nideal I = q\n"),
                  error);
  // missing field
  CHECK_THROWS_AS(parse_ring_spec_text("vars x\n"), error);
  // bad directive carries the line number
  try {
    parse_ring_spec_text("field rational\nvars x\nnonsense y\n");
    CHECK(false);
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  // rational field round trip
  RingSpec q = parse_ring_spec_text("field rational\nvars t\n");
  CHECK_FALSE(q.ring->field().is_prime_field());
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  RingSpec spec = parse_ring_spec_text(kDim1Spec);
  ExperimentReport a = cmd_verify_dim1(spec, 6, 12345);
  ExperimentReport b = cmd_verify_dim1(spec, 6, 12345);
  CHECK(a.jsonl() == b.jsonl());
  CHECK(a.table() == b.table());
  ExperimentReport c = cmd_verify_dim1(spec, 6, 999);
  CHECK(a.jsonl() != c.jsonl());
}

TEST_CASE("verify-dim1 passes on the running example") {
  RingSpec spec = parse_ring_spec_text(kDim1Spec);
  ExperimentReport rep = cmd_verify_dim1(spec, 8, 7);
  CHECK(rep.verdict == "PASS");
  CHECK(rep.exit_code() == 0);
  // certificate record first, then family and sample rows
  REQUIRE(!rep.records.empty());
  CHECK(rep.records[0]["predicted_index"] == 2);
  CHECK(rep.records[0]["ell"] == 3);
}

TEST_CASE("reproduce-example, small instance") {
  ExperimentReport rep = cmd_reproduce_example(2, 3, 3, Field::prime(32003));
  CHECK(rep.verdict == "PASS");
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0]["index_Q"] == 2);
  CHECK(rep.records[0]["index_Qprime"] == 3);
  CHECK(rep.records[0]["index_Q_via_lemma"] == 2);
  CHECK(rep.records[0]["index_Qprime_via_lemma"] == 3);
  CHECK(rep.records[0]["decomposition_matches"] == true);
}

TEST_CASE("sci-probe on the regular plane finds witnesses everywhere") {
  RingSpec spec = parse_ring_spec_text("field prime 32003\nvars x y\n");
  ExperimentReport rep = cmd_sci_probe(spec, 3, 6, 11);
  CHECK(rep.verdict == "PASS");
  for (const Record& r : rep.records)
    if (r.contains("irreducible_found")) CHECK(r["irreducible_found"] == true);
}

TEST_CASE("sampling helpers validate parameter systems") {
  RingSpec spec = parse_ring_spec_text(kFiberSpec);
  Rng rng(5);
  std::optional<std::vector<Polynomial>> q =
      sample_parameter_system(spec.ring, 2, rng);
  REQUIRE(q.has_value());
  CHECK(is_parameter_system(*q, spec.ring));
  // pure powers of x and y do not cut the fiber ring down to dimension 0
  std::vector<std::vector<Polynomial>> fams =
      deterministic_parameter_families(spec.ring, 2);
  for (const std::vector<Polynomial>& f : fams)
    CHECK(is_parameter_system(f, spec.ring));
}
