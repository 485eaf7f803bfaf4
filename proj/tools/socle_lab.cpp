// socle-lab: Groebner-based calculator for indices of reducibility, socle
// dimensions, and desk-scale local cohomology invariants of quotient rings,
// plus the experiment drivers (reproduce-example, verify-dim1, verify-dim2,
// sci-probe).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "soclelab/experiments.hpp"

namespace {

using namespace soclelab;

struct CommonOpts {
  std::string spec_path;
  uint64_t seed = 1;
  int samples = 20;
  int max_power = 6;
  int cap = kDefaultAnnCap;
  std::string order = "grevlex";
  std::string jsonl_path;
};

RingSpec load_spec(const CommonOpts& o) {
  if (o.spec_path.empty()) throw error("--spec PATH is required");
  return parse_ring_spec_file(o.spec_path);
}

const std::vector<Polynomial>& named(const RingSpec& spec,
                                     const std::string& name) {
  const std::vector<Polynomial>* gens = spec.find_ideal(name);
  if (!gens) throw error("no ideal named '" + name + "' in the spec file");
  return *gens;
}

MonomialOrder order_from(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw error("unknown order '" + name + "' (use grevlex or lex)");
}

void emit(const ExperimentReport& rep, const CommonOpts& o) {
  std::cout << rep.table();
  if (!o.jsonl_path.empty()) {
    std::ofstream out(o.jsonl_path);
    if (!out) throw error("cannot write " + o.jsonl_path);
    out << rep.jsonl();
  }
}

void print_ideal_gens(const RingSpec& spec, const std::vector<Polynomial>& gens) {
  for (const Polynomial& g : gens)
    std::cout << "  " << g.to_string(spec.ring->var_names()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"socle-lab: indices of reducibility and socle invariants"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string arg_ideal, arg_ideal2, arg_poly;
  int arg_d = 2, arg_nmin = 3, arg_nmax = 5;
  std::string arg_field = "prime:32003";

  auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
    if (needs_spec) cmd->add_option("--spec", o.spec_path, "ring spec file");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--samples", o.samples, "samples per power");
    cmd->add_option("--max-power", o.max_power, "largest power of m probed");
    cmd->add_option("--cap", o.cap, "annihilating power cap");
    cmd->add_option("--order", o.order, "monomial order: grevlex|lex");
    cmd->add_option("--jsonl", o.jsonl_path, "write machine records here");
  };

  CLI::App* c_gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal (A-relative)");
  add_common(c_gb);
  c_gb->add_option("ideal", arg_ideal, "named ideal (default: the relations)");

  CLI::App* c_nf = app.add_subcommand("nf", "normal form of a polynomial");
  add_common(c_nf);
  c_nf->add_option("poly", arg_poly, "polynomial")->required();
  c_nf->add_option("ideal", arg_ideal, "named ideal (default: the relations)");

  CLI::App* c_colon = app.add_subcommand("colon", "ideal colon (I : J)");
  add_common(c_colon);
  c_colon->add_option("I", arg_ideal)->required();
  c_colon->add_option("J", arg_ideal2)->required();

  CLI::App* c_sat = app.add_subcommand("saturate", "saturation (I : J^inf)");
  add_common(c_sat);
  c_sat->add_option("I", arg_ideal)->required();
  c_sat->add_option("J", arg_ideal2)->required();

  CLI::App* c_dim = app.add_subcommand("dim", "Krull dimension of A/I");
  add_common(c_dim);
  c_dim->add_option("ideal", arg_ideal);

  CLI::App* c_len = app.add_subcommand("colength", "vector space dimension of A/I");
  add_common(c_len);
  c_len->add_option("ideal", arg_ideal)->required();

  CLI::App* c_soc = app.add_subcommand("socdim", "socle dimension of A/I");
  add_common(c_soc);
  c_soc->add_option("ideal", arg_ideal)->required();

  CLI::App* c_idx = app.add_subcommand("index", "index of reducibility of I on A");
  add_common(c_idx);
  c_idx->add_option("ideal", arg_ideal)->required();

  CLI::App* c_h0 = app.add_subcommand("h0", "H^0 of A: length and socle dimension");
  add_common(c_h0);

  CLI::App* c_h1 = app.add_subcommand("h1", "socle dimension of the H^1 realization for a parameter pair");
  add_common(c_h1);
  c_h1->add_option("ideal", arg_ideal, "named ideal with two generators")->required();

  CLI::App* c_ide = app.add_subcommand("idealize", "presentation of R x (R/J)");
  add_common(c_ide);
  c_ide->add_option("J", arg_ideal)->required();

  CLI::App* c_dec = app.add_subcommand("decomp", "irreducible decomposition of an artinian monomial ideal");
  add_common(c_dec);
  c_dec->add_option("ideal", arg_ideal)->required();

  CLI::App* c_rex = app.add_subcommand("reproduce-example", "the idealization example: indices 2 and 3");
  add_common(c_rex, false);
  c_rex->add_option("--d", arg_d, "dimension of the base ring (>= 2)");
  c_rex->add_option("--nmin", arg_nmin, "first exponent");
  c_rex->add_option("--nmax", arg_nmax, "last exponent");
  c_rex->add_option("--field", arg_field, "rational | prime:P");
  c_rex->add_option("--jsonl", o.jsonl_path, "write machine records here");

  CLI::App* c_d1 = app.add_subcommand("verify-dim1", "dimension-1 theorem: certificate plus sampled indices");
  add_common(c_d1);

  CLI::App* c_d2 = app.add_subcommand("verify-dim2", "dimension-2 theorem: stabilization and socle identities");
  add_common(c_d2);

  CLI::App* c_sci = app.add_subcommand("sci-probe", "search powers of m for irreducible parameter ideals");
  add_common(c_sci);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_gb)) {
      RingSpec spec = load_spec(o);
      std::vector<Polynomial> gens =
          arg_ideal.empty() ? spec.ring->relations() : named(spec, arg_ideal);
      GroebnerBasis gb = Ideal(spec.ring, gens)
                             .plus_relations()
                             .groebner(order_from(o.order));
      std::cout << "reduced Groebner basis (" << gb.order.name() << "):\n";
      print_ideal_gens(spec, gb.elements);
    } else if (app.got_subcommand(c_nf)) {
      RingSpec spec = load_spec(o);
      std::vector<Polynomial> gens =
          arg_ideal.empty() ? spec.ring->relations() : named(spec, arg_ideal);
      Polynomial f = parse_polynomial(arg_poly, *spec.ring);
      GroebnerBasis gb = Ideal(spec.ring, gens)
                             .plus_relations()
                             .groebner(order_from(o.order));
      std::cout << normal_form(f, gb).to_string(spec.ring->var_names())
                << "\n";
    } else if (app.got_subcommand(c_colon)) {
      RingSpec spec = load_spec(o);
      Ideal i = Ideal(spec.ring, named(spec, arg_ideal)).plus_relations();
      Ideal j(spec.ring, named(spec, arg_ideal2));
      Ideal c = ideal_colon(i, j);
      std::cout << "(" << arg_ideal << " : " << arg_ideal2 << ") =\n";
      print_ideal_gens(spec, c.groebner().elements);
    } else if (app.got_subcommand(c_sat)) {
      RingSpec spec = load_spec(o);
      Ideal i = Ideal(spec.ring, named(spec, arg_ideal)).plus_relations();
      Ideal j(spec.ring, named(spec, arg_ideal2));
      SaturationResult s = saturate(i, j, o.cap > 0 ? 64 : 64);
      std::cout << "stabilized after " << s.exponent << " colon iterations:\n";
      print_ideal_gens(spec, s.ideal.groebner().elements);
    } else if (app.got_subcommand(c_dim)) {
      RingSpec spec = load_spec(o);
      std::vector<Polynomial> gens =
          arg_ideal.empty() ? std::vector<Polynomial>{} : named(spec, arg_ideal);
      std::optional<int> d =
          ideal_dimension(Ideal(spec.ring, gens).plus_relations());
      if (d)
        std::cout << *d << "\n";
      else
        std::cout << "empty (unit ideal)\n";
    } else if (app.got_subcommand(c_len)) {
      RingSpec spec = load_spec(o);
      std::cout << colength(
                       Ideal(spec.ring, named(spec, arg_ideal)).plus_relations())
                << "\n";
    } else if (app.got_subcommand(c_soc)) {
      RingSpec spec = load_spec(o);
      std::cout << socle_dimension(
                       Ideal(spec.ring, named(spec, arg_ideal)).plus_relations())
                << "\n";
    } else if (app.got_subcommand(c_idx)) {
      RingSpec spec = load_spec(o);
      IndexReport r =
          index_of_reducibility(Ideal(spec.ring, named(spec, arg_ideal)));
      std::cout << "index = " << r.index
                << (r.is_parameter_ideal ? " (parameter ideal)"
                                         : " (not a parameter ideal)")
                << "\n";
    } else if (app.got_subcommand(c_h0)) {
      RingSpec spec = load_spec(o);
      FiniteLengthModule w = h0_module(spec.ring, o.cap);
      std::cout << "length " << module_length(w) << ", socle dimension "
                << module_socle_dim(w) << "\n";
      std::cout << "preimage of H^0:\n";
      print_ideal_gens(spec, w.numerator.groebner().elements);
    } else if (app.got_subcommand(c_h1)) {
      RingSpec spec = load_spec(o);
      const std::vector<Polynomial>& gens = named(spec, arg_ideal);
      if (gens.size() != 2) throw error("h1 needs an ideal with exactly two generators");
      std::optional<int> h = h1_socdim(gens[0], gens[1], spec.ring, o.cap);
      if (h)
        std::cout << *h << "\n";
      else
        std::cout << "not finite length (cap " << o.cap << ")\n";
    } else if (app.got_subcommand(c_ide)) {
      RingSpec spec = load_spec(o);
      IdealizationSpec s =
          idealize_cyclic(spec.ring, Ideal(spec.ring, named(spec, arg_ideal)));
      std::cout << render_ring_spec(*s.result);
    } else if (app.got_subcommand(c_dec)) {
      RingSpec spec = load_spec(o);
      const std::vector<Polynomial>& gens = named(spec, arg_ideal);
      std::vector<Monomial> monos;
      for (const Polynomial& g : gens) {
        if (g.term_count() != 1)
          throw error("decomp needs a monomial ideal; '" +
                      g.to_string(spec.ring->var_names()) +
                      "' is not a monomial");
        monos.push_back(g.leading_monomial());
      }
      MonomialIdeal mi(spec.ring->nvars(), monos);
      std::vector<MonomialIdeal> comps = irreducible_decomposition(mi);
      std::cout << comps.size() << " irreducible components:\n";
      for (const MonomialIdeal& c : comps)
        std::cout << "  " << c.describe(spec.ring->var_names()) << "\n";
      std::cout << "irredundant: "
                << (verify_irredundant(comps, mi) ? "yes" : "no") << "\n";
    } else if (app.got_subcommand(c_rex)) {
      Field field = Field::prime(32003);
      if (arg_field == "rational") {
        field = Field::rationals();
      } else if (arg_field.rfind("prime:", 0) == 0) {
        field = Field::prime(std::stoll(arg_field.substr(6)));
      } else {
        throw error("--field must be 'rational' or 'prime:P'");
      }
      ExperimentReport rep =
          cmd_reproduce_example(arg_d, arg_nmin, arg_nmax, field);
      emit(rep, o);
      return rep.exit_code();
    } else if (app.got_subcommand(c_d1)) {
      RingSpec spec = load_spec(o);
      ExperimentReport rep = cmd_verify_dim1(spec, o.samples, o.seed);
      emit(rep, o);
      return rep.exit_code();
    } else if (app.got_subcommand(c_d2)) {
      RingSpec spec = load_spec(o);
      ExperimentReport rep =
          cmd_verify_dim2(spec, o.samples, o.seed, o.cap, o.max_power);
      emit(rep, o);
      return rep.exit_code();
    } else if (app.got_subcommand(c_sci)) {
      RingSpec spec = load_spec(o);
      ExperimentReport rep =
          cmd_sci_probe(spec, o.max_power, o.samples, o.seed);
      emit(rep, o);
      return rep.exit_code();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
