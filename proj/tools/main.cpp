#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multibetti/multibetti.hpp"

using namespace multibetti;

namespace {

struct GlobalOpts {
  std::string input;
  bool json = false;
  std::string field;  // "" = honor the input's tag, else "q" or a prime
  unsigned threads = 0;
};

std::string read_stream(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const GlobalOpts& g) {
  if (g.input.empty()) throw Error("this command needs --input FILE (or - for stdin)");
  return Json::parse(read_stream(g.input));
}

AnyPresentation load_presentation(const GlobalOpts& g) {
  return presentation_from_json(load_json(g), g.field);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error("expected a comma-joined integer list, got \"" + s + "\"");
    }
  }
  return out;
}

DegreeVector parse_degree(const std::string& s) {
  return DegreeVector(parse_int_list(s));
}

std::string subset_str(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string totals_str(const std::vector<std::size_t>& totals) {
  const auto t = trim_trailing_zeros(totals);
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

void emit(const Json& doc, const GlobalOpts& g, const std::string& human) {
  if (g.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human;
}

Json bass_table_core(const BassTable& t) {
  Json out;
  out["prime"] = subset_to_json(t.prime);
  out["by_index"] = detail::index_maps_to_json(t.by_index);
  out["totals"] = t.totals();
  return out;
}

std::string render_index_maps(const std::vector<std::map<DegreeVector, std::size_t>>& by_index,
                              const std::string& indent) {
  std::ostringstream out;
  for (std::size_t i = 0; i < by_index.size(); ++i)
    for (const auto& [deg, mult] : by_index[i])
      out << indent << "i=" << i << "  (" << deg.to_string() << ")  " << mult << "\n";
  return out.str();
}

std::string render_betti(const BettiTable& t) {
  std::ostringstream out;
  out << "betti table\n" << render_index_maps(t.by_index, "  ");
  out << "totals: " << totals_str(t.totals()) << "\n";
  return out.str();
}

std::string render_bass(const BassTable& t) {
  std::ostringstream out;
  out << "bass table at prime " << subset_str(t.prime) << "\n"
      << render_index_maps(t.by_index, "  ");
  out << "totals: " << totals_str(t.totals()) << "\n";
  return out.str();
}

std::string render_report(const VerificationReport& r) {
  std::ostringstream out;
  out << r.kind << "\n";
  out << "profile: beta0=" << r.profile.beta0 << " beta1=" << r.profile.beta1
      << " rank=" << r.profile.rank << " rbar=" << r.profile.rbar()
      << " lambda=" << r.profile.lambda() << "\n";
  out << "computed: " << totals_str(r.computed) << "\n";
  for (const auto& c : r.checks) {
    out << "i=" << c.index << ": computed=" << c.computed << " bound=" << c.bound.str()
        << " slack=" << c.slack.str() << (c.pass ? " pass" : " FAIL")
        << (c.equality ? " (equality)" : "") << "\n";
  }
  out << "sizes: " << (r.sizes_ok ? "ok" : "MISMATCH") << "\n";
  out << "result: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_probe(const ProbeReport& r) {
  std::ostringstream out;
  out << "duality probe, a=(" << r.a.to_string() << ")\n";
  out << "degrees checked: " << r.degrees_checked << "\n";
  out << "mismatches: " << r.mismatches.size() << "\n";
  for (const auto& m : r.mismatches)
    out << "  i=" << m.index << " b=(" << m.degree.to_string() << ") betti=" << m.betti
        << " bass_degree=(" << m.bass_degree.to_string() << ") bass=" << m.bass << "\n";
  out << "betti totals: " << totals_str(r.betti_totals) << "\n";
  out << "bass totals:  " << totals_str(r.bass_totals) << "\n";
  out << "result: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

template <Field F>
std::string render_presentation(const Presentation<F>& p) {
  std::ostringstream out;
  out << "vars: " << p.vars() << "\n";
  for (std::size_t t = 0; t < p.rows(); ++t)
    out << "row " << t << ": degree (" << p.row_degrees()[t].to_string() << ")\n";
  for (std::size_t j = 0; j < p.cols(); ++j)
    out << "col " << j << ": degree (" << p.col_degrees()[j].to_string() << ")\n";
  out << "coeffs:\n";
  for (std::size_t t = 0; t < p.rows(); ++t) {
    out << " ";
    for (std::size_t j = 0; j < p.cols(); ++j)
      out << " " << p.field().to_string(p.coeffs().at(t, j));
    out << "\n";
  }
  return out.str();
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "monomial ideal, vars: " << ideal.vars() << "\n";
  for (const auto& g : ideal.generators()) out << "  (" << g.to_string() << ")\n";
  if (ideal.generators().empty()) out << "  (zero ideal)\n";
  return out.str();
}

std::string render_subsets(const std::string& what, const std::vector<SubsetMask>& sets) {
  std::ostringstream out;
  out << what << ": " << sets.size() << "\n";
  for (SubsetMask s : sets) out << "  " << subset_str(s) << "\n";
  return out.str();
}

Json subsets_to_json(const std::string& kind, const std::vector<SubsetMask>& sets) {
  Json out;
  stamp(out);
  out["kind"] = kind;
  Json arr = Json::array();
  for (SubsetMask s : sets) arr.push_back(subset_to_json(s));
  out["sets"] = std::move(arr);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multigraded Betti/Bass computations and their binomial bounds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--input", g.input, "input JSON file, or - for stdin");
  app.add_flag("--json", g.json, "emit machine-readable JSON instead of tables");
  app.add_option("--field", g.field, "coefficient field: q (rationals) or a prime");
  app.add_option("--threads", g.threads, "worker threads (0 = automatic)");

  auto* c_validate = app.add_subcommand("validate", "check a presentation for minimality");

  auto* c_matroid = app.add_subcommand("matroid", "coefficient matroid enumerations");
  auto* m_circuits = c_matroid->add_subcommand("circuits", "minimal dependent sets");
  std::size_t flat_rank = 0;
  auto* m_flats = c_matroid->add_subcommand("flats", "flats of a given rank");
  m_flats->add_option("--rank", flat_rank, "flat rank")->required();
  int tflat_level = 0;
  auto* m_tflats = c_matroid->add_subcommand("tflats", "T-flats of a given level");
  m_tflats->add_option("--level", tflat_level, "T-flat level")->required();
  c_matroid->require_subcommand(1);

  auto* c_bound = app.add_subcommand("bound", "closed-form Betti/Bass bound at one index");
  std::size_t opt_i = 0, opt_beta0 = 0, opt_beta1 = 0, opt_rank = 0;
  std::size_t opt_mu0 = 0, opt_mu1 = 0, opt_d = 0;
  bool opt_bass = false;
  c_bound->add_option("--i", opt_i, "homological index")->required();
  c_bound->add_flag("--bass", opt_bass, "Bass-number bound instead of Betti");
  c_bound->add_option("--beta0", opt_beta0, "number of generators");
  c_bound->add_option("--beta1", opt_beta1, "number of relations");
  c_bound->add_option("--rank", opt_rank, "module rank");
  c_bound->add_option("--mu0", opt_mu0, "total 0th Bass number");
  c_bound->add_option("--mu1", opt_mu1, "total 1st Bass number");
  c_bound->add_option("--d", opt_d, "prime dimension shift");

  auto* c_brt = app.add_subcommand("brt", "Buchsbaum-Rim-Taylor rank");
  std::size_t brt_cols = 0, brt_rank_opt = 0, brt_i = 0;
  c_brt->add_option("--cols", brt_cols, "ground set size n")->required();
  c_brt->add_option("--rank", brt_rank_opt, "rank r")->required();
  c_brt->add_option("--i", brt_i, "homological index")->required();

  auto* c_betti = app.add_subcommand("betti", "degreewise Betti table");

  auto* c_bass = app.add_subcommand("bass", "Bass tables at monomial primes");
  std::string bass_prime;
  std::string bass_primes = "all";
  auto* bass_prime_opt =
      c_bass->add_option("--prime", bass_prime, "one prime as zero-based indices, e.g. 0,2");
  c_bass->add_option("--primes", bass_primes, "totals over: all | positive")
      ->check(CLI::IsMember({"all", "positive"}));

  auto* c_vbetti = app.add_subcommand("verify-betti", "check Betti totals against the bound");
  auto* c_vbass = app.add_subcommand("verify-bass", "check total Bass numbers against the bound");
  std::string vbass_primes = "all";
  c_vbass->add_option("--primes", vbass_primes, "sum over: all | positive")
      ->check(CLI::IsMember({"all", "positive"}));

  auto* c_genex = app.add_subcommand("genex", "generic sharp instance");
  std::size_t gx_rank = 1, gx_cols = 1;
  int gx_spike = 1;
  bool gx_check = false;
  std::uint64_t gx_seed = 0;
  c_genex->add_option("--rank", gx_rank, "coefficient rank r")->required();
  c_genex->add_option("--cols", gx_cols, "column count n")->required();
  c_genex->add_option("--spike", gx_spike, "degree spike K (default 1)");
  c_genex->add_flag("--check", gx_check, "verify sharpness of the instance");
  auto* gx_seed_opt = c_genex->add_option("--seed", gx_seed, "randomized fallback seed");

  auto* c_dual = app.add_subcommand("dual", "Alexander dual of a monomial ideal");
  std::string dual_a;
  c_dual->add_option("--a", dual_a, "box corner, comma-joined")->required();

  auto* c_probe = app.add_subcommand("probe-duality", "degreewise Bass/Betti pairing probe");
  std::string probe_candidate, probe_a;
  c_probe->add_option("--candidate", probe_candidate, "candidate dual presentation file")
      ->required();
  c_probe->add_option("--a", probe_a, "box corner, comma-joined")->required();

  for (auto* sub : {c_validate, c_matroid, c_bound, c_brt, c_betti, c_bass, c_vbetti,
                    c_vbass, c_genex, c_dual, c_probe})
    sub->fallthrough();
  for (auto* sub : {m_circuits, m_flats, m_tflats}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_validate) {
      const Json doc = load_json(g);
      ValidationReport report;
      std::visit([&](const auto& p) { report = p.validate(); },
                 presentation_from_json(doc, g.field));
      emit(validation_report_to_json(report), g, report.to_string() + "\n");
      if (!report.ok()) {
        for (const auto& v : report.violations)
          std::cerr << "invalid presentation: " << v.to_string() << "\n";
        return 2;
      }
      return 0;
    }

    if (*c_matroid) {
      const AnyPresentation any = load_presentation(g);
      return std::visit(
          [&](const auto& p) {
            const Matroid mat = coefficient_matroid(p);
            std::vector<SubsetMask> sets;
            std::string kind;
            if (*m_circuits) {
              sets = mat.circuits();
              kind = "circuits";
            } else if (*m_flats) {
              sets = mat.flats_of_rank(flat_rank);
              kind = "flats";
            } else {
              sets = mat.tflats_of_level(tflat_level);
              kind = "tflats";
            }
            Json doc = subsets_to_json(kind, sets);
            doc["n"] = p.cols();
            doc["rank"] = mat.full_rank();
            emit(doc, g, render_subsets(kind, sets));
            return 0;
          },
          any);
    }

    if (*c_bound) {
      BigInt value;
      if (opt_bass)
        value = bass_bound(opt_mu0, opt_mu1, opt_i, opt_d);
      else
        value = betti_bound(opt_beta0, opt_beta1, opt_rank, opt_i);
      Json doc;
      stamp(doc);
      doc["kind"] = "bound";
      doc["value"] = bigint_to_json(value);
      emit(doc, g, value.str() + "\n");
      return 0;
    }

    if (*c_brt) {
      const BigInt value = brt_rank(brt_cols, brt_rank_opt, brt_i);
      Json doc;
      stamp(doc);
      doc["kind"] = "brt";
      doc["value"] = bigint_to_json(value);
      emit(doc, g, value.str() + "\n");
      return 0;
    }

    if (*c_betti) {
      const AnyPresentation any = load_presentation(g);
      const BettiTable table =
          std::visit([&](const auto& p) { return betti_table(p, 0, g.threads); }, any);
      emit(betti_table_to_json(table), g, render_betti(table));
      return 0;
    }

    if (*c_bass) {
      const AnyPresentation any = load_presentation(g);
      if (bass_prime_opt->count() > 0) {
        const auto idx = parse_int_list(bass_prime);
        return std::visit(
            [&](const auto& p) {
              SubsetMask prime;
              for (int i : idx) {
                if (i < 0 || static_cast<std::size_t>(i) >= p.vars())
                  throw Error("prime index " + std::to_string(i) + " out of range");
                prime = prime.with(static_cast<std::size_t>(i));
              }
              const BassTable table = bass_at_prime(p, prime, 0, g.threads);
              emit(bass_table_to_json(table), g, render_bass(table));
              return 0;
            },
            any);
      }
      return std::visit(
          [&](const auto& p) {
            const auto tables = all_bass_tables(p, 0, g.threads);
            const auto all = summed_bass_totals(tables, p.vars(), true);
            const auto positive = summed_bass_totals(tables, p.vars(), false);
            Json doc;
            stamp(doc);
            doc["kind"] = "bass-summary";
            doc["primes"] = bass_primes;
            doc["totals"] = bass_primes == "all" ? all : positive;
            doc["totals_all"] = all;
            doc["totals_positive"] = positive;
            Json arr = Json::array();
            for (const auto& t : tables) arr.push_back(bass_table_core(t));
            doc["tables"] = std::move(arr);
            std::ostringstream human;
            human << "totals (all primes):      " << totals_str(all) << "\n";
            human << "totals (positive primes): " << totals_str(positive) << "\n";
            for (const auto& t : tables) {
              const auto tt = t.totals();
              bool any = false;
              for (std::size_t v : tt) any = any || v > 0;
              if (any) human << render_bass(t);
            }
            emit(doc, g, human.str());
            return 0;
          },
          any);
    }

    if (*c_vbetti) {
      const AnyPresentation any = load_presentation(g);
      const VerificationReport rep =
          std::visit([&](const auto& p) { return verify_betti(p, g.threads); }, any);
      emit(verification_report_to_json(rep), g, render_report(rep));
      return rep.pass ? 0 : 1;
    }

    if (*c_vbass) {
      const AnyPresentation any = load_presentation(g);
      const bool include_zero = vbass_primes == "all";
      const VerificationReport rep = std::visit(
          [&](const auto& p) { return verify_bass(p, include_zero, g.threads); }, any);
      emit(verification_report_to_json(rep), g, render_report(rep));
      return rep.pass ? 0 : 1;
    }

    if (*c_genex) {
      const GenexSpec spec{gx_rank, gx_cols, gx_spike};
      const bool seeded = gx_seed_opt->count() > 0;
      auto run = [&](const auto& field) {
        auto p = seeded ? generic_presentation_seeded(field, spec, gx_seed)
                        : generic_presentation(field, spec);
        Json doc;
        stamp(doc);
        doc["kind"] = "genex";
        doc["presentation"] = presentation_to_json(p);
        std::ostringstream human;
        human << render_presentation(p);
        int code = 0;
        if (gx_check) {
          const VerificationReport rep = verify_sharpness(p, g.threads);
          doc["check"] = verification_report_to_json(rep);
          human << render_report(rep);
          code = rep.pass ? 0 : 1;
        }
        emit(doc, g, human.str());
        return code;
      };
      if (g.field.empty() || g.field == "q") return run(RationalField{});
      const std::uint64_t p = detail::parse_bigint(g.field).convert_to<std::uint64_t>();
      if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
      return run(PrimeField{p});
    }

    if (*c_dual) {
      const MonomialIdeal ideal = monomial_ideal_from_json(load_json(g));
      const MonomialIdeal dual = alexander_dual_checked(ideal, parse_degree(dual_a));
      emit(monomial_ideal_to_json(dual), g, render_ideal(dual));
      return 0;
    }

    if (*c_probe) {
      const AnyPresentation reference = load_presentation(g);
      const AnyPresentation candidate =
          presentation_from_json(Json::parse(read_stream(probe_candidate)), g.field);
      if (reference.index() != candidate.index())
        throw Error("reference and candidate use different fields");
      const DegreeVector a = parse_degree(probe_a);
      ProbeReport rep;
      if (reference.index() == 0)
        rep = miller_relation_probe(std::get<0>(candidate), std::get<0>(reference), a,
                                    g.threads);
      else
        rep = miller_relation_probe(std::get<1>(candidate), std::get<1>(reference), a,
                                    g.threads);
      emit(probe_report_to_json(rep), g, render_probe(rep));
      return rep.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
