#include "autz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "autz/congruence.hpp"
#include "autz/gf2.hpp"
#include "autz/involution.hpp"
#include "autz/json_io.hpp"
#include "autz/transvection.hpp"
#include "autz/verify.hpp"

namespace autz {

namespace {

IntMatrix read_matrix(const std::string& file, std::istream& in) {
  std::stringstream buf;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw document_error("cannot open " + file);
    buf << f.rdbuf();
  } else {
    buf << in.rdbuf();
  }
  return parse_matrix_document(buf.str());
}

Integer parse_integer_arg(const std::string& s, const char* what) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw document_error(std::string("bad integer for ") + what + ": " + s);
  return v;
}

void require_automorphism(const IntMatrix& m) {
  if (!is_automorphism(m)) throw precondition_error("not an automorphism (|det| != 1)");
}

json profile_json(const InvolutionProfile& pr) { return json::array({pr.fixed, pr.negated, pr.swaps}); }

json classify_report(const IntMatrix& m) {
  require_automorphism(m);
  json j;
  j["n"] = m.rows();
  j["det"] = integer_to_json(determinant(m));
  j["is_involution"] = is_involution(m);
  if (is_involution(m)) {
    const InvolutionKind kind = classify(m);
    j["profile"] = profile_json(involution_profile(m));
    j["kind"] = kind.name();
    if (kind.tag == InvolutionKindTag::gamma_involution || kind.is_extremal()) j["gamma"] = kind.gamma;
    j["residue"] = residue(m);
  } else {
    j["profile"] = nullptr;
    j["kind"] = nullptr;
    j["residue"] = nullptr;
  }
  const auto t = recognize_transvection(m);
  j["is_transvection"] = t.has_value();
  if (t) {
    j["x"] = vector_to_json(t->direction);
    j["delta"] = vector_to_json(t->covector);
    j["m"] = integer_to_json(t->m);
  }
  json levels = json::array();
  for (int level = 2; level <= 12; ++level)
    if (in_gamma(m, level)) levels.push_back(level);
  j["gamma_levels"] = levels;
  return j;
}

std::string block_name(const InvolutionProfile& pr) {
  std::vector<std::string> parts;
  if (pr.fixed) parts.push_back("I_" + std::to_string(pr.fixed));
  if (pr.negated) parts.push_back("-I_" + std::to_string(pr.negated));
  for (std::size_t k = 0; k < pr.swaps; ++k) parts.push_back("swap");
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " + " : "") + parts[k];
  return out;
}

json canon_report(const IntMatrix& m) {
  const CanonicalBasis cf = canonical_form(m);
  const BlockLayout& l = cf.layout;
  json pairs = json::array();
  for (std::size_t k = 0; k < l.swap_count; ++k) {
    auto [b, c] = l.swap_pair(k);
    pairs.push_back({b, c});
  }
  return {
      {"profile", profile_json(cf.profile)},
      {"U", matrix_to_json(cf.basis)},
      {"block", block_name(cf.profile)},
      {"layout",
       {{"fixed", {l.fixed_begin, l.negated_begin}},
        {"negated", {l.negated_begin, l.swaps_begin}},
        {"swap_pairs", pairs}}},
  };
}

json factor_json(const ElementaryFactor& f) { return {{"i", f.i + 1}, {"j", f.j + 1}, {"c", integer_to_json(f.c)}}; }

json factor_report(const IntMatrix& m) {
  const Factorization f = elementary_factorization(m);
  const auto classes = factor_mod2_classes(f);
  json factors = json::array();
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    json e = factor_json(f.factors[k]);
    e["mod2_trivial"] = classes[k].trivial;
    e["square_root"] = classes[k].square_root ? factor_json(*classes[k].square_root) : json(nullptr);
    factors.push_back(e);
  }
  return {
      {"n", f.n},
      {"length", f.length()},
      {"factors", factors},
      {"round_trip", f.product() == m},
      {"in_gamma2", in_gamma(m, 2)},
      {"mod2_product_is_identity", mod2_image(f) == Gf2Matrix::identity(f.n)},
  };
}

json identities_report() {
  const CommutatorReport rep = claim1_commutator_identities();
  json sigmas = json::array(), commutators = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    sigmas.push_back(matrix_to_json(rep.sigmas[k]));
    commutators.push_back(matrix_to_json(rep.commutators[k]));
  }
  json braid = json::array(), squares = json::array();
  const IntMatrix flip{{1, 0}, {0, -1}};
  for (const auto& r : braid_involution_solutions()) {
    braid.push_back(matrix_to_json(r));
    squares.push_back(matrix_to_json((flip * r) * (flip * r)));
  }
  json roots = json::array();
  for (const auto& x : unipotent_sqrt_sl2(IntMatrix{{1, 2}, {0, 1}})) roots.push_back(matrix_to_json(x));
  return {
      {"cycle", matrix_to_json(rep.cycle)},
      {"sigmas", sigmas},
      {"commutators", commutators},
      {"sigma_has_eigenvalue_minus_one", rep.sigma_has_eigenvalue_minus_one},
      {"commutator_has_eigenvalue_minus_one", rep.commutator_has_eigenvalue_minus_one},
      {"conjugate_to_commutator", rep.conjugate_to_commutator},
      {"steinberg", matrix_to_json(rep.steinberg)},
      {"braid_solutions", braid},
      {"braid_squares", squares},
      {"sqrt_I_plus_2E12", roots},
  };
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with automorphisms of Z^n", "autz"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("--file", file, "Matrix document (default: stdin)"); };

  auto* classify_cmd = app.add_subcommand("classify", "Involution, transvection and congruence report");
  auto* canon_cmd = app.add_subcommand("canon", "Canonical basis of an involution");
  auto* factor_cmd = app.add_subcommand("factor", "Elementary factorization of an SL(n,Z) matrix");
  auto* lift_cmd = app.add_subcommand("lift", "Lift from GF(2), or complete a row to SL(3,Z)");
  auto* witness_cmd = app.add_subcommand("witness", "Order-3 or 4-involution witness for an involution");
  auto* gamma_cmd = app.add_subcommand("gamma", "Membership in the congruence subgroup of level m");
  auto* identities_cmd = app.add_subcommand("identities", "Recompute the commutator and braid identities");
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
  for (auto* sub : {classify_cmd, canon_cmd, factor_cmd, lift_cmd, witness_cmd, gamma_cmd}) add_file(sub);

  bool mod2 = false;
  std::vector<std::string> row;
  auto* mod2_flag = lift_cmd->add_flag("--mod2", mod2, "Input is a matrix over GF(2)");
  auto* row_opt = lift_cmd->add_option("--row", row, "Odd a and even c")->expected(2);
  mod2_flag->excludes(row_opt);

  bool order3 = false, four = false;
  auto* order3_flag = witness_cmd->add_flag("--order3", order3, "P' with P P' of order 3");
  auto* four_flag = witness_cmd->add_flag("--four", four, "P' with P P' a 4-involution");
  order3_flag->excludes(four_flag);

  std::string level;
  gamma_cmd->add_option("--m", level, "Level m >= 2")->required();

  std::string suite;
  std::size_t n = 0, trials = 0;
  std::uint64_t seed = 0;
  bool serial = false, no_timing = false;
  verify_cmd->add_option("--suite", suite, "Suite id")->required();
  verify_cmd->add_option("--n", n, "Rank")->required();
  verify_cmd->add_option("--trials", trials, "Number of trials")->required();
  verify_cmd->add_option("--seed", seed, "Seed")->required();
  verify_cmd->add_flag("--serial", serial, "Use the serial reference loop");
  verify_cmd->add_flag("--no-timing", no_timing, "Omit elapsed_ms");

  std::vector<std::string> argv_store{"autz"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "autz: " << e.what() << '\n';
    return exit_parse;
  }

  try {
    json result;
    int code = exit_ok;
    if (classify_cmd->parsed()) {
      result = classify_report(read_matrix(file, in));
    } else if (canon_cmd->parsed()) {
      result = canon_report(read_matrix(file, in));
    } else if (factor_cmd->parsed()) {
      result = factor_report(read_matrix(file, in));
    } else if (lift_cmd->parsed()) {
      if (!row.empty()) {
        const IntMatrix m = lift_row_to_sl3(parse_integer_arg(row[0], "a"), parse_integer_arg(row[1], "c"));
        result = {{"M", matrix_to_json(m)}, {"det", integer_to_json(determinant(m))}};
      } else if (mod2) {
        const Gf2Matrix mbar = reduce_mod2(read_matrix(file, in));
        const IntMatrix m = lift_mod2(mbar);
        result = {{"M", matrix_to_json(m)},
                  {"det", integer_to_json(determinant(m))},
                  {"reduces_to_input", reduce_mod2(m) == mbar}};
      } else {
        err << "autz: lift needs --mod2 or --row a c\n";
        return exit_parse;
      }
    } else if (witness_cmd->parsed()) {
      if (!order3 && !four) {
        err << "autz: witness needs --order3 or --four\n";
        return exit_parse;
      }
      const IntMatrix p = read_matrix(file, in);
      const IntMatrix w = order3 ? order3_witness(p) : four_involution_witness(p);
      const IntMatrix prod = p * w;
      result = {{"witness", matrix_to_json(w)}, {"product", matrix_to_json(prod)}};
      if (order3) {
        const auto order = element_order(prod, 3);
        result["order"] = order ? json(*order) : json(nullptr);
      } else {
        const InvolutionKind kind = classify(prod);
        result["kind"] = kind.name();
        result["gamma"] = kind.gamma;
      }
    } else if (gamma_cmd->parsed()) {
      const Integer m = parse_integer_arg(level, "--m");
      result = {{"m", integer_to_json(m)}, {"member", in_gamma(read_matrix(file, in), m)}};
    } else if (identities_cmd->parsed()) {
      try {
        result = identities_report();
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
        err << "autz: " << e.what() << '\n';
        return exit_suite_failure;
      }
    } else if (verify_cmd->parsed()) {
      const auto id = parse_suite_id(suite);
      if (!id) {
        err << "autz: unknown suite " << suite << '\n';
        return exit_parse;
      }
      const SuiteReport rep = run_suite(*id, n, trials, seed, serial ? Execution::serial : Execution::parallel);
      result = to_json(rep, !no_timing);
      if (!rep.passed()) code = exit_suite_failure;
    }
    out << result.dump(2) << '\n';
    return code;
  } catch (const document_error& e) {
    err << "autz: " << e.what() << '\n';
    return exit_parse;
  } catch (const precondition_error& e) {
    err << "autz: " << e.what() << '\n';
    return exit_precondition;
  }
}

}  // namespace autz
