// Command-line front end: expression parsing over the supported algebras and
// subcommands for normal forms, minor-ideal reductions, the tensor-space
// homomorphism, coinvariants, torus weights, commutation scalars, the
// H-prime spectrum, quotient isomorphism checks, and the verification
// oracle. Output is deterministic byte-for-byte for fixed inputs and flags.

#include "qmat/detid.hpp"
#include "qmat/hspec.hpp"
#include "qmat/maps.hpp"
#include "qmat/oracle.hpp"
#include "qmat/parse.hpp"
#include "qmat/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <mutex>
#include <functional>
#include <iostream>
#include <thread>

using nlohmann::json;
using namespace qmat;

namespace {

struct Options {
  int m = 2;
  int n = 2;
  int max_degree = 4;
  std::string format = "text";
  std::string q_value;  // optional specialization, rational literal
};

bool has_specialization(const Options& opt) { return !opt.q_value.empty(); }

Rational specialization(const Options& opt) { return rational_from_string(opt.q_value); }

NCPoly maybe_specialize(NCPoly p, const Options& opt) {
  if (!has_specialization(opt)) return p;
  return specialize_poly(p, specialization(opt));
}

Laurent maybe_specialize(const Laurent& c, const Options& opt) {
  if (!has_specialization(opt)) return c;
  return Laurent(c.specialize(specialization(opt)));
}

void print_poly(const NCPoly& p, const Options& opt) {
  if (opt.format == "json")
    std::cout << poly_to_json(p).dump(2) << "\n";
  else
    std::cout << to_pretty(p) << "\n";
}

json pair_to_json(const IdealPair& p, int m, int n) {
  return {{"id", hasse_node_id(p)},
          {"I", p.I},
          {"J", p.J},
          {"maximal", p.maximal},
          {"label", hasse_node_label(p, m, n)}};
}

json iso_report_to_json(const QuotientIsoReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"pair", pair_to_json(rep.pair, rep.m, rep.n)}, {"m", rep.m},        {"n", rep.n},
          {"m_prime", rep.m_prime},                       {"n_prime", rep.n_prime},
          {"checks", checks},                             {"pass", rep.pass}};
}

// ---- verify ----------------------------------------------------------------

struct VerifyCase {
  std::string check;
  int m = 0, n = 0, d = 0;
};

json run_verify_case(const VerifyCase& vc, const Options& opt) {
  // --max-degree overrides the degree cap; the m,n caps stay at their
  // defaults, so oversized grids fail with an explicit cap error.
  OracleCaps caps;
  caps.max_d = std::max(caps.max_d, opt.max_degree);
  json rep{{"check", vc.check}, {"m", vc.m}, {"n", vc.n}, {"d", vc.d}};
  if (vc.check == "pbw") {
    auto alg = Algebra::quantum_matrix(vc.m, vc.n);
    const std::uint64_t enumerated = pbw_words(*alg, vc.d).size();
    const std::uint64_t formula = component_dimension(*alg, vc.d);
    rep["expected"] = enumerated;
    rep["got"] = formula;
    rep["pass"] = enumerated == formula;
  } else if (vc.check == "theta-kernel") {
    KernelReport kr = kernel_equals_i1(vc.m, vc.n, vc.d, caps);
    rep["expected"] = kr.i1_span_dim;
    rep["got"] = kr.theta_kernel_dim;
    rep["contained"] = kr.contained;
    rep["pass"] = kr.equal;
  } else if (vc.check == "s-basis") {
    SBasisReport sr = verify_s_basis(vc.m, vc.n, vc.d, caps);
    rep["expected"] = sr.expected_rank;
    rep["got"] = sr.rank;
    rep["injective"] = sr.injective_on_s_words;
    rep["pass"] = sr.pass;
  } else if (vc.check == "coinv") {
    CoinvariantReport cr = verify_coinvariants(vc.m, vc.n, vc.d, caps);
    rep["expected"] = cr.coinvariant_dim;
    rep["got"] = cr.image_dim;
    rep["off_diagonal_zero"] = cr.off_diagonal_zero;
    rep["pass"] = cr.pass;
  } else if (vc.check == "lemma33") {
    auto qm = Algebra::quantum_matrix(vc.m, vc.n);
    int failures = 0;
    for (int i = 1; i <= vc.m; ++i)
      for (int j = 1; j <= vc.n; ++j)
        for (int s = 1; s <= vc.m; ++s)
          for (int t = 1; t <= vc.n; ++t) {
            const CommutationScalars cs = scalar_commutator(i, j, s, t);
            const Laurent q2 = Laurent::q_power(2), qi2 = Laurent::q_power(-2);
            const Laurent q1 = Laurent::q_power(1), qi1 = Laurent::q_power(-1);
            const bool alpha_ok = cs.alpha.is_one() || cs.alpha == q1 || cs.alpha == qi1 ||
                                  cs.alpha == q2 || cs.alpha == qi2;
            const bool beta_ok = cs.beta.is_one() || cs.beta == q1 || cs.beta == qi1;
            auto X = [&](int a, int b) {
              return NCPoly::generator(qm, GeneratorId::matrix_entry(a, b));
            };
            const NCPoly lhs = multiply(X(i, j), X(s, t));
            const bool alpha_vanishes =
                reduce_mod_i1(lhs - multiply(X(s, t), X(i, j)).scaled(cs.alpha)).is_zero();
            const bool beta_vanishes =
                reduce_mod_i1(lhs - multiply(X(i, t), X(s, j)).scaled(cs.beta)).is_zero();
            if (!(alpha_ok && beta_ok && alpha_vanishes && beta_vanishes)) ++failures;
          }
    rep["expected"] = 0;
    rep["got"] = failures;
    rep["pass"] = failures == 0;
  } else {
    throw std::invalid_argument("unknown verify check: " + vc.check);
  }
  return rep;
}

std::vector<json> run_verify_cases(const std::vector<VerifyCase>& cases, const Options& opt) {
  std::vector<json> out(cases.size());
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || cases.size() <= 1) {
    for (std::size_t k = 0; k < cases.size(); ++k) out[k] = run_verify_case(cases[k], opt);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < cases.size();) {
      try {
        out[k] = run_verify_case(cases[k], opt);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const std::size_t count = std::min<std::size_t>(hw, cases.size());
  for (std::size_t k = 0; k < count; ++k) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

int run_verify(const std::string& which, const Options& opt) {
  std::vector<VerifyCase> cases;
  auto grid = [&](const std::string& check, int maxd) {
    for (int mm = 1; mm <= opt.m; ++mm)
      for (int nn = 1; nn <= opt.n; ++nn)
        for (int d = 0; d <= maxd; ++d) cases.push_back({check, mm, nn, d});
  };
  if (which == "pbw" || which == "all") grid("pbw", opt.max_degree);
  if (which == "theta-kernel" || which == "all") grid("theta-kernel", opt.max_degree);
  if (which == "s-basis" || which == "all") grid("s-basis", opt.max_degree);
  if (which == "coinv" || which == "all") grid("coinv", std::min(opt.max_degree, 3));
  if (which == "lemma33" || which == "all") cases.push_back({"lemma33", opt.m, opt.n, 2});

  const std::vector<json> reports = run_verify_cases(cases, opt);
  bool all_pass = true;
  if (opt.format == "json") {
    json arr = json::array();
    for (const json& r : reports) arr.push_back(r);
    std::cout << arr.dump(2) << "\n";
  }
  for (const json& r : reports) {
    if (opt.format != "json")
      std::cout << r["check"].get<std::string>() << " m=" << r["m"] << " n=" << r["n"]
                << " d=" << r["d"] << " expected=" << r["expected"] << " got=" << r["got"]
                << (r["pass"].get<bool>() ? " PASS" : " FAIL") << "\n";
    all_pass = all_pass && r["pass"].get<bool>();
  }
  return all_pass ? 0 : 1;
}

// ---- main ------------------------------------------------------------------

int dispatch(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact computations in the coordinate ring of quantum matrices"};
  app.require_subcommand(1);
  app.add_option("--m", opt.m, "row count of the matrix algebra")->check(CLI::PositiveNumber);
  app.add_option("--n", opt.n, "column count of the matrix algebra")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", opt.max_degree, "degree bound for verification grids")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--q", opt.q_value, "specialize q to this rational in outputs");

  int exit_code = 0;

  std::string expr_text;
  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", expr_text)->required();
  nf->callback([&] {
    auto alg = Algebra::quantum_matrix(opt.m, opt.n);
    print_poly(maybe_specialize(parse_expression(expr_text, alg), opt), opt);
  });

  auto* nfmod = app.add_subcommand("nf-mod-i1", "reduce modulo the 2x2 quantum minor ideal");
  nfmod->add_option("expr", expr_text)->required();
  nfmod->callback([&] {
    auto alg = Algebra::quantum_matrix(opt.m, opt.n);
    print_poly(maybe_specialize(reduce_mod_i1(parse_expression(expr_text, alg)), opt), opt);
  });

  std::vector<int> rows_opt, cols_opt;
  auto* minor = app.add_subcommand("minor", "quantum minor D(I,J)");
  minor->add_option("--rows", rows_opt, "row subset")->required()->delimiter(',');
  minor->add_option("--cols", cols_opt, "column subset")->required()->delimiter(',');
  minor->callback([&] {
    auto alg = Algebra::quantum_matrix(opt.m, opt.n);
    print_poly(maybe_specialize(quantum_minor(alg, {rows_opt, cols_opt}), opt), opt);
  });

  auto* det = app.add_subcommand("det", "quantum determinant (m = n)");
  det->callback([&] {
    if (opt.m != opt.n) throw std::invalid_argument("quantum determinant needs m = n");
    auto alg = Algebra::quantum_matrix(opt.m, opt.n);
    std::vector<int> all(opt.m);
    for (int i = 0; i < opt.m; ++i) all[i] = i + 1;
    print_poly(maybe_specialize(quantum_minor(alg, {all, all}), opt), opt);
  });

  auto* th = app.add_subcommand("theta", "image in the tensor of quantum affine spaces");
  th->add_option("expr", expr_text)->required();
  th->callback([&] {
    auto alg = Algebra::quantum_matrix(opt.m, opt.n);
    print_poly(maybe_specialize(theta(parse_expression(expr_text, alg)), opt), opt);
  });

  auto* coinv = app.add_subcommand("coinv", "coinvariant test and preimage for a tensor element");
  coinv->add_option("expr", expr_text)->required();
  coinv->callback([&] {
    auto tensor = Algebra::tensor_affine(opt.m, opt.n);
    NCPoly p = parse_expression(expr_text, tensor);
    CoinvariantCheck check = coinvariant_check(p);
    if (opt.format == "json") {
      json out{{"coinvariant", check.coinvariant}};
      out["witness"] = check.witness ? word_to_json(*tensor, *check.witness) : json();
      if (check.coinvariant) {
        auto qm = Algebra::quantum_matrix(opt.m, opt.n);
        out["preimage"] = poly_to_json(maybe_specialize(coinvariant_preimage(p, qm), opt));
      } else {
        out["preimage"] = json();
      }
      std::cout << out.dump(2) << "\n";
      return;
    }
    if (check.coinvariant) {
      auto qm = Algebra::quantum_matrix(opt.m, opt.n);
      std::cout << "coinvariant: true\npreimage: "
                << to_pretty(maybe_specialize(coinvariant_preimage(p, qm), opt)) << "\n";
    } else {
      std::string name;
      for (Gen g : *check.witness) {
        if (!name.empty()) name += "*";
        name += tensor->gen_name(g);
      }
      std::cout << "coinvariant: false\nwitness: " << (name.empty() ? "1" : name) << "\n";
    }
  });

  auto* weights = app.add_subcommand("weights", "torus weight of every term");
  weights->add_option("expr", expr_text)->required();
  weights->callback([&] {
    auto alg = Algebra::quantum_matrix(opt.m, opt.n);
    NCPoly p = parse_expression(expr_text, alg);
    json arr = json::array();
    for (const auto& [w, c] : p.sorted_terms()) {
      (void)c;
      TorusWeight tw = h_weight(*alg, w);
      if (opt.format == "json") {
        arr.push_back({{"word", word_to_json(*alg, w)}, {"rows", tw.rows}, {"cols", tw.cols}});
      } else {
        std::string name;
        for (Gen g : w) {
          if (!name.empty()) name += "*";
          name += alg->gen_name(g);
        }
        std::cout << (name.empty() ? "1" : name) << "  rows=[";
        for (std::size_t k = 0; k < tw.rows.size(); ++k)
          std::cout << (k ? "," : "") << tw.rows[k];
        std::cout << "] cols=[";
        for (std::size_t k = 0; k < tw.cols.size(); ++k)
          std::cout << (k ? "," : "") << tw.cols[k];
        std::cout << "]\n";
      }
    }
    if (opt.format == "json") std::cout << arr.dump(2) << "\n";
  });

  int ci = 1, cj = 1, cs = 1, ct = 1;
  auto* comm = app.add_subcommand("commutator", "commutation scalars modulo the minor ideal");
  comm->add_option("--i", ci)->required();
  comm->add_option("--j", cj)->required();
  comm->add_option("--s", cs)->required();
  comm->add_option("--t", ct)->required();
  comm->callback([&] {
    if (ci > opt.m || cs > opt.m || cj > opt.n || ct > opt.n)
      throw std::invalid_argument("generator index out of range for the chosen algebra");
    const CommutationScalars res = scalar_commutator(ci, cj, cs, ct);
    auto qm = Algebra::quantum_matrix(opt.m, opt.n);
    auto X = [&](int a, int b) { return NCPoly::generator(qm, GeneratorId::matrix_entry(a, b)); };
    const NCPoly lhs = multiply(X(ci, cj), X(cs, ct));
    const bool alpha_vanishes =
        reduce_mod_i1(lhs - multiply(X(cs, ct), X(ci, cj)).scaled(res.alpha)).is_zero();
    const bool beta_vanishes =
        reduce_mod_i1(lhs - multiply(X(ci, ct), X(cs, cj)).scaled(res.beta)).is_zero();
    const Laurent alpha = maybe_specialize(res.alpha, opt), beta = maybe_specialize(res.beta, opt);
    if (opt.format == "json") {
      json out{{"i", ci},
               {"j", cj},
               {"s", cs},
               {"t", ct},
               {"alpha", alpha.str()},
               {"beta", beta.str()},
               {"alpha_vanishes", alpha_vanishes},
               {"beta_vanishes", beta_vanishes}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "alpha = " << pretty_laurent(alpha) << "\nbeta = " << pretty_laurent(beta)
                << "\nalpha identity vanishes mod I1: " << (alpha_vanishes ? "yes" : "no")
                << "\nbeta identity vanishes mod I1: " << (beta_vanishes ? "yes" : "no") << "\n";
    }
  });

  auto* hp = app.add_subcommand("hprimes", "torus-invariant primes containing the minor ideal");
  hp->require_subcommand(1);
  auto* hp_list = hp->add_subcommand("list", "list all ideal pairs");
  hp_list->callback([&] {
    const auto pairs = enumerate_hprimes(opt.m, opt.n);
    if (opt.format == "json") {
      json arr = json::array();
      for (const auto& p : pairs) arr.push_back(pair_to_json(p, opt.m, opt.n));
      std::cout << json{{"m", opt.m}, {"n", opt.n}, {"ideals", arr}}.dump(2) << "\n";
    } else {
      for (const auto& p : pairs)
        std::cout << hasse_node_id(p) << "\t" << hasse_node_label(p, opt.m, opt.n) << "\n";
    }
  });
  auto* hp_count = hp->add_subcommand("count", "number of such primes");
  hp_count->callback([&] {
    const auto pairs = enumerate_hprimes(opt.m, opt.n);
    if (opt.format == "json")
      std::cout << json{{"m", opt.m}, {"n", opt.n}, {"count", pairs.size()}}.dump(2) << "\n";
    else
      std::cout << pairs.size() << "\n";
  });
  auto* hp_hasse = hp->add_subcommand("hasse", "covering relations of the containment order");
  hp_hasse->callback([&] {
    const HasseDiagram h = hasse_diagram(opt.m, opt.n);
    if (opt.format == "json") {
      json nodes = json::array(), edges = json::array();
      for (const auto& p : h.nodes) nodes.push_back(pair_to_json(p, h.m, h.n));
      for (const auto& [a, b] : h.edges)
        edges.push_back({{"from", hasse_node_id(h.nodes[a])}, {"to", hasse_node_id(h.nodes[b])}});
      std::cout << json{{"m", h.m}, {"n", h.n}, {"nodes", nodes}, {"edges", edges}}.dump(2) << "\n";
    } else if (opt.format == "dot") {
      std::cout << hasse_to_dot(h);
    } else {
      for (const auto& [a, b] : h.edges)
        std::cout << hasse_node_id(h.nodes[a]) << " < " << hasse_node_id(h.nodes[b]) << "\n";
    }
  });

  std::vector<int> iso_I, iso_J;
  auto* iso = app.add_subcommand("iso-check", "quotient isomorphism onto a smaller matrix algebra");
  iso->add_option("--I", iso_I, "row subset")->delimiter(',');
  iso->add_option("--J", iso_J, "column subset")->delimiter(',');
  iso->callback([&] {
    const IdealPair pair = make_ideal_pair(iso_I, iso_J, opt.m, opt.n);
    const QuotientIsoReport rep = quotient_iso_check(pair, opt.m, opt.n);
    if (opt.format == "json") {
      std::cout << iso_report_to_json(rep).dump(2) << "\n";
    } else {
      for (const auto& c : rep.checks)
        std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL")
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      std::cout << "overall: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    if (!rep.pass) exit_code = 1;
  });

  std::string verify_which;
  auto* verify = app.add_subcommand("verify", "run the truncated linear-algebra oracle");
  verify->add_option("which", verify_which)
      ->required()
      ->check(CLI::IsMember({"pbw", "theta-kernel", "s-basis", "coinv", "lemma33", "all"}));
  verify->callback([&] { exit_code = run_verify(verify_which, opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ParseError& e) {
    std::cout << json{{"error",
                       {{"type", "syntax"}, {"message", e.what()}, {"position", e.position}}}}
                     .dump(2)
              << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cout << json{{"error", {{"type", "cap"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  } catch (const SizeCapError& e) {
    std::cout << json{{"error", {{"type", "cap"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cout << json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }
}
