// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Everything is checked exactly; the stated runtime budgets are enforced
// in-process.

#include "qmat/detid.hpp"
#include "qmat/hspec.hpp"
#include "qmat/maps.hpp"
#include "qmat/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qmat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int index, const char* name, const Outcome& out, double seconds) {
  std::printf("[%2d] %-28s %s (%.2f s)%s%s\n", index, name, out.pass ? "PASS" : "FAIL", seconds,
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
  if (!out.pass) ++failures;
}

template <typename F>
void run(int index, const char* name, double budget_seconds, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = f();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    out.pass = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  report(index, name, out, secs);
}

Word random_word(const Algebra& alg, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, alg.gen_count() - 1);
  Word w(length);
  for (int k = 0; k < length; ++k) w[k] = static_cast<Gen>(pick(rng));
  return w;
}

// 1. PBW dimensions for m=n=2, degrees 0..5.
Outcome pbw_dimensions() {
  auto a = Algebra::quantum_matrix(2, 2);
  const std::uint64_t expected[] = {1, 4, 10, 20, 35, 56};
  for (int d = 0; d <= 5; ++d)
    if (component_dimension(*a, d) != expected[d])
      return {false, "degree " + std::to_string(d) + " mismatch"};
  return {true, ""};
}

// 2. Confluence fuzz: 1000 random words of length <= 6 in O_q(M_3).
Outcome confluence_fuzz() {
  auto a = Algebra::quantum_matrix(3, 3);
  std::mt19937_64 rng(0x5eed0002);
  std::uniform_int_distribution<int> len(0, 6);
  for (int it = 0; it < 1000; ++it) {
    NCPoly p = NCPoly::monomial(a, random_word(*a, len(rng), rng));
    if (normal_form(p, RewriteStrategy::Leftmost) != normal_form(p, RewriteStrategy::Rightmost))
      return {false, "strategies disagree at iteration " + std::to_string(it)};
  }
  return {true, ""};
}

// 3. Kernel of the tensor map equals the truncated minor ideal, m,n <= 3, d <= 4.
Outcome kernel_equals_ideal() {
  const int expected_22[4] = {0, 0, 1, 4};  // kernel dims at d = 0..3 for m=n=2
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d) {
        const KernelReport r = kernel_equals_i1(m, n, d);
        if (!r.equal || !r.contained) {
          std::ostringstream os;
          os << "(" << m << "," << n << "," << d << "): kernel " << r.theta_kernel_dim
             << " vs ideal " << r.i1_span_dim;
          return {false, os.str()};
        }
        if (m == 2 && n == 2 && d <= 3 && r.theta_kernel_dim != expected_22[d])
          return {false, "m=n=2 kernel dimension at d=" + std::to_string(d)};
      }
  return {true, ""};
}

// 4. S-basis rank statements on the same range.
Outcome s_basis_ranks() {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d) {
        const SBasisReport r = verify_s_basis(m, n, d);
        if (!r.pass) {
          std::ostringstream os;
          os << "(" << m << "," << n << "," << d << ")";
          return {false, os.str()};
        }
        if (m == 2 && n == 2 && d == 2 && r.rank != 9) return {false, "rank at (2,2,2) is not 9"};
      }
  return {true, ""};
}

// 5. Coinvariants equal the image, m,n <= 3, d <= 3.
Outcome coinvariants_equal_image() {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 3; ++d) {
        const CoinvariantReport r = verify_coinvariants(m, n, d);
        if (!r.pass || !r.off_diagonal_zero) {
          std::ostringstream os;
          os << "(" << m << "," << n << "," << d << ")";
          return {false, os.str()};
        }
      }
  return {true, ""};
}

// 6. Commutation scalars for all index quadruples in m=n=3.
Outcome commutation_scalars() {
  auto a = Algebra::quantum_matrix(3, 3);
  auto X = [&](int i, int j) { return NCPoly::generator(a, GeneratorId::matrix_entry(i, j)); };
  const Laurent allowed_alpha[] = {Laurent(1), Laurent::q_power(1), Laurent::q_power(-1),
                                   Laurent::q_power(2), Laurent::q_power(-2)};
  const Laurent allowed_beta[] = {Laurent(1), Laurent::q_power(1), Laurent::q_power(-1)};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t) {
          const CommutationScalars cs = scalar_commutator(i, j, s, t);
          bool alpha_ok = false, beta_ok = false;
          for (const Laurent& v : allowed_alpha) alpha_ok = alpha_ok || cs.alpha == v;
          for (const Laurent& v : allowed_beta) beta_ok = beta_ok || cs.beta == v;
          const NCPoly lhs = multiply(X(i, j), X(s, t));
          const bool alpha_vanishes =
              reduce_mod_i1(lhs - multiply(X(s, t), X(i, j)).scaled(cs.alpha)).is_zero();
          const bool beta_vanishes =
              reduce_mod_i1(lhs - multiply(X(i, t), X(s, j)).scaled(cs.beta)).is_zero();
          if (!(alpha_ok && beta_ok && alpha_vanishes && beta_vanishes)) {
            std::ostringstream os;
            os << "quadruple (" << i << "," << j << "," << s << "," << t << ")";
            return {false, os.str()};
          }
        }
  return {true, ""};
}

// 7. H-prime counts match the closed formula for m,n <= 4.
Outcome hprime_counts() {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const std::size_t expected = ((1u << m) - 1) * ((1u << n) - 1) + 1;
      if (enumerate_hprimes(m, n).size() != expected)
        return {false, "count mismatch at (" + std::to_string(m) + "," + std::to_string(n) + ")"};
    }
  if (enumerate_hprimes(2, 2).size() != 10) return {false, "m=n=2 count is not 10"};
  return {true, ""};
}

// 8. Hasse diagram of the ten primes for m=n=2.
Outcome hasse_m2() {
  const HasseDiagram h = hasse_diagram(2, 2);
  if (h.nodes.size() != 10) return {false, "node count"};

  // independent brute force over bitmask pairs: subsets of {1,2}x{1,2} with
  // the maximal pair collapsed, ordered by componentwise inclusion
  struct P {
    unsigned I, J;
    bool max;
  };
  std::vector<P> pairs;
  for (unsigned I = 0; I < 4; ++I)
    for (unsigned J = 0; J < 4; ++J) {
      if (I == 3 || J == 3) continue;
      pairs.push_back({I, J, false});
    }
  pairs.push_back({3, 3, true});
  auto leq = [](const P& a, const P& b) {
    if (b.max) return true;
    if (a.max) return false;
    return (a.I & ~b.I) == 0 && (a.J & ~b.J) == 0;
  };
  std::vector<std::pair<std::string, std::string>> expected_edges;
  auto id_of = [](const P& p) {
    if (p.max) return std::string("M");
    std::string s = "P_";
    for (int k = 0; k < 2; ++k)
      if (p.I & (1u << k)) s += std::to_string(k + 1);
    s += "_";
    for (int k = 0; k < 2; ++k)
      if (p.J & (1u << k)) s += std::to_string(k + 1);
    return s;
  };
  for (const P& a : pairs)
    for (const P& b : pairs) {
      const bool distinct = !(a.I == b.I && a.J == b.J && a.max == b.max);
      if (!distinct || !leq(a, b)) continue;
      bool covering = true;
      for (const P& c : pairs) {
        const bool c_between = leq(a, c) && leq(c, b) && !(c.I == a.I && c.J == a.J && c.max == a.max) &&
                               !(c.I == b.I && c.J == b.J && c.max == b.max);
        if (c_between) covering = false;
      }
      if (covering) expected_edges.emplace_back(id_of(a), id_of(b));
    }
  std::sort(expected_edges.begin(), expected_edges.end());

  std::vector<std::pair<std::string, std::string>> got_edges;
  for (const auto& [x, y] : h.edges)
    got_edges.emplace_back(hasse_node_id(h.nodes[x]), hasse_node_id(h.nodes[y]));
  std::sort(got_edges.begin(), got_edges.end());
  if (got_edges != expected_edges) return {false, "edge sets differ"};

  // bottom is P(empty, empty), top is the maximal pair
  const IdealPair bottom = make_ideal_pair({}, {}, 2, 2);
  for (const IdealPair& p : h.nodes) {
    if (!hprime_leq(bottom, p)) return {false, "bottom is not below everything"};
    if (!hprime_leq(p, h.nodes.back())) return {false, "top is not above everything"};
  }
  if (!h.nodes.back().maximal) return {false, "last node is not maximal"};
  if (hasse_node_label(bottom, 2, 2) != "(□)") return {false, "bottom label"};
  return {true, ""};
}

// 9. Quotient isomorphism checks for every non-maximal pair, m,n <= 3.
Outcome quotient_isomorphisms() {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const IdealPair& p : enumerate_hprimes(m, n)) {
        if (p.maximal) continue;
        const QuotientIsoReport rep = quotient_iso_check(p, m, n);
        if (!rep.pass) {
          std::ostringstream os;
          os << "(" << m << "," << n << ") pair " << hasse_node_id(p);
          return {false, os.str()};
        }
      }
  return {true, ""};
}

// 10. Centrality of the quantum determinant for n = 2, 3.
Outcome centrality() {
  for (int n : {2, 3}) {
    auto a = Algebra::quantum_matrix(n, n);
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k) all[k] = k + 1;
    const NCPoly det = quantum_minor(a, {all, all});
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const NCPoly x = NCPoly::generator(a, GeneratorId::matrix_entry(i, j));
        if (!normal_form(multiply(det, x) - multiply(x, det)).is_zero())
          return {false, "n=" + std::to_string(n) + " generator (" + std::to_string(i) + "," +
                             std::to_string(j) + ")"};
      }
  }
  return {true, ""};
}

// 11. No zero divisors among reduced elements at desk scale.
Outcome domain_behavior() {
  auto a = Algebra::quantum_matrix(2, 2);
  std::mt19937_64 rng(0x5eed000b);
  std::uniform_int_distribution<int> len(0, 3), coeff(-3, 3), exp(-2, 2), terms(1, 3);
  auto random_reduced_nonzero = [&] {
    for (;;) {
      NCPoly p(a);
      const int t = terms(rng);
      for (int k = 0; k < t; ++k) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_word(random_word(*a, len(rng), rng), Laurent::q_power(exp(rng), Rational(c)));
      }
      NCPoly r = reduce_mod_i1(p);
      if (!r.is_zero()) return r;
    }
  };
  for (int it = 0; it < 500; ++it) {
    const NCPoly x = random_reduced_nonzero(), y = random_reduced_nonzero();
    if (reduce_mod_i1(multiply(x, y)).is_zero())
      return {false, "zero divisor found at iteration " + std::to_string(it)};
  }
  return {true, ""};
}

}  // namespace

int main() {
  run(1, "pbw-dimensions", 1.0, pbw_dimensions);
  run(2, "confluence-fuzz", 10.0, confluence_fuzz);
  run(3, "theta-kernel-equals-i1", 60.0, kernel_equals_ideal);
  run(4, "s-basis-ranks", 0.0, s_basis_ranks);
  run(5, "coinvariants-equal-image", 0.0, coinvariants_equal_image);
  run(6, "commutation-scalars", 10.0, commutation_scalars);
  run(7, "hprime-count-formula", 0.0, hprime_counts);
  run(8, "hasse-diagram-2x2", 0.0, hasse_m2);
  run(9, "quotient-isomorphisms", 0.0, quotient_isomorphisms);
  run(10, "determinant-centrality", 0.0, centrality);
  run(11, "domain-at-desk-scale", 0.0, domain_behavior);
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
