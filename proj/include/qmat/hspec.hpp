#pragma once
// Torus-invariant prime ideals of the quantum matrix algebra that contain
// the 2x2-minor ideal: the pairs P(I,J), their scalar-commutation data, the
// full enumeration with the closed count, the containment order with its
// Hasse diagram, and the generator-level check of the quotient isomorphism
// onto a smaller quantum matrix algebra.

#include "qmat/algebra.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace qmat {

struct IdealPair {
  std::vector<int> I;    // ascending subset of {1..m}
  std::vector<int> J;    // ascending subset of {1..n}
  bool maximal = false;  // stored as (full, full) when I or J was full
};

// Canonicalizes: a pair with a full row set or full column set is the
// maximal ideal and is stored as (full, full).
IdealPair make_ideal_pair(std::vector<int> I, std::vector<int> J, int m, int n);

// The 2x2 minors together with every X[i,j] with i in I or j in J.
std::vector<NCPoly> p_ideal_generators(const IdealPair& pair, const AlgebraPtr& qm);

struct CommutationScalars {
  Laurent alpha;  // X[i,j]X[s,t] - alpha X[s,t]X[i,j] lies in the minor ideal
  Laurent beta;   // X[i,j]X[s,t] - beta  X[i,t]X[s,j] lies in the minor ideal
};

// Case ladder on the index pattern; alpha in {1, q^{+-1}, q^{+-2}},
// beta in {1, q^{+-1}}.
CommutationScalars scalar_commutator(int i, int j, int s, int t);

// All canonical pairs; count is (2^m - 1)(2^n - 1) + 1.
std::vector<IdealPair> enumerate_hprimes(int m, int n);

// Containment order: b maximal, or componentwise subset.
bool hprime_leq(const IdealPair& a, const IdealPair& b);

// Same relation decided semantically: every generator of a reduces to zero
// in the quotient model of b (kill rows/columns, reduce modulo the smaller
// minor ideal).
bool hprime_leq_semantic(const IdealPair& a, const IdealPair& b, int m, int n);

// Membership of p in P(I,J) via the quotient-model reduction.
bool in_p_ideal(const NCPoly& p, const IdealPair& pair, int m, int n);

// Image of p under killing rows I / columns J and re-indexing, reduced
// modulo the 2x2-minor ideal of the smaller algebra. Pair must not be
// maximal.
NCPoly quotient_model_reduce(const NCPoly& p, const IdealPair& pair, const AlgebraPtr& small_qm);
AlgebraPtr quotient_model_algebra(const IdealPair& pair, int m, int n);

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HasseDiagram {
  int m = 0, n = 0;
  std::vector<IdealPair> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // from smaller to larger ideal
};

HasseDiagram hasse_diagram(int m, int n, std::size_t cap = 512);

// Stable node id: "M" for the maximal ideal, else "P_<I>_<J>" with the
// indices of each set concatenated (e.g. P_12_3 for I={1,2}, J={3}).
std::string hasse_node_id(const IdealPair& pair);
// m=n=2 uses the filled/empty-dot pictographs with "(□)" for the bottom;
// other sizes are labelled "({...},{...})".
std::string hasse_node_label(const IdealPair& pair, int m, int n);
std::string hasse_to_dot(const HasseDiagram& h);

struct QuotientIsoReport {
  IdealPair pair;
  int m = 0, n = 0;
  int m_prime = 0, n_prime = 0;
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  bool pass = false;
};

// Generator-level verification that the factor by P(I,J) is the smaller
// quantum matrix algebra modulo its own minor ideal: the kill-and-reindex
// map annihilates every generator of P(I,J), and the two induced maps
// compose to the identity on generating cosets both ways.
QuotientIsoReport quotient_iso_check(const IdealPair& pair, int m, int n);

}  // namespace qmat
