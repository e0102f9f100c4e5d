#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "tutte/check_report.hpp"
#include "tutte/graph.hpp"
#include "tutte/multipoly.hpp"
#include "tutte/series.hpp"

namespace tutte {

/// Cap on brute-force edge-subset enumeration, overridable through the
/// environment.
inline int max_brute_edges() {
  if (const char* s = std::getenv("TUTTE_MAX_BRUTE_EDGES")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 24;
}

namespace detail {

inline void check_subset_budget(const MultiGraph& g) {
  int cap = max_brute_edges();
  if (g.m() > cap)
    throw resource_error(
        "graph has " + std::to_string(g.m()) +
        " edges; raise TUTTE_MAX_BRUTE_EDGES (currently " +
        std::to_string(cap) + ") to enumerate subsets anyway");
  if (g.m() > 62) throw resource_error("more than 62 edges is unsupported");
  if (g.n() > 31) throw resource_error("more than 31 vertices is unsupported");
}

/// Visits every edge subset in Gray-code order: mask = i ^ (i >> 1). The
/// callback receives the subset mask.
template <typename F>
void for_each_edge_subset(const MultiGraph& g, F&& fn) {
  check_subset_budget(g);
  unsigned long long count = 1ull << g.m();
  for (unsigned long long i = 0; i < count; ++i) fn(i ^ (i >> 1));
}

inline MultiPoly subset_weight(const MultiGraph& g,
                               unsigned long long edgeMask) {
  MultiPoly w(1);
  for (int e = 0; e < g.m(); ++e)
    if (edgeMask >> e & 1) w *= g.edges()[e].weight;
  return w;
}

}  // namespace detail

/// A graph partition function together with the fingerprint of the graph it
/// was computed from.
struct TuttePolynomial {
  MultiPoly value;
  std::string source;
};

/// Sum over all edge subsets A of q^{k(A)} times the weight of A, where k(A)
/// counts connected components on the full vertex set.
inline TuttePolynomial z_subset(const MultiGraph& g) {
  Variable q("q");
  MultiPoly total;
  detail::for_each_edge_subset(g, [&](unsigned long long mask) {
    total += MultiPoly::var(q, g.count_components(mask)) *
             detail::subset_weight(g, mask);
  });
  return TuttePolynomial{total, g.fingerprint()};
}

/// Same sum with exponent k(A) - 1. Needs at least one vertex.
inline MultiPoly zhat(const MultiGraph& g) {
  if (g.n() == 0)
    throw std::invalid_argument("zhat needs a nonempty vertex set");
  Variable q("q");
  MultiPoly total;
  detail::for_each_edge_subset(g, [&](unsigned long long mask) {
    total += MultiPoly::var(q, g.count_components(mask) - 1) *
             detail::subset_weight(g, mask);
  });
  return total;
}

/// Generating polynomial of connected spanning subgraphs.
inline MultiPoly connected_poly(const MultiGraph& g) {
  if (g.n() == 0)
    throw std::invalid_argument("connected_poly needs a nonempty vertex set");
  MultiPoly total;
  detail::for_each_edge_subset(g, [&](unsigned long long mask) {
    if (g.count_components(mask) == 1)
      total += detail::subset_weight(g, mask);
  });
  return total;
}

/// Connected spanning subgraphs graded by cycle rank: sum over connected A
/// of lambda^(|A| - |V| + 1) times the weight of A.
inline MultiPoly connected_lambda(const MultiGraph& g) {
  if (g.n() == 0)
    throw std::invalid_argument("connected_lambda needs a nonempty vertex set");
  Variable lambda("lambda");
  MultiPoly total;
  detail::for_each_edge_subset(g, [&](unsigned long long mask) {
    if (g.count_components(mask) == 1)
      total += MultiPoly::var(lambda, g.cyclomatic(mask)) *
               detail::subset_weight(g, mask);
  });
  return total;
}

/// Direct q-state sum: over all maps sigma from vertices to {1..q}, the
/// product over edges of (1 + v_e [sigma(a) = sigma(b)]). Agrees with
/// z_subset at integer q by the subset expansion.
inline MultiPoly z_coloring(const MultiGraph& g, int q) {
  if (q < 1) throw std::invalid_argument("z_coloring needs q >= 1");
  double states = 1;
  for (int i = 0; i < g.n(); ++i) states *= q;
  if (states > (double)(1 << 24))
    throw resource_error("too many colorings to enumerate");
  MultiPoly total;
  std::vector<int> sigma(g.n(), 0);
  for (;;) {
    MultiPoly term(1);
    for (const auto& e : g.edges())
      if (sigma[e.a] == sigma[e.b]) term *= MultiPoly(1) + e.weight;
    total += term;
    int i = g.n() - 1;
    while (i >= 0 && sigma[i] == q - 1) sigma[i--] = 0;
    if (i < 0) break;
    ++sigma[i];
  }
  return total;
}

/// Chromatic polynomial in q: the subset sum with every edge weight -1.
inline MultiPoly chromatic(const MultiGraph& g) {
  MultiGraph h(g.vertex_ids());
  for (const auto& e : g.edges()) h.add_edge(e.a, e.b, MultiPoly(-1));
  return z_subset(h).value;
}

/// Q_G(k) for k = 1..|V|: the number of partitions of the vertex set into
/// exactly k blocks, each of which spans no edge.
inline std::vector<Integer> independent_partition_counts(const MultiGraph& g) {
  std::vector<Integer> counts(g.n(), 0);
  for (const auto& pi : enumerate_partitions(g.vertex_ids())) {
    const auto& rgs = pi.rgs();
    bool ok = true;
    for (const auto& e : g.edges())
      if (rgs[e.a] == rgs[e.b]) {
        ok = false;
        break;
      }
    if (ok) ++counts[pi.block_count() - 1];
  }
  return counts;
}

/// Independent-set generating series: one term per independent vertex subset,
/// in variables x:<id> with per-variable cap 1. Requires a loopless graph.
inline TruncatedSeries independence_poly(const MultiGraph& g) {
  if (g.has_loops())
    throw std::invalid_argument("independence_poly needs a loopless graph");
  if (g.n() > 31) throw resource_error("more than 31 vertices is unsupported");
  std::vector<Variable> vars;
  for (const auto& id : g.vertex_ids()) vars.emplace_back("x:" + id);
  TruncatedSeries s = TruncatedSeries::with_var_caps(
      vars, std::vector<int>(g.n(), 1));
  for (unsigned mask = 0; mask < (1u << g.n()); ++mask) {
    bool independent = true;
    for (const auto& e : g.edges())
      if ((mask >> e.a & 1) && (mask >> e.b & 1)) {
        independent = false;
        break;
      }
    if (!independent) continue;
    std::vector<int> e(g.n(), 0);
    for (int i = 0; i < g.n(); ++i) e[i] = mask >> i & 1;
    s.set_coeff(e, MultiPoly(1));
  }
  return s;
}

/// Chromatic polynomial of the subgraph induced by the vertex mask, read off
/// as the coefficient of the squarefree monomial of W in the q-th symbolic
/// power of the independent-set series.
inline MultiPoly lass_chromatic(const MultiGraph& g, unsigned vertexMask) {
  TruncatedSeries p = independence_poly(g).pow_symbolic(MultiPoly::var("q"));
  std::vector<int> e(g.n(), 0);
  for (int i = 0; i < g.n(); ++i) e[i] = vertexMask >> i & 1;
  return p.coeff(e);
}

/// Verifies the alternating-sign property of the cycle-rank expansion: with
/// every edge weight in [-1,0], (-1)^(l + |V| - 1) d^l/dlambda^l of
/// connected_lambda is nonnegative on the given lambda grid in [0,1].
inline CheckReport check_sign_inequality(const MultiGraph& g,
                                         const std::vector<Rational>& values,
                                         int lmax,
                                         const std::vector<Rational>& grid) {
  if ((int)values.size() != g.m())
    throw std::invalid_argument("one weight value per edge required");
  for (const auto& v : values)
    if (v < -1 || v > 0)
      throw std::invalid_argument("edge values must lie in [-1,0]");
  for (const auto& l : grid)
    if (l < 0 || l > 1)
      throw std::invalid_argument("lambda grid must lie in [0,1]");
  MultiGraph h(g.vertex_ids());
  for (int i = 0; i < g.m(); ++i)
    h.add_edge(g.edges()[i].a, g.edges()[i].b, MultiPoly(values[i]));
  Variable lambda("lambda");
  MultiPoly c = connected_lambda(h);
  CheckBuilder out("sign_inequality");
  out.member(g.fingerprint());
  int signBase = (g.n() - 1) % 2;  // parity of |V| - 1
  for (int l = 0; l <= lmax; ++l) {
    int sign = (l + signBase) % 2 == 0 ? 1 : -1;
    for (const auto& point : grid) {
      Rational value = c.eval({{lambda, point}});
      Rational signedValue = sign * value;
      out.require(signedValue >= 0,
                  "l=" + std::to_string(l) + " lambda=" + rational_str(point),
                  rational_str(signedValue));
    }
    c = c.derivative(lambda);
  }
  return out.finish();
}

}  // namespace tutte
