#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tutte/binomial.hpp"
#include "tutte/check_report.hpp"
#include "tutte/multipoly.hpp"
#include "tutte/partitions.hpp"
#include "tutte/series.hpp"

namespace tutte {

/// Polynomial sequence indexed from `start`.
struct PolySequence {
  int start = 0;
  std::vector<MultiPoly> entries;

  const MultiPoly& at(int n) const {
    if (n < start || n - start >= (int)entries.size())
      throw std::out_of_range("sequence index " + std::to_string(n));
    return entries[n - start];
  }
  int last() const { return start + (int)entries.size() - 1; }
};

namespace detail {

/// (1+v)^e in the single shared edge variable of the complete-graph model.
inline MultiPoly edge_pow(long e) {
  return (MultiPoly(1) + MultiPoly::var("v")).pow((int)e);
}

inline Integer choose2(long n) { return binomial(n, 2); }

}  // namespace detail

/// Connected-subgraph polynomials C_1..C_N of the complete graphs, computed
/// by peeling the component of a fixed vertex:
///   C_n = (1+v)^C(n,2) - sum_{k=1}^{n-1} C(n-1,k-1) C_k (1+v)^C(n-k,2).
inline PolySequence cn_linear(int N) {
  PolySequence s{1, {}};
  for (int n = 1; n <= N; ++n) {
    MultiPoly cn = detail::edge_pow(detail::choose2(n).get_si());
    for (int k = 1; k < n; ++k)
      cn -= binomial(n - 1, k - 1) *
            (s.at(k) * detail::edge_pow(detail::choose2(n - k).get_si()));
    s.entries.push_back(cn);
  }
  return s;
}

/// Same sequence through the two-point recursion, quadratic in earlier
/// entries: C_n = sum_{k=1}^{n-1} C(n-2,k-1) [(1+v)^k - 1] C_k C_{n-k}.
inline PolySequence cn_nonlinear(int N) {
  PolySequence s{1, {MultiPoly(1)}};
  for (int n = 2; n <= N; ++n) {
    MultiPoly cn;
    for (int k = 1; k < n; ++k)
      cn += binomial(n - 2, k - 1) *
            ((detail::edge_pow(k) - MultiPoly(1)) * s.at(k) * s.at(n - k));
    s.entries.push_back(cn);
  }
  return s;
}

enum class ZnRoute { from_connected, direct, two_point };

/// Partition functions Z_0..Z_N of the complete graphs.
///   from_connected:  Z_n = sum_k C(n-1,k-1) q C_k Z_{n-k}
///   direct:          Z_n = sum_k [C(n-1,k-1)(1+q) - C(n,k)]
///                          (1+v)^C(k,2) Z_{n-k}
///   two_point:       Z_n = sum_{k<n} C(n-2,k-1) [q + (1+v)^k - 1] C_k Z_{n-k}
inline PolySequence zn_sequence(int N, ZnRoute route) {
  PolySequence s{0, {MultiPoly(1)}};
  MultiPoly q = MultiPoly::var("q");
  PolySequence c;
  if (route != ZnRoute::direct) c = cn_linear(std::max(N, 1));
  if (route == ZnRoute::two_point && N >= 1) s.entries.push_back(q);
  for (int n = (int)s.entries.size(); n <= N; ++n) {
    MultiPoly zn;
    switch (route) {
      case ZnRoute::from_connected:
        for (int k = 1; k <= n; ++k)
          zn += binomial(n - 1, k - 1) * (q * c.at(k) * s.at(n - k));
        break;
      case ZnRoute::direct:
        for (int k = 1; k <= n; ++k) {
          MultiPoly weight = Integer(binomial(n - 1, k - 1)) * (MultiPoly(1) + q) -
                             MultiPoly(binomial(n, k));
          zn += weight * detail::edge_pow(detail::choose2(k).get_si()) *
                s.at(n - k);
        }
        break;
      case ZnRoute::two_point:
        for (int k = 1; k < n; ++k)
          zn += binomial(n - 2, k - 1) *
                ((q + detail::edge_pow(k) - MultiPoly(1)) * c.at(k) *
                 s.at(n - k));
        break;
    }
    s.entries.push_back(zn);
  }
  return s;
}

/// The complete-graph sequence as a binomial-type family in q:
/// a_n = Z_n(q,v) and ahat_n = sum_k C(n-1,k-1) C_k Z_{n-k}, so that the
/// whole convolution machinery applies to it.
inline BinomialFamily zn_family(int N) {
  BinomialFamily f({N});
  PolySequence z = zn_sequence(N, ZnRoute::from_connected);
  PolySequence c = cn_linear(std::max(N, 1));
  f.set_entry({0}, MultiPoly(1), MultiPoly());
  for (int n = 1; n <= N; ++n) {
    MultiPoly ahat;
    for (int k = 1; k <= n; ++k)
      ahat += binomial(n - 1, k - 1) * (c.at(k) * z.at(n - k));
    f.set_entry({n}, z.at(n), ahat);
  }
  return f;
}

namespace detail {

/// Labeled tree on n vertices from a length n-2 sequence over [0,n): attach
/// the smallest current leaf to the next sequence entry.
inline std::vector<std::pair<int, int>> tree_from_code(
    const std::vector<int>& code, int n) {
  std::vector<int> deg(n, 1);
  for (int v : code) ++deg[v];
  std::set<int> leaves;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) leaves.insert(i);
  std::vector<std::pair<int, int>> edges;
  for (int v : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1) leaves.insert(v);
  }
  int a = *leaves.begin(), b = *leaves.rbegin();
  edges.emplace_back(a, b);
  return edges;
}

/// Number of vertex pairs with labels j > k > 1 where k lies below j in the
/// tree rooted at label 1 (index 0).
inline int tree_inversions(const std::vector<std::pair<int, int>>& edges,
                           int n) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(n, -1), order, stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int w : adj[u])
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<unsigned> below(n, 0);
  for (int idx = n - 1; idx > 0; --idx) {
    int u = order[idx];
    below[parent[u]] |= below[u] | (1u << u);
  }
  int inv = 0;
  for (int j = 2; j < n; ++j)
    for (int k = 1; k < j; ++k)
      if (below[j] >> k & 1) ++inv;
  return inv;
}

}  // namespace detail

enum class InvRoute { recursion, brute };

/// Tree inversion polynomials I_1..I_N in the variable y.
///   recursion: I_n = sum_{k=1}^{n-1} C(n-2,k-1) (1+y+..+y^{k-1}) I_k I_{n-k}
///   brute:     direct enumeration of all n^{n-2} labeled trees.
inline PolySequence inversion_enumerator(int N, InvRoute route) {
  PolySequence s{1, {}};
  MultiPoly y = MultiPoly::var("y");
  if (route == InvRoute::recursion) {
    s.entries.push_back(MultiPoly(1));
    for (int n = 2; n <= N; ++n) {
      MultiPoly in;
      for (int k = 1; k < n; ++k) {
        MultiPoly geo;
        for (int j = 0; j < k; ++j) geo += y.pow(j);
        in += binomial(n - 2, k - 1) * (geo * s.at(k) * s.at(n - k));
      }
      s.entries.push_back(in);
    }
    return s;
  }
  for (int n = 1; n <= N; ++n) {
    if (n == 1) {
      s.entries.push_back(MultiPoly(1));
      continue;
    }
    MultiPoly in;
    std::vector<int> code(n - 2, 0);
    while (true) {
      in += y.pow(detail::tree_inversions(detail::tree_from_code(code, n), n));
      int i = (int)code.size() - 1;
      while (i >= 0 && code[i] == n - 1) code[i--] = 0;
      if (i < 0) break;
      ++code[i];
    }
    s.entries.push_back(in);
  }
  return s;
}

enum class SeqRoute { partitions, recursion, egf };

/// Partition sum with falling-factorial block count over arbitrary block
/// weights a_1..a_N (a[k-1] holds a_k; the weights must not involve q):
///   Z_n(q;a) = sum over set partitions pi of [n] of
///              q(q-1)..(q-|pi|+1) prod_B a_{|B|}.
/// Routes: the literal partition sum, the block-of-element-1 recursion
/// Z_n(q) = q sum_k C(n-1,k-1) a_k Z_{n-k}(q-1), or the q-th symbolic power
/// of the exponential generating function of the a_n.
inline PolySequence zn_of_weights(const std::vector<MultiPoly>& a, int N,
                                  SeqRoute route) {
  if ((int)a.size() < N)
    throw std::invalid_argument("need block weights a_1..a_N");
  Variable q("q");
  MultiPoly qp = MultiPoly::var(q);
  PolySequence s{0, {MultiPoly(1)}};
  switch (route) {
    case SeqRoute::partitions:
      for (int n = 1; n <= N; ++n) {
        std::vector<std::string> ground;
        for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
        MultiPoly zn;
        for (const auto& pi : enumerate_partitions(ground)) {
          MultiPoly term = falling_factorial(qp, pi.block_count());
          for (int size : pi.block_sizes()) term *= a[size - 1];
          zn += term;
        }
        s.entries.push_back(zn);
      }
      break;
    case SeqRoute::recursion:
      for (int n = 1; n <= N; ++n) {
        MultiPoly zn;
        for (int k = 1; k <= n; ++k)
          zn += binomial(n - 1, k - 1) *
                (a[k - 1] * s.at(n - k).substitute(q, qp - MultiPoly(1)));
        s.entries.push_back(qp * zn);
      }
      break;
    case SeqRoute::egf: {
      TruncatedSeries egf = TruncatedSeries::with_total_cap({Variable("x")}, N);
      egf.set_coeff({0}, MultiPoly(1));
      for (int n = 1; n <= N; ++n)
        egf.set_coeff({n}, MultiPoly(make_rational(Integer(1), factorial(n))) *
                               a[n - 1]);
      TruncatedSeries pw = egf.pow_symbolic(qp);
      for (int n = 1; n <= N; ++n)
        s.entries.push_back(factorial(n) * pw.coeff({n}));
      break;
    }
  }
  return s;
}

/// Partition sum with plain powers of q over connected weights c_1..c_N:
///   Y_n(q;c) = sum over set partitions pi of q^|pi| prod_B c_{|B|}.
/// Routes as above; the recursion keeps q fixed and the generating function
/// is exp(q sum c_n x^n/n!).
inline PolySequence yn_of_weights(const std::vector<MultiPoly>& c, int N,
                                  SeqRoute route) {
  if ((int)c.size() < N)
    throw std::invalid_argument("need connected weights c_1..c_N");
  MultiPoly qp = MultiPoly::var("q");
  PolySequence s{0, {MultiPoly(1)}};
  switch (route) {
    case SeqRoute::partitions:
      for (int n = 1; n <= N; ++n) {
        std::vector<std::string> ground;
        for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
        MultiPoly yn;
        for (const auto& pi : enumerate_partitions(ground)) {
          MultiPoly term = qp.pow(pi.block_count());
          for (int size : pi.block_sizes()) term *= c[size - 1];
          yn += term;
        }
        s.entries.push_back(yn);
      }
      break;
    case SeqRoute::recursion:
      for (int n = 1; n <= N; ++n) {
        MultiPoly yn;
        for (int k = 1; k <= n; ++k)
          yn += binomial(n - 1, k - 1) * (c[k - 1] * s.at(n - k));
        s.entries.push_back(qp * yn);
      }
      break;
    case SeqRoute::egf: {
      TruncatedSeries cs = TruncatedSeries::with_total_cap({Variable("x")}, N);
      for (int n = 1; n <= N; ++n)
        cs.set_coeff({n}, MultiPoly(make_rational(Integer(1), factorial(n))) *
                              c[n - 1]);
      TruncatedSeries pw = cs.scaled(qp).exp();
      for (int n = 1; n <= N; ++n)
        s.entries.push_back(factorial(n) * pw.coeff({n}));
      break;
    }
  }
  return s;
}

/// Builtin weight sequences for the CLI: "kn" gives the complete-graph block
/// weights (1+v)^C(k,2), "ones" gives the all-ones sequence.
inline std::vector<MultiPoly> builtin_weights(const std::string& name, int N) {
  std::vector<MultiPoly> out;
  for (int k = 1; k <= N; ++k) {
    if (name == "kn")
      out.push_back(detail::edge_pow(detail::choose2(k).get_si()));
    else if (name == "ones")
      out.push_back(MultiPoly(1));
    else
      throw std::invalid_argument("unknown weight sequence " + name);
  }
  return out;
}

/// The linear and two-point routes to C_n agree.
inline CheckReport check_cn_routes(int N) {
  CheckBuilder out("complete_connected_routes");
  out.member("K_1..K_" + std::to_string(N));
  PolySequence lin = cn_linear(N), non = cn_nonlinear(N);
  for (int n = 1; n <= N; ++n)
    out.require_zero(lin.at(n) - non.at(n),
                     "n=" + std::to_string(n) + " linear vs two-point");
  return out.finish();
}

/// All three Z_n routes agree, and the family view satisfies the standard
/// convolution identities.
inline CheckReport check_zn_routes(int N) {
  CheckBuilder out("complete_partition_routes");
  out.member("K_0..K_" + std::to_string(N));
  PolySequence a = zn_sequence(N, ZnRoute::from_connected);
  PolySequence b = zn_sequence(N, ZnRoute::direct);
  PolySequence c = zn_sequence(N, ZnRoute::two_point);
  for (int n = 0; n <= N; ++n) {
    out.require_zero(a.at(n) - b.at(n),
                     "n=" + std::to_string(n) + " connected vs direct");
    out.require_zero(a.at(n) - c.at(n),
                     "n=" + std::to_string(n) + " connected vs two-point");
  }
  return out.finish();
}

/// The three unordered-partition forms of Z_n: falling factorial against
/// (1+v) to the internal-pair count, the cyclic form of C_n, and the signed
/// form of Z_n at q = -1.
inline CheckReport check_zn_partition_forms(int nmax) {
  CheckBuilder out("complete_partition_forms");
  out.member("K_1..K_" + std::to_string(nmax));
  Variable q("q");
  MultiPoly qp = MultiPoly::var(q);
  PolySequence z = zn_sequence(nmax, ZnRoute::from_connected);
  PolySequence c = cn_linear(nmax);
  for (int n = 1; n <= nmax; ++n) {
    std::vector<std::string> ground;
    for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    MultiPoly zForm, cForm, signedForm;
    for (const auto& pi : enumerate_partitions(ground)) {
      long nb = pi.block_count();
      Integer internal = detail::choose2(n) - cross_edges(pi);
      MultiPoly w = detail::edge_pow(internal.get_si());
      zForm += falling_factorial(qp, (int)nb) * w;
      Rational sign = (nb - 1) % 2 == 0 ? 1 : -1;
      cForm += MultiPoly(Rational(sign * factorial(nb - 1))) * w;
      Rational sign2 = nb % 2 == 0 ? 1 : -1;
      signedForm += MultiPoly(Rational(sign2 * factorial(nb))) * w;
    }
    std::string label = "n=" + std::to_string(n);
    out.require_zero(zForm - z.at(n), label + " falling factorial form");
    out.require_zero(cForm - c.at(n), label + " connected form");
    out.require_zero(signedForm - z.at(n).substitute(q, make_rational(-1)),
                     label + " q=-1 form");
  }
  return out.finish();
}

/// The two inversion-polynomial routes agree, every coefficient up to the
/// top degree C(n-1,2) is a positive integer, and the substitution law
/// C_n(v) = v^(n-1) I_n(1+v) holds.
inline CheckReport check_inversions(int N, int nbrute) {
  CheckBuilder out("complete_inversions");
  out.member("K_1..K_" + std::to_string(N));
  Variable y("y");
  PolySequence rec = inversion_enumerator(N, InvRoute::recursion);
  PolySequence brute = inversion_enumerator(std::min(N, nbrute), InvRoute::brute);
  for (int n = 1; n <= brute.last(); ++n)
    out.require_zero(rec.at(n) - brute.at(n),
                     "n=" + std::to_string(n) + " recursion vs trees");
  for (int n = 1; n <= N; ++n) {
    long top = detail::choose2(n - 1).get_si();
    out.require((long)rec.at(n).degree_in(y) == top,
                "n=" + std::to_string(n) + " top degree", rec.at(n).str());
    bool positive = true;
    for (long d = 0; d <= top; ++d) {
      Rational coeff =
          rec.at(n).coeff(d == 0 ? Monomial{} : Monomial{{y, (int)d}});
      if (coeff < 1) positive = false;
    }
    out.require(positive, "n=" + std::to_string(n) + " positive coefficients",
                rec.at(n).str());
  }
  PolySequence c = cn_linear(N);
  MultiPoly v = MultiPoly::var("v");
  for (int n = 1; n <= N; ++n) {
    MultiPoly lhs = c.at(n);
    MultiPoly rhs = v.pow(n - 1) *
                    rec.at(n).substitute(y, MultiPoly(1) + v);
    out.require_zero(lhs - rhs, "n=" + std::to_string(n) + " substitution law");
  }
  return out.finish();
}

}  // namespace tutte
