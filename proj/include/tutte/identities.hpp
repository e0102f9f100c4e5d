#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tutte/binomial.hpp"
#include "tutte/check_report.hpp"
#include "tutte/complete.hpp"
#include "tutte/graph.hpp"
#include "tutte/mobius.hpp"
#include "tutte/multipoly.hpp"
#include "tutte/partitions.hpp"
#include "tutte/series.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

struct CorpusEntry {
  std::string name;
  MultiGraph graph;
};

namespace detail {

inline MultiGraph grid_named(int n, const std::vector<std::pair<int, int>>& e) {
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  MultiGraph g(std::move(ids));
  for (auto [a, b] : e) g.add_edge(a, b);
  return g;
}

inline MultiGraph complete_named(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return grid_named(n, e);
}

inline MultiGraph complete_bipartite_named(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return grid_named(a + b, e);
}

inline MultiGraph cycle_named(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return grid_named(n, e);
}

}  // namespace detail

/// The fixed test corpus: small complete, bipartite, path and cycle graphs,
/// one near-complete graph, one doubled edge, and one graph with a loop.
inline std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= 5; ++n)
    out.push_back({"K_" + std::to_string(n), detail::complete_named(n)});
  out.push_back({"K_{1,3}", detail::complete_bipartite_named(1, 3)});
  out.push_back({"K_{2,3}", detail::complete_bipartite_named(2, 3)});
  out.push_back({"P_4", detail::grid_named(4, {{0, 1}, {1, 2}, {2, 3}})});
  out.push_back({"C_4", detail::cycle_named(4)});
  out.push_back({"C_5", detail::cycle_named(5)});
  out.push_back(
      {"K_4-e", detail::grid_named(
                    4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})});
  out.push_back({"K_2^(2)", detail::grid_named(2, {{0, 1}, {0, 1}})});
  out.push_back({"K_3+loop",
                 detail::grid_named(3, {{0, 1}, {0, 2}, {1, 2}, {0, 0}})});
  return out;
}

namespace detail {

/// Per-mask cache of the induced-subgraph polynomials used by the partition
/// and convolution expansions.
class InducedCache {
 public:
  explicit InducedCache(const MultiGraph& g) : g_(g) {}

  const MultiPoly& zfull(unsigned mask) { return get(mask).z; }
  const MultiPoly& zhat1(unsigned mask) { return get(mask).zh; }
  const MultiPoly& conn(unsigned mask) { return get(mask).c; }
  /// Product of (1 + v_e) over the edges inside the mask.
  const MultiPoly& edgeprod(unsigned mask) { return get(mask).ep; }

 private:
  struct Entry {
    MultiPoly z, zh, c, ep;
  };
  const Entry& get(unsigned mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    MultiGraph h = g_.induced(mask);
    Entry e;
    e.z = z_subset(h).value;
    if (h.n() > 0) {
      e.zh = zhat(h);
      e.c = connected_poly(h);
    } else {
      e.zh = MultiPoly();
      e.c = MultiPoly();
    }
    e.ep = MultiPoly(1);
    for (const auto& edge : h.edges()) e.ep *= MultiPoly(1) + edge.weight;
    return memo_.emplace(mask, std::move(e)).first->second;
  }
  const MultiGraph& g_;
  std::map<unsigned, Entry> memo_;
};

inline unsigned block_mask(const std::vector<int>& block,
                           const std::vector<int>& remap) {
  unsigned mask = 0;
  for (int v : block) mask |= 1u << remap[v];
  return mask;
}

}  // namespace detail

/// Partition-lattice expansions of one loopless graph: the two-parameter
/// expansion of zhat and of Z through hatted subgraph values, the q1 = 0
/// connected expansion, the edge-product expansion at q1 = 1 with its two
/// signed corollaries, and the independent-partition corollaries at v = -1.
inline CheckReport check_partition_expansion(const MultiGraph& g,
                                             const std::string& name) {
  if (g.has_loops())
    throw std::invalid_argument("partition expansion needs a loopless graph");
  CheckBuilder out("partition_expansion[" + name + "]");
  out.member(name);
  Variable q("q");
  MultiPoly qp = MultiPoly::var(q);
  MultiPoly q1 = MultiPoly::var("q1"), q2 = MultiPoly::var("q2");
  detail::InducedCache cache(g);
  unsigned full = (g.n() >= 32) ? 0 : ((1u << g.n()) - 1);
  auto parts = enumerate_partitions(g.vertex_ids());
  std::vector<int> self(g.n());
  for (int i = 0; i < g.n(); ++i) self[i] = i;

  MultiPoly hatTwo, zTwo, connected0, edge1, edgeC, edgeSigned;
  for (const auto& pi : parts) {
    MultiPoly hatProd(1), connProd(1), edgeProd(1);
    for (const auto& block : pi.blocks()) {
      unsigned mask = detail::block_mask(block, self);
      hatProd *= cache.zhat1(mask).substitute(q, q1);
      connProd *= cache.conn(mask);
      edgeProd *= cache.edgeprod(mask);
    }
    long nb = pi.block_count();
    MultiPoly riser(1), riser0 = q2;
    for (long j = 1; j < nb; ++j) riser *= q2 - MultiPoly(j) * q1;
    riser0 = riser0 * riser;
    hatTwo += riser * hatProd;
    zTwo += riser0 * hatProd;
    connected0 += MultiPoly::var(q, (int)nb) * connProd;
    edge1 += falling_factorial(qp, (int)nb) * edgeProd;
    Rational sign = (nb - 1) % 2 == 0 ? 1 : -1;
    edgeC += MultiPoly(Rational(sign * factorial(nb - 1))) * edgeProd;
    Rational sign2 = nb % 2 == 0 ? 1 : -1;
    edgeSigned += MultiPoly(Rational(sign2 * factorial(nb))) * edgeProd;
  }
  const MultiPoly& z = cache.zfull(full);
  const MultiPoly& zh = cache.zhat1(full);
  out.require_zero(hatTwo - zh.substitute(q, q2), "hatted two-parameter");
  out.require_zero(zTwo - z.substitute(q, q2), "two-parameter");
  out.require_zero(connected0 - z, "connected expansion");
  out.require_zero(edge1 - z, "edge product expansion");
  out.require_zero(edgeC - cache.conn(full), "signed connected form");
  out.require_zero(edgeSigned - z.substitute(q, make_rational(-1)),
                   "alternating form");

  // v = -1 corollaries against independent-partition counts
  MultiGraph minus(g.vertex_ids());
  for (const auto& e : g.edges()) minus.add_edge(e.a, e.b, MultiPoly(-1));
  MultiPoly chrom = z_subset(minus).value;
  MultiPoly chromC = connected_poly(minus);
  auto counts = independent_partition_counts(g);
  MultiPoly s1, s2, s3;
  for (size_t k = 1; k <= counts.size(); ++k) {
    MultiPoly qk(counts[k - 1]);
    s1 += qk * falling_factorial(qp, (int)k);
    Rational sign = (k - 1) % 2 == 0 ? 1 : -1;
    s2 += qk * MultiPoly(Rational(sign * factorial((long)k - 1)));
    Rational sign2 = k % 2 == 0 ? 1 : -1;
    s3 += qk * MultiPoly(Rational(sign2 * factorial((long)k)));
  }
  out.require_zero(s1 - chrom, "coloring counts");
  out.require_zero(s2 - chromC, "signed coloring counts");
  out.require_zero(s3 - chrom.substitute(q, make_rational(-1)),
                   "alternating coloring counts");
  return out.finish();
}

/// State-sum cross-check at small integer q.
inline CheckReport check_state_sum(const MultiGraph& g, const std::string& name,
                                   int qmax) {
  CheckBuilder out("state_sum[" + name + "]");
  out.member(name);
  Variable q("q");
  MultiPoly z = z_subset(g).value;
  for (int k = 1; k <= qmax; ++k)
    out.require_zero(z_coloring(g, k) - z.substitute(q, make_rational(k)),
                     "q=" + std::to_string(k));
  return out.finish();
}

/// Subset convolutions of one loopless graph: the additive-parameter product
/// rule, its rooted variant for every root, the rooted connected-component
/// peeling, and the counting identity mixing both parameters.
inline CheckReport check_linear_convolutions(const MultiGraph& g,
                                             const std::string& name) {
  if (g.has_loops())
    throw std::invalid_argument("subset convolutions need a loopless graph");
  CheckBuilder out("subset_convolutions[" + name + "]");
  out.member(name);
  Variable q("q");
  MultiPoly qp = MultiPoly::var(q);
  MultiPoly q1 = MultiPoly::var("q1"), q2 = MultiPoly::var("q2");
  detail::InducedCache cache(g);
  int n = g.n();
  unsigned full = (1u << n) - 1;
  const MultiPoly z2 = cache.zfull(full).substitute(q, q2);
  const MultiPoly zq12 = cache.zfull(full).substitute(q, q1 + q2);

  MultiPoly sum0;
  for (unsigned w = 0; w <= full; ++w)
    sum0 += cache.zfull(w).substitute(q, q1) *
            cache.zfull(full & ~w).substitute(q, q2);
  out.require_zero(sum0 - zq12, "product rule");

  if (n >= 1) {
    const MultiPoly zhat12 = cache.zhat1(full).substitute(q, q1 + q2);
    for (int i = 0; i < n; ++i) {
      MultiPoly sum1, sum2;
      for (unsigned w = 0; w <= full; ++w) {
        if (!(w >> i & 1)) continue;
        MultiPoly rest2 = cache.zfull(full & ~w).substitute(q, q2);
        sum1 += cache.zhat1(w).substitute(q, q1) * rest2;
        sum2 += qp * cache.conn(w) * cache.zfull(full & ~w);
      }
      std::string root = " root " + g.vertex_ids()[i];
      out.require_zero(sum1 - zhat12, "rooted product rule" + root);
      out.require_zero(sum2 - cache.zfull(full), "component peeling" + root);
    }
    MultiPoly sum3;
    for (unsigned w = 1; w <= full; ++w) {
      int wsize = 0;
      for (int i = 0; i < n; ++i) wsize += w >> i & 1;
      MultiPoly weight =
          (q1 + q2) * MultiPoly(wsize) - q1 * MultiPoly(n);
      sum3 += weight * cache.zhat1(w).substitute(q, q1) *
              cache.zfull(full & ~w).substitute(q, q2);
    }
    out.require_zero(sum3 - MultiPoly(n) * z2, "counting rule");
  }
  return out.finish();
}

/// Two-point expansions for every ordered vertex pair (i, j): peeling the
/// connected component of i by its attachment to j, for Z and for the
/// connected polynomial. Loops and multiple edges are allowed.
inline CheckReport check_two_point(const MultiGraph& g,
                                   const std::string& name) {
  CheckBuilder out("two_point[" + name + "]");
  out.member(name);
  if (g.n() < 2) return out.finish();
  Variable q("q");
  MultiPoly qp = MultiPoly::var(q);
  detail::InducedCache cache(g);
  int n = g.n();
  unsigned full = (1u << n) - 1;
  const MultiPoly& z = cache.zfull(full);
  const MultiPoly& conn = cache.conn(full);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      MultiPoly sumZ, sumC;
      for (unsigned w = 0; w <= full; ++w) {
        if (!(w >> i & 1) || (w >> j & 1)) continue;
        MultiPoly attach(1);
        for (int e : g.edges_between(w, j))
          attach *= MultiPoly(1) + g.edges()[e].weight;
        const MultiPoly& cw = cache.conn(w);
        sumZ += (qp - MultiPoly(1) + attach) * cw *
                cache.zfull(full & ~w);
        sumC += (attach - MultiPoly(1)) * cw * cache.conn(full & ~w);
      }
      std::string pair =
          " i=" + g.vertex_ids()[i] + " j=" + g.vertex_ids()[j];
      out.require_zero(sumZ - z, "two-point peeling" + pair);
      out.require_zero(sumC - conn, "connected two-point peeling" + pair);
    }
  return out.finish();
}

/// Fully expanded rooted form: summing over partitions of the remaining
/// vertices, each block weighted by its attachment to the root. Valid for
/// every root without a loop.
inline CheckReport check_rooted_expansion(const MultiGraph& g,
                                          const std::string& name) {
  CheckBuilder out("rooted_expansion[" + name + "]");
  out.member(name);
  if (g.n() < 1) return out.finish();
  Variable q("q");
  MultiPoly qp = MultiPoly::var(q);
  detail::InducedCache cache(g);
  int n = g.n();
  unsigned full = (1u << n) - 1;
  for (int j = 0; j < n; ++j) {
    if (g.loop_at(j)) continue;
    std::vector<std::string> rest;
    std::vector<int> remap;
    for (int i = 0; i < n; ++i)
      if (i != j) {
        rest.push_back(g.vertex_ids()[i]);
        remap.push_back(i);
      }
    MultiPoly sumZ, sumC;
    for (const auto& pi : enumerate_partitions(rest)) {
      MultiPoly termZ(1), termC(1);
      for (const auto& block : pi.blocks()) {
        unsigned mask = 0;
        for (int v : block) mask |= 1u << remap[v];
        MultiPoly attach(1);
        for (int e : g.edges_between(mask, j))
          attach *= MultiPoly(1) + g.edges()[e].weight;
        const MultiPoly& cb = cache.conn(mask);
        termZ *= (qp - MultiPoly(1) + attach) * cb;
        termC *= (attach - MultiPoly(1)) * cb;
      }
      sumZ += termZ;
      sumC += termC;
    }
    std::string root = " root " + g.vertex_ids()[j];
    out.require_zero(sumZ - cache.zhat1(full), "rooted expansion" + root);
    out.require_zero(sumC - cache.conn(full),
                     "connected rooted expansion" + root);
  }
  return out.finish();
}

/// Master generating function of vertex blow-ups: the q-th symbolic power of
/// the weighted occupation series reproduces the partition function of every
/// blow-up within the caps, with a clique factor when internal edges are on.
inline CheckReport check_blowup_series(const MultiGraph& base,
                                       const std::string& name,
                                       const MultiIndex& caps, bool cliques) {
  if (base.has_loops())
    throw std::invalid_argument("blow-up series needs a loopless base");
  CheckBuilder out(std::string("blowup_series[") + name +
                   (cliques ? ",clique]" : ",independent]"));
  out.member(name);
  std::vector<Variable> vars;
  for (const auto& id : base.vertex_ids()) vars.emplace_back("x:" + id);
  TruncatedSeries gas = TruncatedSeries::with_var_caps(vars, caps);
  for (const auto& n : detail::box_below(caps)) {
    MultiPoly w(1);
    for (const auto& e : base.edges())
      w *= (MultiPoly(1) + e.weight).pow(n[e.a] * n[e.b]);
    if (cliques)
      for (int i = 0; i < base.n(); ++i)
        w *= (MultiPoly(1) + MultiPoly::var("w:" + base.vertex_ids()[i]))
                 .pow((int)binomial(n[i], 2).get_si());
    Rational nfact(1);
    for (int v : n) nfact *= factorial(v);
    gas.set_coeff(n, MultiPoly(Rational(Rational(1) / nfact)) * w);
  }
  TruncatedSeries zs = gas.pow_symbolic(MultiPoly::var("q"));
  for (const auto& n : detail::box_below(caps)) {
    MultiGraph blown =
        cliques ? base.blowup_clique(n) : base.blowup_independent(n);
    Rational nfact(1);
    for (int v : n) nfact *= factorial(v);
    MultiPoly expanded = MultiPoly(nfact) * zs.coeff(n);
    out.require_zero(expanded - z_subset(blown).value,
                     "n=(" + detail::index_str(n) + ")");
  }
  return out.finish();
}

/// Closed-form series for proper colorings of complete bipartite graphs:
/// coefficients of (e^x + e^y - 1)^q.
inline CheckReport check_bipartite_chromatic_series(int cap1, int cap2) {
  CheckBuilder out("bipartite_chromatic_series");
  out.member("K_{n1,n2} up to (" + std::to_string(cap1) + "," +
             std::to_string(cap2) + ")");
  Variable x("x:1"), y("x:2");
  TruncatedSeries s = TruncatedSeries::with_var_caps({x, y}, {cap1, cap2});
  for (int i = 0; i <= cap1; ++i)
    for (int j = 0; j <= cap2; ++j) {
      // e^x + e^y - 1 has coefficient 1/i! on pure x powers, 1/j! on pure y
      if (i > 0 && j > 0) continue;
      Rational c = make_rational(Integer(1), Integer(factorial(i) * factorial(j)));
      s.set_coeff({i, j}, MultiPoly(c));
    }
  TruncatedSeries pw = s.pow_symbolic(MultiPoly::var("q"));
  MultiGraph base({"1", "2"});
  base.add_edge(0, 1, MultiPoly(-1));
  for (int i = 0; i <= cap1; ++i)
    for (int j = 0; j <= cap2; ++j) {
      MultiGraph blown = base.blowup_independent({i, j});
      MultiPoly expanded =
          Integer(factorial(i) * factorial(j)) * pw.coeff({i, j});
      out.require_zero(expanded - z_subset(blown).value,
                       "n=(" + std::to_string(i) + "," + std::to_string(j) +
                           ")");
    }
  return out.finish();
}

/// Proper colorings of every induced subgraph drop out of the symbolic power
/// of the independent-set series.
inline CheckReport check_independence_chromatic(const MultiGraph& g,
                                                const std::string& name) {
  if (g.has_loops())
    throw std::invalid_argument(
        "independence series needs a loopless graph");
  CheckBuilder out("independence_chromatic[" + name + "]");
  out.member(name);
  TruncatedSeries p = independence_poly(g).pow_symbolic(MultiPoly::var("q"));
  unsigned full = (1u << g.n()) - 1;
  for (unsigned w = 0; w <= full; ++w) {
    std::vector<int> e(g.n(), 0);
    for (int i = 0; i < g.n(); ++i) e[i] = w >> i & 1;
    out.require_zero(p.coeff(e) - chromatic(g.induced(w)),
                     "W mask " + std::to_string(w));
  }
  return out.finish();
}

/// run_suite configuration.
struct RunOptions {
  int threads = 1;
  int state_sum_qmax = 4;
  int max_n = 0;  // > 0 skips larger corpus graphs and shortens the ladders
};

namespace detail {

using CheckTask = std::function<CheckReport()>;

/// Runs the tasks on a small worker pool; results land in task order no
/// matter how the work interleaves.
inline void run_tasks(std::vector<CheckTask>& tasks, int threads,
                      std::vector<CheckReport>& out) {
  if (threads <= 1) {
    for (auto& t : tasks) out.push_back(t());
    return;
  }
  std::vector<std::optional<CheckReport>> slots(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        slots[i] = tasks[i]();
      } catch (const std::exception& ex) {
        slots[i] = CheckReport::fail("task", 0, "exception", ex.what(), {});
      }
    }
  };
  std::vector<std::thread> pool;
  int nw = std::min<int>(threads, (int)tasks.size());
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& s : slots) out.push_back(std::move(*s));
}

inline bool fits_state_sum(const MultiGraph& g) {
  return !g.has_loops() && g.n() <= 5 && g.m() <= 8;
}

}  // namespace detail

/// Deterministic check suites over a caller-supplied corpus. Order inside a
/// suite is fixed; reports come back in that order independent of the thread
/// count. An empty corpus yields an empty report.
inline std::vector<CheckReport> run_suite(
    const std::vector<CorpusEntry>& corpus, const std::string& suite,
    const RunOptions& opts = {}) {
  static const char* const kSuites[] = {
      "partitions", "convolutions", "nonlinear", "genborgs", "blowup",
      "lass",       "abel",         "mobius",    "complete", "all"};
  bool known = false;
  for (const char* s : kSuites) known = known || suite == s;
  if (!known) throw std::invalid_argument("unknown suite " + suite);

  std::vector<CheckReport> reports;
  if (corpus.empty()) return reports;

  auto cap = [&](int n) {
    return opts.max_n > 0 ? std::min(n, opts.max_n) : n;
  };
  auto within = [&](const MultiGraph& g) {
    return opts.max_n <= 0 || g.n() <= opts.max_n;
  };
  std::vector<detail::CheckTask> tasks;
  bool all = suite == "all";

  if (all || suite == "partitions") {
    for (const auto& entry : corpus) {
      if (!within(entry.graph)) continue;
      if (detail::fits_state_sum(entry.graph)) {
        tasks.push_back([entry, qmax = opts.state_sum_qmax] {
          return check_state_sum(entry.graph, entry.name, qmax);
        });
      }
      if (!entry.graph.has_loops() && entry.graph.n() <= 6)
        tasks.push_back([entry] {
          return check_partition_expansion(entry.graph, entry.name);
        });
    }
  }
  if (all || suite == "convolutions") {
    for (const auto& entry : corpus)
      if (!entry.graph.has_loops() && within(entry.graph))
        tasks.push_back([entry] {
          return check_linear_convolutions(entry.graph, entry.name);
        });
    for (const char* fam :
         {"exp", "geometric", "affine", "bell", "laguerre"})
      tasks.push_back([fam, n = cap(6)] {
        return check_convolutions(classic_family(fam, n), fam);
      });
    tasks.push_back([n = cap(5)] {
      return check_convolutions(zn_family(n), "complete-graph");
    });
    for (const char* fam : {"exp", "affine"})
      tasks.push_back([fam, n = cap(6)] {
        return check_knuth(classic_family(fam, n), fam);
      });
    for (const char* fam : {"exp", "geometric", "bell"})
      tasks.push_back([fam, n = cap(6)] {
        return check_family_egf(classic_family(fam, n), fam);
      });
  }
  if (all || suite == "nonlinear") {
    for (const auto& entry : corpus)
      if (entry.graph.n() >= 2 && within(entry.graph))
        tasks.push_back(
            [entry] { return check_two_point(entry.graph, entry.name); });
    std::mt19937 rng(2024);
    std::vector<Rational> pool{make_rational(-1), make_rational(-3, 4),
                               make_rational(-1, 2), make_rational(-1, 4)};
    std::vector<Rational> grid{make_rational(0), make_rational(1, 4),
                               make_rational(1, 2), make_rational(3, 4),
                               make_rational(1)};
    for (const auto& entry : corpus) {
      if (entry.graph.m() > 8 || entry.graph.n() < 1 || !within(entry.graph))
        continue;
      std::vector<Rational> vals;
      std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
      for (int e = 0; e < entry.graph.m(); ++e) vals.push_back(pool[pick(rng)]);
      tasks.push_back([entry, vals, grid] {
        return check_sign_inequality(entry.graph, vals, 4, grid);
      });
    }
  }
  if (all || suite == "genborgs") {
    for (const auto& entry : corpus)
      if (within(entry.graph))
        tasks.push_back([entry] {
          return check_rooted_expansion(entry.graph, entry.name);
        });
  }
  if (all || suite == "blowup") {
    MultiGraph k1({"1"});
    MultiGraph k2({"1", "2"});
    k2.add_edge(0, 1, MultiPoly::var("v"));
    MultiGraph k3 = detail::complete_named(3);
    tasks.push_back([k1] {
      return check_blowup_series(k1, "K_1", {4}, false);
    });
    tasks.push_back([k1] {
      return check_blowup_series(k1, "K_1", {4}, true);
    });
    tasks.push_back([k2] {
      return check_blowup_series(k2, "K_2", {2, 2}, false);
    });
    tasks.push_back([k2] {
      return check_blowup_series(k2, "K_2", {2, 2}, true);
    });
    tasks.push_back([k3] {
      return check_blowup_series(k3, "K_3", {2, 2, 1}, false);
    });
    tasks.push_back([] { return check_bipartite_chromatic_series(3, 3); });
  }
  if (all || suite == "lass") {
    for (const auto& entry : corpus)
      if (!entry.graph.has_loops() && entry.graph.n() <= 5 &&
          within(entry.graph))
        tasks.push_back([entry] {
          return check_independence_chromatic(entry.graph, entry.name);
        });
  }
  if (all || suite == "abel") {
    for (const char* fam :
         {"exp", "geometric", "affine", "bell", "laguerre"})
      tasks.push_back([fam, n = cap(5)] {
        return check_abel(classic_family(fam, n), fam);
      });
    tasks.push_back(
        [n = cap(4)] { return check_abel(zn_family(n), "complete-graph"); });
  }
  if (all || suite == "mobius") {
    for (int m = 1; m <= cap(5); ++m)
      tasks.push_back([m] { return check_refinement_composition(m, true); });
    if (cap(6) >= 6)
      tasks.push_back([] { return check_refinement_composition(6, false); });
    for (int m = 1; m <= cap(7); ++m)
      tasks.push_back([m] { return check_refinement_specializations(m); });
    for (int m = 1; m <= cap(7); ++m)
      tasks.push_back([m] { return check_bottom_inversion_sum(m); });
    for (int m = 1; m <= cap(6); ++m)
      tasks.push_back([m] { return check_partition_factorial_sum(m); });
    tasks.push_back([m = cap(4)] { return check_diagonal_conjugation(m); });
    for (const auto& entry : corpus)
      if (!entry.graph.has_loops() && entry.graph.n() <= 5 &&
          within(entry.graph))
        tasks.push_back([entry] {
          return check_coherent_family(entry.graph, entry.name);
        });
  }
  if (all || suite == "complete") {
    tasks.push_back([n = cap(10)] { return check_cn_routes(n); });
    tasks.push_back([n = cap(10)] { return check_zn_routes(n); });
    tasks.push_back([n = cap(7)] { return check_zn_partition_forms(n); });
    tasks.push_back(
        [n = cap(8), nb = cap(7)] { return check_inversions(n, nb); });
    tasks.push_back([N = cap(8)] {
      CheckBuilder out("complete_weight_routes");
      out.member("block weight sequences");
      auto kn = builtin_weights("kn", N);
      auto ones = builtin_weights("ones", N);
      auto zp = zn_of_weights(kn, N, SeqRoute::partitions);
      auto zr = zn_of_weights(kn, N, SeqRoute::recursion);
      auto ze = zn_of_weights(kn, N, SeqRoute::egf);
      auto zs = zn_sequence(N, ZnRoute::from_connected);
      MultiPoly q = MultiPoly::var("q");
      for (int n = 0; n <= N; ++n) {
        std::string label = "n=" + std::to_string(n);
        out.require_zero(zp.at(n) - zr.at(n), label + " partitions vs recursion");
        out.require_zero(zp.at(n) - ze.at(n), label + " partitions vs series");
        out.require_zero(zp.at(n) - zs.at(n), label + " weights vs peeling");
      }
      auto z1 = zn_of_weights(ones, N, SeqRoute::partitions);
      for (int n = 0; n <= N; ++n)
        out.require_zero(z1.at(n) - q.pow(n),
                         "n=" + std::to_string(n) + " unit weights");
      auto yp = yn_of_weights(ones, N, SeqRoute::partitions);
      auto yr = yn_of_weights(ones, N, SeqRoute::recursion);
      auto ye = yn_of_weights(ones, N, SeqRoute::egf);
      auto bellf = classic_family("bell", N);
      for (int n = 0; n <= N; ++n) {
        std::string label = "n=" + std::to_string(n);
        out.require_zero(yp.at(n) - yr.at(n), label + " power partitions vs recursion");
        out.require_zero(yp.at(n) - ye.at(n), label + " power partitions vs series");
        out.require_zero(yp.at(n) - bellf.a({n}), label + " power weights vs family");
      }
      return out.finish();
    });
    tasks.push_back([nb = cap(4)] {
      // brute-force cross-check of the sequences on explicit complete graphs
      CheckBuilder out("complete_brute_force");
      out.member("K_1..K_" + std::to_string(nb));
      auto c = cn_linear(nb);
      auto z = zn_sequence(nb, ZnRoute::from_connected);
      MultiPoly v = MultiPoly::var("v");
      for (int n = 1; n <= nb; ++n) {
        MultiGraph g = detail::complete_named(n);
        MultiGraph gv(g.vertex_ids());
        for (const auto& e : g.edges()) gv.add_edge(e.a, e.b, v);
        out.require_zero(connected_poly(gv) - c.at(n),
                         "n=" + std::to_string(n) + " connected");
        out.require_zero(z_subset(gv).value - z.at(n),
                         "n=" + std::to_string(n) + " partition function");
      }
      if (nb >= 4) {
        std::map<Variable, Rational> at{{Variable("v"), make_rational(1)}};
        out.require(c.at(4).eval(at) == make_rational(38),
                    "connected subgraph count of K_4",
                    rational_str(c.at(4).eval(at)));
      }
      return out.finish();
    });
  }

  detail::run_tasks(tasks, opts.threads, reports);
  return reports;
}

/// Same suites on the builtin corpus.
inline std::vector<CheckReport> run_suite(const std::string& suite,
                                          const RunOptions& opts = {}) {
  return run_suite(default_corpus(), suite, opts);
}

}  // namespace tutte
