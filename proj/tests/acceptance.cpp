// Acceptance gate. Each criterion prints exactly one PASS/FAIL line; every
// comparison is exact. The process exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "tutte/tutte.hpp"

using namespace tutte;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  long instances = 0;
};

void absorb(Outcome& o, const CheckReport& r) {
  o.instances += r.instances;
  if (!r.passed && o.ok) {
    o.ok = false;
    o.detail =
        r.check + ": " + r.witness_instance + " -> " + r.witness_residual;
  }
}

void require(Outcome& o, bool ok, const std::string& what) {
  ++o.instances;
  if (!ok && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

MultiGraph uniform_complete(int n) {
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  MultiGraph g(std::move(ids));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, MultiPoly::var("v"));
  return g;
}

CoeffSequence random_connected(std::vector<int> cap, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  CoeffSequence c(cap);
  for (const auto& n : detail::box_below(cap)) {
    if (detail::is_zero_index(n)) continue;
    c.set(n, MultiPoly(make_rational(num(rng), den(rng))));
  }
  return c;
}

Outcome state_sums() {
  Outcome o;
  for (const auto& e : default_corpus()) {
    if (e.graph.has_loops() || e.graph.n() > 5 || e.graph.m() > 8) continue;
    absorb(o, check_state_sum(e.graph, e.name, 4));
  }
  return o;
}

Outcome partition_expansions() {
  Outcome o;
  for (const auto& e : default_corpus()) {
    if (e.graph.has_loops() || e.graph.n() > 6) continue;
    absorb(o, check_partition_expansion(e.graph, e.name));
  }
  return o;
}

Outcome subset_convolutions() {
  Outcome o;
  for (const auto& e : default_corpus()) {
    if (e.graph.has_loops()) continue;
    absorb(o, check_linear_convolutions(e.graph, e.name));
  }
  return o;
}

Outcome two_point_and_rooted() {
  Outcome o;
  for (const auto& e : default_corpus()) {
    if (e.graph.n() >= 2) absorb(o, check_two_point(e.graph, e.name));
    absorb(o, check_rooted_expansion(e.graph, e.name));
  }
  return o;
}

Outcome blowup_series() {
  Outcome o;
  MultiGraph k1({"1"});
  MultiGraph k2({"1", "2"});
  k2.add_edge(0, 1, MultiPoly::var("v"));
  absorb(o, check_blowup_series(k1, "K_1", {4}, false));
  absorb(o, check_blowup_series(k1, "K_1", {4}, true));
  absorb(o, check_blowup_series(k2, "K_2", {2, 2}, false));
  absorb(o, check_blowup_series(k2, "K_2", {2, 2}, true));
  absorb(o, check_bipartite_chromatic_series(3, 3));
  return o;
}

Outcome complete_sequences() {
  Outcome o;
  absorb(o, check_cn_routes(10));
  absorb(o, check_zn_routes(10));
  absorb(o, check_zn_partition_forms(7));
  PolySequence c = cn_linear(4);
  PolySequence z = zn_sequence(4, ZnRoute::from_connected);
  for (int n = 1; n <= 4; ++n) {
    MultiGraph g = uniform_complete(n);
    require(o, connected_poly(g) == c.at(n),
            "brute force connected n=" + std::to_string(n));
    require(o, z_subset(g).value == z.at(n),
            "brute force partition function n=" + std::to_string(n));
  }
  std::map<Variable, Rational> at{{Variable("v"), make_rational(1)}};
  require(o, c.at(4).eval(at) == make_rational(38),
          "connected subgraph count of K_4");
  PolySequence egf = zn_of_weights(builtin_weights("kn", 8), 8, SeqRoute::egf);
  PolySequence ref = zn_sequence(8, ZnRoute::from_connected);
  for (int n = 0; n <= 8; ++n)
    require(o, egf.at(n) == ref.at(n),
            "series coefficient n=" + std::to_string(n));
  return o;
}

Outcome inversion_polynomials() {
  Outcome o;
  absorb(o, check_inversions(8, 7));
  return o;
}

Outcome binomial_machinery() {
  Outcome o;
  for (auto cap : {std::vector<int>{6}, std::vector<int>{3, 3}}) {
    unsigned seed = cap.size() == 1 ? 91 : 92;
    CoeffSequence c = random_connected(cap, seed);
    BinomialFamily f = family_from_connected(c);
    CoeffSequence back = connected_from_family(f);
    for (const auto& n : detail::box_below(cap)) {
      if (detail::is_zero_index(n)) continue;
      require(o, back.at(n) == c.at(n),
              "round trip n=(" + detail::index_str(n) + ")");
    }
    absorb(o, check_convolutions(f, cap.size() == 1 ? "random" : "random 2d"));
  }
  for (const char* fam : {"exp", "geometric", "affine", "bell", "laguerre"})
    absorb(o, check_convolutions(classic_family(fam, 6), fam));
  absorb(o, check_knuth(classic_family("exp", 6), "exp"));
  absorb(o, check_knuth(classic_family("affine", 6), "affine"));
  for (const char* fam : {"exp", "geometric", "affine", "bell", "laguerre"})
    absorb(o, check_abel(classic_family(fam, 6), fam));
  return o;
}

Outcome lattice_appendix() {
  Outcome o;
  for (int m = 1; m <= 5; ++m)
    absorb(o, check_refinement_composition(m, true));
  for (int m = 1; m <= 6; ++m) absorb(o, check_partition_factorial_sum(m));
  for (int m = 1; m <= 7; ++m) {
    absorb(o, check_refinement_specializations(m));
    absorb(o, check_bottom_inversion_sum(m));
  }
  absorb(o, check_diagonal_conjugation(4));
  for (const auto& e : default_corpus()) {
    if (e.graph.has_loops() || e.graph.n() > 5) continue;
    absorb(o, check_coherent_family(e.graph, e.name));
  }
  return o;
}

Outcome sign_inequality() {
  Outcome o;
  std::mt19937 rng(2024);
  std::vector<Rational> pool{make_rational(-1), make_rational(-3, 4),
                             make_rational(-1, 2), make_rational(-1, 4)};
  std::vector<Rational> grid{make_rational(0), make_rational(1, 4),
                             make_rational(1, 2), make_rational(3, 4),
                             make_rational(1)};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (const auto& e : default_corpus()) {
    std::vector<Rational> vals;
    for (int i = 0; i < e.graph.m(); ++i) vals.push_back(pool[pick(rng)]);
    absorb(o, check_sign_inequality(e.graph, vals, 4, grid));
  }
  return o;
}

std::string capture(const std::string& cmd, int& exitCode) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    exitCode = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome deterministic_reports() {
  Outcome o;
  std::string cmd = std::string(TUTTE_CLI_PATH) + " check all --json";
  int rc1 = 0, rc2 = 0;
  std::string first = capture(cmd, rc1);
  std::string second = capture(cmd, rc2);
  require(o, rc1 == 0, "first run exited " + std::to_string(rc1));
  require(o, rc2 == 0, "second run exited " + std::to_string(rc2));
  require(o, !first.empty(), "empty report stream");
  require(o, first == second, "report streams differ between runs");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double budget;  // seconds; zero means no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "coloring state sums equal subset sums", 10, state_sums},
      {2, "partition lattice expansions with specializations", 60,
       partition_expansions},
      {3, "subset convolutions for every root", 30, subset_convolutions},
      {4, "two-point and rooted expansions", 60, two_point_and_rooted},
      {5, "blow-up generating functions", 120, blowup_series},
      {6, "complete-graph sequence routes", 120, complete_sequences},
      {7, "tree inversion enumerator", 60, inversion_polynomials},
      {8, "binomial-type family machinery", 120, binomial_machinery},
      {9, "partition lattice weight calculus", 120, lattice_appendix},
      {10, "derivative sign inequality on a rational grid", 30,
       sign_inequality},
      {11, "byte-identical check reports", 0, deterministic_reports},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (o.ok && c.budget > 0 && secs > c.budget) {
      o.ok = false;
      o.detail = "exceeded " + std::to_string((int)c.budget) + "s budget";
    }
    if (!o.ok) ++failures;
    char line[512];
    if (o.ok)
      std::snprintf(line, sizeof line,
                    "PASS %2d %s [instances=%ld, %.2fs]", c.id, c.label,
                    o.instances, secs);
    else
      std::snprintf(line, sizeof line, "FAIL %2d %s [%s, %.2fs]", c.id,
                    c.label, o.detail.c_str(), secs);
    std::cout << line << "\n";
  }
  return failures;
}
