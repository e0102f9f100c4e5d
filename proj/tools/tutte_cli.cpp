// Command line front end: graph polynomials, builtin sequences, family
// tables, refinement matrices and the identity check suites.

#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tutte/tutte.hpp"

namespace {

using namespace tutte;

MultiGraph load_graph(const std::string& path) {
  if (path == "-") {
    nlohmann::json j;
    std::cin >> j;
    return MultiGraph::from_json(j);
  }
  return MultiGraph::from_json_file(path);
}

MultiPoly apply_sets(MultiPoly p, const std::vector<std::string>& sets) {
  for (const auto& s : sets) {
    auto pos = s.find('=');
    if (pos == std::string::npos || pos == 0)
      throw std::invalid_argument("expected NAME=VALUE, got " + s);
    p = p.substitute(Variable(s.substr(0, pos)),
                     parse_rational(s.substr(pos + 1)));
  }
  return p;
}

void print_poly(const MultiPoly& p, bool json) {
  if (json)
    std::cout << p.to_json().dump() << "\n";
  else
    std::cout << p.str() << "\n";
}

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad count list: " + text);
    out.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<MultiPoly> parse_weights(const std::string& text, int n) {
  if (text == "ones" || text == "kn") return builtin_weights(text, n);
  std::vector<MultiPoly> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(MultiPoly(parse_rational(piece)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void print_sequence(const PolySequence& s, const std::vector<std::string>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (int n = s.start; n <= s.last(); ++n)
    arr.push_back(apply_sets(s.at(n), sets).str());
  std::cout << arr.dump() << "\n";
}

int run_graph_command(const std::string& which, const std::string& path,
                      const std::vector<std::string>& sets, bool json) {
  MultiGraph g = load_graph(path);
  MultiPoly p;
  if (which == "z")
    p = z_subset(g).value;
  else if (which == "zhat")
    p = zhat(g);
  else if (which == "connected")
    p = connected_poly(g);
  else if (which == "chromatic")
    p = chromatic(g);
  else
    p = connected_lambda(g);
  print_poly(apply_sets(p, sets), json);
  return 0;
}

int run_seq(const std::string& name, int n, const std::string& route,
            const std::string& coeffs, const std::vector<std::string>& sets) {
  if (n < 0) throw std::invalid_argument("need a nonnegative length");
  if (name == "cn") {
    if (route != "" && route != "linear" && route != "two-point")
      throw std::invalid_argument("cn routes: linear, two-point");
    print_sequence(route == "two-point" ? cn_nonlinear(n) : cn_linear(n), sets);
    return 0;
  }
  if (name == "zn") {
    ZnRoute r = ZnRoute::from_connected;
    if (route == "direct")
      r = ZnRoute::direct;
    else if (route == "two-point")
      r = ZnRoute::two_point;
    else if (route != "" && route != "connected")
      throw std::invalid_argument("zn routes: connected, direct, two-point");
    print_sequence(zn_sequence(n, r), sets);
    return 0;
  }
  if (name == "inv") {
    if (route != "" && route != "recursion" && route != "trees")
      throw std::invalid_argument("inv routes: recursion, trees");
    print_sequence(inversion_enumerator(
                       n, route == "trees" ? InvRoute::brute : InvRoute::recursion),
                   sets);
    return 0;
  }
  if (name == "zna" || name == "ync") {
    if (coeffs.empty())
      throw std::invalid_argument(name + " needs --coeffs");
    SeqRoute r = SeqRoute::partitions;
    if (route == "recursion")
      r = SeqRoute::recursion;
    else if (route == "series")
      r = SeqRoute::egf;
    else if (route != "" && route != "partitions")
      throw std::invalid_argument(name +
                                  " routes: partitions, recursion, series");
    auto w = parse_weights(coeffs, n);
    if ((int)w.size() < n)
      throw std::invalid_argument("need " + std::to_string(n) + " coefficients");
    print_sequence(name == "zna" ? zn_of_weights(w, n, r)
                                 : yn_of_weights(w, n, r),
                   sets);
    return 0;
  }
  throw std::invalid_argument("unknown sequence " + name);
}

int run_family(const std::string& name, int cap, const std::string& alpha,
               const std::string& beta) {
  if (cap < 0) throw std::invalid_argument("need a nonnegative cap");
  BinomialFamily f =
      name == "complete"
          ? zn_family(cap)
          : classic_family(name, cap, parse_rational(alpha),
                           parse_rational(beta));
  nlohmann::json arr = nlohmann::json::array();
  for (int n = 0; n <= cap; ++n) {
    nlohmann::json row;
    row["n"] = n;
    row["a"] = f.a({n}).str();
    if (n > 0) row["ahat"] = f.ahat({n}).str();
    arr.push_back(row);
  }
  std::cout << arr.dump() << "\n";
  return 0;
}

int run_mobius(int m, const std::string& q1, const std::string& q2) {
  if (m < 1 || m > 6)
    throw std::invalid_argument("ground set size must lie in 1..6");
  MultiPoly p1 = q1.empty() ? MultiPoly::var("q1") : MultiPoly(parse_rational(q1));
  MultiPoly p2 = q2.empty() ? MultiPoly::var("q2") : MultiPoly(parse_rational(q2));
  PartitionLattice lat(detail::numeric_ground(m));
  nlohmann::json out;
  out["size"] = lat.size();
  nlohmann::json parts = nlohmann::json::array();
  for (int i = 0; i < lat.size(); ++i) parts.push_back(lat.at(i).str());
  out["partitions"] = parts;
  nlohmann::json weights = nlohmann::json::array();
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      if (!lat.leq(i, j)) continue;
      nlohmann::json w;
      w["sigma"] = i;
      w["pi"] = j;
      w["value"] = refinement_weight(lat.at(i), lat.at(j), p1, p2).str();
      weights.push_back(w);
    }
  out["weights"] = weights;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_check(const std::string& suite, const std::vector<std::string>& files,
              int maxN, int threads, bool text) {
  RunOptions opts;
  opts.threads = threads;
  opts.max_n = maxN;
  std::vector<CorpusEntry> corpus;
  if (files.empty())
    corpus = default_corpus();
  else
    for (const auto& f : files) corpus.push_back({f, load_graph(f)});
  auto reports = run_suite(corpus, suite, opts);
  long passed = 0;
  for (const auto& r : reports) {
    if (r.passed) ++passed;
    if (!text) {
      std::cout << r.to_json_line() << "\n";
    } else if (r.passed) {
      std::cout << "PASS " << r.check << " instances=" << r.instances << "\n";
    } else {
      std::cout << "FAIL " << r.check << " instance=" << r.witness_instance
                << " residual=" << r.witness_residual << "\n";
    }
  }
  if (text)
    std::cout << "passed " << passed << "/" << reports.size() << " checks\n";
  return passed == (long)reports.size() ? 0 : 1;
}

int run_blowup(const std::string& path, const std::string& counts,
               bool clique) {
  MultiGraph g = load_graph(path);
  std::vector<int> c = parse_counts(counts);
  MultiGraph b = clique ? g.blowup_clique(c) : g.blowup_independent(c);
  std::cout << b.to_json().dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multivariate partition function toolkit"};
  app.require_subcommand(1);

  std::string graphPath = "-";
  std::vector<std::string> sets;
  bool json = false;
  struct {
    const char* name;
    const char* help;
  } polyCommands[] = {
      {"z", "partition function of a weighted graph"},
      {"zhat", "partition function with one factor of q removed"},
      {"connected", "connected spanning subgraph polynomial"},
      {"chromatic", "proper coloring polynomial"},
      {"lambda", "connected subgraphs graded by cycle rank"},
  };
  for (const auto& pc : polyCommands) {
    CLI::App* sub = app.add_subcommand(pc.name, pc.help);
    sub->add_option("--graph", graphPath, "graph JSON file, - for stdin");
    sub->add_option("--set", sets, "substitute NAME=VALUE before printing");
    sub->add_flag("--json", json, "print the polynomial as JSON");
  }

  auto* seq = app.add_subcommand("seq", "builtin polynomial sequences");
  std::string seqName, seqRoute, seqCoeffs;
  int seqN = 0;
  seq->add_option("name", seqName, "cn, zn, inv, zna or ync")->required();
  seq->add_option("--n", seqN, "last index")->required();
  seq->add_option("--route", seqRoute, "computation route");
  seq->add_option("--coeffs", seqCoeffs,
                  "weights for zna/ync: ones, kn, or comma separated rationals");
  seq->add_option("--set", sets, "substitute NAME=VALUE before printing");

  auto* fam = app.add_subcommand("family", "binomial-type family tables");
  std::string famName, famAlpha = "1", famBeta = "1";
  int famCap = 0;
  fam->add_option("name", famName,
                  "exp, geometric, affine, bell, laguerre or complete")
      ->required();
  fam->add_option("--cap", famCap, "table size")->required();
  fam->add_option("--alpha", famAlpha, "family scale parameter");
  fam->add_option("--beta", famBeta, "family shift parameter");

  auto* mob = app.add_subcommand("mobius",
                                 "refinement weights on a partition lattice");
  int mobM = 0;
  std::string mobQ1, mobQ2;
  mob->add_option("--m", mobM, "ground set size")->required();
  mob->add_option("--q1", mobQ1, "first parameter, default symbolic");
  mob->add_option("--q2", mobQ2, "second parameter, default symbolic");

  auto* chk = app.add_subcommand("check", "run an identity check suite");
  std::string suite;
  std::vector<std::string> corpusFiles;
  int maxN = 0;
  unsigned cores = std::thread::hardware_concurrency();
  int threads = cores ? (int)cores : 1;
  bool chkJson = false, chkText = false;
  chk->add_option("suite", suite,
                  "partitions, convolutions, nonlinear, genborgs, blowup, "
                  "lass, abel, mobius, complete or all")
      ->required();
  chk->add_option("--corpus", corpusFiles,
                  "graph JSON files replacing the builtin corpus");
  chk->add_option("--max-n", maxN,
                  "skip corpus graphs with more vertices and shorten the "
                  "sequence and lattice ladders")
      ->check(CLI::NonNegativeNumber);
  chk->add_option("--threads", threads,
                  "worker thread count, default all cores");
  auto* jsonFlag =
      chk->add_flag("--json", chkJson, "one JSON object per check (default)");
  chk->add_flag("--text", chkText, "human readable PASS/FAIL lines")
      ->excludes(jsonFlag);

  auto* blow = app.add_subcommand("blowup", "replace vertices by groups");
  std::string blowCounts;
  bool blowClique = false;
  blow->add_option("--graph", graphPath, "graph JSON file, - for stdin");
  blow->add_option("--counts", blowCounts, "group size per vertex, comma list")
      ->required();
  blow->add_flag("--clique", blowClique,
                 "connect each group internally with fresh weights");

  try {
    app.parse(argc, argv);
    for (const auto& pc : polyCommands)
      if (app.got_subcommand(pc.name))
        return run_graph_command(pc.name, graphPath, sets, json);
    if (app.got_subcommand("seq"))
      return run_seq(seqName, seqN, seqRoute, seqCoeffs, sets);
    if (app.got_subcommand("family"))
      return run_family(famName, famCap, famAlpha, famBeta);
    if (app.got_subcommand("mobius")) return run_mobius(mobM, mobQ1, mobQ2);
    if (app.got_subcommand("check"))
      return run_check(suite, corpusFiles, maxN, threads, chkText);
    if (app.got_subcommand("blowup"))
      return run_blowup(graphPath, blowCounts, blowClique);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tutte::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
