#pragma once

#include <json.hpp>

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutte/multipoly.hpp"
#include "tutte/partitions.hpp"

namespace tutte {

namespace detail {

/// Union-find with path compression and union by size.
struct UnionFind {
  std::vector<int> parent, size;
  explicit UnionFind(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

}  // namespace detail

/// Per-vertex multiplicities for a blow-up, aligned with the vertex order.
using MultiIndex = std::vector<int>;

/// Undirected multigraph with labelled vertices and weighted edges. Parallel
/// edges and loops are kept as distinct edge slots; edge weights are symbolic
/// variables or exact rationals, represented uniformly as polynomials.
class MultiGraph {
 public:
  struct Edge {
    int a, b;
    MultiPoly weight;
  };

  explicit MultiGraph(std::vector<std::string> vertexIds)
      : ids_(std::move(vertexIds)) {
    for (size_t i = 0; i < ids_.size(); ++i)
      if (!index_.emplace(ids_[i], (int)i).second)
        throw std::invalid_argument("duplicate vertex id " + ids_[i]);
  }

  int n() const { return (int)ids_.size(); }
  int m() const { return (int)edges_.size(); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertex_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw std::invalid_argument("unknown vertex id " + id);
    return it->second;
  }

  /// Adds an edge; without an explicit weight it gets the symbolic variable
  /// v:<edge index>.
  void add_edge(int a, int b) {
    add_edge(a, b, MultiPoly::var("v:" + std::to_string(edges_.size())));
  }
  void add_edge(int a, int b, MultiPoly weight) {
    if (a < 0 || a >= n() || b < 0 || b >= n())
      throw std::invalid_argument("edge endpoint out of range");
    edges_.push_back(Edge{a, b, std::move(weight)});
  }
  void add_edge(const std::string& a, const std::string& b) {
    add_edge(vertex_index(a), vertex_index(b));
  }
  void add_edge(const std::string& a, const std::string& b, MultiPoly weight) {
    add_edge(vertex_index(a), vertex_index(b), std::move(weight));
  }

  bool loop_at(int v) const {
    for (const auto& e : edges_)
      if (e.a == v && e.b == v) return true;
    return false;
  }
  bool has_loops() const {
    for (const auto& e : edges_)
      if (e.a == e.b) return true;
    return false;
  }

  /// Vertex-induced subgraph; keeps vertex order and edge order, weights
  /// unchanged. The mask is over vertex indices.
  MultiGraph induced(unsigned mask) const {
    std::vector<std::string> ids;
    std::vector<int> remap(n(), -1);
    for (int i = 0; i < n(); ++i)
      if (mask >> i & 1) {
        remap[i] = (int)ids.size();
        ids.push_back(ids_[i]);
      }
    MultiGraph g(std::move(ids));
    for (const auto& e : edges_)
      if (remap[e.a] >= 0 && remap[e.b] >= 0)
        g.add_edge(remap[e.a], remap[e.b], e.weight);
    return g;
  }

  /// Connected components left by the edge subset (bit i = edge i), counting
  /// every vertex of the graph.
  int count_components(unsigned long long edgeMask) const {
    detail::UnionFind uf(n());
    int k = n();
    for (int i = 0; i < m(); ++i)
      if (edgeMask >> i & 1)
        if (uf.unite(edges_[i].a, edges_[i].b)) --k;
    return k;
  }

  /// |A| - |V| + k(A): the number of independent cycles of (V, A).
  int cyclomatic(unsigned long long edgeMask) const {
    int sz = 0;
    for (int i = 0; i < m(); ++i)
      if (edgeMask >> i & 1) ++sz;
    return sz - n() + count_components(edgeMask);
  }

  /// Vertex partition into the connected components of (V, A).
  SetPartition components_partition(unsigned long long edgeMask) const {
    detail::UnionFind uf(n());
    for (int i = 0; i < m(); ++i)
      if (edgeMask >> i & 1) uf.unite(edges_[i].a, edges_[i].b);
    std::vector<int> rgs(n());
    std::map<int, int> label;
    for (int i = 0; i < n(); ++i) {
      int root = uf.find(i);
      rgs[i] = label.emplace(root, (int)label.size()).first->second;
    }
    return SetPartition(ids_, std::move(rgs));
  }

  /// Edges with one endpoint inside the vertex mask and the other equal to j.
  std::vector<int> edges_between(unsigned vertexMask, int j) const {
    std::vector<int> out;
    for (int i = 0; i < m(); ++i) {
      const auto& e = edges_[i];
      bool aIn = vertexMask >> e.a & 1, bIn = vertexMask >> e.b & 1;
      if ((aIn && e.b == j) || (bIn && e.a == j)) out.push_back(i);
    }
    return out;
  }

  /// Blow-up replacing vertex i by an independent set of counts[i] copies
  /// named "<id>#1".."<id>#k"; each original edge becomes the full bipartite
  /// bundle between the copy sets, every copy keeping the original weight.
  MultiGraph blowup_independent(const MultiIndex& counts) const {
    return blowup(counts, false);
  }

  /// Same, but additionally joins the copies of vertex i pairwise with
  /// weight w:<id>.
  MultiGraph blowup_clique(const MultiIndex& counts) const {
    return blowup(counts, true);
  }

  static MultiGraph from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw std::invalid_argument("graph json needs vertices and edges");
    std::vector<std::string> ids;
    for (const auto& v : j.at("vertices")) {
      if (!v.is_string())
        throw std::invalid_argument("vertex ids must be strings");
      ids.push_back(v.get<std::string>());
    }
    MultiGraph g(std::move(ids));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw std::invalid_argument("edge entries are [u,v] or [u,v,weight]");
      int a = g.vertex_index(e.at(0).get<std::string>());
      int b = g.vertex_index(e.at(1).get<std::string>());
      if (e.size() == 2) {
        g.add_edge(a, b);
      } else {
        g.add_edge(a, b, parse_weight(e.at(2)));
      }
    }
    return g;
  }

  static MultiGraph from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
  }

  nlohmann::json to_json() const {
    nlohmann::json jv = nlohmann::json::array();
    for (const auto& id : ids_) jv.push_back(id);
    nlohmann::json je = nlohmann::json::array();
    for (const auto& e : edges_)
      je.push_back({ids_[e.a], ids_[e.b], weight_str(e.weight)});
    return {{"vertices", jv}, {"edges", je}};
  }

  /// Stable one-line description used in reports and witnesses.
  std::string fingerprint() const { return to_json().dump(); }

 private:
  static MultiPoly parse_weight(const nlohmann::json& w) {
    if (w.is_number_integer()) return MultiPoly(Rational(w.get<long>()));
    if (!w.is_string())
      throw std::invalid_argument("edge weight must be a string or integer");
    const std::string s = w.get<std::string>();
    if (s.empty()) throw std::invalid_argument("empty edge weight");
    if (s[0] == '-' || s[0] == '+' || (s[0] >= '0' && s[0] <= '9'))
      return MultiPoly(parse_rational(s));
    return MultiPoly::var(s);
  }

  static std::string weight_str(const MultiPoly& w) { return w.str(); }

  MultiGraph blowup(const MultiIndex& counts, bool cliques) const {
    if ((int)counts.size() != n())
      throw std::invalid_argument("blow-up counts must cover every vertex");
    for (int c : counts)
      if (c < 0) throw std::invalid_argument("negative blow-up count");
    if (has_loops())
      throw std::invalid_argument("blow-up of a graph with loops");
    std::vector<std::string> ids;
    std::vector<int> base(n(), 0);
    for (int i = 0; i < n(); ++i) {
      base[i] = (int)ids.size();
      for (int a = 1; a <= counts[i]; ++a)
        ids.push_back(ids_[i] + "#" + std::to_string(a));
    }
    MultiGraph g(std::move(ids));
    for (const auto& e : edges_)
      for (int a = 0; a < counts[e.a]; ++a)
        for (int b = 0; b < counts[e.b]; ++b)
          g.add_edge(base[e.a] + a, base[e.b] + b, e.weight);
    if (cliques)
      for (int i = 0; i < n(); ++i)
        for (int a = 0; a < counts[i]; ++a)
          for (int b = a + 1; b < counts[i]; ++b)
            g.add_edge(base[i] + a, base[i] + b,
                       MultiPoly::var("w:" + ids_[i]));
    return g;
  }

  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
};

}  // namespace tutte
