#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutte/check_report.hpp"
#include "tutte/graph.hpp"
#include "tutte/multipoly.hpp"
#include "tutte/partitions.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

/// The lattice of partitions of a fixed ground set, with the refinement
/// order cached. Index order is the enumeration order of the restricted
/// growth strings.
class PartitionLattice {
 public:
  explicit PartitionLattice(const std::vector<std::string>& ground)
      : parts_(enumerate_partitions(ground)) {
    int n = size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) leq_[i][j] = parts_[i].refines(parts_[j]);
  }

  int size() const { return (int)parts_.size(); }
  const SetPartition& at(int i) const { return parts_.at(i); }
  bool leq(int i, int j) const { return leq_[i][j]; }
  int bottom() const { return size() - 1; }  // all singletons is listed last
  int top() const { return 0; }              // one block is listed first

 private:
  std::vector<SetPartition> parts_;
  std::vector<std::vector<bool>> leq_;
};

/// Square matrix indexed by the partitions of a lattice.
class PartitionMatrix {
 public:
  explicit PartitionMatrix(const PartitionLattice& lat)
      : n_(lat.size()), cells_(n_ * n_) {}

  int size() const { return n_; }
  MultiPoly& at(int i, int j) { return cells_.at(i * n_ + j); }
  const MultiPoly& at(int i, int j) const { return cells_.at(i * n_ + j); }

  PartitionMatrix mul(const PartitionMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("size mismatch");
    PartitionMatrix out = *this;
    for (auto& c : out.cells_) c = MultiPoly();
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const MultiPoly& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
          const MultiPoly& b = o.at(k, j);
          if (b.is_zero()) continue;
          out.at(i, j) += a * b;
        }
      }
    return out;
  }

  friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  int n_;
  std::vector<MultiPoly> cells_;
};

inline PartitionMatrix identity_matrix(const PartitionLattice& lat) {
  PartitionMatrix m(lat);
  for (int i = 0; i < lat.size(); ++i) m.at(i, i) = MultiPoly(1);
  return m;
}

/// Indicator of refinement: 1 when sigma <= pi.
inline PartitionMatrix zeta_matrix(const PartitionLattice& lat) {
  PartitionMatrix m(lat);
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j)
      if (lat.leq(i, j)) m.at(i, j) = MultiPoly(1);
  return m;
}

/// Two-parameter refinement weight: for sigma <= pi, the product over the
/// blocks of pi of (q2 - q1)(q2 - 2 q1)..(q2 - (lambda-1) q1), where lambda
/// counts the sigma-blocks inside that pi-block. Collapses to the classical
/// lattice inversion weight at (q1,q2) = (1,0) and to the refinement
/// indicator at (0,1).
inline MultiPoly refinement_weight(const SetPartition& sigma,
                                   const SetPartition& pi, const MultiPoly& q1,
                                   const MultiPoly& q2) {
  MultiPoly out(1);
  for (int lambda : sigma.blocks_within(pi))
    for (int j = 1; j < lambda; ++j) out *= q2 - MultiPoly(j) * q1;
  return out;
}

inline PartitionMatrix refinement_matrix(const PartitionLattice& lat,
                                         const MultiPoly& q1,
                                         const MultiPoly& q2) {
  PartitionMatrix m(lat);
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j)
      if (lat.leq(i, j))
        m.at(i, j) = refinement_weight(lat.at(i), lat.at(j), q1, q2);
  return m;
}

namespace detail {

inline std::vector<std::string> numeric_ground(int m) {
  std::vector<std::string> g;
  for (int i = 1; i <= m; ++i) g.push_back(std::to_string(i));
  return g;
}

inline MultiPoly classical_inversion_weight(const SetPartition& sigma,
                                            const SetPartition& pi) {
  Rational out(1);
  for (int lambda : sigma.blocks_within(pi)) {
    Rational sign = (lambda - 1) % 2 == 0 ? 1 : -1;
    out *= Rational(sign * factorial(lambda - 1));
  }
  return MultiPoly(out);
}

}  // namespace detail

/// Composition law of the two-parameter weights under matrix product,
/// symbolically in q1, q2, q3 when symbolic is set, otherwise at fixed
/// rational parameter triples.
inline CheckReport check_refinement_composition(int m, bool symbolic) {
  PartitionLattice lat(detail::numeric_ground(m));
  CheckBuilder out("refinement_composition[m=" + std::to_string(m) + "]");
  out.member("partition lattice on " + std::to_string(m) + " elements");
  auto run = [&](const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                 const std::string& label) {
    PartitionMatrix lhs =
        refinement_matrix(lat, a, b).mul(refinement_matrix(lat, b, c));
    PartitionMatrix rhs = refinement_matrix(lat, a, c);
    for (int i = 0; i < lat.size(); ++i)
      for (int j = 0; j < lat.size(); ++j)
        out.require_zero(lhs.at(i, j) - rhs.at(i, j),
                         label + " sigma=" + lat.at(i).str() + " pi=" +
                             lat.at(j).str());
  };
  if (symbolic) {
    run(MultiPoly::var("q1"), MultiPoly::var("q2"), MultiPoly::var("q3"),
        "symbolic");
  } else {
    const long triples[][3] = {{2, -1, 3}, {0, 1, 0}, {1, 0, 1}, {-2, 5, 7}};
    for (const auto& t : triples)
      run(MultiPoly(t[0]), MultiPoly(t[1]), MultiPoly(t[2]),
          "q=(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
              std::to_string(t[2]) + ")");
  }
  return out.finish();
}

/// The three parameter specializations and two-sided classical inversion,
/// checked entrywise over the comparable pairs so that no dense matrix
/// product is ever materialized. Entries off the order vanish by
/// construction, and product entries off the order vanish by transitivity.
inline CheckReport check_refinement_specializations(int m) {
  PartitionLattice lat(detail::numeric_ground(m));
  CheckBuilder out("refinement_specializations[m=" + std::to_string(m) + "]");
  out.member("partition lattice on " + std::to_string(m) + " elements");
  MultiPoly q = MultiPoly::var("q");
  std::vector<std::string> strs;
  for (int i = 0; i < lat.size(); ++i) strs.push_back(lat.at(i).str());
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      if (!lat.leq(i, j)) continue;
      std::string pair = "sigma=" + strs[i] + " pi=" + strs[j];
      MultiPoly delta(i == j ? 1 : 0);
      out.require_zero(
          refinement_weight(lat.at(i), lat.at(j), q, q) - delta,
          pair + " equal parameters");
      out.require_zero(refinement_weight(lat.at(i), lat.at(j), MultiPoly(0),
                                         MultiPoly(1)) -
                           MultiPoly(1),
                       pair + " indicator");
      out.require_zero(
          refinement_weight(lat.at(i), lat.at(j), MultiPoly(1), MultiPoly(0)) -
              detail::classical_inversion_weight(lat.at(i), lat.at(j)),
          pair + " signed factorials");
      MultiPoly fwd, bwd;
      for (int k = 0; k < lat.size(); ++k) {
        if (!lat.leq(i, k) || !lat.leq(k, j)) continue;
        fwd += detail::classical_inversion_weight(lat.at(k), lat.at(j));
        bwd += detail::classical_inversion_weight(lat.at(i), lat.at(k));
      }
      out.require_zero(fwd - delta, pair + " indicator times inversion");
      out.require_zero(bwd - delta, pair + " inversion times indicator");
    }
  return out.finish();
}

/// Alternating sum anchored at the bottom element:
/// sum over partitions of the signed factorial weight times q^{blocks}
/// telescopes to the falling factorial. Needs no matrices.
inline CheckReport check_bottom_inversion_sum(int m) {
  CheckBuilder out("bottom_inversion_sum[m=" + std::to_string(m) + "]");
  out.member("partition lattice on " + std::to_string(m) + " elements");
  MultiPoly q = MultiPoly::var("q");
  auto ground = detail::numeric_ground(m);
  SetPartition bottom = SetPartition::discrete(ground);
  MultiPoly total;
  for (const auto& pi : enumerate_partitions(ground))
    total += detail::classical_inversion_weight(bottom, pi) *
             q.pow(pi.block_count());
  out.require_zero(total - falling_factorial(q, m), "alternating sum");
  return out.finish();
}

/// Two-variable falling-factorial convolution over one partition lattice:
/// sum over partitions of r^(falling blocks) times the product over blocks
/// of s^(falling size) equals (r s)^(falling m), symbolically in r and s.
inline CheckReport check_partition_factorial_sum(int m) {
  CheckBuilder out("partition_factorial_sum[m=" + std::to_string(m) + "]");
  out.member("partition lattice on " + std::to_string(m) + " elements");
  MultiPoly r = MultiPoly::var("r"), s = MultiPoly::var("s");
  MultiPoly total;
  for (const auto& omega : enumerate_partitions(detail::numeric_ground(m))) {
    MultiPoly term = falling_factorial(r, omega.block_count());
    for (int b : omega.block_sizes()) term *= falling_factorial(s, b);
    total += term;
  }
  out.require_zero(total - falling_factorial(r * s, m), "factorial sum");
  return out.finish();
}

/// Denominator-free diagonal conjugation: scaling both parameters by r
/// multiplies each entry by r^(|sigma| - |pi|), checked as
/// r^|sigma| mu_{q1,q2} = mu_{r q1, r q2} r^|pi| entrywise.
inline CheckReport check_diagonal_conjugation(int m) {
  PartitionLattice lat(detail::numeric_ground(m));
  CheckBuilder out("diagonal_conjugation[m=" + std::to_string(m) + "]");
  out.member("partition lattice on " + std::to_string(m) + " elements");
  MultiPoly q1 = MultiPoly::var("q1"), q2 = MultiPoly::var("q2"),
            r = MultiPoly::var("r");
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      if (!lat.leq(i, j)) continue;
      MultiPoly lhs = r.pow(lat.at(i).block_count()) *
                      refinement_weight(lat.at(i), lat.at(j), q1, q2);
      MultiPoly rhs = refinement_weight(lat.at(i), lat.at(j), r * q1, r * q2) *
                      r.pow(lat.at(j).block_count());
      out.require_zero(lhs - rhs, "sigma=" + lat.at(i).str() + " pi=" +
                                      lat.at(j).str());
    }
  return out.finish();
}

/// Coherence of the per-partition products of hatted partition functions of
/// induced subgraphs: the row vector F_q(pi) = prod_B zhat(G[B]) satisfies
/// F_{q1} mu_{q1,q2} = F_{q2}. Evaluated symbolically in q1, q2 and the edge
/// weights; the top entry is the two-parameter expansion of zhat(G).
inline CheckReport check_coherent_family(const MultiGraph& g,
                                         const std::string& name) {
  if (g.has_loops())
    throw std::invalid_argument("coherent family needs a loopless graph");
  if (g.n() < 1 || g.n() > 31)
    throw std::invalid_argument("vertex count out of range");
  PartitionLattice lat(g.vertex_ids());
  CheckBuilder out("coherent_family[" + name + "]");
  out.member(name);
  Variable q("q");
  MultiPoly q1 = MultiPoly::var("q1"), q2 = MultiPoly::var("q2");
  std::vector<MultiPoly> f1(lat.size()), f2(lat.size());
  for (int i = 0; i < lat.size(); ++i) {
    MultiPoly prod(1);
    for (const auto& block : lat.at(i).blocks()) {
      unsigned mask = 0;
      for (int v : block) mask |= 1u << v;
      prod *= zhat(g.induced(mask));
    }
    f1[i] = prod.substitute(q, q1);
    f2[i] = prod.substitute(q, q2);
  }
  for (int j = 0; j < lat.size(); ++j) {
    MultiPoly acc;
    for (int i = 0; i < lat.size(); ++i) {
      if (!lat.leq(i, j)) continue;
      acc += f1[i] * refinement_weight(lat.at(i), lat.at(j), q1, q2);
    }
    out.require_zero(acc - f2[j], "pi=" + lat.at(j).str());
  }
  return out.finish();
}

}  // namespace tutte
