#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutte/check_report.hpp"
#include "tutte/multipoly.hpp"
#include "tutte/series.hpp"

namespace tutte {

namespace detail {

/// All vectors 0 <= k <= bound componentwise, odometer order (last
/// coordinate fastest). Lexicographic, so componentwise-smaller vectors
/// always come first.
inline std::vector<std::vector<int>> box_below(const std::vector<int>& bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(bound.size(), 0);
  for (;;) {
    out.push_back(k);
    int i = (int)k.size() - 1;
    while (i >= 0 && k[i] == bound[i]) k[i--] = 0;
    if (i < 0) return out;
    ++k[i];
  }
}

inline bool is_zero_index(const std::vector<int>& n) {
  for (int v : n)
    if (v != 0) return false;
  return true;
}

inline Integer binom_multi(const std::vector<int>& n,
                           const std::vector<int>& k) {
  Integer b(1);
  for (size_t i = 0; i < n.size(); ++i) {
    b *= binomial(n[i], k[i]);
    if (b == 0) break;
  }
  return b;
}

inline std::vector<int> index_sub(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline int index_total(const std::vector<int>& n) {
  int s = 0;
  for (int v : n) s += v;
  return s;
}

inline std::string index_str(const std::vector<int>& n) {
  std::string out;
  for (size_t i = 0; i < n.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(n[i]);
  }
  return out;
}

}  // namespace detail

/// Coefficients of a "connected" sequence: one polynomial per nonzero
/// multi-index within the cap. Unset entries read as zero.
class CoeffSequence {
 public:
  explicit CoeffSequence(std::vector<int> cap) : cap_(std::move(cap)) {
    if (cap_.empty()) throw std::invalid_argument("empty coefficient cap");
    for (int c : cap_)
      if (c < 0) throw std::invalid_argument("negative coefficient cap");
  }

  int dim() const { return (int)cap_.size(); }
  const std::vector<int>& cap() const { return cap_; }

  void set(const std::vector<int>& n, MultiPoly value) {
    check_index(n);
    if (detail::is_zero_index(n))
      throw std::invalid_argument("connected coefficients start at n != 0");
    if (value.is_zero())
      c_.erase(n);
    else
      c_[n] = std::move(value);
  }

  const MultiPoly& at(const std::vector<int>& n) const {
    check_index(n);
    static const MultiPoly zero;
    auto it = c_.find(n);
    return it == c_.end() ? zero : it->second;
  }

 private:
  void check_index(const std::vector<int>& n) const {
    if (n.size() != cap_.size())
      throw std::invalid_argument("multi-index of wrong dimension");
    for (size_t i = 0; i < n.size(); ++i)
      if (n[i] < 0 || n[i] > cap_[i])
        throw std::out_of_range("multi-index beyond the cap");
  }

  std::vector<int> cap_;
  std::map<std::vector<int>, MultiPoly> c_;
};

/// Table of a binomial-type family: a_n(q) for all n within the cap, with
/// a_0 = 1 and a_n = q * ahat_n for n != 0. Entries are polynomials in the
/// variable q (and possibly further symbols carried by the coefficients).
class BinomialFamily {
 public:
  explicit BinomialFamily(std::vector<int> cap) : cap_(std::move(cap)) {
    if (cap_.empty()) throw std::invalid_argument("empty family cap");
  }

  int dim() const { return (int)cap_.size(); }
  const std::vector<int>& cap() const { return cap_; }

  const MultiPoly& a(const std::vector<int>& n) const {
    return fetch(a_, n, "a");
  }
  const MultiPoly& ahat(const std::vector<int>& n) const {
    if (detail::is_zero_index(n))
      throw std::invalid_argument("ahat is undefined at n = 0");
    return fetch(ahat_, n, "ahat");
  }

  void set_entry(const std::vector<int>& n, MultiPoly an, MultiPoly ahatn) {
    a_[n] = std::move(an);
    if (!detail::is_zero_index(n)) ahat_[n] = std::move(ahatn);
  }

 private:
  const MultiPoly& fetch(const std::map<std::vector<int>, MultiPoly>& table,
                         const std::vector<int>& n, const char* what) const {
    if (n.size() != cap_.size())
      throw std::invalid_argument("multi-index of wrong dimension");
    for (size_t i = 0; i < n.size(); ++i)
      if (n[i] < 0 || n[i] > cap_[i])
        throw std::out_of_range("multi-index beyond the cap");
    auto it = table.find(n);
    if (it == table.end())
      throw std::logic_error(std::string(what) + " entry missing");
    return it->second;
  }

  std::vector<int> cap_;
  std::map<std::vector<int>, MultiPoly> a_;
  std::map<std::vector<int>, MultiPoly> ahat_;
};

/// Builds the family from its connected coefficients via the pivot
/// recursion: with i the first coordinate where n_i >= 1,
///   ahat_n = sum over k (with k_i >= 1) of C(n-d_i, k-d_i) c_k a_{n-k},
///   a_n = q * ahat_n.
inline BinomialFamily family_from_connected(const CoeffSequence& c) {
  BinomialFamily f(c.cap());
  MultiPoly q = MultiPoly::var("q");
  for (const auto& n : detail::box_below(c.cap())) {
    if (detail::is_zero_index(n)) {
      f.set_entry(n, MultiPoly(1), MultiPoly());
      continue;
    }
    size_t pivot = 0;
    while (n[pivot] == 0) ++pivot;
    std::vector<int> nd = n;
    --nd[pivot];
    MultiPoly ahat;
    for (const auto& k : detail::box_below(n)) {
      if (detail::is_zero_index(k) || k[pivot] < 1) continue;
      const MultiPoly& ck = c.at(k);
      if (ck.is_zero()) continue;
      std::vector<int> kd = k;
      --kd[pivot];
      Integer w = detail::binom_multi(nd, kd);
      if (w == 0) continue;
      ahat += w * (ck * f.a(detail::index_sub(n, k)));
    }
    f.set_entry(n, q * ahat, ahat);
  }
  return f;
}

namespace detail {

/// Sums over ordered tuples of nonzero multi-indices with a fixed total,
/// grouped by tuple length: result[l] = sum over (n_1..n_l), sum n_j = n, of
/// the multinomial coefficient times prod f(n_j).
class CompositionSums {
 public:
  explicit CompositionSums(std::function<MultiPoly(const std::vector<int>&)> f)
      : f_(std::move(f)) {}

  const std::map<int, MultiPoly>& at(const std::vector<int>& n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    std::map<int, MultiPoly> result;
    if (is_zero_index(n)) {
      result[0] = MultiPoly(1);
    } else {
      for (const auto& k : box_below(n)) {
        if (is_zero_index(k)) continue;
        MultiPoly fk = f_(k);
        if (fk.is_zero()) continue;
        MultiPoly w = binom_multi(n, k) * fk;
        for (const auto& [l, p] : at(index_sub(n, k))) {
          MultiPoly add = w * p;
          auto [jt, fresh] = result.emplace(l + 1, add);
          if (!fresh) jt->second += add;
        }
      }
    }
    return memo_.emplace(n, std::move(result)).first->second;
  }

 private:
  std::function<MultiPoly(const std::vector<int>&)> f_;
  std::map<std::vector<int>, std::map<int, MultiPoly>> memo_;
};

}  // namespace detail

/// Partition-sum form of the family, independent of the recursion route:
///   a_n(q) = sum_l q^l / l! sum over ordered decompositions of n into l
///   nonzero parts of the multinomial times prod c_{part}.
inline std::map<std::vector<int>, MultiPoly> family_partition_sum(
    const CoeffSequence& c) {
  detail::CompositionSums sums(
      [&](const std::vector<int>& k) { return c.at(k); });
  std::map<std::vector<int>, MultiPoly> out;
  for (const auto& n : detail::box_below(c.cap())) {
    MultiPoly total;
    for (const auto& [l, p] : sums.at(n))
      total += MultiPoly(make_rational(Integer(1), factorial(l))) *
               MultiPoly::var("q", l) * p;
    out[n] = total;
  }
  return out;
}

/// Inverse of family_from_connected:
///   c_n = sum_l (-q)^(l-1) / l * [ordered decompositions with ahat parts].
/// The result must not depend on q; a residue in q signals an inconsistent
/// family table and raises logic_error.
inline CoeffSequence connected_from_family(const BinomialFamily& f) {
  detail::CompositionSums sums([&](const std::vector<int>& k) {
    return f.ahat(k);
  });
  CoeffSequence c(f.cap());
  Variable q("q");
  for (const auto& n : detail::box_below(f.cap())) {
    if (detail::is_zero_index(n)) continue;
    MultiPoly total;
    for (const auto& [l, p] : sums.at(n)) {
      if (l < 1) continue;
      Rational sign = (l - 1) % 2 == 0 ? 1 : -1;
      MultiPoly weight =
          MultiPoly(Rational(sign / l)) * MultiPoly::var(q, l - 1);
      total += weight * p;
    }
    if (total.has_var(q))
      throw std::logic_error(
          "connected coefficients came out q-dependent at n = " +
          detail::index_str(n));
    c.set(n, total);
  }
  return c;
}

/// Expansion of the family at one parameter through the hatted values at
/// another:
///   a_n(q2) = sum_l (1/l!) prod_{j=0}^{l-1} (q2 - j q1)
///             * [ordered decompositions with ahat(q1) parts].
/// q1 and q2 may be arbitrary polynomials.
inline std::map<std::vector<int>, MultiPoly> family_power_expand(
    const BinomialFamily& f, const MultiPoly& q1, const MultiPoly& q2) {
  Variable q("q");
  detail::CompositionSums sums([&](const std::vector<int>& k) {
    return f.ahat(k).substitute(q, q1);
  });
  std::map<std::vector<int>, MultiPoly> out;
  for (const auto& n : detail::box_below(f.cap())) {
    MultiPoly total;
    for (const auto& [l, p] : sums.at(n)) {
      MultiPoly prefactor(1);
      for (int j = 0; j < l; ++j) prefactor *= q2 - MultiPoly(j) * q1;
      total += MultiPoly(make_rational(Integer(1), factorial(l))) *
               prefactor * p;
    }
    out[n] = total;
  }
  return out;
}

namespace detail {

inline MultiPoly dot_with_t(const std::vector<int>& k, int dim) {
  MultiPoly out;
  if (dim == 1) return MultiPoly(k[0]) * MultiPoly::var("t");
  for (int i = 0; i < dim; ++i)
    out += MultiPoly(k[i]) * MultiPoly::var("t:" + std::to_string(i + 1));
  return out;
}

}  // namespace detail

/// Convolution and recursion identities, exact in symbolic q1, q2:
/// the two-parameter product rule, its i-weighted variant for every pivot
/// coordinate, the mixed-parameter recursion, and the hatted convolution.
inline CheckReport check_convolutions(const BinomialFamily& f,
                                      const std::string& familyName) {
  Variable q("q");
  MultiPoly q1 = MultiPoly::var("q1"), q2 = MultiPoly::var("q2");
  MultiPoly q12 = q1 + q2;
  CheckBuilder out("family_convolutions[" + familyName + "]");
  out.member(familyName);
  auto A = [&](const std::vector<int>& n, const MultiPoly& arg) {
    return f.a(n).substitute(q, arg);
  };
  auto H = [&](const std::vector<int>& n, const MultiPoly& arg) {
    return f.ahat(n).substitute(q, arg);
  };
  for (const auto& n : detail::box_below(f.cap())) {
    std::string label = "n=(" + detail::index_str(n) + ")";
    // product rule
    MultiPoly lhs1;
    for (const auto& k : detail::box_below(n))
      lhs1 += detail::binom_multi(n, k) *
              (A(k, q1) * A(detail::index_sub(n, k), q2));
    out.require_zero(lhs1 - A(n, q12), label + " product rule");
    if (detail::is_zero_index(n)) continue;
    for (size_t i = 0; i < n.size(); ++i) {
      if (n[i] < 1) continue;
      std::string ilabel = label + " i=" + std::to_string(i + 1);
      std::vector<int> nd = n;
      --nd[i];
      MultiPoly weighted, recursion, hatted;
      for (const auto& k : detail::box_below(n)) {
        if (detail::is_zero_index(k)) continue;
        MultiPoly hk = H(k, q1);
        MultiPoly rest = A(detail::index_sub(n, k), q2);
        Integer cnk = detail::binom_multi(n, k);
        weighted += (MultiPoly(k[i]) * MultiPoly(cnk)) * (hk * rest);
        Integer ckd = 0;
        if (k[i] >= 1) {
          std::vector<int> kd = k;
          --kd[i];
          ckd = detail::binom_multi(nd, kd);
          hatted += ckd * (hk * rest);
        }
        recursion += (MultiPoly(ckd) * q12 - MultiPoly(cnk) * q1) * hk * rest;
      }
      out.require_zero(weighted - MultiPoly(n[i]) * H(n, q12),
                       ilabel + " weighted rule");
      out.require_zero(recursion - A(n, q2), ilabel + " mixed recursion");
      out.require_zero(hatted - H(n, q12), ilabel + " hatted rule");
    }
  }
  return out.finish();
}

/// Abel-shifted identities, exact in symbolic q1, q2 and shift t (one shift
/// variable per coordinate in the multi-index case), with the convention
/// that the factor q*ahat_0(q) reads 1.
inline CheckReport check_abel(const BinomialFamily& f,
                              const std::string& familyName) {
  Variable q("q");
  int dim = f.dim();
  MultiPoly q1 = MultiPoly::var("q1"), q2 = MultiPoly::var("q2");
  CheckBuilder out("family_abel[" + familyName + "]");
  out.member(familyName);
  auto H = [&](const std::vector<int>& n, const MultiPoly& arg) {
    return f.ahat(n).substitute(q, arg);
  };
  auto A = [&](const std::vector<int>& n, const MultiPoly& arg) {
    return f.a(n).substitute(q, arg);
  };
  // the factor p * ahat_n(p + shift), with the n = 0 convention
  auto qhat = [&](const MultiPoly& p, const std::vector<int>& n) {
    if (detail::is_zero_index(n)) return MultiPoly(1);
    return p * H(n, p + detail::dot_with_t(n, dim));
  };
  for (const auto& n : detail::box_below(f.cap())) {
    std::string label = "n=(" + detail::index_str(n) + ")";
    MultiPoly nshift = detail::dot_with_t(n, dim);
    MultiPoly sum1, sum3, sum4;
    for (const auto& k : detail::box_below(n)) {
      std::vector<int> r = detail::index_sub(n, k);
      Integer cnk = detail::binom_multi(n, k);
      MultiPoly kshift = detail::dot_with_t(k, dim);
      sum1 += cnk * (qhat(q1, k) * qhat(q2, r));
      sum3 += cnk * (A(k, q1 + kshift) * qhat(q2, r));
      sum4 += cnk * (qhat(q1, k) * A(r, q2 - kshift));
    }
    MultiPoly rhs1 = detail::is_zero_index(n)
                         ? MultiPoly(1)
                         : (q1 + q2) * H(n, q1 + q2 + nshift);
    out.require_zero(sum1 - rhs1, label + " shifted product rule");
    out.require_zero(sum3 - A(n, q1 + q2 + nshift),
                     label + " shifted mixed rule");
    out.require_zero(sum4 - A(n, q1 + q2), label + " shifted plain rule");
    if (detail::is_zero_index(n)) continue;
    for (int i = 0; i < dim; ++i) {
      if (n[i] < 1) continue;
      MultiPoly sum2;
      for (const auto& k : detail::box_below(n)) {
        if (detail::is_zero_index(k) || k[i] == 0) continue;
        std::vector<int> r = detail::index_sub(n, k);
        sum2 += (MultiPoly(k[i]) * MultiPoly(detail::binom_multi(n, k))) *
                (H(k, q1 + detail::dot_with_t(k, dim)) * qhat(q2, r));
      }
      out.require_zero(
          sum2 - MultiPoly(n[i]) * H(n, q1 + q2 + nshift),
          label + " i=" + std::to_string(i + 1) + " shifted weighted rule");
    }
  }
  return out.finish();
}

/// The composition-shift transform of a univariate family: solves
/// W = A(x W^t) for the generating series A of the values at q = 1 and
/// returns n! [x^n] W^q for n = 0..cap.
inline std::vector<MultiPoly> knuth_transform(const BinomialFamily& f) {
  if (f.dim() != 1)
    throw std::invalid_argument("transform defined for univariate families");
  Variable q("q");
  int cap = f.cap()[0];
  TruncatedSeries a =
      TruncatedSeries::with_total_cap({Variable("x")}, cap);
  for (int n = 0; n <= cap; ++n)
    a.set_coeff({n}, MultiPoly(make_rational(Integer(1), factorial(n))) *
                         f.a({n}).substitute(q, MultiPoly(1)));
  TruncatedSeries w = implicit_knuth_solve(a, MultiPoly::var("t"));
  TruncatedSeries wq = w.pow_symbolic(MultiPoly::var("q"));
  std::vector<MultiPoly> out;
  for (int n = 0; n <= cap; ++n)
    out.push_back(factorial(n) * wq.coeff({n}));
  return out;
}

/// The transformed coefficients must match the shifted closed form
/// a_n(q;t) = q * ahat_n(q + n t), jointly polynomial in q and t.
inline CheckReport check_knuth(const BinomialFamily& f,
                               const std::string& familyName) {
  Variable q("q");
  std::vector<MultiPoly> table = knuth_transform(f);
  CheckBuilder out("family_knuth[" + familyName + "]");
  out.member(familyName);
  for (int n = 0; n < (int)table.size(); ++n) {
    MultiPoly expect =
        n == 0 ? MultiPoly(1)
               : MultiPoly::var(q) *
                     f.ahat({n}).substitute(
                         q, MultiPoly::var(q) +
                                MultiPoly(n) * MultiPoly::var("t"));
    out.require_zero(table[n] - expect, "n=" + std::to_string(n));
  }
  return out.finish();
}

/// Generating-function law: the q-th symbolic power of the series of values
/// at q = 1 reproduces the whole family.
inline CheckReport check_family_egf(const BinomialFamily& f,
                                    const std::string& familyName) {
  Variable q("q");
  int dim = f.dim();
  std::vector<Variable> vars;
  if (dim == 1) {
    vars.emplace_back("x");
  } else {
    for (int i = 0; i < dim; ++i)
      vars.emplace_back("x:" + std::to_string(i + 1));
  }
  TruncatedSeries a = dim == 1
                          ? TruncatedSeries::with_total_cap(vars, f.cap()[0])
                          : TruncatedSeries::with_var_caps(vars, f.cap());
  auto box = detail::box_below(f.cap());
  for (const auto& n : box) {
    if (dim == 1 && !a.in_cap(n)) continue;
    Rational nfact(1);
    for (int v : n) nfact *= factorial(v);
    a.set_coeff(n, MultiPoly(Rational(Rational(1) / nfact)) *
                       f.a(n).substitute(q, MultiPoly(1)));
  }
  TruncatedSeries aq = a.pow_symbolic(MultiPoly::var(q));
  CheckBuilder out("family_egf[" + familyName + "]");
  out.member(familyName);
  for (const auto& n : box) {
    if (dim == 1 && !a.in_cap(n)) continue;
    Rational nfact(1);
    for (int v : n) nfact *= factorial(v);
    out.require_zero(MultiPoly(nfact) * aq.coeff(n) - f.a(n),
                     "n=(" + detail::index_str(n) + ")");
  }
  return out.finish();
}

/// Stock univariate families by name. alpha and beta only matter for
/// "affine".
inline CoeffSequence classic_connected(const std::string& name, int cap,
                                       const Rational& alpha = 1,
                                       const Rational& beta = 1) {
  CoeffSequence c({cap});
  if (name == "exp") {
    if (cap >= 1) c.set({1}, MultiPoly(1));
  } else if (name == "geometric") {
    for (int n = 1; n <= cap; ++n) c.set({n}, MultiPoly(factorial(n - 1)));
  } else if (name == "affine") {
    Rational apow = 1;
    for (int n = 1; n <= cap; ++n) {
      apow *= alpha;
      Rational sign = (n - 1) % 2 == 0 ? 1 : -1;
      c.set({n}, MultiPoly(Rational(sign * beta * apow * factorial(n - 1))));
    }
  } else if (name == "bell") {
    for (int n = 1; n <= cap; ++n) c.set({n}, MultiPoly(1));
  } else if (name == "laguerre") {
    for (int n = 1; n <= cap; ++n)
      c.set({n}, MultiPoly(Rational(-factorial(n))));
  } else {
    throw std::invalid_argument("unknown family " + name);
  }
  return c;
}

inline BinomialFamily classic_family(const std::string& name, int cap,
                                     const Rational& alpha = 1,
                                     const Rational& beta = 1) {
  return family_from_connected(classic_connected(name, cap, alpha, beta));
}

/// Recovers connected coefficients from the values of a_n at q = 1 by taking
/// the series logarithm; a1[0] must be 1.
inline CoeffSequence connected_from_values_at_one(
    const std::vector<MultiPoly>& a1) {
  if (a1.empty() || !(a1[0] == MultiPoly(1)))
    throw std::invalid_argument("values must start with a_0 = 1");
  int cap = (int)a1.size() - 1;
  TruncatedSeries a = TruncatedSeries::with_total_cap({Variable("x")}, cap);
  for (int n = 0; n <= cap; ++n)
    a.set_coeff({n}, MultiPoly(make_rational(Integer(1), factorial(n))) *
                         a1[n]);
  TruncatedSeries logs = a.log();
  CoeffSequence c({cap});
  for (int n = 1; n <= cap; ++n) {
    MultiPoly cn = factorial(n) * logs.coeff({n});
    if (!cn.is_zero()) c.set({n}, cn);
  }
  return c;
}

}  // namespace tutte
