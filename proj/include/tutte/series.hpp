#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tutte/multipoly.hpp"

namespace tutte {

/// Formal power series in an ordered list of series variables, truncated
/// either at a total degree or at per-variable caps. Coefficients are
/// MultiPoly values that must not mention the series variables themselves.
/// Binary operations require identical variable lists and cap kinds and
/// truncate to the pointwise minimum of the caps.
class TruncatedSeries {
 public:
  enum class CapKind { Total, PerVar };

  static TruncatedSeries with_total_cap(std::vector<Variable> vars, int cap) {
    if (cap < 0) throw std::invalid_argument("negative series cap");
    TruncatedSeries s;
    s.vars_ = std::move(vars);
    s.kind_ = CapKind::Total;
    s.total_cap_ = cap;
    return s;
  }

  static TruncatedSeries with_var_caps(std::vector<Variable> vars,
                                       std::vector<int> caps) {
    if (vars.size() != caps.size())
      throw std::invalid_argument("variable/cap count mismatch");
    for (int c : caps)
      if (c < 0) throw std::invalid_argument("negative series cap");
    TruncatedSeries s;
    s.vars_ = std::move(vars);
    s.kind_ = CapKind::PerVar;
    s.var_caps_ = std::move(caps);
    return s;
  }

  const std::vector<Variable>& vars() const { return vars_; }
  CapKind cap_kind() const { return kind_; }
  int total_cap() const { return total_cap_; }
  const std::vector<int>& var_caps() const { return var_caps_; }

  bool in_cap(const std::vector<int>& e) const {
    if (e.size() != vars_.size())
      throw std::invalid_argument("exponent vector of wrong length");
    int sum = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::invalid_argument("negative exponent");
      if (kind_ == CapKind::PerVar && e[i] > var_caps_[i]) return false;
      sum += e[i];
    }
    if (kind_ == CapKind::Total && sum > total_cap_) return false;
    return true;
  }

  const MultiPoly& coeff(const std::vector<int>& e) const {
    if (!in_cap(e))
      throw std::out_of_range("coefficient beyond the series cap");
    auto it = c_.find(e);
    static const MultiPoly zero;
    return it == c_.end() ? zero : it->second;
  }

  void set_coeff(const std::vector<int>& e, MultiPoly value) {
    if (!in_cap(e))
      throw std::out_of_range("coefficient beyond the series cap");
    for (const auto& v : vars_)
      if (value.has_var(v))
        throw std::invalid_argument(
            "series coefficient mentions series variable " + v.name());
    if (value.is_zero())
      c_.erase(e);
    else
      c_[e] = std::move(value);
  }

  /// All exponent vectors within the cap, in odometer order (last variable
  /// fastest). Deterministic.
  std::vector<std::vector<int>> support_box() const {
    std::vector<std::vector<int>> out;
    std::vector<int> e(vars_.size(), 0);
    build_box(0, e, out);
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.vars_ == b.vars_ && a.kind_ == b.kind_ &&
           a.total_cap_ == b.total_cap_ && a.var_caps_ == b.var_caps_ &&
           a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    *this = combine(*this, o, false);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    *this = combine(*this, o, true);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries out = a.merged_shape(b);
    for (const auto& [ea, ca] : a.c_) {
      for (const auto& [eb, cb] : b.c_) {
        std::vector<int> e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (!out.in_cap(e)) continue;
        MultiPoly prod = ca * cb;
        if (prod.is_zero()) continue;
        auto it = out.c_.find(e);
        if (it == out.c_.end())
          out.c_.emplace(std::move(e), std::move(prod));
        else {
          it->second += prod;
          if (it->second.is_zero()) out.c_.erase(it);
        }
      }
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) {
    return *this = *this * o;
  }

  TruncatedSeries scaled(const MultiPoly& f) const {
    for (const auto& v : vars_)
      if (f.has_var(v))
        throw std::invalid_argument(
            "series scale factor mentions series variable " + v.name());
    TruncatedSeries out = shape();
    for (const auto& [e, c] : c_) {
      MultiPoly p = c * f;
      if (!p.is_zero()) out.c_.emplace(e, std::move(p));
    }
    return out;
  }
  TruncatedSeries operator-() const { return scaled(MultiPoly(-1)); }

  /// Multiplies by vars()[which]^k, dropping whatever leaves the cap.
  TruncatedSeries shifted(size_t which, int k = 1) const {
    if (which >= vars_.size()) throw std::invalid_argument("bad variable slot");
    TruncatedSeries out = shape();
    for (const auto& [e, c] : c_) {
      std::vector<int> e2 = e;
      e2[which] += k;
      if (out.in_cap(e2)) out.c_.emplace(std::move(e2), c);
    }
    return out;
  }

  /// log of a series with constant coefficient 1.
  TruncatedSeries log() const {
    require_constant(MultiPoly(1), "log");
    TruncatedSeries u = *this;
    u.c_.erase(std::vector<int>(vars_.size(), 0));
    TruncatedSeries out = shape();
    TruncatedSeries power = u;
    for (int k = 1; k <= max_order() && !power.c_.empty(); ++k) {
      Rational coef = make_rational(k % 2 == 1 ? 1 : -1, k);
      out += power.scaled(MultiPoly(coef));
      if (k < max_order()) power *= u;
    }
    return out;
  }

  /// exp of a series with constant coefficient 0.
  TruncatedSeries exp() const {
    require_constant(MultiPoly(0), "exp");
    TruncatedSeries out = shape();
    out.c_.emplace(std::vector<int>(vars_.size(), 0), MultiPoly(1));
    TruncatedSeries power = out;  // running this^k / k!
    for (int k = 1; k <= max_order(); ++k) {
      power *= *this;
      power = power.scaled(MultiPoly(make_rational(1, k)));
      if (power.c_.empty()) break;
      out += power;
    }
    return out;
  }

  /// S^e := exp(e * log S) for a series with constant coefficient 1; the
  /// exponent may be any polynomial.
  TruncatedSeries pow_symbolic(const MultiPoly& e) const {
    return log().scaled(e).exp();
  }

  /// Integer power by repeated multiplication (no constant-term restriction).
  TruncatedSeries pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative series power");
    TruncatedSeries out = shape();
    out.c_.emplace(std::vector<int>(vars_.size(), 0), MultiPoly(1));
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  /// Univariate composition this(arg); arg must share the variable and have
  /// zero constant term.
  TruncatedSeries compose1(const TruncatedSeries& arg) const {
    if (vars_.size() != 1 || arg.vars_.size() != 1 || !(vars_[0] == arg.vars_[0]))
      throw std::invalid_argument("compose1 requires matching univariate series");
    if (!arg.coeff({0}).is_zero())
      throw std::invalid_argument("compose1 argument has nonzero constant term");
    TruncatedSeries out = merged_shape(arg);
    TruncatedSeries power = out.shape();
    power.c_.emplace(std::vector<int>{0}, MultiPoly(1));
    for (int k = 0; k <= out.max_order(); ++k) {
      std::vector<int> ek{k};
      if (in_cap(ek)) {
        const MultiPoly& ck = coeff(ek);
        if (!ck.is_zero()) out += power.scaled(ck);
      }
      if (k < out.max_order()) power *= arg;
    }
    return out;
  }

 private:
  TruncatedSeries shape() const {
    TruncatedSeries s;
    s.vars_ = vars_;
    s.kind_ = kind_;
    s.total_cap_ = total_cap_;
    s.var_caps_ = var_caps_;
    return s;
  }

  TruncatedSeries merged_shape(const TruncatedSeries& o) const {
    if (vars_ != o.vars_)
      throw std::invalid_argument("series variable lists differ");
    if (kind_ != o.kind_)
      throw std::invalid_argument("series cap kinds differ");
    TruncatedSeries s = shape();
    if (kind_ == CapKind::Total)
      s.total_cap_ = std::min(total_cap_, o.total_cap_);
    else
      for (size_t i = 0; i < var_caps_.size(); ++i)
        s.var_caps_[i] = std::min(var_caps_[i], o.var_caps_[i]);
    return s;
  }

  static TruncatedSeries combine(const TruncatedSeries& a,
                                 const TruncatedSeries& b, bool subtract) {
    TruncatedSeries out = a.merged_shape(b);
    for (const auto& [e, c] : a.c_)
      if (out.in_cap(e)) out.c_.emplace(e, c);
    for (const auto& [e, c] : b.c_) {
      if (!out.in_cap(e)) continue;
      auto it = out.c_.find(e);
      MultiPoly add = subtract ? -c : c;
      if (it == out.c_.end()) {
        if (!add.is_zero()) out.c_.emplace(e, std::move(add));
      } else {
        it->second += add;
        if (it->second.is_zero()) out.c_.erase(it);
      }
    }
    return out;
  }

  // Largest total degree representable within the cap; bounds the number of
  // terms needed in exp/log expansions, since valuation-1 series nilpotent.
  int max_order() const {
    if (kind_ == CapKind::Total) return total_cap_;
    int s = 0;
    for (int c : var_caps_) s += c;
    return s;
  }

  void require_constant(const MultiPoly& want, const char* what) const {
    std::vector<int> zero(vars_.size(), 0);
    auto it = c_.find(zero);
    MultiPoly have = it == c_.end() ? MultiPoly() : it->second;
    if (have != want)
      throw std::invalid_argument(std::string(what) +
                                  ": series has wrong constant term");
  }

  void build_box(size_t i, std::vector<int>& e,
                 std::vector<std::vector<int>>& out) const {
    if (i == vars_.size()) {
      out.push_back(e);
      return;
    }
    int limit;
    if (kind_ == CapKind::PerVar) {
      limit = var_caps_[i];
    } else {
      int used = 0;
      for (size_t j = 0; j < i; ++j) used += e[j];
      limit = total_cap_ - used;
    }
    for (int k = 0; k <= limit; ++k) {
      e[i] = k;
      build_box(i + 1, e, out);
    }
    e[i] = 0;
  }

  std::vector<Variable> vars_;
  CapKind kind_ = CapKind::Total;
  int total_cap_ = 0;
  std::vector<int> var_caps_;
  std::map<std::vector<int>, MultiPoly> c_;
};

/// Coefficient lookup as a free function; errors past the cap.
inline MultiPoly extract_coeff(const TruncatedSeries& s,
                               const std::vector<int>& e) {
  return s.coeff(e);
}

/// Solves W = a(x * W^t) by fixed-point iteration, where a is univariate in
/// x with a(0) = 1 and t is an arbitrary polynomial exponent. Runs exactly
/// cap+1 rounds; round k leaves coefficients of x^0..x^k stable, so the
/// result is exact through the cap.
inline TruncatedSeries implicit_knuth_solve(const TruncatedSeries& a,
                                            const MultiPoly& t) {
  if (a.vars().size() != 1)
    throw std::invalid_argument("implicit solve requires a univariate series");
  if (a.cap_kind() != TruncatedSeries::CapKind::Total)
    throw std::invalid_argument("implicit solve requires a total-degree cap");
  TruncatedSeries w = a;
  for (int round = 0; round <= a.total_cap(); ++round)
    w = a.compose1(w.pow_symbolic(t).shifted(0, 1));
  return w;
}

}  // namespace tutte
