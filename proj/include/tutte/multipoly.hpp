#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tutte/rational.hpp"
#include "tutte/variable.hpp"

namespace tutte {

/// Exponent list sorted by variable order; exponents are strictly positive.
/// The empty monomial is the constant 1.
using Monomial = std::vector<std::pair<Variable, int>>;

namespace detail {

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

// Graded-lexicographic comparison: higher total degree wins; on ties the
// first variable (in registry order) whose exponents differ decides, larger
// exponent first. Returns +1 if a > b.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second)
        return a[i].second < b[j].second ? -1 : 1;
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      return 1;  // b lacks this earlier variable, so a is lex-greater
    } else {
      return -1;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace detail

struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return detail::grlex_cmp(a, b) > 0;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in graded-lex descending order and zero coefficients are
/// never stored, so equal polynomials compare and render identically.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDesc>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  MultiPoly(long c) : MultiPoly(Rational(c)) {}
  MultiPoly(int c) : MultiPoly(Rational(c)) {}
  MultiPoly(const Integer& c) : MultiPoly(Rational(c)) {}

  static MultiPoly var(const Variable& v, int exp = 1) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p;
    if (exp == 0)
      p.terms_.emplace(Monomial{}, 1);
    else
      p.terms_.emplace(Monomial{{v, exp}}, 1);
    return p;
  }
  static MultiPoly var(const std::string& name, int exp = 1) {
    return var(Variable(name), exp);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    return detail::monomial_degree(terms_.begin()->first);
  }
  int degree_in(const Variable& v) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
      for (const auto& [mv, e] : m)
        if (mv == v) d = std::max(d, e);
    return d;
  }
  bool has_var(const Variable& v) const { return degree_in(v) > 0; }

  /// Variables appearing with nonzero exponent, in registry order.
  std::vector<Variable> vars() const {
    std::vector<Variable> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
  }
  MultiPoly operator-() const {
    MultiPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term(detail::monomial_mul(ma, mb), Rational(ca * cb));
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    MultiPoly out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  MultiPoly substitute(const Variable& v, const MultiPoly& repl) const {
    MultiPoly out;
    std::vector<MultiPoly> powers{MultiPoly(1)};  // powers[k] = repl^k
    for (const auto& [m, c] : terms_) {
      Monomial rest;
      int e = 0;
      for (const auto& [mv, me] : m) {
        if (mv == v)
          e = me;
        else
          rest.emplace_back(mv, me);
      }
      while ((int)powers.size() <= e) powers.push_back(powers.back() * repl);
      MultiPoly piece;
      piece.terms_.emplace(std::move(rest), c);
      out += piece * powers[e];
    }
    return out;
  }
  MultiPoly substitute(const Variable& v, const Rational& value) const {
    return substitute(v, MultiPoly(value));
  }

  MultiPoly derivative(const Variable& v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
      for (size_t i = 0; i < m.size(); ++i) {
        if (!(m[i].first == v)) continue;
        Monomial d = m;
        int e = d[i].second;
        if (e == 1)
          d.erase(d.begin() + i);
        else
          d[i].second = e - 1;
        out.add_term(d, Rational(c * e));
        break;
      }
    }
    return out;
  }

  /// Full evaluation; every variable of the polynomial must be assigned.
  Rational eval(const std::map<Variable, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (const auto& [v, e] : m) {
        auto it = point.find(v);
        if (it == point.end())
          throw std::invalid_argument("eval: unassigned variable " + v.name());
        Rational p(1);
        for (int k = 0; k < e; ++k) p *= it->second;
        term *= p;
      }
      total += term;
    }
    return total;
  }

  /// Canonical text, e.g. "q^3 - 3*q^2 + 2*q". Deterministic.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      std::string body;
      if (m.empty()) {
        body = rational_str(a);
      } else {
        if (a != 1) body = rational_str(a) + "*";
        bool firstv = true;
        for (const auto& [v, e] : m) {
          if (!firstv) body += "*";
          firstv = false;
          body += v.name();
          if (e != 1) body += "^" + std::to_string(e);
        }
      }
      if (first) {
        out = (neg ? "-" : "") + body;
        first = false;
      } else {
        out += (neg ? " - " : " + ") + body;
      }
    }
    return out;
  }

  /// {"vars":[...],"terms":[{"c":"...","e":[...]},...]}, terms in canonical
  /// order with exponent vectors aligned to "vars".
  nlohmann::json to_json() const {
    std::vector<Variable> vs = vars();
    nlohmann::json jvars = nlohmann::json::array();
    for (const auto& v : vs) jvars.push_back(v.name());
    nlohmann::json jterms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
      std::vector<int> e(vs.size(), 0);
      for (const auto& [v, ex] : m) {
        auto it = std::lower_bound(vs.begin(), vs.end(), v);
        e[it - vs.begin()] = ex;
      }
      jterms.push_back({{"c", rational_str(c)}, {"e", e}});
    }
    return {{"vars", jvars}, {"terms", jterms}};
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  return MultiPoly(c) * p;
}
inline MultiPoly operator*(const Integer& c, const MultiPoly& p) {
  return MultiPoly(Rational(c)) * p;
}

/// x(x-1)...(x-m+1) as a polynomial in an arbitrary base polynomial.
inline MultiPoly falling_factorial(const MultiPoly& x, int m) {
  if (m < 0) throw std::invalid_argument("falling factorial of negative order");
  MultiPoly out(1);
  for (int j = 0; j < m; ++j) out *= x - MultiPoly(j);
  return out;
}

/// x(x+1)...(x+m-1).
inline MultiPoly rising_factorial(const MultiPoly& x, int m) {
  if (m < 0) throw std::invalid_argument("rising factorial of negative order");
  MultiPoly out(1);
  for (int j = 0; j < m; ++j) out *= x + MultiPoly(j);
  return out;
}

}  // namespace tutte
