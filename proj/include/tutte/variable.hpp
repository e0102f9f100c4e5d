#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>

namespace tutte {

namespace detail {

// Fixed head of the variable order. Everything not listed here follows,
// ordered lexicographically by name.
inline int special_rank(const std::string& name) {
  static const char* head[] = {"q", "q1", "q2", "q3", "t",
                               "y", "r",  "s",  "lambda"};
  for (int i = 0; i < 9; ++i)
    if (name == head[i]) return i;
  return 9;
}

struct VarEntry {
  std::string name;
  int rank;
};

// Append-only intern table. Entries are heap-allocated once and never move,
// so a Variable can hold a bare pointer and read it without locking.
inline const VarEntry* intern_variable(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, const VarEntry*> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(name);
  if (it != table.end()) return it->second;
  auto* e = new VarEntry{name, special_rank(name)};
  table.emplace(name, e);
  return e;
}

}  // namespace detail

/// Interned symbol with a total order that is stable across runs:
/// q, q1, q2, q3, t, y, r, s, lambda first, then all other names
/// lexicographically. Cheap to copy and compare.
class Variable {
 public:
  explicit Variable(const std::string& name)
      : e_(detail::intern_variable(name)) {}
  explicit Variable(const char* name)
      : e_(detail::intern_variable(name)) {}

  const std::string& name() const { return e_->name; }

  friend bool operator==(Variable a, Variable b) { return a.e_ == b.e_; }
  friend bool operator!=(Variable a, Variable b) { return a.e_ != b.e_; }
  friend bool operator<(Variable a, Variable b) {
    if (a.e_ == b.e_) return false;
    if (a.e_->rank != b.e_->rank) return a.e_->rank < b.e_->rank;
    return a.e_->name < b.e_->name;
  }

 private:
  const detail::VarEntry* e_;
};

}  // namespace tutte
