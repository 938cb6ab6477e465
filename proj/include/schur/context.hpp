#pragma once
// Variable contexts: ordered, bank-tagged variable lists shared by polynomials.
// Every polynomial refers to exactly one context; mixing contexts is an error.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schur {

enum class Bank { x, y, t, z };

inline const char* bank_name(Bank b) {
  switch (b) {
    case Bank::x: return "x";
    case Bank::y: return "y";
    case Bank::t: return "t";
    case Bank::z: return "z";
  }
  return "?";
}

class VarContext;
using ContextPtr = std::shared_ptr<const VarContext>;

class VarContext {
public:
  struct Var {
    Bank bank;
    int index;  // 1-based position within the bank
    std::string name;
  };

  explicit VarContext(std::vector<Var> vars) : vars_(std::move(vars)) {
    for (int id = 0; id < static_cast<int>(vars_.size()); ++id) {
      const Var& v = vars_[id];
      if (v.index < 1) throw std::invalid_argument("variable index must be >= 1: " + v.name);
      if (!by_name_.emplace(v.name, id).second)
        throw std::invalid_argument("duplicate variable name: " + v.name);
    }
  }

  // Standard layout x1..x{nx}, y1..y{my}, t1..t{kt}, z. Any count may be zero.
  static ContextPtr make(int nx, int my, int kt, bool with_z = false) {
    std::vector<Var> vs;
    auto add = [&vs](Bank b, int count) {
      for (int i = 1; i <= count; ++i)
        vs.push_back({b, i, std::string(bank_name(b)) + std::to_string(i)});
    };
    add(Bank::x, nx);
    add(Bank::y, my);
    add(Bank::t, kt);
    if (with_z) vs.push_back({Bank::z, 1, "z"});
    return std::make_shared<VarContext>(std::move(vs));
  }

  static ContextPtr make_named(std::vector<Var> vars) {
    return std::make_shared<VarContext>(std::move(vars));
  }

  int size() const { return static_cast<int>(vars_.size()); }

  const Var& var(int id) const { return vars_.at(static_cast<std::size_t>(id)); }

  std::optional<int> find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  bool has_var(Bank b, int index) const {
    for (const Var& v : vars_)
      if (v.bank == b && v.index == index) return true;
    return false;
  }

  int var_id(Bank b, int index) const {
    for (int id = 0; id < size(); ++id)
      if (vars_[id].bank == b && vars_[id].index == index) return id;
    throw std::invalid_argument(std::string("no such variable: bank ") + bank_name(b) +
                                ", index " + std::to_string(index));
  }

  int bank_count(Bank b) const {
    int c = 0;
    for (const Var& v : vars_)
      if (v.bank == b) ++c;
    return c;
  }

  std::vector<int> bank_ids(Bank b) const {
    std::vector<int> ids;
    for (int id = 0; id < size(); ++id)
      if (vars_[id].bank == b) ids.push_back(id);
    return ids;
  }

  bool operator==(const VarContext& o) const {
    if (vars_.size() != o.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].bank != o.vars_[i].bank || vars_[i].index != o.vars_[i].index ||
          vars_[i].name != o.vars_[i].name)
        return false;
    }
    return true;
  }
  bool operator!=(const VarContext& o) const { return !(*this == o); }

private:
  std::vector<Var> vars_;
  std::unordered_map<std::string, int> by_name_;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

}  // namespace schur
