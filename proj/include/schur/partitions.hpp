#pragma once
// Integer partitions, compositions, and the staircase normalization that
// rewrites a composition as a signed partition (or detects degeneracy).

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

// Weakly decreasing non-negative parts. The stored length is the ambient
// length: trailing zeros are kept, so (2,0) and (2) are distinct objects that
// trim to the same partition.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition part must be >= 0");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  static Partition zero(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int ambient() const { return static_cast<int>(parts_.size()); }

  // Number of nonzero parts.
  int length() const {
    int l = 0;
    for (int p : parts_)
      if (p > 0) ++l;
    return l;
  }

  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  // part(i) is 0-based and defined (as 0) beyond the stored length.
  int part(int i) const {
    return i >= 0 && i < ambient() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  const std::vector<int>& parts() const { return parts_; }

  std::vector<int> trimmed() const {
    std::vector<int> t = parts_;
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
  }

  Partition padded(int n) const {
    std::vector<int> t = parts_;
    while (static_cast<int>(t.size()) > n) {
      if (t.back() != 0)
        throw std::invalid_argument("partition has more than " + std::to_string(n) +
                                    " nonzero parts");
      t.pop_back();
    }
    t.resize(static_cast<std::size_t>(n), 0);
    return Partition(std::move(t));
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    return os.str();
  }

  // Comma-separated parts, e.g. "2,1,0".
  static Partition parse(const std::string& text) {
    return Partition(parse_int_list(text));
  }

  static std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> vals;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
      std::size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer list entry '" + tok + "'");
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size())
        throw std::invalid_argument("bad integer list entry '" + tok + "'");
      vals.push_back(v);
    }
    if (vals.empty()) throw std::invalid_argument("empty integer list");
    return vals;
  }

private:
  std::vector<int> parts_;
};

// Arbitrary non-negative integer vector; no monotonicity requirement.
class Composition {
public:
  Composition() = default;

  explicit Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
      if (e < 0) throw std::invalid_argument("composition entry must be >= 0");
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int entry(int i) const { return entries_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const Composition& o) const { return entries_ == o.entries_; }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) os << ',';
      os << entries_[i];
    }
    return os.str();
  }

private:
  std::vector<int> entries_;
};

// delta_n = (n-1, n-2, ..., 1, 0).
inline Composition staircase(int n) {
  if (n < 0) throw std::invalid_argument("staircase: n must be >= 0");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
  return Composition(std::move(v));
}

// Conjugate partition; the result's ambient length is the first part.
inline Partition conjugate(const Partition& lam) {
  int cols = lam.part(0);
  std::vector<int> conj(static_cast<std::size_t>(cols), 0);
  for (int j = 1; j <= cols; ++j) {
    int count = 0;
    for (int i = 0; i < lam.ambient(); ++i)
      if (lam.part(i) >= j) ++count;
    conj[static_cast<std::size_t>(j - 1)] = count;
  }
  return Partition(std::move(conj));
}

// Componentwise comparison; both sides must have the same ambient length.
inline bool leq(const Partition& a, const Partition& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("leq: ambient lengths differ");
  for (int i = 0; i < a.ambient(); ++i)
    if (a.part(i) > b.part(i)) return false;
  return true;
}

namespace detail {

inline void enum_rec(int n, int pos, int prev_part, int budget,
                     const std::vector<int>* bound, std::vector<int>& cur,
                     std::vector<Partition>& out) {
  if (pos == n) {
    out.emplace_back(cur);
    return;
  }
  int hi = std::min(prev_part, budget);
  if (bound) hi = std::min(hi, (*bound)[static_cast<std::size_t>(pos)]);
  for (int p = hi; p >= 0; --p) {
    cur[static_cast<std::size_t>(pos)] = p;
    enum_rec(n, pos + 1, p, budget - p, bound, cur, out);
  }
}

}  // namespace detail

// All partitions with lambda_i <= bound_i, in lexicographically descending
// order. The bound must be weakly decreasing.
inline std::vector<Partition> enum_bounded(int n, const std::vector<int>& bound) {
  if (n < 1) throw std::invalid_argument("enum_bounded: n must be >= 1");
  if (static_cast<int>(bound.size()) != n)
    throw std::invalid_argument("enum_bounded: bound length must equal n");
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (bound[i] < 0) throw std::invalid_argument("enum_bounded: bound must be >= 0");
    if (i > 0 && bound[i] > bound[i - 1])
      throw std::invalid_argument("enum_bounded: bound must be weakly decreasing");
  }
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  int budget = 0;
  for (int b : bound) budget += b;
  detail::enum_rec(n, 0, bound.empty() ? 0 : bound[0], budget, &bound, cur, out);
  return out;
}

// All partitions of length <= n and weight <= max_weight (ambient length n),
// in lexicographically descending order.
inline std::vector<Partition> enum_by_weight(int n, int max_weight) {
  if (n < 1) throw std::invalid_argument("enum_by_weight: n must be >= 1");
  if (max_weight < 0) throw std::invalid_argument("enum_by_weight: max_weight must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  detail::enum_rec(n, 0, max_weight, max_weight, nullptr, cur, out);
  return out;
}

// Result of staircase normalization of a composition mu: either degenerate
// (mu + delta has a repeated entry, so the attached determinant vanishes) or
// a partition together with the sign of the sorting permutation.
class Normalization {
public:
  static Normalization degenerate() { return Normalization(); }

  Normalization(Partition p, int sign) : part_(std::move(p)), sign_(sign) {}

  bool is_degenerate() const { return !part_.has_value(); }
  const Partition& partition() const {
    if (!part_) throw std::logic_error("degenerate normalization has no partition");
    return *part_;
  }
  int sign() const {
    if (!part_) throw std::logic_error("degenerate normalization has no sign");
    return sign_;
  }

private:
  Normalization() = default;

  std::optional<Partition> part_;
  int sign_ = 0;
};

// Sorts mu + delta_n into strictly decreasing order, counting inversions for
// the sign, and subtracts the staircase back off.
inline Normalization normalize(const Composition& mu) {
  int n = mu.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = mu.entry(i) + (n - 1 - i);
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(j)])
        return Normalization::degenerate();
      if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(j)]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<int>());
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - (n - 1 - i);
  return Normalization(Partition(std::move(parts)), inversions % 2 == 0 ? 1 : -1);
}

}  // namespace schur
