#pragma once
// Square matrices of polynomials and exact determinants.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "schur/poly.hpp"

namespace schur {

class PolyMatrix {
public:
  PolyMatrix(ContextPtr ctx, int n) : ctx_(std::move(ctx)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("matrix size must be >= 1");
    entries_.assign(static_cast<std::size_t>(n_) * n_, Poly::zero(ctx_));
  }

  int size() const { return n_; }
  const ContextPtr& context() const { return ctx_; }

  Poly& at(int i, int j) { return entries_[idx(i, j)]; }
  const Poly& at(int i, int j) const { return entries_[idx(i, j)]; }

private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
      throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j);
  }

  ContextPtr ctx_;
  int n_;
  std::vector<Poly> entries_;
};

// Expansion by minors, memoized over column subsets: O(2^n * n) polynomial
// multiplications. Row n - popcount(mask) is expanded over the columns in
// mask, so each subset is computed once.
inline Poly determinant(const PolyMatrix& m) {
  const int n = m.size();
  if (n > 8) throw std::invalid_argument("determinant: size capped at 8");
  const std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1u);
  std::vector<std::optional<Poly>> memo(static_cast<std::size_t>(full) + 1);
  memo[0] = Poly::one(m.context());

  auto popcount = [](std::uint32_t v) {
    int c = 0;
    while (v) {
      v &= v - 1;
      ++c;
    }
    return c;
  };

  // Masks in increasing popcount order so dependencies are ready.
  std::vector<std::uint32_t> order;
  order.reserve(full + 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) order.push_back(mask);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return popcount(a) < popcount(b); });

  for (std::uint32_t mask : order) {
    int row = n - popcount(mask);
    Poly acc = Poly::zero(m.context());
    int parity = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const Poly& entry = m.at(row, j);
      if (!entry.is_zero()) {
        Poly sub = entry * (*memo[mask & ~(1u << j)]);
        if (parity % 2 == 0)
          acc += sub;
        else
          acc -= sub;
      }
      ++parity;
    }
    memo[mask] = std::move(acc);
  }
  return *memo[full];
}

}  // namespace schur
