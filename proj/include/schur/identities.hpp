#pragma once
// Determinantal building blocks and left/right sides of the verified
// identities. Everything here is exact: series are handled through explicit
// degree truncation, which is sound because both sides are graded (the Schur
// factor is homogeneous of degree |lambda| in x, and the t-determinant is
// homogeneous of degree |lambda| in t).

#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schur/matrix.hpp"
#include "schur/partitions.hpp"
#include "schur/poly.hpp"
#include "schur/symfunc.hpp"

namespace schur {

// Upper bounds a_1 >= ... >= a_n for the bounded determinants. The bound
// vector is the bound partition; bound j applies to determinant column j,
// which carries slot j of the underlying composition box (and the variable
// t_j in the power determinant). Entries with negative subscript are zero
// under any window.
class Window {
public:
  static Window unbounded(int n) {
    Window w;
    w.bounds_.assign(static_cast<std::size_t>(n), std::nullopt);
    return w;
  }

  static Window bounded(const std::vector<int>& a) {
    Window w;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] < 0) throw std::invalid_argument("window bound must be >= 0");
      if (j > 0 && a[j] > a[j - 1])
        throw std::invalid_argument("window bound must be weakly decreasing");
      w.bounds_.emplace_back(a[j]);
    }
    return w;
  }

  int size() const { return static_cast<int>(bounds_.size()); }

  bool is_bounded() const {
    for (const auto& b : bounds_)
      if (b) return true;
    return false;
  }

  // Does column j admit subscript value v?
  bool admits(int j, int v) const {
    if (v < 0) return false;
    const auto& b = bounds_.at(static_cast<std::size_t>(j));
    return !b || v <= *b;
  }

private:
  std::vector<std::optional<int>> bounds_;
};

enum class TMode { distinct, repeated, ones };

inline const char* t_mode_name(TMode m) {
  switch (m) {
    case TMode::distinct: return "distinct";
    case TMode::repeated: return "repeated";
    case TMode::ones: return "ones";
  }
  return "?";
}

// det(f_{lambda_i - i + j}) with window-clipped entries.
inline Poly family_det(const Family& fam, const Partition& lam, const Window& w) {
  int n = lam.ambient();
  if (n < 1) throw std::invalid_argument("family_det: empty partition");
  if (w.size() != n) throw std::invalid_argument("family_det: window length must equal n");
  const ContextPtr& ctx = fam.context();
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int sub = lam.part(i) - i + j;
      m.at(i, j) = w.admits(j, sub) ? fam.member(sub) : Poly::zero(ctx);
    }
  }
  return determinant(m);
}

// det(b_j^{lambda_i - i + j}) where the column base b_j is t_j (distinct),
// t_1 for every column (repeated), or the constant 1 (ones). Exponents
// outside the window give zero entries.
inline Poly power_det(const ContextPtr& ctx, const Partition& lam, TMode mode, const Window& w) {
  int n = lam.ambient();
  if (n < 1) throw std::invalid_argument("power_det: empty partition");
  if (w.size() != n) throw std::invalid_argument("power_det: window length must equal n");
  std::vector<Poly> bases;
  bases.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    switch (mode) {
      case TMode::distinct: bases.push_back(Poly::variable(ctx, Bank::t, j)); break;
      case TMode::repeated: bases.push_back(Poly::variable(ctx, Bank::t, 1)); break;
      case TMode::ones: bases.push_back(Poly::one(ctx)); break;
    }
  }
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int e = lam.part(i) - i + j;
      m.at(i, j) = w.admits(j, e) ? bases[static_cast<std::size_t>(j)].pow(e) : Poly::zero(ctx);
    }
  }
  return determinant(m);
}

// 1 + base + base^2 + ... + base^top.
inline Poly geometric_sum(const Poly& base, int top) {
  Poly acc = Poly::one(base.context());
  Poly p = Poly::one(base.context());
  for (int k = 1; k <= top; ++k) {
    p *= base;
    acc += p;
  }
  return acc;
}

// Sums term(lambda) over the given partitions, optionally across threads.
// Addition is commutative and the result map is canonical, so the result is
// independent of the chunking.
inline Poly accumulate_terms(const ContextPtr& ctx, const std::vector<Partition>& lams,
                             const std::function<Poly(const Partition&)>& term, int threads) {
  Poly total(ctx);
  if (threads <= 1 || lams.size() < 2) {
    for (const Partition& lam : lams) total += term(lam);
    return total;
  }
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), lams.size());
  std::vector<std::future<Poly>> futs;
  futs.reserve(nt);
  for (std::size_t w = 0; w < nt; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w]() {
      Poly part(ctx);
      for (std::size_t k = w; k < lams.size(); k += nt) part += term(lams[k]);
      return part;
    }));
  }
  for (auto& f : futs) total += f.get();
  return total;
}

// --- Unbounded family identity:
//   sum_lambda s_lambda(x) det(f_{lambda_i-i+j}) = prod_i F(y, x_i),
// compared after truncation at x-degree D.

inline Poly lhs_unbounded_family(const ContextPtr& ctx, int n, const Family& fam, int D,
                                 int threads = 1) {
  Window w = Window::unbounded(n);
  return accumulate_terms(
      ctx, enum_by_weight(n, D),
      [&](const Partition& lam) {
        return schur_poly(ctx, Bank::x, lam, n) * family_det(fam, lam, w);
      },
      threads);
}

inline Poly rhs_unbounded_family(const ContextPtr& ctx, int n, const Family& fam, int D) {
  // F(y, z) = sum_{i=0..D} f_i z^i, then z -> x_1, ..., x_n.
  int zid = ctx->var_id(Bank::z, 1);
  Poly F(ctx);
  for (int i = 0; i <= D; ++i)
    F += fam.member(i) * Poly::variable(ctx, zid).pow(i);
  Poly prod = Poly::one(ctx);
  for (int i = 1; i <= n; ++i) {
    prod *= F.substitute(zid, Poly::variable(ctx, Bank::x, i));
    prod = prod.truncate(Bank::x, D);
  }
  return prod;
}

// --- Unbounded t identity, compared with cleared denominators:
//   L = sum_lambda s_lambda(x) det(t_j^{lambda_i-i+j}),
//   N = det(x_j^{n-i} prod_{k != j} (1 - x_k t_i)),
//   P = prod_{i,j} (1 - x_j t_i),
//   V = det(x_j^{n-i});
// the identity says L * V * P = N, compared at t-degree <= D.

inline Poly lhs_unbounded_t(const ContextPtr& ctx, int n, int D, int threads = 1) {
  Window w = Window::unbounded(n);
  return accumulate_terms(
      ctx, enum_by_weight(n, D),
      [&](const Partition& lam) {
        return schur_poly(ctx, Bank::x, lam, n) * power_det(ctx, lam, TMode::distinct, w);
      },
      threads);
}

inline Poly clearing_product(const ContextPtr& ctx, int n) {
  Poly p = Poly::one(ctx);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      p *= Poly::one(ctx) - Poly::variable(ctx, Bank::x, j) * Poly::variable(ctx, Bank::t, i);
  return p;
}

inline Poly rhs_unbounded_t_cleared(const ContextPtr& ctx, int n) {
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Poly entry = Poly::variable(ctx, Bank::x, j + 1).pow(n - 1 - i);
      for (int k = 1; k <= n; ++k) {
        if (k == j + 1) continue;
        entry *= Poly::one(ctx) -
                 Poly::variable(ctx, Bank::x, k) * Poly::variable(ctx, Bank::t, i + 1);
      }
      m.at(i, j) = entry;
    }
  }
  return determinant(m);
}

// --- Bounded family identity (exact, no truncation):
//   sum_{lambda <= a} s_lambda(x) det(f window a) =
//     det(x_j^{n-i} F(y, x_j, a_i)) / det(x_j^{n-i}),
// where F(y, z, c) = sum_{k=0..c} f_k z^k.

inline Poly lhs_bounded_family(const ContextPtr& ctx, int n, const Family& fam,
                               const std::vector<int>& a, int threads = 1) {
  Window w = Window::bounded(a);
  return accumulate_terms(
      ctx, enum_bounded(n, a),
      [&](const Partition& lam) {
        return schur_poly(ctx, Bank::x, lam, n) * family_det(fam, lam, w);
      },
      threads);
}

inline Poly rhs_bounded_family(const ContextPtr& ctx, int n, const Family& fam,
                               const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("bounded family: bound length must equal n");
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Poly xj = Poly::variable(ctx, Bank::x, j + 1);
      Poly F(ctx);
      for (int k = 0; k <= a[static_cast<std::size_t>(i)]; ++k)
        F += fam.member(k) * xj.pow(k);
      m.at(i, j) = xj.pow(n - 1 - i) * F;
    }
  }
  return determinant(m).exact_div(vandermonde(ctx, Bank::x, n));
}

// --- Bounded t identity (exact):
//   sum_{lambda <= a} s_lambda(x) det(t window a) =
//     det(x_j^{n-i} sum_{k=0..a_i} (x_j t_i)^k) / det(x_j^{n-i}).
// The t bases follow the mode: t_i distinct, all equal to t_1, or 1.

inline Poly lhs_bounded_t(const ContextPtr& ctx, int n, const std::vector<int>& a, TMode mode,
                          int threads = 1) {
  Window w = Window::bounded(a);
  return accumulate_terms(
      ctx, enum_bounded(n, a),
      [&](const Partition& lam) {
        return schur_poly(ctx, Bank::x, lam, n) * power_det(ctx, lam, mode, w);
      },
      threads);
}

inline Poly rhs_bounded_t(const ContextPtr& ctx, int n, const std::vector<int>& a, TMode mode) {
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("bounded t: bound length must equal n");
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i) {
    Poly ti = mode == TMode::distinct ? Poly::variable(ctx, Bank::t, i + 1)
              : mode == TMode::repeated ? Poly::variable(ctx, Bank::t, 1)
                                        : Poly::one(ctx);
    for (int j = 0; j < n; ++j) {
      Poly xj = Poly::variable(ctx, Bank::x, j + 1);
      m.at(i, j) = xj.pow(n - 1 - i) * geometric_sum(xj * ti, a[static_cast<std::size_t>(i)]);
    }
  }
  return determinant(m).exact_div(vandermonde(ctx, Bank::x, n));
}

// --- Box-bounded Schur sum in closed form (constant bound a):
//   sum_{lambda <= (a,...,a)} s_lambda(x) =
//     det(x_i^{a+2n-j} - x_i^{j-1}) /
//       [prod_i (x_i - 1) prod_{i<j} (x_i - x_j)(x_i x_j - 1)].

inline Poly macdonald_rhs(const ContextPtr& ctx, int n, int a) {
  if (n < 1) throw std::invalid_argument("macdonald: n must be >= 1");
  if (a < 0) throw std::invalid_argument("macdonald: a must be >= 0");
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i) {
    Poly xi = Poly::variable(ctx, Bank::x, i + 1);
    for (int j = 0; j < n; ++j)
      m.at(i, j) = xi.pow(a + 2 * n - (j + 1)) - xi.pow(j);
  }
  Poly den = Poly::one(ctx);
  for (int i = 1; i <= n; ++i)
    den *= Poly::variable(ctx, Bank::x, i) - Poly::one(ctx);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Poly xi = Poly::variable(ctx, Bank::x, i);
      Poly xj = Poly::variable(ctx, Bank::x, j);
      den *= (xi - xj) * (xi * xj - Poly::one(ctx));
    }
  }
  return determinant(m).exact_div(den);
}

inline Poly box_schur_sum(const ContextPtr& ctx, int n, int a, int threads = 1) {
  std::vector<int> bound(static_cast<std::size_t>(n), a);
  return accumulate_terms(
      ctx, enum_bounded(n, bound),
      [&](const Partition& lam) { return schur_poly(ctx, Bank::x, lam, n); }, threads);
}

// --- Classical Cauchy identities, truncated at x-degree D. Every monomial
// of both sides has equal x- and y-degree, so one truncation suffices.

inline Poly cauchy_lhs_h(const ContextPtr& ctx, int n, int m, int D, int threads = 1) {
  return accumulate_terms(
      ctx, enum_by_weight(std::min(n, m), D),
      [&](const Partition& lam) {
        return schur_poly(ctx, Bank::x, lam, n) * schur_poly(ctx, Bank::y, lam, m);
      },
      threads);
}

inline Poly cauchy_rhs_h(const ContextPtr& ctx, int n, int m, int D) {
  Poly prod = Poly::one(ctx);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      prod *= geometric_sum(Poly::variable(ctx, Bank::x, i) * Poly::variable(ctx, Bank::y, j), D);
      prod = prod.truncate(Bank::x, D);
    }
  }
  return prod;
}

inline Poly cauchy_lhs_dual(const ContextPtr& ctx, int n, int m, int D, int threads = 1) {
  std::vector<Partition> lams;
  for (const Partition& lam : enum_by_weight(n, D))
    if (lam.part(0) <= m) lams.push_back(lam);  // otherwise s_{lambda'}(y) = 0
  return accumulate_terms(
      ctx, lams,
      [&](const Partition& lam) {
        Poly sy = lam.weight() == 0 ? Poly::one(ctx)
                                    : schur_poly(ctx, Bank::y, conjugate(lam), m);
        return schur_poly(ctx, Bank::x, lam, n) * sy;
      },
      threads);
}

inline Poly cauchy_rhs_dual(const ContextPtr& ctx, int n, int m, int D) {
  Poly prod = Poly::one(ctx);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      prod *= Poly::one(ctx) + Poly::variable(ctx, Bank::x, i) * Poly::variable(ctx, Bank::y, j);
  return prod.truncate(Bank::x, D);
}

}  // namespace schur
