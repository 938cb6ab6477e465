#pragma once
// Symmetric polynomial generators (h, e, p), coefficient families for the
// determinantal identities, and Schur polynomials by four routes:
// bialternant quotient, Jacobi-Trudi, dual Jacobi-Trudi, and direct
// semistandard-tableau enumeration.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schur/matrix.hpp"
#include "schur/partitions.hpp"
#include "schur/poly.hpp"

namespace schur {

enum class SymKind { h, e, p };

namespace detail {

inline void hom_rec(const ContextPtr& ctx, const std::vector<int>& ids, std::size_t pos,
                    int remaining, Monomial& mono, Poly& out) {
  if (pos + 1 == ids.size()) {
    mono[static_cast<std::size_t>(ids[pos])] = remaining;
    out += Poly::from_term(ctx, mono, 1);
    mono[static_cast<std::size_t>(ids[pos])] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    mono[static_cast<std::size_t>(ids[pos])] = e;
    hom_rec(ctx, ids, pos + 1, remaining - e, mono, out);
  }
  mono[static_cast<std::size_t>(ids[pos])] = 0;
}

inline void elem_rec(const ContextPtr& ctx, const std::vector<int>& ids, std::size_t pos,
                     int remaining, Monomial& mono, Poly& out) {
  if (remaining == 0) {
    out += Poly::from_term(ctx, mono, 1);
    return;
  }
  if (ids.size() - pos < static_cast<std::size_t>(remaining)) return;
  // include ids[pos]
  mono[static_cast<std::size_t>(ids[pos])] = 1;
  elem_rec(ctx, ids, pos + 1, remaining - 1, mono, out);
  mono[static_cast<std::size_t>(ids[pos])] = 0;
  // exclude ids[pos]
  elem_rec(ctx, ids, pos + 1, remaining, mono, out);
}

}  // namespace detail

// Complete homogeneous (h), elementary (e), or power sum (p) symmetric
// polynomial of degree k in the first m variables of the given bank.
// Negative k gives 0; k = 0 gives 1 for h and e, and m for p.
inline Poly gen(const ContextPtr& ctx, Bank bank, SymKind kind, int k, int m) {
  if (m < 1) throw std::invalid_argument("gen: m must be >= 1");
  if (ctx->bank_count(bank) < m)
    throw std::invalid_argument("gen: context has fewer than m variables in bank");
  if (k < 0) return Poly::zero(ctx);
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) ids.push_back(ctx->var_id(bank, i));
  switch (kind) {
    case SymKind::h: {
      Poly out(ctx);
      Monomial mono(static_cast<std::size_t>(ctx->size()), 0);
      detail::hom_rec(ctx, ids, 0, k, mono, out);
      return out;
    }
    case SymKind::e: {
      if (k > m) return Poly::zero(ctx);
      Poly out(ctx);
      Monomial mono(static_cast<std::size_t>(ctx->size()), 0);
      detail::elem_rec(ctx, ids, 0, k, mono, out);
      return out;
    }
    case SymKind::p: {
      if (k == 0) return Poly::constant(ctx, m);
      Poly out(ctx);
      for (int id : ids) {
        Monomial mono(static_cast<std::size_t>(ctx->size()), 0);
        mono[static_cast<std::size_t>(id)] = k;
        out += Poly::from_term(ctx, std::move(mono), 1);
      }
      return out;
    }
  }
  throw std::logic_error("gen: unknown kind");
}

enum class FamilyKind { h, e, p, e_plus_h, custom };

inline const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::h: return "h";
    case FamilyKind::e: return "e";
    case FamilyKind::p: return "p";
    case FamilyKind::e_plus_h: return "e+h";
    case FamilyKind::custom: return "custom";
  }
  return "?";
}

// A coefficient family f_0, f_1, f_2, ... of polynomials in the y bank.
// Built-in kinds are defined for every index (0 below index 0); a custom
// family is a finite list and indexing past its end is an error.
class Family {
public:
  static Family h(ContextPtr ctx, int m) { return Family(FamilyKind::h, std::move(ctx), m); }
  static Family e(ContextPtr ctx, int m) { return Family(FamilyKind::e, std::move(ctx), m); }
  static Family p(ContextPtr ctx, int m) { return Family(FamilyKind::p, std::move(ctx), m); }
  static Family e_plus_h(ContextPtr ctx, int m) {
    return Family(FamilyKind::e_plus_h, std::move(ctx), m);
  }

  static Family of_kind(FamilyKind kind, ContextPtr ctx, int m) {
    if (kind == FamilyKind::custom)
      throw std::invalid_argument("custom family requires an explicit member list");
    return Family(kind, std::move(ctx), m);
  }

  static Family custom(ContextPtr ctx, std::vector<Poly> members) {
    Family f(FamilyKind::custom, std::move(ctx), 0);
    for (const Poly& p : members)
      if (!same_context(p.context(), f.ctx_))
        throw ContextMismatchError("custom family member in wrong context");
    f.custom_ = std::move(members);
    return f;
  }

  FamilyKind kind() const { return kind_; }
  int m() const { return m_; }
  const ContextPtr& context() const { return ctx_; }

  // Largest index with a defined member, or -1 if unbounded.
  int max_index() const {
    return kind_ == FamilyKind::custom ? static_cast<int>(custom_.size()) - 1 : -1;
  }

  Poly member(int i) const {
    if (i < 0) return Poly::zero(ctx_);
    switch (kind_) {
      case FamilyKind::h: return gen(ctx_, Bank::y, SymKind::h, i, m_);
      case FamilyKind::e: return gen(ctx_, Bank::y, SymKind::e, i, m_);
      case FamilyKind::p: return gen(ctx_, Bank::y, SymKind::p, i, m_);
      case FamilyKind::e_plus_h:
        return gen(ctx_, Bank::y, SymKind::e, i, m_) + gen(ctx_, Bank::y, SymKind::h, i, m_);
      case FamilyKind::custom:
        if (i >= static_cast<int>(custom_.size()))
          throw std::out_of_range("custom family has no member f_" + std::to_string(i));
        return custom_[static_cast<std::size_t>(i)];
    }
    throw std::logic_error("family: unknown kind");
  }

private:
  Family(FamilyKind kind, ContextPtr ctx, int m) : kind_(kind), ctx_(std::move(ctx)), m_(m) {
    if (kind_ != FamilyKind::custom) {
      if (m_ < 1) throw std::invalid_argument("family: m must be >= 1");
      if (ctx_->bank_count(Bank::y) < m_)
        throw std::invalid_argument("family: context lacks y variables");
    }
  }

  FamilyKind kind_;
  ContextPtr ctx_;
  int m_;
  std::vector<Poly> custom_;
};

// det(x_j^{n-i}) over the first n variables of the bank, computed as an
// actual determinant rather than the product formula.
inline Poly vandermonde(const ContextPtr& ctx, Bank bank, int n) {
  if (n < 1) throw std::invalid_argument("vandermonde: n must be >= 1");
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Poly::variable(ctx, bank, j + 1).pow(n - 1 - i);
  return determinant(m);
}

// det(x_j^{mu_i + n - i}) for an arbitrary composition mu of length n.
inline Poly power_alternant(const ContextPtr& ctx, Bank bank, const Composition& mu) {
  int n = mu.size();
  if (n < 1) throw std::invalid_argument("power_alternant: length must be >= 1");
  PolyMatrix m(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Poly::variable(ctx, bank, j + 1).pow(mu.entry(i) + (n - 1 - i));
  return determinant(m);
}

enum class SchurMethod { bialternant, jacobi_trudi, dual_jacobi_trudi, ssyt };

inline const char* schur_method_name(SchurMethod m) {
  switch (m) {
    case SchurMethod::bialternant: return "bialternant";
    case SchurMethod::jacobi_trudi: return "jacobi_trudi";
    case SchurMethod::dual_jacobi_trudi: return "dual_jacobi_trudi";
    case SchurMethod::ssyt: return "ssyt";
  }
  return "?";
}

namespace detail {

inline void ssyt_rec(const ContextPtr& ctx, const std::vector<int>& shape,
                     std::vector<std::vector<int>>& tab, int r, int c, int n,
                     Monomial& weight, const std::vector<int>& ids, Poly& out) {
  if (r == static_cast<int>(shape.size())) {
    out += Poly::from_term(ctx, weight, 1);
    return;
  }
  int nr = r, nc = c + 1;
  if (nc == shape[static_cast<std::size_t>(r)]) {
    nr = r + 1;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
  for (int v = lo; v <= n; ++v) {
    tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    std::size_t id = static_cast<std::size_t>(ids[static_cast<std::size_t>(v - 1)]);
    ++weight[id];
    ssyt_rec(ctx, shape, tab, nr, nc, n, weight, ids, out);
    --weight[id];
  }
}

}  // namespace detail

// Schur polynomial s_lambda in the first n variables of the bank. The
// bialternant, h-determinant, and tableau routes all produce s_lambda; the
// e-determinant route applies the dual identity to the shape as given, so it
// produces the conjugate shape's polynomial s_{lambda'}.
inline Poly schur_poly(const ContextPtr& ctx, Bank bank, const Partition& lam, int n,
                       SchurMethod method = SchurMethod::bialternant) {
  if (n < 1) throw std::invalid_argument("schur_poly: n must be >= 1");
  if (ctx->bank_count(bank) < n)
    throw std::invalid_argument("schur_poly: context has fewer than n variables in bank");
  switch (method) {
    case SchurMethod::bialternant: {
      Partition pl = lam.padded(n);
      Poly num = power_alternant(ctx, bank, Composition(pl.parts()));
      return num.exact_div(vandermonde(ctx, bank, n));
    }
    case SchurMethod::jacobi_trudi:
    case SchurMethod::dual_jacobi_trudi: {
      SymKind kind = method == SchurMethod::jacobi_trudi ? SymKind::h : SymKind::e;
      int k = lam.ambient();
      if (k == 0) return Poly::one(ctx);
      PolyMatrix m(ctx, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          m.at(i, j) = gen(ctx, bank, kind, lam.part(i) - i + j, n);
      return determinant(m);
    }
    case SchurMethod::ssyt: {
      std::vector<int> shape = lam.trimmed();
      if (static_cast<int>(shape.size()) > n)
        throw std::invalid_argument("schur_poly: partition longer than variable count");
      std::vector<int> ids;
      for (int i = 1; i <= n; ++i) ids.push_back(ctx->var_id(bank, i));
      Poly out(ctx);
      if (shape.empty()) return Poly::one(ctx);
      std::vector<std::vector<int>> tab;
      for (int row : shape) tab.emplace_back(static_cast<std::size_t>(row), 0);
      Monomial weight(static_cast<std::size_t>(ctx->size()), 0);
      detail::ssyt_rec(ctx, shape, tab, 0, 0, n, weight, ids, out);
      return out;
    }
  }
  throw std::logic_error("schur_poly: unknown method");
}

// Signed Schur polynomial S_mu attached to a composition: 0 when mu + delta
// is degenerate, otherwise sign * s_lambda of the normalized partition.
inline Poly s_mu(const ContextPtr& ctx, Bank bank, const Composition& mu) {
  Normalization nr = normalize(mu);
  if (nr.is_degenerate()) return Poly::zero(ctx);
  Poly s = schur_poly(ctx, bank, nr.partition(), mu.size(), SchurMethod::bialternant);
  return nr.sign() < 0 ? -s : s;
}

// The same value straight from the alternant quotient, with no normalization
// step; degenerate compositions give a zero numerator.
inline Poly s_mu_direct(const ContextPtr& ctx, Bank bank, const Composition& mu) {
  Poly num = power_alternant(ctx, bank, mu);
  return num.exact_div(vandermonde(ctx, bank, mu.size()));
}

}  // namespace schur
