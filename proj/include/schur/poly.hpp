#pragma once
// Sparse multivariate polynomials with exact integer coefficients.
//
// Terms live in a std::map keyed by exponent vectors under graded
// lexicographic order, largest term first, so iteration order doubles as the
// canonical printing order and begin() is the leading term.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schur/context.hpp"

namespace schur {

using Int = boost::multiprecision::cpp_int;
using Monomial = std::vector<int>;  // one exponent per context variable

struct ContextMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisionByZeroError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotDivisibleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graded lex, descending: higher total degree first, then lexicographically
// larger exponent vector first.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return a > b;
  }
};

class Poly {
public:
  using TermMap = std::map<Monomial, Int, GrlexDesc>;

  explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("polynomial requires a context");
  }

  static Poly zero(const ContextPtr& ctx) { return Poly(ctx); }

  static Poly constant(const ContextPtr& ctx, Int c) {
    Poly p(ctx);
    if (c != 0) p.terms_.emplace(Monomial(static_cast<std::size_t>(ctx->size()), 0), std::move(c));
    return p;
  }

  static Poly one(const ContextPtr& ctx) { return constant(ctx, 1); }

  static Poly variable(const ContextPtr& ctx, int var_id) {
    if (var_id < 0 || var_id >= ctx->size())
      throw std::invalid_argument("variable id out of range");
    Monomial m(static_cast<std::size_t>(ctx->size()), 0);
    m[static_cast<std::size_t>(var_id)] = 1;
    Poly p(ctx);
    p.terms_.emplace(std::move(m), Int(1));
    return p;
  }

  static Poly variable(const ContextPtr& ctx, Bank b, int index) {
    return variable(ctx, ctx->var_id(b, index));
  }

  static Poly from_term(const ContextPtr& ctx, Monomial m, Int c) {
    if (static_cast<int>(m.size()) != ctx->size())
      throw std::invalid_argument("monomial length does not match context");
    for (int e : m)
      if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    Poly p(ctx);
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool operator==(const Poly& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly& operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }

  Poly operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
  }

  Poly operator-() const {
    Poly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Poly operator*(const Poly& o) const {
    check_same(o);
    Poly r(ctx_);
    if (terms_.empty() || o.terms_.empty()) return r;
    Monomial prod(static_cast<std::size_t>(ctx_->size()), 0);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = ma[k] + mb[k];
        r.add_term(prod, ca * cb);
      }
    }
    return r;
  }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  Poly operator*(const Int& c) const {
    Poly r(ctx_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
  }

  friend Poly operator*(const Int& c, const Poly& p) { return p * c; }

  Poly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly acc = one(ctx_);
    Poly base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return acc;
  }

  // Exact quotient under graded-lex long division. Throws NotDivisibleError
  // the moment a leading term fails to divide; never returns an approximation.
  Poly exact_div(const Poly& den) const {
    check_same(den);
    if (den.is_zero()) throw DivisionByZeroError("exact_div: division by zero polynomial");
    Poly quot(ctx_);
    Poly rem = *this;
    const auto& dlead = *den.terms_.begin();
    const Monomial& dm = dlead.first;
    const Int& dc = dlead.second;
    Monomial qm(static_cast<std::size_t>(ctx_->size()), 0);
    while (!rem.terms_.empty()) {
      const auto& rlead = *rem.terms_.begin();
      const Monomial& rm = rlead.first;
      bool div_ok = true;
      for (std::size_t k = 0; k < qm.size(); ++k) {
        qm[k] = rm[k] - dm[k];
        if (qm[k] < 0) div_ok = false;
      }
      if (!div_ok || rlead.second % dc != 0)
        throw NotDivisibleError("exact_div: remainder has leading term " +
                                term_string(rm, rlead.second) +
                                " not divisible by divisor leading term " +
                                term_string(dm, dc));
      Int qc = rlead.second / dc;
      quot.add_term(qm, qc);
      // rem -= (qc * qm) * den
      Monomial prod(qm.size(), 0);
      for (const auto& [m, c] : den.terms_) {
        for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = qm[k] + m[k];
        rem.add_term(prod, -qc * c);
      }
    }
    return quot;
  }

  // Drops every term whose total degree in the given bank exceeds max_deg.
  Poly truncate(Bank b, int max_deg) const {
    Poly r(ctx_);
    std::vector<char> mask = bank_mask(b);
    for (const auto& [m, c] : terms_) {
      if (bank_degree(m, mask) <= max_deg) r.terms_.emplace(m, c);
    }
    return r;
  }

  int degree(Bank b) const {
    std::vector<char> mask = bank_mask(b);
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, bank_degree(m, mask));
    return d;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, static_cast<int>(std::accumulate(m.begin(), m.end(), 0L)));
    return d;
  }

  bool depends_on(int var_id) const {
    for (const auto& [m, c] : terms_)
      if (m[static_cast<std::size_t>(var_id)] != 0) return true;
    return false;
  }

  // Substitutes repl for the given variable. repl must live in the same
  // context and must not itself involve the substituted variable.
  Poly substitute(int var_id, const Poly& repl) const {
    check_same(repl);
    if (var_id < 0 || var_id >= ctx_->size())
      throw std::invalid_argument("substitute: variable id out of range");
    if (repl.depends_on(var_id))
      throw std::invalid_argument("substitute: replacement involves the substituted variable");
    int max_e = 0;
    for (const auto& [m, c] : terms_)
      max_e = std::max(max_e, m[static_cast<std::size_t>(var_id)]);
    std::vector<Poly> powers;
    powers.reserve(static_cast<std::size_t>(max_e) + 1);
    powers.push_back(one(ctx_));
    for (int e = 1; e <= max_e; ++e) powers.push_back(powers.back() * repl);
    Poly r(ctx_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      int e = rest[static_cast<std::size_t>(var_id)];
      rest[static_cast<std::size_t>(var_id)] = 0;
      r += from_term(ctx_, std::move(rest), c) * powers[static_cast<std::size_t>(e)];
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Int a = c;
      bool neg = a < 0;
      if (neg) a = -a;
      if (first) {
        if (neg) os << '-';
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      std::string vars = vars_string(m);
      if (vars.empty()) {
        os << a.str();
      } else {
        if (a != 1) os << a.str() << '*';
        os << vars;
      }
    }
    return os.str();
  }

  // Parses the format produced by str(): signed terms of integer and
  // variable^exponent factors joined by '*', e.g. "x1^2*x2 - 3*y1".
  static Poly parse(const ContextPtr& ctx, std::string_view text);

private:
  void check_same(const Poly& o) const {
    if (!same_context(ctx_, o.ctx_))
      throw ContextMismatchError("operands belong to different variable contexts");
  }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<char> bank_mask(Bank b) const {
    std::vector<char> mask(static_cast<std::size_t>(ctx_->size()), 0);
    for (int id = 0; id < ctx_->size(); ++id)
      if (ctx_->var(id).bank == b) mask[static_cast<std::size_t>(id)] = 1;
    return mask;
  }

  static int bank_degree(const Monomial& m, const std::vector<char>& mask) {
    int d = 0;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (mask[k]) d += m[k];
    return d;
  }

  std::string vars_string(const Monomial& m) const {
    std::string s;
    for (int id = 0; id < ctx_->size(); ++id) {
      int e = m[static_cast<std::size_t>(id)];
      if (e == 0) continue;
      if (!s.empty()) s += '*';
      s += ctx_->var(id).name;
      if (e > 1) {
        s += '^';
        s += std::to_string(e);
      }
    }
    return s;
  }

  std::string term_string(const Monomial& m, const Int& c) const {
    std::string vars = vars_string(m);
    if (vars.empty()) return c.str();
    if (c == 1) return vars;
    if (c == -1) return "-" + vars;
    return c.str() + "*" + vars;
  }

  ContextPtr ctx_;
  TermMap terms_;
};

namespace detail {

struct Token {
  enum Kind { Integer, Ident, Plus, Minus, Star, Caret, End } kind;
  std::string text;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) return {Token::End, ""};
    char c = s_[pos_];
    if (c == '+') { ++pos_; return {Token::Plus, "+"}; }
    if (c == '-') { ++pos_; return {Token::Minus, "-"}; }
    if (c == '*') { ++pos_; return {Token::Star, "*"}; }
    if (c == '^') { ++pos_; return {Token::Caret, "^"}; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {Token::Integer, std::string(s_.substr(start, pos_ - start))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Token::Ident, std::string(s_.substr(start, pos_ - start))};
    }
    throw ParseError(std::string("unexpected character '") + c + "' in polynomial");
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly Poly::parse(const ContextPtr& ctx, std::string_view text) {
  detail::Lexer lex(text);
  detail::Token tok = lex.next();
  if (tok.kind == detail::Token::End) throw ParseError("empty polynomial");
  Poly out(ctx);
  bool saw_term = false;
  int sign = 1;
  // Optional leading sign.
  if (tok.kind == detail::Token::Plus || tok.kind == detail::Token::Minus) {
    sign = tok.kind == detail::Token::Minus ? -1 : 1;
    tok = lex.next();
  }
  while (true) {
    // One term: factors joined by '*'.
    Int coeff = 1;
    Monomial mono(static_cast<std::size_t>(ctx->size()), 0);
    bool expect_factor = true;
    while (expect_factor) {
      if (tok.kind == detail::Token::Integer) {
        coeff *= Int(tok.text);
        tok = lex.next();
      } else if (tok.kind == detail::Token::Ident) {
        auto id = ctx->find(tok.text);
        if (!id) throw ParseError("unknown variable '" + tok.text + "'");
        int e = 1;
        tok = lex.next();
        if (tok.kind == detail::Token::Caret) {
          tok = lex.next();
          if (tok.kind != detail::Token::Integer)
            throw ParseError("expected integer exponent after '^'");
          e = std::stoi(tok.text);
          tok = lex.next();
        }
        mono[static_cast<std::size_t>(*id)] += e;
      } else {
        throw ParseError("expected a factor in polynomial term");
      }
      if (tok.kind == detail::Token::Star) {
        tok = lex.next();
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    out += Poly::from_term(ctx, std::move(mono), sign * coeff);
    saw_term = true;
    if (tok.kind == detail::Token::End) break;
    if (tok.kind == detail::Token::Plus) {
      sign = 1;
    } else if (tok.kind == detail::Token::Minus) {
      sign = -1;
    } else {
      throw ParseError("expected '+' or '-' between terms");
    }
    tok = lex.next();
  }
  if (!saw_term) throw ParseError("empty polynomial");
  return out;
}

}  // namespace schur
