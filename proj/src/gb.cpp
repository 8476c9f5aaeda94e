#include "binom/gb.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "binom/detail/expr_parser.hpp"

namespace binom {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(int i, int32_t power) {
  Monomial m;
  m.set(i, power);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int32_t>& exps) {
  if (exps.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  Monomial m;
  for (size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

void Monomial::set(int i, int32_t v) {
  if (v < 0) throw std::invalid_argument("negative exponent");
  deg += v - e[i];
  e[i] = v;
  if (v)
    mask |= 1u << i;
  else
    mask &= ~(1u << i);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
  r.deg = deg + o.deg;
  r.mask = mask | o.mask;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = e[i] - o.e[i];
    if (r.e[i]) r.mask |= 1u << i;
  }
  r.deg = deg - o.deg;
  return r;
}

Monomial Monomial::pow(int32_t k) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] * k;
  r.deg = deg * k;
  r.mask = k ? mask : 0;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(e[i], o.e[i]);
    r.deg += r.e[i];
  }
  r.mask = mask | o.mask;
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::min(e[i], o.e[i]);
    r.deg += r.e[i];
  }
  r.mask = mask & o.mask;
  return r;
}

Monomial Monomial::restricted(uint32_t vars) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i)
    if (vars & (1u << i)) r.set(i, e[i]);
  return r;
}

size_t Monomial::hash() const {
  size_t h = 1469598103934665603ull;
  for (int i = 0; i < kMaxVars; ++i) {
    h ^= static_cast<size_t>(e[i]);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += i < static_cast<int>(names.size()) ? names[i] : "_v" + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<int> mask_vars(uint32_t mask) {
  std::vector<int> v;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) v.push_back(i);
  return v;
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(Kind kind, int nvars, int block, const std::vector<int>& perm)
    : kind_(kind), n_(static_cast<int8_t>(nvars)), block_(static_cast<int8_t>(block)) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("too many variables");
  if (block < 0 || block > nvars) throw std::invalid_argument("bad block size");
  if (perm.empty()) {
    for (int i = 0; i < nvars; ++i) perm_[i] = static_cast<int8_t>(i);
  } else {
    if (static_cast<int>(perm.size()) != nvars) throw std::invalid_argument("bad permutation");
    std::vector<int> seen(nvars, 0);
    for (int i = 0; i < nvars; ++i) {
      if (perm[i] < 0 || perm[i] >= nvars || seen[perm[i]]++) throw std::invalid_argument("bad permutation");
      perm_[i] = static_cast<int8_t>(perm[i]);
    }
  }
}

MonomialOrder MonomialOrder::eliminating(Kind kind, int n, const std::vector<int>& first) {
  std::vector<int> perm = first;
  for (int i = 0; i < n; ++i)
    if (std::find(first.begin(), first.end(), i) == first.end()) perm.push_back(i);
  return MonomialOrder(kind, n, static_cast<int>(first.size()), perm);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (int i = 0; i < n_; ++i) {
        int v = perm_[i];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      }
      return 0;
    case Kind::DegRevLex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      for (int i = n_ - 1; i >= 0; --i) {
        int v = perm_[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
      }
      return 0;
    case Kind::Elim: {
      int da = a.deg, db = b.deg;
      for (int i = 0; i < block_; ++i) {
        int v = perm_[i];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
        da -= a.e[v];
        db -= b.e[v];
      }
      if (da != db) return da > db ? 1 : -1;
      for (int i = n_ - 1; i >= block_; --i) {
        int v = perm_[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
      }
      return 0;
    }
    case Kind::Block: {
      int da = 0, db = 0;
      for (int i = 0; i < block_; ++i) {
        da += a.e[perm_[i]];
        db += b.e[perm_[i]];
      }
      if (da != db) return da > db ? 1 : -1;
      for (int i = block_ - 1; i >= 0; --i) {
        int v = perm_[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
      }
      int ra = a.deg - da, rb = b.deg - db;
      if (ra != rb) return ra > rb ? 1 : -1;
      for (int i = n_ - 1; i >= block_; --i) {
        int v = perm_[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Elim: return "elim(" + std::to_string(block_) + ")";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const MonomialOrder& o, std::vector<Term> terms) : order_(o) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return o.greater(a.m, b.m); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().m == t.m) {
      terms_.back().c += t.c;
      if (terms_.back().c.is_zero()) terms_.pop_back();
    } else if (!t.c.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(const MonomialOrder& o, const Scalar& c) {
  Polynomial p(o);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial::one()});
  return p;
}

Polynomial Polynomial::monomial(const MonomialOrder& o, const Scalar& c, const Monomial& m) {
  Polynomial p(o);
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::binomial(const MonomialOrder& o, const Scalar& c1, const Monomial& a, const Scalar& c2,
                                const Monomial& b) {
  return Polynomial(o, {{c1, a}, {c2, b}});
}

uint32_t Polynomial::support() const {
  uint32_t m = 0;
  for (const auto& t : terms_) m |= t.m.mask;
  return m;
}

int32_t Polynomial::total_degree() const {
  int32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.deg);
  return d;
}

Polynomial Polynomial::with_order(const MonomialOrder& o) const {
  if (o == order_) return *this;
  Polynomial p(o);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) { return o.greater(a.m, b.m); });
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_[0].c.is_one()) return *this;
  Polynomial p(order_);
  p.terms_ = terms_;
  Scalar inv = terms_[0].c.inverse();
  for (auto& t : p.terms_) t.c *= inv;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.order_ != order_) return *this += o.with_order(order_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : (j == o.terms_.size() ? 1 : order_.compare(terms_[i].m, o.terms_[j].m));
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) out.push_back({std::move(s), terms_[i].m});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

void Polynomial::sub_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) {
  if (g.order_ != order_) {
    sub_multiple(c, m, g.with_order(order_));
    return;
  }
  const auto& gt = g.terms_;
  std::vector<Term> out;
  out.reserve(terms_.size() + gt.size());
  size_t i = 0, j = 0;
  Monomial gm;
  if (!gt.empty()) gm = gt[0].m * m;
  while (i < terms_.size() || j < gt.size()) {
    int cmp = i == terms_.size() ? -1 : (j == gt.size() ? 1 : order_.compare(terms_[i].m, gm));
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    if (cmp < 0) {
      out.push_back({-(c * gt[j].c), gm});
    } else {
      Scalar s = terms_[i].c - c * gt[j].c;
      if (!s.is_zero()) out.push_back({std::move(s), gm});
      ++i;
    }
    if (++j < gt.size()) gm = gt[j].m * m;
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::scaled(const Scalar& c, const Monomial& m) const {
  Polynomial p(order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.c * c, t.m * m});
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) all.push_back({s.c * t.c, s.m * t.m});
  return Polynomial(a.order_, std::move(all));
}

Polynomial Polynomial::pow(long k) const {
  if (k < 0) throw std::invalid_argument("negative power of a polynomial");
  Polynomial r = constant(order_, Scalar(1L));
  if (!terms_.empty() && terms_[0].c.kind() == Scalar::Kind::Finite)
    r = constant(order_, Scalar::finite(terms_[0].c.galois(), terms_[0].c.galois()->one()));
  Polynomial b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Polynomial Polynomial::divided_by(const Polynomial& g) const {
  if (g.is_zero()) throw DivisionByZero();
  Polynomial gg = g.with_order(order_);
  Polynomial q(order_), r = *this;
  while (!r.is_zero()) {
    if (!gg.lm().divides(r.lm())) throw std::logic_error("inexact polynomial division");
    Scalar c = r.lc() / gg.lc();
    Monomial m = r.lm() / gg.lm();
    q.terms_.push_back({c, m});
    r.sub_multiple(c, m, gg);
  }
  return q;
}

Polynomial Polynomial::with_zero(uint32_t vars) const {
  Polynomial p(order_);
  for (const auto& t : terms_)
    if ((t.m.mask & vars) == 0) p.terms_.push_back(t);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.order_ != b.order_) return a == b.with_order(a.order_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mono = t.m.is_one() ? "" : t.m.to_string(names);
    std::string cs = t.c.to_plain_string();
    bool neg = false;
    std::string body;
    if (t.c.needs_parens()) {
      body = "(" + cs + ")";
    } else {
      if (!cs.empty() && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      body = cs;
    }
    if (!mono.empty()) body = body == "1" ? mono : body + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring and parsing

int Ring::index_of(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(const Field& field, const std::vector<std::string>& names, MonomialOrder::Kind kind) {
  if (names.size() > static_cast<size_t>(kMaxVars))
    throw UsageError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw UsageError("duplicate variable '" + n + "'");
    // names that the scalar grammar reserves
    bool zeta = n.size() > 1 && n[0] == 'z' &&
                std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (zeta || (field.is_finite() && n == "t")) throw UsageError("variable name '" + n + "' is reserved");
  }
  int n = static_cast<int>(names.size());
  MonomialOrder o = kind == MonomialOrder::Kind::Lex ? MonomialOrder::lex(n) : MonomialOrder::degrevlex(n);
  return std::make_shared<const Ring>(Ring{field, names, o});
}

RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra) {
  std::vector<std::string> names = r->names;
  for (std::string e : extra) {
    while (std::find(names.begin(), names.end(), e) != names.end()) e += "_";
    names.push_back(e);
  }
  return make_ring(r->field, names, r->order.kind() == MonomialOrder::Kind::Lex ? MonomialOrder::Kind::Lex
                                                                                : MonomialOrder::Kind::DegRevLex);
}

Polynomial variable(const Ring& ring, int i) {
  return Polynomial::monomial(ring.order, ring.field.one(), Monomial::var(i));
}

Polynomial constant(const Ring& ring, const Scalar& c) { return Polynomial::constant(ring.order, c); }

namespace {

struct PolyOps {
  using Value = Polynomial;
  const Ring& ring;
  Value number(const BigInt& n) { return Polynomial::constant(ring.order, ring.field.from_integer(n)); }
  template <class Fail>
  Value ident(const std::string& name, Fail fail) {
    int i = ring.index_of(name);
    if (i >= 0) return variable(ring, i);
    const Field& f = ring.field;
    if (f.is_finite()) {
      if (name == "t") {
        GaloisField::Elem e = f.galois()->zero();
        if (f.galois()->k() == 1)
          e[0] = (f.galois()->p() - f.galois()->modulus()[0]) % f.galois()->p();
        else
          e[1] = 1;
        return Polynomial::constant(ring.order, Scalar::finite(f.galois(), e));
      }
    } else if (name.size() > 1 && name[0] == 'z' &&
               std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      long n = std::stol(name.substr(1));
      if (n < 1 || n > 100000) fail("bad root of unity order");
      return Polynomial::constant(ring.order, root_of_unity(f, n, 1));
    }
    fail("unknown variable '" + name + "'");
    return Polynomial(ring.order);
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  template <class Fail>
  Value div(Value a, Value b, Fail fail) {
    if (!b.is_constant()) fail("division by a non-constant polynomial");
    if (b.is_zero()) fail("division by zero");
    return a.scaled(b.lc().inverse(), Monomial::one());
  }
  Value neg(Value a) { return -a; }
  template <class Fail>
  Value pow(Value a, long e, Fail fail) {
    if (e < 0) {
      if (!a.is_constant() || a.is_zero()) fail("negative exponent of a non-constant");
      return Polynomial::constant(ring.order, a.lc().pow(e));
    }
    if (e > 100000) fail("exponent too large");
    return a.pow(e);
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring, int line, int column) {
  PolyOps ops{ring};
  detail::ExprParser<PolyOps> parser(text, ops, {line, column});
  return parser.parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Ring& ring, int line, int column) {
  PolyOps ops{ring};
  detail::ExprParser<PolyOps> parser(text, ops, {line, column});
  std::vector<Polynomial> out;
  if (parser.at_end()) return out;
  do {
    out.push_back(parser.parse_one());
  } while (parser.accept(','));
  if (!parser.at_end()) parser.fail("expected ',' or end of list");
  return out;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& o, GbStats* stats) : ord_(o), stats_(stats) {}

  void add_input(const Polynomial& f) {
    Polynomial h = reduce(f.with_order(ord_));
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k) {
        const Monomial& a = pairs_[k].lcm;
        const Monomial& b = pairs_[best].lcm;
        if (a.deg < b.deg || (a.deg == b.deg && ord_.compare(a, b) < 0)) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (stats_) ++stats_->pairs_reduced;
      Polynomial s = spoly(p);
      Polynomial h = reduce(s);
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      insert(h.monic());
    }
  }

  GroebnerBasis result() {
    GroebnerBasis gb{ord_, {}};
    if (unit_) {
      gb.gens.push_back(Polynomial::constant(ord_, one_));
      return gb;
    }
    std::vector<Polynomial> act;
    for (size_t k = 0; k < g_.size(); ++k)
      if (active_[k]) act.push_back(g_[k]);
    std::sort(act.begin(), act.end(), [&](const Polynomial& a, const Polynomial& b) { return ord_.greater(b.lm(), a.lm()); });
    std::vector<Polynomial> out;
    for (size_t k = 0; k < act.size(); ++k) {
      Polynomial tail(ord_, std::vector<Term>(act[k].terms().begin() + 1, act[k].terms().end()));
      Polynomial r = normal_form(tail, act);
      r += Polynomial::monomial(ord_, act[k].lc(), act[k].lm());
      out.push_back(r.monic());
    }
    gb.gens = std::move(out);
    return gb;
  }

 private:
  Polynomial spoly(const Pair& p) const {
    const Polynomial& a = g_[p.i];
    const Polynomial& b = g_[p.j];
    Polynomial s = a.scaled(one_, p.lcm / a.lm());
    s.sub_multiple(one_, p.lcm / b.lm(), b);
    if (stats_) stats_->max_intermediate_terms = std::max(stats_->max_intermediate_terms, s.size());
    return s;
  }

  int find_reducer(const Monomial& m) const {
    for (size_t k = 0; k < g_.size(); ++k)
      if (active_[k] && lms_[k].divides(m)) return static_cast<int>(k);
    return -1;
  }

  // Full reduction; terms before `pos` are already irreducible and are left
  // untouched by sub_multiple since every term of the multiple is smaller.
  Polynomial reduce(Polynomial p) {
    size_t pos = 0;
    while (pos < p.size()) {
      const Term& t = p.terms()[pos];
      int k = find_reducer(t.m);
      if (k < 0) {
        ++pos;
        continue;
      }
      p.sub_multiple(t.c / g_[k].lc(), t.m / lms_[k], g_[k]);
      if (stats_) stats_->max_intermediate_terms = std::max(stats_->max_intermediate_terms, p.size());
    }
    return p;
  }

  void insert(Polynomial h) {
    if (h.lm().is_one()) {
      unit_ = true;
      one_ = h.lc();
      return;
    }
    if (g_.empty()) one_ = h.lc() / h.lc();
    int k = static_cast<int>(g_.size());
    const Monomial lh = h.lm();
    // Gebauer-Moeller criteria
    std::vector<Pair> c;
    for (int i = 0; i < k; ++i)
      if (active_[i]) c.push_back({i, k, lms_[i].lcm(lh)});
    std::vector<Pair> d;
    for (size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = lms_[p.i].coprime(lh);
      if (!keep) {
        keep = true;
        for (size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(p.lcm)) keep = false;
        for (size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm) && lms_[p.i].lcm(lh) != p.lcm && lms_[p.j].lcm(lh) != p.lcm) continue;
      kept.push_back(p);
    }
    for (const auto& p : d)
      if (!lms_[p.i].coprime(lh)) kept.push_back(p);
    if (stats_) stats_->pairs_considered += c.size();
    pairs_ = std::move(kept);
    for (int i = 0; i < k; ++i)
      if (active_[i] && lh.divides(lms_[i])) active_[i] = false;
    g_.push_back(std::move(h));
    lms_.push_back(lh);
    active_.push_back(true);
  }

  MonomialOrder ord_;
  GbStats* stats_;
  std::vector<Polynomial> g_;
  std::vector<Monomial> lms_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  Scalar one_{1L};
};

}  // namespace

GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order, GbStats* stats) {
  Buchberger b(order, stats);
  if (stats) {
    stats->all_binomial = std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_binomial(); });
  }
  std::vector<Polynomial> sorted;
  for (const auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g.with_order(order));
  std::sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.lm().deg != b.lm().deg) return a.lm().deg < b.lm().deg;
    return order.greater(b.lm(), a.lm());
  });
  for (const auto& g : sorted) b.add_input(g);
  b.run();
  GroebnerBasis out = b.result();
  // binomial closure: a violation is a bug, never data
  bool binomial_in = std::all_of(sorted.begin(), sorted.end(), [](const Polynomial& p) { return p.is_binomial(); });
  if (binomial_in)
    for (const auto& p : out.gens)
      if (!p.is_binomial()) throw std::logic_error("binomial input produced a non-binomial Groebner basis");
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g) {
  Polynomial p = f;
  size_t pos = 0;
  while (pos < p.size()) {
    const Term& t = p.terms()[pos];
    const Polynomial* red = nullptr;
    for (const auto& h : g)
      if (h.lm().divides(t.m)) {
        red = &h;
        break;
      }
    if (!red) {
      ++pos;
      continue;
    }
    p.sub_multiple(t.c / red->lc(), t.m / red->lm(), *red);
  }
  return p;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  return normal_form(f.with_order(g.order), g.gens);
}

bool is_binomial_ideal(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  GroebnerBasis g = reduced_groebner_basis(gens, order);
  return std::all_of(g.gens.begin(), g.gens.end(), [](const Polynomial& p) { return p.is_binomial(); });
}

StandardMonomials standard_monomials(const GroebnerBasis& g, uint32_t vars) {
  StandardMonomials out;
  if (g.is_unit()) return out;
  std::vector<Monomial> lms;
  for (const auto& p : g.gens)
    if ((p.lm().mask & ~vars) == 0) lms.push_back(p.lm());
  std::vector<int> vs = mask_vars(vars);
  for (int v : vs) {
    bool bounded = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.mask == (1u << v); });
    if (!bounded) throw InfiniteStandardSet();
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::function<void(size_t, Monomial)> rec = [&](size_t i, Monomial m) {
    if (i == vs.size()) {
      out.all.push_back(m);
      return;
    }
    Monomial cur = m;
    while (standard(cur)) {
      rec(i + 1, cur);
      cur = cur * Monomial::var(vs[i]);
    }
  };
  rec(0, Monomial::one());
  for (const auto& m : out.all) {
    bool maximal = std::all_of(vs.begin(), vs.end(), [&](int v) { return !standard(m * Monomial::var(v)); });
    if (maximal) out.maximal.push_back(m);
  }
  return out;
}

}  // namespace binom
