#include "binom/ideal_ops.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace binom {

struct Ideal::Cache {
  std::mutex mu;
  std::optional<GroebnerBasis> main;
  std::vector<GroebnerBasis> others;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(g.with_order(ring_->order));
}

Ideal Ideal::unit(RingPtr ring) {
  Scalar one = ring->field.one();
  return Ideal(ring, {constant(*ring, one)});
}

Ideal Ideal::parse(RingPtr ring, std::string_view text) {
  auto gens = parse_polynomial_list(text, *ring);
  return Ideal(std::move(ring), std::move(gens));
}

const GroebnerBasis& Ideal::gb() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->main) cache_->main = reduced_groebner_basis(gens_, ring_->order);
  return *cache_->main;
}

GroebnerBasis Ideal::gb(const MonomialOrder& order) const {
  if (order == ring_->order) return gb();
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& g : cache_->others)
    if (g.order == order) return g;
  cache_->others.push_back(reduced_groebner_basis(gens_, order));
  return cache_->others.back();
}

bool Ideal::is_binomial() const {
  const auto& g = gb().gens;
  return std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_binomial(); });
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f.with_order(ring_->order), gb()).is_zero(); }

bool Ideal::contains(const Ideal& j) const {
  if (is_unit()) return true;
  return std::all_of(j.gens_.begin(), j.gens_.end(), [&](const Polynomial& p) { return contains(p); });
}

bool operator==(const Ideal& a, const Ideal& b) {
  const auto& x = a.gb().gens;
  const auto& y = b.gb().gens;
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

Ideal Ideal::operator+(const Ideal& o) const { return plus(o.gens_); }

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::plus_monomials(const std::vector<Monomial>& ms) const {
  std::vector<Polynomial> g = gens_;
  for (const auto& m : ms) g.push_back(as_polynomial(*ring_, m));
  return Ideal(ring_, std::move(g));
}

std::vector<std::string> Ideal::canonical() const {
  std::vector<std::string> out;
  for (const auto& p : gb().gens) out.push_back(p.to_string(ring_->names));
  return out;
}

std::string Ideal::to_string() const {
  auto c = canonical();
  if (c.empty()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i];
  return s + ")";
}

Monomial cell_product(uint32_t cell) {
  Monomial m;
  for (int v : mask_vars(cell)) m.set(v, 1);
  return m;
}

Polynomial as_polynomial(const Ring& ring, const Monomial& m) {
  return Polynomial::monomial(ring.order, ring.field.one(), m);
}

namespace {

// Generators of (gens) ∩ k[variables not in drop], in the order `back`.
std::vector<Polynomial> eliminate_vars(const std::vector<Polynomial>& gens, int ntotal, uint32_t drop,
                                       const MonomialOrder& back) {
  MonomialOrder o = MonomialOrder::eliminating(MonomialOrder::Kind::Block, ntotal, mask_vars(drop));
  std::vector<Polynomial> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(g.with_order(o));
  GroebnerBasis g = reduced_groebner_basis(lifted, o);
  std::vector<Polynomial> out;
  for (const auto& p : g.gens)
    if ((p.support() & drop) == 0) out.push_back(p.with_order(back));
  return out;
}

const std::vector<Polynomial>& best_generators(const Ideal& i) { return i.gb().gens; }

// Generators moved to an order on n + 1 variables, so that arithmetic with the
// auxiliary variable x_n never compares terms that differ only in x_n (lex on
// n variables would).
std::vector<Polynomial> lifted_generators(const Ideal& i) {
  MonomialOrder o = MonomialOrder::degrevlex(i.nvars() + 1);
  std::vector<Polynomial> out;
  for (const auto& g : best_generators(i)) out.push_back(g.with_order(o));
  return out;
}


}  // namespace

Ideal eliminate(const Ideal& i, uint32_t keep) {
  int n = i.nvars();
  uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  uint32_t drop = all & ~keep;
  if (!drop) return i;
  return Ideal(i.ring(), eliminate_vars(i.generators(), n, drop, i.ring()->order));
}

Ideal saturate(const Ideal& i, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(i.ring());
  if (f.is_constant() || i.is_unit() || i.is_zero()) return i;
  const Ring& r = *i.ring();
  int n = r.nvars();
  if (n + 1 > kMaxVars) throw UsageError("too many variables for an auxiliary elimination");
  std::vector<Polynomial> gens = lifted_generators(i);
  MonomialOrder o = MonomialOrder::degrevlex(n + 1);
  Monomial t = Monomial::var(n);
  Polynomial tf = f.with_order(o).scaled(r.field.one(), t) - Polynomial::constant(o, r.field.one());
  gens.push_back(tf);
  return Ideal(i.ring(), eliminate_vars(gens, n + 1, 1u << n, r.order));
}

Ideal saturate_monomial(const Ideal& i, const Monomial& m) { return saturate(i, as_polynomial(*i.ring(), m)); }

Ideal saturate_iterated(const Ideal& i, const Polynomial& f, int* steps) {
  Ideal j = i;
  int k = 0;
  for (;;) {
    Ideal next = colon(j, f);
    if (next == j) break;
    j = next;
    ++k;
  }
  if (steps) *steps = k;
  return j;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const Ring& r = *a.ring();
  int n = r.nvars();
  if (n + 1 > kMaxVars) throw UsageError("too many variables for an auxiliary elimination");
  Monomial t = Monomial::var(n);
  Scalar one = r.field.one();
  std::vector<Polynomial> gens;
  for (const auto& g : lifted_generators(a)) gens.push_back(g.scaled(one, t));
  for (const auto& h : lifted_generators(b)) gens.push_back(h - h.scaled(one, t));
  return Ideal(a.ring(), eliminate_vars(gens, n + 1, 1u << n, r.order));
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of no ideals");
  Ideal acc = ideals[0];
  for (size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
  return acc;
}

Ideal colon(const Ideal& i, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(i.ring());
  if (f.is_constant() || i.is_unit()) return i;
  Ideal j = intersect(i, Ideal(i.ring(), {f}));
  std::vector<Polynomial> q;
  Polynomial ff = f.with_order(i.ring()->order);
  for (const auto& g : j.generators()) q.push_back(g.divided_by(ff));
  return Ideal(i.ring(), std::move(q));
}

Ideal colon_monomial(const Ideal& i, const Monomial& m) { return colon(i, as_polynomial(*i.ring(), m)); }

Ideal colon(const Ideal& i, const Ideal& j) {
  std::vector<Ideal> parts;
  for (const auto& g : j.generators()) parts.push_back(colon(i, g));
  if (parts.empty()) return Ideal::unit(i.ring());
  return intersect(parts);
}

int saturation_exponent(const Ideal& i, const Monomial& m) {
  Ideal j = i;
  int k = 0;
  for (;;) {
    Ideal next = colon_monomial(j, m);
    if (next == j) return k;
    j = next;
    ++k;
  }
}

Homogenized homogenize(const Ideal& i, const std::string& name) {
  const Ring& r = *i.ring();
  int n = r.nvars();
  RingPtr r2 = extend_ring(i.ring(), {name});
  GroebnerBasis g = i.gb(MonomialOrder::degrevlex(n));
  std::vector<Polynomial> out;
  for (const auto& p : g.gens) {
    int32_t d = p.total_degree();
    std::vector<Term> ts;
    for (const auto& t : p.terms()) ts.push_back({t.c, t.m * Monomial::var(n, d - t.m.deg)});
    out.emplace_back(r2->order, std::move(ts));
  }
  return {r2, Ideal(r2, std::move(out))};
}

Polynomial quasi_power(const Polynomial& b, long d) {
  if (b.size() != 2) throw NotTwoTerm();
  if (d < 1) throw std::invalid_argument("quasi-power exponent must be positive");
  Polynomial m = b.monic();
  const Term& lo = m.terms()[1];  // b = x^a - c x^b with c = -lo.c
  Scalar cd = (-lo.c).pow(d);
  return Polynomial::binomial(m.order(), m.lc(), m.lm().pow(static_cast<int32_t>(d)), -cd,
                              lo.m.pow(static_cast<int32_t>(d)));
}

std::vector<long> escalation_ladder(int steps) {
  std::vector<long> out;
  long l = 1;
  for (long k = 1; static_cast<int>(out.size()) < steps; ++k) {
    l = std::lcm(l, k);
    if (out.empty() || out.back() != l) out.push_back(l);
  }
  return out;
}

namespace {

void require_nonzerodivisor(const Ideal& i, const Monomial& m) {
  if (colon_monomial(i, m) != i) throw NonzerodivisorViolated(m.to_string(i.ring()->names));
}

}  // namespace

QuasiColon colon_quasipower(const Ideal& i, const Polynomial& b, int max_escalation) {
  if (b.size() != 2) throw NotTwoTerm();
  Polynomial bb = b.with_order(i.ring()->order).monic();
  require_nonzerodivisor(i, bb.lm());
  for (long d : escalation_ladder(max_escalation)) {
    Polynomial bd = quasi_power(bb, d);
    Ideal j = colon(i, bd);
    if (j == colon(i, bd * bd) && j == colon(i, quasi_power(bb, 2 * d)) && j == colon(i, quasi_power(bb, 3 * d)))
      return {j, d};
  }
  throw EscalationExhausted("colon by quasi-powers");
}

Ideal colon_quasipower_ratio(const Ideal& i, const Polynomial& b, long d, long e) {
  if (b.size() != 2) throw NotTwoTerm();
  if (e < 1 || d % e != 0) throw std::invalid_argument("quasi-power ratio needs e | d");
  uint64_t p = i.ring()->field.characteristic();
  if (p) {
    long q = 1;
    for (long x = d; x % static_cast<long>(p) == 0; x /= static_cast<long>(p)) q *= static_cast<long>(p);
    if (e % q != 0) throw std::invalid_argument("quasi-power ratio needs the p-part of d to divide e");
  }
  Polynomial bb = b.with_order(i.ring()->order).monic();
  require_nonzerodivisor(i, bb.lm());
  if (d == e) return i;
  Polynomial f = quasi_power(bb, e);
  Ideal k = colon(i, quasi_power(bb, d));
  std::vector<Polynomial> gens = i.generators();
  for (const auto& g : k.gb().gens) gens.push_back(g * f);
  return saturate_monomial(Ideal(i.ring(), std::move(gens)), bb.lm());
}

Ideal cellular_localize(const Ideal& i, uint32_t cell, const std::vector<int32_t>& d) {
  int n = i.nvars();
  std::vector<Monomial> powers;
  for (int v = 0; v < n; ++v)
    if (!(cell & (1u << v))) {
      int32_t e = v < static_cast<int>(d.size()) ? d[v] : 1;
      powers.push_back(Monomial::var(v, std::max(e, 1)));
    }
  Ideal j = i.plus_monomials(powers);
  if (!cell) return j;
  return saturate_monomial(j, cell_product(cell));
}

BlowupPresentations blowup_presentations(const Ideal& b, const std::vector<Monomial>& ms) {
  const Ring& r = *b.ring();
  int n = r.nvars();
  int t = static_cast<int>(ms.size());
  std::vector<std::string> extra;
  for (int k = 1; k <= t; ++k) extra.push_back("y" + std::to_string(k));
  extra.push_back("w");
  RingPtr rr = extend_ring(b.ring(), extra);
  int w = n + t, z = n + t + 1;
  if (z + 1 > kMaxVars) throw UsageError("too many variables for blowup presentations");
  Scalar one = r.field.one();
  std::vector<Polynomial> base;
  for (const auto& g : b.generators()) base.push_back(g.with_order(rr->order));
  for (int k = 0; k < t; ++k)
    base.push_back(Polynomial::binomial(rr->order, one, Monomial::var(n + k), -one, ms[k] * Monomial::var(z)));
  BlowupPresentations out;
  out.ring = rr;
  out.blowup = Ideal(rr, eliminate_vars(base, z + 1, 1u << z, rr->order));
  base.push_back(Polynomial::binomial(rr->order, one, Monomial::var(z) * Monomial::var(w), -one, Monomial::one()));
  out.rees = Ideal(rr, eliminate_vars(base, z + 1, 1u << z, rr->order));
  // the blowup ideal is homogeneous in the y-grading, so its reduced basis
  // elements of y-degree <= 1 generate the syzygy part
  std::vector<Polynomial> sym;
  for (const auto& p : out.blowup.gb().gens) {
    int32_t yd = 0;
    for (int k = 0; k < t; ++k) yd += p.lm()[n + k];
    if (yd <= 1) sym.push_back(p);
  }
  out.symmetric = Ideal(rr, sym);
  std::vector<Monomial> msr = ms;
  out.symmetric_normal = out.symmetric.plus_monomials(msr);
  out.graded = out.blowup.plus_monomials(msr);
  return out;
}

}  // namespace binom
