#pragma once

#include <memory>
#include <string>
#include <vector>

#include "binom/gb.hpp"

namespace binom {

class NotTwoTerm : public MathError {
 public:
  NotTwoTerm() : MathError("quasi-powers need a binomial with exactly two terms") {}
};

class NonzerodivisorViolated : public MathError {
 public:
  explicit NonzerodivisorViolated(const std::string& m) : MathError(m + " is a zerodivisor modulo the ideal") {}
};

class EscalationExhausted : public MathError {
 public:
  explicit EscalationExhausted(const std::string& what) : MathError(what + ": escalation bound reached") {}
};

// Ideal of a polynomial ring.  Generators are immutable; reduced Groebner
// bases are computed on demand and cached (shared between copies).
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal unit(RingPtr ring);
  static Ideal parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  int nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced basis in the ring's order / in an arbitrary order.
  const GroebnerBasis& gb() const;
  GroebnerBasis gb(const MonomialOrder& order) const;

  bool is_unit() const { return gb().is_unit(); }
  bool is_zero() const { return gb().is_zero(); }
  bool is_binomial() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& j) const;
  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

  Ideal operator+(const Ideal& o) const;
  Ideal plus(const std::vector<Polynomial>& more) const;
  Ideal plus_monomials(const std::vector<Monomial>& ms) const;

  // Reduced basis rendered term by term: the canonical printed form.
  std::vector<std::string> canonical() const;
  std::string to_string() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Monomial cell_product(uint32_t cell);  // prod_{i in cell} x_i
Polynomial as_polynomial(const Ring& ring, const Monomial& m);

Ideal eliminate(const Ideal& i, uint32_t keep);
// (I : f^inf) by one elimination of t from I + (t f - 1).
Ideal saturate(const Ideal& i, const Polynomial& f);
Ideal saturate_monomial(const Ideal& i, const Monomial& m);
// Same result by repeated colons; returns the number of steps in *steps.
Ideal saturate_iterated(const Ideal& i, const Polynomial& f, int* steps = nullptr);
Ideal colon(const Ideal& i, const Polynomial& f);
Ideal colon_monomial(const Ideal& i, const Monomial& m);
Ideal colon(const Ideal& i, const Ideal& j);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);  // folds left to right; needs one ideal
// Smallest k with (I : m^k) = (I : m^inf).
int saturation_exponent(const Ideal& i, const Monomial& m);

struct Homogenized {
  RingPtr ring;  // original variables followed by the homogenizing one
  Ideal ideal;
};
Homogenized homogenize(const Ideal& i, const std::string& name = "x0");

// x^{d a} - c^d x^{d b} for b = x^a - c x^b (normalized to a monic lead).
Polynomial quasi_power(const Polynomial& b, long d);

struct QuasiColon {
  Ideal ideal;
  long d;
};
// (I : b^[d]) for a certified stable d from the ladder 1, 2, 6, 12, 60, ...
QuasiColon colon_quasipower(const Ideal& i, const Polynomial& b, int max_escalation = 20);
// (I : b^[d] / b^[e]) computed as ((I + (I : b^[d]) b^[e]) : (x^a)^inf).
Ideal colon_quasipower_ratio(const Ideal& i, const Polynomial& b, long d, long e);
// The values lcm(1..k) without repetition: 1, 2, 6, 12, 60, 420, ...
std::vector<long> escalation_ladder(int steps);

// ((I + (x_i^{d_i} : i not in cell)) : (prod_{j in cell} x_j)^inf)
Ideal cellular_localize(const Ideal& i, uint32_t cell, const std::vector<int32_t>& d);

struct BlowupPresentations {
  RingPtr ring;            // x..., y1..yt, w (w stands for z^-1)
  Ideal symmetric;         // Sym_R I
  Ideal symmetric_normal;  // Sym_{R/I} I/I^2
  Ideal blowup;            // R[zI]
  Ideal rees;              // R[z^-1, zI]
  Ideal graded;            // gr_I R
};
BlowupPresentations blowup_presentations(const Ideal& b, const std::vector<Monomial>& m);

}  // namespace binom
