#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "binom/exact_arith.hpp"

namespace binom {

// Hard limit on the number of variables of any ring, auxiliary variables
// included.  Exponent vectors are stored inline.
constexpr int kMaxVars = 24;

class InfiniteStandardSet : public MathError {
 public:
  InfiniteStandardSet() : MathError("the set of standard monomials is infinite") {}
};

struct Monomial {
  std::array<int32_t, kMaxVars> e{};
  int32_t deg = 0;
  uint32_t mask = 0;  // bit i set iff e[i] > 0

  static Monomial one() { return {}; }
  static Monomial var(int i, int32_t power = 1);
  static Monomial from_exponents(const std::vector<int32_t>& exps);

  int32_t operator[](int i) const { return e[i]; }
  void set(int i, int32_t v);
  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& o) const {
    if ((mask & ~o.mask) != 0 || deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const { return (mask & o.mask) == 0; }
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o | *this
  Monomial pow(int32_t k) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  // Part of the monomial supported on the variables of `vars` (bit mask).
  Monomial restricted(uint32_t vars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.mask == b.mask && a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  size_t hash() const;
  std::string to_string(const std::vector<std::string>& names) const;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

// lex, degrevlex, elim(k) = lex on the first k variables then degrevlex on the
// rest, block(k) = degrevlex on the first k variables then degrevlex on the
// rest.  "First" refers to the priority permutation (identity by default).
class MonomialOrder {
 public:
  enum class Kind : uint8_t { Lex, DegRevLex, Elim, Block };

  MonomialOrder() : MonomialOrder(Kind::DegRevLex, 0, 0) {}
  MonomialOrder(Kind kind, int nvars, int block, const std::vector<int>& perm = {});
  static MonomialOrder lex(int n) { return {Kind::Lex, n, 0}; }
  static MonomialOrder degrevlex(int n) { return {Kind::DegRevLex, n, 0}; }
  static MonomialOrder elim(int n, int k) { return {Kind::Elim, n, k}; }
  // Order on n variables in which `first` come before all others (in
  // their given order); the remaining variables keep their relative order.
  static MonomialOrder eliminating(Kind kind, int n, const std::vector<int>& first);

  Kind kind() const { return kind_; }
  int nvars() const { return n_; }
  int block() const { return block_; }
  int var_at(int priority) const { return perm_[priority]; }

  // >0 if a > b, 0 if equal, <0 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool is_degree_compatible() const { return kind_ == Kind::DegRevLex; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.block_ == b.block_ && a.perm_ == b.perm_;
  }
  friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }
  std::string name() const;

 private:
  Kind kind_;
  int8_t n_;
  int8_t block_;
  std::array<int8_t, kMaxVars> perm_{};
};

struct Term {
  Scalar c;
  Monomial m;
};

// Polynomial with nonzero terms sorted strictly descending in its order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const MonomialOrder& o) : order_(o) {}
  Polynomial(const MonomialOrder& o, std::vector<Term> terms);  // sorts, merges
  static Polynomial constant(const MonomialOrder& o, const Scalar& c);
  static Polynomial monomial(const MonomialOrder& o, const Scalar& c, const Monomial& m);
  // c1 x^a + c2 x^b
  static Polynomial binomial(const MonomialOrder& o, const Scalar& c1, const Monomial& a, const Scalar& c2,
                             const Monomial& b);

  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_binomial() const { return terms_.size() <= 2; }
  bool is_monic() const { return !terms_.empty() && terms_[0].c.is_one(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().m; }
  const Scalar& lc() const { return terms_.front().c; }
  uint32_t support() const;  // union of the variable masks
  int32_t total_degree() const;

  Polynomial with_order(const MonomialOrder& o) const;
  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c, const Monomial& m) const;  // c * m * this
  Polynomial pow(long k) const;
  // this - c*m*g, all in this polynomial's order
  void sub_multiple(const Scalar& c, const Monomial& m, const Polynomial& g);
  // Exact division; throws if g does not divide this.
  Polynomial divided_by(const Polynomial& g) const;
  // Substitute x_i = 0 for every i in `vars` (bit mask).
  Polynomial with_zero(uint32_t vars) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// Coefficient field, variable names and default order.
struct Ring {
  Field field;
  std::vector<std::string> names;
  MonomialOrder order;

  int nvars() const { return static_cast<int>(names.size()); }
  int index_of(std::string_view name) const;  // -1 if absent
};
using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const Field& field, const std::vector<std::string>& names,
                  MonomialOrder::Kind kind = MonomialOrder::Kind::DegRevLex);
// Same ring with extra variables appended (names made unique).
RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra);

Polynomial parse_polynomial(std::string_view text, const Ring& ring, int line = 1, int column = 1);
// Comma separated list; an empty or blank text gives an empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Ring& ring, int line = 1, int column = 1);
Polynomial variable(const Ring& ring, int i);
Polynomial constant(const Ring& ring, const Scalar& c);

// ---------------------------------------------------------------------------
// Buchberger

struct GbStats {
  size_t pairs_considered = 0;
  size_t pairs_reduced = 0;
  size_t zero_reductions = 0;
  size_t max_intermediate_terms = 0;
  bool all_binomial = false;
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> gens;  // reduced, monic, sorted by leading monomial
  bool is_unit() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }
  bool is_zero() const { return gens.empty(); }
};

GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                     GbStats* stats = nullptr);
// Full reduction of f modulo G (polynomials in f's order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

bool is_binomial_ideal(const std::vector<Polynomial>& gens, const MonomialOrder& order);

struct StandardMonomials {
  std::vector<Monomial> all;
  std::vector<Monomial> maximal;
};
// Monomials in the variables of `vars` (bit mask) outside the initial ideal.
StandardMonomials standard_monomials(const GroebnerBasis& g, uint32_t vars);

inline uint32_t var_mask(const std::vector<int>& vars) {
  uint32_t m = 0;
  for (int v : vars) m |= 1u << v;
  return m;
}
std::vector<int> mask_vars(uint32_t mask);

}  // namespace binom
