#pragma once

#include <string>
#include <vector>

#include "binom/characters.hpp"
#include "binom/ideal_ops.hpp"

namespace binom {

class NotCellular : public MathError {
 public:
  explicit NotCellular(const std::string& why) : MathError("ideal is not cellular: " + why) {}
};

struct DecomposeOptions {
  int max_escalation = 20;  // bound on doubling / ladder steps
  bool parallel = false;    // evaluate cells and primes on worker threads
};

// A binomial prime M(Z) + I+(rho), rho saturated on Z.
struct BinomialPrime {
  Ideal ideal;
  uint32_t cell = 0;
  PartialCharacter rho;
};

struct CellularComponent {
  Ideal ideal;
  uint32_t cell = 0;
  std::vector<int32_t> exponents;  // d_i for the variables outside the cell
};

struct PrimaryComponent {
  Ideal ideal;
  BinomialPrime prime;
  bool embedded = false;
};

struct PrimaryTest {
  bool primary = false;
  Ideal radical;                     // I+(sigma) + M(Z), sigma p-saturated
  std::vector<BinomialPrime> witnesses;  // two distinct associated primes when not primary
  std::string step;                  // which check decided
};

Ideal prime_ideal(const PartialCharacter& rho, const RingPtr& ring);
BinomialPrime make_prime(const PartialCharacter& rho, const RingPtr& ring);

// The cell Z of a cellular ideal: x_i (i in Z) nonzerodivisors, the others
// nilpotent.  Throws NotCellular otherwise.
uint32_t cellular_cell(const Ideal& i);

Ideal radical(const Ideal& i, const DecomposeOptions& opt = {});
std::vector<BinomialPrime> minimal_primes(const Ideal& i, const DecomposeOptions& opt = {});
std::vector<CellularComponent> cellular_decomposition(const Ideal& i, const DecomposeOptions& opt = {});

PrimaryTest is_primary(const Ideal& i, uint32_t cell);
// Any binomial ideal: non-cellular ideals are not primary; the witnesses are
// then two primes of its primary decomposition.
PrimaryTest is_primary(const Ideal& i);
std::vector<BinomialPrime> associated_primes(const Ideal& i, uint32_t cell);
// Any binomial ideal: the primes of a minimal primary decomposition.
std::vector<BinomialPrime> associated_primes(const Ideal& i, const DecomposeOptions& opt = {});

// I_(J) for J = I+(sigma) + M(Z): the primary components of the cellular
// ideal I whose primes lie in a minimal prime of J.
Ideal localize_at(const Ideal& i, uint32_t cell, const PartialCharacter& sigma, const DecomposeOptions& opt = {});
// Intersection of the minimal primary components of a cellular ideal.
Ideal hull(const Ideal& i, uint32_t cell, const DecomposeOptions& opt = {});
// Any binomial ideal: each minimal prime's component is taken from the
// cellular component with the same cell.  Binomiality of the result is not
// guaranteed for non-cellular input; callers check is_binomial().
Ideal hull(const Ideal& i, const DecomposeOptions& opt = {});

// Characteristic 0: a cellular ideal as the intersection of the unmixed ideals
// Hull(I + ((I : m) ∩ k[Z])) over monomials m outside Z, one per distinct
// colon.  Components are distinct and verified to meet in I.
std::vector<Ideal> unmixed_decomposition(const Ideal& i, uint32_t cell, const DecomposeOptions& opt = {});

struct PrimaryDecomposition {
  std::vector<CellularComponent> cells;
  std::vector<PrimaryComponent> components;
  bool intersection_verified = false;
  bool primary_certified = false;
};
PrimaryDecomposition primary_decomposition(const Ideal& i, const DecomposeOptions& opt = {});

// C(rho): binomials x^{c+} - rho(c) x^{c-} over the circuits c of L_rho.
Ideal circuit_ideal(const PartialCharacter& rho, const RingPtr& ring);
// Whether (P + M(Z)) : (prod Z)^inf is proper, for a prime P without variables.
bool is_face(const Ideal& p, uint32_t cell);

// Canonical JSON for decomposition results (keys sorted).
std::string decomposition_json(const Ideal& input, const PrimaryDecomposition& d);
std::string cells_json(const Ideal& input, const std::vector<CellularComponent>& cells, bool verified);
std::string primes_json(const Ideal& input, const std::vector<BinomialPrime>& primes);

}  // namespace binom
