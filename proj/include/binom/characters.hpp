#pragma once

#include <string>
#include <vector>

#include "binom/ideal_ops.hpp"
#include "binom/intlattice.hpp"

namespace binom {

class MonomialInIdeal : public MathError {
 public:
  MonomialInIdeal() : MathError("the ideal contains a monomial in the cell variables") {}
};

class InconsistentCharacter : public MathError {
 public:
  InconsistentCharacter() : MathError("character values are inconsistent on the lattice") {}
};

// Homomorphism from a sublattice L of Z^n into k*.  Lattice vectors vanish
// outside the domain Z (a variable mask); values are stored on the Hermite
// basis of L, so equal characters have equal representations.
class PartialCharacter {
 public:
  PartialCharacter() = default;
  static PartialCharacter from_generators(const Field& field, int n, uint32_t domain,
                                          const std::vector<IntVector>& gens, const std::vector<Scalar>& values);
  static PartialCharacter trivial(const Field& field, int n, uint32_t domain);

  const Field& field() const { return field_; }
  int ambient() const { return n_; }
  uint32_t domain() const { return domain_; }
  const Lattice& lattice() const { return lattice_; }
  const std::vector<Scalar>& values() const { return values_; }

  // rho(m); throws std::invalid_argument if m is not in the lattice
  Scalar operator()(const IntVector& m) const;
  bool is_saturated() const { return lattice_.is_saturated(); }

  friend bool operator==(const PartialCharacter& a, const PartialCharacter& b);
  friend bool operator!=(const PartialCharacter& a, const PartialCharacter& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& names) const;
  // {"Z": [...], "basis": [[...]], "values": [...]}
  std::string to_json(const std::vector<std::string>& names) const;

 private:
  Field field_ = Field::rationals();
  int n_ = 0;
  uint32_t domain_ = 0;
  Lattice lattice_;
  std::vector<Scalar> values_;
};

// x^{m+} - c x^{m-}
Polynomial lattice_binomial(const Ring& ring, const IntVector& m, const Scalar& c);

// I+(rho): the lattice-basis binomials saturated by the product of the domain
// variables (the basis binomials alone generate a smaller ideal in general).
Ideal ideal_from_character(const PartialCharacter& rho, const RingPtr& ring);
// Basis binomials only, without saturation.
std::vector<Polynomial> character_basis_binomials(const PartialCharacter& rho, const Ring& ring);

// The unique rho with (I ∩ k[Z]) : (prod Z)^inf = I+(rho).
PartialCharacter character_from_cellular(const Ideal& i, uint32_t cell);

// All extensions of rho to a lattice `big` containing L_rho with finite
// index, ordered lexicographically by the root-of-unity choices.
std::vector<PartialCharacter> character_extensions(const PartialCharacter& rho, const Lattice& big);

struct CharacterSaturations {
  PartialCharacter rho_p;                   // unique extension to Sat_p(L)
  std::vector<PartialCharacter> extensions; // the g extensions to Sat(L)
  BigInt g;
};
CharacterSaturations character_saturations(const PartialCharacter& rho);

bool is_prime_character(const PartialCharacter& rho);

struct LaurentComponent {
  PartialCharacter primary;  // rho_j on Sat'_p(L)
  PartialCharacter prime;    // rho'_j on Sat(L)
};
struct LaurentDecomposition {
  PartialCharacter radical;  // on Sat_p(L)
  std::vector<LaurentComponent> components;
  BigInt multiplicity;  // [Sat_p(L) : L]
};
LaurentDecomposition laurent_primary_decomposition(const PartialCharacter& rho);

// Primality of a binomial ideal via P = (x_i : i not in Z) + I+(rho) with rho
// saturated.
struct PrimeForm {
  bool prime = false;
  uint32_t cell = 0;
  PartialCharacter rho;
  std::string reason;  // why it is not prime
};
PrimeForm binomial_prime_components(const Ideal& p);

}  // namespace binom
