#include "binom/characters.hpp"

#include <stdexcept>

#include "json.hpp"

namespace binom {

namespace {

// c^e for an integer exponent of any size; large exponents are only
// meaningful for roots of unity.
Scalar spow(const Scalar& c, const BigInt& e) {
  if (e.fits_slong_p()) return c.pow(e.get_si());
  long ord = c.root_of_unity_order();
  if (ord <= 0) throw MathError("exponent too large in character evaluation");
  BigInt r = e % ord;
  if (r < 0) r += ord;
  return c.pow(r.get_si());
}

Scalar canonical_value(const Scalar& c) { return c.kind() == Scalar::Kind::Cyclotomic ? c.normalized() : c; }

}  // namespace

PartialCharacter PartialCharacter::from_generators(const Field& field, int n, uint32_t domain,
                                                   const std::vector<IntVector>& gens,
                                                   const std::vector<Scalar>& values) {
  if (gens.size() != values.size()) throw std::invalid_argument("one value per lattice generator expected");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("lattice generator of the wrong length");
    for (int i = 0; i < n; ++i)
      if (g[i] != 0 && !(domain & (1u << i))) throw std::invalid_argument("lattice generator outside the domain");
  }
  for (const auto& v : values)
    if (v.is_zero()) throw std::invalid_argument("character values must be nonzero");
  PartialCharacter rho;
  rho.field_ = field;
  rho.n_ = n;
  rho.domain_ = domain;
  if (gens.empty()) {
    rho.lattice_ = Lattice(n);
    return rho;
  }
  IntMatrix g = IntMatrix::from_rows(gens, n);
  IntMatrix t;
  IntMatrix h = hermite_normal_form(g, &t);
  rho.lattice_ = Lattice::from_generators(g);
  for (size_t k = 0; k < t.rows(); ++k) {
    Scalar v = field.one();
    for (size_t j = 0; j < gens.size(); ++j)
      if (t(k, j) != 0) v *= spow(values[j], t(k, j));
    if (k < h.rows())
      rho.values_.push_back(canonical_value(v));
    else if (!v.is_one())
      throw InconsistentCharacter();  // a relation among the generators
  }
  return rho;
}

PartialCharacter PartialCharacter::trivial(const Field& field, int n, uint32_t domain) {
  return from_generators(field, n, domain, {}, {});
}

Scalar PartialCharacter::operator()(const IntVector& m) const {
  auto c = lattice_.coordinates(m);
  if (!c) throw std::invalid_argument("vector outside the character's lattice");
  Scalar v = field_.one();
  for (size_t i = 0; i < c->size(); ++i)
    if ((*c)[i] != 0) v *= spow(values_[i], (*c)[i]);
  return canonical_value(v);
}

bool operator==(const PartialCharacter& a, const PartialCharacter& b) {
  return a.n_ == b.n_ && a.domain_ == b.domain_ && a.lattice_ == b.lattice_ && a.values_ == b.values_;
}

std::string PartialCharacter::to_string(const std::vector<std::string>& names) const {
  std::string z;
  for (int v : mask_vars(domain_)) z += (z.empty() ? "" : ",") + names[v];
  std::string vals;
  for (const auto& v : values_) vals += (vals.empty() ? "" : ", ") + v.to_string();
  return "character on {" + z + "}: basis " + lattice_.to_string() + ", values [" + vals + "]";
}

std::string PartialCharacter::to_json(const std::vector<std::string>& names) const {
  nlohmann::json j;
  j["Z"] = nlohmann::json::array();
  for (int v : mask_vars(domain_)) j["Z"].push_back(names[v]);
  j["basis"] = nlohmann::json::parse(matrix_to_json(lattice_.basis()));
  j["values"] = nlohmann::json::array();
  for (const auto& v : values_) j["values"].push_back(v.to_string());
  return j.dump();
}

Polynomial lattice_binomial(const Ring& ring, const IntVector& m, const Scalar& c) {
  Monomial plus, minus;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) plus.set(static_cast<int>(i), static_cast<int32_t>(m[i].get_si()));
    if (m[i] < 0) minus.set(static_cast<int>(i), static_cast<int32_t>(-m[i].get_si()));
  }
  return Polynomial::binomial(ring.order, ring.field.one(), plus, -c, minus);
}

std::vector<Polynomial> character_basis_binomials(const PartialCharacter& rho, const Ring& ring) {
  std::vector<Polynomial> out;
  for (size_t k = 0; k < rho.lattice().rank(); ++k)
    out.push_back(lattice_binomial(ring, rho.lattice().basis_vector(k), rho.values()[k]));
  return out;
}

Ideal ideal_from_character(const PartialCharacter& rho, const RingPtr& ring) {
  if (rho.ambient() != ring->nvars()) throw std::invalid_argument("character and ring dimensions differ");
  Ideal basis(ring, character_basis_binomials(rho, *ring));
  if (rho.lattice().rank() <= 1) return basis;  // a single binomial x^{m+} - c x^{m-} is already saturated
  return saturate_monomial(basis, cell_product(rho.domain()));
}

PartialCharacter character_from_cellular(const Ideal& i, uint32_t cell) {
  Ideal j = saturate_monomial(eliminate(i, cell), cell_product(cell));
  if (j.is_unit()) throw MonomialInIdeal();
  int n = i.nvars();
  std::vector<IntVector> gens;
  std::vector<Scalar> vals;
  for (const auto& p : j.gb().gens) {
    if (p.size() != 2) throw MathError("cellular ideal expected: non-binomial elimination ideal");
    IntVector v(n);
    const Monomial& a = p.terms()[0].m;
    const Monomial& b = p.terms()[1].m;
    for (int k = 0; k < n; ++k) v[k] = a[k] - b[k];
    gens.push_back(v);
    vals.push_back(-p.terms()[1].c / p.terms()[0].c);
  }
  return PartialCharacter::from_generators(i.ring()->field, n, cell, gens, vals);
}

std::vector<PartialCharacter> character_extensions(const PartialCharacter& rho, const Lattice& big) {
  if (!big.contains(rho.lattice()) || big.rank() != rho.lattice().rank())
    throw std::invalid_argument("extension lattice must contain L with finite index");
  int n = rho.ambient();
  if (big.rank() == 0) return {rho};
  AdaptedBasis ab = adapted_basis(big, rho.lattice());
  std::vector<std::vector<Scalar>> choices;
  for (size_t i = 0; i < ab.w.size(); ++i) {
    IntVector fw = ab.w[i];
    for (auto& x : fw) x *= ab.f[i];
    Scalar c = rho(fw);
    if (!ab.f[i].fits_slong_p()) throw MathError("lattice index too large");
    choices.push_back(dth_root(rho.field(), c, ab.f[i].get_si()));
  }
  std::vector<PartialCharacter> out;
  std::vector<size_t> idx(choices.size(), 0);
  for (;;) {
    std::vector<Scalar> vals;
    for (size_t i = 0; i < choices.size(); ++i) vals.push_back(choices[i][idx[i]]);
    out.push_back(PartialCharacter::from_generators(rho.field(), n, rho.domain(), ab.w, vals));
    size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

CharacterSaturations character_saturations(const PartialCharacter& rho) {
  uint64_t p = rho.field().characteristic();
  PSaturations ps = p_saturations(rho.lattice(), p);
  CharacterSaturations out;
  auto up = character_extensions(rho, ps.sat_p);
  if (up.size() != 1) throw std::logic_error("extension to Sat_p is not unique");
  out.rho_p = up[0];
  out.extensions = character_extensions(rho, rho.lattice().saturation());
  out.g = ps.g;
  return out;
}

bool is_prime_character(const PartialCharacter& rho) { return rho.is_saturated(); }

LaurentDecomposition laurent_primary_decomposition(const PartialCharacter& rho) {
  uint64_t p = rho.field().characteristic();
  PSaturations ps = p_saturations(rho.lattice(), p);
  LaurentDecomposition out;
  out.radical = character_extensions(rho, ps.sat_p).at(0);
  out.multiplicity = *index_in(ps.sat_p, rho.lattice());
  Lattice sat = rho.lattice().saturation();
  for (const auto& rj : character_extensions(rho, ps.sat_p_prime)) {
    auto primes = character_extensions(rj, sat);
    if (primes.size() != 1) throw std::logic_error("extension from Sat'_p to Sat is not unique");
    out.components.push_back({rj, primes[0]});
  }
  return out;
}

PrimeForm binomial_prime_components(const Ideal& p) {
  PrimeForm out;
  int n = p.nvars();
  if (p.is_unit()) {
    out.reason = "unit ideal";
    return out;
  }
  if (!p.is_binomial()) {
    out.reason = "not a binomial ideal";
    return out;
  }
  uint32_t vars = 0;
  for (int v = 0; v < n; ++v)
    if (p.contains(variable(*p.ring(), v))) vars |= 1u << v;
  uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  out.cell = all & ~vars;
  Ideal k = eliminate(p, out.cell);
  if (saturate_monomial(k, cell_product(out.cell)) != k) {
    out.reason = "a cell variable is a zerodivisor";
    return out;
  }
  try {
    out.rho = character_from_cellular(k, out.cell);
  } catch (const MonomialInIdeal&) {
    out.reason = "contains a monomial in the cell variables";
    return out;
  }
  std::vector<Monomial> ms;
  for (int v : mask_vars(vars)) ms.push_back(Monomial::var(v));
  if (k.plus_monomials(ms) != p) {
    out.reason = "not of the form (variables) + (binomials in the remaining variables)";
    return out;
  }
  if (!out.rho.is_saturated()) {
    out.reason = "lattice is not saturated";
    return out;
  }
  out.prime = true;
  return out;
}

}  // namespace binom
