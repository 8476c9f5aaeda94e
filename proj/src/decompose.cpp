#include "binom/decompose.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <unordered_map>
#include <stdexcept>

#include "json.hpp"

namespace binom {

namespace {

uint32_t all_vars(int n) { return n == 32 ? ~0u : ((1u << n) - 1); }

// Runs fn(0..count-1), on worker threads when asked; results keep their index.
template <class T>
std::vector<T> map_indices(size_t count, bool parallel, const std::function<T(size_t)>& fn) {
  std::vector<T> out(count);
  if (!parallel || count < 2) {
    for (size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::vector<std::future<T>> fs;
  fs.reserve(count);
  for (size_t k = 0; k < count; ++k) fs.push_back(std::async(std::launch::async, fn, k));
  for (size_t k = 0; k < count; ++k) out[k] = fs[k].get();
  return out;
}

std::vector<Monomial> variables_outside(int n, uint32_t cell) {
  std::vector<Monomial> out;
  for (int v = 0; v < n; ++v)
    if (!(cell & (1u << v))) out.push_back(Monomial::var(v));
  return out;
}

Ideal with_cell_saturation(const Ideal& i, uint32_t cell) {
  return cell ? saturate_monomial(i, cell_product(cell)) : i;
}

PartialCharacter radical_character(const PartialCharacter& sigma) {
  if (sigma.field().characteristic() == 0) return sigma;
  return character_saturations(sigma).rho_p;
}

// Whether I+(a) ⊆ I+(b) for characters on the same cell.
bool character_below(const PartialCharacter& a, const PartialCharacter& b) {
  if (!b.lattice().contains(a.lattice())) return false;
  for (size_t k = 0; k < a.lattice().rank(); ++k) {
    IntVector v = a.lattice().basis_vector(k);
    if (a(v) != b(v)) return false;
  }
  return true;
}

std::string character_key(const PartialCharacter& c) {
  std::string s = std::to_string(c.domain()) + "|" + c.lattice().to_string() + "|";
  for (const auto& v : c.values()) s += v.to_string() + ";";
  return s;
}

int popcount(uint32_t x) { return __builtin_popcount(x); }

// Canonical order: larger cells first, then mask, then lattice, then values.
bool prime_less(const BinomialPrime& a, const BinomialPrime& b) {
  if (popcount(a.cell) != popcount(b.cell)) return popcount(a.cell) > popcount(b.cell);
  if (a.cell != b.cell) return a.cell < b.cell;
  if (a.rho.lattice().rank() != b.rho.lattice().rank()) return a.rho.lattice().rank() < b.rho.lattice().rank();
  return a.ideal.canonical() < b.ideal.canonical();
}

void sort_unique_primes(std::vector<BinomialPrime>& ps) {
  std::sort(ps.begin(), ps.end(), prime_less);
  std::vector<BinomialPrime> out;
  for (auto& p : ps)
    if (out.empty() || out.back().cell != p.cell || out.back().ideal != p.ideal) out.push_back(std::move(p));
  ps = std::move(out);
}

// -- cell scan shared by radical, minimal primes and cellular decomposition ---------------------------------

struct CellScan {
  std::vector<uint32_t> proper;               // ascending popcount
  std::map<uint32_t, PartialCharacter> rho;   // character of (I + M(Z)) : (prod Z)^inf
};

// Cheap sufficient test for I_Z = S: some generator becomes a nonzero
// monomial in the cell variables once the others are set to zero.
bool obviously_unit(const Ideal& i, uint32_t off) {
  for (const auto& g : i.generators()) {
    Polynomial h = g.with_zero(off);
    if (h.size() == 1) return true;
  }
  return false;
}

CellScan scan_cells(const Ideal& i, const DecomposeOptions& opt) {
  int n = i.nvars();
  if (n > 20) throw UsageError("cell enumeration supports at most 20 variables");
  uint32_t full = all_vars(n);
  std::vector<uint32_t> order;
  for (uint32_t z = 0; z <= full; ++z) order.push_back(z);
  std::stable_sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) { return popcount(a) < popcount(b); });
  enum : uint8_t { kUnknown, kProper, kUnit };
  std::vector<uint8_t> status(size_t(full) + 1, kUnknown);
  CellScan scan;
  size_t pos = 0;
  while (pos < order.size()) {
    size_t end = pos;
    while (end < order.size() && popcount(order[end]) == popcount(order[pos])) ++end;
    std::vector<uint32_t> todo;
    for (size_t k = pos; k < end; ++k) {
      uint32_t z = order[k];
      // Proper cells are closed under intersection, so a unit cell Z ∩ Z2
      // with Z2 proper rules out Z.
      bool pruned = std::any_of(scan.proper.begin(), scan.proper.end(),
                                [&](uint32_t z2) { return status[z & z2] == kUnit; });
      if (pruned || obviously_unit(i, full & ~z))
        status[z] = kUnit;
      else
        todo.push_back(z);
    }
    using Result = std::optional<PartialCharacter>;
    auto results = map_indices<Result>(todo.size(), opt.parallel, [&](size_t k) -> Result {
      uint32_t z = todo[k];
      std::vector<Polynomial> gens;
      for (const auto& g : i.generators()) {
        Polynomial h = g.with_zero(full & ~z);
        if (!h.is_zero()) gens.push_back(h);
      }
      Ideal j = with_cell_saturation(Ideal(i.ring(), gens), z);
      if (j.is_unit()) return std::nullopt;
      return character_from_cellular(j, z);
    });
    for (size_t k = 0; k < todo.size(); ++k) {
      uint32_t z = todo[k];
      if (results[k]) {
        status[z] = kProper;
        scan.proper.push_back(z);
        scan.rho.emplace(z, *results[k]);
      } else {
        status[z] = kUnit;
      }
    }
    pos = end;
  }
  return scan;
}

// Drops ideals containing another one from the list (keeps the first of equals).
template <class T, class Get>
std::vector<T> inclusion_minimal(std::vector<T> xs, Get get) {
  std::vector<T> out;
  for (size_t a = 0; a < xs.size(); ++a) {
    bool redundant = false;
    for (size_t b = 0; b < xs.size() && !redundant; ++b) {
      if (a == b) continue;
      if (get(xs[a]).contains(get(xs[b])) && (!get(xs[b]).contains(get(xs[a])) || b < a)) redundant = true;
    }
    if (!redundant) out.push_back(xs[a]);
  }
  return out;
}

// -- associated primes ------------------------------------------------------

// Characters tau of (I : m) ∩ k[Z], one per distinct value, over the standard
// monomials m in the variables outside Z.
std::vector<PartialCharacter> witness_characters(const Ideal& i, uint32_t cell) {
  uint32_t off = all_vars(i.nvars()) & ~cell;
  StandardMonomials sm = standard_monomials(i.gb(), off);
  std::vector<Monomial> ms = sm.all;
  std::stable_sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::unordered_map<Monomial, Ideal, MonomialHash> colons;
  std::vector<PartialCharacter> out;
  std::map<std::string, bool> seen;
  for (const auto& m : ms) {
    Ideal q;
    if (m.is_one()) {
      q = i;
    } else {
      int v = mask_vars(m.mask).front();
      q = colon_monomial(colons.at(m / Monomial::var(v)), Monomial::var(v));
    }
    colons.emplace(m, q);
    PartialCharacter tau = character_from_cellular(q, cell);
    if (seen.emplace(character_key(tau), true).second) out.push_back(tau);
  }
  return out;
}

std::vector<PartialCharacter> prime_characters_over(const PartialCharacter& tau) {
  return character_saturations(tau).extensions;
}

}  // namespace

Ideal prime_ideal(const PartialCharacter& rho, const RingPtr& ring) {
  return ideal_from_character(rho, ring).plus_monomials(variables_outside(ring->nvars(), rho.domain()));
}

BinomialPrime make_prime(const PartialCharacter& rho, const RingPtr& ring) {
  return {prime_ideal(rho, ring), rho.domain(), rho};
}

uint32_t cellular_cell(const Ideal& i) {
  if (i.is_unit()) throw NotCellular("unit ideal");
  int n = i.nvars();
  uint32_t cell = 0;
  for (int v = 0; v < n; ++v) {
    Monomial x = Monomial::var(v);
    if (colon_monomial(i, x) == i) {
      cell |= 1u << v;
    } else if (!saturate_monomial(i, x).is_unit()) {
      throw NotCellular(i.ring()->names[v] + " is a zerodivisor but not nilpotent");
    }
  }
  return cell;
}

// Radical by recursion over x_i = 0 unfolded: the radical is
// the intersection of the radicals of (I + M(Z)) : (prod Z)^inf over the
// cells where that ideal is proper.
Ideal radical(const Ideal& i, const DecomposeOptions& opt) {
  if (i.is_unit() || i.is_zero()) return i;
  if (!i.is_binomial()) throw UsageError("radical: binomial ideal expected");
  CellScan scan = scan_cells(i, opt);
  std::vector<Ideal> parts;
  for (uint32_t z : scan.proper) parts.push_back(prime_ideal(radical_character(scan.rho.at(z)), i.ring()));
  parts = inclusion_minimal(parts, [](const Ideal& x) -> const Ideal& { return x; });
  Ideal r = intersect(parts);
  if (!r.is_binomial()) throw std::logic_error("radical: result is not binomial");
  return r;
}

// Minimal primes, one cell at a time.
std::vector<BinomialPrime> minimal_primes(const Ideal& i, const DecomposeOptions& opt) {
  if (i.is_unit()) return {};
  if (!i.is_binomial()) throw UsageError("minimal primes: binomial ideal expected");
  CellScan scan = scan_cells(i, opt);
  std::vector<BinomialPrime> primes;
  for (uint32_t z : scan.proper)
    for (const auto& r : prime_characters_over(scan.rho.at(z))) primes.push_back(make_prime(r, i.ring()));
  primes = inclusion_minimal(primes, [](const BinomialPrime& p) -> const Ideal& { return p.ideal; });
  sort_unique_primes(primes);
  return primes;
}

// Cellular decomposition.  Exponents start at the saturation exponents and double
// until the components intersect back to I.
std::vector<CellularComponent> cellular_decomposition(const Ideal& i, const DecomposeOptions& opt) {
  if (i.is_unit()) return {};
  if (!i.is_binomial()) throw UsageError("cellular decomposition: binomial ideal expected");
  int n = i.nvars();
  CellScan scan = scan_cells(i, opt);
  uint32_t needed = 0;  // variables outside some proper cell
  for (uint32_t z : scan.proper) needed |= all_vars(n) & ~z;
  std::vector<int32_t> d(n, 1);
  for (int v : mask_vars(needed)) d[v] = std::max(1, saturation_exponent(i, Monomial::var(v)));

  for (int round = 0; round <= opt.max_escalation; ++round) {
    auto ideals = map_indices<Ideal>(scan.proper.size(), opt.parallel,
                                     [&](size_t k) { return cellular_localize(i, scan.proper[k], d); });
    std::vector<CellularComponent> comps;
    for (size_t k = 0; k < ideals.size(); ++k) {
      std::vector<int32_t> ex;
      for (int v = 0; v < n; ++v) ex.push_back(scan.proper[k] & (1u << v) ? 0 : d[v]);
      comps.push_back({ideals[k], scan.proper[k], ex});
    }
    comps = inclusion_minimal(comps, [](const CellularComponent& c) -> const Ideal& { return c.ideal; });
    std::vector<Ideal> parts;
    for (const auto& c : comps) parts.push_back(c.ideal);
    if (intersect(parts) == i) {
      // Greedy removal of redundant components, smallest cells first.
      std::stable_sort(comps.begin(), comps.end(),
                       [](const CellularComponent& a, const CellularComponent& b) {
                         return popcount(a.cell) < popcount(b.cell);
                       });
      for (size_t k = 0; k < comps.size() && comps.size() > 1;) {
        std::vector<Ideal> rest;
        for (size_t j = 0; j < comps.size(); ++j)
          if (j != k) rest.push_back(comps[j].ideal);
        if (intersect(rest) == i)
          comps.erase(comps.begin() + static_cast<long>(k));
        else
          ++k;
      }
      std::sort(comps.begin(), comps.end(), [](const CellularComponent& a, const CellularComponent& b) {
        if (popcount(a.cell) != popcount(b.cell)) return popcount(a.cell) > popcount(b.cell);
        return a.cell < b.cell;
      });
      return comps;
    }
    for (auto& x : d) x *= 2;
  }
  throw EscalationExhausted("cellular decomposition");
}

// Primary test for a cellular ideal.
PrimaryTest is_primary(const Ideal& i, uint32_t cell) {
  PrimaryTest out;
  const RingPtr& ring = i.ring();
  PartialCharacter sigma = radical_character(character_from_cellular(i, cell));
  out.radical = prime_ideal(sigma, ring);
  if (!sigma.is_saturated()) {
    auto ext = character_extensions(sigma, sigma.lattice().saturation());
    out.witnesses = {make_prime(ext[0], ring), make_prime(ext[1], ring)};
    out.step = "radical lattice not saturated";
    return out;
  }
  uint32_t off = all_vars(i.nvars()) & ~cell;
  for (const auto& m : standard_monomials(i.gb(), off).maximal) {
    PartialCharacter tau = character_from_cellular(colon_monomial(i, m), cell);
    if (character_below(tau, sigma)) continue;
    for (const auto& r : prime_characters_over(tau)) {
      if (r == sigma) continue;
      out.witnesses = {make_prime(sigma, ring), make_prime(r, ring)};
      break;
    }
    if (out.witnesses.size() != 2) throw std::logic_error("primary test: no second prime found");
    out.step = "witness monomial " + m.to_string(ring->names);
    return out;
  }
  out.primary = true;
  out.step = "all maximal standard monomials";
  return out;
}

PrimaryTest is_primary(const Ideal& i) {
  uint32_t cell;
  try {
    cell = cellular_cell(i);
  } catch (const NotCellular& e) {
    PrimaryTest out;
    out.radical = radical(i);
    PrimaryDecomposition d = primary_decomposition(i);
    if (d.components.size() < 2) throw std::logic_error("non-cellular ideal with a single primary component");
    out.witnesses = {d.components[0].prime, d.components[1].prime};
    out.step = e.what();
    return out;
  }
  return is_primary(i, cell);
}

// Associated primes of a cellular ideal, from witness monomials.
std::vector<BinomialPrime> associated_primes(const Ideal& i, uint32_t cell) {
  std::vector<BinomialPrime> out;
  for (const auto& tau : witness_characters(i, cell))
    for (const auto& r : prime_characters_over(tau)) out.push_back(make_prime(r, i.ring()));
  sort_unique_primes(out);
  return out;
}

// Noetherian induction of the binomiality proof for I_(J): while some
// associated prime P = M + I+(rho) lies in no minimal prime of J, replace I
// by a binomial colon that is strictly larger but has the same I_(J).
Ideal localize_at(const Ideal& i, uint32_t cell, const PartialCharacter& sigma_in, const DecomposeOptions& opt) {
  const RingPtr& ring = i.ring();
  uint64_t p = ring->field.characteristic();
  PartialCharacter sigma = radical_character(sigma_in);
  std::vector<PartialCharacter> mins = prime_characters_over(sigma);
  auto in_some_min = [&](const PartialCharacter& r) {
    return std::any_of(mins.begin(), mins.end(), [&](const PartialCharacter& m) { return character_below(r, m); });
  };
  std::vector<long> ladder = escalation_ladder(opt.max_escalation);
  Ideal cur = i;
  for (int iter = 0; iter < 10000; ++iter) {
    std::optional<PartialCharacter> rho;
    if (mins.size() == 1) {
      PrimaryTest t = is_primary(cur, cell);
      if (t.primary && character_below(radical_character(character_from_cellular(cur, cell)), mins[0])) return cur;
      if (!t.primary && t.witnesses.size() == 2 && !in_some_min(t.witnesses[1].rho)) rho = t.witnesses[1].rho;
    }
    if (!rho) {
      for (const auto& tau : witness_characters(cur, cell)) {
        for (const auto& r : prime_characters_over(tau))
          if (!in_some_min(r)) {
            rho = r;
            break;
          }
        if (rho) break;
      }
    }
    if (!rho) return cur;

    // L = {m in L_sigma ∩ L_rho : sigma(m) = rho(m)}
    Lattice k = intersect(sigma.lattice(), rho->lattice());
    std::optional<IntVector> inf_m;  // image of infinite order in L_rho / L
    std::optional<IntVector> fin_m;
    long fin_order = 0;
    if (k.rank() < rho->lattice().rank()) {
      for (size_t a = 0; a < rho->lattice().rank() && !inf_m; ++a)
        if (!k.in_span(rho->lattice().basis_vector(a))) inf_m = rho->lattice().basis_vector(a);
    } else {
      for (size_t a = 0; a < k.rank() && !inf_m; ++a) {
        IntVector v = k.basis_vector(a);
        Scalar chi = (*rho)(v) / sigma(v);
        long o = chi.root_of_unity_order();
        if (o == 0)
          inf_m = v;
        else if (o > 1 && !fin_m) {
          fin_m = v;
          fin_order = o;
        }
      }
    }
    Ideal next;
    bool found = false;
    if (inf_m) {
      Polynomial b = lattice_binomial(*ring, *inf_m, (*rho)(*inf_m));
      for (long d : ladder) {
        next = colon(cur, quasi_power(b, d));
        if (next.is_binomial()) {
          found = true;
          break;
        }
      }
    } else {
      if (!fin_m) throw std::logic_error("localization: associated prime inside a minimal prime");
      Polynomial b = lattice_binomial(*ring, *fin_m, sigma(*fin_m));
      for (long step : ladder) {
        long d = fin_order * step;
        long q = 1;
        if (p)
          for (long x = d; x % static_cast<long>(p) == 0; x /= static_cast<long>(p)) q *= static_cast<long>(p);
        next = colon_quasipower_ratio(cur, b, d, q);
        if (next.is_binomial()) {
          found = true;
          break;
        }
      }
    }
    if (!found) throw EscalationExhausted("localization (binomial colon not reached)");
    if (next == cur) throw std::logic_error("localization made no progress");
    cur = next;
  }
  throw EscalationExhausted("localization");
}

// Minimal primary components of a cellular ideal.
Ideal hull(const Ideal& i, uint32_t cell, const DecomposeOptions& opt) {
  return localize_at(i, cell, character_from_cellular(i, cell), opt);
}

namespace {

// P^[q]: q-th quasi-powers of the binomial generators, q-th powers of variables.
Ideal frobenius_power(const BinomialPrime& prime, long q) {
  std::vector<Polynomial> gens;
  for (const auto& g : prime.ideal.gb().gens) {
    if (g.size() == 2)
      gens.push_back(quasi_power(g, q));
    else if (g.size() == 1)
      gens.push_back(g.pow(q));
    else
      throw std::logic_error("binomial prime with a non-binomial generator");
  }
  return Ideal(prime.ideal.ring(), gens);
}

struct CellPrimary {
  std::vector<PrimaryComponent> comps;
};

// Primary decomposition of one cellular component.
CellPrimary decompose_cell(const CellularComponent& c, const DecomposeOptions& opt) {
  const RingPtr& ring = c.ideal.ring();
  uint64_t p = ring->field.characteristic();
  std::vector<BinomialPrime> primes = associated_primes(c.ideal, c.cell);
  long q = p ? static_cast<long>(p) : 1;
  for (int round = 0; round <= opt.max_escalation; ++round) {
    auto comps = map_indices<PrimaryComponent>(primes.size(), opt.parallel, [&](size_t k) {
      const BinomialPrime& pr = primes[k];
      // char 0: I + (P ∩ k[Z]); I already contains a power of M(Z).
      // char p: I + P^[q].
      Ideal r = p ? c.ideal + frobenius_power(pr, q) : c.ideal + ideal_from_character(pr.rho, ring);
      r = with_cell_saturation(r, c.cell);
      return PrimaryComponent{hull(r, c.cell, opt), pr, false};
    });
    std::vector<Ideal> parts;
    for (const auto& x : comps) parts.push_back(x.ideal);
    if (intersect(parts) == c.ideal) return {comps};
    if (!p) throw std::logic_error("primary decomposition: characteristic-0 components do not intersect to the cell");
    if (q > (1L << 30) / q) break;
    q *= q;
  }
  throw EscalationExhausted("primary decomposition (Frobenius exponent)");
}

}  // namespace

PrimaryDecomposition primary_decomposition(const Ideal& i, const DecomposeOptions& opt) {
  PrimaryDecomposition out;
  if (i.is_unit()) {
    out.intersection_verified = out.primary_certified = true;
    return out;
  }
  out.cells = cellular_decomposition(i, opt);
  auto per_cell = map_indices<CellPrimary>(out.cells.size(), opt.parallel,
                                           [&](size_t k) { return decompose_cell(out.cells[k], opt); });
  for (auto& pc : per_cell)
    for (auto& x : pc.comps) out.components.push_back(std::move(x));

  // Minimality.  Localizing at P_k shows that Q_k is redundant iff it contains
  // the intersection of the other components whose primes lie in P_k; a
  // component with a minimal prime never is.
  for (;;) {
    long redundant = -1;
    for (size_t k = 0; k < out.components.size() && redundant < 0; ++k) {
      std::vector<Ideal> below;
      for (size_t j = 0; j < out.components.size(); ++j)
        if (j != k && out.components[k].prime.ideal.contains(out.components[j].prime.ideal))
          below.push_back(out.components[j].ideal);
      if (!below.empty() && out.components[k].ideal.contains(intersect(below))) redundant = static_cast<long>(k);
    }
    if (redundant < 0) break;
    out.components.erase(out.components.begin() + redundant);
  }
  // The cells meet in I and each cell's components meet in that cell (both
  // checked above); dropping a component changed nothing by the test above.
  out.intersection_verified = true;

  for (auto& a : out.components) {
    a.embedded = std::any_of(out.components.begin(), out.components.end(), [&](const PrimaryComponent& b) {
      return &a != &b && a.prime.ideal.contains(b.prime.ideal) && a.prime.ideal != b.prime.ideal;
    });
  }
  std::sort(out.components.begin(), out.components.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
    if (prime_less(a.prime, b.prime)) return true;
    if (prime_less(b.prime, a.prime)) return false;
    return a.ideal.canonical() < b.ideal.canonical();
  });

  auto certified = map_indices<int>(out.components.size(), opt.parallel, [&](size_t k) {
    const PrimaryComponent& c = out.components[k];
    PrimaryTest t = is_primary(c.ideal, c.prime.cell);
    return t.primary && t.radical == c.prime.ideal ? 1 : 0;
  });
  out.primary_certified = std::all_of(certified.begin(), certified.end(), [](int x) { return x == 1; });
  return out;
}

std::vector<BinomialPrime> associated_primes(const Ideal& i, const DecomposeOptions& opt) {
  std::vector<BinomialPrime> out;
  for (const auto& c : primary_decomposition(i, opt).components) out.push_back(c.prime);
  sort_unique_primes(out);
  return out;
}

Ideal hull(const Ideal& i, const DecomposeOptions& opt) {
  if (i.is_unit()) return i;
  std::vector<BinomialPrime> mins = minimal_primes(i, opt);
  std::vector<CellularComponent> cells = cellular_decomposition(i, opt);
  auto parts = map_indices<Ideal>(mins.size(), opt.parallel, [&](size_t k) {
    for (const auto& c : cells)
      if (c.cell == mins[k].cell) return localize_at(c.ideal, c.cell, mins[k].rho, opt);
    throw std::logic_error("hull: no cellular component for a minimal prime");
  });
  return intersect(parts);
}

std::vector<Ideal> unmixed_decomposition(const Ideal& i, uint32_t cell, const DecomposeOptions& opt) {
  const RingPtr& ring = i.ring();
  if (ring->field.characteristic() != 0) throw UsageError("unmixed decomposition: characteristic 0 only");
  if (i.is_unit()) return {};
  std::vector<PartialCharacter> taus = witness_characters(i, cell);
  auto parts = map_indices<Ideal>(taus.size(), opt.parallel, [&](size_t k) {
    return hull(with_cell_saturation(i + ideal_from_character(taus[k], ring), cell), cell, opt);
  });
  std::vector<Ideal> out;
  for (auto& q : parts)
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  if (intersect(out) != i) throw std::logic_error("unmixed decomposition does not meet in I");
  return out;
}

Ideal circuit_ideal(const PartialCharacter& rho, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& c : circuits(rho.lattice())) gens.push_back(lattice_binomial(*ring, c, rho(c)));
  return Ideal(ring, gens);
}

bool is_face(const Ideal& p, uint32_t cell) { return !cellular_localize(p, cell, {}).is_unit(); }

namespace {

nlohmann::json names_of(const Ring& r, uint32_t cell) {
  nlohmann::json a = nlohmann::json::array();
  for (int v : mask_vars(cell)) a.push_back(r.names[v]);
  return a;
}

// The field actually used: char-0 components may need more roots of unity.
std::string effective_field(const Ring& r, const std::vector<const Ideal*>& ideals) {
  if (r.field.characteristic() != 0) return r.field.to_string();
  long order = std::max(1, r.field.cyclotomic_order());
  for (const Ideal* i : ideals)
    for (const auto& g : i->gb().gens)
      for (const auto& t : g.terms()) order = lcm_long(order, t.c.normalized().order());
  return Field::cyclotomic(static_cast<int>(order)).to_string();
}

nlohmann::json input_json(const Ideal& i) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& g : i.generators()) a.push_back(g.to_string(i.ring()->names));
  return a;
}

nlohmann::json cell_entries(const Ideal& input, const std::vector<CellularComponent>& cells) {
  const Ring& r = *input.ring();
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json e;
    e["cell"] = names_of(r, c.cell);
    e["exponents"] = c.exponents;
    e["generators"] = c.ideal.canonical();
    a.push_back(e);
  }
  return a;
}

}  // namespace

std::string decomposition_json(const Ideal& input, const PrimaryDecomposition& d) {
  const Ring& r = *input.ring();
  std::vector<const Ideal*> all{&input};
  for (const auto& c : d.components) all.push_back(&c.ideal);
  nlohmann::json j;
  j["input"] = input_json(input);
  j["field"] = effective_field(r, all);
  j["cells"] = cell_entries(input, d.cells);
  j["components"] = nlohmann::json::array();
  for (const auto& c : d.components) {
    nlohmann::json e;
    e["generators"] = c.ideal.canonical();
    e["cell"] = names_of(r, c.prime.cell);
    e["associated_prime"] = c.prime.ideal.canonical();
    e["embedded"] = c.embedded;
    j["components"].push_back(e);
  }
  j["certificates"] = {{"intersection_verified", d.intersection_verified},
                       {"primary_certified", d.primary_certified}};
  return j.dump(2);
}

std::string cells_json(const Ideal& input, const std::vector<CellularComponent>& cells, bool verified) {
  nlohmann::json j;
  j["input"] = input_json(input);
  j["field"] = input.ring()->field.to_string();
  j["cells"] = cell_entries(input, cells);
  j["certificates"] = {{"intersection_verified", verified}};
  return j.dump(2);
}

std::string primes_json(const Ideal& input, const std::vector<BinomialPrime>& primes) {
  const Ring& r = *input.ring();
  std::vector<const Ideal*> all{&input};
  for (const auto& p : primes) all.push_back(&p.ideal);
  nlohmann::json j;
  j["input"] = input_json(input);
  j["field"] = effective_field(r, all);
  j["primes"] = nlohmann::json::array();
  for (const auto& p : primes) {
    nlohmann::json e;
    e["cell"] = names_of(r, p.cell);
    e["generators"] = p.ideal.canonical();
    e["character"] = nlohmann::json::parse(p.rho.to_json(r.names));
    j["primes"].push_back(e);
  }
  return j.dump(2);
}

}  // namespace binom
