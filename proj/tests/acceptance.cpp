// Acceptance runner: one PASS/FAIL line per criterion, with wall time
// against the budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "binom/decompose.hpp"
#include "suites.hpp"

using namespace binom;

namespace {

RingPtr qq(std::vector<std::string> names) { return make_ring(Field::rationals(), names); }

bool same_set(std::vector<Ideal> a, std::vector<Ideal> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

std::vector<Ideal> ideals_of(const std::vector<BinomialPrime>& ps) {
  std::vector<Ideal> out;
  for (const auto& p : ps) out.push_back(p.ideal);
  return out;
}

struct Check {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

bool cubics(Check& c) {
  auto r = qq({"x", "y"});
  Ideal i = Ideal::parse(r, "x^3 - y^3, x^4*y^5 - x^5*y^4");
  PrimaryDecomposition d = primary_decomposition(i);
  c.require(d.components.size() == 2, "expected 2 components");
  if (!c.ok) return false;
  c.require(d.components[0].ideal == Ideal::parse(r, "x - y"), "first component is not (x - y)");
  PrimaryTest t = is_primary(d.components[1].ideal, d.components[1].prime.cell);
  c.require(t.primary && t.radical == Ideal::parse(r, "x, y"), "second component is not (x,y)-primary");
  c.require(intersect(d.components[0].ideal, d.components[1].ideal) == i, "intersection differs from I");
  c.require(d.intersection_verified, "intersection flag not set");
  return c.ok;
}

bool twelve(Check& c) {
  auto r = make_ring(Field::cyclotomic(12), {"a", "b", "c", "d", "e", "f"});
  Ideal i = Ideal::parse(r,
                         "b*d^2-a*f^2, b*c*e-a*c*f, b*c*d-a*c*e, b^2*e-a*b*f, b^2*c, a*e^2-b*f^2, a*d^2-b*e^2, "
                         "a*c*d-b*c*f, a*b*e-a^2*f, a*b*c, a*b^2-b^3, a^2*e-b^2*f, a^2*c, b^4, a^2*b-b^3, a^3-b^3, "
                         "c^3*e-c^3*f, c^4, b^3*d-b^3*f, a*c^3-b*c^3, c*d^4-c*e^2*f^2");
  // printed list with i -> zeta_12^3 and xi -> zeta_12^2 (so xi^2 = zeta_12^4)
  const char* printed[] = {
      "a, b, c",
      "a, b, c^3, d^2 - e*f",
      "a, b, c^3, d^2 + e*f",
      "a, b, c^4, e - f, d - z12^3*f",
      "a, b, c^4, e - f, d + z12^3*f",
      "a - b, b^4, c^4, b^2*c, d - f, e - f",
      "a - b, b^2, c^3, b*c, d + f, e + f",
      "a - b, b^3, c^4, b*c, d + f, e - f",
      "a - b, b^2, c^3, b*c, d - f, e + f",
      "a - z12^4*b, b^2, c^3, b*c, d + z12^2*f, e + z12^4*f",
      "a - z12^4*b, b^3, c^3, b*c, d - z12^2*f, e - z12^4*f",
      "a - z12^4*b, b^3, c^3, b^2*c, d + z12^2*f, e - z12^4*f",
      "a - z12^4*b, b^2, c^3, b*c, d - z12^2*f, e + z12^4*f",
      "a + z12^2*b, b^2, c^3, b*c, d + z12^4*f, e - z12^2*f",
      "a + z12^2*b, b^3, c^3, b^2*c, d - z12^4*f, e + z12^2*f",
      "a + z12^2*b, b^3, c^3, b*c, d + z12^4*f, e + z12^2*f",
      "a + z12^2*b, b^2, c^3, b*c, d - z12^4*f, e - z12^2*f",
  };
  std::vector<Ideal> expect, got;
  for (const char* s : printed) expect.push_back(Ideal::parse(r, s));
  PrimaryDecomposition d = primary_decomposition(i);
  for (const auto& x : d.components) got.push_back(x.ideal);
  c.require(got.size() == 17, "expected 17 components, got " + std::to_string(got.size()));
  c.require(same_set(got, expect), "components differ from the printed list");
  c.require(intersect(got) == i, "intersection differs from I");
  c.require(d.intersection_verified && d.primary_certified, "certificates not set");
  return c.ok;
}

bool normal_curve(Check& c) {
  auto r = qq({"a", "b", "c", "d"});
  Ideal i = Ideal::parse(r, "c^5 - b^2*d^3, a^5*d^2 - b^7, b^5 - a^3*c^2, a^2*d^5 - c^7");
  Lattice l = Lattice::from_generators(integer_kernel(IntMatrix::from_rows({{7, 5, 2, 0}, {0, 2, 5, 7}})));
  PartialCharacter rho = PartialCharacter::from_generators(Field::rationals(), 4, 0b1111, l.basis().row_list(),
                                                           {Scalar(1L), Scalar(1L)});
  c.require(circuit_ideal(rho, r) == i, "input is not the circuit ideal");
  Ideal p = saturate_monomial(i.plus(parse_polynomial_list("a*d - b*c", *r)), cell_product(0b1111));
  c.require(p == prime_ideal(rho, r), "C + (ad - bc) saturated is not the lattice ideal");
  auto cells = cellular_decomposition(i);
  c.require(cells.size() == 4, "expected 4 cellular components");
  if (!c.ok) return false;
  c.require(cells[0].ideal == p, "top component is not P");
  c.require(cells[1].ideal == Ideal::parse(r, "b^2*c^2 - a^2*d^2, b^5 - a^3*c^2, b^2*d^2, c^4, c^2*d^2, d^4"),
            "{a} component differs");
  c.require(cells[2].ideal == Ideal::parse(r, "b^2*c^2 - a^2*d^2, c^5 - b^2*d^3, a^2*c^2, b^4, a^2*b^2, a^4"),
            "{d} component differs");
  // the empty-cell component depends on the exponents chosen; the printed one
  // must be primary and complete the decomposition as well
  Ideal printed = i.plus(parse_polynomial_list("a^7, b^9, c^9, d^7", *r));
  c.require(cells[3].cell == 0 && is_primary(printed, 0).primary, "printed empty-cell component not primary");
  c.require(intersect({cells[0].ideal, cells[1].ideal, cells[2].ideal, printed}) == i,
            "printed components do not meet in I");
  for (const auto& x : cells) c.require(is_primary(x.ideal, x.cell).primary, "a cellular component is not primary");
  c.require(radical(i) == p, "radical is not P");
  return c.ok;
}

bool four_primes(Check& c) {
  auto r = qq({"a", "b", "x1", "x2", "x3", "x4"});
  Ideal i = Ideal::parse(r, "a*x1 - a*x3, a*x2 - a*x4, b*x1 - b*x4, b*x2 - b*x3");
  std::vector<Ideal> expect = {Ideal::parse(r, "a, b"), Ideal::parse(r, "a, x1 - x4, x2 - x3"),
                               Ideal::parse(r, "b, x1 - x3, x2 - x4"), Ideal::parse(r, "x2 - x3, x3 - x4, x1 - x4")};
  c.require(same_set(ideals_of(minimal_primes(i)), expect), "minimal primes differ");
  auto colon_gens = parse_polynomial_list("x1 + x2 + x3 + x4, a*(x2 - x4), (x2 - x3)*(x2 - x4), b*(x2 - x3)", *r);
  c.require(!is_binomial_ideal(colon_gens, r->order), "printed colon generators form a binomial ideal");
  return c.ok;
}

bool permanents(Check& c) {
  std::vector<std::string> names;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) names.push_back("x" + std::to_string(a) + std::to_string(b));
  auto r = qq(names);
  std::vector<Polynomial> gens;
  auto var = [&](int a, int b) { return variable(*r, (a - 1) * 3 + (b - 1)); };
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b)
      for (int x = 1; x <= 3; ++x)
        for (int y = x + 1; y <= 3; ++y) gens.push_back(var(a, x) * var(b, y) + var(a, y) * var(b, x));
  Ideal p33(r, gens);
  c.require(p33.contains(parse_polynomial("x11^2*x22*x33", *r)), "x11^2 x22 x33 not in P33");
  c.require(!p33.contains(parse_polynomial("x11*x22*x33", *r)), "x11 x22 x33 in P33");
  c.require(radical(p33).contains(parse_polynomial("x11*x22*x33", *r)), "x11 x22 x33 not in the radical");

  auto r23 = qq({"x11", "x12", "x13", "x21", "x22", "x23"});
  Ideal p23 = Ideal::parse(r23, "x11*x22 + x12*x21, x11*x23 + x13*x21, x12*x23 + x13*x22");
  std::vector<Ideal> expect = {
      Ideal::parse(r23, "x11, x12, x13"), Ideal::parse(r23, "x21, x22, x23"),
      Ideal::parse(r23, "x11*x22 + x12*x21, x13, x23"), Ideal::parse(r23, "x11*x23 + x13*x21, x12, x22"),
      Ideal::parse(r23, "x12*x23 + x13*x22, x11, x21")};
  c.require(same_set(ideals_of(minimal_primes(p23)), expect), "P23 primes differ");
  c.require(intersect(expect) == p23, "P23 is not the intersection of its primes");
  return c.ok;
}

bool quasi_powers(Check& c) {
  auto r = qq({"x1", "x2", "x3", "y"});
  Ideal i = Ideal::parse(r, "x1 - y*x2, x2 - y*x3, x3 - y*x1");
  auto b = parse_polynomial("y - 1", *r);
  c.require(colon(i, quasi_power(b, 3)) == Ideal::parse(r, "x1, x2, x3"), "(I : (y-1)^[3]) differs");
  c.require(colon_quasipower_ratio(i, b, 3, 1) == Ideal::parse(r, "x1 - x3, x2 - x3, x3*y - x3"),
            "quasi-power ratio colon differs");
  return c.ok;
}

bool kollar(Check& c) {
  auto r = qq({"x0", "x1", "x2", "x3"});
  Ideal i = Ideal::parse(r, "x1^2, x1*x3 - x2^2, x2*x3 - x0^2");
  c.require(is_primary(i).primary, "not primary");
  c.require(i.contains(parse_polynomial("x0^8", *r)), "x0^8 not in I");
  c.require(!i.contains(parse_polynomial("x0^7", *r)), "x0^7 in I");
  return c.ok;
}

bool roots_of_unity(Check& c) {
  auto r = make_ring(Field::cyclotomic(6), {"x"});
  Ideal i = Ideal::parse(r, "x^6 - 1");
  PrimaryDecomposition d = primary_decomposition(i);
  c.require(d.components.size() == 6, "expected six components");
  std::vector<Ideal> primes;
  for (const auto& x : d.components) {
    c.require(x.ideal == x.prime.ideal && x.ideal.gb().gens.size() == 1 && x.ideal.gb().gens[0].total_degree() == 1,
              "a component is not a linear prime");
    primes.push_back(x.prime.ideal);
  }
  for (size_t a = 0; a < primes.size(); ++a)
    for (size_t b = 0; b < a; ++b) c.require(primes[a] != primes[b], "repeated prime");

  auto f2 = Field::finite(GaloisField::make(2, 1, {0, 1}));
  auto r2 = make_ring(f2, {"x"});
  Ideal j = Ideal::parse(r2, "x^2 - 1");
  c.require(radical(j) == Ideal::parse(r2, "x - 1"), "radical over F2 is not (x - 1)");
  PartialCharacter rho = character_from_cellular(j, 0b1);
  c.require(laurent_primary_decomposition(rho).multiplicity == 2, "multiplicity over F2 is not 2");
  return c.ok;
}

bool properties(Check& c) {
  for (const auto& s : suites::property_suites(20261015u)) {
    std::printf("      %-60s %4d instances, %d failures\n", s.name.c_str(), s.instances, s.failures);
    c.require(s.instances >= 200, s.name + ": too few instances");
    c.require(s.ok(), s.name + ": " + s.first_failure);
  }
  return c.ok;
}

bool oracle(Check& c) {
  auto s = suites::f5_oracle();
  std::printf("      %d distinct ideals, %d failures\n", s.instances, s.failures);
  c.require(s.ok(), s.first_failure);
  return c.ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double budget_s;
    std::function<bool(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1  cubics x^3 - y^3, x^4 y^5 - x^5 y^4: two components", 5, cubics},
      {"2  21-generator ideal over QQ(zeta_12): 17 printed components", 120, twelve},
      {"3  circuit ideal of the degree-7 normal curve: cells, primary, radical", 30, normal_curve},
      {"4  four minimal primes; printed colon set is not binomial", 5, four_primes},
      {"5  permanental ideals P33 membership and P23 primes", 30, permanents},
      {"6  colons by quasi-powers of y - 1", 2, quasi_powers},
      {"7  Kollar ideal n = 3, d = (2,2,2)", 5, kollar},
      {"8  x^6 - 1 over QQ(zeta_6); x^2 - 1 over F2", 2, roots_of_unity},
      {"9  property suites", 120, properties},
      {"10 F5 brute-force point oracle", 60, oracle},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = crit.run(c);
    } catch (const std::exception& e) {
      c.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= crit.budget_s;
    if (ok && !in_time) c.note = "over the time budget";
    bool pass = ok && in_time;
    failed += !pass;
    std::printf("%s  %-72s %8.3f s / %g s%s%s\n", pass ? "PASS" : "FAIL", crit.label, secs, crit.budget_s,
                c.note.empty() ? "" : "  -- ", c.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
