#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "binom/decompose.hpp"

using namespace binom;

namespace {

RingPtr qq(std::vector<std::string> names) { return make_ring(Field::rationals(), names); }

std::vector<Ideal> ideals_of(const std::vector<BinomialPrime>& ps) {
  std::vector<Ideal> out;
  for (const auto& p : ps) out.push_back(p.ideal);
  return out;
}

// Same set of ideals, compared by reduced bases.
bool same_set(const std::vector<Ideal>& a, const std::vector<Ideal>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool hit = false;
    for (size_t k = 0; k < b.size() && !hit; ++k)
      if (!used[k] && b[k] == x) used[k] = hit = true;
    if (!hit) return false;
  }
  return true;
}

const char* kTwelveVarCell =
    "b*d^2-a*f^2, b*c*e-a*c*f, b*c*d-a*c*e, b^2*e-a*b*f, b^2*c, a*e^2-b*f^2, a*d^2-b*e^2, a*c*d-b*c*f, "
    "a*b*e-a^2*f, a*b*c, a*b^2-b^3, a^2*e-b^2*f, a^2*c, b^4, a^2*b-b^3, a^3-b^3, c^3*e-c^3*f, c^4, "
    "b^3*d-b^3*f, a*c^3-b*c^3, c*d^4-c*e^2*f^2";

const char* kRationalNormalCurve = "c^5 - b^2*d^3, a^5*d^2 - b^7, b^5 - a^3*c^2, a^2*d^5 - c^7";

}  // namespace

TEST_CASE("embedded component of x^3 - y^3, x^4 y^5 - x^5 y^4") {
  auto r = qq({"x", "y"});
  Ideal i = Ideal::parse(r, "x^3 - y^3, x^4*y^5 - x^5*y^4");
  PrimaryDecomposition d = primary_decomposition(i);
  REQUIRE(d.components.size() == 2);
  CHECK(d.intersection_verified);
  CHECK(d.primary_certified);
  CHECK(d.components[0].ideal == Ideal::parse(r, "x - y"));
  CHECK(!d.components[0].embedded);
  CHECK(d.components[1].prime.ideal == Ideal::parse(r, "x, y"));
  CHECK(d.components[1].embedded);
  PrimaryTest t = is_primary(d.components[1].ideal, 0);
  CHECK(t.primary);
  CHECK(t.radical == Ideal::parse(r, "x, y"));
  CHECK(intersect(d.components[0].ideal, d.components[1].ideal) == i);
  // both printed decompositions
  Ideal big = i.plus(parse_polynomial_list("x^9, y^9", *r));
  CHECK(intersect(Ideal::parse(r, "x - y"), big) == i);
  CHECK(intersect(Ideal::parse(r, "x - y"), Ideal::parse(r, "x^2 + x*y + y^2, x^4*y^5 - x^5*y^4, x^10, y^10")) == i);
  // the (x, y)-primary piece is its own hull
  CHECK(hull(big, 0) == big);
  // associated primes, one cellular component at a time
  auto cells = cellular_decomposition(i);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].cell == 0b11);
  CHECK(same_set(ideals_of(associated_primes(cells[0].ideal, cells[0].cell)), {Ideal::parse(r, "x - y")}));
  CHECK(same_set(ideals_of(associated_primes(cells[1].ideal, cells[1].cell)), {Ideal::parse(r, "x, y")}));
  CHECK(same_set(ideals_of(associated_primes(i)), {Ideal::parse(r, "x - y"), Ideal::parse(r, "x, y")}));
}

TEST_CASE("primary test: (ab - cd, a^2, b^2, c^2, ac, bc) and its extension by a") {
  auto r = qq({"a", "b", "c", "d"});
  Ideal i = Ideal::parse(r, "a*b - c*d, a^2, b^2, c^2, a*c, b*c");
  uint32_t z = cellular_cell(i);
  CHECK(z == 0b1000);
  PrimaryTest t = is_primary(i, z);
  CHECK(t.primary);
  CHECK(t.radical == Ideal::parse(r, "a, b, c"));
  Ideal j = i.plus(parse_polynomial_list("a", *r));
  CHECK_THROWS_AS(cellular_cell(j), NotCellular);  // d kills c without being nilpotent
  PrimaryTest u = is_primary(j);
  CHECK(!u.primary);
  REQUIRE(u.witnesses.size() == 2);
  CHECK(u.witnesses[0].ideal != u.witnesses[1].ideal);
  CHECK(primary_decomposition(j).components.size() == 2);
}

TEST_CASE("rational normal curve of degree 7: circuits, faces, cells") {
  auto r = qq({"a", "b", "c", "d"});
  Ideal i = Ideal::parse(r, kRationalNormalCurve);
  Lattice l = Lattice::from_generators(integer_kernel(IntMatrix::from_rows({{7, 5, 2, 0}, {0, 2, 5, 7}})));
  PartialCharacter rho = PartialCharacter::from_generators(Field::rationals(), 4, 0b1111, l.basis().row_list(),
                                                           {Scalar(1L), Scalar(1L)});
  Ideal c = circuit_ideal(rho, r);
  CHECK(c == i);
  CHECK(c.generators().size() == 4);
  Ideal p = prime_ideal(rho, r);
  CHECK(p == saturate_monomial(i.plus(parse_polynomial_list("a*d - b*c", *r)), cell_product(0b1111)));
  CHECK(radical(i) == p);

  CHECK(is_face(p, 0b1111));
  CHECK(is_face(p, 0b0001));
  CHECK(is_face(p, 0b1000));
  CHECK(is_face(p, 0));
  CHECK(!is_face(p, 0b0011));
  CHECK(!is_face(p, 0b0110));

  auto cells = cellular_decomposition(i);
  REQUIRE(cells.size() == 4);
  CHECK(cells[0].cell == 0b1111);
  CHECK(cells[1].cell == 0b0001);
  CHECK(cells[2].cell == 0b1000);
  CHECK(cells[3].cell == 0);
  CHECK(cells[0].ideal == p);
  CHECK(cells[1].ideal == Ideal::parse(r, "b^2*c^2 - a^2*d^2, b^5 - a^3*c^2, b^2*d^2, c^4, c^2*d^2, d^4"));
  CHECK(cells[2].ideal == Ideal::parse(r, "b^2*c^2 - a^2*d^2, c^5 - b^2*d^3, a^2*c^2, b^4, a^2*b^2, a^4"));
  // the last printed component uses other exponents; both choices intersect to I
  Ideal printed = i.plus(parse_polynomial_list("a^7, b^9, c^9, d^7", *r));
  CHECK(intersect({cells[0].ideal, cells[1].ideal, cells[2].ideal, printed}) == i);
  std::vector<Ideal> parts;
  for (const auto& x : cells) {
    parts.push_back(x.ideal);
    CHECK(is_primary(x.ideal, x.cell).primary);
  }
  CHECK(intersect(parts) == i);
  CHECK(is_primary(printed, 0).primary);
}

TEST_CASE("circuit ideal of a unimodular lattice is already the lattice ideal") {
  auto r = qq({"x", "y", "z", "w"});
  Lattice l = Lattice::from_generators(integer_kernel(IntMatrix::from_rows({{1, 1, 1, 1}})));
  std::vector<Scalar> ones(l.rank(), Scalar(1L));
  PartialCharacter rho = PartialCharacter::from_generators(Field::rationals(), 4, 0b1111, l.basis().row_list(), ones);
  Ideal c = circuit_ideal(rho, r);
  CHECK(c == ideal_from_character(rho, r));
  CHECK(radical(c) == c);
}

TEST_CASE("insufficient exponents and the two cellular components") {
  auto r = qq({"x1", "x2", "x3", "x4", "x5"});
  Ideal i = Ideal::parse(r, "x1*x4^2 - x2*x5^2, x1^3*x3^3 - x2^4*x4^2, x2*x4^8 - x3^3*x5^6");
  auto cells = cellular_decomposition(i);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].cell == 0b11111);
  CHECK(cells[1].cell == 0b00100);
  CHECK(intersect(cells[0].ideal, cells[1].ideal) == i);

  // d = (2,2,0,4,5): every colon (I : x_i^{d_i}) is saturated, yet the
  // components built from d do not intersect back to I.
  std::vector<int32_t> d = {2, 2, 0, 4, 5};
  for (int v = 0; v < 5; ++v) {
    Monomial x = Monomial::var(v);
    CHECK(colon_monomial(i, x.pow(d[v])) == saturate_monomial(i, x));
  }
  std::vector<Ideal> parts;
  for (uint32_t z = 0; z < 32; ++z) {
    if (!(z & 0b100)) continue;  // x3^0 = 1 makes these cells trivial
    Ideal c = cellular_localize(i, z, d);
    if (!c.is_unit()) parts.push_back(c);
  }
  Ideal meet = intersect(parts);
  CHECK(meet.contains(i));
  CHECK(meet != i);
}

TEST_CASE("minimal primes of the four-prime ideal") {
  auto r = qq({"a", "b", "x1", "x2", "x3", "x4"});
  Ideal i = Ideal::parse(r, "a*x1 - a*x3, a*x2 - a*x4, b*x1 - b*x4, b*x2 - b*x3");
  std::vector<Ideal> expect = {Ideal::parse(r, "a, b"), Ideal::parse(r, "a, x1 - x4, x2 - x3"),
                               Ideal::parse(r, "b, x1 - x3, x2 - x4"),
                               Ideal::parse(r, "x2 - x3, x3 - x4, x1 - x4")};
  CHECK(same_set(ideals_of(minimal_primes(i)), expect));
  CHECK(same_set(ideals_of(associated_primes(i)), expect));
  CHECK(radical(i) == i);
}

TEST_CASE("minimal primes of (ux - uy, uz - vx, vy - vz)") {
  auto r = qq({"x", "y", "z", "u", "v"});
  Ideal i = Ideal::parse(r, "u*x - u*y, u*z - v*x, v*y - v*z");
  std::vector<Ideal> expect = {Ideal::parse(r, "x, y, z"), Ideal::parse(r, "u, v"), Ideal::parse(r, "u, x, y - z"),
                               Ideal::parse(r, "v, z, x - y"), Ideal::parse(r, "x - y, y - z, u - v")};
  CHECK(same_set(ideals_of(minimal_primes(i)), expect));
}

TEST_CASE("permanental ideals") {
  auto r23 = qq({"x11", "x12", "x13", "x21", "x22", "x23"});
  Ideal p23 = Ideal::parse(r23, "x11*x22 + x12*x21, x11*x23 + x13*x21, x12*x23 + x13*x22");
  std::vector<Ideal> expect = {
      Ideal::parse(r23, "x11, x12, x13"), Ideal::parse(r23, "x21, x22, x23"),
      Ideal::parse(r23, "x11*x22 + x12*x21, x13, x23"), Ideal::parse(r23, "x11*x23 + x13*x21, x12, x22"),
      Ideal::parse(r23, "x12*x23 + x13*x22, x11, x21")};
  CHECK(same_set(ideals_of(minimal_primes(p23)), expect));
  CHECK(intersect(expect) == p23);
  CHECK(radical(p23) == p23);
}

TEST_CASE("Kollar's primary ideal with n = 3, d = (2,2,2)") {
  auto r = qq({"x0", "x1", "x2", "x3"});
  Ideal i = Ideal::parse(r, "x1^2, x1*x3 - x2^2, x2*x3 - x0^2");
  CHECK(i.contains(parse_polynomial("x0^8", *r)));
  CHECK(!i.contains(parse_polynomial("x0^7", *r)));
  uint32_t z = cellular_cell(i);
  CHECK(z == 0b1000);
  PrimaryTest t = is_primary(i, z);
  CHECK(t.primary);
  CHECK(t.radical == Ideal::parse(r, "x0, x1, x2"));
  CHECK(radical(i) == t.radical);
}

TEST_CASE("a cellular ideal over QQ(zeta_12) with seventeen components") {
  auto r = make_ring(Field::cyclotomic(12), {"a", "b", "c", "d", "e", "f"});
  Ideal i = Ideal::parse(r, kTwelveVarCell);
  CHECK(cellular_cell(i) == 0b111000);
  CHECK(radical(i) == Ideal::parse(r, "a, b, c"));
  PrimaryDecomposition dec = primary_decomposition(i);
  CHECK(dec.intersection_verified);
  CHECK(dec.primary_certified);
  // i = zeta_12^3, xi = zeta_12^2
  std::vector<std::string> printed = {
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
  for (const auto& s : printed) expect.push_back(Ideal::parse(r, s));
  for (const auto& c : dec.components) got.push_back(c.ideal);
  CHECK(got.size() == 17);
  CHECK(same_set(got, expect));
  CHECK(intersect(expect) == i);
  size_t embedded = std::count_if(dec.components.begin(), dec.components.end(),
                                  [](const PrimaryComponent& c) { return c.embedded; });
  CHECK(embedded == 16);
}

TEST_CASE("x^6 - 1 splits into six linear primes over QQ(zeta_6)") {
  auto r = make_ring(Field::cyclotomic(6), {"x"});
  Ideal i = Ideal::parse(r, "x^6 - 1");
  PrimaryDecomposition d = primary_decomposition(i);
  REQUIRE(d.components.size() == 6);
  for (const auto& c : d.components) {
    CHECK(c.ideal == c.prime.ideal);
    CHECK(c.ideal.gb().gens.size() == 1);
    CHECK(c.ideal.gb().gens[0].total_degree() == 1);
  }
  CHECK(minimal_primes(i).size() == 6);
  CHECK(d.intersection_verified);
}

TEST_CASE("Frobenius: radicals in characteristic p") {
  for (uint32_t p : {2u, 3u, 5u}) {
    auto r = make_ring(Field::finite(GaloisField::make_default(p, 1)), {"x"});
    Ideal i = Ideal(r, {parse_polynomial("x - 1", *r).pow(p)});
    CHECK(i == Ideal::parse(r, "x^" + std::to_string(p) + " - 1"));
    CHECK(radical(i) == Ideal::parse(r, "x - 1"));
    auto d = primary_decomposition(i);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].ideal == i);
  }
  auto r2 = make_ring(Field::finite(GaloisField::make_default(2, 1)), {"x"});
  Ideal j = Ideal::parse(r2, "x^2 - 1");
  CHECK(radical(j) == Ideal::parse(r2, "x - 1"));
  PartialCharacter rho = character_from_cellular(j, 0b1);
  CHECK(laurent_primary_decomposition(rho).multiplicity == 2);
}

TEST_CASE("hull") {
  auto r = qq({"x", "y"});
  CHECK(hull(Ideal::parse(r, "x^2, x*y")) == Ideal::parse(r, "x"));
  Ideal q = Ideal::parse(r, "x^2, y^3");
  CHECK(hull(q, 0) == q);
  CHECK(hull(q) == q);
  // several minimal primes in one cell: both components kept
  Ideal two = Ideal::parse(r, "x^2 - 1, y^2");
  CHECK(hull(two, 0b01) == two);
  // localizing at one of them isolates its component
  PartialCharacter plus = PartialCharacter::from_generators(Field::rationals(), 2, 0b01, {{1, 0}}, {Scalar(1L)});
  CHECK(localize_at(two, 0b01, plus) == Ideal::parse(r, "x - 1, y^2"));
}

TEST_CASE("unmixed decomposition of a cellular ideal") {
  auto r = qq({"x", "y"});
  Ideal i = Ideal::parse(r, "x^2, x*(y - 1)");
  REQUIRE(cellular_cell(i) == 0b10);
  // m = 1 gives Hull(I) = (x); m = x gives (I : x) ∩ k[y] = (y - 1).
  auto parts = unmixed_decomposition(i, 0b10);
  CHECK(same_set(parts, {Ideal::parse(r, "x"), Ideal::parse(r, "x^2, y - 1")}));
  Ideal q = Ideal::parse(r, "x^2, y^3");
  CHECK(same_set(unmixed_decomposition(q, 0), {q}));
  auto f3 = make_ring(Field::finite(GaloisField::make_default(3, 1)), {"x", "y"});
  CHECK_THROWS_AS(unmixed_decomposition(Ideal::parse(f3, "x^2, x*(y - 1)"), 0b10), UsageError);
}

TEST_CASE("non-primary ideal with a prime radical contained in a variable") {
  auto r = qq({"x1", "x2", "x3"});
  Ideal i = Ideal::parse(r, "x1^2, x1*(x2 - x3)");
  CHECK(intersect(Ideal::parse(r, "x1"), Ideal::parse(r, "x1^2, x2 - x3")) == i);
  uint32_t z = cellular_cell(i);
  CHECK(z == 0b110);
  CHECK(!is_primary(i, z).primary);
  CHECK(primary_decomposition(i).components.size() == 2);
}

TEST_CASE("primes are their own decompositions") {
  auto r = qq({"a", "b", "c", "d"});
  Ideal p = Ideal::parse(r, "a*d - b*c, a*c - b^2, b*d - c^2");
  CHECK(radical(p) == p);
  auto mp = minimal_primes(p);
  REQUIRE(mp.size() == 1);
  CHECK(mp[0].ideal == p);
  auto d = primary_decomposition(p);
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].ideal == p);
  CHECK(same_set(ideals_of(associated_primes(p, 0b1111)), {p}));
  auto cells = cellular_decomposition(p);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].cell == 0b1111);
}

TEST_CASE("minimality: removing any component loses the intersection") {
  auto r = qq({"x", "y", "z"});
  Ideal i = Ideal::parse(r, "x^2*y - x*y^2, x*z^2, y^3*z");
  auto d = primary_decomposition(i);
  CHECK(d.intersection_verified);
  CHECK(d.primary_certified);
  REQUIRE(d.components.size() >= 2);
  for (size_t k = 0; k < d.components.size(); ++k) {
    std::vector<Ideal> rest;
    for (size_t j = 0; j < d.components.size(); ++j)
      if (j != k) rest.push_back(d.components[j].ideal);
    CHECK(intersect(rest) != i);
  }
  for (size_t a = 0; a < d.components.size(); ++a)
    for (size_t b = a + 1; b < d.components.size(); ++b) CHECK(d.components[a].prime.ideal != d.components[b].prime.ideal);
}

TEST_CASE("JSON document") {
  auto r = qq({"x", "y"});
  Ideal i = Ideal::parse(r, "x^3 - y^3, x^4*y^5 - x^5*y^4");
  std::string js = decomposition_json(i, primary_decomposition(i));
  CHECK(js.find("\"certificates\"") != std::string::npos);
  CHECK(js.find("\"intersection_verified\": true") != std::string::npos);
  CHECK(js.find("\"associated_prime\"") != std::string::npos);
  CHECK(js == decomposition_json(i, primary_decomposition(i)));
}
