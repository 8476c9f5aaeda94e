#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "binom/intlattice.hpp"

using namespace binom;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix random_matrix(std::mt19937& rng, size_t r, size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Membership by brute force: v in L iff v is an integer combination of the
// generators with small coefficients (adequate for the tiny examples used).
bool brute_in_span(const std::vector<IntVector>& gens, const IntVector& v, int bound) {
  size_t r = gens.size();
  std::vector<int> c(r, -bound);
  for (;;) {
    IntVector s(v.size());
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < v.size(); ++j) s[j] += c[i] * gens[i][j];
    if (s == v) return true;
    size_t k = 0;
    while (k < r && c[k] == bound) c[k++] = -bound;
    if (k == r) return false;
    ++c[k];
  }
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(s.d == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  auto t = smith_normal_form(IntMatrix::from_rows({{4, 6}}));
  CHECK(t.d == IntMatrix::from_rows({{2, 0}}));
  CHECK(s.u * IntMatrix::from_rows({{2, 0}, {0, 3}}) * s.v == s.d);
}

TEST_CASE("Smith normal form invariants on random matrices") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, 6);
    SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.v * s.v_inverse == IntMatrix::identity(c));
    auto inv = s.invariants();
    for (size_t i = 0; i < s.d.rows(); ++i)
      for (size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
    for (const auto& d : inv) CHECK(d > 0);
  }
}

TEST_CASE("Hermite normal form is canonical") {
  std::mt19937 rng(5);
  for (int it = 0; it < 200; ++it) {
    IntMatrix a = random_matrix(rng, 3, 4, 5);
    // mixing rows by a unimodular matrix leaves the form unchanged
    IntMatrix u = IntMatrix::identity(3);
    u.add_row_multiple(0, 1, static_cast<long>(rng() % 5) - 2);
    u.add_row_multiple(2, 0, static_cast<long>(rng() % 5) - 2);
    u.swap_rows(1, 2);
    CHECK(hermite_normal_form(a) == hermite_normal_form(u * a));
    IntMatrix t;
    IntMatrix h = hermite_normal_form(a, &t);
    IntMatrix th = t * a;
    for (size_t i = 0; i < h.rows(); ++i) CHECK(th.row(i) == h.row(i));
  }
}

TEST_CASE("saturation") {
  Lattice l = Lattice::from_generators(IntMatrix::from_rows({{2, -2}}));
  CHECK(l.saturation() == Lattice::from_generators(IntMatrix::from_rows({{1, -1}})));
  CHECK(quotient_order(l) == 2);
  CHECK(!l.is_saturated());
  CHECK(l.saturation().is_saturated());
}

TEST_CASE("saturation matches brute force") {
  std::mt19937 rng(3);
  for (int it = 0; it < 200; ++it) {
    IntMatrix a = random_matrix(rng, 2, 3, 3);
    Lattice l = Lattice::from_generators(a);
    Lattice s = l.saturation();
    auto q = quotient_order(l);
    CHECK(s.contains(l));
    // v in Sat(L) iff q*v in L: checked on a box of small vectors
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z) {
          IntVector v = iv({x, y, z}), qv = iv({x, y, z});
          for (auto& e : qv) e *= q;
          CHECK(s.contains(v) == l.contains(qv));
        }
  }
}

TEST_CASE("membership matches brute force") {
  std::vector<IntVector> gens = {iv({2, 1, 0}), iv({0, 3, 3})};
  Lattice l = Lattice::from_generators(gens, 3);
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y)
      for (int z = -4; z <= 4; ++z) {
        IntVector v = iv({x, y, z});
        CHECK(l.contains(v) == brute_in_span(gens, v, 6));
      }
}

TEST_CASE("p-saturations") {
  Lattice l = Lattice::from_generators(IntMatrix::from_rows({{6}}));
  auto ps = p_saturations(l, 3);
  CHECK(ps.sat_p == Lattice::from_generators(IntMatrix::from_rows({{2}})));
  CHECK(ps.sat_p_prime == Lattice::from_generators(IntMatrix::from_rows({{3}})));
  CHECK(ps.g == 2);
  auto p0 = p_saturations(l, 0);
  CHECK(p0.sat_p == l);
  CHECK(p0.sat_p_prime == l.saturation());
  CHECK(p0.g == 6);
  std::mt19937 rng(9);
  for (int it = 0; it < 200; ++it) {
    Lattice m = Lattice::from_generators(random_matrix(rng, 2, 3, 6));
    for (uint64_t p : {2, 3, 5}) {
      auto s = p_saturations(m, p);
      auto ip = index_in(s.sat_p, m), iq = index_in(s.sat_p_prime, m);
      REQUIRE(ip);
      REQUIRE(iq);
      CHECK(*iq == s.g);
      CHECK(*ip * *iq == quotient_order(m));
      BigInt x = *ip;
      while (x % p == 0) x /= p;
      CHECK(x == 1);
      CHECK(gcd(*iq, BigInt(static_cast<unsigned long>(p))) == 1);
    }
  }
}

TEST_CASE("circuits") {
  Lattice k = Lattice::from_generators(integer_kernel(IntMatrix::from_rows({{1, 1, 1}})));
  auto c = circuits(k);
  std::vector<IntVector> expect = {iv({0, 1, -1}), iv({1, -1, 0}), iv({1, 0, -1})};
  CHECK(c == expect);
  // ker [[7,5,2,0],[0,2,5,7]]: one circuit per 3-subset of the columns
  Lattice t = Lattice::from_generators(integer_kernel(IntMatrix::from_rows({{7, 5, 2, 0}, {0, 2, 5, 7}})));
  auto ct = circuits(t);
  CHECK(ct.size() == 4);
  for (const auto& v : ct) CHECK(t.contains(v));
  CHECK(std::find(ct.begin(), ct.end(), iv({0, 2, -5, 3})) != ct.end());
}

TEST_CASE("intersection and JSON") {
  Lattice a = Lattice::from_generators(IntMatrix::from_rows({{2, 0}, {0, 1}}));
  Lattice b = Lattice::from_generators(IntMatrix::from_rows({{3, 0}, {0, 2}}));
  CHECK(intersect(a, b) == Lattice::from_generators(IntMatrix::from_rows({{6, 0}, {0, 2}})));
  IntMatrix m = IntMatrix::from_rows({{1, -2}, {30, 4}});
  CHECK(matrix_to_json(m) == "[[\"1\",\"-2\"],[\"30\",\"4\"]]");
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}
