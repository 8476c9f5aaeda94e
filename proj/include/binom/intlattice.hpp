#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binom/exact_arith.hpp"

namespace binom {

using IntVector = std::vector<BigInt>;

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  BigInt& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  IntVector row(size_t i) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transposed() const;

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  // row i += k * row j
  void add_row_multiple(size_t i, size_t j, const BigInt& k);
  void add_col_multiple(size_t i, size_t j, const BigInt& k);
  void negate_row(size_t i);
  void negate_col(size_t i);
  void append_row(const IntVector& r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string to_string() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// JSON: array of arrays of decimal strings.
std::string matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const std::string& text);

// Row Hermite normal form of the row span: pivots positive, entries above a
// pivot reduced into [0, pivot), zero rows dropped.  If `transform` is given
// it receives a unimodular T with T * A = [H; 0].
IntMatrix hermite_normal_form(const IntMatrix& a, IntMatrix* transform = nullptr);

struct SmithForm {
  IntMatrix u, d, v;  // u * a * v == d
  IntMatrix v_inverse;
  std::vector<BigInt> invariants() const;  // nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix& a);

BigInt determinant(const IntMatrix& a);

// Basis (rows) of { x in Z^n : a * x = 0 }, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& a);

// A subgroup of Z^n, stored by its Hermite basis; equality is equality of
// Hermite bases.
class Lattice {
 public:
  explicit Lattice(size_t ambient = 0) : n_(ambient), basis_(0, ambient) {}
  static Lattice from_generators(const IntMatrix& rows);
  static Lattice from_generators(const std::vector<IntVector>& rows, size_t ambient);
  static Lattice full(size_t n);

  size_t ambient() const { return n_; }
  size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  IntVector basis_vector(size_t i) const { return basis_.row(i); }

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& o) const;
  // Integer coefficients of v with respect to basis(), if v is in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  Lattice saturation() const;
  bool is_saturated() const { return saturation() == *this; }
  // Whether v lies in the rational span of the lattice.
  bool in_span(const IntVector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

  std::string to_string() const;

 private:
  size_t n_;
  IntMatrix basis_;
};

Lattice intersect(const Lattice& a, const Lattice& b);

// [Sat(L) : L], the product of the invariant factors.
BigInt quotient_order(const Lattice& l);
// [big : small] when small is a finite-index sublattice of big.
std::optional<BigInt> index_in(const Lattice& big, const Lattice& small);

// A basis w_1..w_r of `big` and integers f_i with small = span(f_i w_i),
// f_1 | f_2 | ...; f_i = 0 beyond the rank of `small`.  small must lie in big.
struct AdaptedBasis {
  std::vector<IntVector> w;
  std::vector<BigInt> f;
};
AdaptedBasis adapted_basis(const Lattice& big, const Lattice& small);

// Sat_p(L) / L is the p-part of Sat(L)/L and Sat'_p(L) / L the part prime to
// p; g = [Sat'_p(L) : L].  For p = 0: Sat_p = L and Sat'_p = Sat(L).
struct PSaturations {
  Lattice sat_p;
  Lattice sat_p_prime;
  BigInt g;
};
PSaturations p_saturations(const Lattice& l, uint64_t p);

// Primitive elements of L with inclusion-minimal support, each scaled to
// the smallest multiple lying in L, first nonzero entry positive, sorted.
std::vector<IntVector> circuits(const Lattice& l);

std::string vector_to_string(const IntVector& v);

}  // namespace binom
