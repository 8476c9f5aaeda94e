#include "binom/intlattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace binom {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(size_t i) const { return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(size_t i, size_t j, const BigInt& k) {
  if (k == 0) return;
  for (size_t c = 0; c < cols_; ++c)
    if ((*this)(j, c) != 0) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(size_t i, size_t j, const BigInt& k) {
  if (k == 0) return;
  for (size_t r = 0; r < rows_; ++r)
    if ((*this)(r, j) != 0) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(size_t i) {
  for (size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(size_t i) {
  for (size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

void IntMatrix::append_row(const IntVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string vector_to_string(const IntVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

std::string matrix_to_json(const IntMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (size_t c = 0; c < m.cols(); ++c) r.push_back(m(i, c).get_str());
    j.push_back(r);
  }
  return j.dump();
}

IntMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw UsageError("matrix JSON must be an array of rows");
  std::vector<IntVector> rows;
  size_t cols = 0;
  for (const auto& r : j) {
    if (!r.is_array()) throw UsageError("matrix JSON rows must be arrays");
    IntVector v;
    for (const auto& e : r) {
      if (e.is_string())
        v.emplace_back(e.get<std::string>());
      else if (e.is_number_integer())
        v.emplace_back(e.get<long>());
      else
        throw UsageError("matrix entries must be decimal strings");
    }
    cols = v.size();
    rows.push_back(std::move(v));
  }
  return IntMatrix::from_rows(rows, cols);
}

// ---------------------------------------------------------------------------
// Hermite / Smith

IntMatrix hermite_normal_form(const IntMatrix& a, IntMatrix* transform) {
  IntMatrix h = a;
  size_t m = h.rows(), n = h.cols();
  IntMatrix t = IntMatrix::identity(m);
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    for (size_t i = r + 1; i < m; ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        t.swap_rows(r, i);
        continue;
      }
      BigInt g, s, u;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
      BigInt ar = h(r, c) / g, bi = h(i, c) / g;
      // [row_r; row_i] <- [[s, u], [-bi, ar]] * [row_r; row_i]   (det 1)
      for (IntMatrix* mat : {&h, &t}) {
        for (size_t j = 0; j < mat->cols(); ++j) {
          BigInt x = (*mat)(r, j), y = (*mat)(i, j);
          (*mat)(r, j) = s * x + u * y;
          (*mat)(i, j) = ar * y - bi * x;
        }
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    for (size_t i = 0; i < r; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q != 0) {
        h.add_row_multiple(i, r, -q);
        t.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  if (transform) *transform = t;
  IntMatrix out(r, n);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

std::vector<BigInt> SmithForm::invariants() const {
  std::vector<BigInt> out;
  for (size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& d = s.d;
  // column op on d / v is mirrored by the inverse row op on v_inverse
  auto col_add = [&](size_t i, size_t j, const BigInt& k) {  // col_i += k col_j
    d.add_col_multiple(i, j, k);
    s.v.add_col_multiple(i, j, k);
    s.v_inverse.add_row_multiple(j, i, -k);
  };
  auto col_swap = [&](size_t i, size_t j) {
    d.swap_cols(i, j);
    s.v.swap_cols(i, j);
    s.v_inverse.swap_rows(i, j);
  };
  auto row_add = [&](size_t i, size_t j, const BigInt& k) {
    d.add_row_multiple(i, j, k);
    s.u.add_row_multiple(i, j, k);
  };
  auto row_swap = [&](size_t i, size_t j) {
    d.swap_rows(i, j);
    s.u.swap_rows(i, j);
  };
  for (size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return s;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility condition on the rest of the block
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

BigInt determinant(const IntMatrix& a) {
  size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  // fraction-free (Bareiss) elimination
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  size_t n = a.cols();
  IntMatrix t;
  IntMatrix h = hermite_normal_form(a.transposed(), &t);
  IntMatrix k(0, n);
  for (size_t i = h.rows(); i < t.rows(); ++i) k.append_row(t.row(i));
  if (k.rows() == 0) return IntMatrix(0, n);
  return hermite_normal_form(k);
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::from_generators(const IntMatrix& rows) {
  Lattice l(rows.cols());
  l.basis_ = hermite_normal_form(rows);
  return l;
}

Lattice Lattice::from_generators(const std::vector<IntVector>& rows, size_t ambient) {
  return from_generators(IntMatrix::from_rows(rows, ambient));
}

Lattice Lattice::full(size_t n) { return from_generators(IntMatrix::identity(n)); }

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length does not match lattice");
  IntVector rest = v;
  IntVector x(basis_.rows());
  size_t col = 0;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    while (basis_(i, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    if (rest[col] % basis_(i, col) != 0) return std::nullopt;
    x[i] = rest[col] / basis_(i, col);
    for (size_t j = col; j < n_; ++j) rest[j] -= x[i] * basis_(i, j);
    ++col;
  }
  for (const auto& r : rest)
    if (r != 0) return std::nullopt;
  return x;
}

bool Lattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& o) const {
  for (size_t i = 0; i < o.rank(); ++i)
    if (!contains(o.basis_vector(i))) return false;
  return true;
}

Lattice Lattice::saturation() const {
  if (rank() == 0) return *this;
  IntMatrix k = integer_kernel(basis_);
  if (k.rows() == 0) return full(n_);
  Lattice s(n_);
  s.basis_ = integer_kernel(k);
  return s;
}

bool Lattice::in_span(const IntVector& v) const {
  Lattice s = saturation();
  // v in the rational span iff some multiple lies in the lattice iff v in Sat(L).
  return s.contains(v);
}

std::string Lattice::to_string() const { return basis_.to_string(); }

Lattice intersect(const Lattice& a, const Lattice& b) {
  size_t n = a.ambient();
  if (b.ambient() != n) throw std::invalid_argument("lattices in different ambient spaces");
  if (a.rank() == 0 || b.rank() == 0) return Lattice(n);
  size_t r1 = a.rank(), r2 = b.rank();
  IntMatrix c(r1 + r2, n);
  for (size_t i = 0; i < r1; ++i)
    for (size_t j = 0; j < n; ++j) c(i, j) = a.basis()(i, j);
  for (size_t i = 0; i < r2; ++i)
    for (size_t j = 0; j < n; ++j) c(r1 + i, j) = -b.basis()(i, j);
  // (x, y) with x A = y B
  IntMatrix k = integer_kernel(c.transposed());
  IntMatrix gens(k.rows(), n);
  for (size_t t = 0; t < k.rows(); ++t)
    for (size_t i = 0; i < r1; ++i)
      for (size_t j = 0; j < n; ++j) gens(t, j) += k(t, i) * a.basis()(i, j);
  return Lattice::from_generators(gens);
}

AdaptedBasis adapted_basis(const Lattice& big, const Lattice& small) {
  size_t rb = big.rank(), rs = small.rank();
  IntMatrix c(rs, rb);
  for (size_t i = 0; i < rs; ++i) {
    auto x = big.coordinates(small.basis_vector(i));
    if (!x) throw std::invalid_argument("adapted_basis: lattice not contained");
    for (size_t j = 0; j < rb; ++j) c(i, j) = (*x)[j];
  }
  SmithForm s = smith_normal_form(c);
  IntMatrix w = s.v_inverse * big.basis();
  AdaptedBasis out;
  out.w = w.row_list();
  for (size_t i = 0; i < rb; ++i) out.f.push_back(i < rs && i < s.d.cols() ? s.d(i, i) : BigInt(0));
  return out;
}

std::optional<BigInt> index_in(const Lattice& big, const Lattice& small) {
  if (!big.contains(small) || big.rank() != small.rank()) return std::nullopt;
  AdaptedBasis ab = adapted_basis(big, small);
  BigInt idx = 1;
  for (const auto& f : ab.f) idx *= f;
  return idx;
}

BigInt quotient_order(const Lattice& l) { return *index_in(l.saturation(), l); }

PSaturations p_saturations(const Lattice& l, uint64_t p) {
  Lattice sat = l.saturation();
  if (p == 0) return {l, sat, quotient_order(l)};
  AdaptedBasis ab = adapted_basis(sat, l);
  size_t n = l.ambient();
  std::vector<IntVector> gp, gq;
  BigInt g = 1, bp = static_cast<unsigned long>(p);
  for (size_t i = 0; i < ab.w.size(); ++i) {
    BigInt ppart = 1, rest = ab.f[i];
    while (rest % bp == 0) {
      rest /= bp;
      ppart *= bp;
    }
    IntVector a = ab.w[i], b = ab.w[i];
    for (auto& x : a) x *= rest;   // Sat_p: drop the p-part of the factor
    for (auto& x : b) x *= ppart;  // Sat'_p: drop the prime-to-p part
    gp.push_back(a);
    gq.push_back(b);
    g *= rest;
  }
  return {Lattice::from_generators(gp, n), Lattice::from_generators(gq, n), g};
}

std::vector<IntVector> circuits(const Lattice& l) {
  size_t n = l.ambient();
  std::set<IntVector> found;
  if (l.rank() == 0) return {};
  IntMatrix b = integer_kernel(l.basis());  // L (x) Q = ker b
  size_t d = b.rows();
  std::vector<size_t> sub(d + 1);
  // enumerate (d+1)-subsets of columns
  for (size_t i = 0; i <= d; ++i) sub[i] = i;
  if (d + 1 > n) return {};
  for (;;) {
    IntVector c(n);
    bool nonzero = false;
    for (size_t j = 0; j <= d; ++j) {
      IntMatrix minor(d, d);
      for (size_t r = 0; r < d; ++r) {
        size_t cc = 0;
        for (size_t k = 0; k <= d; ++k) {
          if (k == j) continue;
          minor(r, cc++) = b(r, sub[k]);
        }
      }
      BigInt det = determinant(minor);
      c[sub[j]] = (j % 2 == 0) ? det : BigInt(-det);
      if (det != 0) nonzero = true;
    }
    if (nonzero) {
      BigInt g = 0;
      for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      for (auto& x : c) x /= g;
      for (const auto& x : c)
        if (x != 0) {
          if (x < 0)
            for (auto& y : c) y = -y;
          break;
        }
      // smallest multiple inside L
      IntVector m = c;
      for (int k = 1; !l.contains(m); ++k) {
        for (size_t t = 0; t < n; ++t) m[t] = c[t] * (k + 1);
        if (k > 1000000) throw MathError("circuit scaling did not terminate");
      }
      found.insert(m);
    }
    // next subset
    int i = static_cast<int>(d);
    while (i >= 0 && sub[i] == n - d - 1 + static_cast<size_t>(i)) --i;
    if (i < 0) break;
    ++sub[i];
    for (size_t k = i + 1; k <= d; ++k) sub[k] = sub[k - 1] + 1;
  }
  return std::vector<IntVector>(found.begin(), found.end());
}

}  // namespace binom
