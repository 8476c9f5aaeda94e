#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace binom {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Every failure that follows from the mathematics (as opposed to bad usage)
// derives from MathError; the CLI maps these to exit code 2.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or invocation; the CLI maps these to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public UsageError {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

class BadFieldSpec : public UsageError {
 public:
  explicit BadFieldSpec(const std::string& what) : UsageError("bad field: " + what) {}
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
};

class FieldMismatch : public MathError {
 public:
  explicit FieldMismatch(const std::string& what) : MathError("field mismatch: " + what) {}
};

class RootNotInField : public MathError {
 public:
  RootNotInField(const std::string& what, int minimal_extension)
      : MathError(what), minimal_extension_(minimal_extension) {}
  // Smallest k' such that the requested roots live in GF(p^k').
  int minimal_extension() const { return minimal_extension_; }

 private:
  int minimal_extension_;
};

class RootNotCyclotomic : public MathError {
 public:
  explicit RootNotCyclotomic(const std::string& what) : MathError(what) {}
};

// ---------------------------------------------------------------------------
// Univariate helpers used by the cyclotomic and finite-field code.

// Coefficients of the N-th cyclotomic polynomial, low degree first (monic).
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
std::vector<long> prime_factors(uint64_t n);

// ---------------------------------------------------------------------------
// GF(p^k) = F_p[t]/(modulus).  Elements are coefficient vectors of length k.

class GaloisField {
 public:
  using Elem = std::vector<uint32_t>;

  // `modulus` is monic of degree k, low degree first (k + 1 entries).
  static std::shared_ptr<const GaloisField> make(uint32_t p, int k, std::vector<uint32_t> modulus);
  // Lexicographically first monic irreducible of degree k.
  static std::shared_ptr<const GaloisField> make_default(uint32_t p, int k);

  uint32_t p() const { return p_; }
  int k() const { return k_; }
  uint64_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  bool same_as(const GaloisField& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const;
  Elem from_int(long v) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, uint64_t e) const;
  Elem inv(const Elem& a) const;
  static bool is_zero(const Elem& a);

  // Elements are in bijection with [0, q); used for hashing and enumeration.
  uint64_t index_of(const Elem& a) const;
  Elem element_at(uint64_t idx) const;

  // A generator of the multiplicative group (smallest by index).
  const Elem& primitive_element() const { return primitive_; }
  // Discrete logarithm base primitive_element(); a must be nonzero.
  uint64_t log(const Elem& a) const;

  // "GF(5)" or "GF(5^2; t^2 + 2)".
  std::string to_string() const;
  static std::string poly_string(const std::vector<uint32_t>& coeffs, const std::string& var);

 private:
  GaloisField(uint32_t p, int k, std::vector<uint32_t> modulus);
  uint32_t p_;
  int k_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  Elem primitive_;
};

bool is_irreducible_mod_p(const std::vector<uint32_t>& f, uint32_t p);

// ---------------------------------------------------------------------------
// A field element.  Characteristic zero values live in some QQ(zeta_N), where
// N is carried by the element and grows when elements of different orders
// meet; rational values are kept with N = 1.

class Scalar {
 public:
  enum class Kind : uint8_t { Rational, Cyclotomic, Finite };

  Scalar() : v_(BigRational(0)) {}
  explicit Scalar(const BigRational& q) : v_(q) {}
  explicit Scalar(long n) : v_(BigRational(n)) {}
  static Scalar rational(long num, long den = 1);
  // Element sum_i coeffs[i] * zeta_N^i (any length; reduced modulo Phi_N).
  static Scalar cyclotomic(int order, const std::vector<BigRational>& coeffs);
  static Scalar finite(std::shared_ptr<const GaloisField> f, GaloisField::Elem e);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return kind() == Kind::Rational; }
  uint64_t characteristic() const;
  // Storage order N of the cyclotomic field (1 for rationals, 0 for char p).
  int order() const;
  const BigRational& rational_value() const { return std::get<BigRational>(v_); }
  // Coefficients in the power basis of QQ(zeta_order()).
  std::vector<BigRational> cyclotomic_coeffs() const;
  const std::shared_ptr<const GaloisField>& galois() const;
  const GaloisField::Elem& finite_value() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Same value, re-expressed in QQ(zeta_M) for the least M possible.
  Scalar normalized() const;
  // The same value written in QQ(zeta_n); n must be a multiple of order().
  Scalar embedded(int n) const;

  // If this is a root of unity, its multiplicative order; otherwise 0.
  long root_of_unity_order() const;

  // Rationals: "3/2"; cyclotomic: "1/2*z4 - 3"; finite: "t + 2@GF(5^2)".
  std::string to_string() const;
  // As above without the finite-field suffix (used inside polynomials).
  std::string to_plain_string() const;
  // Whether to_plain_string() must be parenthesised when used as a factor.
  bool needs_parens() const;

 private:
  struct Cyclo {
    int order;
    std::shared_ptr<const std::vector<BigRational>> c;  // length phi(order)
  };
  struct Finite {
    std::shared_ptr<const GaloisField> f;
    GaloisField::Elem e;
  };
  std::variant<BigRational, Cyclo, Finite> v_;

  static Scalar from_cyclo_coeffs(int order, std::vector<BigRational> c);
  void check_compatible(const Scalar& o) const;
};

// ---------------------------------------------------------------------------
// Description of the coefficient field.

class Field {
 public:
  static Field rationals() { return Field(1); }
  static Field cyclotomic(int n) { return Field(n); }
  static Field finite(std::shared_ptr<const GaloisField> f) { return Field(std::move(f)); }

  uint64_t characteristic() const { return gf_ ? gf_->p() : 0; }
  int cyclotomic_order() const { return order_; }
  const std::shared_ptr<const GaloisField>& galois() const { return gf_; }
  bool is_finite() const { return gf_ != nullptr; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(const BigInt& n) const;
  Scalar from_rational(const BigRational& q) const;

  // Field of the same characteristic containing this one and zeta_n.
  Field with_order(int n) const;
  bool contains(const Scalar& s) const;
  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  // "QQ", "QQ(zeta 12)", "GF(5)", "GF(5^2; t^2 + 2)".
  std::string to_string() const;

 private:
  explicit Field(int order) : order_(order) {}
  explicit Field(std::shared_ptr<const GaloisField> f) : order_(0), gf_(std::move(f)) {}
  int order_;
  std::shared_ptr<const GaloisField> gf_;
};

// zeta_N^j with zeta_N = exp(2 pi i / N) in characteristic 0, or the power
// g^((q-1)/N) of the chosen primitive element in GF(q).
Scalar root_of_unity(const Field& field, long n, long j = 1);

// All d-th roots of c.  In characteristic 0, c must be a rational perfect
// d-th power times a root of unity.  In characteristic p the p-power part of d
// is handled by inverse Frobenius (unique root).  Roots are ordered by the
// exponent of the root of unity that separates them.
std::vector<Scalar> dth_root(const Field& field, const Scalar& c, long d);

// Parses rationals ("-3/4"), cyclotomic expressions ("1/2*z4 - 3", "z12^3")
// and finite-field elements ("t + 2", optionally with "@GF(...)" suffix).
Scalar parse_scalar(std::string_view text, const Field& field);

// Exact rational k-th root when one exists.
bool rational_root(const BigRational& q, long k, BigRational& out);

}  // namespace binom
