#include "binom/exact_arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "binom/detail/expr_parser.hpp"

namespace binom {

// ---------------------------------------------------------------------------
// integer helpers

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a == 0 || b == 0 ? 0 : std::lcm(a, b); }

std::vector<long> prime_factors(uint64_t n) {
  std::vector<long> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<long>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<long>(n));
  return out;
}

int euler_phi(int n) {
  int r = n;
  for (long p : prime_factors(static_cast<uint64_t>(n))) r = r / static_cast<int>(p) * (static_cast<int>(p) - 1);
  return r;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& den = cyclotomic_polynomial(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long> quo(dn - dd + 1, 0);
    for (int i = dn - dd; i >= 0; --i) {
      long c = num[i + dd];
      quo[i] = c;
      for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    num = std::move(quo);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

// ---------------------------------------------------------------------------
// univariate polynomials over F_p (low degree first)

namespace {

using UPoly = std::vector<uint64_t>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<uint64_t>(r);
}

UPoly upoly_mod(UPoly a, const UPoly& m, uint64_t p) {
  trim(a);
  size_t dm = m.size() - 1;
  uint64_t inv_lead = powmod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    uint64_t c = a.back() * inv_lead % p;
    size_t shift = a.size() - 1 - dm;
    for (size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - c) * m[j] % p) % p;
    trim(a);
  }
  return a;
}

UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return upoly_mod(std::move(r), m, p);
}

UPoly upoly_powmod(UPoly b, uint64_t e, const UPoly& m, uint64_t p) {
  UPoly r{1};
  b = upoly_mod(b, m, p);
  while (e) {
    if (e & 1) r = upoly_mulmod(r, b, m, p);
    b = upoly_mulmod(b, b, m, p);
    e >>= 1;
  }
  return r;
}

UPoly upoly_gcd(UPoly a, UPoly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<uint32_t>& f32, uint32_t p) {
  UPoly f(f32.begin(), f32.end());
  trim(f);
  if (f.size() < 2) return false;
  size_t k = f.size() - 1;
  if (k == 1) return true;
  UPoly x{0, 1};
  // x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) == 1 for primes l | k.
  auto frob = [&](size_t times) {
    UPoly r = x;
    for (size_t i = 0; i < times; ++i) r = upoly_powmod(r, p, f, p);
    return r;
  };
  UPoly full = frob(k);
  full.resize(std::max<size_t>(full.size(), 2), 0);
  full[1] = (full[1] + p - 1) % p;
  trim(full);
  if (!full.empty()) return false;
  for (long l : prime_factors(k)) {
    UPoly h = frob(k / static_cast<size_t>(l));
    h.resize(std::max<size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    UPoly g = upoly_gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// GaloisField

GaloisField::GaloisField(uint32_t p, int k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ == 2) {
    primitive_ = one();
    return;
  }
  std::vector<long> ls = prime_factors(q_ - 1);
  for (uint64_t idx = 1; idx < q_; ++idx) {
    Elem g = element_at(idx);
    bool ok = true;
    for (long l : ls) {
      Elem h = pow(g, (q_ - 1) / static_cast<uint64_t>(l));
      if (h == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = g;
      return;
    }
  }
  throw BadFieldSpec("no primitive element found (modulus not irreducible?)");
}

std::shared_ptr<const GaloisField> GaloisField::make(uint32_t p, int k, std::vector<uint32_t> modulus) {
  if (!is_prime_u64(p) || p >= (1u << 31)) throw BadFieldSpec("characteristic must be a prime below 2^31");
  if (k < 1) throw BadFieldSpec("extension degree must be positive");
  double bits = k * std::log2(static_cast<double>(p));
  if (bits > 40) throw BadFieldSpec("field too large");
  if (modulus.size() != static_cast<size_t>(k) + 1 || modulus.back() % p != 1)
    throw BadFieldSpec("modulus must be monic of degree " + std::to_string(k));
  for (auto& c : modulus) c %= p;
  if (!is_irreducible_mod_p(modulus, p)) throw BadFieldSpec("modulus is not irreducible");
  return std::shared_ptr<const GaloisField>(new GaloisField(p, k, std::move(modulus)));
}

std::shared_ptr<const GaloisField> GaloisField::make_default(uint32_t p, int k) {
  if (!is_prime_u64(p) || p >= (1u << 31)) throw BadFieldSpec("characteristic must be a prime below 2^31");
  if (k < 1) throw BadFieldSpec("extension degree must be positive");
  if (k == 1) return make(p, 1, {0, 1});
  double bits = k * std::log2(static_cast<double>(p));
  if (bits > 40) throw BadFieldSpec("field too large");
  uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  for (uint64_t idx = 0; idx < q; ++idx) {
    std::vector<uint32_t> m(k + 1, 0);
    uint64_t t = idx;
    for (int i = 0; i < k; ++i) {
      m[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    m[k] = 1;
    if (is_irreducible_mod_p(m, p)) return make(p, k, m);
  }
  throw BadFieldSpec("no irreducible polynomial found");
}

GaloisField::Elem GaloisField::one() const {
  Elem e(k_, 0);
  e[0] = 1;
  return e;
}

GaloisField::Elem GaloisField::from_int(long v) const {
  Elem e(k_, 0);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  e[0] = static_cast<uint32_t>(r);
  return e;
}

GaloisField::Elem GaloisField::add(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = static_cast<uint32_t>((uint64_t(a[i]) + b[i]) % p_);
  return r;
}

GaloisField::Elem GaloisField::sub(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = static_cast<uint32_t>((uint64_t(a[i]) + p_ - b[i]) % p_);
  return r;
}

GaloisField::Elem GaloisField::neg(const Elem& a) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
  return r;
}

GaloisField::Elem GaloisField::mul(const Elem& a, const Elem& b) const {
  if (k_ == 1) return Elem{static_cast<uint32_t>(uint64_t(a[0]) * b[0] % p_)};
  std::vector<uint64_t> r(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p_;
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    uint64_t c = r[i];
    if (!c) continue;
    for (int j = 0; j < k_; ++j) r[i - k_ + j] = (r[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
    r[i] = 0;
  }
  Elem out(k_);
  for (int i = 0; i < k_; ++i) out[i] = static_cast<uint32_t>(r[i]);
  return out;
}

GaloisField::Elem GaloisField::pow(Elem a, uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GaloisField::Elem GaloisField::inv(const Elem& a) const {
  if (is_zero(a)) throw DivisionByZero();
  return pow(a, q_ - 2);
}

bool GaloisField::is_zero(const Elem& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

uint64_t GaloisField::index_of(const Elem& a) const {
  uint64_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

GaloisField::Elem GaloisField::element_at(uint64_t idx) const {
  Elem e(k_);
  for (int i = 0; i < k_; ++i) {
    e[i] = static_cast<uint32_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

uint64_t GaloisField::log(const Elem& a) const {
  if (is_zero(a)) throw DivisionByZero();
  uint64_t n = q_ - 1;
  uint64_t m = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
  std::unordered_map<uint64_t, uint64_t> baby;
  Elem cur = one();
  for (uint64_t j = 0; j < m; ++j) {
    baby.emplace(index_of(cur), j);
    cur = mul(cur, primitive_);
  }
  Elem step = inv(pow(primitive_, m));
  Elem gamma = a;
  for (uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(index_of(gamma));
    if (it != baby.end()) return (i * m + it->second) % n;
    gamma = mul(gamma, step);
  }
  throw MathError("discrete logarithm failed");
}

std::string GaloisField::poly_string(const std::vector<uint32_t>& coeffs, const std::string& var) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    uint32_t c = coeffs[i];
    if (!c) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += std::to_string(c) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

std::string GaloisField::to_string() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + "; " + poly_string(modulus_, "t") + ")";
}

// ---------------------------------------------------------------------------
// cyclotomic helpers

namespace {

using QVec = std::vector<BigRational>;

// Reduce a polynomial in zeta_n modulo Phi_n to length phi(n).
QVec cyclo_reduce(QVec a, int n) {
  const std::vector<long>& phi = cyclotomic_polynomial(n);
  int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
    if (sgn(a[i]) == 0) continue;
    BigRational c = a[i];
    for (int j = 0; j < d; ++j)
      if (phi[j]) a[i - d + j] -= c * phi[j];
    a[i] = 0;
  }
  a.resize(d);
  return a;
}

QVec cyclo_embed(const QVec& a, int from, int to) {
  if (from == to) return a;
  int s = to / from;
  QVec r(a.empty() ? 1 : (a.size() - 1) * s + 1);
  for (size_t i = 0; i < a.size(); ++i) r[i * s] = a[i];
  return cyclo_reduce(std::move(r), to);
}

QVec cyclo_mul(const QVec& a, const QVec& b, int n) {
  QVec r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
  }
  return cyclo_reduce(std::move(r), n);
}

// Solve M x = rhs over QQ (M given column-wise as vectors of length rows).
// Returns false if inconsistent.  Free variables are set to zero.
bool solve_rational(std::vector<QVec> cols, QVec rhs, QVec& x) {
  size_t rows = rhs.size(), ncols = cols.size();
  std::vector<QVec> m(rows, QVec(ncols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
    m[i][ncols] = rhs[i];
  }
  std::vector<int> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    BigRational inv = 1 / m[r][c];
    for (size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      BigRational f = m[i][c];
      for (size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(m[i][ncols]) != 0) return false;
  x.assign(ncols, BigRational(0));
  for (size_t i = 0; i < r; ++i) x[pivcol[i]] = m[i][ncols];
  return true;
}

std::string rat_str(const BigRational& q) { return q.get_str(); }

}  // namespace

bool rational_root(const BigRational& q, long k, BigRational& out) {
  if (k <= 0) return false;
  if (sgn(q) == 0) {
    out = 0;
    return true;
  }
  if (sgn(q) < 0 && k % 2 == 0) return false;
  BigInt num = abs(q.get_num()), den = q.get_den();
  BigInt rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k))) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k))) return false;
  out = BigRational(rn, rd);
  out.canonicalize();
  if (sgn(q) < 0) out = -out;
  return true;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  BigRational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::from_cyclo_coeffs(int order, QVec c) {
  if (order <= 2) return Scalar(c.empty() ? BigRational(0) : c[0]);
  bool rational = true;
  for (size_t i = 1; i < c.size(); ++i)
    if (sgn(c[i]) != 0) {
      rational = false;
      break;
    }
  if (rational) return Scalar(c.empty() ? BigRational(0) : c[0]);
  Scalar s;
  s.v_ = Cyclo{order, std::make_shared<const QVec>(std::move(c))};
  return s;
}

Scalar Scalar::cyclotomic(int order, const std::vector<BigRational>& coeffs) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  QVec c = coeffs;
  if (c.empty()) c.push_back(0);
  return from_cyclo_coeffs(order, cyclo_reduce(std::move(c), order));
}

Scalar Scalar::finite(std::shared_ptr<const GaloisField> f, GaloisField::Elem e) {
  Scalar s;
  s.v_ = Finite{std::move(f), std::move(e)};
  return s;
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case Kind::Rational: return sgn(std::get<BigRational>(v_)) == 0;
    case Kind::Cyclotomic: return false;  // rational values are demoted
    case Kind::Finite: return GaloisField::is_zero(std::get<Finite>(v_).e);
  }
  return false;
}

bool Scalar::is_one() const {
  switch (kind()) {
    case Kind::Rational: return std::get<BigRational>(v_) == 1;
    case Kind::Cyclotomic: return false;
    case Kind::Finite: {
      const auto& f = std::get<Finite>(v_);
      return f.e == f.f->one();
    }
  }
  return false;
}

uint64_t Scalar::characteristic() const {
  return kind() == Kind::Finite ? std::get<Finite>(v_).f->p() : 0;
}

int Scalar::order() const {
  switch (kind()) {
    case Kind::Rational: return 1;
    case Kind::Cyclotomic: return std::get<Cyclo>(v_).order;
    case Kind::Finite: return 0;
  }
  return 0;
}

std::vector<BigRational> Scalar::cyclotomic_coeffs() const {
  if (kind() == Kind::Rational) return {std::get<BigRational>(v_)};
  if (kind() == Kind::Cyclotomic) return *std::get<Cyclo>(v_).c;
  throw FieldMismatch("finite-field element has no cyclotomic coordinates");
}

const std::shared_ptr<const GaloisField>& Scalar::galois() const {
  static const std::shared_ptr<const GaloisField> none;
  return kind() == Kind::Finite ? std::get<Finite>(v_).f : none;
}

const GaloisField::Elem& Scalar::finite_value() const { return std::get<Finite>(v_).e; }

void Scalar::check_compatible(const Scalar& o) const {
  if (kind() == Kind::Finite && o.kind() == Kind::Finite) {
    if (!std::get<Finite>(v_).f->same_as(*std::get<Finite>(o.v_).f))
      throw FieldMismatch(std::get<Finite>(v_).f->to_string() + " vs " + std::get<Finite>(o.v_).f->to_string());
    return;
  }
  if ((kind() == Kind::Finite && o.kind() == Kind::Cyclotomic) ||
      (kind() == Kind::Cyclotomic && o.kind() == Kind::Finite))
    throw FieldMismatch("cyclotomic element combined with finite-field element");
}

namespace {

// Maps a rational into GF(q) (the prime field homomorphism).
GaloisField::Elem rational_to_finite(const BigRational& q, const GaloisField& f) {
  BigInt p = f.p();
  BigInt num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw DivisionByZero();
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  BigInt v = num * inv % p;
  return f.from_int(v.get_si());
}

}  // namespace

Scalar Scalar::operator-() const {
  switch (kind()) {
    case Kind::Rational: return Scalar(BigRational(-std::get<BigRational>(v_)));
    case Kind::Cyclotomic: {
      const auto& c = std::get<Cyclo>(v_);
      QVec r = *c.c;
      for (auto& x : r) x = -x;
      return from_cyclo_coeffs(c.order, std::move(r));
    }
    case Kind::Finite: {
      const auto& f = std::get<Finite>(v_);
      return finite(f.f, f.f->neg(f.e));
    }
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_compatible(o);
  if (kind() == Kind::Rational && o.kind() == Kind::Rational) {
    std::get<BigRational>(v_) += std::get<BigRational>(o.v_);
    return *this;
  }
  if (kind() == Kind::Finite || o.kind() == Kind::Finite) {
    const auto& f = kind() == Kind::Finite ? std::get<Finite>(v_).f : std::get<Finite>(o.v_).f;
    GaloisField::Elem a = kind() == Kind::Finite ? std::get<Finite>(v_).e : rational_to_finite(rational_value(), *f);
    GaloisField::Elem b = o.kind() == Kind::Finite ? std::get<Finite>(o.v_).e : rational_to_finite(o.rational_value(), *f);
    *this = finite(f, f->add(a, b));
    return *this;
  }
  int n = static_cast<int>(lcm_long(order(), o.order()));
  QVec a = cyclo_embed(cyclotomic_coeffs(), order(), n);
  QVec b = cyclo_embed(o.cyclotomic_coeffs(), o.order(), n);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = from_cyclo_coeffs(n, std::move(a));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_compatible(o);
  if (kind() == Kind::Rational && o.kind() == Kind::Rational) {
    std::get<BigRational>(v_) *= std::get<BigRational>(o.v_);
    return *this;
  }
  if (kind() == Kind::Finite || o.kind() == Kind::Finite) {
    const auto& f = kind() == Kind::Finite ? std::get<Finite>(v_).f : std::get<Finite>(o.v_).f;
    GaloisField::Elem a = kind() == Kind::Finite ? std::get<Finite>(v_).e : rational_to_finite(rational_value(), *f);
    GaloisField::Elem b = o.kind() == Kind::Finite ? std::get<Finite>(o.v_).e : rational_to_finite(o.rational_value(), *f);
    *this = finite(f, f->mul(a, b));
    return *this;
  }
  if (kind() == Kind::Rational || o.kind() == Kind::Rational) {
    const BigRational& r = kind() == Kind::Rational ? rational_value() : o.rational_value();
    const Cyclo& c = kind() == Kind::Rational ? std::get<Cyclo>(o.v_) : std::get<Cyclo>(v_);
    if (sgn(r) == 0) {
      *this = Scalar();
      return *this;
    }
    QVec v = *c.c;
    for (auto& x : v) x *= r;
    *this = from_cyclo_coeffs(c.order, std::move(v));
    return *this;
  }
  int n = static_cast<int>(lcm_long(order(), o.order()));
  QVec a = cyclo_embed(cyclotomic_coeffs(), order(), n);
  QVec b = cyclo_embed(o.cyclotomic_coeffs(), o.order(), n);
  *this = from_cyclo_coeffs(n, cyclo_mul(a, b, n));
  return *this;
}

Scalar Scalar::inverse() const {
  switch (kind()) {
    case Kind::Rational: {
      if (sgn(rational_value()) == 0) throw DivisionByZero();
      return Scalar(BigRational(1 / rational_value()));
    }
    case Kind::Finite: {
      const auto& f = std::get<Finite>(v_);
      return finite(f.f, f.f->inv(f.e));
    }
    case Kind::Cyclotomic: {
      const auto& c = std::get<Cyclo>(v_);
      int d = static_cast<int>(c.c->size());
      std::vector<QVec> cols;
      QVec basis(d);
      for (int j = 0; j < d; ++j) {
        QVec zj(j + 1);
        zj[j] = 1;
        cols.push_back(cyclo_mul(*c.c, cyclo_reduce(zj, c.order), c.order));
      }
      QVec rhs(d);
      rhs[0] = 1;
      QVec x;
      if (!solve_rational(cols, rhs, x)) throw DivisionByZero();
      return from_cyclo_coeffs(c.order, std::move(x));
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (kind() == Kind::Rational && o.kind() == Kind::Rational) {
    std::get<BigRational>(v_) /= std::get<BigRational>(o.v_);
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (kind() == Kind::Rational) {
    BigRational q = rational_value();
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(BigRational(n, d));
  }
  Scalar r = kind() == Kind::Finite ? finite(galois(), galois()->one()) : Scalar(1L);
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind() == K::Rational && b.kind() == K::Rational) return a.rational_value() == b.rational_value();
  if (a.kind() == K::Finite || b.kind() == K::Finite) {
    if (a.kind() == K::Cyclotomic || b.kind() == K::Cyclotomic) return false;
    if (a.kind() == K::Finite && b.kind() == K::Finite && !a.galois()->same_as(*b.galois())) return false;
    return (a - b).is_zero();
  }
  if (a.kind() != b.kind()) return false;  // cyclotomic values are never rational
  int n = static_cast<int>(lcm_long(a.order(), b.order()));
  return cyclo_embed(a.cyclotomic_coeffs(), a.order(), n) == cyclo_embed(b.cyclotomic_coeffs(), b.order(), n);
}

Scalar Scalar::embedded(int n) const {
  if (kind() == Kind::Finite) return *this;
  if (n % order() != 0) throw std::invalid_argument("embedding order must be a multiple");
  if (kind() == Kind::Rational) return *this;
  Scalar s;
  s.v_ = Cyclo{n, std::make_shared<const QVec>(cyclo_embed(cyclotomic_coeffs(), order(), n))};
  return s;
}

Scalar Scalar::normalized() const {
  if (kind() != Kind::Cyclotomic) return *this;
  int n = order();
  QVec v = cyclotomic_coeffs();
  for (int m = 3; m < n; ++m) {
    if (n % m != 0 || m % 4 == 2) continue;
    int pm = euler_phi(m);
    std::vector<QVec> cols;
    for (int j = 0; j < pm; ++j) {
      QVec e(j + 1);
      e[j] = 1;
      cols.push_back(cyclo_embed(cyclo_reduce(e, m), m, n));
    }
    QVec x;
    if (solve_rational(cols, v, x)) return from_cyclo_coeffs(m, std::move(x));
  }
  if (n % 4 == 2) {
    // QQ(zeta_2m) = QQ(zeta_m) for odd m; express over the smaller order.
    int m = n / 2;
    int pm = euler_phi(m);
    std::vector<QVec> cols;
    for (int j = 0; j < pm; ++j) {
      QVec e(j + 1);
      e[j] = 1;
      cols.push_back(cyclo_embed(cyclo_reduce(e, m), m, n));
    }
    QVec x;
    if (solve_rational(cols, v, x)) return from_cyclo_coeffs(m, std::move(x));
  }
  return *this;
}

long Scalar::root_of_unity_order() const {
  switch (kind()) {
    case Kind::Rational: {
      const BigRational& q = rational_value();
      return q == 1 ? 1 : (q == -1 ? 2 : 0);
    }
    case Kind::Cyclotomic: {
      long m = lcm_long(2, order());
      if (!pow(m).is_one()) return 0;
      for (long d = 1; d <= m; ++d)
        if (m % d == 0 && pow(d).is_one()) return d;
      return 0;
    }
    case Kind::Finite: {
      if (is_zero()) return 0;
      uint64_t n = galois()->order() - 1;
      uint64_t ord = n;
      for (long l : prime_factors(n)) {
        while (ord % l == 0 && pow(static_cast<long>(ord / l)).is_one()) ord /= l;
      }
      return static_cast<long>(ord);
    }
  }
  return 0;
}

std::string Scalar::to_plain_string() const {
  switch (kind()) {
    case Kind::Rational: return rat_str(rational_value());
    case Kind::Finite: return GaloisField::poly_string(finite_value(), "t");
    case Kind::Cyclotomic: {
      Scalar s = normalized();
      if (s.kind() == Kind::Rational) return rat_str(s.rational_value());
      const auto& c = std::get<Cyclo>(s.v_);
      std::string z = "z" + std::to_string(c.order);
      std::string out;
      for (int i = static_cast<int>(c.c->size()) - 1; i >= 0; --i) {
        const BigRational& q = (*c.c)[i];
        if (sgn(q) == 0) continue;
        BigRational a = abs(q);
        std::string mono = i == 0 ? "" : (i == 1 ? z : z + "^" + std::to_string(i));
        std::string body = mono.empty() ? rat_str(a) : (a == 1 ? mono : rat_str(a) + "*" + mono);
        if (out.empty())
          out = (sgn(q) < 0 ? "-" : "") + body;
        else
          out += (sgn(q) < 0 ? " - " : " + ") + body;
      }
      return out;
    }
  }
  return "";
}

std::string Scalar::to_string() const {
  if (kind() == Kind::Finite) {
    const auto& f = *galois();
    std::string suffix = f.k() == 1 ? "GF(" + std::to_string(f.p()) + ")"
                                    : "GF(" + std::to_string(f.p()) + "^" + std::to_string(f.k()) + ")";
    return to_plain_string() + "@" + suffix;
  }
  return to_plain_string();
}

bool Scalar::needs_parens() const {
  switch (kind()) {
    case Kind::Rational: return false;
    case Kind::Cyclotomic: {
      Scalar s = normalized();
      if (s.kind() == Kind::Rational) return false;
      const auto& c = *std::get<Cyclo>(s.v_).c;
      return std::count_if(c.begin(), c.end(), [](const BigRational& q) { return sgn(q) != 0; }) > 1;
    }
    case Kind::Finite: {
      const auto& e = finite_value();
      return std::count_if(e.begin(), e.end(), [](uint32_t c) { return c != 0; }) > 1;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Field

Scalar Field::zero() const { return gf_ ? Scalar::finite(gf_, gf_->zero()) : Scalar(); }
Scalar Field::one() const { return gf_ ? Scalar::finite(gf_, gf_->one()) : Scalar(1L); }

Scalar Field::from_integer(const BigInt& n) const { return from_rational(BigRational(n)); }

Scalar Field::from_rational(const BigRational& q) const {
  if (!gf_) return Scalar(q);
  return Scalar::finite(gf_, rational_to_finite(q, *gf_));
}

Field Field::with_order(int n) const {
  if (gf_) return *this;
  return Field(static_cast<int>(lcm_long(order_, n)));
}

bool Field::contains(const Scalar& s) const {
  if (gf_) return s.kind() == Scalar::Kind::Rational || (s.kind() == Scalar::Kind::Finite && s.galois()->same_as(*gf_));
  if (s.kind() == Scalar::Kind::Finite) return false;
  Scalar n = s.normalized();
  int m = n.order();
  if (order_ % m == 0) return true;
  return m % 2 == 1 && order_ % (2 * m) == 0;
}

bool Field::operator==(const Field& o) const {
  if (gf_ || o.gf_) return gf_ && o.gf_ && gf_->same_as(*o.gf_);
  return order_ == o.order_;
}

std::string Field::to_string() const {
  if (gf_) return gf_->to_string();
  if (order_ <= 2) return "QQ";
  return "QQ(zeta " + std::to_string(order_) + ")";
}

// ---------------------------------------------------------------------------
// roots

Scalar root_of_unity(const Field& field, long n, long j) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  if (field.is_finite()) {
    const auto& f = field.galois();
    uint64_t q = f->order();
    if (n % static_cast<long>(f->p()) == 0)
      throw RootNotInField("no primitive " + std::to_string(n) + "-th roots of unity in characteristic " +
                               std::to_string(f->p()),
                           0);
    if ((q - 1) % static_cast<uint64_t>(n) != 0) {
      int kk = 1;
      uint64_t pk = f->p() % static_cast<uint64_t>(n);
      while (pk != 1 % static_cast<uint64_t>(n)) {
        pk = pk * f->p() % static_cast<uint64_t>(n);
        ++kk;
      }
      throw RootNotInField(std::to_string(n) + "-th roots of unity need GF(" + std::to_string(f->p()) + "^" +
                               std::to_string(kk) + ")",
                           kk);
    }
    GaloisField::Elem z = f->pow(f->primitive_element(), (q - 1) / static_cast<uint64_t>(n));
    long e = ((j % n) + n) % n;
    return Scalar::finite(f, f->pow(z, static_cast<uint64_t>(e)));
  }
  long e = ((j % n) + n) % n;
  long g = std::gcd(e, n);
  long m = n / g, k = e / g;
  if (m == 1) return Scalar(1L);
  if (m == 2) return Scalar(-1L);
  if (m % 4 == 2) {
    // zeta_2h^k = -zeta_h^((k + h) / 2) for odd h.
    long h = m / 2;
    long kk = ((k + h) / 2) % h;
    std::vector<BigRational> c(kk + 1);
    c[kk] = -1;
    return Scalar::cyclotomic(static_cast<int>(h), c);
  }
  std::vector<BigRational> c(k + 1);
  c[k] = 1;
  return Scalar::cyclotomic(static_cast<int>(m), c);
}

std::vector<Scalar> dth_root(const Field& field, const Scalar& c, long d) {
  if (d < 1) throw std::invalid_argument("root degree must be positive");
  if (d == 1) return {c};
  if (c.is_zero()) return {c};
  if (field.is_finite() || c.kind() == Scalar::Kind::Finite) {
    const auto& f = field.is_finite() ? field.galois() : c.galois();
    Scalar x = c.kind() == Scalar::Kind::Finite ? c : field.from_rational(c.rational_value());
    long p = f->p();
    long dd = d;
    int e = 0;
    while (dd % p == 0) {
      dd /= p;
      ++e;
    }
    // inverse Frobenius, applied e times: x -> x^(p^(k-1))
    for (int i = 0; i < e; ++i) {
      uint64_t ex = 1;
      for (int t = 0; t < f->k() - 1; ++t) ex *= f->p();
      x = Scalar::finite(f, f->pow(x.finite_value(), ex));
    }
    if (dd == 1) return {x};
    uint64_t n = f->order() - 1;
    uint64_t a = f->log(x.finite_value());
    if (n % static_cast<uint64_t>(dd) != 0 || a % static_cast<uint64_t>(dd) != 0) {
      // x = g^a; in GF(q^s) all roots exist iff dd | q^s - 1 and dd | a (q^s - 1)/(q - 1).
      BigInt qs = 1, q = static_cast<unsigned long>(f->order());
      for (int sdeg = 1; sdeg <= 64; ++sdeg) {
        qs *= q;
        BigInt ns = qs - 1;
        if (ns % dd == 0 && (BigInt(static_cast<unsigned long>(a)) * (ns / BigInt(static_cast<unsigned long>(n)))) % dd == 0) {
          int kk = sdeg * f->k();
          throw RootNotInField(std::to_string(dd) + "-th roots of " + x.to_string() + " need GF(" +
                                   std::to_string(f->p()) + "^" + std::to_string(kk) + ")",
                               kk);
        }
      }
      throw RootNotInField("roots lie in a very large extension", 0);
    }
    uint64_t g = static_cast<uint64_t>(dd);
    // Solve dd * b == a (mod n): one solution b0, the others b0 + i*n/dd.
    uint64_t n_g = n / g, d_g = static_cast<uint64_t>(dd) / g, a_g = a / g;
    BigInt inv, dm(static_cast<unsigned long>(d_g)), nm(static_cast<unsigned long>(n_g));
    uint64_t b0 = 0;
    if (n_g > 1) {
      mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), nm.get_mpz_t());
      BigInt b0z = BigInt(static_cast<unsigned long>(a_g)) * inv % nm;
      b0 = static_cast<uint64_t>(b0z.get_ui());
    }
    std::vector<Scalar> roots;
    for (uint64_t i = 0; i < static_cast<uint64_t>(dd); ++i) {
      uint64_t b = (b0 + i * (n / static_cast<uint64_t>(dd))) % n;
      roots.push_back(Scalar::finite(f, f->pow(f->primitive_element(), b)));
    }
    return roots;
  }
  // characteristic zero: c = q * u with q > 0 rational and u a root of unity
  long m = lcm_long(2, c.order());
  Scalar cm = c.pow(m);
  if (!cm.is_rational() || sgn(cm.rational_value()) <= 0)
    throw RootNotCyclotomic(c.to_string() + " is not a rational multiple of a root of unity");
  BigRational q;
  if (!rational_root(cm.rational_value(), m, q))
    throw RootNotCyclotomic(c.to_string() + " is not a rational multiple of a root of unity");
  Scalar u = c / Scalar(q);
  long j = -1;
  for (long t = 0; t < m; ++t)
    if (root_of_unity(field, m, t) == u) {
      j = t;
      break;
    }
  if (j < 0) throw RootNotCyclotomic(c.to_string() + " is not a rational multiple of a root of unity");
  BigRational r;
  if (!rational_root(q, d, r))
    throw RootNotCyclotomic("the " + std::to_string(d) + "-th root of " + q.get_str() + " is not rational");
  std::vector<Scalar> roots;
  for (long k = 0; k < d; ++k) roots.push_back(Scalar(r) * root_of_unity(field, m * d, j + m * k));
  return roots;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct ScalarOps {
  using Value = Scalar;
  const Field& field;
  Value number(const BigInt& n) { return field.from_integer(n); }
  template <class Fail>
  Value ident(const std::string& name, Fail fail) {
    if (field.is_finite()) {
      if (name == "t") {
        GaloisField::Elem e = field.galois()->zero();
        if (field.galois()->k() == 1) {
          e[0] = (field.galois()->p() - field.galois()->modulus()[0]) % field.galois()->p();
        } else {
          e[1] = 1;
        }
        return Scalar::finite(field.galois(), e);
      }
    } else if (name.size() > 1 && name[0] == 'z' &&
               std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      long n = std::stol(name.substr(1));
      if (n < 1 || n > 100000) fail("bad root of unity order");
      return root_of_unity(field, n, 1);
    }
    fail("unknown symbol '" + name + "'");
    return Scalar();
  }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  template <class Fail>
  Value div(Value a, Value b, Fail fail) {
    if (b.is_zero()) fail("division by zero");
    return a / b;
  }
  Value neg(Value a) { return -a; }
  template <class Fail>
  Value pow(Value a, long e, Fail fail) {
    if (e < 0 && a.is_zero()) fail("division by zero");
    return a.pow(e);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Field& field) {
  std::string_view body = text;
  size_t at = text.find('@');
  if (at != std::string_view::npos) {
    body = text.substr(0, at);
    std::string suffix(text.substr(at + 1));
    suffix.erase(std::remove_if(suffix.begin(), suffix.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                 suffix.end());
    if (!field.is_finite()) throw FieldMismatch("finite-field literal in characteristic zero");
    const auto& f = *field.galois();
    std::string a = "GF(" + std::to_string(f.p()) + ")";
    std::string b = "GF(" + std::to_string(f.p()) + "^" + std::to_string(f.k()) + ")";
    if (suffix != b && !(f.k() == 1 && suffix == a)) throw FieldMismatch(suffix + " vs " + f.to_string());
  }
  ScalarOps ops{field};
  detail::ExprParser<ScalarOps> parser(body, ops);
  return parser.parse_all();
}

}  // namespace binom
