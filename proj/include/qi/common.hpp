#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qi {

using i64 = std::int64_t;

// Exact rational on 64-bit parts. All quantities in this library are small
// (denominators bounded by centraliser orders, polynomial coefficients by
// character degrees), but every operation checks for overflow anyway.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  static i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rat: mul overflow");
    return r;
  }
  static i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rat: add overflow");
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    i64 g = std::gcd(a.den, b.den);
    i64 l = checked_mul(a.den / g, b.den);
    return Rat(checked_add(checked_mul(a.num, b.den / g), checked_mul(b.num, a.den / g)), l);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
  Rat operator-() const { return Rat(-num, den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    i64 g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    i64 g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rat(checked_mul(a.num / g1, b.num / g2), checked_mul(a.den / g2, b.den / g1));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return a * Rat(b.den, b.num);
  }
  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }

  bool is_int() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  // Representative in [0,1); this is reduction mod Z.
  Rat frac() const {
    i64 r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

using RatVec = std::vector<Rat>;
using IntVec = std::vector<i64>;
using IntMat = std::vector<IntVec>;

inline bool lt_ratvec(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].num * b[i].den != b[i].num * a[i].den)
      return a[i] < b[i];
  }
  return false;
}

// Polynomial in one variable with rational coefficients, dense from degree 0.
struct Poly {
  RatVec c;  // c[i] = coefficient of q^i

  Poly() = default;
  explicit Poly(Rat r) { if (!r.is_zero()) c = {r}; }
  static Poly monomial(Rat r, int deg) {
    Poly p;
    if (r.is_zero()) return p;
    p.c.assign(deg + 1, Rat(0));
    p.c[deg] = r;
    return p;
  }
  static Poly one() { return Poly(Rat(1)); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return c.empty() ? -1 : int(c.size()) - 1; }
  int valuation() const {
    for (size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) return int(i);
    return -1;
  }
  Rat lowest_coeff() const {
    int v = valuation();
    if (v < 0) throw std::domain_error("Poly: zero polynomial");
    return c[v];
  }
  Rat eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
  Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }

  // Exact division; throws if the remainder is nonzero.
  friend Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly rem = a, quot;
    quot.c.assign(a.c.size(), Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int d = rem.degree() - b.degree();
      Rat f = rem.c.back() / b.c.back();
      quot.c[d] += f;
      for (size_t i = 0; i < b.c.size(); ++i) rem.c[i + d] -= f * b.c[i];
      rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("Poly: inexact division");
    quot.trim();
    return quot;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

// q^b - q^a as a polynomial
inline Poly qpow_diff(int b, int a) {
  return Poly::monomial(Rat(1), b) - Poly::monomial(Rat(1), a);
}
inline Poly qpow_sum(int b, int a) {
  return Poly::monomial(Rat(1), b) + Poly::monomial(Rat(1), a);
}

// ---- small exact integer linear algebra (n <= 8 throughout) ----

// Solve M x = rhs over Q; M square nonsingular with integer entries.
RatVec solve_int(const IntMat& M, const RatVec& rhs);

// Determinant of an integer matrix, exact.
i64 det_int(const IntMat& M);

// Inverse of an integer matrix as rational matrix.
std::vector<RatVec> inverse_int(const IntMat& M);

// Hermite normal form basis of the lattice spanned by the rows of gens
// (rows may be redundant); returns a full-rank row basis, row-style HNF.
// All input rows must have integer entries after clearing a common
// denominator by the caller.
IntMat hnf_row_basis(IntMat gens, int ncols);

// Reduce vector v modulo the lattice spanned by the rows of hnf (full rank,
// output of hnf_row_basis with nrows == ncols). v rational; returns canonical
// representative with coordinates reduced by the lattice.
RatVec reduce_mod_lattice(RatVec v, const IntMat& hnf);

}  // namespace qi
