#pragma once

// Exact integer utilities: checked 64-bit arithmetic, small factorisation,
// real quadratic numbers, polynomials over F_p and modular HNF.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "normone/numeric.hpp"

namespace normone {

using i64 = long;  // LP64; keeps gmpxx overloads unambiguous
using i128 = __int128;
using u64 = unsigned long;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer big(i64 x) { return Integer(static_cast<long>(x)); }

i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);
i64 narrow(i128 x);
i64 narrow(const Integer& z);
i64 floor_div(i64 a, i64 b);
i64 mod_floor(i64 a, i64 b);

struct XGcd {
  i64 g, s, t;  // g = s*a + t*b, g >= 0
};
XGcd xgcd(i64 a, i64 b);
i64 gcd64(i64 a, i64 b);

bool is_prime(u64 n);
std::vector<std::pair<u64, int>> factor_u64(u64 n);
bool is_squarefree(u64 n);
u64 squarefree_kernel(u64 n);  // squarefree part: n = kernel * square
std::vector<u64> primes_up_to(u64 n);
// Kronecker symbol (a/n) for n > 0.
int kronecker(i64 a, i64 n);

Rational parse_decimal(const std::string& s);  // exact, e.g. "6.2832"
std::string rational_str(const Rational& q);

// Real number p + q*sqrt(D) with D >= 0 squarefree (D = 0 means q is ignored).
struct QuadReal {
  Rational p = 0, q = 0;
  long D = 0;

  QuadReal() = default;
  QuadReal(Rational p_, Rational q_, long D_) : p(std::move(p_)), q(std::move(q_)), D(D_) {
    if (D == 0) q = 0;
  }
  static QuadReal rational(Rational r, long D_) { return QuadReal(std::move(r), 0, D_); }

  int sign() const;
  double to_double() const;
  Interval enclosure(mpfr_prec_t prec) const;

  friend QuadReal operator+(const QuadReal& a, const QuadReal& b);
  friend QuadReal operator-(const QuadReal& a, const QuadReal& b);
  friend QuadReal operator*(const QuadReal& a, const QuadReal& b);
  friend bool operator==(const QuadReal& a, const QuadReal& b) { return (a - b).sign() == 0; }
  friend bool operator<(const QuadReal& a, const QuadReal& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const QuadReal& a, const QuadReal& b) { return (a - b).sign() <= 0; }
  std::string str() const;
};

// Polynomials over F_p, coefficients low degree first, trimmed.
using PolyP = std::vector<u64>;

struct PolyFactor {
  PolyP g;       // monic irreducible factor
  int mult = 1;  // multiplicity
};
// Factorisation of a monic integer polynomial modulo a prime p.
std::vector<PolyFactor> factor_mod_p(const std::vector<i64>& f, u64 p);
int count_roots_mod_p(const std::vector<i64>& f, u64 p);

// Integer matrices as rows.
using Mat = std::vector<std::vector<i64>>;

// Canonical upper-triangular HNF (pivot of row i in column i, entries right
// of a pivot reduced into [0, pivot)) of the lattice spanned by `gens`,
// which must contain d*Z^n.
Mat hnf_mod(const Mat& gens, int n, i64 d);

// Rational Gaussian elimination helpers.
using QMat = std::vector<std::vector<Rational>>;
std::vector<Rational> solve_linear(QMat a, std::vector<Rational> b);  // square, nonsingular
std::vector<std::vector<Rational>> kernel_basis(QMat a);              // right kernel
Rational determinant(QMat a);

}  // namespace normone
