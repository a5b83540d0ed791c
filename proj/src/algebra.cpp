#include "normone/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace normone {

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
  return r;
}

i64 narrow(i128 x) {
  if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min())
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<i64>(x);
}

i64 narrow(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return z.get_si();
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 mod_floor(i64 a, i64 b) {
  i64 r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

XGcd xgcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  std::vector<std::pair<u64, int>> out;
  if (n <= 1) return out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(u64 n) {
  for (auto& [p, e] : factor_u64(n))
    if (e > 1) return false;
  return n != 0;
}

u64 squarefree_kernel(u64 n) {
  u64 k = 1;
  for (auto& [p, e] : factor_u64(n))
    if (e % 2 == 1) k *= p;
  return k;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

int kronecker(i64 a, i64 n) {
  if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    i64 am8 = mod_floor(a, 8);
    if (am8 % 2 == 0) return 0;
    if (am8 == 3 || am8 == 5) result = -result;
  }
  a = mod_floor(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Rational parse_decimal(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty number");
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ConfigError("malformed number: " + text);
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    size_t used = 0;
    try {
      exponent = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      throw ConfigError("malformed exponent: " + text);
    }
    i += used;
  }
  if (i != s.size()) throw ConfigError("malformed number: " + text);
  Integer num(digits, 10);
  Integer den = 1;
  long shift = exponent - scale;
  Integer ten = 10;
  Integer pw;
  mpz_pow_ui(pw.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0)
    num *= pw;
  else
    den = pw;
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

int QuadReal::sign() const {
  int sp = sgn(p);
  int sq = D == 0 ? 0 : sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 with q^2 D
  Rational lhs = p * p;
  Rational rhs = q * q * D;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sp : sq;
}

double QuadReal::to_double() const { return p.get_d() + (D == 0 ? 0.0 : q.get_d() * std::sqrt(static_cast<double>(D))); }

Interval QuadReal::enclosure(mpfr_prec_t prec) const {
  Interval r = Interval::from_rational(p, prec);
  if (D != 0 && q != 0)
    r = r + Interval::from_rational(q, prec) * Interval::from_integer(Integer(D), prec).sqrt();
  return r;
}

QuadReal operator+(const QuadReal& a, const QuadReal& b) {
  long D = a.D != 0 ? a.D : b.D;
  return QuadReal(a.p + b.p, a.q + b.q, D);
}

QuadReal operator-(const QuadReal& a, const QuadReal& b) {
  long D = a.D != 0 ? a.D : b.D;
  return QuadReal(a.p - b.p, a.q - b.q, D);
}

QuadReal operator*(const QuadReal& a, const QuadReal& b) {
  long D = a.D != 0 ? a.D : b.D;
  return QuadReal(a.p * b.p + a.q * b.q * D, a.p * b.q + a.q * b.p, D);
}

std::string QuadReal::str() const {
  if (D == 0 || q == 0) return p.get_str();
  return p.get_str() + (sgn(q) >= 0 ? "+" : "") + q.get_str() + "*sqrt(" + std::to_string(D) + ")";
}

// ---------------------------------------------------------------------------
// Polynomials over F_p.

namespace {

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

PolyP poly_sub(PolyP a, const PolyP& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

PolyP poly_mul(const PolyP& a, const PolyP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(c);
  return c;
}

// Returns quotient, remainder in `a`.
PolyP poly_divmod(PolyP& a, const PolyP& b, u64 p) {
  int db = deg(b);
  u64 lead_inv = inv_mod(b.back(), p);
  PolyP q;
  if (deg(a) >= db) q.assign(a.size() - b.size() + 1, 0);
  while (deg(a) >= db) {
    int shift = deg(a) - db;
    u64 c = mulmod(a.back(), lead_inv, p);
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  trim(q);
  return q;
}

PolyP poly_mod(PolyP a, const PolyP& m, u64 p) {
  poly_divmod(a, m, p);
  return a;
}

PolyP make_monic(PolyP a, u64 p) {
  if (a.empty()) return a;
  u64 inv = inv_mod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

PolyP poly_gcd(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

PolyP poly_powmod(PolyP base, u64 e, const PolyP& m, u64 p) {
  PolyP r{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

PolyP reduce_int_poly(const std::vector<i64>& f, u64 p) {
  PolyP a(f.size());
  for (size_t i = 0; i < f.size(); ++i) a[i] = static_cast<u64>(mod_floor(f[i], static_cast<i64>(p)));
  trim(a);
  return a;
}

// Roots of a squarefree product of distinct linear factors (Cantor-Zassenhaus).
void split_linear(const PolyP& g, u64 p, std::vector<u64>& roots) {
  if (deg(g) <= 0) return;
  if (deg(g) == 1) {
    roots.push_back((p - mulmod(g[0], inv_mod(g[1], p), p)) % p);
    return;
  }
  for (u64 a = 1;; ++a) {
    PolyP h = poly_powmod(PolyP{a % p, 1}, (p - 1) / 2, g, p);
    h = poly_sub(h, PolyP{1}, p);
    PolyP d = poly_gcd(g, h, p);
    if (deg(d) > 0 && deg(d) < deg(g)) {
      PolyP rest = g;
      PolyP q = poly_divmod(rest, d, p);
      split_linear(d, p, roots);
      split_linear(q, p, roots);
      return;
    }
  }
}

std::vector<u64> distinct_roots(const PolyP& f, u64 p) {
  std::vector<u64> roots;
  if (p <= 64) {
    for (u64 r = 0; r < p; ++r) {
      u64 v = 0;
      for (size_t i = f.size(); i-- > 0;) v = (mulmod(v, r, p) + f[i]) % p;
      if (v == 0) roots.push_back(r);
    }
    return roots;
  }
  PolyP xp = poly_powmod(PolyP{0, 1}, p, f, p);
  PolyP g = poly_gcd(f, poly_sub(xp, PolyP{0, 1}, p), p);
  split_linear(g, p, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

int divide_out(PolyP& f, const PolyP& g, u64 p) {
  int m = 0;
  for (;;) {
    PolyP r = f;
    PolyP q = poly_divmod(r, g, p);
    if (!r.empty()) break;
    f = q;
    ++m;
  }
  return m;
}

}  // namespace

std::vector<PolyFactor> factor_mod_p(const std::vector<i64>& fint, u64 p) {
  if (p >= (1ULL << 31)) throw std::invalid_argument("factor_mod_p: prime too large");
  PolyP f = reduce_int_poly(fint, p);
  if (f.empty() || f.back() != 1) throw std::invalid_argument("factor_mod_p: polynomial must be monic");
  if (deg(f) > 4) throw std::invalid_argument("factor_mod_p: degree above 4 unsupported");
  std::vector<PolyFactor> out;
  if (deg(f) == 0) return out;
  for (u64 r : distinct_roots(f, p)) {
    PolyP lin{(p - r) % p, 1};
    int m = divide_out(f, lin, p);
    out.push_back({lin, m});
  }
  if (deg(f) <= 0) return out;
  if (deg(f) <= 3) {
    out.push_back({f, 1});
    return out;
  }
  // Degree 4 with no roots: irreducible, product of two quadratics, or a square.
  if (p <= 13) {
    for (u64 b = 0; b < p && deg(f) > 0; ++b) {
      for (u64 c = 0; c < p && deg(f) > 0; ++c) {
        PolyP q{c, b, 1};
        bool has_root = false;
        for (u64 r = 0; r < p; ++r)
          if ((mulmod(r, r, p) + mulmod(b, r, p) + c) % p == 0) has_root = true;
        if (has_root) continue;
        int m = divide_out(f, q, p);
        if (m > 0) out.push_back({q, m});
      }
    }
    if (deg(f) > 0) out.push_back({f, 1});
    return out;
  }
  PolyP xp = poly_powmod(PolyP{0, 1}, p, f, p);
  // x^{p^2} = (x^p)^p mod f
  PolyP xp2 = poly_powmod(xp, p, f, p);
  PolyP q = poly_gcd(f, poly_sub(xp2, PolyP{0, 1}, p), p);
  if (deg(q) == 0) {
    out.push_back({f, 1});
  } else if (deg(q) == 2) {
    out.push_back({q, 2});
  } else {
    for (u64 a = 1;; ++a) {
      u64 e = static_cast<u64>((static_cast<unsigned __int128>(p) * p - 1) / 2);
      PolyP h = poly_sub(poly_powmod(PolyP{a % p, 1}, e, f, p), PolyP{1}, p);
      PolyP d = poly_gcd(f, h, p);
      if (deg(d) == 2) {
        PolyP rest = f;
        PolyP other = poly_divmod(rest, d, p);
        out.push_back({d, 1});
        out.push_back({make_monic(other, p), 1});
        break;
      }
    }
  }
  return out;
}

int count_roots_mod_p(const std::vector<i64>& fint, u64 p) {
  PolyP f = reduce_int_poly(fint, p);
  return static_cast<int>(distinct_roots(f, p).size());
}

// ---------------------------------------------------------------------------
// HNF modulo d.

Mat hnf_mod(const Mat& gens, int n, i64 d) {
  if (d <= 0) throw std::invalid_argument("hnf_mod: modulus must be positive");
  auto reduce = [d](i128 x) -> i64 {
    i128 r = x % d;
    if (r < 0) r += d;
    return static_cast<i64>(r);
  };
  std::vector<std::vector<i64>> vecs;
  vecs.reserve(gens.size() + n);
  for (const auto& g : gens) {
    std::vector<i64> v(n);
    bool nz = false;
    for (int j = 0; j < n; ++j) {
      v[j] = reduce(g[j]);
      nz = nz || v[j] != 0;
    }
    if (nz) vecs.push_back(std::move(v));
  }
  Mat H(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) {
    std::vector<i64> r(n, 0);
    r[i] = d;
    for (auto& v : vecs) {
      if (v[i] == 0) continue;
      XGcd e = xgcd(r[i], v[i]);
      i64 a = r[i] / e.g, b = v[i] / e.g;
      std::vector<i64> nr(n, 0), nv(n, 0);
      for (int j = i; j < n; ++j) {
        nr[j] = reduce(static_cast<i128>(e.s) * r[j] + static_cast<i128>(e.t) * v[j]);
        nv[j] = reduce(static_cast<i128>(a) * v[j] - static_cast<i128>(b) * r[j]);
      }
      nr[i] = e.g;  // exact gcd, not reduced (it may equal d)
      nv[i] = 0;
      r = std::move(nr);
      v = std::move(nv);
    }
    H[i] = r;
    std::vector<i64> extra(n, 0);
    bool nz = false;
    i64 mult = d / r[i];
    for (int j = i + 1; j < n; ++j) {
      extra[j] = reduce(static_cast<i128>(mult) * r[j]);
      nz = nz || extra[j] != 0;
    }
    std::vector<std::vector<i64>> next;
    next.reserve(vecs.size() + 1);
    for (auto& v : vecs) {
      bool any = false;
      for (int j = i + 1; j < n; ++j) any = any || v[j] != 0;
      if (any) next.push_back(std::move(v));
    }
    if (nz) next.push_back(std::move(extra));
    vecs = std::move(next);
  }
  for (int i = n - 2; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      i64 q = floor_div(H[i][j], H[j][j]);
      if (q == 0) continue;
      for (int k = j; k < n; ++k) H[i][k] = narrow(static_cast<i128>(H[i][k]) - static_cast<i128>(q) * H[j][k]);
    }
  }
  return H;
}

// ---------------------------------------------------------------------------
// Rational linear algebra.

std::vector<Rational> solve_linear(QMat a, std::vector<Rational> b) {
  size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::domain_error("solve_linear: singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<std::vector<Rational>> kernel_basis(QMat a) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (size_t k = 0; k < cols; ++k) a[r][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(QMat a) {
  size_t n = a.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace normone
