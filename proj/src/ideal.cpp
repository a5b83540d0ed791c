#include "normone/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "normone/field.hpp"

namespace normone {

i64 IdealHNF::norm() const {
  i64 n = 1;
  for (int i = 0; i < dim(); ++i) n = checked_mul(n, H[i][i]);
  return n;
}

std::vector<IVec> IdealHNF::basis() const {
  std::vector<IVec> out;
  for (const auto& row : H) {
    IVec v{};
    for (size_t j = 0; j < row.size(); ++j) v[j] = row[j];
    out.push_back(v);
  }
  return out;
}

std::string IdealHNF::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < dim(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < dim(); ++j) os << (j ? "," : "") << H[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

i64 int_det(const Mat& m) {
  // Bareiss fraction-free elimination.
  int n = static_cast<int>(m.size());
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return narrow(sign * a[n - 1][n - 1]);
}

IdealHNF unit_ideal(const NumberField& F, Ring ring) {
  IdealHNF I;
  I.ring = ring;
  I.H.assign(F.degree(), std::vector<i64>(F.degree(), 0));
  for (int i = 0; i < F.degree(); ++i) I.H[i][i] = 1;
  return I;
}

IdealHNF ideal_from_element(const NumberField& F, Ring ring, const IVec& x) {
  if (F.is_zero(x)) throw std::domain_error("ideal of zero");
  Mat rows = F.mul_rows(x);
  i64 d = int_det(rows);
  if (d < 0) d = -d;
  IdealHNF I;
  I.ring = ring;
  I.H = hnf_mod(rows, F.degree(), d);
  return I;
}

IdealHNF ideal_from_generators(const NumberField& F, Ring ring, const std::vector<IVec>& gens) {
  i64 d = 0;
  Mat rows;
  for (const auto& g : gens) {
    if (F.is_zero(g)) continue;
    Mat r = F.mul_rows(g);
    i64 nd = int_det(r);
    d = gcd64(d, nd);
    for (auto& row : r) rows.push_back(row);
  }
  if (d == 0) throw std::domain_error("ideal generated by zero");
  IdealHNF I;
  I.ring = ring;
  I.H = hnf_mod(rows, F.degree(), d);
  return I;
}

IdealHNF ideal_from_hnf(const NumberField& F, Ring ring, const Mat& rows) {
  int n = F.degree();
  if (static_cast<int>(rows.size()) != n) throw ConfigError("ideal HNF must be square of the field degree");
  i64 d = 1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw ConfigError("ideal HNF row has wrong length");
    if (rows[i][i] <= 0) throw ConfigError("ideal HNF needs positive diagonal");
    d = checked_mul(d, rows[i][i]);
  }
  IdealHNF I;
  I.ring = ring;
  I.H = hnf_mod(rows, n, d);
  if (I.norm() != d) throw ConfigError("ideal HNF rows are not upper triangular");
  // Closure under multiplication by theta.
  for (const auto& b : I.basis()) {
    IVec th{};
    if (n > 1) th[1] = 1;
    IVec v = n > 1 ? F.mul(b, th) : b;
    if (!ideal_contains(I, v)) throw ConfigError("matrix does not describe an ideal: " + I.str());
  }
  return I;
}

IdealHNF ideal_mul(const NumberField& F, const IdealHNF& a, const IdealHNF& b) {
  if (a.ring != b.ring) throw std::invalid_argument("ideal ring mismatch");
  Mat rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      IVec z = F.mul(x, y);
      rows.emplace_back(z.begin(), z.begin() + F.degree());
    }
  IdealHNF I;
  I.ring = a.ring;
  I.H = hnf_mod(rows, F.degree(), checked_mul(a.norm(), b.norm()));
  return I;
}

IdealHNF ideal_pow(const NumberField& F, const IdealHNF& a, int e) {
  IdealHNF r = unit_ideal(F, a.ring);
  for (int i = 0; i < e; ++i) r = ideal_mul(F, r, a);
  return r;
}

IdealHNF ideal_add(const NumberField& F, const IdealHNF& a, const IdealHNF& b) {
  if (a.ring != b.ring) throw std::invalid_argument("ideal ring mismatch");
  Mat rows = a.H;
  for (const auto& r : b.H) rows.push_back(r);
  IdealHNF I;
  I.ring = a.ring;
  I.H = hnf_mod(rows, F.degree(), gcd64(a.norm(), b.norm()));
  return I;
}

bool ideal_contains(const IdealHNF& I, const IVec& x) {
  int n = I.dim();
  IVec v = x;
  for (int i = 0; i < n; ++i) {
    if (v[i] % I.H[i][i] != 0) return false;
    i64 c = v[i] / I.H[i][i];
    if (c == 0) continue;
    for (int j = i; j < n; ++j) v[j] = narrow(static_cast<i128>(v[j]) - static_cast<i128>(c) * I.H[i][j]);
  }
  return true;
}

bool ideal_contains(const IdealHNF& I, const IdealHNF& J) {
  if (I.ring != J.ring) throw std::invalid_argument("ideal ring mismatch");
  if (J.norm() % I.norm() != 0) return false;
  for (const auto& b : J.basis())
    if (!ideal_contains(I, b)) return false;
  return true;
}

std::vector<PrimeIdeal> primes_above(const NumberField& F, Ring ring, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("primes_above: not a prime");
  int n = F.degree();
  std::vector<PrimeIdeal> out;
  for (const auto& fac : factor_mod_p(F.poly(), p)) {
    // g(theta) in the order
    IVec g{};
    IVec pw = F.one();
    IVec th{};
    if (n > 1) th[1] = 1;
    for (size_t i = 0; i < fac.g.size(); ++i) {
      g = F.add(g, F.scale(pw, static_cast<i64>(fac.g[i])));
      if (n > 1) pw = F.mul(pw, th);
      else pw = IVec{};  // theta = 0 in degree 1
    }
    Mat rows = F.mul_rows(g);
    for (int j = 0; j < n; ++j) {
      std::vector<i64> r(n, 0);
      r[j] = static_cast<i64>(p);
      rows.push_back(r);
    }
    PrimeIdeal P;
    P.ideal.ring = ring;
    P.ideal.H = hnf_mod(rows, n, static_cast<i64>(p));
    P.p = p;
    P.e = fac.mult;
    P.f = static_cast<int>(fac.g.size()) - 1;
    out.push_back(std::move(P));
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.ideal < b.ideal; });
  return out;
}

int valuation(const NumberField& F, const IdealHNF& prime, const IdealHNF& I) {
  int v = 0;
  IdealHNF pw = prime;
  i64 pn = prime.norm();
  i64 rest = I.norm();
  while (rest % pn == 0 && ideal_contains(pw, I)) {
    ++v;
    rest /= pn;
    if (rest % pn != 0) break;
    pw = ideal_mul(F, pw, prime);
  }
  return v;
}

std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const NumberField& F, Ring ring, const IdealHNF& I) {
  std::vector<std::pair<PrimeIdeal, int>> out;
  i64 check = 1;
  for (auto& [p, e] : factor_u64(static_cast<u64>(I.norm()))) {
    (void)e;
    for (auto& P : primes_above(F, ring, p)) {
      int v = valuation(F, P.ideal, I);
      if (v > 0) {
        for (int i = 0; i < v; ++i) check = checked_mul(check, P.norm());
        out.emplace_back(P, v);
      }
    }
  }
  if (check != I.norm()) throw std::logic_error("ideal factorisation does not reproduce the norm");
  return out;
}

// ---------------------------------------------------------------------------
// Relative operations.

IdealHNF extend_to_K(const FieldDescriptor& F, const IdealHNF& A) {
  if (A.ring != Ring::k) throw std::invalid_argument("extend_to_K expects an O_k ideal");
  std::vector<IVec> gens;
  for (const auto& b : A.basis()) gens.push_back(F.k_to_K(b));
  Mat rows;
  for (const auto& g : gens) {
    Mat r = F.K->mul_rows(g);
    for (auto& row : r) rows.push_back(row);
  }
  IdealHNF I;
  I.ring = Ring::K;
  I.H = hnf_mod(rows, F.K->degree(), A.norm());
  return I;
}

IdealHNF squarefree_part(const FieldDescriptor& F) {
  IdealHNF P = unit_ideal(*F.K, Ring::K);
  for (const auto& r : F.ramified) P = ideal_mul(*F.K, P, r.p);
  return P;
}

IdealHNF conj_ideal(const FieldDescriptor& F, const IdealHNF& I) {
  if (I.ring != Ring::K) throw std::invalid_argument("conj_ideal expects an O_K ideal");
  Mat rows;
  for (const auto& b : I.basis()) {
    IVec t = F.tau_int(b);
    rows.emplace_back(t.begin(), t.begin() + F.K->degree());
  }
  IdealHNF J;
  J.ring = Ring::K;
  J.H = hnf_mod(rows, F.K->degree(), I.norm());
  return J;
}

std::vector<MobiusTerm> mobius_enumerate(const FieldDescriptor& F, i64 X) {
  std::vector<MobiusTerm> out;
  if (X < 1) return out;
  std::vector<PrimeIdeal> primes;
  for (u64 p : primes_up_to(static_cast<u64>(X))) {
    for (auto& Q : primes_above(*F.k, Ring::k, p)) {
      if (Q.norm() > X) continue;
      bool ram = false;
      for (const auto& r : F.ramified)
        if (r.P == Q.ideal) ram = true;
      if (!ram) primes.push_back(Q);
    }
  }
  std::sort(primes.begin(), primes.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    return a.ideal < b.ideal;
  });
  std::function<void(size_t, const IdealHNF&, i64, int)> rec = [&](size_t start, const IdealHNF& cur, i64 nrm, int mu) {
    out.push_back({cur, mu, nrm});
    for (size_t i = start; i < primes.size(); ++i) {
      i64 pn = primes[i].norm();
      if (nrm > X / pn) break;
      rec(i + 1, ideal_mul(*F.k, cur, primes[i].ideal), nrm * pn, -mu);
    }
  };
  rec(0, unit_ideal(*F.k, Ring::k), 1, 1);
  std::sort(out.begin(), out.end(), [](const MobiusTerm& a, const MobiusTerm& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.ideal < b.ideal;
  });
  return out;
}

Decomposition decompose(const FieldDescriptor& F, const IVec& beta) {
  const NumberField& K = *F.K;
  IdealHNF I = ideal_from_element(K, Ring::K, beta);
  Decomposition out;
  out.A = unit_ideal(*F.k, Ring::k);
  out.D = unit_ideal(K, Ring::K);
  out.B = unit_ideal(K, Ring::K);
  for (auto& [p, e] : factor_u64(static_cast<u64>(I.norm()))) {
    (void)e;
    const LocalPrimes& L = F.local(p);
    std::vector<int> v(L.K_primes.size(), 0);
    for (size_t i = 0; i < L.K_primes.size(); ++i) v[i] = valuation(K, L.K_primes[i].ideal, I);
    for (size_t q = 0; q < L.k_primes.size(); ++q) {
      int ord = 1 << 30;
      for (auto& [idx, eq] : L.k_split[q]) ord = std::min(ord, v[idx] / eq);
      if (ord == (1 << 30)) ord = 0;
      if (ord > 0) {
        out.A = ideal_mul(*F.k, out.A, ideal_pow(*F.k, L.k_primes[q].ideal, ord));
        for (auto& [idx, eq] : L.k_split[q]) v[idx] -= ord * eq;
      }
    }
    for (size_t i = 0; i < L.K_primes.size(); ++i) {
      if (v[i] == 0) continue;
      int r = L.ramified_index[i];
      if (r >= 0) {
        if (v[i] != 1) throw std::logic_error("decompose: ramified exponent above 1");
        out.D = ideal_mul(K, out.D, L.K_primes[i].ideal);
        out.D_mask |= 1u << r;
      } else {
        out.B = ideal_mul(K, out.B, ideal_pow(K, L.K_primes[i].ideal, v[i]));
      }
    }
  }
  return out;
}

bool in_IP(const FieldDescriptor& F, const IdealHNF& B) {
  const NumberField& K = *F.K;
  for (auto& [p, e] : factor_u64(static_cast<u64>(B.norm()))) {
    (void)e;
    const LocalPrimes& L = F.local(p);
    std::vector<int> v(L.K_primes.size(), 0);
    for (size_t i = 0; i < L.K_primes.size(); ++i) {
      v[i] = valuation(K, L.K_primes[i].ideal, B);
      if (v[i] > 0 && L.ramified_index[i] >= 0) return false;
    }
    for (size_t q = 0; q < L.k_primes.size(); ++q) {
      bool all = true;
      for (auto& [idx, eq] : L.k_split[q])
        if (v[idx] < eq) all = false;
      if (all) return false;
    }
  }
  return true;
}

}  // namespace normone
