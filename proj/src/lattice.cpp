#include "normone/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "normone/field.hpp"

namespace normone {

namespace {

constexpr long double kRelSlack = 1e-9L;
constexpr long double kAbsSlack = 1e-9L;

}  // namespace

Enumerator::Enumerator(const GramLD& gram, long double bound) : n_(static_cast<int>(gram.size())), q_(gram) {
  bound_ = bound * (1 + kRelSlack) + kAbsSlack;
  for (int i = 0; i < n_; ++i) {
    if (!(q_[i][i] > 0)) throw std::domain_error("Gram matrix is not positive definite");
    for (int j = i + 1; j < n_; ++j) {
      q_[j][i] = q_[i][j];
      q_[i][j] = q_[i][j] / q_[i][i];
    }
    for (int k = i + 1; k < n_; ++k)
      for (int l = k; l < n_; ++l) q_[k][l] -= q_[k][i] * q_[i][l];
  }
  long double r = std::sqrt(std::max(0.0L, bound_ / q_[n_ - 1][n_ - 1])) * (1 + kRelSlack) + kAbsSlack;
  top_hi_ = static_cast<i64>(std::floor(r));
  top_lo_ = -top_hi_;
}

void Enumerator::recurse(int i, Coeffs& x, long double partial, const std::function<void(const Coeffs&)>& cb) const {
  if (i < 0) {
    for (i64 v : x)
      if (v != 0) {
        cb(x);
        return;
      }
    return;
  }
  long double c = 0;
  for (int j = i + 1; j < n_; ++j) c += q_[i][j] * static_cast<long double>(x[j]);
  long double room = bound_ - partial;
  if (room < 0) return;
  long double r = std::sqrt(room / q_[i][i]) * (1 + kRelSlack) + kAbsSlack;
  i64 lo = static_cast<i64>(std::ceil(-c - r));
  i64 hi = static_cast<i64>(std::floor(-c + r));
  for (i64 v = lo; v <= hi; ++v) {
    long double t = static_cast<long double>(v) + c;
    long double np = partial + q_[i][i] * t * t;
    if (np > bound_) continue;
    x[i] = v;
    recurse(i - 1, x, np, cb);
  }
  x[i] = 0;
}

void Enumerator::run_slab(i64 top, const std::function<void(const Coeffs&)>& cb) const {
  Coeffs x(n_, 0);
  long double t = static_cast<long double>(top);
  long double partial = q_[n_ - 1][n_ - 1] * t * t;
  if (partial > bound_) return;
  x[n_ - 1] = top;
  recurse(n_ - 2, x, partial, cb);
}

void Enumerator::run(const std::function<void(const Coeffs&)>& cb) const {
  for (i64 top = top_lo_; top <= top_hi_; ++top) run_slab(top, cb);
}

GramLD to_long_double(const QMat& g) {
  GramLD out(g.size(), std::vector<long double>(g.size()));
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      out[i][j] = static_cast<long double>(g[i][j].get_num().get_d()) / static_cast<long double>(g[i][j].get_den().get_d());
  return out;
}

QMat trace_gram(const FieldDescriptor& F, const IdealHNF& I) {
  const NumberField& K = *F.K;
  auto b = I.basis();
  int n = K.degree();
  QMat g(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational v(big(K.trace(K.mul(b[i], F.tau_int(b[j])))), 2);
      v.canonicalize();
      g[i][j] = v;
      g[j][i] = v;
    }
  return g;
}

IVec combine(const FieldDescriptor& F, const IdealHNF& I, const Coeffs& c) {
  int n = F.K->degree();
  IVec out{};
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    for (int j = i; j < n; ++j) out[j] = checked_add(out[j], checked_mul(c[i], I.H[i][j]));
  }
  return out;
}

LatticeBasis minkowski_lattice(const FieldDescriptor& F, const IdealHNF& I) {
  if (I.ring != Ring::K) throw std::invalid_argument("minkowski_lattice expects an O_K ideal");
  LatticeBasis L;
  L.D = 2 * F.N;
  L.ideal = I;
  L.gram = trace_gram(F, I);
  for (const auto& b : I.basis()) {
    std::vector<double> col;
    for (int e = 0; e < F.N; ++e) {
      auto z = F.K->embed_approx(F.K->to_q(b), e);
      col.push_back(z.real());
      col.push_back(z.imag());
    }
    L.cols.push_back(col);
  }
  // |det| by Gaussian elimination in long double.
  int D = L.D;
  std::vector<std::vector<long double>> a(D, std::vector<long double>(D));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) a[i][j] = L.cols[j][i];
  long double det = 1;
  for (int c = 0; c < D; ++c) {
    int piv = c;
    for (int r = c + 1; r < D; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    std::swap(a[piv], a[c]);
    if (a[c][c] == 0) {
      det = 0;
      break;
    }
    det *= a[c][c];
    for (int r = c + 1; r < D; ++r) {
      long double f = a[r][c] / a[c][c];
      for (int k = c; k < D; ++k) a[r][k] -= f * a[c][k];
    }
  }
  L.det = static_cast<double>(std::fabs(det));
  L.det_closed_form = std::ldexp(static_cast<double>(I.norm()), -F.N) * std::sqrt(std::fabs(F.disc_K.get_d()));
  return L;
}

namespace {

Rational quad_form(const QMat& g, const Coeffs& c) {
  Rational s = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < c.size(); ++j) s += g[i][j] * big(c[i]) * big(c[j]);
  }
  return s;
}

}  // namespace

ShortestVector shortest_vector(const FieldDescriptor& F, const LatticeBasis& L) {
  Rational best_bound = L.gram[0][0];
  for (size_t i = 1; i < L.gram.size(); ++i)
    if (L.gram[i][i] < best_bound) best_bound = L.gram[i][i];
  Enumerator en(to_long_double(L.gram), best_bound.get_d());
  ShortestVector sv;
  bool found = false;
  Coeffs best;
  en.run([&](const Coeffs& c) {
    Rational q = quad_form(L.gram, c);
    if (!found || q < sv.length_sq || (q == sv.length_sq && c < best)) {
      sv.length_sq = q;
      best = c;
      found = true;
    }
  });
  if (!found) throw std::logic_error("shortest_vector: enumeration found nothing");
  sv.beta = combine(F, L.ideal, best);
  sv.lambda1 = std::sqrt(sv.length_sq.get_d());
  return sv;
}

i64 count_points(const FieldDescriptor& F, const LatticeBasis& L, long double radius_sq,
                 const std::function<bool(const IVec&)>& pred, std::vector<IVec>* points) {
  Enumerator en(to_long_double(L.gram), radius_sq);
  i64 count = 0;
  en.run([&](const Coeffs& c) {
    IVec b = combine(F, L.ideal, c);
    if (pred(b)) {
      ++count;
      if (points) points->push_back(b);
    }
  });
  return count;
}

void for_each_in_ball(const FieldDescriptor& F, const IdealHNF& I, long double radius_sq,
                      const std::function<void(const IVec&)>& cb) {
  Enumerator en(to_long_double(trace_gram(F, I)), radius_sq);
  en.run([&](const Coeffs& c) { cb(combine(F, I, c)); });
}

double error_certificate(int D, int M, double L, double lambda1) {
  double e = 1.5 * D * D;
  return 2.0 * std::pow(static_cast<double>(D), e) * M * std::pow(L / lambda1, D - 1);
}

}  // namespace normone
