#pragma once

// Power-basis arithmetic in Z[theta] = O (monogenic orders only) together with
// certified enclosures of selected complex embeddings.

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "normone/algebra.hpp"
#include "normone/numeric.hpp"

namespace normone {

inline constexpr int kMaxDegree = 4;

using IVec = std::array<i64, kMaxDegree>;  // integral element, unused slots zero
using QVec = std::vector<Rational>;        // element of the field, power-basis coordinates

struct EmbeddingApprox {
  std::complex<double> value;
  double err = 0;  // |value - exact| <= err
};

class NumberField {
 public:
  // `poly` is monic, coefficients low degree first. `roots` holds approximate
  // values of theta under the embeddings that should be certified (may be
  // empty when no complex embeddings are needed).
  NumberField(std::vector<i64> poly, std::vector<std::complex<double>> roots);

  int degree() const { return n_; }
  const std::vector<i64>& poly() const { return poly_; }
  const IVec& power(int k) const { return powers_.at(k); }  // theta^k, k <= 3n-3
  i64 trace_power(int k) const { return traces_.at(k); }    // Tr(theta^k), k <= 2n-2
  Integer discriminant() const { return disc_; }

  // Integral arithmetic (throws on 64-bit overflow).
  IVec mul(const IVec& a, const IVec& b) const;
  IVec add(const IVec& a, const IVec& b) const;
  IVec sub(const IVec& a, const IVec& b) const;
  IVec neg(const IVec& a) const;
  IVec scale(const IVec& a, i64 s) const;
  i64 trace(const IVec& a) const;
  IVec one() const;
  bool is_zero(const IVec& a) const;
  // Multiplication-by-a matrix, rows = coordinates of a*theta^j.
  Mat mul_rows(const IVec& a) const;

  // Rational arithmetic.
  QVec qmul(const QVec& a, const QVec& b) const;
  QVec qadd(const QVec& a, const QVec& b) const;
  QVec qsub(const QVec& a, const QVec& b) const;
  QVec qscale(const QVec& a, const Rational& s) const;
  QVec qinv(const QVec& a) const;  // throws std::domain_error on zero
  QVec qone() const;
  QVec qzero() const;
  bool qis_zero(const QVec& a) const;
  Rational qnorm(const QVec& a) const;  // N_{field/Q}
  Rational qtrace(const QVec& a) const;
  QVec to_q(const IVec& a) const;
  bool is_integral(const QVec& a) const;
  IVec to_int(const QVec& a) const;  // requires integral

  // Embeddings.
  int num_embeddings() const { return static_cast<int>(approx_roots_.size()); }
  // Enclosures of theta^j (j < n) under embedding e at the given precision.
  const std::vector<ComplexInterval>& theta_powers(int e, mpfr_prec_t prec) const;
  // Double approximations of theta^j with error bounds.
  const std::vector<EmbeddingApprox>& theta_powers_d(int e) const { return fast_.at(e); }

  ComplexInterval embed(const QVec& a, int e, mpfr_prec_t prec) const;
  ComplexInterval embed(const IVec& a, int e, mpfr_prec_t prec) const;
  EmbeddingApprox embed_d(const IVec& a, int e) const;
  std::complex<double> embed_approx(const QVec& a, int e) const;

 private:
  std::vector<std::vector<ComplexInterval>> certify_roots(mpfr_prec_t prec) const;

  int n_;
  std::vector<i64> poly_;
  std::vector<IVec> powers_;
  std::vector<i64> traces_;
  Integer disc_;
  std::vector<std::complex<double>> approx_roots_;
  std::vector<std::vector<EmbeddingApprox>> fast_;
  mutable std::mutex cache_mutex_;
  mutable std::map<mpfr_prec_t, std::vector<std::vector<ComplexInterval>>> cache_;
};

}  // namespace normone
