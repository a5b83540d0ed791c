#pragma once

// Sieved lattice counts for #S_K(I, H), the constant A_K and the Moebius
// identities behind it.

#include <vector>

#include "normone/angle.hpp"
#include "normone/domain.hpp"
#include "normone/field.hpp"
#include "normone/ideal.hpp"

namespace normone {

struct SieveRow {
  int class_index = 0;
  unsigned D_mask = 0;
  unsigned E_mask = 0;
  IdealHNF A;  // over O_k
  int mu_K = 1;
  int mu_k = 1;
  i64 count = 0;
};

struct CellCount {
  int class_index = 0;
  unsigned D_mask = 0;
  i64 count = 0;
};

struct SieveLedger {
  Rational truncation;  // H^(2N): terms with N(E) N(A)^2 above it are empty
  long terms = 0;
  long nonzero_terms = 0;
  std::vector<CellCount> cells;
  std::vector<SieveRow> rows;  // only when requested
};

struct SieveResult {
  i64 count = 0;
  SieveLedger ledger;
};

// C O_K D for a class representative and a subset of the ramified primes.
IdealHNF cell_ideal(const FieldDescriptor& F, int class_index, unsigned D_mask);
// T^(2N) = H^(2N) N(C O_K D).
Rational cell_T2N(const FieldDescriptor& F, int class_index, unsigned D_mask, const HeightBound& H);

// #(C O_K D E A O_K  intersect  S_{C,D}) for one arc product.
i64 count_term(const FieldDescriptor& F, int class_index, unsigned D_mask, unsigned E_mask, const IdealHNF& A,
               const ArcProduct& I, const HeightBound& H);

// Inclusion-exclusion over E | P and A coprime to the ramified primes.
i64 count_Zstar(const FieldDescriptor& F, int class_index, unsigned D_mask, const std::vector<ArcProduct>& I,
                const HeightBound& H, int threads = 1, SieveLedger* ledger = nullptr);

// Sum over classes and D | P. `I` is a disjoint union of arc products.
SieveResult count_SK(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H,
                     int threads = 0, bool keep_rows = false);

// zeta_k(2): closed form (zeta(2) L(2, chi) through the trigamma function).
double zeta_k2(const FieldDescriptor& F);
// Euler product over prime ideals of norm <= X with a bound on the omitted tail.
struct EulerProduct {
  double value = 0;
  double tail_bound = 0;
  u64 cutoff = 0;
};
EulerProduct zeta_k2_euler(const FieldDescriptor& F, u64 cutoff);

struct ConstantAK {
  double value = 0;
  double ramified_factor = 0;  // prod 2 N(P) / (N(P) + 1)
  double rel_disc_factor = 0;  // N(D)^(-1/2)
  double zeta_k2 = 0;
  double zeta_k2_euler = 0;
  double zeta_k2_euler_tail = 0;
};
ConstantAK constant_AK(const FieldDescriptor& F);

// A_K |I| H^(2N).
double main_term(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H);

struct MobiusIdentities {
  // sum_{E | P} mu_K(E) / N(E), exact, and prod (1 - 1/N(P))
  Rational sum_E;
  Rational prod_E;
  // truncated sum_{N(A) <= X} mu_k(A) / N(A)^2 and 1/zeta_k(2) prod (1 - N(P)^-2)^-1
  double sum_A = 0;
  double closed_A = 0;
  u64 cutoff = 0;
  // 2^s sum_E sum_A against prod 2N(P)/(N(P)+1) / zeta_k(2)
  double lhs_combined = 0;
  double rhs_combined = 0;
};
MobiusIdentities mobius_identities(const FieldDescriptor& F, u64 cutoff);

}  // namespace normone
