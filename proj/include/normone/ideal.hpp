#pragma once

// Integral ideals of O_k and O_K as HNF matrices over the power basis.

#include <string>
#include <utility>
#include <vector>

#include "normone/algebra.hpp"
#include "normone/number_field.hpp"

namespace normone {

class FieldDescriptor;

enum class Ring { k, K };

struct IdealHNF {
  Ring ring = Ring::K;
  Mat H;  // n x n upper triangular, canonical

  int dim() const { return static_cast<int>(H.size()); }
  i64 norm() const;
  bool is_unit() const { return norm() == 1; }
  std::vector<IVec> basis() const;
  std::string str() const;

  friend bool operator==(const IdealHNF& a, const IdealHNF& b) { return a.ring == b.ring && a.H == b.H; }
  friend bool operator!=(const IdealHNF& a, const IdealHNF& b) { return !(a == b); }
  friend bool operator<(const IdealHNF& a, const IdealHNF& b) {
    if (a.ring != b.ring) return a.ring < b.ring;
    return a.H < b.H;
  }
};

i64 int_det(const Mat& m);

IdealHNF unit_ideal(const NumberField& F, Ring ring);
IdealHNF ideal_from_element(const NumberField& F, Ring ring, const IVec& x);
IdealHNF ideal_from_generators(const NumberField& F, Ring ring, const std::vector<IVec>& gens);
IdealHNF ideal_from_hnf(const NumberField& F, Ring ring, const Mat& rows);  // validated
IdealHNF ideal_mul(const NumberField& F, const IdealHNF& a, const IdealHNF& b);
IdealHNF ideal_pow(const NumberField& F, const IdealHNF& a, int e);
IdealHNF ideal_add(const NumberField& F, const IdealHNF& a, const IdealHNF& b);
bool ideal_contains(const IdealHNF& I, const IVec& x);
bool ideal_contains(const IdealHNF& I, const IdealHNF& J);  // J subset of I
inline bool ideal_divides(const IdealHNF& I, const IdealHNF& J) { return ideal_contains(I, J); }

struct PrimeIdeal {
  IdealHNF ideal;
  u64 p = 0;
  int e = 1;  // ramification index over Q
  int f = 1;  // residue degree over Q
  i64 norm() const { return ideal.norm(); }
};

// Dedekind-Kummer factorisation of p in the monogenic order of F.
std::vector<PrimeIdeal> primes_above(const NumberField& F, Ring ring, u64 p);
int valuation(const NumberField& F, const IdealHNF& prime, const IdealHNF& I);
std::vector<std::pair<PrimeIdeal, int>> factor_ideal(const NumberField& F, Ring ring, const IdealHNF& I);

// Relative data for one rational prime.
struct LocalPrimes {
  u64 p = 0;
  std::vector<PrimeIdeal> K_primes;
  std::vector<PrimeIdeal> k_primes;
  std::vector<std::vector<std::pair<int, int>>> k_split;  // per k prime: (K prime index, e(q|Q))
  std::vector<int> K_below;                               // per K prime: index of the k prime below
  std::vector<int> ramified_index;                        // per K prime: index into ramified list or -1
};

struct MobiusTerm {
  IdealHNF ideal;  // over O_k
  int mu = 1;
  i64 norm = 1;
};

IdealHNF extend_to_K(const FieldDescriptor& F, const IdealHNF& A);
IdealHNF squarefree_part(const FieldDescriptor& F);
IdealHNF conj_ideal(const FieldDescriptor& F, const IdealHNF& I);

// Squarefree O_k ideals of norm <= X coprime to every ramified P_i, each once.
std::vector<MobiusTerm> mobius_enumerate(const FieldDescriptor& F, i64 X);

struct Decomposition {
  IdealHNF A;  // over O_k
  IdealHNF D;  // divides the squarefree ramified part
  IdealHNF B;  // in I_P
  unsigned D_mask = 0;  // bit i set iff p_i divides D
};

Decomposition decompose(const FieldDescriptor& F, const IVec& beta);
bool in_IP(const FieldDescriptor& F, const IdealHNF& B);

}  // namespace normone
