#pragma once

#include <string>
#include <vector>

#include "rep/rational.hpp"

namespace rep {

// Highest weight of an irreducible SO(k)-representation, stored at true rank
// floor(k/2). Entries are nonincreasing; for SO(2r) the last entry may be
// negative with e_{r-1} >= |e_r|, for SO(2r+1) the last entry is >= 0, and an
// SO(2) weight is a single unconstrained integer.
struct HighestWeight {
  int group_order = 2;               // k: the weight belongs to SO(k)
  std::vector<long long> entries;    // length floor(k/2)

  HighestWeight() = default;
  HighestWeight(int k, std::vector<long long> e) : group_order(k), entries(std::move(e)) {}

  static int rank_of(int k) { return k / 2; }
  int rank() const { return static_cast<int>(entries.size()); }

  bool is_valid() const;
  void check_valid() const;  // throws std::invalid_argument

  long long entry(int i) const { return entries.at(i - 1); }  // 1-based

  bool is_zero() const;

  // Comma-separated entries, e.g. "2,1" or "1,-1".
  std::string str() const;
  static HighestWeight parse(int group_order, const std::string& csv);

  friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
    return a.group_order == b.group_order && a.entries == b.entries;
  }
  friend bool operator!=(const HighestWeight& a, const HighestWeight& b) { return !(a == b); }
  friend bool operator<(const HighestWeight& a, const HighestWeight& b) {
    return a.entries < b.entries;  // lexicographic, same group assumed
  }
};

// Parameters shared by everything downstream: n, m = floor((n+1)/2),
// rho = n/2, and the padded sigma accessor (sigma_{m+1}=0 for n=2m,
// sigma_m=0 for n=2m-1).
struct ParamContext {
  int n;
  int m;
  Rational rho;

  explicit ParamContext(int n_);

  // 1-based, returns 0 beyond the true rank of sigma.
  long long sigma_padded(const HighestWeight& sigma, int k) const;
};

// Branching SO(k) -> SO(k-1): true iff `lower` occurs in the restriction of
// `upper` (classical interlacing inequalities).
bool branch_contains(const HighestWeight& upper, const HighestWeight& lower);

// sigma <= alpha for alpha a K=SO(n+1) type and sigma an M=SO(n) type.
bool k_contains_sigma(const HighestWeight& alpha, const HighestWeight& sigma,
                      const ParamContext& ctx);

// tau <= sigma for sigma an M=SO(n) type and tau an M_{e1}=SO(n-1) type.
bool sigma_contains_tau(const HighestWeight& sigma, const HighestWeight& tau,
                        const ParamContext& ctx);

// All tau <= sigma, lexicographically ordered.
std::vector<HighestWeight> enumerate_tau(const HighestWeight& sigma, const ParamContext& ctx);

// All K-types alpha >= sigma with alpha_1 <= bound, lexicographically ordered.
std::vector<HighestWeight> enumerate_ktypes(const HighestWeight& sigma, const ParamContext& ctx,
                                            long long bound);

// Dimension of the irreducible SO(k)-representation (Weyl dimension formula).
Int weyl_dim(const HighestWeight& w);

// <w + 2 rho_{so(k)}, w> with rho_{so(k)} = (k-2, k-4, ...)/2.
Rational casimir_eigenvalue(const HighestWeight& w);

}  // namespace rep
