#include "rep/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace rep {

bool HighestWeight::is_valid() const {
  int k = group_order;
  if (k < 1) return false;
  if (static_cast<int>(entries.size()) != rank_of(k)) return false;
  int r = rank();
  if (r == 0) return true;
  if (k == 2) return true;  // single unconstrained integer
  for (int i = 0; i + 1 < r; ++i)
    if (entries[i] < entries[i + 1]) return false;
  if (k % 2 == 1) {
    if (entries[r - 1] < 0) return false;  // SO(2r+1)
  } else {
    if (r >= 2 && entries[r - 2] < std::llabs(entries[r - 1])) return false;  // SO(2r)
  }
  return true;
}

void HighestWeight::check_valid() const {
  if (!is_valid())
    throw std::invalid_argument("invalid SO(" + std::to_string(group_order) +
                                ") highest weight (" + str() + ")");
}

bool HighestWeight::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](long long e) { return e == 0; });
}

std::string HighestWeight::str() const {
  std::string s;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries[i]);
  }
  return s;
}

HighestWeight HighestWeight::parse(int group_order, const std::string& csv) {
  HighestWeight w;
  w.group_order = group_order;
  if (!csv.empty()) {
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad weight entry '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("bad weight entry '" + tok + "'");
      w.entries.push_back(v);
    }
  }
  w.check_valid();
  return w;
}

ParamContext::ParamContext(int n_) : n(n_), m((n_ + 1) / 2), rho(n_, 2) {
  if (n <= 1) throw std::invalid_argument("ParamContext: n > 1 required");
}

long long ParamContext::sigma_padded(const HighestWeight& sigma, int k) const {
  if (sigma.group_order != n)
    throw std::invalid_argument("sigma_padded: sigma is not an SO(n) weight");
  if (k < 1) throw std::invalid_argument("sigma_padded: index must be >= 1");
  if (k > sigma.rank()) return 0;
  return sigma.entries[k - 1];
}

namespace {

void check_branch_ranks(const HighestWeight& upper, const HighestWeight& lower) {
  upper.check_valid();
  if (lower.group_order != upper.group_order - 1)
    throw std::invalid_argument("branching: group orders must be adjacent");
  lower.check_valid();
}

}  // namespace

bool branch_contains(const HighestWeight& upper, const HighestWeight& lower) {
  check_branch_ranks(upper, lower);
  int k = upper.group_order;
  const auto& w = upper.entries;
  const auto& v = lower.entries;
  int r = upper.rank();
  if (k % 2 == 1) {
    // SO(2r+1) -> SO(2r): w1 >= v1 >= w2 >= ... >= wr >= |vr|
    for (int i = 0; i < r; ++i) {
      if (w[i] < v[i] && i < r - 1) return false;
      if (i < r - 1 && v[i] < w[i + 1]) return false;
    }
    return w[r - 1] >= std::llabs(v[r - 1]);
  }
  // SO(2r) -> SO(2r-1): w1 >= v1 >= w2 >= ... >= v_{r-1} >= |wr|
  if (r == 1) return true;  // SO(2) -> SO(1)
  for (int i = 0; i + 1 < r; ++i) {
    if (w[i] < v[i]) return false;
    long long next = (i + 2 < r) ? w[i + 1] : std::llabs(w[r - 1]);
    if (v[i] < next) return false;
  }
  return true;
}

bool k_contains_sigma(const HighestWeight& alpha, const HighestWeight& sigma,
                      const ParamContext& ctx) {
  if (alpha.group_order != ctx.n + 1 || sigma.group_order != ctx.n)
    throw std::invalid_argument("k_contains_sigma: ranks do not match context");
  return branch_contains(alpha, sigma);
}

bool sigma_contains_tau(const HighestWeight& sigma, const HighestWeight& tau,
                        const ParamContext& ctx) {
  if (sigma.group_order != ctx.n || tau.group_order != ctx.n - 1)
    throw std::invalid_argument("sigma_contains_tau: ranks do not match context");
  return branch_contains(sigma, tau);
}

namespace {

// Enumerates, in ascending lexicographic order, all SO(k-1) weights contained
// in `upper` (an SO(k) weight).
std::vector<HighestWeight> enumerate_lower(const HighestWeight& upper) {
  upper.check_valid();
  int k = upper.group_order;
  const auto& w = upper.entries;
  int r = upper.rank();
  std::vector<HighestWeight> out;
  std::vector<long long> cur;
  if (k % 2 == 1) {
    // lower lives in SO(2r): v_i in [w_{i+1}, w_i] for i<r, v_r in [-w_r, w_r]
    auto rec = [&](auto&& self, int i) -> void {
      if (i == r) {
        out.emplace_back(k - 1, cur);
        return;
      }
      long long lo = (i == r - 1) ? -w[r - 1] : w[i + 1];
      long long hi = w[i];
      for (long long v = lo; v <= hi; ++v) {
        cur.push_back(v);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  } else {
    // lower lives in SO(2r-1), rank r-1: v_i in [w_{i+1}, w_i], last uses |w_r|
    auto rec = [&](auto&& self, int i) -> void {
      if (i == r - 1) {
        out.emplace_back(k - 1, cur);
        return;
      }
      long long lo = (i == r - 2) ? std::llabs(w[r - 1]) : w[i + 1];
      long long hi = w[i];
      for (long long v = lo; v <= hi; ++v) {
        cur.push_back(v);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace

std::vector<HighestWeight> enumerate_tau(const HighestWeight& sigma, const ParamContext& ctx) {
  if (sigma.group_order != ctx.n)
    throw std::invalid_argument("enumerate_tau: sigma is not an SO(n) weight");
  return enumerate_lower(sigma);
}

std::vector<HighestWeight> enumerate_ktypes(const HighestWeight& sigma, const ParamContext& ctx,
                                            long long bound) {
  if (sigma.group_order != ctx.n)
    throw std::invalid_argument("enumerate_ktypes: sigma is not an SO(n) weight");
  sigma.check_valid();
  const auto& s = sigma.entries;
  int rk = HighestWeight::rank_of(ctx.n + 1);  // = m
  std::vector<HighestWeight> out;
  std::vector<long long> cur;
  // alpha interlaces sigma from above; alpha_1 additionally capped by `bound`.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rk) {
      out.emplace_back(ctx.n + 1, cur);
      return;
    }
    long long lo, hi;
    if (ctx.n % 2 == 0) {
      // K = SO(n+1) odd-order: alpha_1>=s_1>=alpha_2>=...>=s_{m-1}>=alpha_m>=|s_m|
      lo = (i == rk - 1) ? std::llabs(s[rk - 1]) : s[i];
      hi = (i == 0) ? bound : s[i - 1];
    } else {
      // K = SO(n+1) even-order: alpha_1>=s_1>=...>=s_{m-1}>=|alpha_m|
      if (i == rk - 1) {
        long long c = (rk >= 2) ? s[rk - 2] : bound;
        lo = -c;
        hi = c;
      } else {
        lo = s[i];
        hi = (i == 0) ? bound : s[i - 1];
      }
    }
    for (long long v = lo; v <= hi; ++v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Int weyl_dim(const HighestWeight& w) {
  w.check_valid();
  int k = w.group_order;
  int r = w.rank();
  if (k <= 2) return 1;
  Rational dim = 1;
  if (k % 2 == 1) {
    // B_r with doubled coordinates: L_i = 2w_i + 2(r-i)+1
    std::vector<long long> L(r), M(r);
    for (int i = 0; i < r; ++i) {
      L[i] = 2 * w.entries[i] + 2 * (r - i) - 1;
      M[i] = 2 * (r - i) - 1;
    }
    for (int i = 0; i < r; ++i) {
      dim *= Rational(L[i], M[i]);
      for (int j = i + 1; j < r; ++j)
        dim *= Rational(L[i] * L[i] - L[j] * L[j], M[i] * M[i] - M[j] * M[j]);
    }
  } else {
    // D_r: l_i = w_i + r - i
    std::vector<long long> L(r), M(r);
    for (int i = 0; i < r; ++i) {
      L[i] = w.entries[i] + (r - 1 - i);
      M[i] = r - 1 - i;
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        dim *= Rational(L[i] * L[i] - L[j] * L[j], M[i] * M[i] - M[j] * M[j]);
  }
  if (!dim.is_integer() || dim.sign() <= 0)
    throw std::logic_error("weyl_dim: non-integral result");
  return dim.num();
}

Rational casimir_eigenvalue(const HighestWeight& w) {
  w.check_valid();
  Rational c = 0;
  int k = w.group_order;
  for (int i = 1; i <= w.rank(); ++i) {
    Rational e(w.entries[i - 1]);
    c += e * (e + Rational(k - 2 * i));
  }
  return c;
}

}  // namespace rep
