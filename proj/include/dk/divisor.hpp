#pragma once
// Exact d_k(n), T_k(x), empirical Delta_k(x), and the lambda(k) sweep.

#include <cstdint>
#include <string>
#include <vector>

#include "dk/bigpoint.hpp"
#include "dk/encl.hpp"
#include "dk/mainterm.hpp"

namespace dk {

struct DivisorSieve {
  int k = 0;
  uint64_t N = 0;
  std::vector<int64_t> d;          // d[n] for 1 <= n <= N; d[0] = 0
  std::vector<__int128> prefix;    // prefix[n] = T_k(n)

  int64_t dk(uint64_t n) const;
  __int128 T(uint64_t n) const;     // T_k(n), n <= N
};

inline constexpr size_t kDefaultSieveBudget = (size_t)4 << 30;

// workers = 0: serial reference implementation; workers >= 1: OpenMP passes
// over chunk-owned target ranges (bit-identical to serial).
DivisorSieve build_sieve(int k, uint64_t N, size_t budget_bytes = kDefaultSieveBudget,
                         int workers = 0);

// Binary cache: magic "DKSIEVE1", k, N, value width, then raw values.
void save_sieve_cache(const DivisorSieve& s, const std::string& path);
// Loads + revalidates 64 random entries against dk_point (MismatchError).
DivisorSieve load_sieve_cache(const std::string& path);

// Exact d_k(n) for n <= 1e12 via trial division to 1e6; FactorizationTimeout
// if a composite cofactor survives.
int64_t dk_point(int k, uint64_t n);

// Delta_k(x) = T_k(floor(x)) - x P_k(log x); x given as a decimal string or
// enclosure with 1 <= x <= N.
Encl delta_empirical(const DivisorSieve& s, const MainTermPolynomial& P, const Encl& x);

struct LambdaReport {
  bool pass = true;
  uint64_t first_violation = 0;
  uint64_t worst_n = 0;
  double worst_margin = 0.0;  // min over n of lambda*ln n - ln d_k(n) * ln ln n
  std::string note;           // always flags "necessary condition only"
};

struct LambdaTable {
  // k -> lambda(k), decimal strings kept alongside parsed enclosures
  std::vector<std::pair<int, Encl>> entries;
  const Encl& at(int k) const;
  bool has(int k) const;
};

LambdaTable load_lambda_table(const std::string& path);

LambdaReport validate_lambda(const LambdaTable& table, int k, const DivisorSieve& s);

// Classical upper bound x (log x + h_k)^{k-1} / (k-1), h_k = k-1 for k = 2,
// k-2 for 3 <= k <= 10, min(k-2, k(3/2 - log 2)) for k >= 11.
Encl tk_upper_classical(int k, const Encl& x);
// The h_k policy value itself (as an enclosure; exact integer for k <= 10).
Encl hk_policy(int k, Prec p = 0);

}  // namespace dk
