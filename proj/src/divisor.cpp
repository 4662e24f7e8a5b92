#include "dk/divisor.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace dk {

namespace {

void checked_add(int64_t& dst, int64_t inc) {
  if (__builtin_add_overflow(dst, inc, &dst))
    throw CapacityError("divisor sieve value overflowed int64");
}

// One divisor-convolution pass: next[m] = sum_{q | m} cur[q].
void conv_pass_serial(const std::vector<int64_t>& cur, std::vector<int64_t>& next,
                      uint64_t N) {
  std::fill(next.begin(), next.end(), 0);
  for (uint64_t q = 1; q <= N; ++q) {
    int64_t v = cur[q];
    for (uint64_t m = q; m <= N; m += q) checked_add(next[m], v);
  }
}

void conv_pass_parallel(const std::vector<int64_t>& cur, std::vector<int64_t>& next,
                        uint64_t N, int workers) {
  std::fill(next.begin(), next.end(), 0);
  // chunk-owned target ranges: each chunk of m-values is written by exactly
  // one thread, so the result is bit-identical to the serial pass
  uint64_t chunks = std::max<uint64_t>(1, (uint64_t)workers * 8);
  uint64_t width = (N + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long long c = 0; c < (long long)chunks; ++c) {
    uint64_t lo = (uint64_t)c * width + 1;
    uint64_t hi = std::min(N, lo + width - 1);
    if (lo > hi) continue;
    for (uint64_t q = 1; q <= hi; ++q) {
      int64_t v = cur[q];
      if (v == 0) continue;
      uint64_t first = ((lo + q - 1) / q) * q;
      for (uint64_t m = first; m <= hi; m += q) checked_add(next[m], v);
    }
  }
}

struct PrimeList {
  std::vector<uint32_t> primes;  // all primes <= 1e6
};

const PrimeList& prime_list() {
  static const PrimeList pl = [] {
    PrimeList p;
    const uint32_t L = 1000000;
    std::vector<bool> comp(L + 1, false);
    for (uint32_t i = 2; (uint64_t)i * i <= L; ++i)
      if (!comp[i])
        for (uint32_t j = i * i; j <= L; j += i) comp[j] = true;
    for (uint32_t i = 2; i <= L; ++i)
      if (!comp[i]) p.primes.push_back(i);
    return p;
  }();
  return pl;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull})
    if (n % p == 0) return n == p;
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// C(a + k - 1, k - 1) with overflow guard
int64_t binom_dk(int a, int k) {
  unsigned __int128 num = 1;
  for (int i = 1; i <= a; ++i) {
    num = num * (unsigned)(k - 1 + i);
    num /= (unsigned)i;  // product of i consecutive binomial steps stays integral
    if (num > (unsigned __int128)INT64_MAX * 1000000)
      throw CapacityError("dk_point value overflow");
  }
  if (num > (unsigned __int128)INT64_MAX) throw CapacityError("dk_point value overflow");
  return (int64_t)num;
}

uint64_t lcg_next(uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  return state;
}

}  // namespace

int64_t DivisorSieve::dk(uint64_t n) const {
  if (n < 1 || n > N) throw RangeError("sieve lookup out of range");
  return d[n];
}

__int128 DivisorSieve::T(uint64_t n) const {
  if (n > N) throw RangeError("sieve prefix lookup out of range");
  if (n < 1) return 0;
  return prefix[n];
}

DivisorSieve build_sieve(int k, uint64_t N, size_t budget_bytes, int workers) {
  if (k < 1 || k > 12) throw DomainError("build_sieve supports 1 <= k <= 12");
  if (N < 1 || N > 100000000ull) throw RangeError("build_sieve supports N <= 1e8");
  size_t need = (size_t)(N + 1) * sizeof(int64_t) * (k > 1 ? 2 : 1) +
                (size_t)(N + 1) * sizeof(__int128);
  if (need > budget_bytes)
    throw CapacityError("sieve memory need " + std::to_string(need) +
                        " bytes exceeds budget " + std::to_string(budget_bytes));
  DivisorSieve s;
  s.k = k;
  s.N = N;
  s.d.assign(N + 1, 1);
  s.d[0] = 0;
  if (k > 1) {
    std::vector<int64_t> other(N + 1, 0);
    // ping-pong buffers across k-1 convolution passes
    std::vector<int64_t>* cur = &s.d;
    std::vector<int64_t>* nxt = &other;
    for (int pass = 2; pass <= k; ++pass) {
      if (workers > 0)
        conv_pass_parallel(*cur, *nxt, N, workers);
      else
        conv_pass_serial(*cur, *nxt, N);
      std::swap(cur, nxt);
    }
    if (cur != &s.d) s.d = *cur;
    s.d[0] = 0;
  }
  s.prefix.assign(N + 1, 0);
  __int128 acc = 0;
  for (uint64_t n = 1; n <= N; ++n) {
    acc += s.d[n];
    s.prefix[n] = acc;
  }
  return s;
}

void save_sieve_cache(const DivisorSieve& s, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open cache for writing: " + path);
  f.write("DKSIEVE1", 8);
  int32_t k32 = s.k, width = 8;
  int64_t n64 = (int64_t)s.N;
  f.write((const char*)&k32, 4);
  f.write((const char*)&n64, 8);
  f.write((const char*)&width, 4);
  f.write((const char*)(s.d.data() + 1), (std::streamsize)(s.N * 8));
  if (!f) throw ConfigError("short write to cache: " + path);
}

DivisorSieve load_sieve_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open cache: " + path);
  char magic[8];
  f.read(magic, 8);
  if (!f || std::memcmp(magic, "DKSIEVE1", 8) != 0)
    throw MismatchError("bad sieve cache magic in " + path);
  int32_t k32 = 0, width = 0;
  int64_t n64 = 0;
  f.read((char*)&k32, 4);
  f.read((char*)&n64, 8);
  f.read((char*)&width, 4);
  if (!f || width != 8 || k32 < 1 || k32 > 12 || n64 < 1)
    throw MismatchError("bad sieve cache header in " + path);
  DivisorSieve s;
  s.k = k32;
  s.N = (uint64_t)n64;
  s.d.assign(s.N + 1, 0);
  f.read((char*)(s.d.data() + 1), (std::streamsize)(s.N * 8));
  if (!f) throw MismatchError("truncated sieve cache " + path);
  s.prefix.assign(s.N + 1, 0);
  __int128 acc = 0;
  for (uint64_t n = 1; n <= s.N; ++n) {
    acc += s.d[n];
    s.prefix[n] = acc;
  }
  // spot revalidation against the point evaluator
  uint64_t state = 0x9e3779b97f4a7c15ull ^ (s.N * 1315423911ull + (uint64_t)s.k);
  for (int i = 0; i < 64; ++i) {
    uint64_t n = 1 + lcg_next(state) % s.N;
    if (s.d[n] != dk_point(s.k, n))
      throw MismatchError("sieve cache value mismatch at n=" + std::to_string(n));
  }
  return s;
}

int64_t dk_point(int k, uint64_t n) {
  if (k < 1) throw DomainError("dk_point needs k >= 1");
  if (n < 1) throw DomainError("dk_point needs n >= 1");
  if (n > 1000000000000ull) throw RangeError("dk_point supports n <= 1e12");
  unsigned __int128 result = 1;
  uint64_t rem = n;
  for (uint32_t p : prime_list().primes) {
    if ((uint64_t)p * p > rem) break;
    if (rem % p == 0) {
      int a = 0;
      while (rem % p == 0) rem /= p, ++a;
      result *= (unsigned __int128)binom_dk(a, k);
    }
  }
  if (rem > 1) {
    if (rem <= 1000000ull || is_prime_u64(rem)) {
      result *= (unsigned)k;  // single prime, exponent 1
    } else {
      throw FactorizationTimeout("composite cofactor " + std::to_string(rem) +
                                 " beyond trial-division range");
    }
  }
  if (result > (unsigned __int128)INT64_MAX)
    throw CapacityError("dk_point value overflow");
  return (int64_t)result;
}

Encl delta_empirical(const DivisorSieve& s, const MainTermPolynomial& P,
                     const Encl& x) {
  if (s.k != P.k) throw DomainError("sieve/polynomial k mismatch");
  if (mpfr_cmp_ui(x.lo().raw(), 1) < 0) throw DomainError("delta_empirical needs x >= 1");
  if (mpfr_cmp_ui(x.hi().raw(), (unsigned long)s.N) > 0)
    throw RangeError("delta_empirical needs x <= sieve limit");
  MpReal fl(x.prec());
  mpfr_floor(fl.raw(), x.lo().raw());
  uint64_t n = mpfr_get_ui(fl.raw(), MPFR_RNDD);
  // floor must be unambiguous over the enclosure
  MpReal fh(x.prec());
  mpfr_floor(fh.raw(), x.hi().raw());
  if (mpfr_cmp_ui(fh.raw(), (unsigned long)n) != 0 &&
      !(mpfr_integer_p(x.hi().raw()) && x.is_point() == false))
    throw PrecisionExhausted("floor(x) ambiguous across the enclosure");
  Encl Tk = Encl::exact_i128(s.T(n), std::max<Prec>(x.prec(), 160));
  return Tk - eval_mainterm(P, x);
}

const Encl& LambdaTable::at(int k) const {
  for (auto& e : entries)
    if (e.first == k) return e.second;
  throw ConfigError("lambda table has no entry for k=" + std::to_string(k));
}

bool LambdaTable::has(int k) const {
  for (auto& e : entries)
    if (e.first == k) return true;
  return false;
}

LambdaTable load_lambda_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open lambda table: " + path);
  LambdaTable t;
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int k;
    char buf[128];
    if (std::sscanf(line.c_str(), "%d %127s", &k, buf) != 2)
      throw ConfigError("malformed lambda table line: " + line);
    t.entries.emplace_back(k, Encl::from_string(buf));
  }
  if (t.entries.empty()) throw ConfigError("lambda table empty: " + path);
  return t;
}

LambdaReport validate_lambda(const LambdaTable& table, int k, const DivisorSieve& s) {
  if (s.k != k) throw DomainError("sieve k mismatch in validate_lambda");
  if (s.N < 100) throw DomainError("validate_lambda needs N >= 100");
  LambdaReport rep;
  rep.note = "necessary condition only (checked on n <= N, not all n)";
  double lam = table.at(k).mid_d();
  double worst = 1e300;
  uint64_t worst_n = 0;
  uint64_t first_bad = 0;
  for (uint64_t n = 3; n <= s.N; ++n) {
    double ln = std::log((double)n);
    double lll = std::log(ln);
    double margin = lam * ln - std::log((double)s.d[n]) * lll;
    if (margin < worst) {
      worst = margin;
      worst_n = n;
    }
    if (margin < 1e-9 * (std::abs(lam) * ln + 1.0)) {
      // near-boundary or violating: recheck in certified arithmetic
      Prec p = 192;
      Encl lnn = const_ln((unsigned long)n, p);
      Encl lhs = log_e(Encl::exact((long)s.d[n], p)) * log_e(lnn);
      Encl rhs = table.at(k) * lnn;
      Cmp c = certified_compare(lhs, rhs);
      if (c == Cmp::Greater && first_bad == 0) first_bad = n;
    }
  }
  rep.worst_margin = worst;
  rep.worst_n = worst_n;
  rep.first_violation = first_bad;
  rep.pass = (first_bad == 0);
  return rep;
}

Encl hk_policy(int k, Prec p) {
  Prec pp = p > 0 ? p : work_prec();
  if (k < 2) throw DomainError("h_k policy needs k >= 2");
  if (k == 2) return Encl::exact(1, pp);
  if (k <= 10) return Encl::exact(k - 2, pp);
  // min(k-2, k(3/2 - log 2))
  Encl alt = Encl::exact(k, pp) *
             (Encl::from_string("1.5", pp) - const_ln(2, pp));
  return min_e(Encl::exact(k - 2, pp), alt);
}

Encl tk_upper_classical(int k, const Encl& x) {
  if (k < 2) throw DomainError("tk_upper_classical needs k >= 2");
  if (k > 2 && mpfr_cmp_ui(x.lo().raw(), 13) < 0)
    throw DomainError("tk_upper_classical (k-2 variant) needs x >= 13");
  if (mpfr_cmp_ui(x.lo().raw(), 1) < 0)
    throw DomainError("tk_upper_classical needs x >= 1");
  Encl h = hk_policy(k, x.prec());
  Encl lx = log_e(x);
  return x * pow_si(lx + h, k - 1) / Encl::exact(k - 1, x.prec());
}

}  // namespace dk
