#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grouphom/smith.hpp"

namespace grouphom {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

// The field of prime order p, used only through its characteristic.
struct PrimeField {
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!detail::is_prime_u64(p)) {
      throw std::invalid_argument("PrimeField: " + std::to_string(prime) +
                                  " is not prime");
    }
  }
};

// Largest v with p^v dividing n; n must be positive.
inline std::uint64_t padic_valuation(const Int& n, const PrimeField& k) {
  if (n <= 0) {
    throw std::invalid_argument("padic_valuation: argument must be positive");
  }
  Int m = n;
  std::uint64_t v = 0;
  while (m % k.p == 0) {
    m /= k.p;
    ++v;
  }
  return v;
}

// Structure of H1(G) as abelian invariants (0 per infinite cyclic factor).
inline std::vector<Int> first_homology(const Presentation& p) {
  return abelian_invariants(p);
}

// dim H1(G; k): invariants divisible by p, zeros included, since each
// free factor contributes k (x) Z = k and Tor(H0, k) vanishes.
inline std::size_t first_homology_mod_p(const Presentation& p,
                                        const PrimeField& k) {
  std::size_t n = 0;
  for (const Int& x : abelian_invariants(p)) {
    if (x % k.p == 0) ++n;
  }
  return n;
}

// dim Tor(H1(G), k): nonzero invariants divisible by p.
inline std::size_t tor_dimension(const Presentation& p, const PrimeField& k) {
  std::size_t n = 0;
  for (const Int& x : abelian_invariants(p)) {
    if (x != 0 && x % k.p == 0) ++n;
  }
  return n;
}

// e with p^e the order of the p-primary part of the torsion of the
// abelianization: sum of p-adic valuations of the invariants divisible
// by p.
inline std::uint64_t prime_primary_rank(const Presentation& p,
                                        const PrimeField& k) {
  std::uint64_t s = 0;
  for (const Int& x : abelian_invariants(p)) {
    if (x != 0 && x % k.p == 0) s += padic_valuation(x, k);
  }
  return s;
}

}  // namespace grouphom
