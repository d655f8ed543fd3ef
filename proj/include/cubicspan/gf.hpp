#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicspan {

/// Element of GF(p^k), encoded as an integer code in [0, q). Digit i of the
/// code in base p is the coefficient of x^i of the polynomial representative
/// under the field's fixed modulus. Code 0 is the additive identity, code 1
/// the multiplicative identity.
using Fe = std::uint32_t;

/// Arithmetic context for GF(p^k) with p in {2,3,5,7,11} and 1 <= k <= 16
/// (subject to q < 2^32).
///
/// Fields with q <= 2^16 are table-driven: multiplication via log/antilog,
/// addition via Zech logarithms in odd characteristic (char 2 addition is a
/// plain XOR of codes). Larger fields fall back to polynomial arithmetic
/// modulo the same fixed modulus. The modulus for GF(4), GF(8) and GF(9) is
/// pinned (x^2+x+1, x^3+x+1, x^2+2x+2); every other extension uses the
/// smallest monic primitive polynomial in code order (smallest irreducible
/// when q exceeds the table budget), so element codes are stable across runs.
///
/// Contexts are immutable after construction and safe to share across
/// threads; all operations are pure.
class Field {
 public:
  /// Cached context lookup. Throws std::invalid_argument for unsupported
  /// characteristics, degrees outside [1,16], or q >= 2^32.
  static const Field& get(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  bool tabled() const { return tabled_; }

  /// Modulus coefficients, constant term first, length k+1, monic.
  /// For k == 1 this is {0, 1}, i.e. the polynomial x.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  std::string name() const;  // "GF(p)" or "GF(p^k)"

  bool is_valid(Fe a) const { return a < q_; }

  Fe add(Fe a, Fe b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
      Fe s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (tabled_) return zech_add(a, b);
    return generic_add(a, b);
  }

  Fe neg(Fe a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a ? p_ - a : 0;
    if (tabled_) return a ? exp_[log_[a] + neg_log_] : 0;
    return generic_neg(a);
  }

  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return Fe((std::uint64_t(a) * b) % p_);
    if (tabled_) return exp_[log_[a] + log_[b]];
    return generic_mul(a, b);
  }

  /// Throws std::invalid_argument on inversion of zero.
  Fe inv(Fe a) const;

  /// a^e with the convention 0^0 = 1.
  Fe pow(Fe a, std::uint64_t e) const;

  /// The Frobenius map a -> a^p.
  Fe frobenius(Fe a) const { return pow(a, p_); }

  /// n mod p, embedded as a constant polynomial.
  Fe from_int(std::uint64_t n) const { return Fe(n % p_); }

  /// All q elements in ascending code order.
  std::vector<Fe> elements() const;

  /// Image table of the fixed injective homomorphism src -> dst; entry x is
  /// the image of code x. Requires src.p == dst.p and src.k | dst.k. The
  /// chosen homomorphism sends src's generator to the smallest root (by code)
  /// of src's modulus in dst, so images are deterministic across runs.
  static const std::vector<Fe>& embedding(const Field& src, const Field& dst);

  static Fe embed(const Field& src, const Field& dst, Fe x) {
    return embedding(src, dst)[x];
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(unsigned p, unsigned k);

  Fe zech_add(Fe a, Fe b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t d = lb >= la ? lb - la : lb + ord_ - la;
    std::uint32_t z = zech_[d];
    if (z == ord_) return 0;  // 1 + alpha^d == 0
    return exp_[la + z];
  }

  Fe generic_add(Fe a, Fe b) const;
  Fe generic_neg(Fe a) const;
  Fe generic_mul(Fe a, Fe b) const;

  bool try_build_tables(const std::vector<unsigned>& mod);

  unsigned p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  std::uint32_t ord_ = 0;  // q - 1 for tabled fields
  bool tabled_ = false;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> log_;   // size q, log_[0] unused
  std::vector<Fe> exp_;              // size 2*ord so sums of logs need no mod
  std::vector<std::uint32_t> zech_;  // odd p: zech_[d] = log(1 + alpha^d), ord_ = "is zero"
  std::uint32_t neg_log_ = 0;        // log(-1), odd p
  std::vector<Fe> prime_inv_;        // k == 1: inverse table
};

/// Deterministic counter-based sample stream (splitmix64 over seed+counter).
/// Identical (seed, draw sequence) pairs produce identical values on every
/// platform; used wherever censuses sample surfaces.
struct SampleStream {
  std::uint64_t seed = 0;
  std::uint64_t ctr = 0;

  std::uint64_t next() {
    std::uint64_t z = seed + (++ctr) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), bias-free via rejection.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    for (;;) {
      std::uint64_t v = next();
      if (v < lim) return v % n;
    }
  }

  Fe element(const Field& f) { return Fe(below(f.q())); }
};

}  // namespace cubicspan
