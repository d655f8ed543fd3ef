#include "cubicspan/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace cubicspan {

namespace {

constexpr unsigned kMaxDegree = 16;
constexpr std::uint64_t kTableBudget = 1u << 16;

bool supported_char(unsigned p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11;
}

// ---- dense polynomial helpers over GF(p), coefficient vectors low-first ----

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  // mod is monic; classic long division, keep the remainder
  std::size_t deg = mod.size() - 1;
  for (std::size_t i = r.size(); i-- > deg;) {
    unsigned c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (std::size_t j = 0; j < deg; ++j)
      r[i - deg + j] = (r[i - deg + j] + c * (p - mod[j])) % p;
  }
  r.resize(deg);
  return r;
}

Poly poly_powmod_frob(Poly base, unsigned times, const Poly& mod, unsigned p) {
  // base^(p^times) mod `mod` by iterated p-th powers
  for (unsigned t = 0; t < times; ++t) {
    Poly acc{1};
    Poly sq = base;
    unsigned e = p;
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, sq, mod, p);
      sq = poly_mulmod(sq, sq, mod, p);
      e >>= 1;
    }
    base = acc;
  }
  return base;
}

Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  Poly bb = b;
  trim(bb);
  unsigned lead_inv = 1;
  for (unsigned x = 1; x < p; ++x)
    if (x * bb.back() % p == 1) lead_inv = x;
  while (a.size() >= bb.size() && !a.empty()) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - bb.size();
    for (std::size_t j = 0; j < bb.size(); ++j)
      a[shift + j] = (a[shift + j] + c * (p - bb[j])) % p;
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f (monic, degree k) is irreducible over GF(p) iff
// x^(p^k) = x mod f and gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k.
bool poly_irreducible(const Poly& f, unsigned p) {
  unsigned k = unsigned(f.size() - 1);
  Poly x{0, 1};
  Poly xq = poly_powmod_frob(x, k, f, p);
  Poly diff = xq;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (unsigned r = 2; r <= k; ++r) {
    if (k % r || [&] {  // r prime?
          for (unsigned d = 2; d * d <= r; ++d)
            if (r % d == 0) return true;
          return false;
        }())
      continue;
    Poly xr = poly_powmod_frob(x, k / r, f, p);
    xr.resize(std::max<std::size_t>(xr.size(), 2), 0);
    xr[1] = (xr[1] + p - 1) % p;
    trim(xr);
    Poly g = poly_gcd(f, xr, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Pinned moduli (constant term first). Everything else is searched.
const std::map<std::pair<unsigned, unsigned>, Poly>& pinned_moduli() {
  static const std::map<std::pair<unsigned, unsigned>, Poly> t = {
      {{2, 2}, {1, 1, 1}},     // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},  // x^3 + x + 1
      {{3, 2}, {2, 2, 1}},     // x^2 + 2x + 2
  };
  return t;
}

}  // namespace

// Builds exp/log (and Zech) tables for the candidate modulus. Returns false
// when the candidate is not both irreducible and primitive: the powers of x
// then either hit zero, repeat, or close early, and the single sweep below
// detects all three.
bool Field::try_build_tables(const std::vector<unsigned>& mod) {
  const std::uint32_t ord = std::uint32_t(q_ - 1);
  log_.assign(q_, 0xffffffffu);
  exp_.assign(2 * std::size_t(ord), 0);

  std::vector<unsigned> e(k_, 0);
  e[0] = 1;  // the element 1
  for (std::uint32_t i = 0; i < ord; ++i) {
    Fe code = 0;
    for (unsigned d = k_; d-- > 0;) code = Fe(code * p_ + e[d]);
    if (code == 0 || log_[code] != 0xffffffffu) return false;
    if (code == 1 && i != 0) return false;  // order of x divides i < ord
    log_[code] = i;
    exp_[i] = code;
    exp_[i + ord] = code;
    // e *= x, reduced by the monic modulus
    unsigned carry = e[k_ - 1];
    for (unsigned d = k_ - 1; d > 0; --d) e[d] = e[d - 1];
    e[0] = 0;
    if (carry)
      for (unsigned d = 0; d < k_; ++d)
        e[d] = (e[d] + carry * (p_ - mod[d])) % p_;
  }
  // after ord steps the running power must be back at 1
  Fe wrap = 0;
  for (unsigned d = k_; d-- > 0;) wrap = Fe(wrap * p_ + e[d]);
  if (wrap != 1) return false;

  ord_ = ord;
  if (p_ != 2) {
    zech_.assign(ord, ord);
    for (std::uint32_t d = 0; d < ord; ++d) {
      Fe s = generic_add(1, exp_[d]);
      zech_[d] = s ? log_[s] : ord;
    }
    neg_log_ = log_[p_ - 1];
  }
  return true;
}

Field::Field(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!supported_char(p)) throw std::invalid_argument("unsupported characteristic");
  if (k < 1 || k > kMaxDegree) throw std::invalid_argument("extension degree out of range");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > 0xffffffffULL) throw std::invalid_argument("unsupported field size");
  }
  q_ = q;
  tabled_ = q_ <= kTableBudget;

  if (k_ == 1) {
    modulus_ = {0, 1};
    prime_inv_.assign(p_, 0);
    for (Fe a = 1; a < p_; ++a)
      for (Fe b = 1; b < p_; ++b)
        if (a * b % p_ == 1) prime_inv_[a] = b;
    if (tabled_) {
      // log tables are unnecessary for prime fields; direct arithmetic wins
      tabled_ = false;
    }
    return;
  }

  auto pinned = pinned_moduli().find({p, k});
  if (pinned != pinned_moduli().end()) {
    modulus_ = pinned->second;
    if (tabled_ && !try_build_tables(modulus_))
      throw std::logic_error("pinned modulus failed table construction");
    return;
  }

  if (tabled_) {
    // smallest monic primitive polynomial in code order
    for (std::uint64_t code = 1; code < q_; ++code) {
      if (code % p == 0) continue;  // constant term 0 => divisible by x
      Poly mod(k + 1, 0);
      std::uint64_t c = code;
      for (unsigned d = 0; d < k; ++d) {
        mod[d] = unsigned(c % p);
        c /= p;
      }
      mod[k] = 1;
      if (try_build_tables(mod)) {
        modulus_ = mod;
        return;
      }
    }
    throw std::logic_error("no primitive modulus found");
  }

  // large field: smallest monic irreducible, polynomial arithmetic only
  for (std::uint64_t code = 1;; ++code) {
    if (code % p == 0) continue;
    Poly mod(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned d = 0; d < k; ++d) {
      mod[d] = unsigned(c % p);
      c /= p;
    }
    mod[k] = 1;
    if (poly_irreducible(mod, p)) {
      modulus_ = mod;
      return;
    }
  }
}

Fe Field::generic_add(Fe a, Fe b) const {
  Fe r = 0, mult = 1;
  for (unsigned d = 0; d < k_; ++d) {
    unsigned s = (a % p_ + b % p_) % p_;
    r += mult * s;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

Fe Field::generic_neg(Fe a) const {
  Fe r = 0, mult = 1;
  for (unsigned d = 0; d < k_; ++d) {
    unsigned v = a % p_;
    r += mult * (v ? p_ - v : 0);
    a /= p_;
    mult *= p_;
  }
  return r;
}

Fe Field::generic_mul(Fe a, Fe b) const {
  unsigned da[kMaxDegree], db[kMaxDegree], prod[2 * kMaxDegree] = {};
  for (unsigned d = 0; d < k_; ++d) {
    da[d] = a % p_;
    a /= p_;
    db[d] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (unsigned i = 2 * k_ - 1; i >= k_; --i) {
    unsigned c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k_; ++j)
      prod[i - k_ + j] = (prod[i - k_ + j] + c * (p_ - modulus_[j])) % p_;
  }
  Fe r = 0;
  for (unsigned d = k_; d-- > 0;) r = Fe(r * p_ + prod[d]);
  return r;
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw std::invalid_argument("inversion of zero");
  if (k_ == 1) return prime_inv_[a];
  if (tabled_) return exp_[ord_ - log_[a]];
  return pow(a, q_ - 2);
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (tabled_) {
    std::uint64_t le = (std::uint64_t(log_[a]) * (e % ord_)) % ord_;
    return exp_[le];
  }
  Fe acc = 1, sq = a;
  while (e) {
    if (e & 1) acc = mul(acc, sq);
    sq = mul(sq, sq);
    e >>= 1;
  }
  return acc;
}

std::vector<Fe> Field::elements() const {
  std::vector<Fe> v(q_);
  for (std::uint64_t i = 0; i < q_; ++i) v[i] = Fe(i);
  return v;
}

std::string Field::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

const Field& Field::get(unsigned p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot.reset(new Field(p, k));
  return *slot;
}

const std::vector<Fe>& Field::embedding(const Field& src, const Field& dst) {
  if (src.p() != dst.p() || dst.k() % src.k() != 0)
    throw std::invalid_argument("incompatible fields for embedding");
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, unsigned>, std::vector<Fe>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(src.p(), src.k(), dst.k());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const unsigned p = src.p();
  std::vector<Fe> img(src.q(), 0);
  if (src.k() == 1) {
    for (Fe x = 0; x < p; ++x) img[x] = x;  // prime subfield is fixed pointwise
  } else {
    // smallest root of src's modulus in dst
    Fe root = 0;
    bool found = false;
    for (std::uint64_t cand = 0; cand < dst.q(); ++cand) {
      Fe acc = 0;
      for (unsigned d = src.k() + 1; d-- > 0;)
        acc = dst.add(dst.mul(acc, Fe(cand)), src.modulus()[d] % p);
      if (acc == 0) {
        root = Fe(cand);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("modulus has no root in extension");
    std::vector<Fe> rp(src.k(), 1);  // powers of the root
    for (unsigned d = 1; d < src.k(); ++d) rp[d] = dst.mul(rp[d - 1], root);
    for (std::uint64_t x = 0; x < src.q(); ++x) {
      Fe acc = 0;
      std::uint64_t c = x;
      for (unsigned d = 0; d < src.k(); ++d) {
        acc = dst.add(acc, dst.mul(Fe(c % p), rp[d]));
        c /= p;
      }
      img[x] = acc;
    }
  }
  return cache.emplace(key, std::move(img)).first->second;
}

}  // namespace cubicspan
