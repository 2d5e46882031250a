#include "nichols/field.hpp"

#include <charconv>
#include <numeric>

namespace nichols {

namespace {

// --- GF(2)[x] helpers on uint64 masks (degrees stay < 50 here) ---

int pdeg(uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

uint64_t pmul(uint64_t a, uint64_t b) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
  }
  return r;
}

uint64_t pmod(uint64_t a, uint64_t m) {
  int dm = pdeg(m);
  for (int d = pdeg(a); d >= dm; d = pdeg(a)) a ^= m << (d - dm);
  return a;
}

uint64_t pgcd(uint64_t a, uint64_t b) {
  while (b) {
    a = pmod(a, b);
    std::swap(a, b);
  }
  return a;
}

uint64_t pmulmod(uint64_t a, uint64_t b, uint64_t m) { return pmod(pmul(a, b), m); }

std::vector<uint32_t> prime_factors(uint64_t n) {
  std::vector<uint32_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(static_cast<uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(static_cast<uint32_t>(n));
  return ps;
}

}  // namespace

bool Field::irreducible(int k, uint64_t poly) {
  if (pdeg(poly) != k) return false;
  if (k == 1) return true;
  // Rabin: x^(2^k) == x mod poly, and gcd(x^(2^(k/p)) - x, poly) == 1
  // for every prime p | k.
  auto xq = [&](int e) {  // x^(2^e) mod poly
    uint64_t h = 2;
    for (int i = 0; i < e; ++i) h = pmulmod(h, h, poly);
    return h;
  };
  if (xq(k) != 2) return false;
  for (uint32_t p : prime_factors(k)) {
    uint64_t h = xq(k / static_cast<int>(p));
    if (pgcd(h ^ 2ull, poly) != 1) return false;
  }
  return true;
}

struct Field::Rep {
  int k = 0;
  uint32_t modulus = 0;
  uint32_t units = 0;
  std::vector<uint32_t> unit_primes;
  // log/exp tables for k <= 16 (exp has 2*units entries so that
  // exp[log a + log b] needs no reduction)
  std::vector<uint32_t> exp, log;

  uint32_t mul_slow(uint32_t a, uint32_t b) const {
    uint64_t acc = 0, aa = a;
    uint32_t top = 1u << k;
    while (b) {
      if (b & 1) acc ^= aa;
      b >>= 1;
      aa <<= 1;
      if (aa & top) aa ^= modulus;
    }
    return static_cast<uint32_t>(acc);
  }

  void build(int kk, uint32_t mod) {
    k = kk;
    modulus = mod;
    units = (1u << k) - 1;
    unit_primes = prime_factors(units);
    if (k > 16) return;
    // find a multiplicative generator by walking powers
    for (uint32_t g = 2; g <= units || k == 1; ++g) {
      if (k == 1) g = 1;  // GF(2): the unit group is trivial
      uint32_t x = 1, steps = 0;
      do {
        x = mul_slow(x, g);
        ++steps;
      } while (x != 1);
      if (steps == units) {
        exp.assign(2 * units, 1);
        log.assign(units + 1, 0);
        uint32_t v = 1;
        for (uint32_t i = 0; i < units; ++i) {
          exp[i] = v;
          exp[i + units] = v;
          log[v] = i;
          v = mul_slow(v, g);
        }
        return;
      }
      if (k == 1) return;  // unreachable fallthrough guard
    }
  }
};

Field::Field(int k) {
  if (k < 1 || k > 24) throw InvalidArgument("field degree k must be in [1,24]");
  uint64_t lo = 1ull << k, hi = 1ull << (k + 1);
  for (uint64_t m = lo; m < hi; ++m) {
    if (irreducible(k, m)) {
      auto rep = std::make_shared<Rep>();
      rep->build(k, static_cast<uint32_t>(m));
      rep_ = rep;
      return;
    }
  }
  throw Error("no irreducible polynomial found");  // cannot happen
}

Field::Field(int k, uint32_t modulus_mask) {
  if (k < 1 || k > 24) throw InvalidArgument("field degree k must be in [1,24]");
  if (!irreducible(k, modulus_mask))
    throw InvalidArgument("modulus is not irreducible of degree " + std::to_string(k));
  auto rep = std::make_shared<Rep>();
  rep->build(k, modulus_mask);
  rep_ = rep;
}

int Field::k() const { return rep_->k; }
uint32_t Field::modulus() const { return rep_->modulus; }
uint64_t Field::size() const { return 1ull << rep_->k; }
uint32_t Field::units() const { return rep_->units; }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  const Rep& r = *rep_;
  if (!r.exp.empty()) {
    if (a == 0 || b == 0) return 0;
    return r.exp[r.log[a] + r.log[b]];
  }
  return r.mul_slow(a, b);
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  const Rep& r = *rep_;
  if (!r.exp.empty()) return r.exp[(r.units - r.log[a]) % r.units];
  return pow(a, static_cast<long long>(r.units) - 1);
}

uint32_t Field::pow(uint32_t a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw InvalidArgument("negative power of zero");
  }
  long long u = units();
  long long r = e % u;
  if (r < 0) r += u;
  uint32_t acc = 1, base = a;
  while (r) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

uint32_t Field::mul_order(uint32_t a) const {
  if (a == 0) throw InvalidArgument("order of zero");
  uint32_t t = units();
  for (uint32_t p : rep_->unit_primes)
    while (t % p == 0 && pow(a, t / p) == 1) t /= p;
  return t;
}

Fel Field::el(uint32_t mask) const {
  if (mask >= size()) throw InvalidArgument("element mask out of range");
  return Fel(*this, mask);
}
Fel Field::zero() const { return Fel(*this, 0); }
Fel Field::one() const { return Fel(*this, 1); }

Fel Field::element_of_order(uint32_t M) const {
  if (M == 0) throw InvalidArgument("order must be positive");
  if (M > units() || units() % M != 0)
    throw NoSuchOrder("GF(2^" + std::to_string(k()) + ") has no element of order " +
                      std::to_string(M));
  auto ps = prime_factors(M);
  for (uint32_t m = 1; m <= units(); ++m) {
    if (pow(m, M) != 1) continue;
    bool exact = true;
    for (uint32_t p : ps)
      if (pow(m, M / p) == 1) {
        exact = false;
        break;
      }
    if (exact) return Fel(*this, m);
  }
  throw NoSuchOrder("no element of order " + std::to_string(M));  // cannot happen
}

int Field::smallest_k_containing_order(uint64_t M) {
  if (M == 0 || M % 2 == 0)
    throw InvalidArgument("order must be odd and positive in characteristic 2");
  if (M == 1) return 1;
  uint64_t r = 1;
  for (int k = 1;; ++k) {
    r = (r * 2) % M;
    if (r == 1) return k;
  }
}

Fel Field::parse(const std::string& text) const {
  std::string s = text;
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw InvalidArgument("empty field element");
  s = s.substr(b, e - b + 1);

  auto dec = [](const std::string& d) -> uint64_t {
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || p != d.data() + d.size())
      throw InvalidArgument("bad number '" + d + "' in field element");
    return v;
  };

  if (s.rfind("int:", 0) == 0) {
    uint64_t v = dec(s.substr(4));
    if (v >= size()) throw InvalidArgument("element mask " + s + " out of range");
    return Fel(*this, static_cast<uint32_t>(v));
  }
  if (s.rfind("ord:", 0) == 0) return element_of_order(static_cast<uint32_t>(dec(s.substr(4))));
  uint64_t v = dec(s);
  if (v >= size()) throw InvalidArgument("element mask " + s + " out of range");
  return Fel(*this, static_cast<uint32_t>(v));
}

std::string Field::format(uint32_t mask) const { return "int:" + std::to_string(mask); }

bool Field::operator==(const Field& o) const {
  return rep_->k == o.rep_->k && rep_->modulus == o.rep_->modulus;
}

Field make_field(int k) { return Field(k); }

// --- Fel ---

namespace {
void require_same(const Field& a, const Field& b) {
  if (a != b) throw FieldMismatch("operands belong to different fields");
}
}  // namespace

Fel Fel::operator+(const Fel& o) const {
  require_same(f_, o.f_);
  return Fel(f_, f_.add(m_, o.m_));
}
Fel Fel::operator*(const Fel& o) const {
  require_same(f_, o.f_);
  return Fel(f_, f_.mul(m_, o.m_));
}
Fel Fel::inv() const { return Fel(f_, f_.inv(m_)); }
Fel Fel::pow(long long e) const { return Fel(f_, f_.pow(m_, e)); }
uint32_t Fel::order() const { return f_.mul_order(m_); }

bool Fel::operator==(const Fel& o) const {
  require_same(f_, o.f_);
  return m_ == o.m_;
}

}  // namespace nichols
