#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

class Fel;

// GF(2^k), 1 <= k <= 24.  Elements are bit-packed polynomials over GF(2):
// bit i of the mask is the coefficient of x^i.  The modulus mask includes
// the leading bit (degree-k term), so it lies in [2^k, 2^{k+1}).
//
// Field is a cheap value type: a shared handle to immutable tables.
class Field {
 public:
  // Smallest k: modulus is the lexicographically smallest irreducible
  // degree-k polynomial (as a mask).  k=1 -> x (mask 2), k=2 -> x^2+x+1
  // (mask 7), k=3 -> x^3+x+1 (mask 11).
  explicit Field(int k);

  // Explicit modulus; must be irreducible of degree exactly k.
  Field(int k, uint32_t modulus_mask);

  int k() const;
  uint32_t modulus() const;
  uint64_t size() const;    // 2^k
  uint32_t units() const;   // 2^k - 1

  // mask-level arithmetic (char 2: subtraction == addition)
  uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;                // throws InvalidArgument on 0
  uint32_t pow(uint32_t a, long long e) const;   // negative e inverts
  uint32_t mul_order(uint32_t a) const;          // throws InvalidArgument on 0
  uint32_t frobenius(uint32_t a) const { return mul(a, a); }

  Fel el(uint32_t mask) const;
  Fel zero() const;
  Fel one() const;

  // Smallest mask of exact multiplicative order M; throws NoSuchOrder
  // unless M divides 2^k - 1 (in particular M must be odd).
  Fel element_of_order(uint32_t M) const;

  // Smallest k with M | 2^k - 1, i.e. the order of 2 modulo M.  M odd.
  static int smallest_k_containing_order(uint64_t M);

  // Element grammar: "int:<decimal mask>", "ord:<M>", or a bare decimal
  // mask.  Formatting always produces "int:<mask>".
  Fel parse(const std::string& text) const;
  std::string format(uint32_t mask) const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  // true if the degree-k polynomial `poly` (leading bit set) is irreducible
  static bool irreducible(int k, uint64_t poly);

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
  friend class Fel;
};

Field make_field(int k);

// A field element: mask plus a handle to its field.  Binary operations
// require structurally equal fields (FieldMismatch otherwise).
class Fel {
 public:
  Fel(const Field& f, uint32_t mask) : f_(f), m_(mask) {}

  uint32_t mask() const { return m_; }
  const Field& field() const { return f_; }
  bool is_zero() const { return m_ == 0; }
  bool is_one() const { return m_ == 1; }

  Fel operator+(const Fel& o) const;
  Fel operator*(const Fel& o) const;
  Fel inv() const;
  Fel pow(long long e) const;
  uint32_t order() const;

  bool operator==(const Fel& o) const;
  bool operator!=(const Fel& o) const { return !(*this == o); }

  std::string str() const { return f_.format(m_); }

 private:
  Field f_;
  uint32_t m_;
};

}  // namespace nichols
