#pragma once

#include <cstdint>
#include <vector>

#include "nichols/field.hpp"

namespace nichols {

// Dense row-major matrix over GF(2^k); entries are element masks.
class FMatrix {
 public:
  FMatrix(const Field& f, int rows, int cols)
      : f_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static FMatrix identity(const Field& f, int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Field& field() const { return f_; }

  uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * c_ + c]; }
  uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * c_ + c]; }

  FMatrix mul(const FMatrix& o) const;
  FMatrix add(const FMatrix& o) const;
  FMatrix pow(long long e) const;  // square matrices; negative e uses inverse
  FMatrix inverse() const;         // throws InvalidArgument if singular
  int rank() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool commutes_with(const FMatrix& o) const;

  bool operator==(const FMatrix& o) const;
  bool operator!=(const FMatrix& o) const { return !(*this == o); }

 private:
  Field f_;
  int r_, c_;
  std::vector<uint32_t> a_;
};

// Vector of `nbits` field elements stored as k bit-planes of 64-bit words
// (plane p holds the p-th bit of every element mask).  Addition is XOR;
// scalar multiples decompose over planes.  The physical width may exceed
// the logical one; trailing bits are kept zero.
struct SliceVec {
  int k = 1;
  int nbits = 0;
  int words = 0;
  std::vector<uint64_t> a;  // k * words

  SliceVec() = default;
  SliceVec(int planes, int bits)
      : k(planes), nbits(bits), words(words_for(bits)), a(static_cast<size_t>(planes) * words, 0) {}

  static int words_for(int bits) { return (bits + 63) / 64; }

  uint64_t* plane(int p) { return a.data() + static_cast<size_t>(p) * words; }
  const uint64_t* plane(int p) const { return a.data() + static_cast<size_t>(p) * words; }

  uint32_t get(int i) const;
  void set(int i, uint32_t mask);
  bool is_zero() const;
  int first_nonzero(int from_bit) const;  // smallest index >= from_bit with nonzero mask, or -1

  // this += lambda * src, starting at word offset `from_word` in both
  // (src words before from_word must be zero by the caller's invariant).
  void axpy(const Field& f, uint32_t lambda, const SliceVec& src, int from_word = 0);

  // this += lambda * src where src is a raw k-plane block (plane stride
  // src_words), XORed in at word offset dst_off.
  void axpy_raw(const Field& f, uint32_t lambda, const uint64_t* src, int src_words, int dst_off);

  void scale(const Field& f, uint32_t lambda);

  std::vector<uint32_t> to_dense() const;
  static SliceVec from_dense(const Field& f, const std::vector<uint32_t>& v);
};

// Row-major matrix of bit-sliced rows with a uniform logical width.
// Row r's plane p occupies words [(r*k+p)*w, (r*k+p+1)*w).
class SliceMat {
 public:
  SliceMat() = default;
  SliceMat(int planes, int rows, int bits)
      : k_(planes),
        r_(rows),
        nbits_(bits),
        w_(SliceVec::words_for(bits)),
        a_(static_cast<size_t>(planes) * rows * w_, 0) {}

  int rows() const { return r_; }
  int nbits() const { return nbits_; }
  int words() const { return w_; }
  int planes() const { return k_; }
  size_t bytes() const { return a_.size() * 8; }

  uint64_t* row(int r) { return a_.data() + static_cast<size_t>(r) * k_ * w_; }
  const uint64_t* row(int r) const { return a_.data() + static_cast<size_t>(r) * k_ * w_; }

  uint32_t at(int r, int i) const;
  void set(int r, int i, uint32_t mask);
  void set_row(int r, const SliceVec& v);  // v.nbits <= nbits
  SliceVec get_row(int r) const;

 private:
  int k_ = 1, r_ = 0, nbits_ = 0, w_ = 0;
  std::vector<uint64_t> a_;
};

// C[r] += sum_m A[r,m] * B[m,:] over the field.  Requires A.nbits == B.rows,
// C.rows == A.rows, C.nbits == B.nbits.  Plane-decomposed M4R (8-bit tables).
void accumulate_product(const Field& f, const SliceMat& A, const SliceMat& B, SliceMat& C);

// Streaming Gaussian elimination with the first-nonzero-pivot rule.
// Echelon rows are kept pivot-normalized (pivot coefficient 1) and reduced
// rows stay zero before their pivot.  Optionally tracks, per inserted row,
// its expression in terms of the *original* vectors of earlier pivots.
class Eliminator {
 public:
  Eliminator(const Field& f, int nbits, bool track_expr)
      : f_(f), nbits_(nbits), track_(track_expr), owner_(nbits, -1) {}

  int rank() const { return static_cast<int>(vec_.size()); }

  // Reduces v in place.  Returns -1 if v vanished (when tracking, *eacc
  // holds the coordinates of the original v over the pivot ordinals);
  // otherwise inserts the normalized row and returns its ordinal.
  // When tracking, eacc must be zeroed with capacity >= rank()+1 bits.
  int add(SliceVec& v, SliceVec* eacc);

  const SliceVec& row_vec(int ord) const { return vec_[ord]; }

 private:
  Field f_;
  int nbits_;
  bool track_;
  std::vector<SliceVec> vec_, expr_;
  std::vector<int> owner_;
};

}  // namespace nichols
