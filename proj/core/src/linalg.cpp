#include "nichols/linalg.hpp"

#include <algorithm>

namespace nichols {

// --- FMatrix ---

FMatrix FMatrix::identity(const Field& f, int n) {
  FMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FMatrix FMatrix::mul(const FMatrix& o) const {
  if (f_ != o.f_) throw FieldMismatch("matrix product over different fields");
  if (c_ != o.r_) throw InvalidArgument("matrix shape mismatch in product");
  FMatrix out(f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int t = 0; t < c_; ++t) {
      uint32_t v = at(i, t);
      if (!v) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) ^= f_.mul(v, o.at(t, j));
    }
  return out;
}

FMatrix FMatrix::add(const FMatrix& o) const {
  if (f_ != o.f_) throw FieldMismatch("matrix sum over different fields");
  if (r_ != o.r_ || c_ != o.c_) throw InvalidArgument("matrix shape mismatch in sum");
  FMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] ^= o.a_[i];
  return out;
}

FMatrix FMatrix::pow(long long e) const {
  if (r_ != c_) throw InvalidArgument("matrix power of non-square matrix");
  FMatrix base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
  FMatrix acc = identity(f_, r_);
  while (n) {
    if (n & 1) acc = acc.mul(base);
    base = base.mul(base);
    n >>= 1;
  }
  return acc;
}

FMatrix FMatrix::inverse() const {
  if (r_ != c_) throw InvalidArgument("inverse of non-square matrix");
  FMatrix m = *this, inv = identity(f_, r_);
  for (int col = 0, row = 0; col < c_; ++col, ++row) {
    int p = -1;
    for (int i = row; i < r_; ++i)
      if (m.at(i, col)) {
        p = i;
        break;
      }
    if (p < 0) throw InvalidArgument("singular matrix");
    if (p != row)
      for (int j = 0; j < c_; ++j) {
        std::swap(m.at(p, j), m.at(row, j));
        std::swap(inv.at(p, j), inv.at(row, j));
      }
    uint32_t s = f_.inv(m.at(row, col));
    for (int j = 0; j < c_; ++j) {
      m.at(row, j) = f_.mul(s, m.at(row, j));
      inv.at(row, j) = f_.mul(s, inv.at(row, j));
    }
    for (int i = 0; i < r_; ++i) {
      if (i == row) continue;
      uint32_t v = m.at(i, col);
      if (!v) continue;
      for (int j = 0; j < c_; ++j) {
        m.at(i, j) ^= f_.mul(v, m.at(row, j));
        inv.at(i, j) ^= f_.mul(v, inv.at(row, j));
      }
    }
  }
  return inv;
}

int FMatrix::rank() const {
  FMatrix m = *this;
  int rank = 0;
  for (int col = 0; col < c_ && rank < r_; ++col) {
    int p = -1;
    for (int i = rank; i < r_; ++i)
      if (m.at(i, col)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rank)
      for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(rank, j));
    uint32_t s = f_.inv(m.at(rank, col));
    for (int j = col; j < c_; ++j) m.at(rank, j) = f_.mul(s, m.at(rank, j));
    for (int i = rank + 1; i < r_; ++i) {
      uint32_t v = m.at(i, col);
      if (!v) continue;
      for (int j = col; j < c_; ++j) m.at(i, j) ^= f_.mul(v, m.at(rank, j));
    }
    ++rank;
  }
  return rank;
}

bool FMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool FMatrix::is_diagonal() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (i != j && at(i, j)) return false;
  return true;
}

bool FMatrix::commutes_with(const FMatrix& o) const { return mul(o) == o.mul(*this); }

bool FMatrix::operator==(const FMatrix& o) const {
  return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

// --- SliceVec ---

uint32_t SliceVec::get(int i) const {
  int w = i >> 6, b = i & 63;
  if (w >= words) return 0;
  uint32_t m = 0;
  for (int p = 0; p < k; ++p) m |= static_cast<uint32_t>((plane(p)[w] >> b) & 1) << p;
  return m;
}

void SliceVec::set(int i, uint32_t mask) {
  int w = i >> 6, b = i & 63;
  for (int p = 0; p < k; ++p) {
    uint64_t bit = 1ull << b;
    if ((mask >> p) & 1)
      plane(p)[w] |= bit;
    else
      plane(p)[w] &= ~bit;
  }
}

bool SliceVec::is_zero() const {
  for (uint64_t w : a)
    if (w) return false;
  return true;
}

int SliceVec::first_nonzero(int from_bit) const {
  int w0 = from_bit >> 6;
  for (int w = w0; w < words; ++w) {
    uint64_t m = 0;
    for (int p = 0; p < k; ++p) m |= plane(p)[w];
    if (w == w0) m &= ~0ull << (from_bit & 63);
    if (m) return w * 64 + __builtin_ctzll(m);
  }
  return -1;
}

void SliceVec::axpy(const Field& f, uint32_t lambda, const SliceVec& src, int from_word) {
  if (!lambda) return;
  int n = std::min(words, src.words);
  for (int p = 0; p < k; ++p) {
    uint32_t mp = f.mul(lambda, 1u << p);
    const uint64_t* s = src.plane(p);
    for (int r = 0; r < k; ++r) {
      if (!((mp >> r) & 1)) continue;
      uint64_t* d = plane(r);
      for (int w = from_word; w < n; ++w) d[w] ^= s[w];
    }
  }
}

void SliceVec::axpy_raw(const Field& f, uint32_t lambda, const uint64_t* src, int src_words,
                        int dst_off) {
  if (!lambda) return;
  int n = std::min(src_words, words - dst_off);
  for (int p = 0; p < k; ++p) {
    uint32_t mp = f.mul(lambda, 1u << p);
    const uint64_t* s = src + static_cast<size_t>(p) * src_words;
    for (int r = 0; r < k; ++r) {
      if (!((mp >> r) & 1)) continue;
      uint64_t* d = plane(r) + dst_off;
      for (int w = 0; w < n; ++w) d[w] ^= s[w];
    }
  }
}

void SliceVec::scale(const Field& f, uint32_t lambda) {
  if (lambda == 1) return;
  std::vector<uint64_t> out(a.size(), 0);
  for (int p = 0; p < k; ++p) {
    uint32_t mp = f.mul(lambda, 1u << p);
    const uint64_t* s = plane(p);
    for (int r = 0; r < k; ++r) {
      if (!((mp >> r) & 1)) continue;
      uint64_t* d = out.data() + static_cast<size_t>(r) * words;
      for (int w = 0; w < words; ++w) d[w] ^= s[w];
    }
  }
  a = std::move(out);
}

std::vector<uint32_t> SliceVec::to_dense() const {
  std::vector<uint32_t> v(nbits);
  for (int i = 0; i < nbits; ++i) v[i] = get(i);
  return v;
}

SliceVec SliceVec::from_dense(const Field& f, const std::vector<uint32_t>& v) {
  SliceVec s(f.k(), static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.set(static_cast<int>(i), v[i]);
  return s;
}

// --- SliceMat ---

uint32_t SliceMat::at(int r, int i) const {
  int w = i >> 6, b = i & 63;
  const uint64_t* rp = row(r);
  uint32_t m = 0;
  for (int p = 0; p < k_; ++p) m |= static_cast<uint32_t>((rp[static_cast<size_t>(p) * w_ + w] >> b) & 1) << p;
  return m;
}

void SliceMat::set(int r, int i, uint32_t mask) {
  int w = i >> 6, b = i & 63;
  uint64_t* rp = row(r);
  for (int p = 0; p < k_; ++p) {
    uint64_t bit = 1ull << b;
    if ((mask >> p) & 1)
      rp[static_cast<size_t>(p) * w_ + w] |= bit;
    else
      rp[static_cast<size_t>(p) * w_ + w] &= ~bit;
  }
}

void SliceMat::set_row(int r, const SliceVec& v) {
  uint64_t* rp = row(r);
  int n = std::min(w_, v.words);
  for (int p = 0; p < k_; ++p) {
    const uint64_t* s = v.plane(p);
    uint64_t* d = rp + static_cast<size_t>(p) * w_;
    std::fill(d, d + w_, 0);
    std::copy(s, s + n, d);
  }
}

SliceVec SliceMat::get_row(int r) const {
  SliceVec v(k_, nbits_);
  const uint64_t* rp = row(r);
  for (int p = 0; p < k_; ++p)
    std::copy(rp + static_cast<size_t>(p) * w_, rp + static_cast<size_t>(p + 1) * w_, v.plane(p));
  return v;
}

// --- M4R product over the field ---

void accumulate_product(const Field& f, const SliceMat& A, const SliceMat& B, SliceMat& C) {
  if (A.nbits() != B.rows() || C.rows() != A.rows() || C.nbits() != B.nbits())
    throw InvalidArgument("accumulate_product shape mismatch");
  const int k = f.k();
  const int m = A.nbits(), wb = B.words();
  if (m == 0 || wb == 0 || A.rows() == 0) return;

  // mu[p][q] = plane mask of x^p * x^q
  uint32_t mu[25][25];
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) mu[p][q] = f.mul(1u << p, 1u << q);

  const int ngroups = (m + 7) / 8;
  std::vector<uint64_t> tbl(static_cast<size_t>(k) * 256 * wb);
  auto tbl_at = [&](int q, int s) { return tbl.data() + (static_cast<size_t>(q) * 256 + s) * wb; };

  for (int g = 0; g < ngroups; ++g) {
    int base = g * 8;
    int cnt = std::min(8, m - base);
    // gray-style table build: tbl[s] = tbl[s without lowest bit] ^ B.row(base+lowbit)
    for (int q = 0; q < k; ++q) {
      std::fill(tbl_at(q, 0), tbl_at(q, 0) + wb, 0);
      for (int s = 1; s < (1 << cnt); ++s) {
        int low = __builtin_ctz(s);
        const uint64_t* brow = B.row(base + low) + static_cast<size_t>(q) * wb;
        const uint64_t* prev = tbl_at(q, s & (s - 1));
        uint64_t* dst = tbl_at(q, s);
        for (int w = 0; w < wb; ++w) dst[w] = prev[w] ^ brow[w];
      }
    }
    const int aw = base >> 6, ab = base & 63;  // byte-aligned within a word
    for (int r = 0; r < A.rows(); ++r) {
      const uint64_t* arow = A.row(r);
      uint64_t* crow = C.row(r);
      for (int p = 0; p < k; ++p) {
        int byte = static_cast<int>((arow[static_cast<size_t>(p) * A.words() + aw] >> ab) & ((1u << cnt) - 1));
        if (!byte) continue;
        for (int q = 0; q < k; ++q) {
          uint32_t targets = mu[p][q];
          if (!targets) continue;
          const uint64_t* t = tbl_at(q, byte);
          for (int rr = 0; rr < k; ++rr) {
            if (!((targets >> rr) & 1)) continue;
            uint64_t* c = crow + static_cast<size_t>(rr) * wb;
            for (int w = 0; w < wb; ++w) c[w] ^= t[w];
          }
        }
      }
    }
  }
}

// --- Eliminator ---

int Eliminator::add(SliceVec& v, SliceVec* eacc) {
  int pos = v.first_nonzero(0);
  while (pos >= 0) {
    int r = owner_[pos];
    if (r < 0) break;
    uint32_t lam = v.get(pos);  // echelon pivots are normalized to 1
    v.axpy(f_, lam, vec_[r], pos >> 6);
    if (track_ && eacc) eacc->axpy(f_, lam, expr_[r]);
    pos = v.first_nonzero(pos);
  }
  if (pos < 0) return -1;

  int ord = rank();
  uint32_t lam = v.get(pos);
  if (lam != 1) v.scale(f_, f_.inv(lam));
  if (track_) {
    SliceVec e = eacc ? *eacc : SliceVec(f_.k(), ord + 1);
    if (e.nbits < ord + 1) {
      SliceVec wider(f_.k(), ord + 1);
      wider.axpy(f_, 1, e);
      e = std::move(wider);
    }
    e.set(ord, 1);
    if (lam != 1) e.scale(f_, f_.inv(lam));
    expr_.push_back(std::move(e));
  }
  owner_[pos] = ord;
  vec_.push_back(std::move(v));
  return ord;
}

}  // namespace nichols
