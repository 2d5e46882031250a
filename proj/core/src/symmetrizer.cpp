#include <algorithm>
#include <map>
#include <tuple>

#include "nichols/errors.hpp"
#include "nichols/nichols.hpp"

namespace nichols {

namespace {

using Dense = std::vector<uint32_t>;  // D x D row-major masks

constexpr long long kEntryGuard = 2'000'000;  // guard on d^n
constexpr long long kDenseGuard = 4608;       // guard on the dense dimension

struct BraidCols {
  int d;
  // column (i,j) of c: list of (k, l, coef) with c(x_i ox x_j) ∋ coef x_k ox x_l
  std::vector<std::vector<std::tuple<int, int, uint32_t>>> cols;

  explicit BraidCols(const BraidedSpace& sp) : d(sp.dim()) {
    cols.resize(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            uint32_t coef = sp.c_entry(k, l, i, j);
            if (coef) cols[static_cast<size_t>(i) * d + j].emplace_back(k, l, coef);
          }
  }
};

long long checked_power(int d, int n) {
  long long D = 1;
  for (int s = 0; s < n; ++s) {
    D *= d;
    if (D > kEntryGuard)
      throw SizeGuard("tensor power dimension exceeds the symmetrizer guard");
  }
  return D;
}

// Y = C_pos * X where C_pos acts on tensor slots (pos, pos+1) of m slots.
Dense apply_c(const Field& f, const BraidCols& bc, int m, int pos, const Dense& X, long long D) {
  Dense Y(X.size(), 0);
  const int d = bc.d;
  long long st1 = 1;
  for (int s = 0; s < m - 2 - pos; ++s) st1 *= d;
  for (long long rp = 0; rp < D; ++rp) {
    int a = static_cast<int>((rp / (st1 * d)) % d);
    int b = static_cast<int>((rp / st1) % d);
    for (const auto& [kk, ll, coef] : bc.cols[static_cast<size_t>(a) * d + b]) {
      long long r = rp + (static_cast<long long>(kk - a) * d + (ll - b)) * st1;
      const uint32_t* xs = &X[static_cast<size_t>(rp) * D];
      uint32_t* yd = &Y[static_cast<size_t>(r) * D];
      for (long long c = 0; c < D; ++c)
        if (xs[c]) yd[c] ^= f.mul(coef, xs[c]);
    }
  }
  return Y;
}

// S_m = R_m (S_{m-1} ox id) with R_m = sum over j = 1..m of the coset
// representative lift c_j c_{j+1} ... c_{m-1} (j = m contributes id), the
// words moving the last strand to position j.  The terms telescope:
// W_m = X and W_j = c_j W_{j+1} give R_m X = W_1 + ... + W_m.
Dense build_symmetrizer(const BraidedSpace& sp, int n, long long& D_out) {
  const Field& f = sp.field;
  const int d = sp.dim();
  long long D = checked_power(d, n);
  if (D > kDenseGuard)
    throw SizeGuard("dense symmetrizer dimension exceeds the memory guard");
  D_out = D;
  BraidCols bc(sp);

  Dense S(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) S[static_cast<size_t>(i) * d + i] = 1;  // S_1 = id
  long long Dm = d;
  for (int m = 2; m <= n; ++m) {
    long long Dn = Dm * d;
    Dense E(static_cast<size_t>(Dn) * Dn, 0);
    for (long long r = 0; r < Dm; ++r)
      for (long long c = 0; c < Dm; ++c) {
        uint32_t v = S[static_cast<size_t>(r) * Dm + c];
        if (!v) continue;
        for (int a = 0; a < d; ++a)
          E[static_cast<size_t>(r * d + a) * Dn + (c * d + a)] = v;
      }
    S = Dense();  // free before allocating the accumulators
    Dense acc = E;
    Dense sum = E;
    for (int j = m - 1; j >= 1; --j) {
      acc = apply_c(f, bc, m, j - 1, acc, Dn);
      for (size_t t = 0; t < sum.size(); ++t) sum[t] ^= acc[t];
    }
    S = std::move(sum);
    Dm = Dn;
  }
  return S;
}

Dense build_bruteforce(const BraidedSpace& sp, int n, long long& D_out) {
  const Field& f = sp.field;
  const int d = sp.dim();
  long long D = checked_power(d, n);
  if (D > 256) throw SizeGuard("brute-force symmetrizer is restricted to tiny sizes");
  D_out = D;

  // dense matrices of the braid generators c_1..c_{n-1} on n slots
  BraidCols bc(sp);
  std::vector<FMatrix> cmat;
  for (int pos = 0; pos + 1 < n; ++pos) {
    FMatrix C(f, static_cast<int>(D), static_cast<int>(D));
    long long st1 = 1;
    for (int s = 0; s < n - 2 - pos; ++s) st1 *= d;
    for (long long col = 0; col < D; ++col) {
      int i = static_cast<int>((col / (st1 * d)) % d);
      int j = static_cast<int>((col / st1) % d);
      for (const auto& [kk, ll, coef] : bc.cols[static_cast<size_t>(i) * d + j]) {
        long long row = col + (static_cast<long long>(kk - i) * d + (ll - j)) * st1;
        C.at(static_cast<int>(row), static_cast<int>(col)) ^= coef;
      }
    }
    cmat.push_back(std::move(C));
  }

  // lift every permutation along a reduced word (any descent factorization)
  std::vector<int> base(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto inversions = [](const std::vector<int>& q) {
    int inv = 0;
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = i + 1; j < q.size(); ++j)
        if (q[i] > q[j]) ++inv;
    return inv;
  };
  std::sort(perms.begin(), perms.end(), [&](const auto& x, const auto& y) {
    return inversions(x) < inversions(y);
  });

  std::map<std::vector<int>, FMatrix> lift;
  lift.emplace(base, FMatrix::identity(f, static_cast<int>(D)));
  Dense S(static_cast<size_t>(D) * D, 0);
  for (const auto& q : perms) {
    if (q != base) {
      int desc = -1;
      for (int i = 0; i + 1 < n; ++i)
        if (q[static_cast<size_t>(i)] > q[static_cast<size_t>(i + 1)]) {
          desc = i;
          break;
        }
      std::vector<int> shorter = q;
      std::swap(shorter[static_cast<size_t>(desc)], shorter[static_cast<size_t>(desc + 1)]);
      // q = shorter * s_desc with lengths adding, so T_q = T_shorter * c_{desc}
      lift.emplace(q, lift.at(shorter).mul(cmat[static_cast<size_t>(desc)]));
    }
    const FMatrix& T = lift.at(q);
    for (long long r = 0; r < D; ++r)
      for (long long c = 0; c < D; ++c)
        S[static_cast<size_t>(r) * D + c] ^= T.at(static_cast<int>(r), static_cast<int>(c));
  }
  return S;
}

FMatrix to_fmatrix(const Field& f, const Dense& S, long long D) {
  FMatrix M(f, static_cast<int>(D), static_cast<int>(D));
  for (long long r = 0; r < D; ++r)
    for (long long c = 0; c < D; ++c) M.at(static_cast<int>(r), static_cast<int>(c)) = S[static_cast<size_t>(r) * D + c];
  return M;
}

}  // namespace

long long symmetrizer_dim(const SpacePtr& space, int n) {
  if (!space) throw InvalidArgument("symmetrizer_dim: null space");
  if (n < 0) throw InvalidArgument("symmetrizer_dim: negative degree");
  if (n == 0) return 1;
  const Field& f = space->field;
  long long D = 0;
  Dense S = build_symmetrizer(*space, n, D);
  Eliminator elim(f, static_cast<int>(D), false);
  for (long long r = 0; r < D; ++r) {
    SliceVec v(f.k(), static_cast<int>(D));
    for (long long c = 0; c < D; ++c) {
      uint32_t m = S[static_cast<size_t>(r) * D + c];
      if (m) v.set(static_cast<int>(c), m);
    }
    elim.add(v, nullptr);
  }
  return elim.rank();
}

FMatrix symmetrizer_matrix(const SpacePtr& space, int n) {
  if (!space) throw InvalidArgument("symmetrizer_matrix: null space");
  if (n < 1) throw InvalidArgument("symmetrizer_matrix: degree must be >= 1");
  long long D = 0;
  Dense S = build_symmetrizer(*space, n, D);
  return to_fmatrix(space->field, S, D);
}

FMatrix symmetrizer_matrix_bruteforce(const SpacePtr& space, int n) {
  if (!space) throw InvalidArgument("symmetrizer_matrix_bruteforce: null space");
  if (n < 1) throw InvalidArgument("symmetrizer_matrix_bruteforce: degree must be >= 1");
  long long D = 0;
  Dense S = build_bruteforce(*space, n, D);
  return to_fmatrix(space->field, S, D);
}

}  // namespace nichols
