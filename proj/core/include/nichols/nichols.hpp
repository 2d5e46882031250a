#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/freealg.hpp"

namespace nichols {

enum class Status { Finite, Truncated };
std::string status_name(Status s);

struct HilbertSeries {
  std::string family;
  json params;
  json field;
  std::vector<long long> dims;
  std::optional<long long> total;
  Status status = Status::Truncated;
  int top_degree = 0;

  json to_json() const;
};

struct EngineOptions {
  int max_degree = 16;
  // per-generator weights for the weighted Hilbert series (default all 1);
  // weight_cutoff prunes candidates of larger weight — only sound for
  // diagonal actions, and the result is then flagged as truncated
  std::vector<int> weights;
  std::optional<int> weight_cutoff;
  bool keep_tables = true;  // false: drop old degree tables (no projection)
};

// Graded basis of the Nichols algebra B(V), built degree by degree with the
// zero-criterion: w != 0 in B^n iff some skew derivation d_i(w) != 0.
// Degree-n candidates b*x_j are processed with b ascending, then j, and the
// first nonzero coordinate of the reduced fingerprint is the pivot.
class GradedBasis {
 public:
  SpacePtr space;
  Status status = Status::Truncated;
  std::vector<int> dims;  // degree 0..top_degree (no trailing zero entry)
  int top_degree = 0;
  bool pruned = false;       // some candidate was skipped by weight cutoff
  bool tables_kept = true;
  std::vector<int> gen_weights;
  std::vector<std::vector<int>> wdeg;                      // weighted degree per element
  std::vector<std::vector<std::pair<int, int>>> provenance;  // (b, j) per element

  // derivation tables: Dt[n][i] is dims[n] x dims[n-1], row m = d_i(basis_m);
  // multiplication tables: Mt[n][j] is dims[n] x dims[n+1], row b = basis_b * x_j
  std::vector<std::vector<SliceMat>> Dt;
  std::vector<std::vector<SliceMat>> Mt;

  std::optional<long long> total() const;
  std::vector<long long> dims_ll() const;
  std::vector<long long> weighted_dims() const;

  // Coordinates of a homogeneous p in the degree-d basis (empty = zero).
  std::vector<uint32_t> project(const NcPoly& p, int* degree_out = nullptr) const;
  bool is_zero_in_nichols(const NcPoly& p) const;

  HilbertSeries hilbert() const;
};

GradedBasis compute(const SpacePtr& space, const EngineOptions& opts = {});

// Rank over the field of the Woronowicz symmetrizer on V^{⊗ n}, i.e. the sum
// of the braid-monoid lifts of all permutations.  Equals dim B^n(V); computed
// without any use of skew derivations (independent oracle).
long long symmetrizer_dim(const SpacePtr& space, int n);

// Exposed for cross-validation in tests.
FMatrix symmetrizer_matrix(const SpacePtr& space, int n);             // coset-factored
FMatrix symmetrizer_matrix_bruteforce(const SpacePtr& space, int n);  // literal sum of lifts

}  // namespace nichols
