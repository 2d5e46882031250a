#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/splitting.hpp"

namespace nichols {

// A restricted PBW generator: name, word-length degree, height (the power
// at which it truncates; the generator's exponents run over 0..height-1).
struct PbwGen {
  std::string name;
  int degree = 0;
  long long height = 0;
};

struct PbwData {
  std::vector<PbwGen> gens;   // in PBW order
  std::vector<NcPoly> polys;  // matching elements of T(V)
};

// Built-in PBW data for the finite cases (block with unipotent pairs,
// lstr with q22 = 1, pale, poseidon).  Throws for families or parameter
// ranges without a finite PBW basis.
PbwData builtin_pbw(const SpacePtr& sp);

// Hilbert series of the free graded-commutative span of the given PBW
// generators: the coefficient-wise product of (1 + t^d + ... + t^{d(h-1)}).
HilbertSeries pbw_hilbert(const SpacePtr& sp, const std::vector<PbwGen>& gens);

struct RelationResult {
  std::string name;
  int degree = 0;
  bool holds = false;
};

struct VerificationReport {
  std::string family;
  json params, field;
  std::vector<RelationResult> relations;
  bool relations_pass = false;
  std::vector<long long> h_engine, h_pbw;
  int compared_through = 0;
  Status engine_status = Status::Truncated;
  bool hilbert_match = false;
  std::optional<bool> top_monomial_nonzero;  // checked only on a full run
  bool pass = false;

  json to_json() const;
  std::string text() const;
};

// Checks every defining relation of the finite presentation in B(V), the
// engine-vs-PBW Hilbert series (full for the small families; a prefix for
// the large one unless `expensive`), and that the top PBW monomial survives.
VerificationReport relation_suite(const SpacePtr& sp, bool expensive = false);

struct Table1Row {
  std::string name;
  json params, field;
  long long expected_dim = 0;
  std::optional<long long> engine_dim;
  Status engine_status = Status::Truncated;
  int compared_through = 0;
  bool prefix_match = false;
  bool has_k = false;
  long long expected_k_dim = 0;
  std::optional<long long> k_dim;
  bool pass = false;

  json to_json() const;
  std::string text() const;
};

// Total-dimension check of one finite instance against its closed form,
// plus the matching check for the diagonal quotient K.
Table1Row table1_check(const SpacePtr& sp, bool expensive = false);

struct BosonReport {
  std::string family;
  json params, field;
  std::vector<long long> orders;
  bool realization_ok = false;
  std::vector<std::string> violations;
  long long group_order = 0;
  std::optional<long long> dim_nichols;
  std::string dim_source;  // "engine" or "pbw"
  std::optional<long long> product;
  std::string formula;
  long long formula_value = 0;
  bool pass = false;

  json to_json() const;
  std::string text() const;
};

// Dimension of the bosonization B(V) # kGamma over the finite quotient with
// the given factor orders (empty: the minimal valid orders).  Verifies the
// realization axioms at those orders and compares against the closed form.
BosonReport bosonization_dim(const SpacePtr& sp, std::vector<long long> orders = {},
                             bool expensive = false);

struct FuzzReport {
  int samples = 0;
  int failures = 0;
  std::vector<std::string> notes;
};

// Randomized identity checks in T(V): the skew-derivation Leibniz rule, the
// action being an algebra map, and additivity of the action in the group.
FuzzReport fuzz_properties(const SpacePtr& sp, int samples, uint64_t seed);

}  // namespace nichols
