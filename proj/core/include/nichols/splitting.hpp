#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/nichols.hpp"

namespace nichols {

// The splitting datum of V = V1 (+) V2: generators of the right coideal
// subalgebra K^1 (iterated braided adjoints of B(V1) generators applied to
// the complement), their tensor degrees, the induced diagonal braiding
// matrix, and the designated next elements that vanish in B(V).
struct K1Data {
  SpacePtr ambient;
  std::vector<int> block_indices;               // basis indices spanning V1
  std::vector<NcPoly> gens;
  std::vector<std::string> names;
  std::vector<int> tv_degrees;
  std::vector<std::vector<uint32_t>> q_matrix;  // induced diagonal braiding
  std::vector<NcPoly> beyond;
  std::vector<std::string> beyond_names;
};

K1Data k1_for(const SpacePtr& sp);

struct DynkinEdge {
  int a = 0, b = 0;
  uint32_t label = 0;
  bool operator==(const DynkinEdge&) const = default;
};

// Generalized Dynkin diagram of a diagonal braiding: vertex i carries q_ii,
// an edge joins i and j iff q_ij q_ji != 1 and carries that product.
struct DynkinDiagram {
  std::vector<uint32_t> vertices;
  std::vector<DynkinEdge> edges;             // a < b, listed lexicographically
  std::vector<std::vector<int>> components;  // ordered by smallest vertex

  std::string text(const Field& f) const;
  json to_json(const Field& f) const;
  bool operator==(const DynkinDiagram&) const = default;
};

DynkinDiagram dynkin(const Field& f, const std::vector<std::vector<uint32_t>>& q);

// Reference diagram for the families whose K^1 quotient obstructs a finite
// dimension: a complete graph on the z-generators (lstr with q22 != 1) and
// a 3-leaf star for the matching block-and-points instance.
DynkinDiagram expected_obstruction(const SpacePtr& sp);

struct SplitReport {
  std::string family;
  json params, field;
  int k1_count = 0;
  std::vector<int> k1_degrees;
  std::vector<std::vector<uint32_t>> q_matrix;
  DynkinDiagram diagram;
  std::vector<long long> h_space, h_block, h_k_weighted, h_product;
  int compared_through = 0;
  bool hilbert_match = false;
  bool gens_nonzero = false;
  std::vector<std::pair<std::string, bool>> vanishing;  // (name, vanishes)
  bool q_consistent = false;
  std::optional<long long> total_space, total_product;
  Status space_status = Status::Truncated;
  bool pass = false;

  json to_json(const Field& f) const;
  std::string text(const Field& f) const;
};

// Cross-checks the graded splitting B(V) ~ B(V1) (x) K: coefficient-wise
// Hilbert match through max_degree (K counted by the tensor-degree weights
// of its generators), K^1 generators nonzero in B(V), the designated next
// elements vanishing, and the induced q-matrix consistent with the group
// action modulo the Nichols relations.
SplitReport check_k1_consistency(const SpacePtr& sp, int max_degree);

}  // namespace nichols
