#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nichols/field.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

using json = nlohmann::ordered_json;

// Basis labels: integers i or half-integers i + 1/2, encoded as 2i / 2i+1.
// Text form: "2" for x_2, "1h" for x_{1+1/2}.
struct Label {
  int twice = 0;

  static Label integer(int i) { return {2 * i}; }
  static Label half(int i) { return {2 * i + 1}; }

  bool is_half() const { return twice & 1; }
  int floor_part() const { return twice / 2; }
  std::string str() const {
    return std::to_string(twice / 2) + (is_half() ? "h" : "");
  }
  bool operator==(const Label&) const = default;
};

Label parse_label(const std::string& s);

// Yetter-Drinfeld realization over an abelian group Z^r (or a finite
// quotient): per-generator commuting action matrices (column convention:
// g_r . x_j = sum_k action[r](k,j) x_k) and a group degree for each basis
// vector.  orders[r] == 0 means an infinite cyclic factor.
struct Realization {
  std::vector<long long> orders;
  std::vector<FMatrix> action;
  std::vector<std::vector<long long>> degree;

  int generators() const { return static_cast<int>(action.size()); }
};

struct RealizationCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

enum class Family { Diagonal, Block, Lstr, BlockPoints, Poseidon, Pale, Custom };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Family parameters, kept for reports and for splitting-datum construction.
struct FamilyParams {
  uint32_t eps = 0;
  int ell = 0;                               // block
  uint32_t p = 0, q22 = 0, a = 0;            // lstr / pale
  std::vector<std::vector<uint32_t>> q;      // diagonal / block_points / poseidon
  std::vector<uint32_t> avec;                // block_points / poseidon
  int t = 0;                                 // poseidon
};

// A braided vector space with basis (x_i), braiding c as a dim^2 x dim^2
// matrix over the field (column (i*dim+j) holds c(x_i ⊗ x_j) in the
// x_k ⊗ x_l coordinates, row k*dim+l), and an optional realization.
struct BraidedSpace {
  Field field;
  Family family = Family::Custom;
  FamilyParams params;
  std::vector<Label> labels;
  FMatrix c;
  std::optional<Realization> real;

  BraidedSpace(const Field& f) : field(f), c(f, 0, 0) {}

  int dim() const { return static_cast<int>(labels.size()); }
  uint32_t c_entry(int k, int l, int i, int j) const {
    return c.at(k * dim() + l, i * dim() + j);
  }
  int label_index(const Label& l) const;

  // Action matrix of the group element with exponent vector g.
  FMatrix action_of(const std::vector<long long>& g) const;
  // Action matrix of g_{deg x_i}.
  FMatrix action_of_degree(int i) const;
};

using SpacePtr = std::shared_ptr<const BraidedSpace>;

// Family constructors.  Each builds the canonical realization over Z^r,
// derives the braiding from it, and validates the family hypotheses.
SpacePtr diagonal(const Field& f, const std::vector<std::vector<uint32_t>>& q);
SpacePtr block(const Fel& eps, int ell);
SpacePtr lstr(const Fel& p, const Fel& q22, const Fel& a);
SpacePtr block_points(const Field& f, const std::vector<std::vector<uint32_t>>& q,
                      const std::vector<uint32_t>& avec);
SpacePtr poseidon(const Field& f, const std::vector<std::vector<uint32_t>>& q,
                  const std::vector<uint32_t>& avec);
SpacePtr pale(const Fel& p, const Fel& q22);

// Structured checks of the realization axioms: shapes, invertible and
// pairwise-commuting actions, finite factor orders (A^N = I), and the
// compatibility c(x_i ⊗ x_j) = (g_{deg x_i} . x_j) ⊗ x_i.
RealizationCheck validate_realization(const BraidedSpace& sp);

// Hexagon / Yang-Baxter check (c ⊗ id)(id ⊗ c)(c ⊗ id) = (id ⊗ c)(c ⊗ id)(id ⊗ c),
// evaluated sparsely on basis triples.
bool braid_equation_holds(const BraidedSpace& sp);
bool braiding_invertible(const BraidedSpace& sp);

// Replace the infinite cyclic factors by finite ones of the given orders.
Realization with_orders(const Realization& r, const std::vector<long long>& orders);

// Restriction to a subset of basis labels (throws unless the braiding and
// the actions leave the span of the subset invariant).
SpacePtr restrict_space(const SpacePtr& sp, const std::vector<int>& keep);

json space_to_json(const BraidedSpace& sp);
SpacePtr space_from_json(const json& j);

json params_to_json(const BraidedSpace& sp);   // family parameter block
json field_to_json(const Field& f);
Field field_from_json(const json& j);

}  // namespace nichols
