#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braided.hpp"

namespace nichols {

// A word in the free algebra T(V): sequence of basis indices into
// space->labels.  The empty word is the unit.
using Word = std::vector<int>;

// Element of T(V) with coefficients in the space's field.  Terms are kept
// in lexicographic word order with nonzero coefficients only.
class NcPoly {
 public:
  explicit NcPoly(SpacePtr s) : sp_(std::move(s)) {}

  static NcPoly unit(SpacePtr s);                // 1
  static NcPoly gen(SpacePtr s, int i);          // x_i by basis index
  static NcPoly gen(SpacePtr s, const Label& l); // x_i by label
  static NcPoly term(SpacePtr s, const Word& w, uint32_t coeff);

  const SpacePtr& space() const { return sp_; }
  const std::map<Word, uint32_t>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  NcPoly operator+(const NcPoly& o) const;  // char 2: also the difference
  NcPoly operator*(const NcPoly& o) const;
  NcPoly scale(uint32_t lambda) const;

  void add_term(const Word& w, uint32_t coeff);  // in-place accumulate

  // word-length degree if homogeneous (unit counts as degree 0)
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  // common group degree of all words (nullopt if mixed or zero poly)
  std::optional<std::vector<long long>> gamma_degree() const;

  std::string str() const;
  static NcPoly parse(SpacePtr s, const std::string& text);

  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

 private:
  SpacePtr sp_;
  std::map<Word, uint32_t> t_;
};

// Action of the group element with exponent vector g (letter-wise via the
// realization's action matrices).
NcPoly group_act(const std::vector<long long>& g, const NcPoly& p);

// Skew derivation dual to x_i: d_i(x_j) = delta_ij, and
// d_i(uv) = d_i(u) (g_i . v) + u d_i(v) with g_i = deg(x_i).
NcPoly skew_derive(int i, const NcPoly& p);

// Braided adjoint of the primitive generator x_i:
// ad_c x_i (p) = x_i p + (g_i . p) x_i   (characteristic 2).
NcPoly ad_gen(int i, const NcPoly& p);

// Braided adjoint of a group-homogeneous element u:
// ad_c u (p) = u p + (g_{deg u} . p) u.  Throws if u is of mixed degree.
NcPoly ad_elem(const NcPoly& u, const NcPoly& p);

}  // namespace nichols
