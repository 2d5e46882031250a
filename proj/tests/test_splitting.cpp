#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nichols/splitting.hpp"

using namespace nichols;

namespace {

Field f4() { return Field(2); }

SpacePtr star_instance() {
  // block plus two points; the first point has a trivial self-braiding and a
  // nontrivial tie to the second, which yields the four-vertex star.
  Field f = f4();
  return block_points(f, {{1, 1, 1}, {1, 1, 2}, {1, 1, 2}}, {1, 1, 0});
}

SpacePtr poseidon2() {
  Field f(1);
  return poseidon(f, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, {1, 1});
}

}  // namespace

TEST_CASE("splitting generators of the block-and-point family") {
  Field f = f4();
  Fel p = f.element_of_order(3), one = f.one(), w = f.el(2);

  K1Data k0 = k1_for(lstr(p, one, f.zero()));
  CHECK(k0.names == std::vector<std::string>{"z0"});
  CHECK(k0.tv_degrees == std::vector<int>{1});
  CHECK(k0.beyond_names == std::vector<std::string>{"z1"});

  K1Data k1 = k1_for(lstr(p, one, one));
  CHECK(k1.names == std::vector<std::string>{"z0", "z1", "z2"});
  CHECK(k1.tv_degrees == std::vector<int>{1, 2, 3});
  CHECK(k1.beyond_names == std::vector<std::string>{"z3"});
  CHECK(k1.block_indices == std::vector<int>{0, 1});

  K1Data kw = k1_for(lstr(p, one, w));
  CHECK(kw.names == std::vector<std::string>{"z0", "z1", "z2", "z3"});
  CHECK(kw.tv_degrees == std::vector<int>{1, 2, 3, 4});

  // induced braiding: q(i,j) = q21^{j-i} q22 with q21 the inverse of p
  uint32_t q21 = f.inv(p.mask());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(k1.q_matrix[i][j] == f.mul(f.pow(q21, j - i), 1));
  // each generator is a nonzero polynomial of the right word length
  for (size_t i = 0; i < k1.gens.size(); ++i)
    CHECK(k1.gens[i].homogeneous_degree() == k1.tv_degrees[i]);
}

TEST_CASE("splitting generators of the pale family") {
  Field f = f4();
  K1Data k = k1_for(pale(f.element_of_order(3), f.el(2)));
  CHECK(k.names == std::vector<std::string>{"z0", "z1"});
  CHECK(k.tv_degrees == std::vector<int>{1, 2});
  CHECK(k.beyond_names == std::vector<std::string>{"z2", "w1"});
  CHECK(k.q_matrix[0][0] == 2);
  CHECK(k.q_matrix[1][1] == 2);
}

TEST_CASE("splitting generators of the star instance") {
  K1Data k = k1_for(star_instance());
  CHECK(k.names == std::vector<std::string>{"z2_0", "z2_1", "z2_2", "z3_0"});
  CHECK(k.tv_degrees == std::vector<int>{1, 2, 3, 1});
  CHECK(k.beyond_names == std::vector<std::string>{"z2_3", "z3_1"});
  // the three chain vertices are isolated among themselves but all tie to
  // the lone point with label q23*q32
  Field f = f4();
  for (int i = 0; i < 3; ++i) {
    CHECK(k.q_matrix[i][i] == 1);
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(f.mul(k.q_matrix[i][j], k.q_matrix[j][i]) == 1);
    CHECK(f.mul(k.q_matrix[i][3], k.q_matrix[3][i]) == 2);  // q23*q32
  }
  CHECK(k.q_matrix[3][3] == 2);
}

TEST_CASE("splitting generators of the two-block-one-point family") {
  K1Data k = k1_for(poseidon2());
  CHECK(k.gens.size() == 9);  // exponent box (0..2) x (0..2)
  CHECK(k.names.front() == "s_0_0");
  CHECK(k.names.back() == "s_2_2");
  CHECK(k.tv_degrees.front() == 1);
  CHECK(k.tv_degrees.back() == 5);
  CHECK(k.beyond_names == std::vector<std::string>{"s_3_0", "s_0_3"});
  for (const auto& row : k.q_matrix)
    for (uint32_t v : row) CHECK(v == 1);  // all ties trivial over GF(2)
}

TEST_CASE("dynkin diagrams of diagonal matrices") {
  Field f = f4();
  // 2 x 2 with a nontrivial tie
  DynkinDiagram d = dynkin(f, {{2, 1}, {2, 3}});
  CHECK(d.vertices == std::vector<uint32_t>{2, 3});
  REQUIRE(d.edges.size() == 1);
  CHECK(d.edges[0] == DynkinEdge{0, 1, 2});
  CHECK(d.components == std::vector<std::vector<int>>{{0, 1}});

  // disconnected: q12 q21 = 1
  DynkinDiagram e = dynkin(f, {{2, 2}, {3, 3}});
  CHECK(e.edges.empty());
  CHECK(e.components == std::vector<std::vector<int>>{{0}, {1}});

  // triangle on three vertices
  DynkinDiagram t = dynkin(f, {{2, 2, 2}, {2, 2, 2}, {2, 2, 2}});
  CHECK(t.edges.size() == 3);
  CHECK(t.components.size() == 1);
  for (const auto& ed : t.edges) CHECK(ed.label == 3);  // 2*2 = 3 in GF(4)

  CHECK_THROWS_AS(dynkin(f, {{0}}), InvalidArgument);
}

TEST_CASE("obstruction diagram of the unbounded point cases") {
  Field f = f4();
  Fel p = f.element_of_order(3), w = f.el(2);

  // a = 1: complete triangle, all vertices q22, all edges q22^2
  SpacePtr s1 = lstr(p, w, f.one());
  DynkinDiagram d1 = expected_obstruction(s1);
  CHECK(d1.vertices == std::vector<uint32_t>{2, 2, 2});
  CHECK(d1.edges.size() == 3);
  for (const auto& e : d1.edges) CHECK(e.label == 3);
  CHECK(dynkin(f, k1_for(s1).q_matrix) == d1);

  // generic a: complete graph on four vertices
  SpacePtr sw = lstr(p, w, w);
  DynkinDiagram dw = expected_obstruction(sw);
  CHECK(dw.vertices.size() == 4);
  CHECK(dw.edges.size() == 6);
  CHECK(dynkin(f, k1_for(sw).q_matrix) == dw);

  // star instance: three leaves tied to the lone point
  SpacePtr st = star_instance();
  DynkinDiagram ds = expected_obstruction(st);
  CHECK(ds.vertices == std::vector<uint32_t>{1, 1, 1, 2});
  CHECK(ds.edges ==
        std::vector<DynkinEdge>{{0, 3, 2}, {1, 3, 2}, {2, 3, 2}});
  CHECK(ds.components.size() == 1);
  CHECK(dynkin(f, k1_for(st).q_matrix) == ds);

  // no obstruction diagram for the finite cases
  CHECK_THROWS_AS(expected_obstruction(lstr(p, f.one(), f.one())), InvalidArgument);
  CHECK_THROWS_AS(expected_obstruction(lstr(p, w, f.zero())), InvalidArgument);
  CHECK_THROWS_AS(expected_obstruction(poseidon2()), InvalidArgument);
}

TEST_CASE("graded splitting consistency: finite block-and-point cases") {
  Field f = f4();
  Fel p = f.element_of_order(3), one = f.one(), w = f.el(2);

  SplitReport r1 = check_k1_consistency(lstr(p, one, one), 12);
  CHECK(r1.k1_count == 3);
  CHECK(r1.hilbert_match);
  CHECK(r1.gens_nonzero);
  CHECK(r1.q_consistent);
  for (const auto& [name, vanishes] : r1.vanishing) {
    CAPTURE(name);
    CHECK(vanishes);
  }
  REQUIRE(r1.total_space.has_value());
  REQUIRE(r1.total_product.has_value());
  CHECK(*r1.total_space == 128);
  CHECK(*r1.total_product == 128);
  CHECK(r1.pass);

  SplitReport rw = check_k1_consistency(lstr(p, one, w), 16);
  CHECK(rw.k1_count == 4);
  CHECK(rw.pass);
  CHECK(*rw.total_space == 256);

  SplitReport r0 = check_k1_consistency(lstr(p, one, f.zero()), 8);
  CHECK(r0.k1_count == 1);
  CHECK(r0.pass);
  CHECK(*r0.total_space == 32);
}

TEST_CASE("graded splitting consistency: pale cases") {
  Field f = f4();
  Fel p = f.element_of_order(3);

  SplitReport r1 = check_k1_consistency(pale(p, f.one()), 6);
  CHECK(r1.k1_count == 2);
  CHECK(r1.pass);
  CHECK(*r1.total_space == 16);
  CHECK(*r1.total_product == 16);

  SplitReport rw = check_k1_consistency(pale(p, f.el(2)), 14);
  CHECK(rw.k1_count == 2);
  CHECK(rw.pass);
  CHECK(*rw.total_space == 108);
  CHECK(*rw.total_product == 108);
}

TEST_CASE("graded splitting consistency: prefix of the unbounded star") {
  SplitReport r = check_k1_consistency(star_instance(), 6);
  CHECK(r.k1_count == 4);
  CHECK(r.hilbert_match);  // the factorization holds degree-by-degree anyway
  CHECK(r.gens_nonzero);
  CHECK(r.q_consistent);
  CHECK(r.space_status == Status::Truncated);
  CHECK_FALSE(r.total_space.has_value());
}

TEST_CASE("graded splitting consistency: two blocks and a point") {
  SplitReport r = check_k1_consistency(poseidon2(), 8);
  CHECK(r.k1_count == 9);
  CHECK(r.hilbert_match);
  CHECK(r.gens_nonzero);
  CHECK(r.q_consistent);
  for (const auto& [name, vanishes] : r.vanishing) {
    CAPTURE(name);
    CHECK(vanishes);
  }
  CHECK(r.pass);
}

TEST_CASE("splitting reports serialize deterministically") {
  Field f = f4();
  SplitReport r = check_k1_consistency(pale(f.element_of_order(3), f.one()), 6);
  json a = r.to_json(f);
  json b = r.to_json(f);
  CHECK(a.dump() == b.dump());
  CHECK(a.at("pass").get<bool>() == r.pass);
  CHECK_FALSE(r.text(f).empty());
}

TEST_CASE("no splitting datum for plain families") {
  CHECK_THROWS_AS(k1_for(block(Field(1).one(), 2)), InvalidArgument);
  CHECK_THROWS_AS(k1_for(nullptr), InvalidArgument);
}
