#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "nichols/verify.hpp"

using namespace nichols;

namespace {

Field f4() { return Field(2); }

SpacePtr poseidon2() {
  Field f(1);
  return poseidon(f, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, {1, 1});
}

long long pbw_total(const SpacePtr& sp) {
  PbwData d = builtin_pbw(sp);
  long long t = 1;
  for (const auto& g : d.gens) t *= g.height;
  return t;
}

}  // namespace

TEST_CASE("restricted PBW data reproduces the closed-form totals") {
  Field f = f4();
  Fel p = f.element_of_order(3), one = f.one(), w = f.el(2);

  CHECK(pbw_total(block(Field(1).one(), 2)) == 16);
  CHECK(pbw_total(lstr(p, one, one)) == 128);
  CHECK(pbw_total(lstr(p, one, w)) == 256);
  CHECK(pbw_total(pale(p, one)) == 16);
  CHECK(pbw_total(pale(p, w)) == 108);
  CHECK(pbw_total(poseidon2()) == 131072);  // 2^{4t + |box|} at t = 2

  // no finite PBW basis outside the finite range
  CHECK_THROWS_AS(builtin_pbw(lstr(p, w, one)), InvalidArgument);
  CHECK_THROWS_AS(builtin_pbw(diagonal(f, {{2}})), InvalidArgument);
}

TEST_CASE("PBW generators match their polynomials in degree") {
  Field f = f4();
  PbwData d = builtin_pbw(lstr(f.element_of_order(3), f.one(), f.one()));
  REQUIRE(d.gens.size() == d.polys.size());
  for (size_t i = 0; i < d.gens.size(); ++i) {
    CAPTURE(d.gens[i].name);
    CHECK(d.polys[i].homogeneous_degree() == d.gens[i].degree);
    CHECK_FALSE(d.polys[i].is_zero());
  }
}

TEST_CASE("PBW Hilbert series is the product of truncated geometric factors") {
  SpacePtr sp = block(Field(1).one(), 2);
  PbwData d = builtin_pbw(sp);
  HilbertSeries h = pbw_hilbert(sp, d.gens);
  CHECK(h.dims == std::vector<long long>{1, 2, 3, 4, 3, 2, 1});
  REQUIRE(h.total.has_value());
  CHECK(*h.total == 16);
  CHECK(h.status == Status::Finite);
  CHECK(h.top_degree == 6);
}

TEST_CASE("relation suites for the finite presentations") {
  Field f = f4();
  Fel p = f.element_of_order(3), one = f.one(), w = f.el(2);

  for (SpacePtr sp : {block(Field(1).one(), 2), lstr(p, one, one), lstr(p, one, w),
                      pale(p, one), pale(p, w)}) {
    CAPTURE(family_name(sp->family));
    VerificationReport rep = relation_suite(sp);
    for (const auto& r : rep.relations) {
      CAPTURE(r.name);
      CHECK(r.holds);
    }
    CHECK(rep.relations_pass);
    CHECK(rep.hilbert_match);
    CHECK(rep.engine_status == Status::Finite);
    REQUIRE(rep.top_monomial_nonzero.has_value());
    CHECK(*rep.top_monomial_nonzero);
    CHECK(rep.pass);
  }
}

TEST_CASE("relation suite prefix for the large family") {
  VerificationReport rep = relation_suite(poseidon2(), false);
  CHECK(rep.relations_pass);
  CHECK(rep.hilbert_match);
  CHECK(rep.engine_status == Status::Truncated);  // prefix run only
  CHECK(rep.compared_through >= 8);
  CHECK_FALSE(rep.top_monomial_nonzero.has_value());
  CHECK(rep.pass);
  json j = rep.to_json();
  CHECK(j.at("pass").get<bool>());
  CHECK_FALSE(rep.text().empty());
}

TEST_CASE("total-dimension rows against the closed forms") {
  Field f = f4();
  Fel p = f.element_of_order(3), one = f.one(), w = f.el(2);

  Table1Row r1 = table1_check(lstr(p, one, one));
  CHECK(r1.expected_dim == 128);
  REQUIRE(r1.engine_dim.has_value());
  CHECK(*r1.engine_dim == 128);
  CHECK(r1.has_k);
  CHECK(r1.expected_k_dim == 8);
  REQUIRE(r1.k_dim.has_value());
  CHECK(*r1.k_dim == 8);
  CHECK(r1.pass);

  Table1Row rw = table1_check(lstr(p, one, w));
  CHECK(rw.expected_dim == 256);
  CHECK(rw.expected_k_dim == 16);
  CHECK(rw.pass);

  Table1Row p1 = table1_check(pale(p, one));
  CHECK(p1.expected_dim == 16);
  CHECK(p1.expected_k_dim == 4);
  CHECK(p1.pass);

  Table1Row pw = table1_check(pale(p, w));
  CHECK(pw.expected_dim == 108);
  CHECK(pw.expected_k_dim == 27);
  CHECK(pw.pass);

  Table1Row j = table1_check(block(Field(1).one(), 2));
  CHECK(j.expected_dim == 16);
  CHECK(j.pass);

  // the large family is checked as a prefix unless expensive
  Table1Row ps = table1_check(poseidon2());
  CHECK(ps.expected_dim == 131072);
  CHECK(ps.expected_k_dim == 512);
  CHECK(ps.prefix_match);
  CHECK(ps.pass);
  CHECK_FALSE(ps.engine_dim.has_value());
}

TEST_CASE("bosonization dimensions over minimal finite quotients") {
  Field f = f4();
  Fel p3 = f.element_of_order(3), one = f.one(), w = f.el(2);

  // unipotent block: minimal order 2, dimension 16 * 2
  BosonReport bj = bosonization_dim(block(Field(1).one(), 2));
  CHECK(bj.realization_ok);
  CHECK(bj.orders == std::vector<long long>{2});
  CHECK(bj.group_order == 2);
  REQUIRE(bj.dim_nichols.has_value());
  CHECK(*bj.dim_nichols == 16);
  REQUIRE(bj.product.has_value());
  CHECK(*bj.product == 32);
  CHECK(bj.formula_value == 32);
  CHECK(bj.pass);

  // block and point with p of order 3: orders (2M, 2M) = (6, 6), 2^9 M^2
  BosonReport bl = bosonization_dim(lstr(p3, one, one));
  CHECK(bl.orders == std::vector<long long>{6, 6});
  CHECK(bl.formula_value == 512 * 9);
  CHECK(*bl.product == 128 * 36);
  CHECK(bl.pass);

  BosonReport bw = bosonization_dim(lstr(p3, one, w));
  CHECK(bw.formula_value == 1024 * 9);  // 2^10 M^2
  CHECK(bw.pass);

  // pale block: orders (M, 2M), 2^5 M^2
  BosonReport bp = bosonization_dim(pale(p3, one));
  CHECK(bp.orders == std::vector<long long>{3, 6});
  CHECK(bp.formula_value == 32 * 9);
  CHECK(bp.pass);

  // pale block, generic point: orders (M, lcm(6, M)), 2^2 3^3 M P
  BosonReport bpw = bosonization_dim(pale(p3, w));
  CHECK(bpw.orders == std::vector<long long>{3, 6});
  CHECK(bpw.formula_value == 4 * 27 * 3 * 6);
  CHECK(bpw.pass);

  // two blocks and a point over GF(2): uniform order 2, 2^17 * N^theta
  BosonReport bq = bosonization_dim(poseidon2());
  CHECK(bq.orders == std::vector<long long>{2, 2, 2});
  CHECK(bq.formula_value == 131072LL * 8);
  CHECK(bq.pass);
  CHECK(bq.dim_source == "pbw");  // prefix run: total from the PBW basis
}

TEST_CASE("bosonization rejects incompatible factor orders") {
  BosonReport odd = bosonization_dim(block(Field(1).one(), 2), {3});
  CHECK_FALSE(odd.realization_ok);
  CHECK_FALSE(odd.violations.empty());
  CHECK_FALSE(odd.pass);

  BosonReport even = bosonization_dim(block(Field(1).one(), 2), {4});
  CHECK(even.realization_ok);
  CHECK(even.pass);
  CHECK(*even.product == 64);

  Field f = f4();
  BosonReport wrong = bosonization_dim(lstr(f.element_of_order(3), f.one(), f.one()), {2, 2});
  CHECK_FALSE(wrong.realization_ok);  // p of order 3 needs 6 | order
  CHECK_FALSE(wrong.pass);
}

TEST_CASE("randomized identity checks find no failures") {
  Field f = f4();
  for (SpacePtr sp : {block(Field(1).one(), 2),
                      lstr(f.element_of_order(3), f.el(2), f.el(2)),
                      pale(f.element_of_order(3), f.el(2)), poseidon2()}) {
    FuzzReport fr = fuzz_properties(sp, 60, 1234);
    CHECK(fr.samples == 60);
    CAPTURE(family_name(sp->family));
    for (const auto& n : fr.notes) CAPTURE(n);
    CHECK(fr.failures == 0);
  }
  // determinism of the sampler
  FuzzReport a = fuzz_properties(block(Field(1).one(), 2), 10, 7);
  FuzzReport b = fuzz_properties(block(Field(1).one(), 2), 10, 7);
  CHECK(a.notes == b.notes);
}
