#include "nichols/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

struct Rel {
  std::string name;
  NcPoly poly;
};

void add_block_relations(std::vector<Rel>& out, const SpacePtr& sp, int i1, int i2,
                         const std::string& n1, const std::string& n2) {
  NcPoly x1 = NcPoly::gen(sp, i1), x2 = NcPoly::gen(sp, i2);
  out.push_back({n1 + "^2", x1 * x1});
  out.push_back({n2 + "^4", x2 * x2 * x2 * x2});
  out.push_back({n2 + "^2 " + n1 + " + " + n1 + " " + n2 + "^2 + " + n1 + " " + n2 + " " + n1,
                 x2 * x2 * x1 + x1 * x2 * x2 + x1 * x2 * x1});
  out.push_back({n1 + n2 + n1 + n2 + " + " + n2 + n1 + n2 + n1,
                 x1 * x2 * x1 * x2 + x2 * x1 * x2 * x1});
}

std::vector<Rel> relations_for(const SpacePtr& sp) {
  const Field& f = sp->field;
  std::vector<Rel> out;
  switch (sp->family) {
    case Family::Block: {
      add_block_relations(out, sp, 0, 1, "x1", "x2");
      break;
    }
    case Family::Lstr: {
      const uint32_t p = sp->params.p, q22 = sp->params.q22, a = sp->params.a;
      if (q22 != 1 || a == 0)
        throw InvalidArgument("relation suite needs the finite range (q22 = 1, a != 0)");
      const int cnt = a == 1 ? 3 : 4;
      add_block_relations(out, sp, 0, 1, "x1", "x2");
      NcPoly x1 = NcPoly::gen(sp, 0), x2 = NcPoly::gen(sp, 1);
      std::vector<NcPoly> z{NcPoly::gen(sp, 2)};
      for (int j = 0; j < cnt; ++j) z.push_back(ad_gen(1, z.back()));
      for (int j = 0; j < cnt; ++j) {
        std::string zj = "z" + std::to_string(j);
        out.push_back({"x1 " + zj, x1 * z[static_cast<size_t>(j)] + (z[static_cast<size_t>(j)] * x1).scale(p)});
        out.push_back({"x2 " + zj + " rec",
                       z[static_cast<size_t>(j + 1)] + x2 * z[static_cast<size_t>(j)] +
                           (z[static_cast<size_t>(j)] * x2).scale(p)});
        out.push_back({zj + "^2", z[static_cast<size_t>(j)] * z[static_cast<size_t>(j)]});
      }
      const uint32_t q21 = f.inv(p);
      for (int i = 0; i < cnt; ++i)
        for (int j = i + 1; j < cnt; ++j) {
          uint32_t coef = f.mul(f.pow(q21, j - i), q22);
          out.push_back({"z" + std::to_string(i) + " z" + std::to_string(j),
                         z[static_cast<size_t>(i)] * z[static_cast<size_t>(j)] +
                             (z[static_cast<size_t>(j)] * z[static_cast<size_t>(i)]).scale(coef)});
        }
      out.push_back({"z" + std::to_string(cnt), z[static_cast<size_t>(cnt)]});
      break;
    }
    case Family::Pale: {
      const uint32_t p = sp->params.p, q22 = sp->params.q22;
      NcPoly x1 = NcPoly::gen(sp, 0), x2 = NcPoly::gen(sp, 1), x3 = NcPoly::gen(sp, 2);
      NcPoly z1 = ad_gen(1, x3);
      out.push_back({"x1^2", x1 * x1});
      out.push_back({"x2^2", x2 * x2});
      out.push_back({"x1 x2 + x2 x1", x1 * x2 + x2 * x1});
      out.push_back({"x1 x3", x1 * x3 + (x3 * x1).scale(p)});
      out.push_back({"z2", ad_gen(1, z1)});
      if (q22 == 1) {
        out.push_back({"x3^2", x3 * x3});
        out.push_back({"z1^2", z1 * z1});
        out.push_back({"x3 z1", x3 * z1 + (z1 * x3).scale(f.inv(p))});
      } else {
        NcPoly z01 = ad_gen(2, z1);
        out.push_back({"x3^3", x3 * x3 * x3});
        out.push_back({"z1^3", z1 * z1 * z1});
        out.push_back({"z01^3", z01 * z01 * z01});
        out.push_back({"ad x3^2 z1", ad_gen(2, z01)});
      }
      break;
    }
    case Family::Poseidon: {
      const auto& q = sp->params.q;
      const auto& avec = sp->params.avec;
      const int t = sp->params.t;
      for (int j = 1; j <= t; ++j)
        add_block_relations(out, sp, 2 * (j - 1), 2 * (j - 1) + 1, "x" + std::to_string(j),
                            "x" + std::to_string(j) + "h");
      auto pair_of = [&](int j) {
        return std::vector<std::pair<int, std::string>>{
            {2 * (j - 1), "x" + std::to_string(j)},
            {2 * (j - 1) + 1, "x" + std::to_string(j) + "h"}};
      };
      for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j)
          for (const auto& [ui, un] : pair_of(i))
            for (const auto& [vi, vn] : pair_of(j)) {
              NcPoly u = NcPoly::gen(sp, ui), v = NcPoly::gen(sp, vi);
              out.push_back({un + " " + vn,
                             u * v + (v * u).scale(q[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)])});
            }
      NcPoly xth = NcPoly::gen(sp, 2 * t);
      for (int j = 1; j <= t; ++j) {
        NcPoly xj = NcPoly::gen(sp, 2 * (j - 1));
        out.push_back({"x" + std::to_string(j) + " xth",
                       xj * xth + (xth * xj).scale(q[static_cast<size_t>(j - 1)][static_cast<size_t>(t)])});
      }
      for (int j = 1; j <= t; ++j) {
        int b = avec[static_cast<size_t>(j - 1)] == 1 ? 2 : 3;
        NcPoly w = xth;
        for (int r = 0; r <= b; ++r) w = ad_gen(2 * (j - 1) + 1, w);
        out.push_back({"ad x" + std::to_string(j) + "h^" + std::to_string(b + 1) + " xth", w});
      }
      K1Data k1 = k1_for(sp);
      for (size_t r = 0; r < k1.gens.size(); ++r)
        for (size_t c = r + 1; c < k1.gens.size(); ++c)
          out.push_back({k1.names[r] + " " + k1.names[c],
                         k1.gens[r] * k1.gens[c] + (k1.gens[c] * k1.gens[r]).scale(k1.q_matrix[r][c])});
      for (size_t r = 0; r < k1.gens.size(); ++r)
        out.push_back({k1.names[r] + "^2", k1.gens[r] * k1.gens[r]});
      break;
    }
    default:
      throw InvalidArgument("no relation suite for family " + family_name(sp->family));
  }
  return out;
}

int default_depth(const SpacePtr& sp, bool expensive) {
  switch (sp->family) {
    case Family::Block:
      return 7;
    case Family::Lstr:
      return sp->params.a == 1 ? 13 : 17;
    case Family::Pale:
      return sp->params.q22 == 1 ? 6 : 15;
    case Family::Poseidon: {
      if (!expensive) return 8;
      PbwData pbw = builtin_pbw(sp);
      int top = 0;
      for (const auto& g : pbw.gens) top += static_cast<int>(g.height - 1) * g.degree;
      return top + 1;
    }
    default:
      return 8;
  }
}

long long matrix_order(const FMatrix& A) {
  FMatrix acc = A;
  long long ord = 1;
  while (!acc.is_identity()) {
    acc = acc.mul(A);
    if (++ord > 1000000) throw SizeGuard("matrix order exceeds the search bound");
  }
  return ord;
}

}  // namespace

PbwData builtin_pbw(const SpacePtr& sp) {
  if (!sp) throw InvalidArgument("builtin_pbw: null space");
  PbwData d;
  auto push = [&](const std::string& n, int deg, long long h, NcPoly p) {
    d.gens.push_back({n, deg, h});
    d.polys.push_back(std::move(p));
  };
  auto block_triple = [&](int i1, int i2, const std::string& n1, const std::string& n2,
                          const std::string& nc) {
    NcPoly x1 = NcPoly::gen(sp, i1), x2 = NcPoly::gen(sp, i2);
    push(n1, 1, 2, x1);
    push(nc, 2, 2, x2 * x1 + x1 * x2);
    push(n2, 1, 4, x2);
  };
  switch (sp->family) {
    case Family::Block: {
      if (sp->params.ell != 2 || sp->params.eps != 1)
        throw InvalidArgument("built-in PBW data covers the 2x2 unipotent block");
      block_triple(0, 1, "x1", "x2", "x21");
      break;
    }
    case Family::Lstr: {
      if (sp->params.q22 != 1 || sp->params.a == 0)
        throw InvalidArgument("built-in PBW data needs the finite range (q22 = 1, a != 0)");
      const int cnt = sp->params.a == 1 ? 3 : 4;
      block_triple(0, 1, "x1", "x2", "x21");
      std::vector<NcPoly> z{NcPoly::gen(sp, 2)};
      for (int j = 1; j < cnt; ++j) z.push_back(ad_gen(1, z.back()));
      for (int j = cnt - 1; j >= 0; --j)
        push("z" + std::to_string(j), j + 1, 2, z[static_cast<size_t>(j)]);
      break;
    }
    case Family::Pale: {
      NcPoly x1 = NcPoly::gen(sp, 0), x2 = NcPoly::gen(sp, 1), x3 = NcPoly::gen(sp, 2);
      NcPoly z1 = ad_gen(1, x3);
      if (sp->params.q22 == 1) {
        push("x1", 1, 2, x1);
        push("x2", 1, 2, x2);
        push("z1", 2, 2, z1);
        push("x3", 1, 2, x3);
      } else {
        NcPoly z01 = ad_gen(2, z1);
        push("x1", 1, 2, x1);
        push("x2", 1, 2, x2);
        push("z1", 2, 3, z1);
        push("z01", 3, 3, z01);
        push("x3", 1, 3, x3);
      }
      break;
    }
    case Family::Poseidon: {
      const int t = sp->params.t;
      for (int j = 1; j <= t; ++j)
        block_triple(2 * (j - 1), 2 * (j - 1) + 1, "x" + std::to_string(j),
                     "x" + std::to_string(j) + "h", "w" + std::to_string(j));
      K1Data k1 = k1_for(sp);
      for (size_t i = 0; i < k1.gens.size(); ++i)
        push(k1.names[i], k1.tv_degrees[i], 2, k1.gens[i]);
      break;
    }
    default:
      throw InvalidArgument("no built-in PBW data for family " + family_name(sp->family));
  }
  return d;
}

HilbertSeries pbw_hilbert(const SpacePtr& sp, const std::vector<PbwGen>& gens) {
  std::vector<long long> h{1};
  for (const auto& g : gens) {
    if (g.degree < 1 || g.height < 2) throw InvalidArgument("PBW generator needs degree >= 1, height >= 2");
    size_t top = h.size() - 1 + static_cast<size_t>(g.degree) * static_cast<size_t>(g.height - 1);
    std::vector<long long> nh(top + 1, 0);
    for (size_t i = 0; i < h.size(); ++i)
      for (long long e = 0; e < g.height; ++e)
        nh[i + static_cast<size_t>(e) * static_cast<size_t>(g.degree)] += h[i];
    h = std::move(nh);
  }
  HilbertSeries hs;
  hs.family = family_name(sp->family);
  hs.params = params_to_json(*sp);
  hs.field = field_to_json(sp->field);
  hs.dims = h;
  long long tot = 0;
  for (long long v : h) tot += v;
  hs.total = tot;
  hs.status = Status::Finite;
  hs.top_degree = static_cast<int>(h.size()) - 1;
  return hs;
}

VerificationReport relation_suite(const SpacePtr& sp, bool expensive) {
  VerificationReport r;
  r.family = family_name(sp->family);
  r.params = params_to_json(*sp);
  r.field = field_to_json(sp->field);
  const int depth = default_depth(sp, expensive);
  std::vector<Rel> rels = relations_for(sp);
  PbwData pbw = builtin_pbw(sp);

  EngineOptions eo;
  eo.max_degree = depth;
  GradedBasis gb = compute(sp, eo);
  r.engine_status = gb.status;

  r.relations_pass = true;
  for (const auto& rel : rels) {
    int d = rel.poly.max_degree();
    if (d > depth) continue;  // out of reach on a prefix run
    bool holds = gb.is_zero_in_nichols(rel.poly);
    r.relations.push_back({rel.name, d, holds});
    if (!holds) r.relations_pass = false;
  }

  HilbertSeries hp = pbw_hilbert(sp, pbw.gens);
  r.h_engine = gb.dims_ll();
  r.h_pbw = hp.dims;
  r.compared_through = depth;
  auto at = [](const std::vector<long long>& v, int i) -> long long {
    return i >= 0 && i < static_cast<int>(v.size()) ? v[static_cast<size_t>(i)] : 0;
  };
  r.hilbert_match = true;
  for (int n = 0; n <= depth; ++n)
    if (at(r.h_engine, n) != at(r.h_pbw, n)) r.hilbert_match = false;

  if (gb.status == Status::Finite) {
    NcPoly top = NcPoly::unit(sp);
    for (size_t i = 0; i < pbw.polys.size(); ++i)
      for (long long e = 0; e + 1 < pbw.gens[i].height; ++e) top = top * pbw.polys[i];
    r.top_monomial_nonzero = !gb.project(top).empty();
  }

  r.pass = r.relations_pass && r.hilbert_match &&
           (!r.top_monomial_nonzero.has_value() || *r.top_monomial_nonzero);
  return r;
}

Table1Row table1_check(const SpacePtr& sp, bool expensive) {
  Table1Row row;
  row.name = family_name(sp->family);
  row.params = params_to_json(*sp);
  row.field = field_to_json(sp->field);
  const Field& f = sp->field;

  int depth = default_depth(sp, expensive);
  int kdepth = 0;
  bool allow_prefix = false;
  switch (sp->family) {
    case Family::Block:
      if (sp->params.ell != 2 || sp->params.eps != 1)
        throw InvalidArgument("dimension table covers the 2x2 unipotent block");
      row.expected_dim = 16;
      break;
    case Family::Lstr: {
      if (sp->params.q22 != 1 || sp->params.a == 0)
        throw InvalidArgument("dimension table needs the finite range (q22 = 1, a != 0)");
      const int cnt = sp->params.a == 1 ? 3 : 4;
      row.expected_dim = sp->params.a == 1 ? 128 : 256;
      row.has_k = true;
      row.expected_k_dim = 1ll << cnt;
      kdepth = cnt + 2;
      break;
    }
    case Family::Pale: {
      const uint32_t q22 = sp->params.q22;
      if (q22 == 1) {
        row.expected_dim = 16;
        row.expected_k_dim = 4;
        kdepth = 4;
      } else if (f.mul_order(q22) == 3) {
        row.expected_dim = 108;
        row.expected_k_dim = 27;
        kdepth = 10;  // the order-3 quotient has PBW heights 3,3,3 and top degree 8
      } else {
        throw InvalidArgument("dimension table needs q22 = 1 or of order 3");
      }
      row.has_k = true;
      break;
    }
    case Family::Poseidon: {
      const int t = sp->params.t;
      int asize = 1;
      for (uint32_t a : sp->params.avec) asize *= (a == 1 ? 3 : 4);
      row.expected_dim = 1ll << (4 * t + asize);
      row.has_k = true;
      row.expected_k_dim = 1ll << asize;
      kdepth = asize + 2;
      allow_prefix = !expensive;
      break;
    }
    default:
      throw InvalidArgument("no dimension-table entry for family " + family_name(sp->family));
  }

  EngineOptions eo;
  eo.max_degree = depth;
  GradedBasis gb = compute(sp, eo);
  row.engine_status = gb.status;
  row.engine_dim = gb.total();
  HilbertSeries hp = pbw_hilbert(sp, builtin_pbw(sp).gens);
  auto at = [](const std::vector<long long>& v, int i) -> long long {
    return i >= 0 && i < static_cast<int>(v.size()) ? v[static_cast<size_t>(i)] : 0;
  };
  row.compared_through = depth;
  row.prefix_match = true;
  auto he = gb.dims_ll();
  for (int n = 0; n <= depth; ++n)
    if (at(he, n) != at(hp.dims, n)) row.prefix_match = false;

  bool k_ok = true;
  if (row.has_k) {
    K1Data k1 = k1_for(sp);
    EngineOptions ek;
    ek.max_degree = kdepth;
    GradedBasis gbK = compute(diagonal(f, k1.q_matrix), ek);
    row.k_dim = gbK.total();
    k_ok = row.k_dim && *row.k_dim == row.expected_k_dim;
  }
  bool total_ok = row.engine_dim ? *row.engine_dim == row.expected_dim : allow_prefix;
  row.pass = row.prefix_match && total_ok && k_ok;
  return row;
}

BosonReport bosonization_dim(const SpacePtr& sp, std::vector<long long> orders, bool expensive) {
  if (!sp || !sp->real) throw InvalidArgument("bosonization needs a realized space");
  const Field& f = sp->field;
  BosonReport r;
  r.family = family_name(sp->family);
  r.params = params_to_json(*sp);
  r.field = field_to_json(f);

  const int ngen = sp->real->generators();
  if (orders.empty()) {
    for (int i = 0; i < ngen; ++i) orders.push_back(matrix_order(sp->real->action[static_cast<size_t>(i)]));
    if (sp->family == Family::Poseidon) {
      long long N = 1;
      for (long long o : orders) N = std::lcm(N, o);
      orders.assign(static_cast<size_t>(ngen), N);
    }
  }
  if (static_cast<int>(orders.size()) != ngen)
    throw InvalidArgument("orders must list every group generator");
  for (long long o : orders)
    if (o < 1) throw InvalidArgument("orders must be positive");
  r.orders = orders;

  BraidedSpace finite_sp = *sp;
  finite_sp.real = with_orders(*sp->real, orders);
  RealizationCheck chk = validate_realization(finite_sp);
  r.realization_ok = chk.ok;
  r.violations = chk.violations;

  r.group_order = 1;
  for (long long o : orders) r.group_order *= o;

  long long M = 0;
  std::ostringstream fs;
  switch (sp->family) {
    case Family::Block:
      if (sp->params.ell != 2 || sp->params.eps != 1)
        throw InvalidArgument("bosonization formula covers the 2x2 unipotent block");
      fs << "2^4 * N, N = " << orders[0];
      r.formula_value = 16 * orders[0];
      break;
    case Family::Lstr:
      if (sp->params.q22 != 1 || sp->params.a == 0)
        throw InvalidArgument("bosonization formula needs the finite range (q22 = 1, a != 0)");
      M = f.mul_order(sp->params.p);
      if (sp->params.a == 1) {
        fs << "2^9 * M^2, M = " << M;
        r.formula_value = 512 * M * M;
      } else {
        fs << "2^10 * M^2, M = " << M;
        r.formula_value = 1024 * M * M;
      }
      break;
    case Family::Pale: {
      M = f.mul_order(sp->params.p);
      if (sp->params.q22 == 1) {
        fs << "2^5 * M^2, M = " << M;
        r.formula_value = 32 * M * M;
      } else if (f.mul_order(sp->params.q22) == 3) {
        long long P = std::lcm(6ll, M);
        fs << "2^2 * 3^3 * M * P, M = " << M << ", P = " << P;
        r.formula_value = 108 * M * P;
      } else {
        throw InvalidArgument("bosonization formula needs q22 = 1 or of order 3");
      }
      break;
    }
    case Family::Poseidon: {
      const int t = sp->params.t;
      int asize = 1;
      for (uint32_t a : sp->params.avec) asize *= (a == 1 ? 3 : 4);
      long long N = orders[0];
      for (long long o : orders)
        if (o != N) throw InvalidArgument("the closed form needs one common order N");
      r.formula_value = (1ll << (4 * t + asize));
      for (int i = 0; i < t + 1; ++i) r.formula_value *= N;
      fs << "2^(4t+|A|) * N^theta, t = " << t << ", |A| = " << asize << ", N = " << N;
      break;
    }
    default:
      throw InvalidArgument("no bosonization formula for family " + family_name(sp->family));
  }
  r.formula = fs.str();

  if (sp->family == Family::Poseidon && !expensive) {
    r.dim_nichols = pbw_hilbert(sp, builtin_pbw(sp).gens).total;
    r.dim_source = "pbw";
  } else {
    EngineOptions eo;
    eo.max_degree = default_depth(sp, true);
    GradedBasis gb = compute(sp, eo);
    r.dim_nichols = gb.total();
    r.dim_source = "engine";
  }
  if (r.dim_nichols) r.product = *r.dim_nichols * r.group_order;
  r.pass = r.realization_ok && r.product && *r.product == r.formula_value;
  return r;
}

FuzzReport fuzz_properties(const SpacePtr& sp, int samples, uint64_t seed) {
  if (!sp || !sp->real) throw InvalidArgument("fuzzing needs a realized space");
  FuzzReport rep;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  const int th = sp->dim();
  const int ngen = sp->real->generators();
  std::uniform_int_distribution<int> nterms(1, 2), wlen(0, 2), letter(0, th - 1), expo(0, 3);
  std::uniform_int_distribution<uint32_t> coef(1, sp->field.units());

  auto rand_poly = [&]() {
    NcPoly p(sp);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      Word w(static_cast<size_t>(wlen(rng)));
      for (auto& x : w) x = letter(rng);
      p.add_term(w, coef(rng));
    }
    return p;
  };
  auto rand_g = [&]() {
    std::vector<long long> g(static_cast<size_t>(ngen));
    for (auto& x : g) x = expo(rng);
    return g;
  };

  for (int s = 0; s < samples; ++s) {
    NcPoly u = rand_poly(), v = rand_poly();
    int i = letter(rng);
    const auto& gi = sp->real->degree[static_cast<size_t>(i)];
    NcPoly lhs = skew_derive(i, u * v);
    NcPoly rhs = skew_derive(i, u) * group_act(gi, v) + u * skew_derive(i, v);
    if (lhs != rhs) {
      ++rep.failures;
      rep.notes.push_back("leibniz failed at sample " + std::to_string(s));
      continue;
    }
    auto g = rand_g(), h = rand_g();
    if (group_act(g, u * v) != group_act(g, u) * group_act(g, v)) {
      ++rep.failures;
      rep.notes.push_back("action-product failed at sample " + std::to_string(s));
      continue;
    }
    std::vector<long long> gh(g.size());
    for (size_t j = 0; j < g.size(); ++j) gh[j] = g[j] + h[j];
    if (group_act(gh, u) != group_act(g, group_act(h, u))) {
      ++rep.failures;
      rep.notes.push_back("action-sum failed at sample " + std::to_string(s));
    }
  }
  return rep;
}

json VerificationReport::to_json() const {
  json j;
  j["family"] = family;
  j["params"] = params;
  j["field"] = field;
  json rl = json::array();
  for (const auto& r : relations) {
    json jr;
    jr["name"] = r.name;
    jr["degree"] = r.degree;
    jr["holds"] = r.holds;
    rl.push_back(jr);
  }
  j["relations"] = rl;
  j["relations_pass"] = relations_pass;
  j["h_engine"] = h_engine;
  j["h_pbw"] = h_pbw;
  j["compared_through"] = compared_through;
  j["engine_status"] = status_name(engine_status);
  j["hilbert_match"] = hilbert_match;
  j["top_monomial_nonzero"] =
      top_monomial_nonzero ? json(*top_monomial_nonzero) : json(nullptr);
  j["pass"] = pass;
  return j;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "family: " << family << "\n";
  for (const auto& r : relations)
    os << "relation " << r.name << " (degree " << r.degree << "): "
       << (r.holds ? "holds" : "FAILS") << "\n";
  auto row = [&os](const char* name, const std::vector<long long>& v) {
    os << name << ":";
    for (long long x : v) os << " " << x;
    os << "\n";
  };
  row("H(engine)", h_engine);
  row("H(pbw)", h_pbw);
  os << "compared_through: " << compared_through << "\n";
  os << "engine_status: " << status_name(engine_status) << "\n";
  os << "hilbert_match: " << (hilbert_match ? "yes" : "no") << "\n";
  if (top_monomial_nonzero)
    os << "top_monomial_nonzero: " << (*top_monomial_nonzero ? "yes" : "no") << "\n";
  os << "pass: " << (pass ? "yes" : "no") << "\n";
  return os.str();
}

json Table1Row::to_json() const {
  json j;
  j["name"] = name;
  j["params"] = params;
  j["field"] = field;
  j["expected_dim"] = expected_dim;
  j["engine_dim"] = engine_dim ? json(*engine_dim) : json(nullptr);
  j["engine_status"] = status_name(engine_status);
  j["compared_through"] = compared_through;
  j["prefix_match"] = prefix_match;
  if (has_k) {
    j["expected_k_dim"] = expected_k_dim;
    j["k_dim"] = k_dim ? json(*k_dim) : json(nullptr);
  }
  j["pass"] = pass;
  return j;
}

std::string Table1Row::text() const {
  std::ostringstream os;
  os << "instance: " << name << "\n";
  os << "expected_dim: " << expected_dim << "\n";
  os << "engine_dim: " << (engine_dim ? std::to_string(*engine_dim) : std::string("(prefix only)"))
     << " [" << status_name(engine_status) << "]\n";
  os << "prefix_match (through " << compared_through << "): " << (prefix_match ? "yes" : "no")
     << "\n";
  if (has_k)
    os << "k_dim: " << (k_dim ? std::to_string(*k_dim) : std::string("(unknown)")) << " expected "
       << expected_k_dim << "\n";
  os << "pass: " << (pass ? "yes" : "no") << "\n";
  return os.str();
}

json BosonReport::to_json() const {
  json j;
  j["family"] = family;
  j["params"] = params;
  j["field"] = field;
  j["orders"] = orders;
  j["realization_ok"] = realization_ok;
  j["violations"] = violations;
  j["group_order"] = group_order;
  j["dim_nichols"] = dim_nichols ? json(*dim_nichols) : json(nullptr);
  j["dim_source"] = dim_source;
  j["product"] = product ? json(*product) : json(nullptr);
  j["formula"] = formula;
  j["formula_value"] = formula_value;
  j["pass"] = pass;
  return j;
}

std::string BosonReport::text() const {
  std::ostringstream os;
  os << "family: " << family << "\n";
  os << "orders:";
  for (long long o : orders) os << " " << o;
  os << "\n";
  os << "realization_ok: " << (realization_ok ? "yes" : "no") << "\n";
  for (const auto& v : violations) os << "  violation: " << v << "\n";
  os << "group_order: " << group_order << "\n";
  os << "dim_nichols: " << (dim_nichols ? std::to_string(*dim_nichols) : std::string("(unknown)"))
     << " [" << dim_source << "]\n";
  os << "product: " << (product ? std::to_string(*product) : std::string("(unknown)")) << "\n";
  os << "formula: " << formula << " = " << formula_value << "\n";
  os << "pass: " << (pass ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace nichols
