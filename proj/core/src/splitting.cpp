#include "nichols/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::vector<uint32_t> zrow(size_t n) { return std::vector<uint32_t>(n, 0); }

K1Data k1_lstr_pale(const SpacePtr& sp) {
  const Field& f = sp->field;
  const uint32_t p = sp->params.p, q22 = sp->params.q22;
  const uint32_t q21 = f.inv(p);
  int cnt = 0;
  if (sp->family == Family::Lstr) {
    uint32_t a = sp->params.a;
    cnt = a == 0 ? 1 : (a == 1 ? 3 : 4);
  } else {
    cnt = 2;
  }
  K1Data k;
  k.ambient = sp;
  k.block_indices = {0, 1};
  NcPoly z = NcPoly::gen(sp, 2);
  for (int n = 0; n < cnt; ++n) {
    k.gens.push_back(z);
    k.names.push_back("z" + std::to_string(n));
    k.tv_degrees.push_back(n + 1);
    z = ad_gen(1, z);
  }
  k.beyond.push_back(z);  // (ad x2)^cnt of the point
  k.beyond_names.push_back("z" + std::to_string(cnt));
  if (sp->family == Family::Pale) {
    k.beyond.push_back(ad_gen(0, NcPoly::gen(sp, 2)));
    k.beyond_names.push_back("w1");
  }
  k.q_matrix.assign(static_cast<size_t>(cnt), zrow(static_cast<size_t>(cnt)));
  for (int i = 0; i < cnt; ++i)
    for (int j = 0; j < cnt; ++j)
      k.q_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          f.mul(f.pow(q21, j - i), q22);
  return k;
}

K1Data k1_block_points(const SpacePtr& sp) {
  const Field& f = sp->field;
  const auto& q = sp->params.q;
  const auto& avec = sp->params.avec;
  const int theta = static_cast<int>(q.size());
  K1Data k;
  k.ambient = sp;
  k.block_indices = {0, 1};
  auto size_of = [&](int i) {
    uint32_t ai = avec[static_cast<size_t>(i - 1)];
    return ai == 0 ? 1 : (ai == 1 ? 3 : 4);
  };
  std::vector<std::pair<int, int>> level;  // (point i, adjoint count n)
  for (int i = 2; i <= theta; ++i) {
    NcPoly z = NcPoly::gen(sp, i);  // x_i sits at basis index i
    int cnt = size_of(i);
    for (int n = 0; n < cnt; ++n) {
      k.gens.push_back(z);
      k.names.push_back("z" + std::to_string(i) + "_" + std::to_string(n));
      k.tv_degrees.push_back(n + 1);
      level.emplace_back(i, n);
      z = ad_gen(1, z);  // adjoint of the half generator x_{1+1/2}
    }
    k.beyond.push_back(z);
    k.beyond_names.push_back("z" + std::to_string(i) + "_" + std::to_string(cnt));
  }
  size_t m = k.gens.size();
  k.q_matrix.assign(m, zrow(m));
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < m; ++c) {
      auto [i, mm] = level[r];
      auto [j, nn] = level[c];
      uint32_t v = q[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      v = f.mul(v, f.pow(q[0][static_cast<size_t>(j - 1)], mm));
      v = f.mul(v, f.pow(q[static_cast<size_t>(i - 1)][0], nn));
      k.q_matrix[r][c] = v;
    }
  return k;
}

K1Data k1_poseidon(const SpacePtr& sp) {
  const Field& f = sp->field;
  const auto& q = sp->params.q;
  const auto& avec = sp->params.avec;
  const int t = sp->params.t;
  const int theta = t + 1;
  K1Data k;
  k.ambient = sp;
  for (int j = 0; j < 2 * t; ++j) k.block_indices.push_back(j);
  std::vector<int> bound(static_cast<size_t>(t));
  for (int j = 0; j < t; ++j) bound[static_cast<size_t>(j)] = avec[static_cast<size_t>(j)] == 1 ? 2 : 3;

  auto s_poly = [&](const std::vector<int>& n) {
    NcPoly w = NcPoly::gen(sp, 2 * t);  // x_theta
    for (int j = t; j >= 1; --j)
      for (int r = 0; r < n[static_cast<size_t>(j - 1)]; ++r) w = ad_gen(2 * (j - 1) + 1, w);
    return w;
  };
  auto s_name = [&](const std::vector<int>& n) {
    std::string s = "s";
    for (int v : n) s += "_" + std::to_string(v);
    return s;
  };

  // lexicographic enumeration of the exponent box
  std::vector<std::vector<int>> box;
  std::vector<int> cur(static_cast<size_t>(t), 0);
  for (;;) {
    box.push_back(cur);
    int j = t - 1;
    while (j >= 0 && cur[static_cast<size_t>(j)] == bound[static_cast<size_t>(j)]) {
      cur[static_cast<size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++cur[static_cast<size_t>(j)];
  }
  for (const auto& n : box) {
    k.gens.push_back(s_poly(n));
    k.names.push_back(s_name(n));
    k.tv_degrees.push_back(std::accumulate(n.begin(), n.end(), 1));
  }
  for (int j = 1; j <= t; ++j) {
    std::vector<int> n(static_cast<size_t>(t), 0);
    n[static_cast<size_t>(j - 1)] = bound[static_cast<size_t>(j - 1)] + 1;
    k.beyond.push_back(s_poly(n));
    k.beyond_names.push_back(s_name(n));
  }
  size_t m = k.gens.size();
  k.q_matrix.assign(m, zrow(m));
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < m; ++c) {
      const auto& mm = box[r];
      const auto& nn = box[c];
      uint32_t v = 1;
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
          v = f.mul(v, f.pow(q[static_cast<size_t>(i)][static_cast<size_t>(j)],
                             static_cast<long long>(mm[static_cast<size_t>(i)]) * nn[static_cast<size_t>(j)]));
      for (int i = 0; i < t; ++i)
        v = f.mul(v, f.pow(q[static_cast<size_t>(i)][static_cast<size_t>(theta - 1)], mm[static_cast<size_t>(i)]));
      for (int j = 0; j < t; ++j)
        v = f.mul(v, f.pow(q[static_cast<size_t>(theta - 1)][static_cast<size_t>(j)], nn[static_cast<size_t>(j)]));
      k.q_matrix[r][c] = v;
    }
  return k;
}

}  // namespace

K1Data k1_for(const SpacePtr& sp) {
  if (!sp) throw InvalidArgument("k1_for: null space");
  switch (sp->family) {
    case Family::Lstr:
    case Family::Pale:
      return k1_lstr_pale(sp);
    case Family::BlockPoints:
      return k1_block_points(sp);
    case Family::Poseidon:
      return k1_poseidon(sp);
    default:
      throw InvalidArgument("no splitting datum for family " + family_name(sp->family));
  }
}

DynkinDiagram dynkin(const Field& f, const std::vector<std::vector<uint32_t>>& q) {
  const int n = static_cast<int>(q.size());
  DynkinDiagram d;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(q[static_cast<size_t>(i)].size()) != n)
      throw InvalidArgument("dynkin: q must be square");
    for (uint32_t e : q[static_cast<size_t>(i)])
      if (e == 0) throw InvalidArgument("dynkin: braiding entries must be nonzero");
    d.vertices.push_back(q[static_cast<size_t>(i)][static_cast<size_t>(i)]);
  }
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      uint32_t lbl = f.mul(q[static_cast<size_t>(i)][static_cast<size_t>(j)],
                           q[static_cast<size_t>(j)][static_cast<size_t>(i)]);
      if (lbl != 1) {
        d.edges.push_back({i, j, lbl});
        parent[static_cast<size_t>(find(i))] = find(j);
      }
    }
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
      roots.push_back(r);
      d.components.emplace_back();
    }
    size_t at = static_cast<size_t>(std::find(roots.begin(), roots.end(), r) - roots.begin());
    d.components[at].push_back(i);
  }
  return d;
}

std::string DynkinDiagram::text(const Field& f) const {
  std::ostringstream os;
  for (size_t i = 0; i < vertices.size(); ++i)
    os << "v" << i << ": " << f.format(vertices[i]) << "\n";
  for (const auto& e : edges)
    os << "e" << e.a << "-" << e.b << ": " << f.format(e.label) << "\n";
  os << "components:";
  for (const auto& c : components) {
    os << " [";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << "]";
  }
  os << "\n";
  return os.str();
}

json DynkinDiagram::to_json(const Field& f) const {
  json j;
  j["vertices"] = json::array();
  for (uint32_t v : vertices) j["vertices"].push_back(f.format(v));
  j["edges"] = json::array();
  for (const auto& e : edges) {
    json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["label"] = f.format(e.label);
    j["edges"].push_back(je);
  }
  j["components"] = components;
  return j;
}

DynkinDiagram expected_obstruction(const SpacePtr& sp) {
  if (!sp) throw InvalidArgument("expected_obstruction: null space");
  const Field& f = sp->field;
  if (sp->family == Family::Lstr) {
    uint32_t q22 = sp->params.q22, a = sp->params.a;
    if (q22 == 1) throw InvalidArgument("no obstruction diagram: q22 = 1 is a finite case");
    if (a == 0) throw InvalidArgument("no obstruction diagram for a = 0");
    int cnt = a == 1 ? 3 : 4;
    std::vector<std::vector<uint32_t>> q(static_cast<size_t>(cnt), zrow(static_cast<size_t>(cnt)));
    uint32_t q21 = f.inv(sp->params.p);
    for (int i = 0; i < cnt; ++i)
      for (int j = 0; j < cnt; ++j)
        q[static_cast<size_t>(i)][static_cast<size_t>(j)] = f.mul(f.pow(q21, j - i), q22);
    return dynkin(f, q);  // complete graph: all vertices q22, all edges q22^2
  }
  if (sp->family == Family::BlockPoints) {
    const auto& q = sp->params.q;
    const auto& avec = sp->params.avec;
    if (q.size() != 3 || avec != std::vector<uint32_t>{1, 1, 0})
      throw InvalidArgument("star diagram needs theta = 3 with weights (1,1,0)");
    if (q[1][1] != 1) throw InvalidArgument("star diagram needs q22 = 1");
    uint32_t t23 = f.mul(q[1][2], q[2][1]);
    if (t23 == 1) throw InvalidArgument("star diagram needs q23*q32 != 1");
    DynkinDiagram d;
    d.vertices = {1, 1, 1, q[2][2]};
    d.edges = {{0, 3, t23}, {1, 3, t23}, {2, 3, t23}};
    d.components = {{0, 1, 2, 3}};
    return d;
  }
  throw InvalidArgument("no obstruction diagram for family " + family_name(sp->family));
}

SplitReport check_k1_consistency(const SpacePtr& sp, int max_degree) {
  K1Data k1 = k1_for(sp);
  const Field& f = sp->field;
  SplitReport r;
  r.family = family_name(sp->family);
  r.params = params_to_json(*sp);
  r.field = field_to_json(f);
  r.k1_count = static_cast<int>(k1.gens.size());
  r.k1_degrees = k1.tv_degrees;
  r.q_matrix = k1.q_matrix;
  r.diagram = dynkin(f, k1.q_matrix);

  // run one degree past the comparison depth so a top degree landing exactly
  // at max_degree is still certified finite (and its total reported)
  EngineOptions eo;
  eo.max_degree = max_degree + 1;
  GradedBasis gbV = compute(sp, eo);
  GradedBasis gb1 = compute(restrict_space(sp, k1.block_indices), eo);
  SpacePtr K = diagonal(f, k1.q_matrix);
  EngineOptions ek;
  ek.max_degree = max_degree + 1;
  ek.weights = k1.tv_degrees;
  ek.weight_cutoff = max_degree;
  GradedBasis gbK = compute(K, ek);

  r.space_status = gbV.status;
  r.h_space = gbV.dims_ll();
  r.h_block = gb1.dims_ll();
  r.h_k_weighted = gbK.weighted_dims();
  r.compared_through = max_degree;
  auto at = [](const std::vector<long long>& v, int i) -> long long {
    return i >= 0 && i < static_cast<int>(v.size()) ? v[static_cast<size_t>(i)] : 0;
  };
  r.hilbert_match = true;
  for (int n = 0; n <= max_degree; ++n) {
    long long conv = 0;
    for (int m = 0; m <= n; ++m) conv += at(r.h_block, m) * at(r.h_k_weighted, n - m);
    r.h_product.push_back(conv);
    if (conv != at(r.h_space, n)) r.hilbert_match = false;
  }
  r.total_space = gbV.total();
  if (gb1.status == Status::Finite && gbK.status == Status::Finite) {
    long long tk = 0;
    for (long long v : r.h_k_weighted) tk += v;
    r.total_product = *gb1.total() * tk;
  }
  if (r.total_space && r.total_product && *r.total_space != *r.total_product)
    r.hilbert_match = false;

  r.gens_nonzero = true;
  for (const auto& g : k1.gens)
    if (gbV.project(g).empty()) r.gens_nonzero = false;
  bool all_vanish = true;
  for (size_t i = 0; i < k1.beyond.size(); ++i) {
    bool v = gbV.is_zero_in_nichols(k1.beyond[i]);
    r.vanishing.emplace_back(k1.beyond_names[i], v);
    all_vanish = all_vanish && v;
  }
  r.q_consistent = true;
  for (size_t i = 0; i < k1.gens.size(); ++i) {
    auto deg = k1.gens[i].gamma_degree();
    if (!deg) {
      r.q_consistent = false;
      break;
    }
    for (size_t j = 0; j < k1.gens.size(); ++j) {
      NcPoly diff = group_act(*deg, k1.gens[j]) + k1.gens[j].scale(k1.q_matrix[i][j]);
      if (!gbV.is_zero_in_nichols(diff)) r.q_consistent = false;
    }
  }
  r.pass = r.hilbert_match && r.gens_nonzero && all_vanish && r.q_consistent;
  return r;
}

json SplitReport::to_json(const Field& f) const {
  json j;
  j["family"] = family;
  j["params"] = params;
  j["field"] = field;
  j["k1_count"] = k1_count;
  j["k1_degrees"] = k1_degrees;
  json qm = json::array();
  for (const auto& row : q_matrix) {
    json jr = json::array();
    for (uint32_t v : row) jr.push_back(f.format(v));
    qm.push_back(jr);
  }
  j["q_matrix"] = qm;
  j["dynkin"] = diagram.to_json(f);
  j["h_space"] = h_space;
  j["h_block"] = h_block;
  j["h_k_weighted"] = h_k_weighted;
  j["h_product"] = h_product;
  j["compared_through"] = compared_through;
  j["hilbert_match"] = hilbert_match;
  j["gens_nonzero"] = gens_nonzero;
  json van = json::array();
  for (const auto& [name, ok] : vanishing) {
    json jv;
    jv["name"] = name;
    jv["vanishes"] = ok;
    van.push_back(jv);
  }
  j["vanishing"] = van;
  j["q_consistent"] = q_consistent;
  j["total_space"] = total_space ? json(*total_space) : json(nullptr);
  j["total_product"] = total_product ? json(*total_product) : json(nullptr);
  j["space_status"] = status_name(space_status);
  j["pass"] = pass;
  return j;
}

std::string SplitReport::text(const Field& fld) const {
  std::ostringstream os;
  os << "family: " << family << "\n";
  os << "k1 generators: " << k1_count << " (tensor degrees:";
  for (int d : k1_degrees) os << " " << d;
  os << ")\n";
  os << "dynkin:\n" << diagram.text(fld);
  auto row = [&os](const char* name, const std::vector<long long>& v) {
    os << name << ":";
    for (long long x : v) os << " " << x;
    os << "\n";
  };
  row("H(space)", h_space);
  row("H(block)", h_block);
  row("H(K, weighted)", h_k_weighted);
  row("H(block)*H(K)", h_product);
  os << "hilbert_match: " << (hilbert_match ? "yes" : "no") << "\n";
  os << "gens_nonzero: " << (gens_nonzero ? "yes" : "no") << "\n";
  for (const auto& [name, ok] : vanishing)
    os << "vanishes " << name << ": " << (ok ? "yes" : "no") << "\n";
  os << "q_consistent: " << (q_consistent ? "yes" : "no") << "\n";
  if (total_space) os << "total(space): " << *total_space << "\n";
  if (total_product) os << "total(product): " << *total_product << "\n";
  os << "pass: " << (pass ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace nichols
