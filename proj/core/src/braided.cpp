#include "nichols/braided.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace nichols {

Label parse_label(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty basis label");
  std::string body = s;
  bool half = false;
  if (body.back() == 'h') {
    half = true;
    body.pop_back();
  }
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("bad basis label '" + s + "'");
  int i = std::stoi(body);
  return half ? Label::half(i) : Label::integer(i);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Diagonal: return "diagonal";
    case Family::Block: return "block";
    case Family::Lstr: return "lstr";
    case Family::BlockPoints: return "block_points";
    case Family::Poseidon: return "poseidon";
    case Family::Pale: return "pale";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family family_from_name(const std::string& s) {
  if (s == "diagonal") return Family::Diagonal;
  if (s == "block" || s == "jordan") return Family::Block;
  if (s == "lstr") return Family::Lstr;
  if (s == "block_points") return Family::BlockPoints;
  if (s == "poseidon") return Family::Poseidon;
  if (s == "pale") return Family::Pale;
  if (s == "custom") return Family::Custom;
  throw InvalidArgument("unknown family '" + s + "'");
}

int BraidedSpace::label_index(const Label& l) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == l) return i;
  throw InvalidArgument("label '" + l.str() + "' not in basis");
}

FMatrix BraidedSpace::action_of(const std::vector<long long>& g) const {
  if (!real) throw InvalidArgument("space has no realization");
  const Realization& r = *real;
  if (g.size() != static_cast<size_t>(r.generators()))
    throw InvalidArgument("group exponent vector has wrong length");
  FMatrix acc = FMatrix::identity(field, dim());
  for (int s = 0; s < r.generators(); ++s) {
    long long e = g[s];
    if (r.orders[s] > 0) {
      e %= r.orders[s];
      if (e < 0) e += r.orders[s];
    }
    if (e != 0) acc = acc.mul(r.action[s].pow(e));
  }
  return acc;
}

FMatrix BraidedSpace::action_of_degree(int i) const {
  if (!real) throw InvalidArgument("space has no realization");
  return action_of(real->degree[i]);
}

namespace {

FMatrix braiding_from_realization(const Field& f, const std::vector<Label>& labels,
                                  const BraidedSpace& sp) {
  int d = static_cast<int>(labels.size());
  FMatrix c(f, d * d, d * d);
  for (int i = 0; i < d; ++i) {
    FMatrix A = sp.action_of_degree(i);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (A.at(k, j)) c.at(k * d + i, i * d + j) = A.at(k, j);
  }
  return c;
}

void self_check(const BraidedSpace& sp, const char* what) {
  RealizationCheck rc = validate_realization(sp);
  if (!rc.ok) throw Error(std::string("internal: invalid canonical realization for ") + what +
                          ": " + rc.violations.front());
  if (!braid_equation_holds(sp))
    throw Error(std::string("internal: braid equation fails for ") + what);
}

void require_unit(const Field& f, uint32_t v, const char* what) {
  if (v == 0) throw InvalidArgument(std::string(what) + " must be nonzero");
  if (v >= f.size()) throw InvalidArgument(std::string(what) + " out of field range");
}

std::vector<long long> unit_vec(int r, int pos) {
  std::vector<long long> v(r, 0);
  v[pos] = 1;
  return v;
}

}  // namespace

SpacePtr diagonal(const Field& f, const std::vector<std::vector<uint32_t>>& q) {
  int theta = static_cast<int>(q.size());
  if (theta < 1) throw InvalidArgument("diagonal braiding needs at least one basis vector");
  for (auto& row : q) {
    if (static_cast<int>(row.size()) != theta)
      throw InvalidArgument("diagonal braiding matrix must be square");
    for (uint32_t v : row) require_unit(f, v, "diagonal braiding entry");
  }
  auto sp = std::make_shared<BraidedSpace>(f);
  sp->family = Family::Diagonal;
  sp->params.q = q;
  for (int i = 1; i <= theta; ++i) sp->labels.push_back(Label::integer(i));
  Realization real;
  real.orders.assign(theta, 0);
  for (int r = 0; r < theta; ++r) {
    FMatrix A(f, theta, theta);
    for (int j = 0; j < theta; ++j) A.at(j, j) = q[r][j];
    real.action.push_back(A);
  }
  for (int i = 0; i < theta; ++i) real.degree.push_back(unit_vec(theta, i));
  sp->real = std::move(real);
  sp->c = braiding_from_realization(f, sp->labels, *sp);
  self_check(*sp, "diagonal");
  return sp;
}

SpacePtr block(const Fel& eps, int ell) {
  const Field& f = eps.field();
  require_unit(f, eps.mask(), "block eigenvalue");
  if (ell < 2) throw InvalidArgument("block length must be at least 2");
  auto sp = std::make_shared<BraidedSpace>(f);
  sp->family = Family::Block;
  sp->params.eps = eps.mask();
  sp->params.ell = ell;
  for (int i = 1; i <= ell; ++i) sp->labels.push_back(Label::integer(i));
  Realization real;
  real.orders.assign(1, 0);
  FMatrix A(f, ell, ell);
  for (int j = 0; j < ell; ++j) {
    A.at(j, j) = eps.mask();
    if (j > 0) A.at(j - 1, j) = 1;
  }
  real.action.push_back(A);
  for (int i = 0; i < ell; ++i) real.degree.push_back(unit_vec(1, 0));
  sp->real = std::move(real);
  sp->c = braiding_from_realization(f, sp->labels, *sp);
  self_check(*sp, "block");
  return sp;
}

SpacePtr lstr(const Fel& p, const Fel& q22, const Fel& a) {
  const Field& f = p.field();
  if (q22.field() != f || a.field() != f)
    throw FieldMismatch("lstr parameters must share one field");
  require_unit(f, p.mask(), "lstr interaction scalar p");
  require_unit(f, q22.mask(), "lstr point scalar q22");
  if (a.mask() >= f.size()) throw InvalidArgument("lstr parameter a out of field range");
  auto sp = std::make_shared<BraidedSpace>(f);
  sp->family = Family::Lstr;
  sp->params.p = p.mask();
  sp->params.q22 = q22.mask();
  sp->params.a = a.mask();
  for (int i = 1; i <= 3; ++i) sp->labels.push_back(Label::integer(i));
  uint32_t pinv = f.inv(p.mask());
  Realization real;
  real.orders.assign(2, 0);
  FMatrix A1(f, 3, 3), A2(f, 3, 3);
  A1.at(0, 0) = 1;
  A1.at(0, 1) = 1;
  A1.at(1, 1) = 1;
  A1.at(2, 2) = p.mask();
  A2.at(0, 0) = pinv;
  A2.at(0, 1) = f.mul(a.mask(), pinv);
  A2.at(1, 1) = pinv;
  A2.at(2, 2) = q22.mask();
  real.action = {A1, A2};
  real.degree = {unit_vec(2, 0), unit_vec(2, 0), unit_vec(2, 1)};
  sp->real = std::move(real);
  sp->c = braiding_from_realization(f, sp->labels, *sp);
  self_check(*sp, "lstr");
  return sp;
}

SpacePtr block_points(const Field& f, const std::vector<std::vector<uint32_t>>& q,
                      const std::vector<uint32_t>& avec) {
  int theta = static_cast<int>(q.size());
  if (theta < 3) throw InvalidArgument("block_points needs at least 3 points");
  for (auto& row : q) {
    if (static_cast<int>(row.size()) != theta)
      throw InvalidArgument("block_points braiding matrix must be square");
    for (uint32_t v : row) require_unit(f, v, "block_points braiding entry");
  }
  if (q[0][0] != 1) throw InvalidArgument("block_points requires q11 = 1");
  for (int j = 0; j < theta; ++j)
    if (f.mul(q[0][j], q[j][0]) != 1)
      throw InvalidArgument("block_points requires q1j qj1 = 1");
  if (avec.size() != static_cast<size_t>(theta))
    throw InvalidArgument("block_points interaction vector must have length theta");
  if (avec[0] != 1) throw InvalidArgument("block_points requires a1 = 1");
  for (uint32_t v : avec)
    if (v >= f.size()) throw InvalidArgument("block_points interaction entry out of field range");
  bool all_zero = true;
  for (int j = 1; j < theta; ++j)
    if (avec[j]) all_zero = false;
  if (all_zero)
    throw InvalidArgument("block_points requires some interaction beyond the block's own point");

  auto sp = std::make_shared<BraidedSpace>(f);
  sp->family = Family::BlockPoints;
  sp->params.q = q;
  sp->params.avec = avec;
  // basis x_1, x_{1+1/2}, x_2, ..., x_theta
  sp->labels.push_back(Label::integer(1));
  sp->labels.push_back(Label::half(1));
  for (int i = 2; i <= theta; ++i) sp->labels.push_back(Label::integer(i));
  int d = theta + 1;
  auto pos_of = [&](int j) { return j == 1 ? 0 : j; };  // integer label positions

  Realization real;
  real.orders.assign(theta, 0);
  for (int h = 1; h <= theta; ++h) {
    FMatrix A(f, d, d);
    for (int j = 1; j <= theta; ++j) A.at(pos_of(j), pos_of(j)) = q[h - 1][j - 1];
    A.at(1, 1) = q[h - 1][0];
    A.at(0, 1) = f.mul(q[h - 1][0], avec[h - 1]);
    real.action.push_back(A);
  }
  real.degree.push_back(unit_vec(theta, 0));  // x_1
  real.degree.push_back(unit_vec(theta, 0));  // x_{1+1/2}
  for (int j = 2; j <= theta; ++j) real.degree.push_back(unit_vec(theta, j - 1));
  sp->real = std::move(real);
  sp->c = braiding_from_realization(f, sp->labels, *sp);
  self_check(*sp, "block_points");
  return sp;
}

SpacePtr poseidon(const Field& f, const std::vector<std::vector<uint32_t>>& q,
                  const std::vector<uint32_t>& avec) {
  int theta = static_cast<int>(q.size());
  int t = theta - 1;
  if (t < 2) throw InvalidArgument("poseidon needs at least two blocks (theta >= 3)");
  for (auto& row : q) {
    if (static_cast<int>(row.size()) != theta)
      throw InvalidArgument("poseidon braiding matrix must be square");
    for (uint32_t v : row) require_unit(f, v, "poseidon braiding entry");
  }
  for (int i = 0; i < theta; ++i)
    if (q[i][i] != 1) throw InvalidArgument("poseidon requires qii = 1");
  for (int i = 0; i < theta; ++i)
    for (int j = 0; j < theta; ++j)
      if (i != j && f.mul(q[i][j], q[j][i]) != 1)
        throw InvalidArgument("poseidon requires qij qji = 1");
  if (avec.size() != static_cast<size_t>(t))
    throw InvalidArgument("poseidon interaction vector must have length t");
  for (uint32_t v : avec) require_unit(f, v, "poseidon interaction entry");

  auto sp = std::make_shared<BraidedSpace>(f);
  sp->family = Family::Poseidon;
  sp->params.q = q;
  sp->params.avec = avec;
  sp->params.t = t;
  for (int j = 1; j <= t; ++j) {
    sp->labels.push_back(Label::integer(j));
    sp->labels.push_back(Label::half(j));
  }
  sp->labels.push_back(Label::integer(theta));
  int d = 2 * t + 1;
  auto ipos = [&](int j) { return j == theta ? 2 * t : 2 * (j - 1); };
  auto hpos = [&](int j) { return 2 * (j - 1) + 1; };

  Realization real;
  real.orders.assign(theta, 0);
  for (int h = 1; h <= t; ++h) {
    FMatrix A(f, d, d);
    for (int j = 1; j <= t; ++j) {
      A.at(ipos(j), ipos(j)) = q[h - 1][j - 1];
      if (j == h) {
        A.at(hpos(j), hpos(j)) = 1;
        A.at(ipos(j), hpos(j)) = 1;
      } else {
        A.at(hpos(j), hpos(j)) = q[h - 1][j - 1];
      }
    }
    A.at(ipos(theta), ipos(theta)) = q[h - 1][theta - 1];
    real.action.push_back(A);
  }
  {
    FMatrix A(f, d, d);
    for (int j = 1; j <= t; ++j) {
      A.at(ipos(j), ipos(j)) = q[theta - 1][j - 1];
      A.at(hpos(j), hpos(j)) = q[theta - 1][j - 1];
      A.at(ipos(j), hpos(j)) = f.mul(q[theta - 1][j - 1], avec[j - 1]);
    }
    A.at(ipos(theta), ipos(theta)) = 1;
    real.action.push_back(A);
  }
  {
    std::vector<std::vector<long long>> deg(d);
    for (int j = 1; j <= t; ++j) {
      deg[ipos(j)] = unit_vec(theta, j - 1);
      deg[hpos(j)] = unit_vec(theta, j - 1);
    }
    deg[ipos(theta)] = unit_vec(theta, theta - 1);
    real.degree = deg;
  }
  sp->real = std::move(real);
  sp->c = braiding_from_realization(f, sp->labels, *sp);
  self_check(*sp, "poseidon");
  return sp;
}

SpacePtr pale(const Fel& p, const Fel& q22) {
  const Field& f = p.field();
  if (q22.field() != f) throw FieldMismatch("pale parameters must share one field");
  require_unit(f, p.mask(), "pale interaction scalar p");
  require_unit(f, q22.mask(), "pale point scalar q22");
  auto sp = std::make_shared<BraidedSpace>(f);
  sp->family = Family::Pale;
  sp->params.p = p.mask();
  sp->params.q22 = q22.mask();
  for (int i = 1; i <= 3; ++i) sp->labels.push_back(Label::integer(i));
  uint32_t pinv = f.inv(p.mask());
  Realization real;
  real.orders.assign(2, 0);
  FMatrix A1(f, 3, 3), A2(f, 3, 3);
  A1.at(0, 0) = 1;
  A1.at(1, 1) = 1;
  A1.at(2, 2) = p.mask();
  A2.at(0, 0) = pinv;
  A2.at(0, 1) = pinv;
  A2.at(1, 1) = pinv;
  A2.at(2, 2) = q22.mask();
  real.action = {A1, A2};
  real.degree = {unit_vec(2, 0), unit_vec(2, 0), unit_vec(2, 1)};
  sp->real = std::move(real);
  sp->c = braiding_from_realization(f, sp->labels, *sp);
  self_check(*sp, "pale");
  return sp;
}

RealizationCheck validate_realization(const BraidedSpace& sp) {
  RealizationCheck rc;
  auto bad = [&](const std::string& s) {
    rc.ok = false;
    rc.violations.push_back(s);
  };
  if (!sp.real) {
    bad("space has no realization");
    return rc;
  }
  const Realization& re = *sp.real;
  int d = sp.dim(), r = re.generators();
  if (static_cast<int>(re.orders.size()) != r) {
    bad("orders/action length mismatch");
    return rc;
  }
  if (static_cast<int>(re.degree.size()) != d) {
    bad("degree list must have one entry per basis vector");
    return rc;
  }
  for (int s = 0; s < r; ++s)
    if (re.action[s].rows() != d || re.action[s].cols() != d) {
      bad("action matrix " + std::to_string(s) + " has wrong shape");
      return rc;
    }
  for (int i = 0; i < d; ++i)
    if (static_cast<int>(re.degree[i].size()) != r) {
      bad("degree vector " + std::to_string(i) + " has wrong length");
      return rc;
    }
  for (int s = 0; s < r; ++s) {
    try {
      re.action[s].inverse();
    } catch (const InvalidArgument&) {
      bad("action matrix " + std::to_string(s) + " is singular");
    }
  }
  for (int s = 0; s < r; ++s)
    for (int u = s + 1; u < r; ++u)
      if (!re.action[s].commutes_with(re.action[u]))
        bad("action matrices " + std::to_string(s) + " and " + std::to_string(u) +
            " do not commute");
  for (int s = 0; s < r; ++s) {
    if (re.orders[s] < 0) {
      bad("negative order for factor " + std::to_string(s));
      continue;
    }
    if (re.orders[s] > 0 && !re.action[s].pow(re.orders[s]).is_identity())
      bad("action of factor " + std::to_string(s) + " does not have order dividing " +
          std::to_string(re.orders[s]));
  }
  if (!rc.ok) return rc;
  for (int i = 0; i < d; ++i) {
    FMatrix A = sp.action_of_degree(i);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          uint32_t want = (l == i) ? A.at(k, j) : 0;
          if (sp.c_entry(k, l, i, j) != want) {
            bad("braiding incompatible with realization at c(x_" + sp.labels[i].str() + " ⊗ x_" +
                sp.labels[j].str() + ")");
            j = k = l = d;  // one violation per i is enough
          }
        }
  }
  return rc;
}

namespace {
using Triple = std::array<int, 3>;
using TMap = std::map<Triple, uint32_t>;

// apply c at tensor slots (pos, pos+1) of a 3-fold tensor term map
TMap apply_c3(const BraidedSpace& sp, const TMap& in, int pos) {
  const Field& f = sp.field;
  int d = sp.dim();
  TMap out;
  for (auto& [tr, v] : in) {
    int i = tr[pos], j = tr[pos + 1];
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        uint32_t cc = sp.c_entry(k, l, i, j);
        if (!cc) continue;
        Triple nt = tr;
        nt[pos] = k;
        nt[pos + 1] = l;
        uint32_t& slot = out[nt];
        slot = f.add(slot, f.mul(cc, v));
      }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}
}  // namespace

bool braid_equation_holds(const BraidedSpace& sp) {
  int d = sp.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        TMap start{{Triple{i, j, k}, 1u}};
        TMap lhs = apply_c3(sp, apply_c3(sp, apply_c3(sp, start, 0), 1), 0);
        TMap rhs = apply_c3(sp, apply_c3(sp, apply_c3(sp, start, 1), 0), 1);
        if (lhs != rhs) return false;
      }
  return true;
}

bool braiding_invertible(const BraidedSpace& sp) {
  int n = sp.dim() * sp.dim();
  return sp.c.rank() == n;
}

Realization with_orders(const Realization& r, const std::vector<long long>& orders) {
  if (orders.size() != r.orders.size())
    throw InvalidArgument("orders vector has wrong length");
  Realization out = r;
  out.orders = orders;
  return out;
}

SpacePtr restrict_space(const SpacePtr& sp, const std::vector<int>& keep) {
  int d = sp->dim();
  std::vector<int> pos(d, -1);
  for (size_t s = 0; s < keep.size(); ++s) {
    if (keep[s] < 0 || keep[s] >= d) throw InvalidArgument("restriction index out of range");
    pos[keep[s]] = static_cast<int>(s);
  }
  int n = static_cast<int>(keep.size());
  auto out = std::make_shared<BraidedSpace>(sp->field);
  out->family = Family::Custom;
  for (int i : keep) out->labels.push_back(sp->labels[i]);
  out->c = FMatrix(sp->field, n * n, n * n);
  for (int si = 0; si < n; ++si)
    for (int sj = 0; sj < n; ++sj) {
      int i = keep[si], j = keep[sj];
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          uint32_t v = sp->c_entry(k, l, i, j);
          if (!v) continue;
          if (pos[k] < 0 || pos[l] < 0)
            throw InvalidArgument("braiding does not preserve the requested subspace");
          out->c.at(pos[k] * n + pos[l], si * n + sj) = v;
        }
    }
  if (sp->real) {
    const Realization& re = *sp->real;
    Realization sub;
    sub.orders = re.orders;
    for (const FMatrix& A : re.action) {
      FMatrix B(sp->field, n, n);
      for (int sj = 0; sj < n; ++sj) {
        int j = keep[sj];
        for (int k = 0; k < d; ++k) {
          uint32_t v = A.at(k, j);
          if (!v) continue;
          if (pos[k] < 0)
            throw InvalidArgument("group action does not preserve the requested subspace");
          B.at(pos[k], sj) = v;
        }
      }
      sub.action.push_back(B);
    }
    for (int i : keep) sub.degree.push_back(re.degree[i]);
    out->real = std::move(sub);
  }
  return out;
}

// --- JSON ---

json field_to_json(const Field& f) { return json{{"k", f.k()}, {"modulus_mask", f.modulus()}}; }

Field field_from_json(const json& j) {
  return Field(j.at("k").get<int>(), j.at("modulus_mask").get<uint32_t>());
}

namespace {
json qmat_json(const Field& f, const std::vector<std::vector<uint32_t>>& q) {
  json rows = json::array();
  for (auto& r : q) {
    json row = json::array();
    for (uint32_t v : r) row.push_back(f.format(v));
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<uint32_t>> qmat_from_json(const Field& f, const json& j) {
  std::vector<std::vector<uint32_t>> q;
  for (auto& row : j) {
    std::vector<uint32_t> r;
    for (auto& v : row) r.push_back(f.parse(v.get<std::string>()).mask());
    q.push_back(r);
  }
  return q;
}
}  // namespace

json params_to_json(const BraidedSpace& sp) {
  const Field& f = sp.field;
  json p = json::object();
  switch (sp.family) {
    case Family::Diagonal:
      p["q"] = qmat_json(f, sp.params.q);
      break;
    case Family::Block:
      p["eps"] = f.format(sp.params.eps);
      p["l"] = sp.params.ell;
      break;
    case Family::Lstr:
      p["p"] = f.format(sp.params.p);
      p["q22"] = f.format(sp.params.q22);
      p["a"] = f.format(sp.params.a);
      break;
    case Family::BlockPoints:
    case Family::Poseidon: {
      p["q"] = qmat_json(f, sp.params.q);
      json av = json::array();
      for (uint32_t v : sp.params.avec) av.push_back(f.format(v));
      p["a"] = av;
      break;
    }
    case Family::Pale:
      p["p"] = f.format(sp.params.p);
      p["q22"] = f.format(sp.params.q22);
      break;
    case Family::Custom:
      break;
  }
  return p;
}

json space_to_json(const BraidedSpace& sp) {
  json j;
  j["family"] = family_name(sp.family);
  j["dim"] = sp.dim();
  json labels = json::array();
  for (auto& l : sp.labels) labels.push_back(l.str());
  j["labels"] = labels;
  j["field"] = field_to_json(sp.field);
  j["params"] = params_to_json(sp);
  json c = json::array();
  int n = sp.dim() * sp.dim();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int col = 0; col < n; ++col) row.push_back(sp.c.at(r, col));
    c.push_back(row);
  }
  j["c"] = c;
  if (sp.real) {
    const Realization& re = *sp.real;
    json rj;
    rj["orders"] = re.orders;
    json acts = json::array();
    for (const FMatrix& A : re.action) {
      json rows = json::array();
      for (int r = 0; r < A.rows(); ++r) {
        json row = json::array();
        for (int cjx = 0; cjx < A.cols(); ++cjx) row.push_back(A.at(r, cjx));
        rows.push_back(row);
      }
      acts.push_back(rows);
    }
    rj["action"] = acts;
    rj["degree"] = re.degree;
    j["realization"] = rj;
  }
  return j;
}

SpacePtr space_from_json(const json& j) {
  Field f = field_from_json(j.at("field"));
  Family fam = family_from_name(j.at("family").get<std::string>());
  const json& p = j.at("params");
  SpacePtr sp;
  switch (fam) {
    case Family::Diagonal:
      sp = diagonal(f, qmat_from_json(f, p.at("q")));
      break;
    case Family::Block:
      sp = block(f.parse(p.at("eps").get<std::string>()), p.at("l").get<int>());
      break;
    case Family::Lstr:
      sp = lstr(f.parse(p.at("p").get<std::string>()), f.parse(p.at("q22").get<std::string>()),
                f.parse(p.at("a").get<std::string>()));
      break;
    case Family::BlockPoints:
    case Family::Poseidon: {
      std::vector<uint32_t> av;
      for (auto& v : p.at("a")) av.push_back(f.parse(v.get<std::string>()).mask());
      sp = fam == Family::BlockPoints ? block_points(f, qmat_from_json(f, p.at("q")), av)
                                      : poseidon(f, qmat_from_json(f, p.at("q")), av);
      break;
    }
    case Family::Pale:
      sp = pale(f.parse(p.at("p").get<std::string>()), f.parse(p.at("q22").get<std::string>()));
      break;
    case Family::Custom: {
      auto out = std::make_shared<BraidedSpace>(f);
      for (auto& l : j.at("labels")) out->labels.push_back(parse_label(l.get<std::string>()));
      int n = out->dim() * out->dim();
      out->c = FMatrix(f, n, n);
      const json& c = j.at("c");
      for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) out->c.at(r, col) = c.at(r).at(col).get<uint32_t>();
      if (j.contains("realization")) {
        const json& rj = j.at("realization");
        Realization re;
        re.orders = rj.at("orders").get<std::vector<long long>>();
        for (auto& aj : rj.at("action")) {
          int d = out->dim();
          FMatrix A(f, d, d);
          for (int r = 0; r < d; ++r)
            for (int cjx = 0; cjx < d; ++cjx) A.at(r, cjx) = aj.at(r).at(cjx).get<uint32_t>();
          re.action.push_back(A);
        }
        re.degree = rj.at("degree").get<std::vector<std::vector<long long>>>();
        out->real = std::move(re);
      }
      sp = out;
      break;
    }
  }
  // round-trip integrity: a stored braiding must match the reconstruction
  if (fam != Family::Custom && j.contains("c")) {
    int n = sp->dim() * sp->dim();
    const json& c = j.at("c");
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col)
        if (sp->c.at(r, col) != c.at(r).at(col).get<uint32_t>())
          throw InvalidArgument("stored braiding disagrees with family parameters");
  }
  return sp;
}

}  // namespace nichols
