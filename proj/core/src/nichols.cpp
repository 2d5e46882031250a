#include "nichols/nichols.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "nichols/errors.hpp"

namespace nichols {

std::string status_name(Status s) {
  return s == Status::Finite ? "finite" : "truncated";
}

json HilbertSeries::to_json() const {
  json j;
  j["family"] = family;
  j["params"] = params;
  j["field"] = field;
  j["dims"] = dims;
  if (total)
    j["total"] = *total;
  else
    j["total"] = nullptr;
  j["status"] = status_name(status);
  j["top_degree"] = top_degree;
  return j;
}

std::optional<long long> GradedBasis::total() const {
  if (status != Status::Finite) return std::nullopt;
  long long t = 0;
  for (int d : dims) t += d;
  return t;
}

std::vector<long long> GradedBasis::dims_ll() const {
  return std::vector<long long>(dims.begin(), dims.end());
}

std::vector<long long> GradedBasis::weighted_dims() const {
  int maxw = 0;
  for (const auto& dw : wdeg)
    for (int w : dw) maxw = std::max(maxw, w);
  std::vector<long long> h(static_cast<size_t>(maxw) + 1, 0);
  for (const auto& dw : wdeg)
    for (int w : dw) h[static_cast<size_t>(w)]++;
  return h;
}

HilbertSeries GradedBasis::hilbert() const {
  HilbertSeries hs;
  hs.family = family_name(space->family);
  hs.params = params_to_json(*space);
  hs.field = field_to_json(space->field);
  hs.dims = dims_ll();
  hs.total = total();
  hs.status = status;
  hs.top_degree = top_degree;
  return hs;
}

std::vector<uint32_t> GradedBasis::project(const NcPoly& p, int* degree_out) const {
  if (!tables_kept)
    throw InvalidArgument("projection unavailable: degree tables were dropped");
  if (pruned)
    throw InvalidArgument("projection unavailable: basis was weight-pruned");
  const Field& f = space->field;
  if (p.is_zero()) {
    if (degree_out) *degree_out = 0;
    return {};
  }
  auto deg = p.homogeneous_degree();
  if (!deg) throw InvalidArgument("project requires a homogeneous input");
  int d = *deg;
  if (degree_out) *degree_out = d;
  if (d > top_degree) {
    if (status == Status::Finite) return {};  // zero: the algebra stops earlier
    throw DegreeRange("degree " + std::to_string(d) + " exceeds computed range " +
                      std::to_string(top_degree));
  }
  SliceVec acc(f.k(), dims[static_cast<size_t>(d)]);
  std::vector<uint32_t> cur, nxt;
  for (const auto& [w, coef] : p.terms()) {
    cur.assign(1, coef);  // coordinates in degree 0
    for (int s = 0; s < d; ++s) {
      const SliceMat& M = Mt[static_cast<size_t>(s)][static_cast<size_t>(w[static_cast<size_t>(s)])];
      SliceVec step(f.k(), M.nbits());
      for (size_t b = 0; b < cur.size(); ++b)
        if (cur[b]) step.axpy_raw(f, cur[b], M.row(static_cast<int>(b)), M.words(), 0);
      nxt = step.to_dense();
      cur.swap(nxt);
      if (std::all_of(cur.begin(), cur.end(), [](uint32_t c) { return c == 0; })) break;
    }
    for (size_t b = 0; b < cur.size(); ++b)
      if (cur[b]) acc.set(static_cast<int>(b), f.add(acc.get(static_cast<int>(b)), cur[b]));
  }
  std::vector<uint32_t> out = acc.to_dense();
  bool allz = std::all_of(out.begin(), out.end(), [](uint32_t c) { return c == 0; });
  return allz ? std::vector<uint32_t>{} : out;
}

bool GradedBasis::is_zero_in_nichols(const NcPoly& p) const {
  if (p.is_zero()) return true;
  // split into homogeneous components; zero iff every component projects to zero
  std::map<int, NcPoly> comp;
  for (const auto& [w, c] : p.terms()) {
    auto it = comp.find(static_cast<int>(w.size()));
    if (it == comp.end()) it = comp.emplace(static_cast<int>(w.size()), NcPoly(space)).first;
    it->second.add_term(w, c);
  }
  for (const auto& [d, q] : comp) {
    (void)d;
    if (!project(q).empty()) return false;
  }
  return true;
}

GradedBasis compute(const SpacePtr& space, const EngineOptions& opts) {
  if (!space) throw InvalidArgument("compute: null space");
  if (!space->real) throw InvalidArgument("compute requires a realization");
  {
    auto chk = validate_realization(*space);
    if (!chk.ok) throw InvalidArgument("invalid realization: " + chk.violations.front());
  }
  if (opts.max_degree < 1) throw InvalidArgument("max_degree must be >= 1");
  const Field f = space->field;
  const int k = f.k();
  const int th = space->dim();

  std::vector<int> wt = opts.weights;
  if (wt.empty()) wt.assign(static_cast<size_t>(th), 1);
  if (static_cast<int>(wt.size()) != th)
    throw InvalidArgument("weights size must match the space dimension");
  for (int w : wt)
    if (w < 1) throw InvalidArgument("weights must be positive");

  std::vector<FMatrix> A;
  A.reserve(static_cast<size_t>(th));
  for (int i = 0; i < th; ++i) A.push_back(space->action_of_degree(i));
  if (opts.weight_cutoff) {
    for (const auto& m : A)
      if (!m.is_diagonal())
        throw InvalidArgument("weight_cutoff requires diagonal degree actions");
  }

  GradedBasis gb;
  gb.space = space;
  gb.gen_weights = wt;
  gb.dims = {1};
  gb.wdeg = {{0}};
  gb.provenance = {{}};
  gb.Dt.emplace_back();  // degree 0: no derivation rows
  gb.tables_kept = true;

  int n = 0;
  for (n = 1; n <= opts.max_degree; ++n) {
    const int prev = gb.dims[static_cast<size_t>(n - 1)];
    const int pprev = n >= 2 ? gb.dims[static_cast<size_t>(n - 2)] : 0;
    const int segw = SliceVec::words_for(prev);
    const int fpbits = th * segw * 64;
    // Tables at this degree feed degree n+1 (and projection).  At the final
    // capped degree of a table-dropping run neither consumer exists, so the
    // expression tracking, coordinate rows, and table builds are skipped.
    const bool need_tables = opts.keep_tables || n < opts.max_degree;
    Eliminator elim(f, fpbits, /*track_expr=*/need_tables);

    // The fingerprint needs G[i][l] = Dt[n-1][i] * Mt[n-2][l], the coordinates
    // of d_i(basis_b) * x_l in the degree n-1 basis.  The products are formed
    // in strips of consecutive b so that only a bounded slab is live at once.
    int bb = prev;
    if (n >= 2) {
      const size_t strip_row_bytes =
          static_cast<size_t>(th) * th * k * SliceVec::words_for(prev) * 8 +
          static_cast<size_t>(th) * k * SliceVec::words_for(pprev) * 8;
      const size_t budget = size_t{512} << 20;
      bb = static_cast<int>(std::clamp<size_t>(budget / std::max<size_t>(strip_row_bytes, 1),
                                               64, static_cast<size_t>(prev)));
    }
    // Gstack[l] stacks the strips for all i vertically (row i*bs + (b-b0)),
    // so each block needs only th products and th table builds, not th^2.
    std::vector<SliceMat> Gstack(static_cast<size_t>(th));

    std::vector<SliceVec> fps;  // original fingerprints of accepted candidates
    std::vector<std::pair<int, int>> prov_n;
    std::vector<int> wdeg_n;
    std::vector<SliceVec> coords(need_tables ? static_cast<size_t>(prev) * static_cast<size_t>(th) : 0);
    bool have_cut = opts.weight_cutoff.has_value();
    int cut = have_cut ? *opts.weight_cutoff : 0;

    for (int b0 = 0; b0 < prev; b0 += bb) {
      const int b1 = std::min(prev, b0 + bb);
      const int bs = b1 - b0;
      if (n >= 2) {
        SliceMat Dsub(k, th * bs, pprev);
        for (int i = 0; i < th; ++i) {
          const SliceMat& D = gb.Dt[static_cast<size_t>(n - 1)][static_cast<size_t>(i)];
          std::copy(D.row(b0), D.row(b0) + static_cast<size_t>(bs) * k * D.words(),
                    Dsub.row(i * bs));
        }
        for (int l = 0; l < th; ++l) {
          SliceMat C(k, th * bs, prev);
          accumulate_product(f, Dsub, gb.Mt[static_cast<size_t>(n - 2)][static_cast<size_t>(l)], C);
          Gstack[static_cast<size_t>(l)] = std::move(C);
        }
      }

      for (int b = b0; b < b1; ++b) {
        for (int j = 0; j < th; ++j) {
          const size_t slot = static_cast<size_t>(b) * static_cast<size_t>(th) + static_cast<size_t>(j);
          const int w = gb.wdeg[static_cast<size_t>(n - 1)][static_cast<size_t>(b)] + wt[static_cast<size_t>(j)];
          if (have_cut && w > cut) {
            gb.pruned = true;
            if (need_tables) coords[slot] = SliceVec(k, 0);
            continue;
          }
          // fingerprint of basis_b * x_j: segment i holds coords of d_i in B^{n-1}
          SliceVec fp(k, fpbits);
          if (n >= 2) {
            for (int i = 0; i < th; ++i) {
              const FMatrix& Aj = A[static_cast<size_t>(i)];
              for (int l = 0; l < th; ++l) {
                uint32_t coef = Aj.at(l, j);
                if (!coef) continue;
                const SliceMat& Gm = Gstack[static_cast<size_t>(l)];
                fp.axpy_raw(f, coef, Gm.row(i * bs + (b - b0)), Gm.words(), i * segw);
              }
            }
          }
          const int selfbit = j * segw * 64 + b;  // d_j picks up basis_b itself
          fp.set(selfbit, fp.get(selfbit) ^ 1u);
          if (need_tables) {
            SliceVec orig = fp;
            SliceVec eacc(k, elim.rank() + 1);
            int ord = elim.add(fp, &eacc);
            if (ord >= 0) {
              prov_n.emplace_back(b, j);
              wdeg_n.push_back(w);
              fps.push_back(std::move(orig));
              SliceVec unit(k, ord + 1);
              unit.set(ord, 1);
              coords[slot] = std::move(unit);
            } else {
              coords[slot] = std::move(eacc);
            }
          } else if (elim.add(fp, nullptr) >= 0) {
            prov_n.emplace_back(b, j);
            wdeg_n.push_back(w);
          }
        }
      }
    }

    const int dn = elim.rank();
    if (need_tables) {
      // multiplication tables from degree n-1 into degree n
      std::vector<SliceMat> mt;
      mt.reserve(static_cast<size_t>(th));
      for (int j = 0; j < th; ++j) {
        SliceMat M(k, prev, dn);
        for (int b = 0; b < prev; ++b)
          M.set_row(b, coords[static_cast<size_t>(b) * static_cast<size_t>(th) + static_cast<size_t>(j)]);
        mt.push_back(std::move(M));
      }
      gb.Mt.push_back(std::move(mt));
    }

    if (dn == 0) {
      gb.status = gb.pruned ? Status::Truncated : Status::Finite;
      gb.top_degree = n - 1;
      break;
    }

    gb.dims.push_back(dn);
    gb.wdeg.push_back(std::move(wdeg_n));
    gb.provenance.push_back(std::move(prov_n));

    if (need_tables) {
      // derivation tables at degree n: row m of Dt[n][i] = segment i of fps[m]
      std::vector<SliceMat> dt;
      dt.reserve(static_cast<size_t>(th));
      for (int i = 0; i < th; ++i) {
        SliceMat D(k, dn, prev);
        for (int m = 0; m < dn; ++m) {
          uint64_t* dst = D.row(m);
          for (int p = 0; p < k; ++p) {
            const uint64_t* src = fps[static_cast<size_t>(m)].plane(p) + static_cast<size_t>(i) * static_cast<size_t>(segw);
            for (int w = 0; w < D.words(); ++w) dst[static_cast<size_t>(p) * static_cast<size_t>(D.words()) + static_cast<size_t>(w)] = src[w];
          }
        }
        dt.push_back(std::move(D));
      }
      gb.Dt.push_back(std::move(dt));
    }

    if (!opts.keep_tables) {
      gb.tables_kept = false;
      if (n >= 1 && n - 1 < static_cast<int>(gb.Dt.size())) gb.Dt[static_cast<size_t>(n - 1)].clear();
      if (n >= 2 && n - 2 < static_cast<int>(gb.Mt.size())) gb.Mt[static_cast<size_t>(n - 2)].clear();
    }

    if (n == opts.max_degree) {
      gb.status = Status::Truncated;
      gb.top_degree = n;
    }
  }
  return gb;
}

}  // namespace nichols
