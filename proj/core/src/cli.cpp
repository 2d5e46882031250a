#include "nichols/cli.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nichols/errors.hpp"
#include "nichols/verify.hpp"

namespace nichols::cli {

namespace {

struct SpaceOpts {
  std::string family;
  int k = 0;  // 0: choose the smallest field that fits every element spec
  std::string p = "ord:3", q22 = "int:1", a = "int:1", eps = "int:1";
  int ell = 2;
  std::string qmat, avec;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool spec_fits(const std::string& spec, int k) {
  if (spec.rfind("ord:", 0) == 0) {
    unsigned long long m = std::stoull(spec.substr(4));
    if (m == 0) return false;
    return ((1ull << k) - 1) % m == 0;
  }
  std::string digits = spec.rfind("int:", 0) == 0 ? spec.substr(4) : spec;
  unsigned long long v = std::stoull(digits);
  return v < (1ull << k);
}

int pick_k(const std::vector<std::string>& specs, int requested) {
  if (requested) {
    if (requested < 1 || requested > 24) throw InvalidArgument("--k must be in 1..24");
    return requested;
  }
  for (int k = 1; k <= 24; ++k) {
    bool ok = true;
    for (const auto& s : specs)
      if (!spec_fits(s, k)) ok = false;
    if (ok) return k;
  }
  throw InvalidArgument("no field GF(2^k), k <= 24, fits every element parameter");
}

std::vector<std::vector<std::string>> matrix_spec(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : split_list(s, ';')) rows.push_back(split_list(row, ','));
  return rows;
}

SpacePtr build_space(const SpaceOpts& o) {
  std::vector<std::string> specs;
  std::vector<std::vector<std::string>> qm;
  std::vector<std::string> av;
  if (o.family == "jordan" || o.family == "block") {
    specs = {o.eps};
  } else if (o.family == "lstr") {
    specs = {o.p, o.q22, o.a};
  } else if (o.family == "pale") {
    specs = {o.p, o.q22};
  } else if (o.family == "diagonal" || o.family == "block_points" || o.family == "poseidon") {
    if (o.qmat.empty()) throw InvalidArgument("--q is required for family " + o.family);
    qm = matrix_spec(o.qmat);
    for (const auto& row : qm)
      for (const auto& e : row) specs.push_back(e);
    if (o.family != "diagonal") {
      if (o.avec.empty()) throw InvalidArgument("--avec is required for family " + o.family);
      av = split_list(o.avec, ',');
      for (const auto& e : av) specs.push_back(e);
    }
  } else {
    throw InvalidArgument("unknown family: " + o.family);
  }

  Field f(pick_k(specs, o.k));
  auto mask = [&](const std::string& s) { return f.parse(s).mask(); };
  if (o.family == "jordan" || o.family == "block") return block(f.parse(o.eps), o.ell);
  if (o.family == "lstr") return lstr(f.parse(o.p), f.parse(o.q22), f.parse(o.a));
  if (o.family == "pale") return pale(f.parse(o.p), f.parse(o.q22));

  std::vector<std::vector<uint32_t>> q;
  for (const auto& row : qm) {
    q.emplace_back();
    for (const auto& e : row) q.back().push_back(mask(e));
  }
  if (o.family == "diagonal") return diagonal(f, q);
  std::vector<uint32_t> avec;
  for (const auto& e : av) avec.push_back(mask(e));
  if (o.family == "block_points") return block_points(f, q, avec);
  return poseidon(f, q, avec);
}

void add_space_options(CLI::App* sub, SpaceOpts& o) {
  sub->add_option("--family", o.family,
                  "jordan|lstr|pale|block_points|poseidon|diagonal")
      ->required();
  sub->add_option("--k", o.k, "field exponent k for GF(2^k); 0 = smallest fit");
  sub->add_option("--p", o.p, "block scalar (grammar: int:<mask>, ord:<M>, or <mask>)");
  sub->add_option("--q22", o.q22, "point self-braiding scalar");
  sub->add_option("--a", o.a, "interaction scalar");
  sub->add_option("--eps", o.eps, "block eigenvalue");
  sub->add_option("--ell", o.ell, "block size");
  sub->add_option("--q", o.qmat, "braiding matrix, rows ';'-separated, entries ','-separated");
  sub->add_option("--avec", o.avec, "interaction vector, ','-separated");
}

struct OutOpts {
  std::string format = "json";
  std::string out_path;
};

void add_out_options(CLI::App* sub, OutOpts& o) {
  sub->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out_path, "also write the report to this file");
}

void emit(const OutOpts& o, const json& j, const std::string& text, std::ostream& out) {
  std::string payload = o.format == "json" ? j.dump(2) + "\n" : text;
  out << payload;
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file: " + o.out_path);
    f << payload;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for Nichols algebras of braided vector spaces over GF(2^k)"};
  app.require_subcommand(1);

  SpaceOpts so;
  OutOpts oo;

  auto* c_compute = app.add_subcommand("compute", "graded dimensions of the Nichols algebra");
  int max_degree = 16;
  std::string weights_s, cutoff_s;
  add_space_options(c_compute, so);
  add_out_options(c_compute, oo);
  c_compute->add_option("--max-degree", max_degree, "degree bound for the run");
  c_compute->add_option("--weights", weights_s, "per-generator weights, ','-separated");
  c_compute->add_option("--cutoff", cutoff_s, "weighted-degree cutoff (diagonal actions only)");

  auto* c_verify = app.add_subcommand("verify", "relations, PBW Hilbert series, top monomial");
  bool expensive = false;
  int fuzz_n = 0;
  uint64_t seed = 1;
  add_space_options(c_verify, so);
  add_out_options(c_verify, oo);
  c_verify->add_flag("--expensive", expensive, "run the full-depth checks");
  c_verify->add_option("--fuzz", fuzz_n, "extra randomized identity checks");
  c_verify->add_option("--seed", seed, "seed for --fuzz");

  auto* c_dynkin = app.add_subcommand("dynkin", "Dynkin diagram of the splitting quotient");
  add_space_options(c_dynkin, so);
  add_out_options(c_dynkin, oo);

  auto* c_split = app.add_subcommand("split", "graded consistency of the splitting");
  int split_depth = 12;
  add_space_options(c_split, so);
  add_out_options(c_split, oo);
  c_split->add_option("--max-degree", split_depth, "degree bound for the comparison");

  auto* c_oracle = app.add_subcommand("oracle", "symmetrizer-rank cross-check of the engine");
  int max_n = 4;
  add_space_options(c_oracle, so);
  add_out_options(c_oracle, oo);
  c_oracle->add_option("--max-n", max_n, "check degrees 1..N");

  auto* c_table = app.add_subcommand("table1", "total dimension against the closed form");
  add_space_options(c_table, so);
  add_out_options(c_table, oo);
  c_table->add_flag("--expensive", expensive, "full engine run for the large family");

  auto* c_boson = app.add_subcommand("boson", "bosonization dimension over a finite quotient");
  std::string orders_s;
  add_space_options(c_boson, so);
  add_out_options(c_boson, oo);
  c_boson->add_option("--orders", orders_s, "group factor orders, ','-separated (default: minimal)");
  c_boson->add_flag("--expensive", expensive, "full engine run for the large family");

  std::vector<const char*> argv;
  argv.push_back("nichols");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    SpacePtr sp = build_space(so);

    if (c_compute->parsed()) {
      EngineOptions eo;
      eo.max_degree = max_degree;
      if (!weights_s.empty())
        for (const auto& w : split_list(weights_s, ',')) eo.weights.push_back(std::stoi(w));
      if (!cutoff_s.empty()) eo.weight_cutoff = std::stoi(cutoff_s);
      GradedBasis gb = compute(sp, eo);
      json j = gb.hilbert().to_json();
      if (!eo.weights.empty()) j["weighted_dims"] = gb.weighted_dims();
      std::ostringstream ts;
      ts << "family: " << family_name(sp->family) << "\n";
      ts << "dims:";
      for (int d : gb.dims) ts << " " << d;
      ts << "\nstatus: " << status_name(gb.status) << "\n";
      if (gb.total()) ts << "total: " << *gb.total() << "\n";
      if (!eo.weights.empty()) {
        ts << "weighted:";
        for (long long d : gb.weighted_dims()) ts << " " << d;
        ts << "\n";
      }
      emit(oo, j, ts.str(), out);
      return gb.status == Status::Finite ? 0 : 3;
    }

    if (c_verify->parsed()) {
      VerificationReport rep = relation_suite(sp, expensive);
      json j = rep.to_json();
      std::string text = rep.text();
      bool pass = rep.pass;
      if (fuzz_n > 0) {
        FuzzReport fr = fuzz_properties(sp, fuzz_n, seed);
        json jf;
        jf["samples"] = fr.samples;
        jf["failures"] = fr.failures;
        jf["notes"] = fr.notes;
        j["fuzz"] = jf;
        std::ostringstream fs;
        fs << "fuzz: " << fr.failures << " failures in " << fr.samples << " samples\n";
        text += fs.str();
        if (fr.failures) pass = false;
      }
      emit(oo, j, text, out);
      return pass ? 0 : 1;
    }

    if (c_dynkin->parsed()) {
      K1Data k1 = k1_for(sp);
      DynkinDiagram d = dynkin(sp->field, k1.q_matrix);
      json j;
      j["family"] = family_name(sp->family);
      j["params"] = params_to_json(*sp);
      j["field"] = field_to_json(sp->field);
      j["dynkin"] = d.to_json(sp->field);
      std::optional<bool> matches;
      try {
        DynkinDiagram exp = expected_obstruction(sp);
        j["expected"] = exp.to_json(sp->field);
        matches = d == exp;
        j["matches_expected"] = *matches;
      } catch (const InvalidArgument&) {
        j["expected"] = nullptr;
        j["matches_expected"] = nullptr;
      }
      std::ostringstream ts;
      ts << d.text(sp->field);
      if (matches) ts << "matches_expected: " << (*matches ? "yes" : "no") << "\n";
      emit(oo, j, ts.str(), out);
      return !matches || *matches ? 0 : 1;
    }

    if (c_split->parsed()) {
      SplitReport rep = check_k1_consistency(sp, split_depth);
      emit(oo, rep.to_json(sp->field), rep.text(sp->field), out);
      return rep.pass ? 0 : 1;
    }

    if (c_oracle->parsed()) {
      EngineOptions eo;
      eo.max_degree = max_n;
      GradedBasis gb = compute(sp, eo);
      json rows = json::array();
      std::ostringstream ts;
      bool all_ok = true;
      for (int n = 1; n <= max_n; ++n) {
        long long engine = n < static_cast<int>(gb.dims.size()) ? gb.dims[static_cast<size_t>(n)] : 0;
        long long sym = symmetrizer_dim(sp, n);
        bool ok = engine == sym;
        all_ok = all_ok && ok;
        json jr;
        jr["n"] = n;
        jr["engine"] = engine;
        jr["symmetrizer_rank"] = sym;
        jr["match"] = ok;
        rows.push_back(jr);
        ts << "n=" << n << ": engine " << engine << ", symmetrizer " << sym << " -> "
           << (ok ? "match" : "MISMATCH") << "\n";
      }
      json j;
      j["family"] = family_name(sp->family);
      j["params"] = params_to_json(*sp);
      j["field"] = field_to_json(sp->field);
      j["rows"] = rows;
      j["pass"] = all_ok;
      ts << "pass: " << (all_ok ? "yes" : "no") << "\n";
      emit(oo, j, ts.str(), out);
      return all_ok ? 0 : 1;
    }

    if (c_table->parsed()) {
      Table1Row row = table1_check(sp, expensive);
      emit(oo, row.to_json(), row.text(), out);
      return row.pass ? 0 : 1;
    }

    if (c_boson->parsed()) {
      std::vector<long long> orders;
      if (!orders_s.empty())
        for (const auto& o : split_list(orders_s, ',')) orders.push_back(std::stoll(o));
      BosonReport rep = bosonization_dim(sp, orders, expensive);
      emit(oo, rep.to_json(), rep.text(), out);
      return rep.pass ? 0 : 1;
    }

    err << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nichols::cli
