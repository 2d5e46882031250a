#include "nichols/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace nichols {

namespace {
void require_same_space(const NcPoly& a, const NcPoly& b) {
  if (a.space() != b.space()) {
    // distinct objects with equal structure are fine for fields, but words
    // index a specific basis, so polynomials must share the space object
    if (!a.space() || !b.space() || a.space()->field != b.space()->field ||
        a.space()->labels != b.space()->labels)
      throw InvalidArgument("polynomials live in different spaces");
  }
}
}  // namespace

NcPoly NcPoly::unit(SpacePtr s) {
  NcPoly p(std::move(s));
  p.t_[{}] = 1;
  return p;
}

NcPoly NcPoly::gen(SpacePtr s, int i) {
  if (i < 0 || i >= s->dim()) throw InvalidArgument("generator index out of range");
  NcPoly p(std::move(s));
  p.t_[{i}] = 1;
  return p;
}

NcPoly NcPoly::gen(SpacePtr s, const Label& l) {
  int i = s->label_index(l);
  return gen(std::move(s), i);
}

NcPoly NcPoly::term(SpacePtr s, const Word& w, uint32_t coeff) {
  for (int i : w)
    if (i < 0 || i >= s->dim()) throw InvalidArgument("word letter out of range");
  NcPoly p(std::move(s));
  if (coeff) p.t_[w] = coeff;
  return p;
}

void NcPoly::add_term(const Word& w, uint32_t coeff) {
  if (!coeff) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, coeff);
  } else {
    it->second ^= coeff;  // char-2 addition of masks
    if (!it->second) t_.erase(it);
  }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  require_same_space(*this, o);
  NcPoly out = *this;
  for (auto& [w, c] : o.t_) out.add_term(w, c);
  return out;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  require_same_space(*this, o);
  const Field& f = sp_->field;
  NcPoly out(sp_);
  for (auto& [w1, c1] : t_)
    for (auto& [w2, c2] : o.t_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_term(w, f.mul(c1, c2));
    }
  return out;
}

NcPoly NcPoly::scale(uint32_t lambda) const {
  const Field& f = sp_->field;
  NcPoly out(sp_);
  if (!lambda) return out;
  for (auto& [w, c] : t_) out.t_[w] = f.mul(lambda, c);
  return out;
}

std::optional<int> NcPoly::homogeneous_degree() const {
  if (t_.empty()) return std::nullopt;
  size_t d = t_.begin()->first.size();
  for (auto& [w, c] : t_)
    if (w.size() != d) return std::nullopt;
  return static_cast<int>(d);
}

int NcPoly::max_degree() const {
  int d = 0;
  for (auto& [w, c] : t_) d = std::max<int>(d, static_cast<int>(w.size()));
  return d;
}

std::optional<std::vector<long long>> NcPoly::gamma_degree() const {
  if (t_.empty() || !sp_->real) return std::nullopt;
  const Realization& re = *sp_->real;
  auto word_deg = [&](const Word& w) {
    std::vector<long long> g(re.generators(), 0);
    for (int i : w)
      for (int r = 0; r < re.generators(); ++r) {
        g[r] += re.degree[i][r];
        if (re.orders[r] > 0) g[r] %= re.orders[r];
      }
    return g;
  };
  auto g0 = word_deg(t_.begin()->first);
  for (auto& [w, c] : t_)
    if (word_deg(w) != g0) return std::nullopt;
  return g0;
}

std::string NcPoly::str() const {
  if (t_.empty()) return "0";
  const Field& f = sp_->field;
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << (c == 1 ? std::string("1") : f.format(c)) << "*";
    if (w.empty()) {
      os << "e";
    } else {
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ".";
        os << sp_->labels[w[i]].str();
      }
    }
  }
  return os.str();
}

NcPoly NcPoly::parse(SpacePtr s, const std::string& text) {
  NcPoly out(s);
  const Field& f = s->field;
  std::string t = text;
  size_t pos = 0;
  auto trim = [](std::string v) {
    size_t b = v.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    size_t e = v.find_last_not_of(" \t");
    return v.substr(b, e - b + 1);
  };
  while (pos <= t.size()) {
    size_t next = t.find('+', pos);
    std::string term = trim(t.substr(pos, next == std::string::npos ? next : next - pos));
    pos = next == std::string::npos ? t.size() + 1 : next + 1;
    if (term.empty()) {
      if (next == std::string::npos) break;
      throw InvalidArgument("empty term in polynomial");
    }
    if (term == "0") continue;
    size_t star = term.find('*');
    uint32_t coeff = 1;
    std::string wtext = term;
    if (star != std::string::npos) {
      coeff = f.parse(trim(term.substr(0, star))).mask();
      wtext = trim(term.substr(star + 1));
    }
    Word w;
    if (wtext != "e") {
      size_t p2 = 0;
      while (p2 <= wtext.size()) {
        size_t dot = wtext.find('.', p2);
        std::string lab = trim(wtext.substr(p2, dot == std::string::npos ? dot : dot - p2));
        p2 = dot == std::string::npos ? wtext.size() + 1 : dot + 1;
        if (lab.empty()) throw InvalidArgument("empty letter in word");
        w.push_back(s->label_index(parse_label(lab)));
      }
    }
    out.add_term(w, coeff);
  }
  return out;
}

bool NcPoly::operator==(const NcPoly& o) const {
  require_same_space(*this, o);
  return t_ == o.t_;
}

NcPoly group_act(const std::vector<long long>& g, const NcPoly& p) {
  const SpacePtr& sp = p.space();
  FMatrix A = sp->action_of(g);
  const Field& f = sp->field;
  int d = sp->dim();
  NcPoly out(sp);
  for (auto& [w, c] : p.terms()) {
    // letter-wise expansion of (g.x_{w0})(g.x_{w1})...
    std::map<Word, uint32_t> acc{{Word{}, c}};
    for (int letter : w) {
      std::map<Word, uint32_t> nxt;
      for (auto& [pw, pc] : acc)
        for (int k = 0; k < d; ++k) {
          uint32_t v = A.at(k, letter);
          if (!v) continue;
          Word nw = pw;
          nw.push_back(k);
          uint32_t& slot = nxt[nw];
          slot ^= f.mul(pc, v);
        }
      acc = std::move(nxt);
    }
    for (auto& [nw, nc] : acc) out.add_term(nw, nc);
  }
  return out;
}

NcPoly skew_derive(int i, const NcPoly& p) {
  const SpacePtr& sp = p.space();
  if (i < 0 || i >= sp->dim()) throw InvalidArgument("derivation index out of range");
  if (!sp->real) throw InvalidArgument("skew derivation needs a realization");
  const Field& f = sp->field;
  FMatrix A = sp->action_of_degree(i);
  int d = sp->dim();
  NcPoly out(sp);
  for (auto& [w, c] : p.terms()) {
    for (size_t m = 0; m < w.size(); ++m) {
      if (w[m] != i) continue;
      // prefix * (g_i . suffix)
      std::map<Word, uint32_t> acc{{Word(w.begin(), w.begin() + m), c}};
      for (size_t s = m + 1; s < w.size(); ++s) {
        std::map<Word, uint32_t> nxt;
        for (auto& [pw, pc] : acc)
          for (int k = 0; k < d; ++k) {
            uint32_t v = A.at(k, w[s]);
            if (!v) continue;
            Word nw = pw;
            nw.push_back(k);
            uint32_t& slot = nxt[nw];
            slot ^= f.mul(pc, v);
          }
        acc = std::move(nxt);
      }
      for (auto& [nw, nc] : acc) out.add_term(nw, nc);
    }
  }
  return out;
}

NcPoly ad_gen(int i, const NcPoly& p) {
  const SpacePtr& sp = p.space();
  if (!sp->real) throw InvalidArgument("braided adjoint needs a realization");
  NcPoly xi = NcPoly::gen(sp, i);
  return xi * p + group_act(sp->real->degree[i], p) * xi;
}

NcPoly ad_elem(const NcPoly& u, const NcPoly& p) {
  require_same_space(u, p);
  auto g = u.gamma_degree();
  if (!g) throw InvalidArgument("adjoint requires a group-homogeneous element");
  return u * p + group_act(*g, p) * u;
}

}  // namespace nichols
