#include "painleve/maps/presentation.hpp"

#include <cctype>

#include "painleve/error.hpp"
#include "painleve/exactalg/equality.hpp"

namespace painleve {

namespace {

struct WordReader {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  int integer() {
    skip();
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("expected exponent in word '" + std::string(s) + "'");
    int v = std::stoi(std::string(s.substr(start, i - start)));
    return neg ? -v : v;
  }

  std::vector<Letter> sequence(bool nested) {
    std::vector<Letter> out;
    while (true) {
      skip();
      if (i >= s.size()) {
        if (nested) throw ParseError("unbalanced '(' in word");
        return out;
      }
      if (s[i] == ')') {
        if (!nested) throw ParseError("unbalanced ')' in word");
        ++i;
        return out;
      }
      std::vector<Letter> item;
      if (s[i] == '(') {
        ++i;
        item = sequence(true);
      } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        item.push_back({std::string(s.substr(start, i - start)), 1});
      } else {
        throw ParseError("unexpected '" + std::string(1, s[i]) + "' in word");
      }
      skip();
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = integer();
      }
      std::vector<Letter> base = item;
      if (e < 0) {
        base.assign(item.rbegin(), item.rend());
        for (auto& l : base) l.exp = -l.exp;
        e = -e;
      }
      for (int k = 0; k < e; ++k) out.insert(out.end(), base.begin(), base.end());
    }
  }
};

}  // namespace

Word Word::parse(std::string_view text) {
  WordReader r{text};
  Word w{r.sequence(false)};
  if (w.letters.empty()) throw ParseError("empty word");
  return w;
}

std::string Word::to_string() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += l.gen;
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

const BirationalMap& find_generator(const std::vector<BirationalMap>& gens, std::string_view name) {
  for (const auto& g : gens)
    if (g.name() == name) return g;
  throw UnknownName("no generator named " + std::string(name));
}

BirationalMap evaluate_word(const std::vector<BirationalMap>& gens, const Word& w) {
  std::vector<BirationalMap> seq;
  for (const auto& l : w.letters) {
    const BirationalMap& g = find_generator(gens, l.gen);
    seq.push_back(l.exp == 1 ? g : inverse_of(g));
  }
  return compose_all(seq);
}

namespace {

Point image_point(const BirationalMap& m, const Point& p) {
  Point q;
  for (Var v : m.target().coordinates()) q.set(v, m.image(v).eval(p));
  return q;
}

}  // namespace

bool word_fixes_random_points(const std::vector<BirationalMap>& gens, const Word& w, std::mt19937_64& rng,
                              int trials) {
  std::vector<BirationalMap> seq;
  for (const auto& l : w.letters) {
    const BirationalMap& g = find_generator(gens, l.gen);
    seq.push_back(l.exp == 1 ? g : inverse_of(g));
  }
  const PhaseSpace& space = seq.front().source();
  VarMask mask = 0;
  for (Var v : space.coordinates()) mask |= mask_of(v);
  for (int trial = 0; trial < trials; ++trial) {
    int redraws = 0;
    while (true) {
      Point start = random_point(mask, rng);
      if (space.constraint && !space.constraint->terms.empty()) {
        const ParamConstraint& c = *space.constraint;
        start.set(c.eliminated, c.eliminated_value().eval(start));
      }
      try {
        Point p = start;
        for (const auto& g : seq) p = image_point(g, p);
        for (Var v : space.coordinates())
          if (p.at(v) != start.at(v)) return false;
        break;
      } catch (const ZeroDenominator&) {
        if (++redraws > kMaxResamples) throw EvaluationExhausted("word " + w.to_string() + " keeps hitting poles");
      }
    }
  }
  return true;
}

std::optional<Var> reflected_root(const BirationalMap& g) {
  for (Var p : g.source().params) {
    if (!g.target().has(p)) continue;
    if (g.image(p) == -RatExpr::var(p)) return p;
  }
  return std::nullopt;
}

GroupPresentation derived_presentation(const std::vector<BirationalMap>& gens, std::string dynkin_type) {
  GroupPresentation gp;
  gp.dynkin_type = std::move(dynkin_type);
  std::vector<std::pair<const BirationalMap*, Var>> refl;
  for (const auto& g : gens) {
    gp.generators.push_back(g.name());
    if (auto r = reflected_root(g)) refl.emplace_back(&g, *r);
  }
  for (const auto& [g, r] : refl) gp.relations.push_back({g->name() + "^2", Word::parse(g->name() + "^2")});
  // a_ij = -(coefficient of r_i in s_i(r_j)).
  auto cartan = [](const BirationalMap& si, Var ri, Var rj) -> long {
    RatExpr d = (si.image(rj) - RatExpr::var(rj)).diff(ri);
    auto c = d.constant_value();
    if (!c || !c->is_rational()) return -100;
    mpq_class q = -c->a();
    if (q.get_den() != 1) return -100;
    return q.get_num().get_si();
  };
  for (std::size_t i = 0; i < refl.size(); ++i) {
    for (std::size_t j = i + 1; j < refl.size(); ++j) {
      long aij = cartan(*refl[i].first, refl[i].second, refl[j].second);
      long aji = cartan(*refl[j].first, refl[j].second, refl[i].second);
      long prod = aij * aji;
      int m = 0;
      if (prod == 0) m = 2;
      if (prod == 1) m = 3;
      if (prod == 2) m = 4;
      if (prod == 3) m = 6;
      if (m == 0) continue;  // infinite order
      std::string label = "(" + refl[i].first->name() + " " + refl[j].first->name() + ")^" + std::to_string(m);
      gp.relations.push_back({label, Word::parse(label)});
    }
  }
  return gp;
}

std::optional<int> automorphism_order(const BirationalMap& g, int max_order) {
  BirationalMap p = g;
  for (int k = 1; k <= max_order; ++k) {
    if (is_identity(p)) return k;
    if (k < max_order) p = compose(p, g);
  }
  return std::nullopt;
}

}  // namespace painleve
