#include "painleve/exactalg/gcd.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "painleve/error.hpp"

namespace painleve {

namespace {

using UPoly = std::vector<MultiPoly>;
using ModUPoly = std::vector<std::uint64_t>;

std::mt19937_64& mod_rng() {
  thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  return rng;
}

void trim(ModUPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of gcd of two univariate polynomials over F_p.
int mod_gcd_degree(ModUPoly a, ModUPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    std::uint64_t inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv, p);
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        std::uint64_t sub = mulmod(f, b[k], p);
        a[k + shift] = (a[k + shift] + p - sub) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

// Image of p in F_p[v] with every other variable set from pt. Returns false
// when a coefficient denominator vanishes mod p.
bool univariate_image(const MultiPoly& poly, Var v, const ModPoint& pt, const ModContext& ctx, ModUPoly& out) {
  out.assign(poly.degree(v) + 1, 0);
  const std::uint64_t p = ctx.p;
  for (const auto& t : poly.terms()) {
    auto c = t.c.mod_p(ctx);
    if (!c) return false;
    std::uint64_t term = *c;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i == v.id() || !t.m.e[i]) continue;
      term = mulmod(term, powmod(pt[i], t.m.e[i], p), p);
    }
    auto& slot = out[t.m.e[v.id()]];
    slot = (slot + term) % p;
  }
  return true;
}

// Upper bound on deg_v gcd(a, b), or -1 when every attempt was unlucky.
int modular_degree_bound(const MultiPoly& a, const MultiPoly& b, Var v) {
  const ModContext& ctx = ModContext::standard();
  auto& rng = mod_rng();
  std::uniform_int_distribution<std::uint64_t> dist(2, ctx.p - 2);
  const unsigned da = a.degree(v), db = b.degree(v);
  ModUPoly ia, ib;
  for (int attempt = 0; attempt < 3; ++attempt) {
    ModPoint pt{};
    for (auto& x : pt) x = dist(rng);
    if (!univariate_image(a, v, pt, ctx, ia) || !univariate_image(b, v, pt, ctx, ib)) continue;
    if (ia[da] == 0 || ib[db] == 0) continue;
    return mod_gcd_degree(ia, ib, ctx.p);
  }
  return -1;
}

std::vector<Var> vars_of(VarMask m) {
  std::vector<Var> out;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m >> i & 1) out.emplace_back(static_cast<std::uint16_t>(i));
  return out;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_list(std::vector<const MultiPoly*> items) {
  items.erase(std::remove_if(items.begin(), items.end(), [](const MultiPoly* p) { return p->is_zero(); }),
              items.end());
  if (items.empty()) return MultiPoly();
  std::sort(items.begin(), items.end(), [](const MultiPoly* x, const MultiPoly* y) {
    if (x->total_degree() != y->total_degree()) return x->total_degree() < y->total_degree();
    return x->size() < y->size();
  });
  MultiPoly g = items[0]->monic();
  for (std::size_t k = 1; k < items.size() && !g.is_one(); ++k) g = gcd_rec(g, *items[k]);
  return g;
}

// Content of p as a polynomial in the variables of `mask` (coefficients live
// in the remaining variables).
MultiPoly content_wrt(const MultiPoly& p, VarMask mask) {
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (const auto& t : p.terms()) {
    Monomial key, rest = t.m;
    unsigned kd = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (mask >> i & 1) {
        key.e[i] = t.m.e[i];
        kd += t.m.e[i];
        rest.e[i] = 0;
      }
    }
    key.deg = static_cast<std::uint16_t>(kd);
    rest.deg = static_cast<std::uint16_t>(t.m.deg - kd);
    auto [it, fresh] = index.emplace(key, groups.size());
    if (fresh) groups.push_back({key, {}});
    groups[it->second].second.push_back({rest, t.c});
  }
  std::vector<MultiPoly> polys;
  polys.reserve(groups.size());
  for (auto& g : groups) polys.push_back(MultiPoly::from_terms(std::move(g.second)));
  std::vector<const MultiPoly*> ptrs;
  for (auto& q : polys) ptrs.push_back(&q);
  return content_list(ptrs);
}

UPoly prem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const MultiPoly& lcb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t da = a.size() - 1;
    MultiPoly lca = a.back();
    MultiPoly ma = lcb, mb = lca;
    if (!lcb.is_constant() && !lca.is_constant()) {
      MultiPoly g = gcd_rec(lca, lcb);
      if (!g.is_one()) {
        ma = lcb / g;
        mb = lca / g;
      }
    }
    for (auto& c : a) c = c * ma;
    for (std::size_t k = 0; k <= db; ++k) a[k + da - db] -= mb * b[k];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

MultiPoly upoly_content(const UPoly& u) {
  std::vector<const MultiPoly*> ptrs;
  for (const auto& c : u) ptrs.push_back(&c);
  return content_list(ptrs);
}

void divide_all(UPoly& u, const MultiPoly& c) {
  if (c.is_one()) return;
  for (auto& x : u) x = x / c;
}

MultiPoly prs_gcd(const MultiPoly& a, const MultiPoly& b, Var v) {
  UPoly ua = a.coefficients(v), ub = b.coefficients(v);
  MultiPoly ca = upoly_content(ua), cb = upoly_content(ub);
  MultiPoly c = gcd_rec(ca, cb);
  divide_all(ua, ca);
  divide_all(ub, cb);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (true) {
    UPoly r = prem(ua, ub);
    if (r.empty()) break;
    if (r.size() == 1) return c.monic();
    divide_all(r, upoly_content(r));
    ua = std::move(ub);
    ub = std::move(r);
  }
  MultiPoly g = MultiPoly::from_coefficients(ub, v);
  return (c * g).monic();
}

MultiPoly gcd_no_monomial(const MultiPoly& a, const MultiPoly& b) {
  {
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    MultiPoly am = a.monic(), bm = b.monic();
    if (am == bm) return am;
    VarMask va = a.vars(), vb = b.vars();
    VarMask shared = va & vb;
    if (!shared) return MultiPoly(1);
    if (va & ~vb) {
      return gcd_rec(content_wrt(a, va & ~vb), b);
    }
    if (vb & ~va) return gcd_rec(a, content_wrt(b, vb & ~va));
    // Same variable set from here on.
    std::vector<Var> vs = vars_of(shared);
    std::vector<int> bound(vs.size(), -2);
    bool all_zero = true, all_full_a = true, all_full_b = true;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      bound[k] = modular_degree_bound(a, b, vs[k]);
      if (bound[k] != 0) all_zero = false;
      if (bound[k] != static_cast<int>(a.degree(vs[k]))) all_full_a = false;
      if (bound[k] != static_cast<int>(b.degree(vs[k]))) all_full_b = false;
      if (bound[k] == 0 && !all_zero) break;
    }
    if (all_zero) return MultiPoly(1);
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (bound[k] == 0) return gcd_rec(content_in(a, vs[k]), content_in(b, vs[k]));
    }
    if (all_full_a && a.size() <= b.size()) {
      if (b.divide_exact(a)) return am;
    }
    if (all_full_b && b.size() <= a.size()) {
      if (a.divide_exact(b)) return bm;
    }
    // PRS in the variable with the smallest degree bound.
    std::size_t best = 0;
    int best_key = 1 << 30;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      int key = bound[k] < 0 ? static_cast<int>(std::min(a.degree(vs[k]), b.degree(vs[k]))) + 1000
                             : static_cast<int>(std::min(a.degree(vs[k]), b.degree(vs[k])));
      if (key < best_key) {
        best_key = key;
        best = k;
      }
    }
    return prs_gcd(a, b, vs[best]);
  }
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  Monomial ma = a.min_monomial(), mb = b.min_monomial();
  Monomial m = ma.gcd(mb);
  MultiPoly g = gcd_no_monomial(a.divided_by_monomial(ma), b.divided_by_monomial(mb));
  return g.shifted(m);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_rec(a, b); }

MultiPoly content_in(const MultiPoly& p, Var v) {
  UPoly u = p.coefficients(v);
  return upoly_content(u);
}

bool certainly_coprime(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return !(a.is_zero() && b.is_zero());
  if (!a.min_monomial().gcd(b.min_monomial()).is_one()) return false;
  VarMask shared = a.vars() & b.vars();
  if (!shared) return true;
  for (Var v : vars_of(shared)) {
    if (modular_degree_bound(a, b, v) != 0) return false;
  }
  return true;
}

}  // namespace painleve
