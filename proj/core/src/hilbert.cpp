#include <algorithm>
#include <sstream>

#include "ghom/hilbert.hpp"

namespace ghom {

IntLaurent lp_zero() { return {}; }
IntLaurent lp_one() { return IntLaurent{0, {1}}; }
IntLaurent lp_monomial(int k, long long coeff) {
  if (coeff == 0) return {};
  return IntLaurent{k, {coeff}};
}

IntLaurent lp_normalize(IntLaurent f) {
  size_t lead = 0;
  while (lead < f.c.size() && f.c[lead] == 0) ++lead;
  size_t tail = f.c.size();
  while (tail > lead && f.c[tail - 1] == 0) --tail;
  if (lead == tail) return {};
  IntLaurent out;
  out.lo = f.lo + static_cast<int>(lead);
  out.c.assign(f.c.begin() + static_cast<long>(lead), f.c.begin() + static_cast<long>(tail));
  return out;
}

IntLaurent lp_add(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo, b.lo);
  int hi = std::max(a.lo + static_cast<int>(a.c.size()), b.lo + static_cast<int>(b.c.size()));
  IntLaurent out;
  out.lo = lo;
  out.c.assign(static_cast<size_t>(hi - lo), 0);
  for (size_t i = 0; i < a.c.size(); ++i) out.c[a.lo - lo + static_cast<int>(i)] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[b.lo - lo + static_cast<int>(i)] += b.c[i];
  return lp_normalize(std::move(out));
}

IntLaurent lp_sub(const IntLaurent& a, const IntLaurent& b) {
  IntLaurent nb = b;
  for (auto& x : nb.c) x = -x;
  return lp_add(a, nb);
}

IntLaurent lp_mul(const IntLaurent& a, const IntLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntLaurent out;
  out.lo = a.lo + b.lo;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  return lp_normalize(std::move(out));
}

bool lp_eq(const IntLaurent& a, const IntLaurent& b) { return a.lo == b.lo && a.c == b.c; }

long long lp_at(const IntLaurent& f, int k) {
  int i = k - f.lo;
  if (i < 0 || i >= static_cast<int>(f.c.size())) return 0;
  return f.c[static_cast<size_t>(i)];
}

long long lp_eval_one(const IntLaurent& f) {
  long long s = 0;
  for (long long x : f.c) s += x;
  return s;
}

IntLaurent lp_div_one_minus_t(const IntLaurent& f) {
  if (f.is_zero()) return {};
  // f = (1-t) q  =>  q_k = f_k + q_{k-1}, with zero carry at both ends
  IntLaurent q;
  q.lo = f.lo;
  q.c.assign(f.c.size(), 0);
  long long carry = 0;
  for (size_t i = 0; i < f.c.size(); ++i) {
    carry += f.c[i];
    q.c[i] = carry;
  }
  if (carry != 0) fail(Errc::internal, "series numerator not divisible by (1-t)");
  q.c.pop_back();
  return lp_normalize(std::move(q));
}

std::string lp_to_string(const IntLaurent& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < f.c.size(); ++i) {
    long long c = f.c[i];
    if (c == 0) continue;
    int k = f.lo + static_cast<int>(i);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    long long mag = c < 0 ? -c : c;
    if (mag != 1 || k == 0) os << mag;
    if (k != 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

LeadTermModule lead_terms(const GroebnerBasis& gb) {
  LeadTermModule out;
  out.rank = gb.ambient.rank();
  out.comp_gens.assign(static_cast<size_t>(out.rank), {});
  for (const auto& g : gb.g) {
    const MTerm& l = g.t.front();
    out.comp_gens[static_cast<size_t>(l.comp)].push_back(l.m);
  }
  // interreduce: keep only divisibility-minimal monomials
  for (auto& gens : out.comp_gens) {
    std::vector<Monomial> keep;
    for (size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < gens.size() && !redundant; ++j)
        if (i != j && mono_divides(gens[j], gens[i]) &&
            (grevlex_cmp(gens[j], gens[i]) != 0 || j < i))
          redundant = true;
      if (!redundant) keep.push_back(gens[i]);
    }
    gens = std::move(keep);
  }
  return out;
}

long long standard_monomial_count(const Ring& R, const FreeMod& ambient, const LeadTermModule& l,
                                  int t) {
  if (l.rank != ambient.rank()) fail(Errc::ambient_mismatch, "lead-term module rank mismatch");
  long long count = 0;
  for (int j = 0; j < ambient.rank(); ++j) {
    int d = t - ambient.twists[j];
    if (d < 0) continue;
    for (const auto& m : monomials_of_degree(R.nvars(), d)) {
      bool in = false;
      for (const auto& g : l.comp_gens[static_cast<size_t>(j)])
        if (mono_divides(g, m)) {
          in = true;
          break;
        }
      if (!in) ++count;
    }
  }
  return count;
}

namespace {

std::vector<Monomial> interreduce_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> keep;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && mono_divides(gens[j], gens[i]) &&
          (grevlex_cmp(gens[j], gens[i]) != 0 || j < i))
        redundant = true;
    if (!redundant) keep.push_back(gens[i]);
  }
  return keep;
}

// Pivot-splitting recursion: N(I) = N(I + (x_v)) + t * N(I : x_v).
IntLaurent numer_rec(int nvars, std::vector<Monomial> gens) {
  gens = interreduce_monomials(std::move(gens));
  if (gens.empty()) return lp_one();
  for (const auto& g : gens)
    if (mono_is_one(g)) return lp_zero();
  if (gens.size() == 1) return lp_sub(lp_one(), lp_monomial(mono_degree(gens[0])));
  // disjoint supports form a regular sequence
  {
    std::vector<int> owner(static_cast<size_t>(nvars), -1);
    bool disjoint = true;
    for (size_t k = 0; k < gens.size() && disjoint; ++k)
      for (int v = 0; v < nvars && disjoint; ++v)
        if (gens[k][static_cast<size_t>(v)] > 0) {
          if (owner[static_cast<size_t>(v)] >= 0) disjoint = false;
          owner[static_cast<size_t>(v)] = static_cast<int>(k);
        }
    if (disjoint) {
      IntLaurent acc = lp_one();
      for (const auto& g : gens) acc = lp_mul(acc, lp_sub(lp_one(), lp_monomial(mono_degree(g))));
      return acc;
    }
  }
  // pivot on the most shared variable
  int best_v = 0, best_count = -1;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[static_cast<size_t>(v)] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best_v = v;
    }
  }
  std::vector<Monomial> plus;   // I + (x_v)
  std::vector<Monomial> colon;  // I : x_v
  Monomial xv(static_cast<size_t>(nvars), 0);
  xv[static_cast<size_t>(best_v)] = 1;
  plus.push_back(xv);
  for (const auto& g : gens) {
    if (g[static_cast<size_t>(best_v)] == 0) plus.push_back(g);
    Monomial q = g;
    if (q[static_cast<size_t>(best_v)] > 0) --q[static_cast<size_t>(best_v)];
    colon.push_back(std::move(q));
  }
  return lp_add(numer_rec(nvars, std::move(plus)),
                lp_mul(lp_monomial(1), numer_rec(nvars, std::move(colon))));
}

}  // namespace

IntLaurent monomial_ideal_numerator(const Ring& R, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != R.nvars())
      fail(Errc::bad_argument, "monomial length mismatch");
  return numer_rec(R.nvars(), std::move(gens));
}

IntLaurent hilbert_numerator(const Ring& R, const FreeMod& ambient, const LeadTermModule& l) {
  if (l.rank != ambient.rank()) fail(Errc::ambient_mismatch, "lead-term module rank mismatch");
  IntLaurent acc;
  for (int j = 0; j < ambient.rank(); ++j) {
    IntLaurent nj = monomial_ideal_numerator(R, l.comp_gens[static_cast<size_t>(j)]);
    acc = lp_add(acc, lp_mul(lp_monomial(ambient.twists[j]), nj));
  }
  return acc;
}

HilbertSeries make_series(const Ring& R, IntLaurent numerator) {
  HilbertSeries hs;
  hs.numerator = lp_normalize(std::move(numerator));
  hs.denom = R.nvars();
  hs.reduced = hs.numerator;
  hs.dim = hs.denom;
  if (hs.reduced.is_zero()) {
    hs.dim = 0;
    return hs;
  }
  while (hs.dim > 0 && lp_eval_one(hs.reduced) == 0) {
    hs.reduced = lp_div_one_minus_t(hs.reduced);
    --hs.dim;
  }
  if (lp_eval_one(hs.reduced) == 0) fail(Errc::internal, "Hilbert numerator vanishes to excess order");
  return hs;
}

long long series_coeff(const HilbertSeries& hs, int t) {
  if (hs.reduced.is_zero()) return 0;
  if (hs.dim == 0) return lp_at(hs.reduced, t);
  long long acc = 0;
  for (size_t i = 0; i < hs.reduced.c.size(); ++i) {
    int k = hs.reduced.lo + static_cast<int>(i);
    if (t < k) continue;
    acc += hs.reduced.c[i] * binom(t - k + hs.dim - 1, hs.dim - 1);
  }
  return acc;
}

long long multiplicity(const HilbertSeries& hs) {
  return hs.reduced.is_zero() ? 0 : lp_eval_one(hs.reduced);
}

}  // namespace ghom
