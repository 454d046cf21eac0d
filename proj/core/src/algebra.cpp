#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ghom/graded_matrix.hpp"

namespace ghom {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ring_mismatch: return "ring_mismatch";
    case Errc::ambient_mismatch: return "ambient_mismatch";
    case Errc::parse_error: return "parse_error";
    case Errc::homogeneity: return "homogeneity";
    case Errc::bad_argument: return "bad_argument";
    case Errc::containment: return "containment";
    case Errc::infinite_length: return "infinite_length";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::retry_exhausted: return "retry_exhausted";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

Ring make_ring(std::int64_t p, std::vector<std::string> vars) {
  if (!is_prime(p) || p < 3 || p >= (std::int64_t{1} << 31))
    fail(Errc::bad_argument, "characteristic must be an odd prime below 2^31");
  if (vars.empty()) fail(Errc::bad_argument, "ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_'))
      fail(Errc::bad_argument, "bad variable name: '" + v + "'");
    for (char ch : v)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        fail(Errc::bad_argument, "bad variable name: '" + v + "'");
    if (!seen.insert(v).second) fail(Errc::bad_argument, "duplicate variable name: '" + v + "'");
  }
  return Ring{p, std::move(vars)};
}

// ---- monomials ----

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) fail(Errc::bad_argument, "monomial length mismatch");
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) fail(Errc::bad_argument, "monomial length mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] -= b[i];
    if (r[i] < 0) fail(Errc::bad_argument, "monomial division with remainder");
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

static void enum_rec(int nvars, int pos, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[pos] = e;
    enum_rec(nvars, pos + 1, left - e, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars <= 0) return out;
  Monomial cur(nvars, 0);
  enum_rec(nvars, 0, degree, cur, out);
  return out;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---- polynomials ----

Poly poly_zero() { return Poly{}; }

Poly poly_const(const Ring& R, std::int64_t c) {
  c = fp_norm(c, R.p);
  if (c == 0) return {};
  return Poly{{Term{c, Monomial(R.nvars(), 0)}}};
}

Poly poly_var(const Ring& R, int i, int exp) {
  if (i < 0 || i >= R.nvars()) fail(Errc::bad_argument, "variable index out of range");
  Monomial m(R.nvars(), 0);
  m[i] = exp;
  return Poly{{Term{1, std::move(m)}}};
}

Poly poly_term(const Ring& R, std::int64_t c, Monomial m) {
  c = fp_norm(c, R.p);
  if (c == 0) return {};
  if (static_cast<int>(m.size()) != R.nvars()) fail(Errc::bad_argument, "monomial length mismatch");
  return Poly{{Term{c, std::move(m)}}};
}

Poly poly_normalize(const Ring& R, std::vector<Term> raw) {
  for (auto& t : raw) t.c = fp_norm(t.c, R.p);
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
  Poly out;
  for (auto& t : raw) {
    if (!out.t.empty() && grevlex_cmp(out.t.back().m, t.m) == 0) {
      out.t.back().c = fp_add(out.t.back().c, t.c, R.p);
      if (out.t.back().c == 0) out.t.pop_back();
    } else if (t.c != 0) {
      out.t.push_back(std::move(t));
    }
  }
  return out;
}

Poly poly_add(const Ring& R, const Poly& f, const Poly& g) {
  Poly out;
  out.t.reserve(f.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < f.t.size() && j < g.t.size()) {
    int c = grevlex_cmp(f.t[i].m, g.t[j].m);
    if (c > 0) {
      out.t.push_back(f.t[i++]);
    } else if (c < 0) {
      out.t.push_back(g.t[j++]);
    } else {
      std::int64_t s = fp_add(f.t[i].c, g.t[j].c, R.p);
      if (s != 0) out.t.push_back(Term{s, f.t[i].m});
      ++i, ++j;
    }
  }
  for (; i < f.t.size(); ++i) out.t.push_back(f.t[i]);
  for (; j < g.t.size(); ++j) out.t.push_back(g.t[j]);
  return out;
}

Poly poly_neg(const Ring& R, const Poly& f) {
  Poly out = f;
  for (auto& t : out.t) t.c = fp_neg(t.c, R.p);
  return out;
}

Poly poly_sub(const Ring& R, const Poly& f, const Poly& g) { return poly_add(R, f, poly_neg(R, g)); }

Poly poly_scale(const Ring& R, const Poly& f, std::int64_t c) {
  c = fp_norm(c, R.p);
  if (c == 0) return {};
  Poly out = f;
  for (auto& t : out.t) t.c = fp_mul(t.c, c, R.p);
  return out;
}

Poly poly_mul_term(const Ring& R, const Poly& f, std::int64_t c, const Monomial& m) {
  c = fp_norm(c, R.p);
  if (c == 0) return {};
  Poly out;
  out.t.reserve(f.t.size());
  for (const auto& t : f.t) out.t.push_back(Term{fp_mul(t.c, c, R.p), mono_mul(t.m, m)});
  return out;
}

Poly poly_mul(const Ring& R, const Poly& f, const Poly& g) {
  std::vector<Term> raw;
  raw.reserve(f.t.size() * g.t.size());
  for (const auto& a : f.t)
    for (const auto& b : g.t) raw.push_back(Term{fp_mul(a.c, b.c, R.p), mono_mul(a.m, b.m)});
  return poly_normalize(R, std::move(raw));
}

bool poly_eq(const Poly& f, const Poly& g) {
  if (f.t.size() != g.t.size()) return false;
  for (size_t i = 0; i < f.t.size(); ++i)
    if (f.t[i].c != g.t[i].c || f.t[i].m != g.t[i].m) return false;
  return true;
}

int poly_degree(const Poly& f) {
  int d = -1;
  for (const auto& t : f.t) d = std::max(d, mono_degree(t.m));
  return d;
}

Homogeneity poly_homogeneity(const Poly& f) {
  Homogeneity h;
  if (f.is_zero()) return h;
  h.degree = mono_degree(f.t.front().m);
  for (const auto& t : f.t)
    if (mono_degree(t.m) != h.degree) return {false, -1};
  return h;
}

void poly_validate(const Ring& R, const Poly& f) {
  for (size_t i = 0; i < f.t.size(); ++i) {
    const auto& t = f.t[i];
    if (t.c <= 0 || t.c >= R.p) fail(Errc::bad_argument, "coefficient out of range");
    if (static_cast<int>(t.m.size()) != R.nvars())
      fail(Errc::bad_argument, "monomial length mismatch");
    for (int e : t.m)
      if (e < 0) fail(Errc::bad_argument, "negative exponent");
    if (i > 0 && grevlex_cmp(f.t[i - 1].m, t.m) <= 0)
      fail(Errc::bad_argument, "terms not strictly descending");
  }
}

std::string poly_to_string(const Ring& R, const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.t) {
    std::int64_t c = t.c <= R.p / 2 ? t.c : t.c - R.p;  // balanced for readability
    bool neg = c < 0;
    std::int64_t mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool needs_coeff = mag != 1 || mono_is_one(t.m);
    bool wrote = false;
    if (needs_coeff) {
      os << mag;
      wrote = true;
    }
    for (int i = 0; i < R.nvars(); ++i) {
      if (t.m[i] == 0) continue;
      if (wrote) os << "*";
      os << R.vars[i];
      if (t.m[i] > 1) os << "^" << t.m[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const Ring& R;
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    fail(Errc::parse_error, msg + " at offset " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }

  std::int64_t parse_int() {
    size_t start = pos;
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (std::int64_t{1} << 62)) v %= R.p;  // keep huge literals in range
      ++pos;
    }
    if (pos == start) err("expected integer");
    return v;
  }

  int parse_var() {
    // longest match over the ring's variable names
    int best = -1;
    size_t best_len = 0;
    for (int i = 0; i < R.nvars(); ++i) {
      const auto& name = R.vars[i];
      if (name.size() > best_len && s.substr(pos, name.size()) == name) {
        // reject prefixes of longer identifiers, e.g. "xy" when var is "x"
        size_t after = pos + name.size();
        if (after < s.size() &&
            (std::isalnum(static_cast<unsigned char>(s[after])) || s[after] == '_'))
          continue;
        best = i;
        best_len = name.size();
      }
    }
    if (best < 0) err("unknown variable");
    pos += best_len;
    return best;
  }

  // factor := integer | var ['^' integer]
  void parse_factor(std::int64_t& coeff, Monomial& mono) {
    skip_ws();
    if (pos >= s.size()) err("expected factor");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = fp_mul(coeff, fp_norm(parse_int(), R.p), R.p);
      return;
    }
    int vi = parse_var();
    int exp = 1;
    skip_ws();
    if (pos < s.size() && peek() == '^') {
      ++pos;
      skip_ws();
      exp = static_cast<int>(parse_int());
    }
    mono[vi] += exp;
  }

  Poly parse() {
    std::vector<Term> raw;
    skip_ws();
    bool neg = false;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      neg = peek() == '-';
      ++pos;
    }
    if (eof()) err("empty polynomial");
    while (true) {
      std::int64_t coeff = 1;
      Monomial mono(R.nvars(), 0);
      parse_factor(coeff, mono);
      while (!eof() && peek() == '*') {
        ++pos;
        parse_factor(coeff, mono);
      }
      if (neg) coeff = fp_neg(coeff, R.p);
      raw.push_back(Term{coeff, std::move(mono)});
      if (eof()) break;
      if (peek() == '+' || peek() == '-') {
        neg = peek() == '-';
        ++pos;
      } else {
        err("unexpected character");
      }
    }
    return poly_normalize(R, std::move(raw));
  }
};

}  // namespace

Poly poly_parse(const Ring& R, std::string_view s) {
  PolyParser p{R, s};
  return p.parse();
}

// ---- free modules ----

FreeMod freemod_tensor(const FreeMod& a, const FreeMod& b) {
  FreeMod out;
  out.twists.reserve(a.twists.size() * b.twists.size());
  for (int ta : a.twists)
    for (int tb : b.twists) out.twists.push_back(ta + tb);
  return out;
}

int mt_cmp(const MTerm& a, const MTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return grevlex_cmp(a.m, b.m);
}

ModuleVec mv_normalize(const Ring& R, std::vector<MTerm> raw) {
  for (auto& t : raw) t.c = fp_norm(t.c, R.p);
  std::sort(raw.begin(), raw.end(), [](const MTerm& a, const MTerm& b) { return mt_cmp(a, b) > 0; });
  ModuleVec out;
  for (auto& t : raw) {
    if (!out.t.empty() && out.t.back().comp == t.comp && grevlex_cmp(out.t.back().m, t.m) == 0) {
      out.t.back().c = fp_add(out.t.back().c, t.c, R.p);
      if (out.t.back().c == 0) out.t.pop_back();
    } else if (t.c != 0) {
      out.t.push_back(std::move(t));
    }
  }
  return out;
}

ModuleVec mv_add(const Ring& R, const ModuleVec& a, const ModuleVec& b) {
  ModuleVec out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = mt_cmp(a.t[i], b.t[j]);
    if (c > 0) {
      out.t.push_back(a.t[i++]);
    } else if (c < 0) {
      out.t.push_back(b.t[j++]);
    } else {
      std::int64_t s = fp_add(a.t[i].c, b.t[j].c, R.p);
      if (s != 0) out.t.push_back(MTerm{a.t[i].comp, a.t[i].m, s});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) out.t.push_back(b.t[j]);
  return out;
}

ModuleVec mv_scale(const Ring& R, const ModuleVec& v, std::int64_t c) {
  c = fp_norm(c, R.p);
  if (c == 0) return {};
  ModuleVec out = v;
  for (auto& t : out.t) t.c = fp_mul(t.c, c, R.p);
  return out;
}

ModuleVec mv_sub(const Ring& R, const ModuleVec& a, const ModuleVec& b) {
  return mv_add(R, a, mv_scale(R, b, R.p - 1));
}

ModuleVec mv_mul_term(const Ring& R, const ModuleVec& v, std::int64_t c, const Monomial& m) {
  c = fp_norm(c, R.p);
  if (c == 0) return {};
  ModuleVec out;
  out.t.reserve(v.t.size());
  for (const auto& t : v.t) out.t.push_back(MTerm{t.comp, mono_mul(t.m, m), fp_mul(t.c, c, R.p)});
  return out;
}

ModuleVec mv_submul(const Ring& R, const ModuleVec& a, std::int64_t c, const Monomial& m,
                    const ModuleVec& b) {
  return mv_add(R, a, mv_mul_term(R, b, fp_neg(fp_norm(c, R.p), R.p), m));
}

bool mv_eq(const ModuleVec& a, const ModuleVec& b) {
  if (a.t.size() != b.t.size()) return false;
  for (size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i].comp != b.t[i].comp || a.t[i].c != b.t[i].c || a.t[i].m != b.t[i].m) return false;
  return true;
}

ModuleVec mv_from_polys(const Ring& R, const std::vector<Poly>& comps) {
  std::vector<MTerm> raw;
  for (size_t j = 0; j < comps.size(); ++j)
    for (const auto& t : comps[j].t) raw.push_back(MTerm{static_cast<std::int32_t>(j), t.m, t.c});
  return mv_normalize(R, std::move(raw));
}

std::vector<Poly> mv_to_polys(const Ring& R, int rank, const ModuleVec& v) {
  std::vector<std::vector<Term>> raw(rank);
  for (const auto& t : v.t) {
    if (t.comp < 0 || t.comp >= rank) fail(Errc::ambient_mismatch, "component out of range");
    raw[t.comp].push_back(Term{t.c, t.m});
  }
  std::vector<Poly> out(rank);
  for (int j = 0; j < rank; ++j) out[j] = poly_normalize(R, std::move(raw[j]));
  return out;
}

ModuleVec mv_basis(const Ring& R, int comp) {
  return ModuleVec{{MTerm{static_cast<std::int32_t>(comp), Monomial(R.nvars(), 0), 1}}};
}

ModuleVec mv_combine(const Ring& R, const std::vector<ModuleVec>& gens,
                     const std::vector<Poly>& coeffs) {
  if (gens.size() != coeffs.size()) fail(Errc::bad_argument, "combine size mismatch");
  ModuleVec acc;
  for (size_t i = 0; i < gens.size(); ++i)
    for (const auto& t : coeffs[i].t) acc = mv_add(R, acc, mv_mul_term(R, gens[i], t.c, t.m));
  return acc;
}

MvHomogeneity mv_homogeneity(const FreeMod& f, const ModuleVec& v) {
  MvHomogeneity h;
  if (v.is_zero()) return h;
  bool first = true;
  for (const auto& t : v.t) {
    if (t.comp < 0 || t.comp >= f.rank()) fail(Errc::ambient_mismatch, "component out of range");
    int d = mono_degree(t.m) + f.twists[t.comp];
    if (first) {
      h.degree = d;
      first = false;
    } else if (d != h.degree) {
      return {false, 0};
    }
  }
  return h;
}

int mv_degree(const FreeMod& f, const ModuleVec& v) {
  if (v.is_zero()) fail(Errc::bad_argument, "degree of the zero vector");
  auto h = mv_homogeneity(f, v);
  if (!h.homogeneous) fail(Errc::homogeneity, "vector is not homogeneous");
  return h.degree;
}

std::string mv_to_string(const Ring& R, const ModuleVec& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  std::int32_t maxc = 0;
  for (const auto& t : v.t) maxc = std::max(maxc, t.comp);
  auto polys = mv_to_polys(R, maxc + 1, v);
  bool first = true;
  for (size_t j = 0; j < polys.size(); ++j) {
    if (polys[j].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << poly_to_string(R, polys[j]) << ")*e" << j;
    first = false;
  }
  return os.str();
}

// ---- graded matrices ----

GradedMatrix mat_make(Ring R, FreeMod target, FreeMod source, std::vector<std::vector<Poly>> entries) {
  if (static_cast<int>(entries.size()) != target.rank())
    fail(Errc::bad_argument, "matrix row count does not match target rank");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != source.rank())
      fail(Errc::bad_argument, "matrix column count does not match source rank");
  return GradedMatrix{std::move(R), std::move(target), std::move(source), std::move(entries)};
}

GradedMatrix mat_zero(Ring R, FreeMod target, FreeMod source) {
  std::vector<std::vector<Poly>> e(target.rank(), std::vector<Poly>(source.rank()));
  return GradedMatrix{std::move(R), std::move(target), std::move(source), std::move(e)};
}

GradedMatrix mat_identity(Ring R, const FreeMod& f) {
  GradedMatrix m = mat_zero(R, f, f);
  for (int i = 0; i < f.rank(); ++i) m.e[i][i] = poly_const(R, 1);
  return m;
}

HomCheck check_homogeneous(const GradedMatrix& m) {
  for (int i = 0; i < m.target.rank(); ++i)
    for (int j = 0; j < m.source.rank(); ++j) {
      const Poly& f = m.e[i][j];
      if (f.is_zero()) continue;
      auto h = poly_homogeneity(f);
      if (!h.homogeneous || h.degree != m.source.twists[j] - m.target.twists[i])
        return HomCheck{false, i, j};
    }
  return HomCheck{};
}

void require_homogeneous(const GradedMatrix& m) {
  auto h = check_homogeneous(m);
  if (!h.ok)
    fail(Errc::homogeneity, "entry (" + std::to_string(h.row) + "," + std::to_string(h.col) +
                                ") breaks the twist bookkeeping");
}

GradedMatrix mat_transpose(const GradedMatrix& m) {
  GradedMatrix out =
      mat_zero(m.ring, freemod_dual(m.source), freemod_dual(m.target));
  for (int i = 0; i < m.target.rank(); ++i)
    for (int j = 0; j < m.source.rank(); ++j) out.e[j][i] = m.e[i][j];
  return out;
}

GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring, b.ring);
  if (!(a.source == b.target)) fail(Errc::ambient_mismatch, "matrix product shape mismatch");
  GradedMatrix out = mat_zero(a.ring, a.target, b.source);
  for (int i = 0; i < a.target.rank(); ++i)
    for (int k = 0; k < b.source.rank(); ++k) {
      Poly acc;
      for (int j = 0; j < a.source.rank(); ++j) {
        if (a.e[i][j].is_zero() || b.e[j][k].is_zero()) continue;
        acc = poly_add(a.ring, acc, poly_mul(a.ring, a.e[i][j], b.e[j][k]));
      }
      out.e[i][k] = std::move(acc);
    }
  return out;
}

bool mat_is_zero(const GradedMatrix& m) {
  for (const auto& row : m.e)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

ModuleVec mat_column(const GradedMatrix& m, int j) {
  std::vector<MTerm> raw;
  for (int i = 0; i < m.target.rank(); ++i)
    for (const auto& t : m.e[i][j].t) raw.push_back(MTerm{static_cast<std::int32_t>(i), t.m, t.c});
  return mv_normalize(m.ring, std::move(raw));
}

ModuleVec mat_apply(const GradedMatrix& m, const ModuleVec& v) {
  ModuleVec acc;
  auto comps = mv_to_polys(m.ring, m.source.rank(), v);
  for (int j = 0; j < m.source.rank(); ++j)
    for (const auto& t : comps[j].t) acc = mv_add(m.ring, acc, mv_mul_term(m.ring, mat_column(m, j), t.c, t.m));
  return acc;
}

GradedMatrix mat_from_columns(const Ring& R, const FreeMod& target,
                              const std::vector<ModuleVec>& cols) {
  FreeMod source;
  source.twists.reserve(cols.size());
  for (const auto& v : cols) {
    if (v.is_zero()) {
      source.twists.push_back(0);
      continue;
    }
    source.twists.push_back(mv_degree(target, v));
  }
  GradedMatrix out = mat_zero(R, target, source);
  for (size_t j = 0; j < cols.size(); ++j) {
    auto comps = mv_to_polys(R, target.rank(), cols[j]);
    for (int i = 0; i < target.rank(); ++i) out.e[i][j] = std::move(comps[i]);
  }
  return out;
}

GradedMatrix mat_hconcat(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring, b.ring);
  if (!(a.target == b.target)) fail(Errc::ambient_mismatch, "hconcat target mismatch");
  FreeMod source;
  source.twists = a.source.twists;
  source.twists.insert(source.twists.end(), b.source.twists.begin(), b.source.twists.end());
  GradedMatrix out = mat_zero(a.ring, a.target, source);
  for (int i = 0; i < a.target.rank(); ++i) {
    for (int j = 0; j < a.source.rank(); ++j) out.e[i][j] = a.e[i][j];
    for (int j = 0; j < b.source.rank(); ++j) out.e[i][a.source.rank() + j] = b.e[i][j];
  }
  return out;
}

GradedMatrix mat_tensor_left(const GradedMatrix& phi, const FreeMod& g) {
  FreeMod target = freemod_tensor(phi.target, g);
  FreeMod source = freemod_tensor(phi.source, g);
  GradedMatrix out = mat_zero(phi.ring, target, source);
  int rg = g.rank();
  for (int i = 0; i < phi.target.rank(); ++i)
    for (int j = 0; j < phi.source.rank(); ++j) {
      if (phi.e[i][j].is_zero()) continue;
      for (int k = 0; k < rg; ++k) out.e[i * rg + k][j * rg + k] = phi.e[i][j];
    }
  return out;
}

GradedMatrix mat_tensor_right(const FreeMod& f, const GradedMatrix& psi) {
  FreeMod target = freemod_tensor(f, psi.target);
  FreeMod source = freemod_tensor(f, psi.source);
  GradedMatrix out = mat_zero(psi.ring, target, source);
  int rt = psi.target.rank(), rs = psi.source.rank();
  for (int i = 0; i < f.rank(); ++i)
    for (int k = 0; k < rt; ++k)
      for (int l = 0; l < rs; ++l) out.e[i * rt + k][i * rs + l] = psi.e[k][l];
  return out;
}

static Poly det_rec(const Ring& R, const std::vector<std::vector<Poly>>& m,
                    std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Poly acc;
  int col = cols[0];
  std::vector<int> subcols(cols.begin() + 1, cols.end());
  for (size_t r = 0; r < rows.size(); ++r) {
    const Poly& pivot = m[rows[r]][col];
    if (pivot.is_zero()) continue;
    std::vector<int> subrows;
    for (size_t q = 0; q < rows.size(); ++q)
      if (q != r) subrows.push_back(rows[q]);
    Poly minor = det_rec(R, m, subrows, subcols);
    Poly term = poly_mul(R, pivot, minor);
    acc = (r % 2 == 0) ? poly_add(R, acc, term) : poly_sub(R, acc, term);
  }
  return acc;
}

Poly mat_det(const GradedMatrix& m) {
  int n = m.target.rank();
  if (n != m.source.rank()) fail(Errc::bad_argument, "determinant of a non-square matrix");
  if (n == 0) return poly_const(m.ring, 1);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return det_rec(m.ring, m.e, idx, idx);
}

}  // namespace ghom
