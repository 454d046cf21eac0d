#include <algorithm>
#include <queue>

#include "ghom/groebner.hpp"

namespace ghom {

Submodule submodule(Ring R, FreeMod ambient, std::vector<ModuleVec> gens) {
  for (const auto& v : gens) {
    if (v.is_zero()) continue;
    auto h = mv_homogeneity(ambient, v);
    if (!h.homogeneous) fail(Errc::homogeneity, "submodule generator is not homogeneous");
  }
  return Submodule{std::move(R), std::move(ambient), std::move(gens)};
}

Submodule submodule_from_ideal(const Ring& R, const std::vector<Poly>& gens) {
  FreeMod amb{{0}};
  std::vector<ModuleVec> vs;
  vs.reserve(gens.size());
  for (const auto& f : gens) vs.push_back(mv_from_polys(R, {f}));
  return submodule(R, amb, std::move(vs));
}

Submodule image_of(const GradedMatrix& m) {
  std::vector<ModuleVec> cols;
  cols.reserve(m.source.rank());
  for (int j = 0; j < m.source.rank(); ++j) cols.push_back(mat_column(m, j));
  return Submodule{m.ring, m.target, std::move(cols)};
}

namespace {

// Buchberger engine over an extended ambient. Components below real_rank are
// the actual free module; components at or above it are bookkeeping tags, one
// per input generator. Tags never drive reductions or pairs, so when a
// reduced vector has no real terms left its tag part is a relation among the
// inputs. All S-pairs are processed (normal strategy, lowest degree first),
// which keeps the collected relations a generating set.
class Engine {
 public:
  Engine(Ring R, std::vector<int> real_twists, bool tracked)
      : R_(std::move(R)), tw_(std::move(real_twists)), real_rank_(static_cast<int>(tw_.size())),
        tracked_(tracked) {}

  // deg: homogeneous degree of the generator (tag twist).
  void add_input(const ModuleVec& v, int deg) {
    ModuleVec ext = v;
    if (tracked_) {
      MTerm tag{static_cast<std::int32_t>(real_rank_ + ninputs_), Monomial(R_.nvars(), 0), 1};
      ext.t.push_back(tag);  // tags sort after all real terms
      tag_twists_.push_back(deg);
    }
    ++ninputs_;
    pending_.push_back(std::move(ext));
  }

  void run() {
    for (auto& v : pending_) consume(std::move(v));
    pending_.clear();
    while (!queue_.empty()) {
      SPair pr = queue_.top();
      queue_.pop();
      const auto& f = basis_[pr.i];
      const auto& g = basis_[pr.j];
      Monomial w = mono_lcm(lead(f).m, lead(g).m);
      ModuleVec s = mv_sub(R_, mv_mul_term(R_, f, 1, mono_div(w, lead(f).m)),
                           mv_mul_term(R_, g, 1, mono_div(w, lead(g).m)));
      consume(std::move(s));
    }
    interreduce();
  }

  // Full normal form of the real part of v against the current basis.
  ModuleVec reduce_full(ModuleVec v, int skip = -1) const {
    size_t pos = 0;
    while (pos < v.t.size()) {
      const MTerm& t = v.t[pos];
      if (t.comp >= real_rank_) {  // tag terms are never reduced
        ++pos;
        continue;
      }
      int k = find_reducer(t, skip);
      if (k < 0) {
        ++pos;
        continue;
      }
      v = mv_submul(R_, v, t.c, mono_div(t.m, lead(basis_[k]).m), basis_[k]);
    }
    return v;
  }

  std::vector<ModuleVec> take_syzygies() { return std::move(syz_); }

  std::vector<ModuleVec> reduced_basis_real() const {
    std::vector<ModuleVec> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.push_back(strip_tags(b));
    return out;
  }

  // remainder r and witness w with v = r + sum w_i * gen_i
  std::pair<ModuleVec, std::vector<Poly>> reduce_with_witness(const ModuleVec& v) const {
    ModuleVec r = reduce_full(v);
    std::vector<Poly> w(ninputs_);
    ModuleVec real;
    for (const auto& t : r.t) {
      if (t.comp < real_rank_) {
        real.t.push_back(t);
      } else {
        int i = t.comp - real_rank_;
        w[i] = poly_add(R_, w[i], poly_term(R_, fp_neg(t.c, R_.p), t.m));
      }
    }
    return {std::move(real), std::move(w)};
  }

  int real_rank() const { return real_rank_; }

 private:
  struct SPair {
    int deg;
    int i, j;
  };
  struct SPairOrder {
    bool operator()(const SPair& a, const SPair& b) const {
      if (a.deg != b.deg) return a.deg > b.deg;
      if (a.i != b.i) return a.i > b.i;
      return a.j > b.j;
    }
  };

  const MTerm& lead(const ModuleVec& v) const { return v.t.front(); }

  int find_reducer(const MTerm& t, int skip) const {
    for (size_t k = 0; k < basis_.size(); ++k) {
      if (static_cast<int>(k) == skip) continue;
      const MTerm& l = lead(basis_[k]);
      if (l.comp == t.comp && mono_divides(l.m, t.m)) return static_cast<int>(k);
    }
    return -1;
  }

  ModuleVec strip_tags(const ModuleVec& v) const {
    ModuleVec out;
    for (const auto& t : v.t) {
      if (t.comp >= real_rank_) break;  // tags sort last
      out.t.push_back(t);
    }
    return out;
  }

  bool real_empty(const ModuleVec& v) const {
    return v.t.empty() || v.t.front().comp >= real_rank_;
  }

  void emit_syzygy(const ModuleVec& v) {
    if (!tracked_) return;
    ModuleVec s;
    for (const auto& t : v.t)
      s.t.push_back(MTerm{static_cast<std::int32_t>(t.comp - real_rank_), t.m, t.c});
    syz_.push_back(std::move(s));
  }

  void consume(ModuleVec v) {
    v = reduce_full(std::move(v));
    if (v.t.empty()) return;
    if (real_empty(v)) {
      emit_syzygy(v);
      return;
    }
    std::int64_t inv = fp_inv(lead(v).c, R_.p);
    v = mv_scale(R_, v, inv);
    int k = static_cast<int>(basis_.size());
    for (int i = 0; i < k; ++i) {
      if (lead(basis_[i]).comp != lead(v).comp) continue;
      Monomial w = mono_lcm(lead(basis_[i]).m, lead(v).m);
      int deg = mono_degree(w) + tw_[lead(v).comp];
      queue_.push(SPair{deg, i, k});
    }
    basis_.push_back(std::move(v));
  }

  void interreduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < basis_.size(); ++k) {
        ModuleVec r = reduce_full(basis_[k], static_cast<int>(k));
        if (mv_eq(r, basis_[k])) continue;
        changed = true;
        if (r.t.empty() || real_empty(r)) {
          if (!r.t.empty()) emit_syzygy(r);
          basis_.erase(basis_.begin() + static_cast<long>(k));
          --k;
        } else {
          basis_[k] = mv_scale(R_, r, fp_inv(r.t.front().c, R_.p));
        }
      }
    }
    std::sort(basis_.begin(), basis_.end(),
              [](const ModuleVec& a, const ModuleVec& b) { return mt_cmp(a.t.front(), b.t.front()) < 0; });
  }

  Ring R_;
  std::vector<int> tw_;
  int real_rank_;
  bool tracked_;
  int ninputs_ = 0;
  std::vector<int> tag_twists_;
  std::vector<ModuleVec> pending_;
  std::vector<ModuleVec> basis_;
  std::priority_queue<SPair, std::vector<SPair>, SPairOrder> queue_;
  std::vector<ModuleVec> syz_;
};

std::vector<int> gen_degrees(const Submodule& s) {
  std::vector<int> degs;
  degs.reserve(s.gens.size());
  for (const auto& v : s.gens) degs.push_back(v.is_zero() ? 0 : mv_degree(s.ambient, v));
  return degs;
}

Engine make_engine(const Submodule& s, bool tracked) {
  Engine e(s.ring, s.ambient.twists, tracked);
  auto degs = gen_degrees(s);
  for (size_t i = 0; i < s.gens.size(); ++i) e.add_input(s.gens[i], degs[i]);
  return e;
}

}  // namespace

namespace {

// Full normal form against an already-reduced basis; no completion.
ModuleVec reduce_by_basis(const Ring& R, const std::vector<ModuleVec>& basis, ModuleVec v) {
  size_t pos = 0;
  while (pos < v.t.size()) {
    const MTerm& t = v.t[pos];
    int found = -1;
    for (size_t k = 0; k < basis.size(); ++k) {
      const MTerm& l = basis[k].t.front();
      if (l.comp == t.comp && mono_divides(l.m, t.m)) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) {
      ++pos;
      continue;
    }
    v = mv_submul(R, v, t.c, mono_div(t.m, basis[found].t.front().m), basis[found]);
  }
  return v;
}

}  // namespace

GroebnerBasis buchberger(const Submodule& s) {
  Engine e = make_engine(s, false);
  e.run();
  return GroebnerBasis{s.ring, s.ambient, e.reduced_basis_real()};
}

ModuleVec normal_form(const ModuleVec& v, const GroebnerBasis& gb) {
  for (const auto& t : v.t)
    if (t.comp < 0 || t.comp >= gb.ambient.rank())
      fail(Errc::ambient_mismatch, "vector does not live in the basis ambient");
  return reduce_by_basis(gb.ring, gb.g, v);
}

bool gb_contains(const GroebnerBasis& gb, const ModuleVec& v) {
  return normal_form(v, gb).is_zero();
}

Submodule syzygies(const Submodule& s) {
  Engine e = make_engine(s, true);
  e.run();
  FreeMod amb{gen_degrees(s)};
  auto syz = e.take_syzygies();
  for (auto& v : syz) v = mv_normalize(s.ring, std::move(v.t));
  return Submodule{s.ring, std::move(amb), std::move(syz)};
}

Submodule kernel_of_map(const GradedMatrix& m) {
  require_homogeneous(m);
  Submodule cols = image_of(m);
  Engine e(m.ring, m.target.twists, true);
  for (int j = 0; j < m.source.rank(); ++j) e.add_input(cols.gens[j], m.source.twists[j]);
  e.run();
  auto syz = e.take_syzygies();
  for (auto& v : syz) v = mv_normalize(m.ring, std::move(v.t));
  return Submodule{m.ring, m.source, std::move(syz)};
}

namespace {

// (l : h) = projections onto F of the kernel of [h*I | gens(l)].
Submodule colon_single(const Submodule& l, const Poly& h) {
  const Ring& R = l.ring;
  auto hh = poly_homogeneity(h);
  if (!hh.homogeneous) fail(Errc::homogeneity, "colon by a non-homogeneous element");
  if (hh.degree == 0) return l;  // unit
  int rank = l.ambient.rank();
  Engine e(R, l.ambient.twists, true);
  for (int i = 0; i < rank; ++i) {
    ModuleVec hei;
    for (const auto& t : h.t) hei.t.push_back(MTerm{static_cast<std::int32_t>(i), t.m, t.c});
    e.add_input(mv_normalize(R, std::move(hei.t)), l.ambient.twists[i] + hh.degree);
  }
  for (const auto& g : l.gens) e.add_input(g, g.is_zero() ? 0 : mv_degree(l.ambient, g));
  e.run();
  std::vector<ModuleVec> out;
  for (auto& s : e.take_syzygies()) {
    std::vector<MTerm> first;
    for (const auto& t : s.t)
      if (t.comp < rank) first.push_back(t);
    ModuleVec v = mv_normalize(R, std::move(first));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return Submodule{R, l.ambient, std::move(out)};
}

}  // namespace

Submodule intersect(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring, b.ring);
  if (!(a.ambient == b.ambient)) fail(Errc::ambient_mismatch, "intersection ambient mismatch");
  Engine e(a.ring, a.ambient.twists, true);
  for (const auto& g : a.gens) e.add_input(g, g.is_zero() ? 0 : mv_degree(a.ambient, g));
  for (const auto& g : b.gens) e.add_input(g, g.is_zero() ? 0 : mv_degree(b.ambient, g));
  e.run();
  int na = static_cast<int>(a.gens.size());
  std::vector<ModuleVec> out;
  for (auto& s : e.take_syzygies()) {
    ModuleVec acc;
    for (const auto& t : s.t) {
      if (t.comp >= na) continue;
      acc = mv_add(a.ring, acc, mv_mul_term(a.ring, a.gens[t.comp], t.c, t.m));
    }
    if (!acc.is_zero()) out.push_back(std::move(acc));
  }
  return Submodule{a.ring, a.ambient, std::move(out)};
}

Submodule colon(const Submodule& l, const std::vector<Poly>& ideal_gens) {
  std::vector<Poly> hs;
  for (const auto& h : ideal_gens)
    if (!h.is_zero()) hs.push_back(h);
  if (hs.empty()) fail(Errc::bad_argument, "colon by the zero ideal");
  Submodule acc = colon_single(l, hs[0]);
  for (size_t i = 1; i < hs.size(); ++i) acc = intersect(acc, colon_single(l, hs[i]));
  return acc;
}

Submodule saturate(const Submodule& l, const std::vector<Poly>& ideal_gens) {
  Submodule cur = l;
  GroebnerBasis cur_gb = buchberger(cur);
  while (true) {
    Submodule next = colon(Submodule{cur.ring, cur.ambient, cur_gb.g}, ideal_gens);
    GroebnerBasis next_gb = buchberger(next);
    bool same = next_gb.g.size() == cur_gb.g.size();
    for (size_t i = 0; same && i < cur_gb.g.size(); ++i) same = mv_eq(next_gb.g[i], cur_gb.g[i]);
    if (same) return Submodule{cur.ring, cur.ambient, cur_gb.g};
    cur = std::move(next);
    cur_gb = std::move(next_gb);
  }
}

Submodule colon_and_saturate(const Submodule& l, const std::vector<Poly>& ideal_gens,
                             ColonMode mode) {
  return mode == ColonMode::colon ? colon(l, ideal_gens) : saturate(l, ideal_gens);
}

bool submodule_eq(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring, b.ring);
  if (!(a.ambient == b.ambient)) return false;
  GroebnerBasis ga = buchberger(a), gb = buchberger(b);
  if (ga.g.size() != gb.g.size()) return false;
  for (size_t i = 0; i < ga.g.size(); ++i)
    if (!mv_eq(ga.g[i], gb.g[i])) return false;
  return true;
}

std::vector<ModuleVec> min_generators(const Submodule& s) {
  std::vector<int> order;
  for (size_t i = 0; i < s.gens.size(); ++i)
    if (!s.gens[i].is_zero()) order.push_back(static_cast<int>(i));
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    int di = mv_degree(s.ambient, s.gens[i]);
    int dj = mv_degree(s.ambient, s.gens[j]);
    if (di != dj) return di < dj;
    int c = mt_cmp(s.gens[i].t.front(), s.gens[j].t.front());
    if (c != 0) return c > 0;
    return i < j;
  });
  std::vector<ModuleVec> kept;
  Engine e(s.ring, s.ambient.twists, false);
  e.run();
  for (int idx : order) {
    ModuleVec r = e.reduce_full(s.gens[idx]);
    if (r.is_zero()) continue;
    kept.push_back(s.gens[idx]);
    e.add_input(r, mv_degree(s.ambient, s.gens[idx]));
    e.run();
  }
  return kept;
}

std::optional<std::vector<Poly>> lift_through(const Submodule& s, const ModuleVec& v) {
  TrackedSubmodule tr(s);
  auto [r, w] = tr.reduce(v);
  if (!r.is_zero()) return std::nullopt;
  return w;
}

struct TrackedSubmodule::Impl {
  Submodule input;
  Engine engine;
  std::vector<ModuleVec> syz;
  FreeMod syz_ambient;

  Impl(Submodule s, Engine e) : input(std::move(s)), engine(std::move(e)) {}
};

TrackedSubmodule::TrackedSubmodule(Submodule s) {
  Engine e = make_engine(s, true);
  e.run();
  impl_ = std::make_unique<Impl>(std::move(s), std::move(e));
  impl_->syz = impl_->engine.take_syzygies();
  for (auto& v : impl_->syz) v = mv_normalize(impl_->input.ring, std::move(v.t));
  impl_->syz_ambient = FreeMod{gen_degrees(impl_->input)};
}

TrackedSubmodule::~TrackedSubmodule() = default;
TrackedSubmodule::TrackedSubmodule(TrackedSubmodule&&) noexcept = default;
TrackedSubmodule& TrackedSubmodule::operator=(TrackedSubmodule&&) noexcept = default;

const Submodule& TrackedSubmodule::input() const { return impl_->input; }
const std::vector<ModuleVec>& TrackedSubmodule::syzygy_gens() const { return impl_->syz; }
const FreeMod& TrackedSubmodule::syzygy_ambient() const { return impl_->syz_ambient; }

std::pair<ModuleVec, std::vector<Poly>> TrackedSubmodule::reduce(const ModuleVec& v) const {
  return impl_->engine.reduce_with_witness(v);
}

}  // namespace ghom
