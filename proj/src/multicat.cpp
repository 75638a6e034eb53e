#include "multikat/multicat.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace multikat {

profile permuted_profile(const perm& s, const profile& p) {
  profile q;
  q.dst = p.dst;
  q.src.resize(p.src.size());
  for (size_t i = 0; i < s.size(); ++i) q.src[i] = p.src[static_cast<size_t>(s[i])];
  return q;
}

namespace {

std::string profile_string(const multicategory& m, const profile& p) {
  std::string s;
  for (size_t i = 0; i < p.src.size(); ++i) {
    if (i) s += ",";
    s += m.object_name(p.src[i]);
  }
  s += "|";
  s += m.object_name(p.dst);
  return s;
}

}  // namespace

object_id multicategory::add_object(std::string name) {
  object_names_.push_back(std::move(name));
  units_.push_back(-1);
  return static_cast<object_id>(object_names_.size()) - 1;
}

arrow_id multicategory::add_arrow(profile p) {
  const arrow_id id = static_cast<arrow_id>(arrow_profiles_.size());
  hom_[p].push_back(id);
  arrow_profiles_.push_back(std::move(p));
  return id;
}

void multicategory::set_unit(object_id a, arrow_id f) { units_[static_cast<size_t>(a)] = f; }

void multicategory::set_sym(arrow_id f, const perm& s, arrow_id image) {
  sym_[{f, s}] = image;
}

void multicategory::set_comp(arrow_id f, std::vector<arrow_id> gs, arrow_id result) {
  comp_[{f, std::move(gs)}] = result;
}

void multicategory::finalize() {
  arrows_into_.assign(static_cast<size_t>(object_count()), {});
  for (arrow_id f = 0; f < arrow_count(); ++f)
    arrows_into_[static_cast<size_t>(arrow_profile(f).dst)].push_back(f);

  unary_index_.assign(static_cast<size_t>(arrow_count()), -1);
  unary_arrows_.clear();
  for (arrow_id f = 0; f < arrow_count(); ++f) {
    if (arity(f) == 1) {
      unary_index_[static_cast<size_t>(f)] = static_cast<int>(unary_arrows_.size());
      unary_arrows_.push_back(f);
    }
  }
  const size_t u = unary_arrows_.size();
  const size_t n = static_cast<size_t>(arrow_count());

  post_table_.assign(u * n, -1);
  for (size_t i = 0; i < u; ++i) {
    const arrow_id f1 = unary_arrows_[i];
    for (arrow_id g = 0; g < arrow_count(); ++g) {
      if (arrow_profile(f1).src[0] != arrow_profile(g).dst) continue;
      auto r = try_gamma(f1, {g});
      post_table_[i * n + static_cast<size_t>(g)] = r ? *r : -1;
    }
  }

  const size_t cap = static_cast<size_t>(arity_cap_);
  slot_table_.assign(n * cap * u, -1);
  for (arrow_id g = 0; g < arrow_count(); ++g) {
    const profile& pg = arrow_profile(g);
    for (size_t slot = 0; slot < pg.src.size(); ++slot) {
      for (size_t i = 0; i < u; ++i) {
        const arrow_id f1 = unary_arrows_[i];
        if (arrow_profile(f1).dst != pg.src[slot]) continue;
        std::vector<arrow_id> gs(pg.src.size());
        for (size_t j = 0; j < pg.src.size(); ++j)
          gs[j] = (j == slot) ? f1 : unit(pg.src[j]);
        auto r = try_gamma(g, gs);
        slot_table_[(static_cast<size_t>(g) * cap + slot) * u + i] = r ? *r : -1;
      }
    }
  }
  finalized_ = true;
}

const std::vector<arrow_id>& multicategory::hom(const profile& p) const {
  static const std::vector<arrow_id> empty;
  auto it = hom_.find(p);
  return it == hom_.end() ? empty : it->second;
}

arrow_id multicategory::sigma(const perm& s, arrow_id f) const {
  auto r = try_sigma(s, f);
  if (!r) throw internal_error("missing sym entry for arrow " + std::to_string(f));
  return *r;
}

std::optional<arrow_id> multicategory::try_sigma(const perm& s, arrow_id f) const {
  if (is_identity_perm(s)) return f;
  auto it = sym_.find({f, s});
  if (it == sym_.end()) return std::nullopt;
  return it->second;
}

arrow_id multicategory::gamma(arrow_id f, const std::vector<arrow_id>& gs) const {
  auto r = try_gamma(f, gs);
  if (!r) throw internal_error("missing composition entry for arrow " + std::to_string(f));
  return *r;
}

std::optional<arrow_id> multicategory::try_gamma(arrow_id f, const std::vector<arrow_id>& gs) const {
  auto it = comp_.find({f, gs});
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

arrow_id multicategory::compose1(arrow_id g, arrow_id f) const {
  return post_compose(g, f);
}

arrow_id multicategory::post_compose(arrow_id f1, arrow_id g) const {
  const int i = unary_index_[static_cast<size_t>(f1)];
  if (i < 0) return -1;
  return post_table_[static_cast<size_t>(i) * static_cast<size_t>(arrow_count()) +
                     static_cast<size_t>(g)];
}

arrow_id multicategory::slot_compose(arrow_id g, int slot, arrow_id f1) const {
  const int i = unary_index_[static_cast<size_t>(f1)];
  if (i < 0) return -1;
  const size_t u = unary_arrows_.size();
  return slot_table_[(static_cast<size_t>(g) * static_cast<size_t>(arity_cap_) +
                      static_cast<size_t>(slot)) *
                         u +
                     static_cast<size_t>(i)];
}

std::string validation_report::to_string() const {
  std::ostringstream os;
  for (const violation& v : violations)
    os << (v.structural ? "[structural] " : "[axiom] ") << v.message << "\n";
  return os.str();
}

// --- validation --------------------------------------------------------------

namespace {

// Iterates all composable inner tuples for f whose total arity fits the cap,
// in canonical (slotwise ascending arrow id) order.
void for_each_composable(const multicategory& m, arrow_id f,
                         const std::function<void(const std::vector<arrow_id>&)>& fn) {
  const profile& pf = m.arrow_profile(f);
  const int k = static_cast<int>(pf.src.size());
  std::vector<arrow_id> gs(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int slot, int arity_left) {
    if (slot == k) {
      fn(gs);
      return;
    }
    for (arrow_id g : m.arrows_into(pf.src[static_cast<size_t>(slot)])) {
      const int a = m.arity(g);
      if (a > arity_left) continue;
      gs[static_cast<size_t>(slot)] = g;
      rec(slot + 1, arity_left - a);
    }
  };
  rec(0, m.arity_cap());
}

profile composite_profile(const multicategory& m, arrow_id f, const std::vector<arrow_id>& gs) {
  profile p;
  p.dst = m.arrow_profile(f).dst;
  for (arrow_id g : gs)
    for (object_id a : m.arrow_profile(g).src) p.src.push_back(a);
  return p;
}

}  // namespace

validation_report validate_multicategory(const multicategory& m) {
  validation_report rep;
  auto structural = [&](std::string msg) { rep.violations.push_back({true, std::move(msg)}); };
  auto axiom = [&](std::string msg) { rep.violations.push_back({false, std::move(msg)}); };

  if (m.object_count() == 0) {
    structural("multicategory has no objects");
    return rep;
  }

  // Profiles well formed, hom table consistent.
  for (arrow_id f = 0; f < m.arrow_count(); ++f) {
    const profile& p = m.arrow_profile(f);
    if (static_cast<int>(p.src.size()) > m.arity_cap())
      structural("arrow " + std::to_string(f) + " exceeds arity cap");
    bool ids_ok = p.dst >= 0 && p.dst < m.object_count();
    for (object_id a : p.src) ids_ok = ids_ok && a >= 0 && a < m.object_count();
    if (!ids_ok) {
      structural("arrow " + std::to_string(f) + " references unknown object");
      continue;
    }
    const auto& h = m.hom(p);
    if (std::count(h.begin(), h.end(), f) != 1)
      structural("arrow " + std::to_string(f) + " not listed exactly once under its profile");
  }
  if (!rep.ok()) return rep;  // id errors make the axiom sweeps meaningless

  // Units.
  for (object_id a = 0; a < m.object_count(); ++a) {
    const arrow_id u = m.unit(a);
    if (u < 0 || u >= m.arrow_count()) {
      structural("object " + m.object_name(a) + " has no unit");
      continue;
    }
    const profile want{{a}, a};
    if (!(m.arrow_profile(u) == want))
      structural("unit of " + m.object_name(a) + " has wrong profile");
  }

  // Symmetric actions: totality, profile correctness, functoriality.
  for (arrow_id f = 0; f < m.arrow_count(); ++f) {
    const int k = m.arity(f);
    for (const perm& s : all_perms(k)) {
      auto img = m.try_sigma(s, f);
      if (!img) {
        structural("missing sigma entry: arrow " + std::to_string(f));
        continue;
      }
      if (!(m.arrow_profile(*img) == permuted_profile(s, m.arrow_profile(f))))
        axiom("sigma image of arrow " + std::to_string(f) + " has wrong profile");
    }
    for (const perm& s : all_perms(k)) {
      auto sf = m.try_sigma(s, f);
      if (!sf) continue;
      for (const perm& t : all_perms(k)) {
        auto lhs = m.try_sigma(compose_perms(s, t), f);
        auto rhs = m.try_sigma(t, *sf);
        if (lhs && rhs && *lhs != *rhs)
          axiom("sigma functoriality fails on arrow " + std::to_string(f));
      }
    }
  }

  // Composition totality and unit laws.
  for (arrow_id f = 0; f < m.arrow_count(); ++f) {
    const profile& pf = m.arrow_profile(f);
    for_each_composable(m, f, [&](const std::vector<arrow_id>& gs) {
      auto r = m.try_gamma(f, gs);
      if (!r) {
        structural("missing composition entry: gamma(" + std::to_string(f) + "; ...)");
        return;
      }
      if (!(m.arrow_profile(*r) == composite_profile(m, f, gs)))
        axiom("composite of arrow " + std::to_string(f) + " has wrong profile");
    });

    // gamma(f; units) = f
    std::vector<arrow_id> us;
    us.reserve(pf.src.size());
    for (object_id a : pf.src) us.push_back(m.unit(a));
    if (static_cast<int>(pf.src.size()) <= m.arity_cap()) {
      auto r = m.try_gamma(f, us);
      if (r && *r != f) axiom("right unit law fails on arrow " + std::to_string(f));
    }
    // gamma(1_dst; f) = f
    auto l = m.try_gamma(m.unit(pf.dst), {f});
    if (l && *l != f) axiom("left unit law fails on arrow " + std::to_string(f));
  }
  if (!rep.ok()) return rep;

  // Associativity: gamma(gamma(f; gs); hs) = gamma(f; gamma(g_i; block_i)).
  for (arrow_id f = 0; f < m.arrow_count(); ++f) {
    for_each_composable(m, f, [&](const std::vector<arrow_id>& gs) {
      const arrow_id e = m.gamma(f, gs);
      for_each_composable(m, e, [&](const std::vector<arrow_id>& hs) {
        const arrow_id lhs = m.gamma(e, hs);
        std::vector<arrow_id> mids;
        mids.reserve(gs.size());
        size_t pos = 0;
        for (arrow_id g : gs) {
          const size_t kk = static_cast<size_t>(m.arity(g));
          std::vector<arrow_id> block(hs.begin() + static_cast<long>(pos),
                                      hs.begin() + static_cast<long>(pos + kk));
          pos += kk;
          mids.push_back(m.gamma(g, block));
        }
        const arrow_id rhs = m.gamma(f, mids);
        if (lhs != rhs)
          axiom("associativity fails: gamma(gamma(" + std::to_string(f) + ";...);...)");
      });
    });
  }

  // Equivariance. Outer: gamma(s*f; g_{s(1)}..g_{s(k)}) = blockperm* gamma(f; gs).
  // Inner: gamma(f; t_1*g_1..t_k*g_k) = (t_1 + .. + t_k)* gamma(f; gs).
  for (arrow_id f = 0; f < m.arrow_count(); ++f) {
    const int k = m.arity(f);
    for_each_composable(m, f, [&](const std::vector<arrow_id>& gs) {
      const arrow_id base = m.gamma(f, gs);
      std::vector<int> sizes;
      sizes.reserve(gs.size());
      for (arrow_id g : gs) sizes.push_back(m.arity(g));

      for (const perm& s : all_perms(k)) {
        if (is_identity_perm(s)) continue;
        std::vector<arrow_id> pgs(gs.size());
        for (size_t i = 0; i < gs.size(); ++i) pgs[i] = gs[static_cast<size_t>(s[i])];
        const arrow_id lhs = m.gamma(m.sigma(s, f), pgs);
        const arrow_id rhs = m.sigma(block_perm(s, sizes), base);
        if (lhs != rhs) axiom("outer equivariance fails on arrow " + std::to_string(f));
      }

      for (size_t i = 0; i < gs.size(); ++i) {
        const int a = m.arity(gs[i]);
        for (const perm& t : all_perms(a)) {
          if (is_identity_perm(t)) continue;
          std::vector<arrow_id> tgs = gs;
          tgs[i] = m.sigma(t, gs[i]);
          std::vector<perm> parts;
          parts.reserve(gs.size());
          for (size_t j = 0; j < gs.size(); ++j)
            parts.push_back(j == i ? t : identity_perm(m.arity(gs[j])));
          const arrow_id lhs = m.gamma(f, tgs);
          const arrow_id rhs = m.sigma(direct_sum_perms(parts), base);
          if (lhs != rhs) axiom("inner equivariance fails on arrow " + std::to_string(f));
        }
      }
    });
  }

  return rep;
}

validation_report validate_based(const based_multicategory& bm) {
  validation_report rep = validate_multicategory(bm.m);
  auto structural = [&](std::string msg) { rep.violations.push_back({true, std::move(msg)}); };
  auto axiom = [&](std::string msg) { rep.violations.push_back({false, std::move(msg)}); };

  const multicategory& m = bm.m;
  if (bm.basepoint < 0 || bm.basepoint >= m.object_count()) {
    structural("basepoint out of range");
    return rep;
  }
  if (static_cast<int>(bm.mu.size()) != m.arity_cap() + 1) {
    structural("mu family must have one entry per arity 0..cap");
    return rep;
  }
  for (int n = 0; n <= m.arity_cap(); ++n) {
    const arrow_id f = bm.mu[static_cast<size_t>(n)];
    if (f < 0 || f >= m.arrow_count()) {
      structural("mu_" + std::to_string(n) + " out of range");
      return rep;
    }
    profile want;
    want.dst = bm.basepoint;
    want.src.assign(static_cast<size_t>(n), bm.basepoint);
    if (!(m.arrow_profile(f) == want)) structural("mu_" + std::to_string(n) + " has wrong profile");
  }
  if (!rep.ok()) return rep;
  if (!monoid_check(bm, bm.basepoint, bm.mu)) axiom("basepoint mu family is not a commutative monoid");
  return rep;
}

// --- singleton-presence builder ----------------------------------------------

namespace {

using presence_fn = std::function<bool(const profile&)>;

// Builds a multicategory whose hom-sets all have size <= 1, from a presence
// predicate. Composition and sigma actions are forced; the predicate must be
// closed under both (checked, internal error otherwise).
multicategory build_singleton(int n_objects, std::vector<std::string> names, int cap,
                              const presence_fn& present) {
  multicategory m(cap);
  for (int i = 0; i < n_objects; ++i) m.add_object(std::move(names[static_cast<size_t>(i)]));

  // Arrows in canonical profile order: arity ascending, then source lex, then target.
  std::map<profile, arrow_id> arrow_at;
  for (int a = 0; a <= cap; ++a) {
    std::vector<object_id> src(static_cast<size_t>(a), 0);
    while (true) {
      for (object_id dst = 0; dst < n_objects; ++dst) {
        profile p{src, dst};
        if (present(p)) arrow_at[p] = m.add_arrow(p);
      }
      int i = a - 1;
      while (i >= 0 && src[static_cast<size_t>(i)] == n_objects - 1) {
        src[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++src[static_cast<size_t>(i)];
    }
  }

  for (object_id a = 0; a < n_objects; ++a) {
    auto it = arrow_at.find(profile{{a}, a});
    if (it == arrow_at.end()) throw internal_error("singleton builder: missing identity presence");
    m.set_unit(a, it->second);
  }

  for (arrow_id f = 0; f < m.arrow_count(); ++f) {
    const profile& pf = m.arrow_profile(f);
    const int k = static_cast<int>(pf.src.size());
    for (const perm& s : all_perms(k)) {
      auto it = arrow_at.find(permuted_profile(s, pf));
      if (it == arrow_at.end()) throw internal_error("singleton builder: sigma closure fails");
      m.set_sym(f, s, it->second);
    }
  }

  // Needs arrows_into; fill after a provisional finalize-like pass.
  std::vector<std::vector<arrow_id>> into(static_cast<size_t>(n_objects));
  for (arrow_id f = 0; f < m.arrow_count(); ++f)
    into[static_cast<size_t>(m.arrow_profile(f).dst)].push_back(f);

  for (arrow_id f = 0; f < m.arrow_count(); ++f) {
    const profile& pf = m.arrow_profile(f);
    const int k = static_cast<int>(pf.src.size());
    std::vector<arrow_id> gs(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == k) {
        profile cp;
        cp.dst = pf.dst;
        for (arrow_id g : gs)
          for (object_id a : m.arrow_profile(g).src) cp.src.push_back(a);
        auto it = arrow_at.find(cp);
        if (it == arrow_at.end())
          throw internal_error("singleton builder: composition closure fails");
        m.set_comp(f, gs, it->second);
        return;
      }
      for (arrow_id g : into[static_cast<size_t>(pf.src[static_cast<size_t>(slot)])]) {
        const int a = static_cast<int>(m.arrow_profile(g).src.size());
        if (a > left) continue;
        gs[static_cast<size_t>(slot)] = g;
        rec(slot + 1, left - a);
      }
    };
    rec(0, cap);
  }

  m.finalize();
  return m;
}

std::vector<arrow_id> basepoint_mu(const multicategory& m, object_id base) {
  std::vector<arrow_id> mu;
  for (int n = 0; n <= m.arity_cap(); ++n) {
    profile p;
    p.dst = base;
    p.src.assign(static_cast<size_t>(n), base);
    const auto& h = m.hom(p);
    if (h.size() != 1) throw internal_error("basepoint mu profile is not a singleton");
    mu.push_back(h[0]);
  }
  return mu;
}

}  // namespace

based_multicategory make_terminal(int arity_cap) {
  multicategory m =
      build_singleton(1, {"*"}, arity_cap, [](const profile&) { return true; });
  std::vector<arrow_id> mu = basepoint_mu(m, 0);
  return {std::move(m), 0, std::move(mu)};
}

based_multicategory make_E(int arity_cap) {
  multicategory m = build_singleton(2, {"0", "1"}, arity_cap, [](const profile& p) {
    int sum = 0;
    for (object_id a : p.src) sum += a;
    return sum == p.dst;
  });
  std::vector<arrow_id> mu = basepoint_mu(m, 0);
  return {std::move(m), 0, std::move(mu)};
}

based_multicategory make_unit_u(int arity_cap) {
  multicategory m = build_singleton(2, {"*", "x"}, arity_cap, [](const profile& p) {
    if (p.dst == 0) {
      for (object_id a : p.src)
        if (a != 0) return false;
      return true;
    }
    return p.src.size() == 1 && p.src[0] == 1;
  });
  std::vector<arrow_id> mu = basepoint_mu(m, 0);
  return {std::move(m), 0, std::move(mu)};
}

based_multicategory make_I(int arity_cap) {
  multicategory m = build_singleton(3, {"0", "1", "2"}, arity_cap, [](const profile& p) {
    if (p.dst == 0) {
      for (object_id a : p.src)
        if (a != 0) return false;
      return true;
    }
    if (p.dst == 1) {
      int ones = 0;
      for (object_id a : p.src) {
        if (a == 2) return false;
        ones += (a == 1);
      }
      return ones == 1;
    }
    // target 2: exactly one entry is 1 or 2, the rest 0
    int nonzero = 0;
    for (object_id a : p.src) nonzero += (a != 0);
    return nonzero == 1;
  });
  std::vector<arrow_id> mu = basepoint_mu(m, 0);
  return {std::move(m), 0, std::move(mu)};
}

based_multicategory power_E(int n, int arity_cap) {
  const int n_obj = 1 << n;
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n_obj));
  for (int v = 0; v < n_obj; ++v) {
    std::string s;
    for (int c = 0; c < n; ++c) s += ((v >> (n - 1 - c)) & 1) ? '1' : '0';
    if (n == 0) s = "()";
    names.push_back(s);
  }
  multicategory m = build_singleton(n_obj, std::move(names), arity_cap, [n](const profile& p) {
    for (int c = 0; c < n; ++c) {
      int sum = 0;
      for (object_id v : p.src) sum += (v >> (n - 1 - c)) & 1;
      if (sum != ((p.dst >> (n - 1 - c)) & 1)) return false;
    }
    return true;
  });
  std::vector<arrow_id> mu = basepoint_mu(m, 0);
  return {std::move(m), 0, std::move(mu)};
}

// --- cartesian product --------------------------------------------------------

based_multicategory cartesian_product(const based_multicategory& A, const based_multicategory& B) {
  const multicategory& a = A.m;
  const multicategory& b = B.m;
  if (a.arity_cap() != b.arity_cap())
    throw invalid_input_error("cartesian product requires equal arity caps");
  const int cap = a.arity_cap();
  multicategory m(cap);

  const int nb = b.object_count();
  for (object_id i = 0; i < a.object_count(); ++i)
    for (object_id j = 0; j < nb; ++j)
      m.add_object("(" + a.object_name(i) + "," + b.object_name(j) + ")");
  auto obj = [nb](object_id i, object_id j) { return i * nb + j; };

  // Arrow (f, g) exists per pair of equal-arity arrows; iterate profiles of the
  // product in canonical order to keep ids deterministic.
  std::map<std::pair<arrow_id, arrow_id>, arrow_id> arrow_of;
  auto pair_profile = [&](arrow_id f, arrow_id g) {
    const profile& pf = a.arrow_profile(f);
    const profile& pg = b.arrow_profile(g);
    profile p;
    p.dst = obj(pf.dst, pg.dst);
    for (size_t i = 0; i < pf.src.size(); ++i) p.src.push_back(obj(pf.src[i], pg.src[i]));
    return p;
  };
  {
    std::map<profile, std::vector<std::pair<arrow_id, arrow_id>>> by_profile;
    for (arrow_id f = 0; f < a.arrow_count(); ++f)
      for (arrow_id g = 0; g < b.arrow_count(); ++g) {
        if (a.arity(f) != b.arity(g)) continue;
        by_profile[pair_profile(f, g)].push_back({f, g});
      }
    for (auto& [p, pairs] : by_profile) {
      std::sort(pairs.begin(), pairs.end());
      for (auto& pr : pairs) arrow_of[pr] = m.add_arrow(p);
    }
  }

  for (object_id i = 0; i < a.object_count(); ++i)
    for (object_id j = 0; j < nb; ++j)
      m.set_unit(obj(i, j), arrow_of.at({a.unit(i), b.unit(j)}));

  for (const auto& [pr, id] : arrow_of) {
    const int k = a.arity(pr.first);
    for (const perm& s : all_perms(k))
      m.set_sym(id, s, arrow_of.at({a.sigma(s, pr.first), b.sigma(s, pr.second)}));
  }

  for (const auto& [pr, id] : arrow_of) {
    const auto [f, g] = pr;
    const profile& pf = a.arrow_profile(f);
    const int k = static_cast<int>(pf.src.size());
    std::vector<std::pair<arrow_id, arrow_id>> gs(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == k) {
        std::vector<arrow_id> fs(gs.size()), ss(gs.size()), ids(gs.size());
        for (size_t q = 0; q < gs.size(); ++q) {
          fs[q] = gs[q].first;
          ss[q] = gs[q].second;
          ids[q] = arrow_of.at(gs[q]);
        }
        m.set_comp(id, ids, arrow_of.at({a.gamma(f, fs), b.gamma(g, ss)}));
        return;
      }
      const object_id sa = pf.src[static_cast<size_t>(slot)];
      const object_id sb = b.arrow_profile(g).src[static_cast<size_t>(slot)];
      for (arrow_id fa : a.arrows_into(sa)) {
        const int ar = a.arity(fa);
        if (ar > left) continue;
        for (arrow_id gb : b.arrows_into(sb)) {
          if (b.arity(gb) != ar) continue;
          gs[static_cast<size_t>(slot)] = {fa, gb};
          rec(slot + 1, left - ar);
        }
      }
    };
    rec(0, cap);
  }

  m.finalize();
  std::vector<arrow_id> mu;
  for (int n = 0; n <= cap; ++n)
    mu.push_back(arrow_of.at({A.mu[static_cast<size_t>(n)], B.mu[static_cast<size_t>(n)]}));
  return {std::move(m), obj(A.basepoint, B.basepoint), std::move(mu)};
}

// --- wedge ---------------------------------------------------------------------

based_multicategory wedge(const based_multicategory& A, const based_multicategory& B) {
  const multicategory& a = A.m;
  const multicategory& b = B.m;
  if (a.arity_cap() != b.arity_cap()) throw invalid_input_error("wedge requires equal arity caps");
  const int cap = a.arity_cap();

  // Pure-basepoint hom-sets must be exactly {mu_n} on both sides so the
  // identification along the basepoint is forced.
  for (int n = 0; n <= cap; ++n) {
    profile pa{std::vector<object_id>(static_cast<size_t>(n), A.basepoint), A.basepoint};
    profile pb{std::vector<object_id>(static_cast<size_t>(n), B.basepoint), B.basepoint};
    if (a.hom(pa).size() != 1 || b.hom(pb).size() != 1)
      throw invalid_input_error("wedge requires singleton pure-basepoint hom-sets");
  }

  multicategory m(cap);
  // Object layout: basepoint first, then non-base objects of A, then of B.
  std::vector<object_id> a_obj(static_cast<size_t>(a.object_count()), -1);
  std::vector<object_id> b_obj(static_cast<size_t>(b.object_count()), -1);
  const object_id base = m.add_object(a.object_name(A.basepoint));
  a_obj[static_cast<size_t>(A.basepoint)] = base;
  b_obj[static_cast<size_t>(B.basepoint)] = base;
  for (object_id i = 0; i < a.object_count(); ++i)
    if (i != A.basepoint) a_obj[static_cast<size_t>(i)] = m.add_object(a.object_name(i));
  for (object_id i = 0; i < b.object_count(); ++i)
    if (i != B.basepoint) b_obj[static_cast<size_t>(i)] = m.add_object(b.object_name(i) + "'");

  // Every wedge arrow comes from exactly one side; pure-basepoint arrows are
  // canonically taken from A (identified with B's copy).
  struct tagged {
    int side;  // 0 = A, 1 = B
    arrow_id id;
  };
  auto is_pure_base = [&](const multicategory& mm, object_id bp, const profile& p) {
    if (p.dst != bp) return false;
    for (object_id x : p.src)
      if (x != bp) return false;
    return true;
  };
  auto translate_profile = [&](const std::vector<object_id>& map, const profile& p) {
    profile q;
    q.dst = map[static_cast<size_t>(p.dst)];
    for (object_id x : p.src) q.src.push_back(map[static_cast<size_t>(x)]);
    return q;
  };

  std::map<std::pair<int, arrow_id>, arrow_id> arrow_of;  // (side, original) -> wedge id
  std::map<profile, std::vector<tagged>> by_profile;
  for (arrow_id f = 0; f < a.arrow_count(); ++f)
    by_profile[translate_profile(a_obj, a.arrow_profile(f))].push_back({0, f});
  for (arrow_id f = 0; f < b.arrow_count(); ++f) {
    if (is_pure_base(b, B.basepoint, b.arrow_profile(f))) continue;  // identified with A side
    by_profile[translate_profile(b_obj, b.arrow_profile(f))].push_back({1, f});
  }
  for (auto& [p, list] : by_profile)
    for (const tagged& t : list) arrow_of[{t.side, t.id}] = m.add_arrow(p);
  // B-side pure-basepoint arrows map to the A-side representative.
  for (arrow_id f = 0; f < b.arrow_count(); ++f)
    if (is_pure_base(b, B.basepoint, b.arrow_profile(f))) {
      const int n = b.arity(f);
      profile pa{std::vector<object_id>(static_cast<size_t>(n), A.basepoint), A.basepoint};
      arrow_of[{1, f}] = arrow_of.at({0, a.hom(pa)[0]});
    }

  for (object_id i = 0; i < a.object_count(); ++i)
    m.set_unit(a_obj[static_cast<size_t>(i)], arrow_of.at({0, a.unit(i)}));
  for (object_id i = 0; i < b.object_count(); ++i)
    if (i != B.basepoint) m.set_unit(b_obj[static_cast<size_t>(i)], arrow_of.at({1, b.unit(i)}));

  auto side_cat = [&](int side) -> const multicategory& { return side == 0 ? a : b; };
  for (const auto& [key, id] : arrow_of) {
    const auto [side, f] = key;
    const multicategory& mm = side_cat(side);
    const int k = mm.arity(f);
    for (const perm& s : all_perms(k)) m.set_sym(id, s, arrow_of.at({side, mm.sigma(s, f)}));
  }

  // Compositions within each side; pure-basepoint outer arrows are iterated on
  // both sides so that mixed tuples (shared mu outer, side-specific inners) are
  // covered.
  for (const auto& [key, id] : arrow_of) {
    const auto [side, f] = key;
    const multicategory& mm = side_cat(side);
    const profile& pf = mm.arrow_profile(f);
    const int k = static_cast<int>(pf.src.size());
    const object_id bp = side == 0 ? A.basepoint : B.basepoint;
    (void)bp;
    std::vector<arrow_id> gs(static_cast<size_t>(k));  // original-side arrow ids
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == k) {
        std::vector<arrow_id> wedge_gs(gs.size());
        for (size_t q = 0; q < gs.size(); ++q) wedge_gs[q] = arrow_of.at({side, gs[q]});
        m.set_comp(id, wedge_gs, arrow_of.at({side, mm.gamma(f, gs)}));
        return;
      }
      for (arrow_id g : mm.arrows_into(pf.src[static_cast<size_t>(slot)])) {
        const int ar = mm.arity(g);
        if (ar > left) continue;
        gs[static_cast<size_t>(slot)] = g;
        rec(slot + 1, left - ar);
      }
    };
    rec(0, cap);
  }

  m.finalize();
  std::vector<arrow_id> mu;
  for (int n = 0; n <= cap; ++n) mu.push_back(arrow_of.at({0, A.mu[static_cast<size_t>(n)]}));
  return {std::move(m), base, std::move(mu)};
}

based_multicategory full_sub(const based_multicategory& bm, const std::vector<object_id>& objects) {
  const multicategory& src = bm.m;
  std::vector<object_id> map(static_cast<size_t>(src.object_count()), -1);
  multicategory m(src.arity_cap());
  for (object_id o : objects) map[static_cast<size_t>(o)] = m.add_object(src.object_name(o));
  if (map[static_cast<size_t>(bm.basepoint)] < 0)
    throw invalid_input_error("full_sub: object set must contain the basepoint");

  auto keep = [&](const profile& p) {
    if (map[static_cast<size_t>(p.dst)] < 0) return false;
    for (object_id x : p.src)
      if (map[static_cast<size_t>(x)] < 0) return false;
    return true;
  };
  std::vector<arrow_id> amap(static_cast<size_t>(src.arrow_count()), -1);
  for (const auto& [p, arrows] : src.hom_table()) {
    if (!keep(p)) continue;
    profile q;
    q.dst = map[static_cast<size_t>(p.dst)];
    for (object_id x : p.src) q.src.push_back(map[static_cast<size_t>(x)]);
    for (arrow_id f : arrows) amap[static_cast<size_t>(f)] = m.add_arrow(q);
  }
  for (object_id o : objects)
    m.set_unit(map[static_cast<size_t>(o)], amap[static_cast<size_t>(src.unit(o))]);
  for (const auto& [key, img] : src.sym_table()) {
    if (amap[static_cast<size_t>(key.first)] < 0) continue;
    m.set_sym(amap[static_cast<size_t>(key.first)], key.second, amap[static_cast<size_t>(img)]);
  }
  for (const auto& [key, r] : src.comp_table()) {
    if (amap[static_cast<size_t>(key.first)] < 0) continue;
    bool ok = amap[static_cast<size_t>(r)] >= 0;
    std::vector<arrow_id> gs;
    for (arrow_id g : key.second) {
      if (amap[static_cast<size_t>(g)] < 0) {
        ok = false;
        break;
      }
      gs.push_back(amap[static_cast<size_t>(g)]);
    }
    if (ok) m.set_comp(amap[static_cast<size_t>(key.first)], gs, amap[static_cast<size_t>(r)]);
  }
  m.finalize();
  std::vector<arrow_id> mu;
  for (arrow_id f : bm.mu) mu.push_back(amap[static_cast<size_t>(f)]);
  return {std::move(m), map[static_cast<size_t>(bm.basepoint)], std::move(mu)};
}

// --- monoids -------------------------------------------------------------------

bool monoid_check(const based_multicategory& bm, object_id a, const std::vector<arrow_id>& mu) {
  const multicategory& m = bm.m;
  const int cap = m.arity_cap();
  if (static_cast<int>(mu.size()) != cap + 1) return false;
  for (int n = 0; n <= cap; ++n) {
    const arrow_id f = mu[static_cast<size_t>(n)];
    if (f < 0 || f >= m.arrow_count()) return false;
    profile want;
    want.dst = a;
    want.src.assign(static_cast<size_t>(n), a);
    if (!(m.arrow_profile(f) == want)) return false;
  }
  if (mu[1] != m.unit(a)) return false;
  for (int n = 2; n <= cap; ++n)
    for (const perm& s : all_perms(n))
      if (m.sigma(s, mu[static_cast<size_t>(n)]) != mu[static_cast<size_t>(n)]) return false;

  // gamma(mu_k; mu_{m_1}..mu_{m_k}) = mu_{sum}
  for (int k = 0; k <= cap; ++k) {
    std::vector<int> ms(static_cast<size_t>(k), 0);
    std::function<bool(int, int)> rec = [&](int slot, int left) {
      if (slot == k) {
        int total = 0;
        for (int v : ms) total += v;
        std::vector<arrow_id> gs;
        for (int v : ms) gs.push_back(mu[static_cast<size_t>(v)]);
        return m.gamma(mu[static_cast<size_t>(k)], gs) == mu[static_cast<size_t>(total)];
      }
      for (int v = 0; v <= left; ++v) {
        ms[static_cast<size_t>(slot)] = v;
        if (!rec(slot + 1, left - v)) return false;
      }
      return true;
    };
    if (!rec(0, cap)) return false;
  }
  return true;
}

std::vector<std::pair<object_id, std::vector<arrow_id>>> all_monoids(
    const based_multicategory& bm) {
  const multicategory& m = bm.m;
  const int cap = m.arity_cap();
  std::vector<std::pair<object_id, std::vector<arrow_id>>> out;
  for (object_id a = 0; a < m.object_count(); ++a) {
    // mu_1 forced to the unit; sweep the other arities.
    std::vector<const std::vector<arrow_id>*> choices;
    bool possible = true;
    for (int n = 0; n <= cap; ++n) {
      profile p;
      p.dst = a;
      p.src.assign(static_cast<size_t>(n), a);
      const auto& h = m.hom(p);
      if (n != 1 && h.empty()) possible = false;
      choices.push_back(&h);
    }
    if (!possible) continue;
    std::vector<arrow_id> mu(static_cast<size_t>(cap + 1));
    mu[1] = m.unit(a);
    std::function<void(int)> rec = [&](int n) {
      if (n > cap) {
        if (monoid_check(bm, a, mu)) out.push_back({a, mu});
        return;
      }
      if (n == 1) {
        rec(2);
        return;
      }
      for (arrow_id f : *choices[static_cast<size_t>(n)]) {
        mu[static_cast<size_t>(n)] = f;
        rec(n + 1);
      }
    };
    rec(0);
  }
  return out;
}

// --- modules -------------------------------------------------------------------

namespace {

// Derived higher action lambda_n in hom(b^n, m; m); lambda_0 = 1_m.
std::vector<arrow_id> derived_actions(const based_multicategory& bm, const module_datum& d) {
  const multicategory& m = bm.m;
  const int cap = m.arity_cap();
  std::vector<arrow_id> lam(static_cast<size_t>(cap), -1);  // lam[n] for 0 <= n <= cap-1
  lam[0] = m.unit(d.carrier);
  if (cap >= 2) lam[1] = d.action;
  for (int n = 2; n + 1 <= cap; ++n) {
    auto r = m.try_gamma(d.action, {m.unit(bm.basepoint), lam[static_cast<size_t>(n - 1)]});
    if (!r) return {};
    lam[static_cast<size_t>(n)] = *r;
  }
  return lam;
}

}  // namespace

bool module_check(const based_multicategory& bm, const module_datum& d) {
  const multicategory& m = bm.m;
  const int cap = m.arity_cap();
  if (d.carrier < 0 || d.carrier >= m.object_count()) return false;
  if (d.action < 0 || d.action >= m.arrow_count()) return false;
  const profile want{{bm.basepoint, d.carrier}, d.carrier};
  if (!(m.arrow_profile(d.action) == want)) return false;
  if (cap < 2) return false;

  // Unit law: acting by the empty product is the identity.
  if (m.gamma(d.action, {bm.mu[0], m.unit(d.carrier)}) != m.unit(d.carrier)) return false;

  const std::vector<arrow_id> lam = derived_actions(bm, d);
  if (lam.empty()) return false;

  if (cap >= 3) {
    // Associativity against the monoid multiplication.
    const arrow_id two_step = m.gamma(d.action, {m.unit(bm.basepoint), d.action});
    const arrow_id collapsed = m.gamma(d.action, {bm.mu[2], m.unit(d.carrier)});
    if (two_step != collapsed) return false;
    // The induced 2-action must not see the order of its b-inputs.
    if (m.sigma({1, 0, 2}, two_step) != two_step) return false;
  }

  // Higher well-definedness: every way of feeding mu's and a lower action into
  // lambda_k lands on the canonical lambda of the right arity, and each
  // lambda_n is invariant under permutations of its b-block.
  for (int k = 1; k + 1 <= cap; ++k) {
    std::vector<int> ms(static_cast<size_t>(k), 0);
    std::function<bool(int, int)> rec = [&](int slot, int left) {
      if (slot == k) {
        int total = 0;
        for (int v : ms) total += v;
        for (int j = 0; total + j + 1 <= cap; ++j) {
          std::vector<arrow_id> gs;
          for (int v : ms) gs.push_back(bm.mu[static_cast<size_t>(v)]);
          gs.push_back(lam[static_cast<size_t>(j)]);
          if (m.gamma(lam[static_cast<size_t>(k)], gs) != lam[static_cast<size_t>(total + j)])
            return false;
        }
        return true;
      }
      for (int v = 0; v <= left; ++v) {
        ms[static_cast<size_t>(slot)] = v;
        if (!rec(slot + 1, left - v)) return false;
      }
      return true;
    };
    if (!rec(0, cap - 1)) return false;
  }
  for (int n = 2; n + 1 <= cap; ++n) {
    for (const perm& s : all_perms(n)) {
      perm ext = s;
      ext.push_back(n);  // fix the module slot
      if (m.sigma(ext, lam[static_cast<size_t>(n)]) != lam[static_cast<size_t>(n)]) return false;
    }
  }
  return true;
}

std::vector<module_datum> all_module_data(const based_multicategory& bm) {
  const multicategory& m = bm.m;
  std::vector<module_datum> out;
  for (object_id c = 0; c < m.object_count(); ++c) {
    const profile p{{bm.basepoint, c}, c};
    for (arrow_id f : m.hom(p)) {
      module_datum d{c, f};
      if (module_check(bm, d)) out.push_back(d);
    }
  }
  return out;
}

modules_of_result modules_of(const based_multicategory& bm) {
  const multicategory& src = bm.m;
  const int cap = src.arity_cap();
  std::vector<module_datum> data = all_module_data(bm);
  if (data.empty()) throw internal_error("modules_of: no module data (missing basepoint module)");

  // Compatibility of f in hom(m_1..m_k; m) with the actions, slotwise.
  auto compatible = [&](arrow_id f, const std::vector<int>& src_data, int dst_datum) {
    const module_datum& dd = data[static_cast<size_t>(dst_datum)];
    const int k = static_cast<int>(src_data.size());
    for (int i = 0; i < k; ++i) {
      const module_datum& di = data[static_cast<size_t>(src_data[static_cast<size_t>(i)])];
      auto lhs = src.try_gamma(dd.action, {src.unit(bm.basepoint), f});
      if (!lhs) return false;
      std::vector<arrow_id> gs(static_cast<size_t>(k));
      for (int j = 0; j < k; ++j) {
        const module_datum& dj = data[static_cast<size_t>(src_data[static_cast<size_t>(j)])];
        gs[static_cast<size_t>(j)] = (j == i) ? di.action : src.unit(dj.carrier);
      }
      auto core = src.try_gamma(f, gs);
      if (!core) return false;
      // Cycle moving the freed b-input (position i) to the front.
      perm cyc(static_cast<size_t>(k + 1));
      cyc[0] = i;
      for (int j = 1; j <= i; ++j) cyc[static_cast<size_t>(j)] = j - 1;
      for (int j = i + 1; j <= k; ++j) cyc[static_cast<size_t>(j)] = j;
      if (src.sigma(cyc, *core) != *lhs) return false;
    }
    return true;
  };

  multicategory m(cap);
  for (size_t i = 0; i < data.size(); ++i)
    m.add_object(src.object_name(data[i].carrier) + "#" + std::to_string(data[i].action));
  const int n_obj = static_cast<int>(data.size());

  std::vector<arrow_id> underlying;
  std::map<std::pair<profile, arrow_id>, arrow_id> arrow_of;  // (modules profile, src arrow)
  for (int a = 0; a <= cap; ++a) {
    std::vector<int> sd(static_cast<size_t>(a), 0);
    while (true) {
      for (int dst = 0; dst < n_obj; ++dst) {
        profile p;
        p.dst = dst;
        for (int x : sd) p.src.push_back(x);
        profile srcp;
        srcp.dst = data[static_cast<size_t>(dst)].carrier;
        for (int x : sd) srcp.src.push_back(data[static_cast<size_t>(x)].carrier);
        for (arrow_id f : src.hom(srcp)) {
          if (!compatible(f, sd, dst)) continue;
          arrow_of[{p, f}] = m.add_arrow(p);
          underlying.push_back(f);
        }
      }
      int i = a - 1;
      while (i >= 0 && sd[static_cast<size_t>(i)] == n_obj - 1) {
        sd[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++sd[static_cast<size_t>(i)];
    }
  }

  for (int o = 0; o < n_obj; ++o) {
    profile p{{o}, o};
    auto it = arrow_of.find({p, src.unit(data[static_cast<size_t>(o)].carrier)});
    if (it == arrow_of.end()) throw internal_error("modules_of: identity is not compatible");
    m.set_unit(o, it->second);
  }

  for (const auto& [key, id] : arrow_of) {
    const auto& [p, f] = key;
    const int k = static_cast<int>(p.src.size());
    for (const perm& s : all_perms(k)) {
      auto it = arrow_of.find({permuted_profile(s, p), src.sigma(s, f)});
      if (it == arrow_of.end()) throw internal_error("modules_of: sigma closure fails");
      m.set_sym(id, s, it->second);
    }
  }

  std::vector<std::vector<std::pair<profile, arrow_id>>> into(static_cast<size_t>(n_obj));
  for (const auto& [key, id] : arrow_of) into[static_cast<size_t>(key.first.dst)].push_back(key);

  for (const auto& [key, id] : arrow_of) {
    const auto& [p, f] = key;
    const int k = static_cast<int>(p.src.size());
    std::vector<std::pair<profile, arrow_id>> gs(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == k) {
        profile cp;
        cp.dst = p.dst;
        std::vector<arrow_id> mod_gs, src_gs;
        for (const auto& [gp, gf] : gs) {
          for (int x : gp.src) cp.src.push_back(x);
          mod_gs.push_back(arrow_of.at({gp, gf}));
          src_gs.push_back(gf);
        }
        auto it = arrow_of.find({cp, src.gamma(f, src_gs)});
        if (it == arrow_of.end()) throw internal_error("modules_of: composition closure fails");
        m.set_comp(id, mod_gs, it->second);
        return;
      }
      for (const auto& g : into[static_cast<size_t>(p.src[static_cast<size_t>(slot)])]) {
        const int ar = static_cast<int>(g.first.src.size());
        if (ar > left) continue;
        gs[static_cast<size_t>(slot)] = g;
        rec(slot + 1, left - ar);
      }
    };
    rec(0, cap);
  }

  m.finalize();

  // Basepoint: the monoid acting on itself via mu_2.
  const module_datum self{bm.basepoint, bm.mu[2]};
  int base_idx = -1;
  for (size_t i = 0; i < data.size(); ++i)
    if (data[i] == self) base_idx = static_cast<int>(i);
  if (base_idx < 0) throw internal_error("modules_of: basepoint self-action fails module_check");

  std::vector<arrow_id> mu;
  for (int n = 0; n <= cap; ++n) {
    profile p;
    p.dst = base_idx;
    p.src.assign(static_cast<size_t>(n), base_idx);
    auto it = arrow_of.find({p, bm.mu[static_cast<size_t>(n)]});
    if (it == arrow_of.end()) throw internal_error("modules_of: mu_n is not compatible");
    mu.push_back(it->second);
  }

  modules_of_result out;
  out.modules = {std::move(m), base_idx, std::move(mu)};
  out.data = std::move(data);
  out.underlying_arrow = std::move(underlying);
  return out;
}

}  // namespace multikat
