#include "multikat/permutative.hpp"

#include <functional>

namespace multikat {

int permutative_category::compose_arrows(int g, int f) const {
  auto it = compose.find({g, f});
  if (it == compose.end())
    throw internal_error("permutative category: composition not defined");
  return it->second;
}

int permutative_category::tensor_arrows(int f, int g) const {
  auto it = tensor_arrow.find({f, g});
  if (it == tensor_arrow.end())
    throw internal_error("permutative category: tensor of arrows not defined");
  return it->second;
}

std::vector<int> permutative_category::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < arrow_count(); ++f)
    if (arrow_dom_cod[static_cast<size_t>(f)] == std::pair<int, int>{a, b}) out.push_back(f);
  return out;
}

validation_report validate_permutative(const permutative_category& p) {
  validation_report rep;
  auto structural = [&](std::string msg) { rep.violations.push_back({true, std::move(msg)}); };
  auto axiom = [&](std::string msg) { rep.violations.push_back({false, std::move(msg)}); };

  const int no = p.object_count();
  const int na = p.arrow_count();
  if (no == 0) {
    structural("permutative category has no objects");
    return rep;
  }
  if (p.unit_object < 0 || p.unit_object >= no) {
    structural("unit object out of range");
    return rep;
  }
  if (static_cast<int>(p.identity.size()) != no) {
    structural("identity table has wrong size");
    return rep;
  }
  if (static_cast<int>(p.tensor_obj.size()) != no) {
    structural("tensor object table not closed over the object set");
    return rep;
  }
  for (int a = 0; a < no; ++a) {
    if (static_cast<int>(p.tensor_obj[static_cast<size_t>(a)].size()) != no) {
      structural("tensor object table not closed over the object set");
      return rep;
    }
    for (int b = 0; b < no; ++b) {
      const int t = p.tensor_objects(a, b);
      if (t < 0 || t >= no) {
        structural("tensor object table not closed over the object set");
        return rep;
      }
    }
  }

  for (int f = 0; f < na; ++f) {
    auto [d, c] = p.arrow_dom_cod[static_cast<size_t>(f)];
    if (d < 0 || d >= no || c < 0 || c >= no) structural("arrow with unknown endpoint");
  }
  if (!rep.ok()) return rep;

  auto dom = [&](int f) { return p.arrow_dom_cod[static_cast<size_t>(f)].first; };
  auto cod = [&](int f) { return p.arrow_dom_cod[static_cast<size_t>(f)].second; };

  for (int a = 0; a < no; ++a) {
    const int i = p.identity[static_cast<size_t>(a)];
    if (i < 0 || i >= na || dom(i) != a || cod(i) != a) structural("bad identity arrow");
  }
  // Category axioms.
  for (int f = 0; f < na; ++f) {
    for (int g = 0; g < na; ++g) {
      const bool composable = cod(f) == dom(g);
      const bool present = p.compose.count({g, f}) > 0;
      if (composable != present) {
        structural("composition table mismatch");
        continue;
      }
      if (!composable) continue;
      const int gf = p.compose.at({g, f});
      if (dom(gf) != dom(f) || cod(gf) != cod(g)) axiom("composite endpoints wrong");
    }
    if (p.compose_arrows(f, p.identity[static_cast<size_t>(dom(f))]) != f ||
        p.compose_arrows(p.identity[static_cast<size_t>(cod(f))], f) != f)
      axiom("unit law fails in underlying category");
  }
  for (int f = 0; f < na && rep.ok(); ++f)
    for (int g = 0; g < na; ++g) {
      if (cod(f) != dom(g)) continue;
      for (int h = 0; h < na; ++h) {
        if (cod(g) != dom(h)) continue;
        if (p.compose_arrows(h, p.compose_arrows(g, f)) !=
            p.compose_arrows(p.compose_arrows(h, g), f))
          axiom("associativity fails in underlying category");
      }
    }

  // Tensor: totality on arrows, bifunctoriality, strictness.
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      if (p.tensor_arrow.count({f, g}) == 0) {
        structural("tensor of arrows missing an entry");
        continue;
      }
      const int t = p.tensor_arrow.at({f, g});
      if (dom(t) != p.tensor_objects(dom(f), dom(g)) || cod(t) != p.tensor_objects(cod(f), cod(g)))
        axiom("tensor of arrows has wrong endpoints");
    }
  if (!rep.ok()) return rep;

  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      if (p.tensor_arrows(p.identity[static_cast<size_t>(a)], p.identity[static_cast<size_t>(b)]) !=
          p.identity[static_cast<size_t>(p.tensor_objects(a, b))])
        axiom("tensor does not preserve identities");
      for (int c = 0; c < no; ++c)
        if (p.tensor_objects(p.tensor_objects(a, b), c) != p.tensor_objects(a, p.tensor_objects(b, c)))
          axiom("tensor not strictly associative on objects");
      if (p.tensor_objects(p.unit_object, a) != a || p.tensor_objects(a, p.unit_object) != a)
        axiom("tensor not strictly unital on objects");
    }
  for (int f = 0; f < na; ++f) {
    if (p.tensor_arrows(p.identity[static_cast<size_t>(p.unit_object)], f) != f ||
        p.tensor_arrows(f, p.identity[static_cast<size_t>(p.unit_object)]) != f)
      axiom("tensor not strictly unital on arrows");
    for (int g = 0; g < na; ++g) {
      for (int h = 0; h < na; ++h)
        if (p.tensor_arrows(p.tensor_arrows(f, g), h) != p.tensor_arrows(f, p.tensor_arrows(g, h)))
          axiom("tensor not strictly associative on arrows");
      // interchange
      for (int f2 = 0; f2 < na; ++f2) {
        if (cod(f2) != dom(f)) continue;
        for (int g2 = 0; g2 < na; ++g2) {
          if (cod(g2) != dom(g)) continue;
          if (p.tensor_arrows(p.compose_arrows(f, f2), p.compose_arrows(g, g2)) !=
              p.compose_arrows(p.tensor_arrows(f, g), p.tensor_arrows(f2, g2)))
            axiom("tensor interchange fails");
        }
      }
    }
  }

  // Symmetry.
  if (static_cast<int>(p.symmetry.size()) != no) {
    structural("symmetry table has wrong size");
    return rep;
  }
  for (int a = 0; a < no; ++a) {
    if (static_cast<int>(p.symmetry[static_cast<size_t>(a)].size()) != no) {
      structural("symmetry table has wrong size");
      return rep;
    }
    for (int b = 0; b < no; ++b) {
      const int c = p.symmetry[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (c < 0 || c >= na || dom(c) != p.tensor_objects(a, b) || cod(c) != p.tensor_objects(b, a)) {
        structural("symmetry arrow has wrong endpoints");
        continue;
      }
      const int cba = p.symmetry[static_cast<size_t>(b)][static_cast<size_t>(a)];
      if (p.compose_arrows(cba, c) != p.identity[static_cast<size_t>(p.tensor_objects(a, b))])
        axiom("symmetry is not an involution");
      if (p.symmetry[static_cast<size_t>(p.unit_object)][static_cast<size_t>(a)] !=
          p.identity[static_cast<size_t>(a)])
        axiom("symmetry at the unit is not the identity");
    }
  }
  if (!rep.ok()) return rep;
  // Naturality and the permutative hexagon.
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      const int lhs = p.compose_arrows(p.symmetry[static_cast<size_t>(cod(f))][static_cast<size_t>(cod(g))],
                                       p.tensor_arrows(f, g));
      const int rhs = p.compose_arrows(p.tensor_arrows(g, f),
                                       p.symmetry[static_cast<size_t>(dom(f))][static_cast<size_t>(dom(g))]);
      if (lhs != rhs) axiom("symmetry is not natural");
    }
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b)
      for (int c = 0; c < no; ++c) {
        const int left = p.symmetry[static_cast<size_t>(p.tensor_objects(a, b))][static_cast<size_t>(c)];
        const int right = p.compose_arrows(
            p.tensor_arrows(p.symmetry[static_cast<size_t>(a)][static_cast<size_t>(c)],
                            p.identity[static_cast<size_t>(b)]),
            p.tensor_arrows(p.identity[static_cast<size_t>(a)],
                            p.symmetry[static_cast<size_t>(b)][static_cast<size_t>(c)]));
        if (left != right) axiom("permutative hexagon fails");
      }

  return rep;
}

int tensor_fold_objects(const permutative_category& p, const std::vector<int>& objs) {
  int acc = p.unit_object;
  for (int a : objs) acc = p.tensor_objects(acc, a);
  return acc;
}

namespace {

int tensor_fold_arrows(const permutative_category& p, const std::vector<int>& fs) {
  int acc = p.identity[static_cast<size_t>(p.unit_object)];
  for (int f : fs) acc = p.tensor_arrows(acc, f);
  return acc;
}

int identity_of_fold(const permutative_category& p, const std::vector<int>& objs) {
  return p.identity[static_cast<size_t>(tensor_fold_objects(p, objs))];
}

}  // namespace

int permutation_isomorphism(const permutative_category& p, const std::vector<int>& objs,
                            const perm& s) {
  // Bubble the permuted list back to the original order, composing one adjacent
  // symmetry per swap.
  std::vector<int> cur;
  cur.reserve(objs.size());
  for (int v : s) cur.push_back(objs[static_cast<size_t>(v)]);
  int acc = identity_of_fold(p, cur);
  std::vector<int> target = objs;
  for (size_t i = 0; i < target.size(); ++i) {
    if (cur[i] == target[i]) continue;
    size_t j = i + 1;
    while (j < cur.size() && cur[j] != target[i]) ++j;
    if (j == cur.size()) throw internal_error("permutation_isomorphism: lists not related");
    for (size_t q = j; q > i; --q) {
      // swap positions q-1, q
      std::vector<int> pre(cur.begin(), cur.begin() + static_cast<long>(q - 1));
      std::vector<int> post(cur.begin() + static_cast<long>(q + 1), cur.end());
      const int x = cur[q - 1];
      const int y = cur[q];
      int step = p.tensor_arrows(
          p.tensor_arrows(identity_of_fold(p, pre),
                          p.symmetry[static_cast<size_t>(x)][static_cast<size_t>(y)]),
          identity_of_fold(p, post));
      acc = p.compose_arrows(step, acc);
      std::swap(cur[q - 1], cur[q]);
    }
  }
  return acc;
}

based_multicategory from_permutative(const permutative_category& p, int arity_cap) {
  {
    validation_report rep = validate_permutative(p);
    if (!rep.ok())
      throw invalid_input_error("invalid permutative category:\n" + rep.to_string());
  }

  multicategory m(arity_cap);
  const int no = p.object_count();
  for (int a = 0; a < no; ++a) m.add_object(p.object_names[static_cast<size_t>(a)]);

  // One multicategory arrow per (profile, underlying arrow of p).
  std::map<std::pair<profile, int>, arrow_id> arrow_of;
  std::vector<int> underlying;  // by multicategory arrow id
  for (int a = 0; a <= arity_cap; ++a) {
    std::vector<object_id> src(static_cast<size_t>(a), 0);
    while (true) {
      const int folded = tensor_fold_objects(p, src);
      for (object_id dst = 0; dst < no; ++dst) {
        profile pr{src, dst};
        for (int f : p.hom(folded, dst)) {
          arrow_of[{pr, f}] = m.add_arrow(pr);
          underlying.push_back(f);
        }
      }
      int i = a - 1;
      while (i >= 0 && src[static_cast<size_t>(i)] == no - 1) {
        src[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++src[static_cast<size_t>(i)];
    }
  }

  for (object_id a = 0; a < no; ++a)
    m.set_unit(a, arrow_of.at({profile{{a}, a}, p.identity[static_cast<size_t>(a)]}));

  for (const auto& [key, id] : arrow_of) {
    const auto& [pr, f] = key;
    const int k = static_cast<int>(pr.src.size());
    for (const perm& s : all_perms(k)) {
      const profile pp = permuted_profile(s, pr);
      const int u = permutation_isomorphism(p, pr.src, s);
      m.set_sym(id, s, arrow_of.at({pp, p.compose_arrows(f, u)}));
    }
  }

  std::vector<std::vector<std::pair<profile, int>>> into(static_cast<size_t>(no));
  for (const auto& [key, id] : arrow_of) into[static_cast<size_t>(key.first.dst)].push_back(key);

  for (const auto& [key, id] : arrow_of) {
    const auto& [pr, f] = key;
    const int k = static_cast<int>(pr.src.size());
    std::vector<std::pair<profile, int>> gs(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == k) {
        profile cp;
        cp.dst = pr.dst;
        std::vector<arrow_id> ids;
        std::vector<int> parts;
        for (const auto& [gp, gf] : gs) {
          for (object_id x : gp.src) cp.src.push_back(x);
          ids.push_back(arrow_of.at({gp, gf}));
          parts.push_back(gf);
        }
        const int comp = p.compose_arrows(f, tensor_fold_arrows(p, parts));
        m.set_comp(id, ids, arrow_of.at({cp, comp}));
        return;
      }
      for (const auto& g : into[static_cast<size_t>(pr.src[static_cast<size_t>(slot)])]) {
        const int ar = static_cast<int>(g.first.src.size());
        if (ar > left) continue;
        gs[static_cast<size_t>(slot)] = g;
        rec(slot + 1, left - ar);
      }
    };
    rec(0, arity_cap);
  }

  m.finalize();

  std::vector<arrow_id> mu;
  const int ide = p.identity[static_cast<size_t>(p.unit_object)];
  for (int n = 0; n <= arity_cap; ++n) {
    profile pr;
    pr.dst = p.unit_object;
    pr.src.assign(static_cast<size_t>(n), p.unit_object);
    mu.push_back(arrow_of.at({pr, ide}));
  }
  return {std::move(m), p.unit_object, std::move(mu)};
}

// --- samples -------------------------------------------------------------------

namespace {

permutative_category discrete_on_monoid(int n, const std::function<int(int, int)>& times,
                                        const std::function<std::string(int)>& name) {
  permutative_category p;
  for (int a = 0; a < n; ++a) {
    p.object_names.push_back(name(a));
    p.arrow_names.push_back("id" + name(a));
    p.arrow_dom_cod.push_back({a, a});
    p.identity.push_back(a);
  }
  for (int a = 0; a < n; ++a) p.compose[{a, a}] = a;
  p.unit_object = 0;
  p.tensor_obj.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      p.tensor_obj[static_cast<size_t>(a)][static_cast<size_t>(b)] = times(a, b);
      p.tensor_arrow[{a, b}] = times(a, b);
    }
  p.symmetry.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      p.symmetry[static_cast<size_t>(a)][static_cast<size_t>(b)] = times(a, b);
  return p;
}

}  // namespace

permutative_category discrete_cyclic(int n) {
  return discrete_on_monoid(
      n, [n](int a, int b) { return (a + b) % n; },
      [](int a) { return std::to_string(a); });
}

permutative_category saturating_pair() {
  return discrete_on_monoid(
      2, [](int a, int b) { return std::min(a + b, 1); },
      [](int a) { return std::to_string(a); });
}

permutative_category cyclic_delooping(int n) {
  permutative_category p;
  p.object_names = {"e"};
  p.unit_object = 0;
  for (int g = 0; g < n; ++g) {
    p.arrow_names.push_back(std::to_string(g));
    p.arrow_dom_cod.push_back({0, 0});
  }
  p.identity = {0};
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      p.compose[{g, h}] = (g + h) % n;
      p.tensor_arrow[{g, h}] = (g + h) % n;
    }
  p.tensor_obj = {{0}};
  p.symmetry = {{0}};
  return p;
}

permutative_category sign_groupoid() {
  permutative_category p;
  p.object_names = {"0", "1"};
  p.unit_object = 0;
  // Arrow id 2a + s is the endomorphism of object a with sign s.
  for (int a = 0; a < 2; ++a)
    for (int s = 0; s < 2; ++s) {
      p.arrow_names.push_back(std::string(s ? "-" : "+") + "1_" + std::to_string(a));
      p.arrow_dom_cod.push_back({a, a});
    }
  p.identity = {0, 2};
  for (int a = 0; a < 2; ++a)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) p.compose[{2 * a + s, 2 * a + t}] = 2 * a + ((s + t) % 2);
  p.tensor_obj = {{0, 1}, {1, 0}};
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) {
      const int a = (f / 2 + g / 2) % 2;
      const int s = (f % 2 + g % 2) % 2;
      p.tensor_arrow[{f, g}] = 2 * a + s;
    }
  // Koszul sign: c_{1,1} = -1_0, all other components are identities.
  p.symmetry = {{0, 2}, {2, 1}};
  return p;
}

permutative_category poset_pair() {
  permutative_category p;
  p.object_names = {"0", "1"};
  p.unit_object = 0;
  p.arrow_names = {"id0", "le", "id1"};  // le : 0 -> 1
  p.arrow_dom_cod = {{0, 0}, {0, 1}, {1, 1}};
  p.identity = {0, 2};
  p.compose[{0, 0}] = 0;
  p.compose[{1, 0}] = 1;
  p.compose[{2, 1}] = 1;
  p.compose[{2, 2}] = 2;
  p.tensor_obj = {{0, 1}, {1, 1}};
  // f (x) g is the unique arrow max(dom f, dom g) -> max(cod f, cod g).
  auto arrow_between = [](int a, int b) { return a == b ? (a == 0 ? 0 : 2) : 1; };
  for (int f = 0; f < 3; ++f)
    for (int g = 0; g < 3; ++g) {
      auto [fd, fc] = std::pair<int, int>{f == 0 ? 0 : (f == 1 ? 0 : 1), f == 0 ? 0 : 1};
      auto [gd, gc] = std::pair<int, int>{g == 0 ? 0 : (g == 1 ? 0 : 1), g == 0 ? 0 : 1};
      p.tensor_arrow[{f, g}] = arrow_between(std::max(fd, gd), std::max(fc, gc));
    }
  p.symmetry = {{0, 2}, {2, 2}};
  return p;
}

}  // namespace multikat
