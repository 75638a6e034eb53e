#include "multikat/finite_category.hpp"

namespace multikat {

void finite_category::finalize() {
  hom_index.clear();
  for (int f = 0; f < arrow_count(); ++f) hom_index[arrows[static_cast<size_t>(f)]].push_back(f);
}

const std::vector<int>& finite_category::hom_set(int a, int b) const {
  static const std::vector<int> empty;
  auto it = hom_index.find({a, b});
  return it == hom_index.end() ? empty : it->second;
}

int finite_category::compose(int g, int f) const {
  if (cod(f) != dom(g)) throw internal_error("finite_category: arrows not composable");
  const int r = compose_fn(g, f);
  if (r < 0 || dom(r) != dom(f) || cod(r) != cod(g))
    throw internal_error("finite_category: composite has wrong endpoints");
  return r;
}

category_ptr table_category(int n_objects, std::vector<std::pair<int, int>> arrows,
                            std::vector<int> identity, std::map<std::pair<int, int>, int> table) {
  auto c = std::make_shared<finite_category>();
  c->n_objects = n_objects;
  c->arrows = std::move(arrows);
  c->identity = std::move(identity);
  auto tbl = std::make_shared<std::map<std::pair<int, int>, int>>(std::move(table));
  c->compose_fn = [tbl](int g, int f) {
    auto it = tbl->find({g, f});
    return it == tbl->end() ? -1 : it->second;
  };
  c->finalize();
  return c;
}

validation_report validate_category(const finite_category& c) {
  validation_report rep;
  auto structural = [&](std::string msg) { rep.violations.push_back({true, std::move(msg)}); };
  auto axiom = [&](std::string msg) { rep.violations.push_back({false, std::move(msg)}); };

  if (static_cast<int>(c.identity.size()) != c.n_objects) {
    structural("identity table has wrong size");
    return rep;
  }
  for (int a = 0; a < c.n_objects; ++a) {
    const int i = c.identity[static_cast<size_t>(a)];
    if (i < 0 || i >= c.arrow_count() || c.dom(i) != a || c.cod(i) != a) {
      structural("bad identity arrow at object " + std::to_string(a));
      return rep;
    }
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.compose(f, c.identity[static_cast<size_t>(c.dom(f))]) != f ||
        c.compose(c.identity[static_cast<size_t>(c.cod(f))], f) != f)
      axiom("unit law fails at arrow " + std::to_string(f));
  }
  // composability closure + associativity
  for (int f = 0; f < c.arrow_count(); ++f) {
    for (int b = 0; b < c.n_objects; ++b) {
      for (int g : c.hom_set(c.cod(f), b)) {
        const int gf = c.compose(g, f);
        if (c.dom(gf) != c.dom(f) || c.cod(gf) != b) {
          axiom("composite endpoints wrong");
          continue;
        }
        for (int d = 0; d < c.n_objects; ++d)
          for (int h : c.hom_set(b, d))
            if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
              axiom("associativity fails");
      }
    }
  }
  return rep;
}

product_category_result product_category(const std::vector<category_ptr>& factors) {
  product_category_result out;
  out.obj_counts.reserve(factors.size());
  out.arr_counts.reserve(factors.size());
  int n_obj = 1, n_arr = 1;
  for (const auto& f : factors) {
    out.obj_counts.push_back(f->n_objects);
    out.arr_counts.push_back(f->arrow_count());
    n_obj *= f->n_objects;
    n_arr *= f->arrow_count();
  }

  auto c = std::make_shared<finite_category>();
  c->n_objects = n_obj;

  auto encode = [](const std::vector<int>& counts, const std::vector<int>& t) {
    int idx = 0;
    for (size_t i = 0; i < counts.size(); ++i) idx = idx * counts[i] + t[i];
    return idx;
  };
  auto decode = [](const std::vector<int>& counts, int idx) {
    std::vector<int> t(counts.size());
    for (size_t i = counts.size(); i-- > 0;) {
      t[i] = idx % counts[i];
      idx /= counts[i];
    }
    return t;
  };

  c->arrows.resize(static_cast<size_t>(n_arr));
  for (int i = 0; i < n_arr; ++i) {
    std::vector<int> t = decode(out.arr_counts, i);
    std::vector<int> d(factors.size()), cc(factors.size());
    for (size_t q = 0; q < factors.size(); ++q) {
      d[q] = factors[q]->dom(t[q]);
      cc[q] = factors[q]->cod(t[q]);
    }
    c->arrows[static_cast<size_t>(i)] = {encode(out.obj_counts, d), encode(out.obj_counts, cc)};
  }
  c->identity.resize(static_cast<size_t>(n_obj));
  for (int o = 0; o < n_obj; ++o) {
    std::vector<int> t = decode(out.obj_counts, o);
    std::vector<int> ids(factors.size());
    for (size_t q = 0; q < factors.size(); ++q)
      ids[q] = factors[q]->identity[static_cast<size_t>(t[q])];
    c->identity[static_cast<size_t>(o)] = encode(out.arr_counts, ids);
  }
  std::vector<category_ptr> fac = factors;
  std::vector<int> arr_counts = out.arr_counts;
  c->compose_fn = [fac, arr_counts](int g, int f) {
    int idx = 0;
    // componentwise composition, recomputing the mixed-radix digits
    std::vector<int> tg(fac.size()), tf(fac.size());
    int gg = g, ff = f;
    for (size_t i = fac.size(); i-- > 0;) {
      tg[i] = gg % arr_counts[i];
      gg /= arr_counts[i];
      tf[i] = ff % arr_counts[i];
      ff /= arr_counts[i];
    }
    int out_idx = 0;
    for (size_t i = 0; i < fac.size(); ++i) {
      const int r = fac[i]->compose(tg[i], tf[i]);
      if (r < 0) return -1;
      out_idx = out_idx * arr_counts[i] + r;
    }
    return out_idx;
  };
  c->finalize();
  out.cat = c;
  return out;
}

int product_category_result::encode_object(const std::vector<int>& tuple) const {
  int idx = 0;
  for (size_t i = 0; i < obj_counts.size(); ++i) idx = idx * obj_counts[i] + tuple[i];
  return idx;
}

std::vector<int> product_category_result::decode_object(int idx) const {
  std::vector<int> t(obj_counts.size());
  for (size_t i = obj_counts.size(); i-- > 0;) {
    t[i] = idx % obj_counts[i];
    idx /= obj_counts[i];
  }
  return t;
}

int product_category_result::encode_arrow(const std::vector<int>& tuple) const {
  int idx = 0;
  for (size_t i = 0; i < arr_counts.size(); ++i) idx = idx * arr_counts[i] + tuple[i];
  return idx;
}

std::vector<int> product_category_result::decode_arrow(int idx) const {
  std::vector<int> t(arr_counts.size());
  for (size_t i = arr_counts.size(); i-- > 0;) {
    t[i] = idx % arr_counts[i];
    idx /= arr_counts[i];
  }
  return t;
}

bool check_functor(const cat_functor& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const finite_category& c = *f.dom_cat;
  const finite_category& d = *f.cod_cat;
  if (static_cast<int>(f.obj.size()) != c.n_objects ||
      static_cast<int>(f.arr.size()) != c.arrow_count())
    return fail("functor tables have wrong size");
  for (int a = 0; a < c.n_objects; ++a)
    if (f.arr[static_cast<size_t>(c.identity[static_cast<size_t>(a)])] !=
        d.identity[static_cast<size_t>(f.obj[static_cast<size_t>(a)])])
      return fail("functor does not preserve the identity of object " + std::to_string(a));
  for (int g = 0; g < c.arrow_count(); ++g) {
    const int img = f.arr[static_cast<size_t>(g)];
    if (d.dom(img) != f.obj[static_cast<size_t>(c.dom(g))] ||
        d.cod(img) != f.obj[static_cast<size_t>(c.cod(g))])
      return fail("functor image of arrow " + std::to_string(g) + " has wrong endpoints");
  }
  for (int g = 0; g < c.arrow_count(); ++g)
    for (int b = 0; b < c.n_objects; ++b)
      for (int h : c.hom_set(c.cod(g), b))
        if (f.arr[static_cast<size_t>(c.compose(h, g))] !=
            d.compose(f.arr[static_cast<size_t>(h)], f.arr[static_cast<size_t>(g)]))
          return fail("functor does not preserve a composite");
  return true;
}

cat_functor compose_functors(const cat_functor& g, const cat_functor& f) {
  cat_functor out;
  out.dom_cat = f.dom_cat;
  out.cod_cat = g.cod_cat;
  out.obj.resize(f.obj.size());
  out.arr.resize(f.arr.size());
  for (size_t i = 0; i < f.obj.size(); ++i)
    out.obj[i] = g.obj[static_cast<size_t>(f.obj[i])];
  for (size_t i = 0; i < f.arr.size(); ++i)
    out.arr[i] = g.arr[static_cast<size_t>(f.arr[i])];
  return out;
}

cat_functor identity_functor(const category_ptr& c) {
  cat_functor out;
  out.dom_cat = c;
  out.cod_cat = c;
  out.obj.resize(static_cast<size_t>(c->n_objects));
  out.arr.resize(static_cast<size_t>(c->arrow_count()));
  for (int i = 0; i < c->n_objects; ++i) out.obj[static_cast<size_t>(i)] = i;
  for (int i = 0; i < c->arrow_count(); ++i) out.arr[static_cast<size_t>(i)] = i;
  return out;
}

arrow_category_result arrow_category(const category_ptr& cp) {
  const finite_category& c = *cp;
  arrow_category_result out;
  auto ac = std::make_shared<finite_category>();
  ac->n_objects = c.arrow_count();

  // Squares (u, v) : f -> g with v.f = g.u, ordered by (f, g, u, v).
  std::map<std::pair<int, int>, int> table;  // filled after arrows are listed
  for (int f = 0; f < c.arrow_count(); ++f)
    for (int g = 0; g < c.arrow_count(); ++g)
      for (int u : c.hom_set(c.dom(f), c.dom(g)))
        for (int v : c.hom_set(c.cod(f), c.cod(g)))
          if (c.compose(v, f) == c.compose(g, u)) {
            ac->arrows.push_back({f, g});
            out.squares.push_back({u, v});
          }

  ac->identity.resize(static_cast<size_t>(c.arrow_count()), -1);
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> index;
  for (int i = 0; i < static_cast<int>(ac->arrows.size()); ++i)
    index[{ac->arrows[static_cast<size_t>(i)], out.squares[static_cast<size_t>(i)]}] = i;
  for (int f = 0; f < c.arrow_count(); ++f) {
    auto it = index.find({{f, f},
                          {c.identity[static_cast<size_t>(c.dom(f))],
                           c.identity[static_cast<size_t>(c.cod(f))]}});
    if (it == index.end()) throw internal_error("arrow_category: identity square missing");
    ac->identity[static_cast<size_t>(f)] = it->second;
  }

  auto squares = std::make_shared<std::vector<std::pair<int, int>>>(out.squares);
  auto arrs = std::make_shared<std::vector<std::pair<int, int>>>(ac->arrows);
  auto idx = std::make_shared<decltype(index)>(std::move(index));
  category_ptr base = cp;
  ac->compose_fn = [squares, arrs, idx, base](int g, int f) -> int {
    const auto& [u1, v1] = (*squares)[static_cast<size_t>(f)];
    const auto& [u2, v2] = (*squares)[static_cast<size_t>(g)];
    const std::pair<int, int> key = {(*arrs)[static_cast<size_t>(f)].first,
                                     (*arrs)[static_cast<size_t>(g)].second};
    auto it = idx->find({key, {base->compose(u2, u1), base->compose(v2, v1)}});
    return it == idx->end() ? -1 : it->second;
  };
  ac->finalize();
  out.cat = ac;
  return out;
}

bool is_iso(const finite_category& c, int f) {
  for (int g : c.hom_set(c.cod(f), c.dom(f)))
    if (c.compose(g, f) == c.identity[static_cast<size_t>(c.dom(f))] &&
        c.compose(f, g) == c.identity[static_cast<size_t>(c.cod(f))])
      return true;
  return false;
}

bool is_groupoid(const finite_category& c) {
  for (int f = 0; f < c.arrow_count(); ++f)
    if (!is_iso(c, f)) return false;
  return true;
}

}  // namespace multikat
