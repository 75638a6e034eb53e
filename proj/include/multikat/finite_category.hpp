#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "multikat/multicat.hpp"

namespace multikat {

// An ordinary finite 1-category. Composition is a callback so that large
// hom-categories never materialize a quadratic table; table-backed categories
// are built with table_category().
struct finite_category {
  int n_objects = 0;
  std::vector<std::string> object_labels;        // optional
  std::vector<std::pair<int, int>> arrows;       // (dom, cod) per arrow id
  std::vector<int> identity;                     // per object
  std::function<int(int, int)> compose_fn;       // compose_fn(g, f) = g.f
  std::map<std::pair<int, int>, std::vector<int>> hom_index;

  void finalize();
  int arrow_count() const { return static_cast<int>(arrows.size()); }
  int dom(int f) const { return arrows[static_cast<size_t>(f)].first; }
  int cod(int f) const { return arrows[static_cast<size_t>(f)].second; }
  const std::vector<int>& hom_set(int a, int b) const;
  // g.f with composability and endpoint checks.
  int compose(int g, int f) const;
};

using category_ptr = std::shared_ptr<const finite_category>;

category_ptr table_category(int n_objects, std::vector<std::pair<int, int>> arrows,
                            std::vector<int> identity, std::map<std::pair<int, int>, int> table);

// Exhaustive axiom check; meant for desk-scale categories.
validation_report validate_category(const finite_category& c);

struct product_category_result {
  category_ptr cat;
  std::vector<int> obj_counts, arr_counts;
  int encode_object(const std::vector<int>& tuple) const;
  std::vector<int> decode_object(int idx) const;
  int encode_arrow(const std::vector<int>& tuple) const;
  std::vector<int> decode_arrow(int idx) const;
};

product_category_result product_category(const std::vector<category_ptr>& factors);

struct cat_functor {
  category_ptr dom_cat, cod_cat;
  std::vector<int> obj;  // per object of dom_cat
  std::vector<int> arr;  // per arrow of dom_cat
};

// Identity/endpoint/composition preservation, checked exhaustively.
bool check_functor(const cat_functor& f, std::string* why = nullptr);

cat_functor compose_functors(const cat_functor& g, const cat_functor& f);
cat_functor identity_functor(const category_ptr& c);

struct arrow_category_result {
  category_ptr cat;                           // objects are the arrows of c
  std::vector<std::pair<int, int>> squares;   // arrow i of cat is the square (u, v)
};

// The functor category [1] -> c: objects are arrows, morphisms are commuting
// squares (u, v) with v . f = g . u.
arrow_category_result arrow_category(const category_ptr& c);

// Arrow invertibility / groupoid checks (brute force).
bool is_iso(const finite_category& c, int f);
bool is_groupoid(const finite_category& c);

}  // namespace multikat
