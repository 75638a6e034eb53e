#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "multikat/finite_category.hpp"
#include "multikat/multicat.hpp"

namespace multikat {

using based_ptr = std::shared_ptr<const based_multicategory>;

struct multifunctor {
  based_ptr source, target;
  std::vector<object_id> obj;  // per source object
  std::vector<arrow_id> arr;   // per source arrow
};

// Structure (and optionally basepoint) preservation, checked exhaustively.
bool check_multifunctor(const multifunctor& f, bool based, std::string* why = nullptr);

multifunctor compose_multifunctors(const multifunctor& g, const multifunctor& f);

// A based multinatural transformation between parallel multifunctors, stored
// by its components. dom/cod index into the functor list of the enclosing
// hom-category when one exists; they are -1 for free-standing values.
struct multinat {
  int dom = -1, cod = -1;
  std::vector<arrow_id> component;  // per source object, an arrow of the target
};

struct enum_options {
  std::int64_t budget = 10'000'000;
};

// All based multifunctors S -> M in canonical order: lexicographic in the
// object map, then in the arrow map. Search strategy: fix the object map
// (basepoint forced), then propagate unit, basepoint, sigma and gamma
// constraints over the arrow variables, branching only where a hom-set leaves
// a genuine choice.
std::vector<multifunctor> enumerate_based_multifunctors(const based_ptr& S, const based_ptr& M,
                                                        const enum_options& opt = {});

// Same search without the basepoint constraints (object map fully free).
std::vector<multifunctor> enumerate_multifunctors_unbased(const based_ptr& S, const based_ptr& M,
                                                          const enum_options& opt = {});

// All based multinatural transformations F -> G (component at the basepoint
// object is the identity), in component-lexicographic order.
std::vector<multinat> enumerate_multinat(const multifunctor& F, const multifunctor& G,
                                         const enum_options& opt = {});

// The hom-category Mult*(S, M): objects are the based multifunctors, arrows
// the based multinatural transformations, composition is componentwise gamma.
struct hom_category_result {
  based_ptr source, target;
  std::vector<multifunctor> functors;
  std::vector<multinat> transformations;  // ordered by (dom, cod, components)
  category_ptr cat;

  int functor_index(const multifunctor& f) const;
  int transformation_index(int dom, int cod, const std::vector<arrow_id>& components) const;

  struct index_data;
  std::shared_ptr<const index_data> index;
};

hom_category_result hom_category(const based_ptr& S, const based_ptr& M,
                                 const enum_options& opt = {});

// Functor between hom-categories given by precomposition with h : S' -> S.
cat_functor precompose_functor(const hom_category_result& level_S,
                               const hom_category_result& level_Sprime, const multifunctor& h);

// Functor between hom-categories given by postcomposition with u : M -> N.
cat_functor postcompose_functor(const hom_category_result& S_to_M,
                                const hom_category_result& S_to_N, const multifunctor& u);

// Mult*(I, M) is isomorphic to the arrow category of Mult*(E, M); the explicit
// isomorphism maps a multifunctor on I to the module map it parameterizes.
struct lemma_arrow_witness {
  bool ok = false;
  std::string detail;
  int lhs_objects = 0, lhs_arrows = 0;
  int rhs_objects = 0, rhs_arrows = 0;
  std::vector<int> object_map, arrow_map;  // the isomorphism, when ok
};

lemma_arrow_witness check_lemma_arrow(const based_ptr& M, const enum_options& opt = {});

// A based multifunctor A -> B bijective on objects and arrows, if one exists.
std::optional<multifunctor> find_based_isomorphism(const based_ptr& A, const based_ptr& B,
                                                   const enum_options& opt = {});

}  // namespace multikat
