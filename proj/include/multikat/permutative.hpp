#pragma once

#include <map>
#include <string>
#include <vector>

#include "multikat/multicat.hpp"

namespace multikat {

// A finite permutative category: strictly associative and strictly unital
// tensor with a symmetry isomorphism. Objects must be closed under the tensor.
struct permutative_category {
  std::vector<std::string> object_names;
  std::vector<std::string> arrow_names;
  std::vector<std::pair<int, int>> arrow_dom_cod;  // by arrow id
  std::vector<int> identity;                       // per object
  std::map<std::pair<int, int>, int> compose;      // (g, f) -> g.f for composable pairs
  int unit_object = 0;
  std::vector<std::vector<int>> tensor_obj;        // [a][b]
  std::map<std::pair<int, int>, int> tensor_arrow; // (f, g) -> f (x) g
  std::vector<std::vector<int>> symmetry;          // c_{a,b} : a(x)b -> b(x)a

  int object_count() const { return static_cast<int>(object_names.size()); }
  int arrow_count() const { return static_cast<int>(arrow_dom_cod.size()); }
  int compose_arrows(int g, int f) const;  // g.f, throws if not composable
  int tensor_arrows(int f, int g) const;
  int tensor_objects(int a, int b) const { return tensor_obj[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  std::vector<int> hom(int a, int b) const;  // ascending arrow ids
};

validation_report validate_permutative(const permutative_category& p);

// Tensor of a list of objects (left fold; empty list gives the unit).
int tensor_fold_objects(const permutative_category& p, const std::vector<int>& objs);

// The coherence isomorphism  (x)_i objs[s[i]] -> (x)_i objs[i]  assembled from
// adjacent symmetries.
int permutation_isomorphism(const permutative_category& p, const std::vector<int>& objs,
                            const perm& s);

// The multicategory with hom(a_1..a_n; b) = p(a_1 (x) .. (x) a_n, b), based at
// the unit object with mu_n the identities of e.
based_multicategory from_permutative(const permutative_category& p, int arity_cap);

// --- sample inputs ------------------------------------------------------------

// Discrete category on Z/n with tensor = addition mod n.
permutative_category discrete_cyclic(int n);

// One object whose endomorphisms are Z/n under addition; tensor on arrows is
// addition, symmetry is 0.
permutative_category cyclic_delooping(int n);

// Objects {0,1}, discrete, tensor = min(x+y, 1). A monoid that is not a group.
permutative_category saturating_pair();

// Objects Z/2 with hom(a,a) = Z/2, tensor = addition on objects and arrows,
// and the nontrivial symmetry c_{1,1} = -1. Exercises genuinely non-identity
// sigma actions; its K-theory has pi0 = pi1 = Z/2.
permutative_category sign_groupoid();

// The poset 0 <= 1 with tensor = max. Levels of its K-theory contain a
// non-invertible arrow.
permutative_category poset_pair();

}  // namespace multikat
