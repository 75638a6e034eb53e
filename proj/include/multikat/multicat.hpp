#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multikat/common.hpp"

namespace multikat {

using object_id = int;
using arrow_id = int;

// The shape of a multimorphism: an ordered list of source objects and a target.
struct profile {
  std::vector<object_id> src;
  object_id dst = 0;
  auto operator<=>(const profile&) const = default;
};

// Profile of sigma* f when f has this profile: src'[i] = src[s[i]].
profile permuted_profile(const perm& s, const profile& p);

// A finite symmetric multicategory with every table stored explicitly for
// arities 0..arity_cap. Composition gamma(f; g_1..g_k) is defined whenever the
// profiles match and the composite arity still fits under the cap.
//
// Symmetric-group convention: sigma* maps hom(a_1..a_n; b) to
// hom(a_{s(1)}..a_{s(n)}; b) and composition of actions is contravariant,
// (s.t)* = t* s*.
class multicategory {
 public:
  explicit multicategory(int arity_cap) : arity_cap_(arity_cap) {}

  int arity_cap() const { return arity_cap_; }
  int object_count() const { return static_cast<int>(object_names_.size()); }
  int arrow_count() const { return static_cast<int>(arrow_profiles_.size()); }

  object_id add_object(std::string name);
  arrow_id add_arrow(profile p);
  void set_unit(object_id a, arrow_id f);
  void set_sym(arrow_id f, const perm& s, arrow_id image);
  void set_comp(arrow_id f, std::vector<arrow_id> gs, arrow_id result);

  // Builds the fast lookup tables. Call once after all tables are filled.
  void finalize();

  const profile& arrow_profile(arrow_id f) const { return arrow_profiles_[static_cast<size_t>(f)]; }
  int arity(arrow_id f) const { return static_cast<int>(arrow_profile(f).src.size()); }
  const std::string& object_name(object_id a) const { return object_names_[static_cast<size_t>(a)]; }
  const std::vector<std::string>& object_names() const { return object_names_; }

  // Hom-set of a profile in canonical (ascending id) order; empty if absent.
  const std::vector<arrow_id>& hom(const profile& p) const;

  arrow_id unit(object_id a) const { return units_[static_cast<size_t>(a)]; }
  const std::vector<arrow_id>& units() const { return units_; }

  arrow_id sigma(const perm& s, arrow_id f) const;
  std::optional<arrow_id> try_sigma(const perm& s, arrow_id f) const;

  arrow_id gamma(arrow_id f, const std::vector<arrow_id>& gs) const;
  std::optional<arrow_id> try_gamma(arrow_id f, const std::vector<arrow_id>& gs) const;

  // gamma(g; f) for unary g and f. Dense fast path, used by hom-category
  // composition. Returns -1 when undefined.
  arrow_id compose1(arrow_id g, arrow_id f) const;
  // gamma(f1; g) for unary f1 and arbitrary g ("post-compose"). -1 if undefined.
  arrow_id post_compose(arrow_id f1, arrow_id g) const;
  // gamma(g; 1,..,f1,..,1) substituting unary f1 into slot i of g. -1 if undefined.
  arrow_id slot_compose(arrow_id g, int slot, arrow_id f1) const;

  const std::map<profile, std::vector<arrow_id>>& hom_table() const { return hom_; }
  const std::map<std::pair<arrow_id, perm>, arrow_id>& sym_table() const { return sym_; }
  const std::map<std::pair<arrow_id, std::vector<arrow_id>>, arrow_id>& comp_table() const {
    return comp_;
  }

  // Arrows with the given target, ascending. Used by table builders and search.
  const std::vector<arrow_id>& arrows_into(object_id b) const {
    return arrows_into_[static_cast<size_t>(b)];
  }

 private:
  int arity_cap_;
  std::vector<std::string> object_names_;
  std::vector<profile> arrow_profiles_;
  std::map<profile, std::vector<arrow_id>> hom_;
  std::vector<arrow_id> units_;
  std::map<std::pair<arrow_id, perm>, arrow_id> sym_;
  std::map<std::pair<arrow_id, std::vector<arrow_id>>, arrow_id> comp_;

  std::vector<std::vector<arrow_id>> arrows_into_;

  // Dense unary-composition tables (see compose1/post_compose/slot_compose).
  std::vector<int> unary_index_;            // arrow -> dense unary index, -1 otherwise
  std::vector<arrow_id> unary_arrows_;      // dense unary index -> arrow
  std::vector<arrow_id> post_table_;        // [unary f1][g]
  std::vector<arrow_id> slot_table_;        // [g][slot][unary f1]
  bool finalized_ = false;
};

struct based_multicategory {
  multicategory m;
  object_id basepoint = 0;
  // mu[n] in hom(b^n; b) for 0 <= n <= arity_cap; mu[1] is the unit of b.
  std::vector<arrow_id> mu;
};

struct violation {
  bool structural = false;  // malformed tables, as opposed to failed axioms
  std::string message;
};

struct validation_report {
  std::vector<violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

validation_report validate_multicategory(const multicategory& m);
validation_report validate_based(const based_multicategory& m);

// --- constructors -----------------------------------------------------------

// Terminal based multicategory: one object, a single n-arrow for every n.
based_multicategory make_terminal(int arity_cap);

// E: objects {0,1}, hom(a_1..a_n; b) a singleton iff sum a_i = b, based at 0.
// Parameterizes a monoid together with a module over it.
based_multicategory make_E(int arity_cap);

// u: basepoint monoid plus one isolated object carrying only its identity.
based_multicategory make_unit_u(int arity_cap);

// I: objects {0,1,2}; the full substructures on {0,1} and {0,2} are copies of
// E, and hom(...;2) is a singleton iff exactly one entry is 1 or 2, rest 0.
// Parameterizes a map of modules (unique 1-arrow 1 -> 2).
based_multicategory make_I(int arity_cap);

based_multicategory cartesian_product(const based_multicategory& a, const based_multicategory& b);

// Direct construction of E^n: objects are bit vectors, hom-sets singletons
// exactly when coordinatewise sums match. Object index = binary value with
// coordinate 0 as the most significant bit; this matches the index arithmetic
// of iterated cartesian products in either nesting.
based_multicategory power_E(int n, int arity_cap);

// Wedge: disjoint union with the basepoints identified. Requires both inputs
// to have singleton hom-sets {mu_n} on pure-basepoint profiles so that the
// identification is well defined.
based_multicategory wedge(const based_multicategory& a, const based_multicategory& b);

// Full sub-multicategory on the given objects (which must contain the basepoint).
based_multicategory full_sub(const based_multicategory& m, const std::vector<object_id>& objects);

// --- monoids and modules ----------------------------------------------------

// True iff (a, mu) is a commutative monoid within the arity cap: mu_1 = 1_a,
// every sigma fixes mu_n, and gamma(mu_k; mu_{m_1}..mu_{m_k}) = mu_{sum m_i}.
bool monoid_check(const based_multicategory& m, object_id a, const std::vector<arrow_id>& mu);

// All commutative monoids (a, mu family), canonical order. Exhaustive sweep.
std::vector<std::pair<object_id, std::vector<arrow_id>>> all_monoids(const based_multicategory& m);

struct module_datum {
  object_id carrier = 0;
  arrow_id action = 0;  // lambda_1 in hom(b, carrier; carrier)
  auto operator<=>(const module_datum&) const = default;
};

// True iff d is a module over the basepoint monoid within the cap: unit law,
// associativity, swap invariance of the induced 2-action, and well-definedness
// of all derived higher actions.
bool module_check(const based_multicategory& m, const module_datum& d);

// All passing module data, canonical (carrier, action) order.
std::vector<module_datum> all_module_data(const based_multicategory& m);

struct modules_of_result {
  based_multicategory modules;            // based at the basepoint monoid acting on itself
  std::vector<module_datum> data;         // object i of `modules` is data[i]
  std::vector<arrow_id> underlying_arrow; // arrow of `modules` -> arrow of the input
};

// The multicategory of modules over the basepoint monoid. Arrows are the
// arrows of m compatible with the actions; for each input slot i the equation
//   gamma(lambda_dst; 1_b, f) = sigma_i* gamma(f; 1,..,lambda_{d_i},..,1)
// must hold, where sigma_i is the cycle moving the freed b-input of slot i to
// the front.
modules_of_result modules_of(const based_multicategory& m);

}  // namespace multikat
