#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace multikat {

// Raised for malformed or schema-invalid input documents. CLI exit code 1.
class invalid_input_error : public std::runtime_error {
 public:
  explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration exceeds its node budget. Results are never
// silently truncated; exceeding the budget aborts the whole call. Exit code 2.
class budget_exceeded_error : public std::runtime_error {
 public:
  explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant breaks (a bug, not a user error). Exit code 3.
class internal_error : public std::runtime_error {
 public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// Node budget shared by the assignment searches of one enumeration call.
class search_budget {
 public:
  explicit search_budget(std::int64_t cap) : cap_(cap) {}

  void tick(const char* where) {
    if (++used_ > cap_)
      throw budget_exceeded_error(std::string("search budget of ") + std::to_string(cap_) +
                                  " nodes exceeded in " + where);
  }

  std::int64_t used() const { return used_; }
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t cap_;
  std::int64_t used_ = 0;
};

// Permutations are stored as image vectors: s[i] = sigma(i), 0-indexed.
using perm = std::vector<int>;

inline perm identity_perm(int n) {
  perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_identity_perm(const perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[static_cast<size_t>(i)] != i) return false;
  return true;
}

// All permutations of n letters in lexicographic order of the image vector.
inline std::vector<perm> all_perms(int n) {
  std::vector<perm> out;
  perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// (s . t)(i) = s[t[i]]  -- composition as functions.
inline perm compose_perms(const perm& s, const perm& t) {
  perm r(t.size());
  for (size_t i = 0; i < t.size(); ++i) r[i] = s[static_cast<size_t>(t[i])];
  return r;
}

inline perm inverse_perm(const perm& s) {
  perm r(s.size());
  for (size_t i = 0; i < s.size(); ++i) r[static_cast<size_t>(s[i])] = static_cast<int>(i);
  return r;
}

// Block permutation induced by permuting k blocks of the given sizes by s.
// Position p of the permuted concatenation (blocks in order s(0), s(1), ...)
// maps to the corresponding position of the original concatenation.
inline perm block_perm(const perm& s, const std::vector<int>& sizes) {
  std::vector<int> offset(sizes.size(), 0);
  for (size_t i = 1; i < sizes.size(); ++i)
    offset[i] = offset[i - 1] + sizes[i - 1];
  perm r;
  for (size_t j = 0; j < s.size(); ++j) {
    const int b = s[j];
    for (int q = 0; q < sizes[static_cast<size_t>(b)]; ++q)
      r.push_back(offset[static_cast<size_t>(b)] + q);
  }
  return r;
}

// Disjoint union of permutations acting blockwise, block i of size ps[i].size().
inline perm direct_sum_perms(const std::vector<perm>& ps) {
  perm r;
  int offset = 0;
  for (const perm& p : ps) {
    for (int v : p) r.push_back(offset + v);
    offset += static_cast<int>(p.size());
  }
  return r;
}

}  // namespace multikat
