// Builders for the named families: c-stars, full levels, J_t, H_1, H_2,
// and the frontier families {A : |A cap [t+2r]| >= t+r}. Each constructor
// enumerates k-sets in colex order, filters the defining predicate, and
// cross-checks the closed-form size.
#pragma once

#include "lekr/family.hpp"

#include <string>

namespace lekr {

// All k-subsets of [n] containing [c]; size C(n-c, k-c).
Family star(int n, int k, int c);

// star(n, k, 0): the whole level.
Family full_level(int n, int k);

// J_t(n,k) = {A : |A cap [t+2]| >= t+1}; size
// (t+2) C(n-t-2, k-t-1) + C(n-t-2, k-t-2). Requires 1 <= t <= k-1, t+2 <= n.
Family j_family(int n, int k, int t);

// H_1 is J_t under its Theorem-3.1 name.
Family h1(int n, int k, int t);

// H_2(n,k,t) = {A : [t] <= A, A cap [t+1, k+1] != 0} plus the t sets
// [k+1] minus one element of [t]; size C(n-t,k-t) - C(n-k-1,k-t) + t.
// Requires 1 <= t < k, k+1 <= n.
Family h2(int n, int k, int t);

// {A : |A cap [t+2r]| >= t+r}; r = 0 is the t-star, r = 1 is J_t.
Family ak_frontier(int n, int k, int t, int r);

struct FamilySpec {
  enum class Kind { star, full_level, j_family, h1, h2, ak_frontier };
  Kind kind;
  int n = 0, k = 0, t = 0, c = 0, r = 0;
};

// CLI spec strings: star:n,k,c  full:n,k  jt:n,k,t  h1:n,k,t  h2:n,k,t
// ak:n,k,t,r
FamilySpec parse_family_spec(const std::string& text);
Family build(const FamilySpec& spec);

}  // namespace lekr
