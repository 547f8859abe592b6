// Canonical form of a family under relabeling of the ground set: the
// lexicographically least colex-sorted member sequence over all n!
// permutations. Two families are isomorphic iff their canonical forms
// are equal. Small n is settled by brute force; larger n by a
// branch-and-bound assignment search with the same output contract.
#pragma once

#include "lekr/family.hpp"

namespace lekr {

Family canonical_form(const Family& f);

// True iff f already equals its canonical form. Cheaper than computing
// the form when the answer is "no" (bails out at the first improving
// permutation); this is the hot call of the isomorph-free search.
bool is_canonical(const Family& f);

// Relabel every member by a permutation given as perm[old-1] = new.
Family relabel(const Family& f, const std::vector<int>& perm);

namespace detail {
// Both strategies, exposed for cross-checking; dispatch in
// canonical_form() picks brute force for n <= 8.
std::vector<SetMask> canonical_members_bruteforce(int n,
                                                  const std::vector<SetMask>& members);
std::vector<SetMask> canonical_members_bnb(int n,
                                           const std::vector<SetMask>& members);
// Early-exit canonicity test on a sorted member list (search hot path).
bool is_canonical_members(int n, const std::vector<SetMask>& members);
}  // namespace detail

}  // namespace lekr
