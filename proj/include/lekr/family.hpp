// k-uniform set families over [n], n <= 64: one machine word per set,
// members kept sorted in colexicographic order. For bit i-1 <-> element i,
// colex order on k-sets coincides with integer order on masks, so the
// member list is simply an ascending vector of words.
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace lekr {

using SetMask = std::uint64_t;

inline int set_size(SetMask m) { return std::popcount(m); }

inline SetMask full_mask(int n) {
  return n == 64 ? ~SetMask{0} : (SetMask{1} << n) - 1;
}

inline bool mask_contains(SetMask m, int element) {
  return (m >> (element - 1)) & 1u;
}

// Elements of a mask, 1-based, ascending.
std::vector<int> mask_elements(SetMask m);

SetMask mask_from_elements(const std::vector<int>& elements, int n);

// "1 2 3" (member-line form) and "{1,2,3}" (inline form).
std::string mask_line(SetMask m);
std::string mask_braced(SetMask m);

struct GroundParams {
  int n = 0;
  int k = 0;

  bool operator==(const GroundParams&) const = default;
};

// Validates 0 <= k <= n <= 64 (k = 0 only arises from core reduction;
// parsers and constructors additionally require k >= 1).
void validate_params(const GroundParams& p);

class Family {
 public:
  Family() = default;
  // Sorts members into colex order; rejects duplicates, wrong set sizes,
  // and elements outside [n].
  Family(GroundParams params, std::vector<SetMask> members);

  const GroundParams& params() const { return params_; }
  const std::vector<SetMask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(SetMask m) const;

  bool operator==(const Family&) const = default;

 private:
  GroundParams params_;
  std::vector<SetMask> members_;  // ascending == colex order
};

// Intersection of all members. Rejects the empty family (core undefined).
SetMask common_core(const Family& f);

// Every pair of members (the diagonal is vacuous for t <= k) meets in
// >= t elements. Requires 0 <= t <= k.
bool is_t_intersecting(const Family& f, int t);

// |X cap Y| >= t for every X in a, Y in b. Rejects mismatched params.
bool is_cross_t_intersecting(const Family& a, const Family& b, int t);

// The family has a common t-set: |common_core| >= t.
bool is_trivial_t_intersecting(const Family& f, int t);

// All k-subsets of [n] in colex (= ascending mask) order.
std::vector<SetMask> k_subsets_colex(int n, int k);

}  // namespace lekr
