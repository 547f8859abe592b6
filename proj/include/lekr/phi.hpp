// The localized sum Phi_{n,k}(F) = sum_A 1/C(n - i_F(A), k - i_F(A)),
// where i_F(A) is the smallest intersection of A with any member of F
// (including A itself). Directly, via the telescoped layer formula, and
// through the core reduction that both exact routes must survive.
#pragma once

#include "lekr/family.hpp"
#include "lekr/rational.hpp"

#include <vector>

namespace lekr {

// i_F(A) = min over B in F of |A cap B|. A must be a member.
int min_intersection(const Family& f, SetMask a);

// i_F(A) for every member, aligned with members() (colex order).
// One O(|F|^2) popcount pass; everything downstream reuses it.
std::vector<int> member_min_intersections(const Family& f);

struct LayerProfile {
  // sizes[t] = |G_t| = #{A : i_F(A) >= t}, t = 0..k. Weakly decreasing,
  // sizes[0] = |F|; empty-core families with k >= 1 have sizes[k] = 0.
  std::vector<long long> sizes;
};

LayerProfile layer_profile(const Family& f);

// Phi by definition. Empty family gives 0.
Rational phi_direct(const Family& f);

// Lemma-style telescoped form |F|/C(n,k) + sum_t (n-k)/(n-t+1) *
// |G_t|/C(n-t,k-t); requires an empty common core. Equals phi_direct.
Rational phi_telescoped(const Family& f);

// Strips the common core C from every member and relabels the remaining
// elements onto [n-c] preserving order; Phi is preserved exactly.
// A single k-set reduces to {emptyset} with k' = 0 and Phi = 1.
Family reduce_core(const Family& f);

// Two-part sum |A^{t,+}|/C(n-t,k-t) + |A^{t,-}|/C(n,k) where A^{t,+} is
// the set of members meeting every other member in >= t elements
// (equivalently G_t). Requires 1 <= t <= k.
Rational borg_sum(const Family& f, int t);

struct PhiReport {
  GroundParams params;
  Rational phi;
  std::vector<int> i_values;  // aligned with members, colex order
  LayerProfile layers;
  SetMask core = 0;
  GroundParams reduced;
};

PhiReport analyze(const Family& f);

// Deterministic text report (header, exact + decimal Phi, core, layer
// table, per-member i values).
std::string render_phi_report(const Family& f, const PhiReport& r);

}  // namespace lekr
