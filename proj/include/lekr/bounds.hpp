// Closed-form thresholds and bounds: the cubic/quadratic/conjectured
// ground-set thresholds, the two-entry layer bound, the coarse
// (k+1)C(n-t-1,k-t-1) bound, cross-intersecting product bounds, the
// J_t sharpness bound, and the counterexample window.
#pragma once

#include "lekr/family.hpp"
#include "lekr/rational.hpp"

#include <string>
#include <vector>

namespace lekr {

struct ThresholdSet {
  int k = 0;
  long long d = 0;            // user-supplied slack for the quadratic form
  long long cubic = 0;        // (k^3 + 2k^2 + k) / 2
  long long quadratic = 0;    // ceil(k^2/4) + 5k + D
  long long conjectured = 0;  // k + ceil(k/2) * (floor(k/2) + 1)
  std::vector<long long> ak_range;  // (t+1)(k-t+1) for t = 1..k-1
};

// Requires k >= 1, D >= 0. D is a user parameter: only its existence is
// guaranteed, no value is known.
ThresholdSet thresholds(int k, long long d);

struct LayerBoundValue {
  Rational entry1;  // 1 - (n-k)((n-k) - t(k-t) - 1) / ((n-t)(n-t-1))
  Rational entry2;  // 1 - C(n-k-1,k-t)/C(n-t,k-t) + t/C(n-t,k-t)
  Rational max_entry;
};

// Requires 1 <= t <= k-1 and n > (t+1)(k-t+1).
LayerBoundValue layer_bound(int n, int k, int t);

// (k+1) C(n-t-1, k-t-1). Requires 1 <= t < k.
BigInt coarse_layer_bound(int n, int k, int t);

struct ProductBoundReport {
  int s = 0;
  bool cross_ok = false;    // families really are cross-s-intersecting
  bool applicable = false;  // the theorem's n-range condition holds
  std::string condition;    // the condition that was checked
  BigInt product;           // |A| * |B|
  BigInt bound;             // C(n-s, k-s)^2
  bool holds = false;       // product <= bound (only meaningful if applicable)
};

// s = 1: needs n >= 2k. s = 2: needs n >= (169/50)k (exact rational
// comparison). s >= 3: needs n >= (s+1)(k-s+1). When the condition (or
// the cross-intersection precondition) fails the report is marked
// inapplicable instead of giving a verdict.
ProductBoundReport product_bound_check(const Family& a, const Family& b, int s);

// 1 + (n-k)((k-t)(t+1) - (n-k)) / ((n-t)(n-t-1)): the lower bound for
// Phi(J_t(n,k)); > 1 exactly on k < n < k + (k-t)(t+1).
// Requires 1 <= t <= k-1 and n > k.
Rational sharpness_bound(int n, int k, int t);

struct CounterexampleWindow {
  int t_star = 0;       // floor(k/2)
  long long n_low = 0;  // exclusive
  long long n_high = 0; // exclusive
};

// Requires k >= 3: the open interval k < n < k + ceil(k/2)(floor(k/2)+1)
// on which J_{t*} certifies Phi > 1.
CounterexampleWindow counterexample_window(int k);

}  // namespace lekr
