#include "lekr/bounds.hpp"

#include <stdexcept>

namespace lekr {

ThresholdSet thresholds(int k, long long d) {
  if (k < 1) throw std::invalid_argument("thresholds: requires k >= 1");
  if (d < 0) throw std::invalid_argument("thresholds: requires D >= 0");
  ThresholdSet t;
  t.k = k;
  t.d = d;
  const long long kk = k;
  t.cubic = (kk * kk * kk + 2 * kk * kk + kk) / 2;  // k(k+1)^2 is even
  t.quadratic = (kk * kk + 3) / 4 + 5 * kk + d;     // ceil(k^2/4)
  t.conjectured = kk + ((kk + 1) / 2) * (kk / 2 + 1);
  for (int s = 1; s <= k - 1; ++s)
    t.ak_range.push_back(static_cast<long long>(s + 1) * (k - s + 1));
  return t;
}

LayerBoundValue layer_bound(int n, int k, int t) {
  if (t < 1 || t > k - 1)
    throw std::invalid_argument("layer_bound: requires 1 <= t <= k-1");
  if (static_cast<long long>(n) <= static_cast<long long>(t + 1) * (k - t + 1))
    throw std::invalid_argument(
        "layer_bound: hypothesis n > (t+1)(k-t+1) violated");
  LayerBoundValue v;
  const long long nk = n - k;
  v.entry1 = Rational(1) - make_rational(BigInt(nk) * (nk - static_cast<long long>(t) * (k - t) - 1),
                                         BigInt(n - t) * (n - t - 1));
  const BigInt denom = binomial(n - t, k - t);
  v.entry2 = Rational(1) - make_rational(binomial(n - k - 1, k - t), denom) +
             make_rational(BigInt(t), denom);
  v.max_entry = v.entry1 > v.entry2 ? v.entry1 : v.entry2;
  return v;
}

BigInt coarse_layer_bound(int n, int k, int t) {
  if (t < 1 || t >= k)
    throw std::invalid_argument("coarse_layer_bound: requires 1 <= t < k");
  if (n < 1) throw std::invalid_argument("coarse_layer_bound: requires n >= 1");
  return BigInt(k + 1) * binomial(n - t - 1, k - t - 1);
}

ProductBoundReport product_bound_check(const Family& a, const Family& b, int s) {
  const int n = a.params().n, k = a.params().k;
  if (!(a.params() == b.params()))
    throw std::invalid_argument("product_bound_check: mismatched params");
  if (s < 1 || s > k)
    throw std::invalid_argument("product_bound_check: requires 1 <= s <= k");
  ProductBoundReport r;
  r.s = s;
  r.cross_ok = is_cross_t_intersecting(a, b, s);
  if (s == 1) {
    r.condition = "n >= 2k";
    r.applicable = n >= 2 * k;
  } else if (s == 2) {
    r.condition = "n >= (169/50)k";
    r.applicable = 50LL * n >= 169LL * k;
  } else {
    r.condition = "n >= (s+1)(k-s+1)";
    r.applicable = static_cast<long long>(n) >=
                   static_cast<long long>(s + 1) * (k - s + 1);
  }
  r.product = BigInt(static_cast<long>(a.size())) * BigInt(static_cast<long>(b.size()));
  const BigInt base = binomial(n - s, k - s);
  r.bound = base * base;
  r.holds = r.cross_ok && r.applicable && r.product <= r.bound;
  return r;
}

Rational sharpness_bound(int n, int k, int t) {
  if (t < 1 || t > k - 1)
    throw std::invalid_argument("sharpness_bound: requires 1 <= t <= k-1");
  if (n <= k) throw std::invalid_argument("sharpness_bound: requires n > k");
  const long long nk = n - k;
  const long long gap = static_cast<long long>(k - t) * (t + 1) - nk;
  return Rational(1) +
         make_rational(BigInt(nk) * gap, BigInt(n - t) * (n - t - 1));
}

CounterexampleWindow counterexample_window(int k) {
  if (k < 3) throw std::invalid_argument("counterexample_window: requires k >= 3");
  CounterexampleWindow w;
  w.t_star = k / 2;
  w.n_low = k;
  w.n_high = k + static_cast<long long>((k + 1) / 2) * (k / 2 + 1);
  return w;
}

}  // namespace lekr
