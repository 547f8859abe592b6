#include "lekr/phi.hpp"

#include <algorithm>
#include <stdexcept>

namespace lekr {

std::vector<int> member_min_intersections(const Family& f) {
  const auto& ms = f.members();
  const int k = f.params().k;
  std::vector<int> mins(ms.size(), k);  // |A cap A| = k seeds the min
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const int c = set_size(ms[i] & ms[j]);
      if (c < mins[i]) mins[i] = c;
      if (c < mins[j]) mins[j] = c;
    }
  return mins;
}

int min_intersection(const Family& f, SetMask a) {
  if (f.empty())
    throw std::invalid_argument("min_intersection: empty family");
  if (!f.contains(a))
    throw std::invalid_argument("min_intersection: " + mask_braced(a) +
                                " is not a member");
  int best = f.params().k;
  for (SetMask b : f.members()) best = std::min(best, set_size(a & b));
  return best;
}

namespace {

LayerProfile layers_from(const std::vector<int>& ivals, int k) {
  LayerProfile p;
  p.sizes.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int v : ivals)
    for (int t = 0; t <= v; ++t) ++p.sizes[static_cast<std::size_t>(t)];
  return p;
}

Rational phi_from_ivalues(const GroundParams& g, const std::vector<int>& ivals) {
  // Bucket by i value; at most k+1 distinct weights.
  std::vector<long long> count(static_cast<std::size_t>(g.k) + 1, 0);
  for (int v : ivals) ++count[static_cast<std::size_t>(v)];
  Rational phi(0);
  for (int i = 0; i <= g.k; ++i)
    if (count[static_cast<std::size_t>(i)] != 0)
      phi += Rational(count[static_cast<std::size_t>(i)]) * weight(g.n, g.k, i);
  return phi;
}

}  // namespace

LayerProfile layer_profile(const Family& f) {
  if (f.empty())
    throw std::invalid_argument("layer_profile: empty family");
  return layers_from(member_min_intersections(f), f.params().k);
}

Rational phi_direct(const Family& f) {
  if (f.empty()) return Rational(0);
  return phi_from_ivalues(f.params(), member_min_intersections(f));
}

Rational phi_telescoped(const Family& f) {
  const int n = f.params().n, k = f.params().k;
  if (f.empty())
    throw std::invalid_argument("phi_telescoped: empty family");
  if (common_core(f) != 0)
    throw std::invalid_argument(
        "phi_telescoped: requires an empty common core");
  const LayerProfile layers = layers_from(member_min_intersections(f), k);
  Rational phi = make_rational(BigInt(static_cast<long>(f.size())), binomial(n, k));
  for (int t = 1; t <= k - 1; ++t) {
    const long long gt = layers.sizes[static_cast<std::size_t>(t)];
    if (gt == 0) continue;
    phi += make_rational(BigInt(n - k), BigInt(n - t + 1)) *
           make_rational(BigInt(gt), binomial(n - t, k - t));
  }
  return phi;
}

Family reduce_core(const Family& f) {
  if (f.empty())
    throw std::invalid_argument("reduce_core: empty family");
  const SetMask core = common_core(f);
  const int c = set_size(core);
  const int n = f.params().n, k = f.params().k;
  if (c == 0) return f;

  // Relabel surviving elements onto [n-c] preserving order.
  std::vector<int> newpos(static_cast<std::size_t>(n), 0);  // 0-based bit -> new bit
  int next = 0;
  for (int b = 0; b < n; ++b)
    if (!(core >> b & 1)) newpos[static_cast<std::size_t>(b)] = next++;

  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask m : f.members()) {
    SetMask rest = m & ~core, nm = 0;
    while (rest) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      nm |= SetMask{1} << newpos[static_cast<std::size_t>(b)];
    }
    out.push_back(nm);
  }
  return Family({n - c, k - c}, std::move(out));
}

Rational borg_sum(const Family& f, int t) {
  const int n = f.params().n, k = f.params().k;
  if (t < 1 || t > k)
    throw std::invalid_argument("borg_sum: requires 1 <= t <= k");
  if (f.empty()) return Rational(0);
  const auto ivals = member_min_intersections(f);
  long long plus = 0;
  for (int v : ivals)
    if (v >= t) ++plus;
  const long long minus = static_cast<long long>(f.size()) - plus;
  return make_rational(BigInt(plus), binomial(n - t, k - t)) +
         make_rational(BigInt(minus), binomial(n, k));
}

PhiReport analyze(const Family& f) {
  PhiReport r;
  r.params = f.params();
  if (f.empty()) {
    r.phi = Rational(0);
    r.layers.sizes.assign(static_cast<std::size_t>(f.params().k) + 1, 0);
    r.reduced = f.params();
    return r;
  }
  r.i_values = member_min_intersections(f);
  r.layers = layers_from(r.i_values, f.params().k);
  r.phi = phi_from_ivalues(f.params(), r.i_values);
  r.core = common_core(f);
  const int c = set_size(r.core);
  r.reduced = {f.params().n - c, f.params().k - c};
  return r;
}

std::string render_phi_report(const Family& f, const PhiReport& r) {
  std::string out;
  out += "n=" + std::to_string(r.params.n) + " k=" + std::to_string(r.params.k) +
         " members=" + std::to_string(f.size()) + "\n";
  out += "phi = " + rational_report(r.phi) + "\n";
  if (f.empty())
    out += "core = (undefined: empty family)\n";
  else
    out += "core = " + mask_braced(r.core) + " (size " +
           std::to_string(set_size(r.core)) + ")\n";
  out += "reduced: n'=" + std::to_string(r.reduced.n) +
         " k'=" + std::to_string(r.reduced.k) + "\n";
  out += "layers t:|G_t|";
  for (std::size_t t = 0; t < r.layers.sizes.size(); ++t)
    out += " " + std::to_string(t) + ":" + std::to_string(r.layers.sizes[t]);
  out += "\n";
  out += "members (colex) with i_F:\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out += "  " + mask_line(f.members()[i]) + " : " +
           std::to_string(r.i_values[i]) + "\n";
  return out;
}

}  // namespace lekr
