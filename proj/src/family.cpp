#include "lekr/family.hpp"

#include "lekr/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace lekr {

std::vector<int> mask_elements(SetMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(m)));
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

SetMask mask_from_elements(const std::vector<int>& elements, int n) {
  SetMask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " out of range 1.." + std::to_string(n));
    m |= SetMask{1} << (e - 1);
  }
  return m;
}

std::string mask_line(SetMask m) {
  std::string out;
  for (int e : mask_elements(m)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

std::string mask_braced(SetMask m) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void validate_params(const GroundParams& p) {
  if (p.k < 0 || p.k > p.n || p.n > 64)
    throw std::invalid_argument("require 0 <= k <= n <= 64, got n=" +
                                std::to_string(p.n) +
                                " k=" + std::to_string(p.k));
}

Family::Family(GroundParams params, std::vector<SetMask> members)
    : params_(params), members_(std::move(members)) {
  validate_params(params_);
  const SetMask universe = full_mask(params_.n);
  for (SetMask m : members_) {
    if (m & ~universe)
      throw std::invalid_argument("member " + mask_braced(m) +
                                  " has elements outside 1.." +
                                  std::to_string(params_.n));
    if (set_size(m) != params_.k)
      throw std::invalid_argument("member " + mask_braced(m) + " is not a " +
                                  std::to_string(params_.k) + "-set");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("duplicate member in family");
}

bool Family::contains(SetMask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

SetMask common_core(const Family& f) {
  if (f.empty())
    throw std::invalid_argument("common_core: undefined for the empty family");
  SetMask core = full_mask(f.params().n);
  for (SetMask m : f.members()) core &= m;
  return core;
}

bool is_t_intersecting(const Family& f, int t) {
  if (t < 0 || t > f.params().k)
    throw std::invalid_argument("is_t_intersecting: requires 0 <= t <= k");
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (set_size(ms[i] & ms[j]) < t) return false;
  return true;
}

bool is_cross_t_intersecting(const Family& a, const Family& b, int t) {
  if (!(a.params() == b.params()))
    throw std::invalid_argument(
        "is_cross_t_intersecting: families have different ground params");
  for (SetMask x : a.members())
    for (SetMask y : b.members())
      if (set_size(x & y) < t) return false;
  return true;
}

bool is_trivial_t_intersecting(const Family& f, int t) {
  if (f.empty())
    throw std::invalid_argument(
        "is_trivial_t_intersecting: undefined for the empty family");
  return set_size(common_core(f)) >= t;
}

std::vector<SetMask> k_subsets_colex(int n, int k) {
  validate_params({n, k});
  if (k == 0) return {SetMask{0}};
  BigInt count = binomial(n, k);
  if (count > 100000000)
    throw std::invalid_argument("k_subsets_colex: C(" + std::to_string(n) +
                                "," + std::to_string(k) +
                                ") = " + count.get_str() +
                                " sets is beyond the enumeration cap");
  std::vector<SetMask> out;
  out.reserve(count.get_ui());
  const SetMask limit = full_mask(n);
  SetMask v = full_mask(k);
  while (v <= limit) {
    out.push_back(v);
    if (n == 64 && v == (limit & ~full_mask(64 - k)))  // top block: last one
      break;
    SetMask t = v | (v - 1);  // Gosper's hack
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

}  // namespace lekr
