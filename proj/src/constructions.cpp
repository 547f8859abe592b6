#include "lekr/constructions.hpp"

#include "lekr/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace lekr {

namespace {

template <typename Pred>
Family filtered_level(int n, int k, Pred pred, const BigInt& expected_size,
                      const char* name) {
  std::vector<SetMask> members;
  for (SetMask m : k_subsets_colex(n, k))
    if (pred(m)) members.push_back(m);
  if (BigInt(static_cast<long>(members.size())) != expected_size)
    throw std::logic_error(std::string(name) + ": enumerated size " +
                           std::to_string(members.size()) +
                           " != closed form " + expected_size.get_str());
  return Family({n, k}, std::move(members));
}

}  // namespace

Family star(int n, int k, int c) {
  validate_params({n, k});
  if (k < 1 || c < 0 || c > k)
    throw std::invalid_argument("star: requires 0 <= c <= k, 1 <= k <= n");
  const SetMask fixed = full_mask(c);
  return filtered_level(
      n, k, [&](SetMask m) { return (m & fixed) == fixed; },
      binomial(n - c, k - c), "star");
}

Family full_level(int n, int k) { return star(n, k, 0); }

Family j_family(int n, int k, int t) {
  validate_params({n, k});
  if (t < 1 || t > k - 1 || t + 2 > n)
    throw std::invalid_argument(
        "j_family: requires 1 <= t <= k-1 and t+2 <= n");
  const SetMask window = full_mask(t + 2);
  const BigInt size = BigInt(t + 2) * binomial(n - t - 2, k - t - 1) +
                      binomial(n - t - 2, k - t - 2);
  return filtered_level(
      n, k, [&](SetMask m) { return set_size(m & window) >= t + 1; }, size,
      "j_family");
}

Family h1(int n, int k, int t) { return j_family(n, k, t); }

Family h2(int n, int k, int t) {
  validate_params({n, k});
  if (t < 1 || t >= k || k + 1 > n)
    throw std::invalid_argument("h2: requires 1 <= t < k and k+1 <= n");
  const SetMask tset = full_mask(t);
  const SetMask midband = full_mask(k + 1) & ~tset;  // [t+1, k+1]
  const SetMask kp1 = full_mask(k + 1);
  const BigInt size =
      binomial(n - t, k - t) - binomial(n - k - 1, k - t) + t;
  return filtered_level(
      n, k,
      [&](SetMask m) {
        if ((m & tset) == tset && (m & midband) != 0) return true;
        // [k+1] minus a single element of [t]
        return (m | kp1) == kp1 && set_size(tset & ~m) == 1;
      },
      size, "h2");
}

Family ak_frontier(int n, int k, int t, int r) {
  validate_params({n, k});
  if (t < 1 || r < 0 || t + 2 * r > n || t + r > k)
    throw std::invalid_argument(
        "ak_frontier: requires t >= 1, r >= 0, t+2r <= n, t+r <= k");
  const SetMask window = full_mask(t + 2 * r);
  // Count by intersection size with the window; an independent route
  // from the predicate filter below.
  BigInt size(0);
  for (int j = t + r; j <= t + 2 * r && j <= k; ++j)
    size += binomial(t + 2 * r, j) * binomial(n - t - 2 * r, k - j);
  return filtered_level(
      n, k, [&](SetMask m) { return set_size(m & window) >= t + r; }, size,
      "ak_frontier");
}

FamilySpec parse_family_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family spec needs '<kind>:<params>': " + text);
  const std::string kind = text.substr(0, colon);
  std::vector<int> args;
  {
    std::istringstream in(text.substr(colon + 1));
    std::string piece;
    while (std::getline(in, piece, ',')) {
      std::size_t pos = 0;
      int v;
      try {
        v = std::stoi(piece, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + piece + "' in spec " + text);
      }
      if (pos != piece.size())
        throw std::invalid_argument("bad number '" + piece + "' in spec " + text);
      args.push_back(v);
    }
  }
  auto want = [&](std::size_t n_args) {
    if (args.size() != n_args)
      throw std::invalid_argument("spec '" + text + "' takes " +
                                  std::to_string(n_args) + " parameters");
  };
  FamilySpec s{};
  if (kind == "star") {
    want(3);
    s = {FamilySpec::Kind::star, args[0], args[1], 0, args[2], 0};
  } else if (kind == "full") {
    want(2);
    s = {FamilySpec::Kind::full_level, args[0], args[1], 0, 0, 0};
  } else if (kind == "jt") {
    want(3);
    s = {FamilySpec::Kind::j_family, args[0], args[1], args[2], 0, 0};
  } else if (kind == "h1") {
    want(3);
    s = {FamilySpec::Kind::h1, args[0], args[1], args[2], 0, 0};
  } else if (kind == "h2") {
    want(3);
    s = {FamilySpec::Kind::h2, args[0], args[1], args[2], 0, 0};
  } else if (kind == "ak") {
    want(4);
    s = {FamilySpec::Kind::ak_frontier, args[0], args[1], args[2], 0, args[3]};
  } else {
    throw std::invalid_argument("unknown family kind '" + kind + "'");
  }
  return s;
}

Family build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::star: return star(spec.n, spec.k, spec.c);
    case FamilySpec::Kind::full_level: return full_level(spec.n, spec.k);
    case FamilySpec::Kind::j_family: return j_family(spec.n, spec.k, spec.t);
    case FamilySpec::Kind::h1: return h1(spec.n, spec.k, spec.t);
    case FamilySpec::Kind::h2: return h2(spec.n, spec.k, spec.t);
    case FamilySpec::Kind::ak_frontier:
      return ak_frontier(spec.n, spec.k, spec.t, spec.r);
  }
  throw std::logic_error("unreachable family kind");
}

}  // namespace lekr
