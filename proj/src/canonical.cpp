#include "lekr/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lekr {

Family relabel(const Family& f, const std::vector<int>& perm) {
  const int n = f.params().n;
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size != n");
  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask m : f.members()) {
    SetMask nm = 0;
    SetMask rest = m;
    while (rest) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      nm |= SetMask{1} << (perm[b] - 1);
    }
    out.push_back(nm);
  }
  return Family(f.params(), std::move(out));
}

namespace detail {

namespace {

// -1 / 0 / +1 : seq lexicographically below / equal to / above ref.
int seq_compare(const std::vector<SetMask>& seq, const std::vector<SetMask>& ref) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < ref[i]) return -1;
    if (seq[i] > ref[i]) return 1;
  }
  return 0;
}

// (x y) is an automorphism of the (sorted) member list iff swapping the
// two bits in every member reproduces the same list.
bool transposition_fixes(const std::vector<SetMask>& members, int x, int y) {
  const SetMask bx = SetMask{1} << x, by = SetMask{1} << y;
  std::vector<SetMask> swapped;
  swapped.reserve(members.size());
  for (SetMask m : members) {
    const bool hx = m & bx, hy = m & by;
    swapped.push_back(hx == hy ? m : (m ^ (bx | by)));
  }
  std::sort(swapped.begin(), swapped.end());
  return swapped == members;
}

// Branch-and-bound minimization of the sorted member sequence over all
// relabelings. Positions are fixed from the highest label down; a node is
// cut once the sorted partial masks already exceed the incumbent (partial
// masks are a pointwise lower bound on any completion). Candidates that
// differ by a transposition automorphism lead to identical subtrees, so
// only one per equivalence class is expanded.
class Minimizer {
 public:
  Minimizer(int n, const std::vector<SetMask>& members, bool stop_at_improvement)
      : n_(n),
        m_(members.size()),
        orig_(members),
        incumbent_(members),
        stop_at_improvement_(stop_at_improvement) {
    // Transposition-automorphism classes ("x ~ y" is transitive by
    // conjugation, so comparing against class leaders suffices).
    cls_.resize(n_);
    std::iota(cls_.begin(), cls_.end(), 0);
    for (int y = 1; y < n_; ++y)
      for (int x = 0; x < y; ++x)
        if (cls_[x] == x && transposition_fixes(orig_, x, y)) {
          cls_[y] = x;
          break;
        }

    std::vector<int> degree(n_, 0);
    for (SetMask m : orig_)
      for (int b = 0; b < n_; ++b)
        if (m >> b & 1) ++degree[b];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return degree[a] < degree[b]; });

    partial_.assign(m_, 0);
    scratch_.assign(n_ + 1, std::vector<SetMask>(m_));
  }

  // Runs the search; returns true iff some relabeling beats the input.
  bool run() {
    if (m_ == 0 || n_ == 0) return false;
    descend(0);
    return improved_;
  }

  const std::vector<SetMask>& best() const { return incumbent_; }

 private:
  // Returns true to abort the whole search (is_canonical short-circuit).
  bool descend(int depth) {
    std::vector<SetMask>& spm = scratch_[depth];
    spm = partial_;
    std::sort(spm.begin(), spm.end());
    const int cmp = seq_compare(spm, incumbent_);
    if (cmp > 0) return false;
    if (depth == n_) {
      if (cmp < 0) {
        incumbent_ = spm;
        improved_ = true;
        return stop_at_improvement_;
      }
      return false;
    }
    const int bit = n_ - depth - 1;  // next-highest unassigned label
    SetMask tried_classes = 0;
    for (int x : order_) {
      if (used_ >> x & 1) continue;
      const SetMask cbit = SetMask{1} << cls_[x];
      if (tried_classes & cbit) continue;
      tried_classes |= cbit;
      used_ |= SetMask{1} << x;
      for (std::size_t i = 0; i < m_; ++i)
        if (orig_[i] >> x & 1) partial_[i] |= SetMask{1} << bit;
      const bool abort = descend(depth + 1);
      for (std::size_t i = 0; i < m_; ++i)
        if (orig_[i] >> x & 1) partial_[i] &= ~(SetMask{1} << bit);
      used_ &= ~(SetMask{1} << x);
      if (abort) return true;
    }
    return false;
  }

  int n_;
  std::size_t m_;
  std::vector<SetMask> orig_;
  std::vector<SetMask> incumbent_;
  bool stop_at_improvement_;
  bool improved_ = false;
  std::vector<int> cls_;
  std::vector<int> order_;
  std::vector<SetMask> partial_;
  SetMask used_ = 0;
  std::vector<std::vector<SetMask>> scratch_;
};

}  // namespace

std::vector<SetMask> canonical_members_bruteforce(int n,
                                                  const std::vector<SetMask>& members) {
  if (members.empty() || n == 0) return members;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SetMask> best = members;
  std::vector<SetMask> cur(members.size());
  do {
    for (std::size_t i = 0; i < members.size(); ++i) {
      SetMask nm = 0, rest = members[i];
      while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        nm |= SetMask{1} << perm[b];
      }
      cur[i] = nm;
    }
    std::sort(cur.begin(), cur.end());
    if (seq_compare(cur, best) < 0) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SetMask> canonical_members_bnb(int n, const std::vector<SetMask>& members) {
  Minimizer min(n, members, /*stop_at_improvement=*/false);
  min.run();
  return min.best();
}

bool is_canonical_members(int n, const std::vector<SetMask>& members) {
  Minimizer min(n, members, /*stop_at_improvement=*/true);
  return !min.run();
}

}  // namespace detail

Family canonical_form(const Family& f) {
  const int n = f.params().n;
  std::vector<SetMask> best = n <= 8
      ? detail::canonical_members_bruteforce(n, f.members())
      : detail::canonical_members_bnb(n, f.members());
  return Family(f.params(), std::move(best));
}

bool is_canonical(const Family& f) {
  return detail::is_canonical_members(f.params().n, f.members());
}

}  // namespace lekr
