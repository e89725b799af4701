#pragma once

#include <algorithm>
#include <vector>

namespace mdx {

/// Real interval with independently open or closed endpoints. T must be an
/// exactly ordered type (integers or rationals).
template <typename T>
struct BasicInterval {
  T lo{};
  T hi{};
  bool lo_closed = false;
  bool hi_closed = false;

  static BasicInterval open(T a, T b) { return {a, b, false, false}; }
  static BasicInterval closed(T a, T b) { return {a, b, true, true}; }

  bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

  bool contains(const T& x) const {
    const bool above = lo_closed ? !(x < lo) : lo < x;
    const bool below = hi_closed ? !(hi < x) : x < hi;
    return above && below;
  }

  bool operator==(const BasicInterval&) const = default;
};

/// base minus the union of `removed`, as a sorted list of disjoint nonempty
/// intervals. Sweep over the removed intervals in order of left endpoint.
template <typename T>
std::vector<BasicInterval<T>> subtract_intervals(const BasicInterval<T>& base,
                                                 std::vector<BasicInterval<T>> removed) {
  std::vector<BasicInterval<T>> out;
  if (base.empty()) return out;
  std::erase_if(removed, [](const BasicInterval<T>& r) { return r.empty(); });
  std::sort(removed.begin(), removed.end(), [](const BasicInterval<T>& a, const BasicInterval<T>& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });

  // The piece still to be emitted starts at `cursor` (included iff cursor_closed).
  T cursor = base.lo;
  bool cursor_closed = base.lo_closed;
  for (const auto& r : removed) {
    if (!(cursor < base.hi) && !(cursor == base.hi && cursor_closed && base.hi_closed)) break;
    // Gap [cursor, r.lo) survives if r starts strictly after the cursor.
    const bool gap = cursor < r.lo || (cursor == r.lo && cursor_closed && !r.lo_closed);
    if (gap) {
      BasicInterval<T> piece{cursor, r.lo, cursor_closed, !r.lo_closed};
      if (base.hi < piece.hi || (base.hi == piece.hi && !base.hi_closed)) {
        piece.hi = base.hi;
        piece.hi_closed = base.hi_closed && !(base.hi == r.lo && r.lo_closed);
      }
      if (!piece.empty()) out.push_back(piece);
    }
    if (cursor < r.hi) {
      cursor = r.hi;
      cursor_closed = !r.hi_closed;
    } else if (cursor == r.hi && r.hi_closed) {
      cursor_closed = false;
    }
  }
  BasicInterval<T> tail{cursor, base.hi, cursor_closed, base.hi_closed};
  if (!tail.empty()) out.push_back(tail);
  return out;
}

}  // namespace mdx
