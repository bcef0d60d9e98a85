#ifndef RIDESHARE_MINMAX_HEAP_H_
#define RIDESHARE_MINMAX_HEAP_H_

#include <bit>
#include <cassert>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace rideshare {

// Binary min-max heap (Atkinson, Sack, Santoro, Strothotte 1986).
//
// Elements on even depths are no greater than their descendants, elements on
// odd depths no smaller. Both extremes are readable in O(1); push and either
// pop take O(log n).
template <typename T, typename Less = std::less<T>>
class MinMaxHeap {
 public:
  MinMaxHeap() = default;
  explicit MinMaxHeap(Less less) : less_(std::move(less)) {}

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  const T& min() const {
    assert(!empty());
    return items_[0];
  }

  const T& max() const {
    assert(!empty());
    return items_[MaxIndex()];
  }

  void push(T value) {
    items_.push_back(std::move(value));
    BubbleUp(items_.size() - 1);
  }

  T pop_min() { return RemoveAt(0); }
  T pop_max() { return RemoveAt(MaxIndex()); }

  void clear() { items_.clear(); }

 private:
  static bool OnMinLevel(std::size_t i) {
    return ((std::bit_width(i + 1) - 1) & 1) == 0;
  }
  static std::size_t Parent(std::size_t i) { return (i - 1) / 2; }

  std::size_t MaxIndex() const {
    if (items_.size() == 1) return 0;
    if (items_.size() == 2) return 1;
    return less_(items_[1], items_[2]) ? 2 : 1;
  }

  // True if a should sit closer to the root than b on a level of this kind.
  bool Before(const T& a, const T& b, bool min_level) const {
    return min_level ? less_(a, b) : less_(b, a);
  }

  T RemoveAt(std::size_t i) {
    assert(i < items_.size());
    T out = std::move(items_[i]);
    if (i + 1 != items_.size()) {
      items_[i] = std::move(items_.back());
      items_.pop_back();
      TrickleDown(i);
    } else {
      items_.pop_back();
    }
    return out;
  }

  void BubbleUp(std::size_t i) {
    if (i == 0) return;
    const bool min_level = OnMinLevel(i);
    const std::size_t p = Parent(i);
    if (Before(items_[p], items_[i], min_level)) {
      // Belongs on the parent's kind of level.
      std::swap(items_[i], items_[p]);
      BubbleUpSame(p, !min_level);
    } else {
      BubbleUpSame(i, min_level);
    }
  }

  void BubbleUpSame(std::size_t i, bool min_level) {
    while (i >= 3) {
      const std::size_t g = Parent(Parent(i));
      if (!Before(items_[i], items_[g], min_level)) break;
      std::swap(items_[i], items_[g]);
      i = g;
    }
  }

  void TrickleDown(std::size_t i) {
    const std::size_t n = items_.size();
    while (true) {
      const bool min_level = OnMinLevel(i);
      const std::size_t first_child = 2 * i + 1;
      if (first_child >= n) return;
      // Most extreme among children and grandchildren.
      std::size_t best = first_child;
      const std::size_t candidates[] = {first_child + 1, 4 * i + 3, 4 * i + 4,
                                        4 * i + 5, 4 * i + 6};
      for (std::size_t c : candidates) {
        if (c < n && Before(items_[c], items_[best], min_level)) best = c;
      }
      if (!Before(items_[best], items_[i], min_level)) return;
      std::swap(items_[best], items_[i]);
      if (best <= first_child + 1) return;  // a child: done
      const std::size_t p = Parent(best);
      if (Before(items_[p], items_[best], min_level)) {
        std::swap(items_[p], items_[best]);
      }
      i = best;
    }
  }

  Less less_;
  std::vector<T> items_;
};

}  // namespace rideshare

#endif  // RIDESHARE_MINMAX_HEAP_H_
