#ifndef RIDESHARE_WEIGHT_H_
#define RIDESHARE_WEIGHT_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rideshare {

// Exact nonnegative rational used for edge costs and ride costs.
//
// Values whose reduced numerator and denominator fit in 64 bits are held
// inline and combined with 128-bit intermediates; anything larger spills into
// a GMP rational. The representation is canonical: a value is stored in the
// big form only if it does not fit the small one.
//
// There is deliberately no subtraction operator. Costs only ever grow, and
// path segments are measured with `Distance`, so every Weight stays >= 0.
class Weight {
 public:
  constexpr Weight() = default;
  explicit Weight(std::int64_t integer) : num_(integer) {
    if (integer < 0) ThrowNegative();
  }

  // Throws std::invalid_argument on a negative value or a zero denominator.
  static Weight FromFraction(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p" or "p/q" with decimal digits of any length. Surrounding
  // whitespace and a leading '+' are not accepted.
  static Weight Parse(std::string_view text);

  static Weight FromMpq(const mpq_class& value);

  static Weight Zero() { return Weight(); }

  // Canonical text: "p" for integers, "p/q" otherwise, always reduced.
  std::string ToString() const;
  mpq_class ToMpq() const;
  double ToDouble() const;

  bool IsZero() const;
  bool IsInteger() const;
  bool IsSmall() const { return big_ == nullptr; }
  // The value when it is an integer that fits in int64.
  std::optional<std::int64_t> AsInt64() const {
    if (big_ || den_ != 1) return std::nullopt;
    return num_;
  }

  Weight& operator+=(const Weight& other) {
    std::int64_t sum;
    if (!big_ && !other.big_ && den_ == 1 && other.den_ == 1 &&
        !__builtin_add_overflow(num_, other.num_, &sum)) {
      num_ = sum;
      return *this;
    }
    return AddSlow(other);
  }

  friend Weight operator+(Weight lhs, const Weight& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Weight operator*(const Weight& lhs, const Weight& rhs);

  // |a - b|.
  friend Weight Distance(const Weight& a, const Weight& b);

  friend std::strong_ordering operator<=>(const Weight& lhs,
                                          const Weight& rhs) {
    if (!lhs.big_ && !rhs.big_ && lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    return Compare(lhs, rhs);
  }
  friend bool operator==(const Weight& lhs, const Weight& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

 private:
  static Weight FromWide(__int128 numerator, __int128 denominator);
  [[noreturn]] static void ThrowNegative();
  Weight& AddSlow(const Weight& other);
  static std::strong_ordering Compare(const Weight& lhs, const Weight& rhs);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Weight Distance(const Weight& a, const Weight& b);

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace rideshare

#endif  // RIDESHARE_WEIGHT_H_
