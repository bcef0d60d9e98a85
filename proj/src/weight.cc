#include "rideshare/weight.h"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace rideshare {
namespace {

using Wide = __int128;

constexpr Wide kInt64Max = std::numeric_limits<std::int64_t>::max();

Wide Gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class WideToMpz(Wide v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v)
                                 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

}  // namespace

void Weight::ThrowNegative() {
  throw std::invalid_argument("weight must be nonnegative");
}

Weight Weight::FromFraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("weight denominator must be positive");
  }
  if ((numerator < 0) != (denominator < 0) && numerator != 0) {
    throw std::invalid_argument("weight must be nonnegative");
  }
  Wide n = numerator;
  Wide d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return FromWide(n, d);
}

Weight Weight::FromWide(Wide numerator, Wide denominator) {
  const Wide g = Gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  Weight out;
  if (numerator <= kInt64Max && denominator <= kInt64Max) {
    out.num_ = static_cast<std::int64_t>(numerator);
    out.den_ = static_cast<std::int64_t>(denominator);
    return out;
  }
  mpq_class q(WideToMpz(numerator), WideToMpz(denominator));
  q.canonicalize();
  out.num_ = 0;
  out.den_ = 1;
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

Weight Weight::FromMpq(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  if (sgn(q) < 0) {
    throw std::invalid_argument("weight must be nonnegative");
  }
  Weight out;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    out.num_ = q.get_num().get_si();
    out.den_ = q.get_den().get_si();
    return out;
  }
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

Weight Weight::Parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsDigits(num_text) || !IsDigits(den_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  if (num_text.size() <= 18 && den_text.size() <= 18) {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::from_chars(num_text.data(), num_text.data() + num_text.size(), n);
    std::from_chars(den_text.data(), den_text.data() + den_text.size(), d);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                  "'");
    }
    return FromFraction(n, d);
  }
  mpz_class n(std::string(num_text), 10);
  mpz_class d(std::string(den_text), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return FromMpq(mpq_class(n, d));
}

std::string Weight::ToString() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Weight::ToMpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)),
              mpz_class(static_cast<long>(den_)));
  q.canonicalize();
  return q;
}

double Weight::ToDouble() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

bool Weight::IsZero() const { return !big_ && num_ == 0; }

bool Weight::IsInteger() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

Weight& Weight::AddSlow(const Weight& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      const Wide sum = static_cast<Wide>(num_) + other.num_;
      if (sum <= kInt64Max) {
        num_ = static_cast<std::int64_t>(sum);
        return *this;
      }
      *this = FromWide(sum, 1);
      return *this;
    }
    const Wide g = Gcd(den_, other.den_);
    const Wide n = static_cast<Wide>(num_) * (other.den_ / g) +
                   static_cast<Wide>(other.num_) * (den_ / g);
    const Wide d = static_cast<Wide>(den_ / g) * other.den_;
    *this = FromWide(n, d);
    return *this;
  }
  *this = FromMpq(ToMpq() + other.ToMpq());
  return *this;
}

Weight operator*(const Weight& lhs, const Weight& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    return Weight::FromWide(static_cast<Wide>(lhs.num_) * rhs.num_,
                            static_cast<Wide>(lhs.den_) * rhs.den_);
  }
  return Weight::FromMpq(lhs.ToMpq() * rhs.ToMpq());
}

Weight Distance(const Weight& a, const Weight& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      return Weight(a.num_ >= b.num_ ? a.num_ - b.num_ : b.num_ - a.num_);
    }
    const Wide g = Gcd(a.den_, b.den_);
    Wide n = static_cast<Wide>(a.num_) * (b.den_ / g) -
             static_cast<Wide>(b.num_) * (a.den_ / g);
    if (n < 0) n = -n;
    const Wide d = static_cast<Wide>(a.den_ / g) * b.den_;
    return Weight::FromWide(n, d);
  }
  mpq_class diff = a.ToMpq() - b.ToMpq();
  return Weight::FromMpq(abs(diff));
}

std::strong_ordering Weight::Compare(const Weight& lhs, const Weight& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    const Wide l = static_cast<Wide>(lhs.num_) * rhs.den_;
    const Wide r = static_cast<Wide>(rhs.num_) * lhs.den_;
    return l <=> r;
  }
  const int c = cmp(lhs.ToMpq(), rhs.ToMpq());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.ToString();
}

}  // namespace rideshare
