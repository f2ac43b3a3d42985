#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cayleygs/errors.hpp"

namespace cayleygs {

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
uint64_t checked_mul_u64(uint64_t a, uint64_t b);

// base^exp, throws ArithmeticOverflowError past 64 bits
uint64_t checked_pow_u64(uint64_t base, uint64_t exp);

// Exact rational on 64-bit numerator/denominator, always normalized
// (gcd 1, denominator > 0). All operations are width-checked.
class Rational {
  public:
    Rational() = default;
    Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(int64_t n, int64_t d);

    // accepts "7", "-1", "3/2", "-3/2"
    static Rational parse(std::string_view text);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;

    bool operator==(const Rational& o) const = default;
    bool operator<(const Rational& o) const;

    std::string str() const;  // "7", "-3/2"

  private:
    void normalize();
    int64_t num_ = 0;
    int64_t den_ = 1;
};

inline Rational operator*(int64_t a, const Rational& r) { return Rational(a) * r; }

}  // namespace cayleygs
