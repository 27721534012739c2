// Copyright 2026 The cvlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cvlc {

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline; anything
/// larger is held in an immutable shared GMP rational. The representation is
/// canonical: a value is stored inline whenever it fits, so equality and hashing
/// never depend on how a value was produced.
class Rational {
   public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(const mpq_class &value);

    /// Parses "a" or "a/b" (optional leading '-', arbitrary size). Throws ParseError.
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    int sign() const;
    bool is_small() const { return !big_; }

    /// Inline numerator/denominator; only meaningful when is_small().
    std::int64_t small_numerator() const { return num_; }
    std::int64_t small_denominator() const { return den_; }

    mpq_class to_mpq() const;
    std::string to_string() const;
    std::size_t hash() const;

    Rational operator-() const;
    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }
    Rational &operator/=(const Rational &o) { return *this = *this / o; }

    friend bool operator==(const Rational &a, const Rational &b);
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

   private:
    __extension__ typedef __int128 Wide;

    static Rational from_mpq(mpq_class value);
    static Rational from_wide(Wide numerator, Wide denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream &operator<<(std::ostream &out, const Rational &r);

struct RationalHash {
    std::size_t operator()(const Rational &r) const { return r.hash(); }
};

}  // namespace cvlc
