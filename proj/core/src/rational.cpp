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

#include "cvlc/rational.hpp"

#include <limits>
#include <ostream>

#include "cvlc/errors.hpp"

namespace cvlc {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

u128 abs_wide(i128 v) {
    return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
}

u128 gcd_wide(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_int64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_wide(i128 v) {
    u128 mag = abs_wide(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return v < 0 ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw Error("rational with zero denominator");
    }
    *this = from_wide(numerator, denominator);
}

Rational::Rational(const mpq_class &value) {
    mpq_class copy(value);
    copy.canonicalize();
    *this = from_mpq(std::move(copy));
}

Rational Rational::from_wide(Wide numerator, Wide denominator) {
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    u128 g = gcd_wide(abs_wide(numerator), static_cast<u128>(denominator));
    if (g > 1) {
        numerator /= static_cast<i128>(g);
        denominator /= static_cast<i128>(g);
    }
    Rational r;
    if (fits_int64(numerator) && fits_int64(denominator)) {
        r.num_ = static_cast<std::int64_t>(numerator);
        r.den_ = static_cast<std::int64_t>(denominator);
        return r;
    }
    mpq_class q(mpz_from_wide(numerator), mpz_from_wide(denominator));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    r.num_ = 0;
    r.den_ = 1;
    return r;
}

Rational Rational::from_mpq(mpq_class value) {
    Rational r;
    if (mpz_fits_slong_p(value.get_num_mpz_t()) && mpz_fits_slong_p(value.get_den_mpz_t())) {
        r.num_ = value.get_num().get_si();
        r.den_ = value.get_den().get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') {
        num_digits.remove_prefix(1);
    }
    if (!is_digits(num_digits)) {
        throw ParseError("bad rational '" + std::string(text) + "'", 0);
    }
    if (!is_digits(den)) {
        throw ParseError("bad rational denominator in '" + std::string(text) + "'", num.size() + 1);
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", num.size() + 1);
    }
    mpq_class q(n, d);
    q.canonicalize();
    return from_mpq(std::move(q));
}

bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    return q;
}

std::string Rational::to_string() const {
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
    if (big_) {
        return std::hash<std::string>{}(big_->get_str());
    }
    std::size_t h = std::hash<std::int64_t>{}(num_);
    h ^= std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Rational Rational::operator-() const {
    if (big_) {
        return from_mpq(mpq_class(-*big_));
    }
    return from_wide(-static_cast<i128>(num_), den_);
}

Rational operator+(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
        }
        return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            return Rational::from_wide(static_cast<i128>(a.num_) - b.num_, 1);
        }
        return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) {
            return Rational();
        }
        return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero()) {
        throw Error("rational division by zero");
    }
    if (!a.big_ && !b.big_) {
        return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    }
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) {
        return false;
    }
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    if (!a.big_ && !b.big_) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream &operator<<(std::ostream &out, const Rational &r) {
    return out << r.to_string();
}

}  // namespace cvlc
