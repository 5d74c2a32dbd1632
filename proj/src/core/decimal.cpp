// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/decimal.hpp"

#include "decent/error.hpp"

#include <limits>

namespace decent {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::Overflow, "decimal result out of range");
    return static_cast<std::int64_t>(value);
}

} // namespace

Decimal Decimal::from_units(std::int64_t units) {
    return Decimal(narrow(static_cast<i128>(units) * kScale));
}

Decimal Decimal::parse(std::string_view text) {
    auto fail = [&] { return Error(ErrorCode::InvalidDecimal, "'" + std::string(text) + "'"); };
    if (text.empty())
        throw fail();

    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() || (dot != std::string_view::npos && frac.empty()))
        throw fail();
    if (frac.size() > static_cast<std::size_t>(kFractionDigits))
        throw fail();

    i128 value = 0;
    for (char ch : whole) {
        if (ch < '0' || ch > '9')
            throw fail();
        value = value * 10 + (ch - '0');
        if (value > std::numeric_limits<std::int64_t>::max())
            throw fail();
    }
    std::int64_t fraction = 0;
    std::size_t digits = 0;
    for (char ch : frac) {
        if (ch < '0' || ch > '9')
            throw fail();
        fraction = fraction * 10 + (ch - '0');
        ++digits;
    }
    for (; digits < static_cast<std::size_t>(kFractionDigits); ++digits)
        fraction *= 10;

    value = value * kScale + fraction;
    if (value > std::numeric_limits<std::int64_t>::max())
        throw fail();
    return Decimal(static_cast<std::int64_t>(value));
}

std::string Decimal::to_string() const {
    // Magnitude through unsigned keeps INT64_MIN printable.
    bool negative = micros_ < 0;
    auto magnitude = negative ? static_cast<std::uint64_t>(-(micros_ + 1)) + 1
                              : static_cast<std::uint64_t>(micros_);
    auto whole = magnitude / static_cast<std::uint64_t>(kScale);
    auto frac = magnitude % static_cast<std::uint64_t>(kScale);

    std::string frac_text = std::to_string(frac);
    frac_text.insert(0, static_cast<std::size_t>(kFractionDigits) - frac_text.size(), '0');
    return (negative ? "-" : "") + std::to_string(whole) + "." + frac_text;
}

Decimal Decimal::operator+(Decimal rhs) const {
    return Decimal(narrow(static_cast<i128>(micros_) + rhs.micros_));
}

Decimal Decimal::operator-(Decimal rhs) const {
    return Decimal(narrow(static_cast<i128>(micros_) - rhs.micros_));
}

Decimal& Decimal::operator+=(Decimal rhs) { return *this = *this + rhs; }
Decimal& Decimal::operator-=(Decimal rhs) { return *this = *this - rhs; }

Decimal Decimal::operator*(std::int64_t factor) const {
    return Decimal(narrow(static_cast<i128>(micros_) * factor));
}

Decimal Decimal::mul_div_floor(Decimal numerator, Decimal denominator) const {
    if (denominator.micros_ <= 0 || micros_ < 0 || numerator.micros_ < 0)
        throw Error(ErrorCode::InvalidDecimal, "mul_div_floor expects non-negative inputs");
    i128 product = static_cast<i128>(micros_) * numerator.micros_;
    return Decimal(narrow(product / denominator.micros_));
}

Decimal Decimal::ratio_round(Decimal divisor) const {
    if (divisor.micros_ <= 0 || micros_ < 0)
        throw Error(ErrorCode::InvalidDecimal, "ratio_round expects non-negative inputs");
    i128 scaled = static_cast<i128>(micros_) * kScale;
    i128 twice_divisor = static_cast<i128>(divisor.micros_) * 2;
    return Decimal(narrow((scaled * 2 + divisor.micros_) / twice_divisor));
}

} // namespace decent
