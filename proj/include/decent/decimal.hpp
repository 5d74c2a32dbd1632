// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace decent {

/// Non-binary fixed-point number with six fractional digits.
///
/// Every stake, block count, reward and allocation in the toolkit is carried
/// as an integral count of micro-units so that ledger conservation checks are
/// exact. Arithmetic throws Error{Overflow} instead of wrapping.
class Decimal {
public:
    static constexpr int kFractionDigits = 6;
    static constexpr std::int64_t kScale = 1'000'000;

    constexpr Decimal() noexcept = default;

    static constexpr Decimal from_micros(std::int64_t micros) noexcept { return Decimal(micros); }
    static Decimal from_units(std::int64_t units);
    /// Smallest positive representable amount (0.000001).
    static constexpr Decimal unit() noexcept { return Decimal(1); }

    /// Accepts "12", "12.5", "0.000001". No sign, exponent, or more than six
    /// fractional digits.
    static Decimal parse(std::string_view text);

    constexpr std::int64_t micros() const noexcept { return micros_; }
    constexpr bool is_zero() const noexcept { return micros_ == 0; }

    /// Always renders exactly six fractional digits, e.g. "10.500000".
    std::string to_string() const;

    Decimal operator+(Decimal rhs) const;
    Decimal operator-(Decimal rhs) const;
    Decimal& operator+=(Decimal rhs);
    Decimal& operator-=(Decimal rhs);
    Decimal operator*(std::int64_t factor) const;

    /// floor(this * numerator / denominator) at micro precision; inputs must be
    /// non-negative and denominator positive.
    Decimal mul_div_floor(Decimal numerator, Decimal denominator) const;

    /// this / divisor rounded half-up to micro precision.
    Decimal ratio_round(Decimal divisor) const;

    constexpr auto operator<=>(const Decimal&) const noexcept = default;

private:
    constexpr explicit Decimal(std::int64_t micros) noexcept : micros_(micros) {}

    std::int64_t micros_ = 0;
};

} // namespace decent
