#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autograph
{
    using Value = std::int64_t;

    /// Largest admissible |value|. Keeps every pairwise difference representable.
    inline constexpr Value max_abs_value = (Value{1} << 62) - 1;

    /// A sorted integer multiset labelling the vertices of a difference graph.
    ///
    /// Values are kept in non-decreasing order; vertex i of any realization
    /// carries values()[i]. The first negative_count() entries are exactly the
    /// strictly negative values.
    class Signature
    {
    public:
        /// Sorts the input. Throws std::invalid_argument on an empty list or a
        /// value outside [-max_abs_value, max_abs_value].
        explicit Signature(std::vector<Value> values);

        auto values() const noexcept -> std::span<const Value> { return _values; }
        auto size() const noexcept -> std::size_t { return _values.size(); }
        auto operator[](std::size_t i) const -> Value { return _values[i]; }
        auto front() const -> Value { return _values.front(); }
        auto back() const -> Value { return _values.back(); }

        auto negative_count() const noexcept -> std::size_t { return _negatives; }
        auto has_zero() const noexcept -> bool;
        auto contains(Value v) const noexcept -> bool;
        auto is_monograph() const noexcept -> bool;

        friend auto operator==(const Signature &, const Signature &) -> bool = default;
        friend auto operator<=>(const Signature &, const Signature &) = default;

    private:
        std::vector<Value> _values;
        std::size_t _negatives = 0;
    };

    /// Parses "-2,-1, 1,2" style text. Whitespace is ignored.
    auto parse_signature(std::string_view text) -> Signature;

    auto to_string(const Signature &s) -> std::string;

    /// gcd of the absolute values, zeros ignored; 0 when every value is zero.
    auto value_gcd(std::span<const Value> values) noexcept -> Value;

    /// Multiplies every value by c >= 1.
    auto scale(const Signature &s, Value c) -> Signature;

    /// Divides out the gcd of the nonzero absolute values.
    auto normalize(const Signature &s) -> Signature;

    auto is_normalized(const Signature &s) noexcept -> bool;
}
