#include <autograph/signature.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

using std::string;
using std::string_view;
using std::vector;

namespace autograph
{
    Signature::Signature(vector<Value> values) :
        _values(std::move(values))
    {
        if (_values.empty())
            throw std::invalid_argument("signature must contain at least one value");
        for (auto v : _values)
            if (v > max_abs_value || v < -max_abs_value)
                throw std::invalid_argument("signature value " + std::to_string(v) + " out of representable range");
        std::sort(_values.begin(), _values.end());
        _negatives = static_cast<std::size_t>(std::lower_bound(_values.begin(), _values.end(), Value{0}) - _values.begin());
    }

    auto Signature::has_zero() const noexcept -> bool
    {
        return contains(0);
    }

    auto Signature::contains(Value v) const noexcept -> bool
    {
        return std::binary_search(_values.begin(), _values.end(), v);
    }

    auto Signature::is_monograph() const noexcept -> bool
    {
        return std::adjacent_find(_values.begin(), _values.end()) == _values.end();
    }

    auto parse_signature(string_view text) -> Signature
    {
        vector<Value> values;
        string token;
        auto flush = [&]() {
            if (token.empty())
                throw std::invalid_argument("empty entry in signature text");
            Value v{};
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw std::invalid_argument("bad signature value '" + token + "'");
            values.push_back(v);
            token.clear();
        };

        for (char c : text) {
            if (c == ',')
                flush();
            else if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                continue;
            else
                token.push_back(c);
        }
        flush();
        return Signature{std::move(values)};
    }

    auto to_string(const Signature &s) -> string
    {
        string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != 0)
                out += ',';
            out += std::to_string(s[i]);
        }
        return out;
    }

    auto value_gcd(std::span<const Value> values) noexcept -> Value
    {
        Value g = 0;
        for (auto v : values)
            g = std::gcd(g, v < 0 ? -v : v);
        return g;
    }

    auto scale(const Signature &s, Value c) -> Signature
    {
        if (c < 1)
            throw std::invalid_argument("scale factor must be positive");
        vector<Value> out;
        out.reserve(s.size());
        for (auto v : s.values()) {
            Value r{};
            if (__builtin_mul_overflow(v, c, &r) || r > max_abs_value || r < -max_abs_value)
                throw std::overflow_error("scaled signature value out of range");
            out.push_back(r);
        }
        return Signature{std::move(out)};
    }

    auto normalize(const Signature &s) -> Signature
    {
        auto g = value_gcd(s.values());
        if (g == 0)
            throw std::invalid_argument("cannot normalize an all-zero signature");
        vector<Value> out(s.values().begin(), s.values().end());
        for (auto &v : out)
            v /= g;
        return Signature{std::move(out)};
    }

    auto is_normalized(const Signature &s) noexcept -> bool
    {
        return value_gcd(s.values()) == 1;
    }
}
