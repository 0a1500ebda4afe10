#include <autograph/signature.hpp>

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace autograph;

TEST_CASE("signature values are kept sorted")
{
    Signature s{{4, -1, 2, 2}};
    CHECK(std::vector<Value>(s.values().begin(), s.values().end()) == std::vector<Value>{-1, 2, 2, 4});
    CHECK(s.front() == -1);
    CHECK(s.back() == 4);
    CHECK(s.negative_count() == 1);
    CHECK_FALSE(s.has_zero());
    CHECK_FALSE(s.is_monograph());
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
}

TEST_CASE("empty and oversized signatures are rejected")
{
    CHECK_THROWS_AS(Signature{std::vector<Value>{}}, std::invalid_argument);
    CHECK_THROWS_AS(Signature{{max_abs_value + 1}}, std::invalid_argument);
    CHECK_NOTHROW(Signature{{-max_abs_value, max_abs_value}});
}

TEST_CASE("parse and print round trip")
{
    auto s = parse_signature(" 4, 1 ,2");
    CHECK(to_string(s) == "1,2,4");
    CHECK(parse_signature(to_string(s)) == s);
    CHECK(to_string(parse_signature("-3,0,0,7")) == "-3,0,0,7");
    CHECK_THROWS_AS(parse_signature(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_signature("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signature("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_signature("99999999999999999999"), std::invalid_argument);
}

TEST_CASE("gcd ignores zeros")
{
    std::vector<Value> a{0, -6, 9, 15};
    CHECK(value_gcd(a) == 3);
    std::vector<Value> zeros{0, 0};
    CHECK(value_gcd(zeros) == 0);
}

TEST_CASE("scale and normalize")
{
    auto s = parse_signature("1,2,4");
    CHECK(to_string(scale(s, 3)) == "3,6,12");
    CHECK(normalize(scale(s, 7)) == s);
    CHECK(is_normalized(s));
    CHECK_FALSE(is_normalized(scale(s, 2)));
    CHECK_THROWS_AS(scale(s, 0), std::invalid_argument);
    CHECK_THROWS(scale(Signature{{max_abs_value}}, 2));
    CHECK_THROWS_AS(normalize(parse_signature("0,0")), std::invalid_argument);
    CHECK(to_string(normalize(parse_signature("-4,0,8"))) == "-1,0,2");
}
