#include "kptau/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kptau {

std::string rational_to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view s)
{
    if (s.empty()) {
        throw std::invalid_argument("empty integer in rational literal");
    }
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        i = 1;
    }
    if (i == s.size()) {
        throw std::invalid_argument("sign without digits in rational literal");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw std::invalid_argument("invalid character in rational literal: '" +
                                        std::string(s) + "'");
        }
    }
    return Integer(std::string(s));
}

}  // namespace

Rational rational_from_string(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(s));
    }
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational literal");
    }
    return Rational(num, den);
}

Integer factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial of negative integer");
    }
    Integer r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Integer double_factorial(int n)
{
    if (n < -1) {
        throw std::invalid_argument("double factorial of integer below -1");
    }
    Integer r = 1;
    for (int i = n; i > 1; i -= 2) {
        r *= i;
    }
    return r;
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

Integer falling_factorial(long long m, int j)
{
    Integer r = 1;
    for (int i = 0; i < j; ++i) {
        r *= Integer(m - i);
    }
    return r;
}

}  // namespace kptau
