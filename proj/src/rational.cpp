#include "smc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace smc {

Rational parse_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }
    BigInt numerator = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        numerator = numerator * 10 + (text[i] - '0');
        ++digits;
        ++i;
    }
    BigInt denominator = 1;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            numerator = numerator * 10 + (text[i] - '0');
            denominator *= 10;
            ++digits;
            ++i;
        }
    }
    if (digits == 0 || i != text.size()) {
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
    Rational q(numerator, denominator);
    return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    // Count factors of 2 and 5 in the denominator; anything else forces the
    // fractional form.
    BigInt rest = den;
    int twos = 0;
    int fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) {
        return num.str() + "/" + den.str();
    }
    // Scale to a power of ten: 10^k with k = max(twos, fives).
    int k = twos > fives ? twos : fives;
    BigInt scale = 1;
    for (int j = 0; j < twos - fives; ++j) scale *= 5;
    for (int j = 0; j < fives - twos; ++j) scale *= 2;
    BigInt scaled = num * scale;  // now value = scaled / 10^k
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body = scaled.str();
    if (k == 0) {
        return (negative ? "-" : "") + body;
    }
    while (static_cast<int>(body.size()) <= k) {
        body.insert(body.begin(), '0');
    }
    body.insert(body.end() - k, '.');
    // Trim trailing zeros of the fraction but keep at least one digit.
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return (negative ? "-" : "") + body;
}

}  // namespace smc
