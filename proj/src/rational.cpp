#include "catermin/rational.hpp"

#include <cctype>

namespace catermin {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw ParseError("not a rational: '" + text + "'");
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("not a rational: '" + text + "'");
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(BigInt(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

} // namespace catermin
