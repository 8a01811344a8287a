#include "detmld/rational.hpp"

#include <cctype>

namespace detmld {

std::string to_string(const Rational& raw) {
    const Rational r = canonical(raw);
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_text(s)) throw Rejected("malformed rational: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(trim(text.substr(0, slash)));
    std::string_view den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-')
        throw Rejected("malformed rational: '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw Rejected("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace detmld
