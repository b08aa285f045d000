#include "groupfair/rational.hpp"

#include <cctype>

#include "groupfair/errors.hpp"

namespace groupfair {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool all_zero(std::string_view s) {
    for (char c : s) {
        if (c != '0') return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    };

    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den) || all_zero(den)) return fail();
    }
    if (!num.empty() && num.front() == '-') num.remove_prefix(1);
    if (!all_digits(num)) return fail();

    Rational value(std::string(text), 10);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

}  // namespace groupfair
