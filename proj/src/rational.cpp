#include "simpson/rational.hpp"

#include <cctype>

namespace simpson {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty numeric string");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.remove_prefix(1);
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) {
            throw ParseError("malformed fraction: '" + std::string(text) + "'");
        }
        Integer d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        Rational r(Integer{std::string(num)}, d);
        return negative ? -r : r;
    }

    std::string_view whole = s;
    std::string_view frac;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        whole = s.substr(0, dot);
        frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) {
            throw ParseError("malformed decimal: '" + std::string(text) + "'");
        }
        if (!frac.empty() && !is_digits(frac)) {
            throw ParseError("malformed decimal: '" + std::string(text) + "'");
        }
    }
    if (!whole.empty() && !is_digits(whole)) {
        throw ParseError("malformed number: '" + std::string(text) + "'");
    }

    Integer scaled = whole.empty() ? Integer(0) : Integer{std::string(whole)};
    Integer den = 1;
    for (char c : frac) {
        scaled = scaled * 10 + (c - '0');
        den *= 10;
    }
    Rational r(scaled, den);
    return negative ? -r : r;
}

std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

double approx(const Rational& r) { return r.convert_to<double>(); }

}  // namespace simpson
