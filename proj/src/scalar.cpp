#include "snchodge/scalar.hpp"

#include <cctype>
#include <ostream>

namespace snchodge {

namespace {

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace

std::string Scalar::str() const {
    std::string out = rational_str(re);
    if (sgn(im) >= 0) out += "+";
    out += rational_str(im) + "*i";
    return out;
}

Scalar Scalar::parse(const std::string& text) {
    // Split into signed terms; a term ending in "*i" (or equal to "i") is
    // imaginary, anything else real.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    Scalar out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term.empty() || term == "+" || term == "-")
            throw std::invalid_argument("bad scalar literal: " + text);
        bool imag = false;
        if (term.size() >= 2 && term.compare(term.size() - 2, 2, "*i") == 0) {
            imag = true;
            term.resize(term.size() - 2);
        } else if (term == "i" || term == "+i" || term == "-i") {
            imag = true;
            term = (term[0] == '-') ? "-1" : "1";
        }
        Rational v = parse_rational(term[0] == '+' ? term.substr(1) : term);
        if (imag)
            out.im += v;
        else
            out.re += v;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace snchodge
