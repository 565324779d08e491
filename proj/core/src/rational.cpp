#include "citecredit/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace citecredit {

CitationValue::CitationValue(long long citations) {
    if (citations < 0) {
        throw std::invalid_argument("citation count must be non-negative");
    }
    value_ = Rational(static_cast<long>(citations));
}

CitationValue::CitationValue(long long citations, long long auth_rank) {
    if (citations < 0) {
        throw std::invalid_argument("citation count must be non-negative");
    }
    if (auth_rank < 1) {
        throw std::invalid_argument("author rank must be a positive integer");
    }
    value_ = Rational(static_cast<long>(citations), static_cast<long>(auth_rank));
    value_.canonicalize();
}

CitationValue CitationValue::from_rational(Rational v) {
    v.canonicalize();
    if (v < 0) {
        throw std::invalid_argument("citation value must be non-negative");
    }
    CitationValue cv;
    cv.value_ = std::move(v);
    return cv;
}

std::string format_fixed(const Rational& v, int precision) {
    mpz_class scale = 1;
    for (int i = 0; i < precision; ++i) scale *= 10;

    const bool negative = v < 0;
    mpz_class num = abs(v.get_num()) * scale;
    const mpz_class& den = v.get_den();

    mpz_class quot = num / den;
    mpz_class rem = num % den;
    if (2 * rem >= den) quot += 1;

    std::string digits = quot.get_str();
    std::string out;
    if (precision == 0) {
        out = digits;
    } else {
        if (digits.size() <= static_cast<std::size_t>(precision)) {
            digits.insert(0, precision + 1 - digits.size(), '0');
        }
        out = digits.substr(0, digits.size() - precision) + "." +
              digits.substr(digits.size() - precision);
    }
    if (negative && quot != 0) out.insert(0, 1, '-');
    return out;
}

std::string format_fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

}  // namespace citecredit
