#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace citecredit {

// Exact rational arithmetic. All index thresholds compare rationals
// exactly, so results never depend on floating-point rounding.
using Rational = mpq_class;

// A citation value: a non-negative exact rational. Raw citation counts
// have denominator 1; rank-weighted values are citations/auth_rank.
class CitationValue {
public:
    CitationValue() : value_(0) {}

    explicit CitationValue(long long citations);

    // citations / auth_rank. Throws std::invalid_argument if citations < 0
    // or auth_rank < 1.
    CitationValue(long long citations, long long auth_rank);

    // Throws std::invalid_argument if v < 0.
    static CitationValue from_rational(Rational v);

    const Rational& value() const noexcept { return value_; }
    double as_double() const { return value_.get_d(); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }

    CitationValue& operator+=(const CitationValue& other) {
        value_ += other.value_;
        return *this;
    }
    friend CitationValue operator+(CitationValue a, const CitationValue& b) {
        a += b;
        return a;
    }

    friend bool operator==(const CitationValue& a, const CitationValue& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const CitationValue& a,
                                            const CitationValue& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    // Exact comparisons against integer thresholds (h, g, i10 cutoffs).
    friend bool operator>=(const CitationValue& a, long long k) {
        return cmp(a.value_, static_cast<long>(k)) >= 0;
    }
    friend bool operator<(const CitationValue& a, long long k) {
        return cmp(a.value_, static_cast<long>(k)) < 0;
    }

private:
    Rational value_;
};

// Fixed-point decimal rendering, round half away from zero. The rational
// overload is exact for any magnitude; the double overload defers to the
// usual printf rounding.
std::string format_fixed(const Rational& v, int precision);
std::string format_fixed(double v, int precision);

}  // namespace citecredit
