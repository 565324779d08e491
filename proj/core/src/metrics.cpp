#include "citecredit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace citecredit {

namespace {

std::vector<CitationValue> sorted_descending(std::span<const CitationValue> values) {
    std::vector<CitationValue> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return sorted;
}

}  // namespace

std::vector<CitationValue> weight_citations(std::span<const RankedPaper> papers) {
    std::vector<CitationValue> out;
    out.reserve(papers.size());
    for (const RankedPaper& paper : papers) {
        if (paper.auth_rank < 1) {
            throw std::invalid_argument("author rank must be a positive integer");
        }
        out.push_back(paper.weighted);
    }
    return out;
}

CitationValue c_index(std::span<const CitationValue> values) {
    CitationValue total;
    for (const CitationValue& v : values) total += v;
    return total;
}

int h_index(std::span<const CitationValue> values) {
    const std::vector<CitationValue> sorted = sorted_descending(values);
    int h = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const long long k = static_cast<long long>(i) + 1;
        if (sorted[i] >= k) {
            h = static_cast<int>(k);
        } else {
            break;
        }
    }
    return h;
}

int g_index(std::span<const CitationValue> values) {
    const std::vector<CitationValue> sorted = sorted_descending(values);
    Rational prefix = 0;
    int g = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const long long k = static_cast<long long>(i) + 1;
        prefix += sorted[i].value();
        if (cmp(prefix, static_cast<long>(k * k)) >= 0) {
            g = static_cast<int>(k);
        }
    }
    return g;
}

double e_index(std::span<const CitationValue> values) {
    const int h = h_index(values);
    if (h == 0) return 0.0;

    const std::vector<CitationValue> sorted = sorted_descending(values);
    Rational core_sum = 0;
    for (int i = 0; i < h; ++i) core_sum += sorted[i].value();

    Rational radicand = core_sum - static_cast<long>(static_cast<long long>(h) * h);
    if (radicand <= 0) return 0.0;  // exact arithmetic: only 0 is possible
    return std::sqrt(radicand.get_d());
}

int i10_index(std::span<const CitationValue> values) {
    int count = 0;
    for (const CitationValue& v : values) {
        if (v >= 10) ++count;
    }
    return count;
}

IndexReport index_report(std::span<const CitationValue> values, bool modified) {
    IndexReport report;
    report.c = c_index(values);
    report.h = h_index(values);
    report.g = g_index(values);
    report.e = e_index(values);
    report.i10 = i10_index(values);
    report.modified = modified;
    return report;
}

std::vector<CreditPoint> total_credit_curve(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("total_credit_curve requires n_max >= 1");
    }
    std::vector<CreditPoint> curve;
    curve.reserve(static_cast<std::size_t>(n_max));
    Rational harmonic = 0;
    for (int n = 1; n <= n_max; ++n) {
        harmonic += Rational(1, n);
        curve.push_back({n, n, harmonic});
    }
    return curve;
}

Rational harmonic_number(int n) {
    if (n < 0) {
        throw std::invalid_argument("harmonic_number requires n >= 0");
    }
    Rational sum = 0;
    for (int i = 1; i <= n; ++i) sum += Rational(1, i);
    return sum;
}

Rational marginal_credit(int existing_authors) {
    if (existing_authors < 0) {
        throw std::invalid_argument("marginal_credit requires n >= 0");
    }
    return Rational(1, existing_authors + 1);
}

}  // namespace citecredit
