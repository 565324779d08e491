#pragma once

#include <span>
#include <utility>
#include <vector>

#include "citecredit/rational.hpp"

namespace citecredit {

// One publication seen from one researcher's side: the paper's citation
// count and the researcher's 1-based position in the author list. The
// rank-weighted value citations/auth_rank is fixed at construction, so
// weighted * auth_rank == citations holds exactly.
struct RankedPaper {
    long long citations;
    int auth_rank;
    CitationValue weighted;

    RankedPaper(long long citations_, int auth_rank_)
        : citations(citations_),
          auth_rank(auth_rank_),
          weighted(citations_, auth_rank_) {}
};

// citations_i / auth_rank_i for each paper, order preserved.
std::vector<CitationValue> weight_citations(std::span<const RankedPaper> papers);

// Sum of all values (total citation count when values are raw).
CitationValue c_index(std::span<const CitationValue> values);

// Largest k such that at least k values are >= k. Accepts fractional
// values; the threshold comparison is exact.
int h_index(std::span<const CitationValue> values);

// Largest g <= number of papers such that the g largest values sum to
// at least g^2. No virtual zero-cited papers are appended.
int g_index(std::span<const CitationValue> values);

// sqrt(sum of the h largest values - h^2), the citations in the h-core
// in excess of the h^2 already counted by h.
double e_index(std::span<const CitationValue> values);

// Number of values >= 10.
int i10_index(std::span<const CitationValue> values);

// Composes an index with the rank weighting: index(weight_citations(papers)).
// With every auth_rank == 1 this is the unmodified index.
template <typename IndexFn>
auto apply_modified(IndexFn&& index, std::span<const RankedPaper> papers) {
    const std::vector<CitationValue> weighted = weight_citations(papers);
    return std::forward<IndexFn>(index)(
        std::span<const CitationValue>(weighted));
}

// All five indexes over one value list.
struct IndexReport {
    CitationValue c;
    int h = 0;
    int g = 0;
    double e = 0.0;
    int i10 = 0;
    bool modified = false;
};

IndexReport index_report(std::span<const CitationValue> values, bool modified);

// Total credit distributed per citation of an n-author paper: n under
// plain counting (every author gets the full citation), the harmonic
// number H_n = sum_{i=1..n} 1/i under rank weighting.
struct CreditPoint {
    int authors;
    long long raw_total;
    Rational weighted_total;
};

std::vector<CreditPoint> total_credit_curve(int n_max);

// H_n as an exact rational; H_0 = 0.
Rational harmonic_number(int n);

// Credit granted to an author joining a paper that already has
// existing_authors authors: 1/(existing_authors + 1).
Rational marginal_credit(int existing_authors);

}  // namespace citecredit
