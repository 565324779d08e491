#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citecredit/metrics.hpp"

namespace citecredit {

// A dated publication inside one researcher's record. `alphabetical`
// marks papers whose rank was taken positionally from a venue that
// orders authors alphabetically, i.e. papers whose rank carries no
// contribution information.
struct CareerPaper {
    int year;
    RankedPaper paper;
    bool alphabetical = false;
    std::string id;
};

// A researcher's full record against a fixed citation snapshot: every
// paper carries the citations it has accumulated up to snapshot_year.
struct CareerRecord {
    std::vector<CareerPaper> papers;
    int first_year = 0;
    int snapshot_year = 0;
};

// Validates years against the snapshot and computes first_year.
// Throws ValidationError on an empty paper list or a paper published
// after the snapshot.
CareerRecord make_career_record(std::vector<CareerPaper> papers,
                                int snapshot_year);

// Years since the first publication, inclusive (a single-year career
// has age 1).
int publishing_age(const CareerRecord& record);

// Raw citation counts of all papers.
std::vector<CitationValue> raw_values(const CareerRecord& record);

// Rank-weighted values. With strict_alphabetical set, papers whose rank
// is positional-on-alphabetical are excluded outright.
std::vector<CitationValue> weighted_values(const CareerRecord& record,
                                           bool strict_alphabetical = false);

struct SeriesPoint {
    int year;
    double value;
};

// Year-indexed values with strictly increasing years.
using CareerSeries = std::vector<SeriesPoint>;

// h (or the rank-weighted h when modified) over the papers published in
// the first years up to y, for every y from first_year to snapshot_year.
// Each paper contributes its full snapshot citation count, so the series
// is non-decreasing.
CareerSeries h_trajectory(const CareerRecord& record, bool modified,
                          bool strict_alphabetical = false);

// Papers published per year, zero-count years included.
CareerSeries publication_rate(const CareerRecord& record);

// Mean author rank per year; years without papers are omitted.
CareerSeries average_author_rank(const CareerRecord& record);

// Hirsch's comparison coefficient m = h / publishing_age.
double m_coefficient(long long h, int publishing_age);

// Least-squares slope through the origin of value against publishing
// age (year - first_year + 1), fitted over the whole series. With no
// explicit first_year the series' own first year is used; a full
// h-trajectory always starts there.
double m_fit(const CareerSeries& series,
             std::optional<int> first_year = std::nullopt);

// One researcher in a cohort table: plain and rank-weighted h, total
// citations, and m.
struct CohortRow {
    std::string name;
    long long h = 0;
    long long h_mod = 0;
    long long c = 0;
    long long c_mod = 0;
    double m = 0.0;
    double m_mod = 0.0;
};

struct ColumnStats {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, n-1 denominator
};

struct CohortSummary {
    ColumnStats h, h_mod, c, c_mod, m, m_mod;
    // (mean - mean_mod) / mean, as a fraction.
    double h_reduction = 0.0;
    double c_reduction = 0.0;
    double m_reduction = 0.0;
    std::size_t rows = 0;
};

// Means, sample standard deviations and relative reductions over a
// cohort. Throws std::invalid_argument with fewer than 2 rows.
CohortSummary cohort_stats(std::span<const CohortRow> rows);

}  // namespace citecredit
