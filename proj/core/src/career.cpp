#include "citecredit/career.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "citecredit/errors.hpp"

namespace citecredit {

CareerRecord make_career_record(std::vector<CareerPaper> papers,
                                int snapshot_year) {
    if (papers.empty()) {
        throw ValidationError("career record has no publications");
    }
    int first_year = papers.front().year;
    for (const CareerPaper& p : papers) {
        if (p.year > snapshot_year) {
            throw ValidationError(
                "publication '" + p.id + "' dated " + std::to_string(p.year) +
                " is later than the snapshot year " +
                std::to_string(snapshot_year));
        }
        first_year = std::min(first_year, p.year);
    }
    return CareerRecord{std::move(papers), first_year, snapshot_year};
}

int publishing_age(const CareerRecord& record) {
    return record.snapshot_year - record.first_year + 1;
}

std::vector<CitationValue> raw_values(const CareerRecord& record) {
    std::vector<CitationValue> out;
    out.reserve(record.papers.size());
    for (const CareerPaper& p : record.papers) {
        out.emplace_back(p.paper.citations);
    }
    return out;
}

std::vector<CitationValue> weighted_values(const CareerRecord& record,
                                           bool strict_alphabetical) {
    std::vector<CitationValue> out;
    out.reserve(record.papers.size());
    for (const CareerPaper& p : record.papers) {
        if (strict_alphabetical && p.alphabetical) continue;
        out.push_back(p.paper.weighted);
    }
    return out;
}

namespace {

void require_non_empty(const CareerRecord& record) {
    if (record.papers.empty()) {
        throw std::invalid_argument("career record has no publications");
    }
}

}  // namespace

CareerSeries h_trajectory(const CareerRecord& record, bool modified,
                          bool strict_alphabetical) {
    require_non_empty(record);
    CareerSeries series;
    series.reserve(
        static_cast<std::size_t>(record.snapshot_year - record.first_year + 1));
    for (int y = record.first_year; y <= record.snapshot_year; ++y) {
        std::vector<CitationValue> values;
        for (const CareerPaper& p : record.papers) {
            if (p.year > y) continue;
            if (modified) {
                if (strict_alphabetical && p.alphabetical) continue;
                values.push_back(p.paper.weighted);
            } else {
                values.emplace_back(p.paper.citations);
            }
        }
        series.push_back({y, static_cast<double>(h_index(values))});
    }
    return series;
}

CareerSeries publication_rate(const CareerRecord& record) {
    require_non_empty(record);
    std::map<int, int> counts;
    for (const CareerPaper& p : record.papers) ++counts[p.year];

    CareerSeries series;
    for (int y = record.first_year; y <= record.snapshot_year; ++y) {
        const auto it = counts.find(y);
        series.push_back({y, it == counts.end() ? 0.0 : double(it->second)});
    }
    return series;
}

CareerSeries average_author_rank(const CareerRecord& record) {
    require_non_empty(record);
    std::map<int, std::pair<long long, long long>> sums;  // year -> (sum, count)
    for (const CareerPaper& p : record.papers) {
        auto& [sum, count] = sums[p.year];
        sum += p.paper.auth_rank;
        ++count;
    }
    CareerSeries series;
    series.reserve(sums.size());
    for (const auto& [year, sc] : sums) {
        series.push_back({year, double(sc.first) / double(sc.second)});
    }
    return series;
}

double m_coefficient(long long h, int publishing_age) {
    if (publishing_age < 1) {
        throw std::invalid_argument("publishing age must be >= 1");
    }
    return static_cast<double>(h) / static_cast<double>(publishing_age);
}

double m_fit(const CareerSeries& series, std::optional<int> first_year) {
    if (series.empty()) {
        throw std::invalid_argument("cannot fit an empty series");
    }
    const int base = first_year.value_or(series.front().year);
    double num = 0.0;
    double den = 0.0;
    for (const SeriesPoint& p : series) {
        const double n = p.year - base + 1;
        num += n * p.value;
        den += n * n;
    }
    return num / den;
}

namespace {

ColumnStats column_stats(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

double reduction(double mean, double mean_mod) {
    return mean == 0.0 ? 0.0 : (mean - mean_mod) / mean;
}

}  // namespace

CohortSummary cohort_stats(std::span<const CohortRow> rows) {
    if (rows.size() < 2) {
        throw std::invalid_argument(
            "cohort statistics require at least 2 rows");
    }
    std::vector<double> h, h_mod, c, c_mod, m, m_mod;
    for (const CohortRow& row : rows) {
        h.push_back(static_cast<double>(row.h));
        h_mod.push_back(static_cast<double>(row.h_mod));
        c.push_back(static_cast<double>(row.c));
        c_mod.push_back(static_cast<double>(row.c_mod));
        m.push_back(row.m);
        m_mod.push_back(row.m_mod);
    }
    CohortSummary s;
    s.h = column_stats(h);
    s.h_mod = column_stats(h_mod);
    s.c = column_stats(c);
    s.c_mod = column_stats(c_mod);
    s.m = column_stats(m);
    s.m_mod = column_stats(m_mod);
    s.h_reduction = reduction(s.h.mean, s.h_mod.mean);
    s.c_reduction = reduction(s.c.mean, s.c_mod.mean);
    s.m_reduction = reduction(s.m.mean, s.m_mod.mean);
    s.rows = rows.size();
    return s;
}

}  // namespace citecredit
