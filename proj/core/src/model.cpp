#include "citecredit/model.hpp"

#include <stdexcept>

#include "citecredit/metrics.hpp"

namespace citecredit {

void ModelParams::validate() const {
    if (papers_per_year < 1 || citations_per_year < 1 || years < 1 ||
        author_rank < 1) {
        throw std::invalid_argument(
            "model parameters p, c, n, r must all be >= 1");
    }
}

void HonoraryScenario::validate() const {
    base.validate();
    if (extra_papers_per_year < 0) {
        throw std::invalid_argument("extra papers per year must be >= 0");
    }
    if (extra_rank < 1) {
        throw std::invalid_argument("extra author rank must be >= 1");
    }
}

namespace {

// p papers in each year j = 1..n at the given rank, each cited c times
// per subsequent year: citations = c * (n - j), final-year papers uncited.
void append_papers(std::vector<SimulatedPaper>& papers, int p, int c, int n,
                   int rank) {
    for (int j = 1; j <= n; ++j) {
        const long long citations =
            static_cast<long long>(c) * (n - j);
        for (int i = 0; i < p; ++i) {
            papers.push_back({j, citations, rank});
        }
    }
}

int h_over(const std::vector<SimulatedPaper>& papers, bool weighted) {
    std::vector<CitationValue> values;
    values.reserve(papers.size());
    for (const SimulatedPaper& paper : papers) {
        if (weighted) {
            values.emplace_back(paper.citations, paper.auth_rank);
        } else {
            values.emplace_back(paper.citations);
        }
    }
    return h_index(values);
}

}  // namespace

SimulationResult simulate_career(const ModelParams& params) {
    params.validate();
    SimulationResult result;
    append_papers(result.papers, params.papers_per_year,
                  params.citations_per_year, params.years, params.author_rank);
    result.h = h_over(result.papers, false);
    result.h_mod = h_over(result.papers, true);
    return result;
}

double closed_form_h(const ModelParams& params) {
    params.validate();
    const double p = params.papers_per_year;
    const double c = params.citations_per_year;
    return p * c * params.years / (p + c);
}

double closed_form_h_weighted(const ModelParams& params) {
    params.validate();
    const double p = params.papers_per_year;
    const double c = params.citations_per_year;
    const double r = params.author_rank;
    return p * c * params.years / (c + p * r);
}

double model_slowdown(const ModelParams& params) {
    params.validate();
    const double p = params.papers_per_year;
    const double c = params.citations_per_year;
    const double r = params.author_rank;
    return (c + p * r) / (c + p);
}

HonoraryComparison honorary_scenario(const HonoraryScenario& scenario) {
    scenario.validate();
    const SimulationResult base = simulate_career(scenario.base);

    std::vector<SimulatedPaper> combined = base.papers;
    append_papers(combined, scenario.extra_papers_per_year,
                  scenario.base.citations_per_year, scenario.base.years,
                  scenario.extra_rank);

    HonoraryComparison cmp;
    cmp.base_h = base.h;
    cmp.base_h_mod = base.h_mod;
    cmp.with_h = h_over(combined, false);
    cmp.with_h_mod = h_over(combined, true);
    cmp.delta_h = cmp.with_h - cmp.base_h;
    cmp.delta_h_mod = cmp.with_h_mod - cmp.base_h_mod;
    return cmp;
}

CreditGameSummary credit_game_summary(int n_authors) {
    if (n_authors < 1) {
        throw std::invalid_argument("credit game requires >= 1 author");
    }
    CreditGameSummary summary;
    summary.authors = n_authors;
    summary.total = 0;
    for (int i = 1; i <= n_authors; ++i) {
        Rational share(1, i);
        if (share <= 0) {
            throw std::logic_error("author share must stay positive");
        }
        if (!summary.credits.empty() && share >= summary.credits.back()) {
            throw std::logic_error("author shares must strictly decrease");
        }
        summary.total += share;
        summary.credits.push_back(std::move(share));
    }
    summary.marginal = summary.credits.back();
    return summary;
}

}  // namespace citecredit
