#pragma once

#include <vector>

#include "citecredit/rational.hpp"

namespace citecredit {

// Constant-rate publishing model: a researcher publishes p papers per
// year at a fixed author rank r, and each paper is cited c times in
// every year after the one it appeared in.
struct ModelParams {
    int papers_per_year = 1;    // p
    int citations_per_year = 1; // c
    int years = 1;              // n, publishing age
    int author_rank = 1;        // r

    // Throws std::invalid_argument unless all four are >= 1.
    void validate() const;
};

struct SimulatedPaper {
    int year;             // 1-based publication year within the career
    long long citations;  // c * (years - year): cited every later year
    int auth_rank;
};

struct SimulationResult {
    std::vector<SimulatedPaper> papers;
    int h = 0;      // h over raw citation counts
    int h_mod = 0;  // h over citations / auth_rank
};

// Deterministic simulation of the model at publishing age n.
SimulationResult simulate_career(const ModelParams& params);

// Continuum-limit h of the model: p*c*n / (p + c).
double closed_form_h(const ModelParams& params);

// Continuum-limit h over rank-weighted citations: p*c*n / (c + p*r).
// Reduces to closed_form_h at r = 1. Derived from the model here, not
// a published formula.
double closed_form_h_weighted(const ModelParams& params);

// The weighted index grows slower than the raw one by this factor,
// (c + p*r) / (c + p). It approaches r only when p dominates c.
double model_slowdown(const ModelParams& params);

// A career plus extra_papers_per_year honorary papers per year taken at
// author rank extra_rank, under the same citation law.
struct HonoraryScenario {
    ModelParams base;
    int extra_papers_per_year = 0;
    int extra_rank = 1;

    void validate() const;
};

struct HonoraryComparison {
    int base_h = 0;
    int base_h_mod = 0;
    int with_h = 0;
    int with_h_mod = 0;
    int delta_h = 0;
    int delta_h_mod = 0;
};

HonoraryComparison honorary_scenario(const HonoraryScenario& scenario);

// Per-citation credit split across the n authors of one paper: shares
// 1, 1/2, ..., 1/n, total H_n, and the 1/n granted to the last author
// added. Every marginal is positive and strictly smaller than the one
// before it.
struct CreditGameSummary {
    int authors = 0;
    Rational total;
    std::vector<Rational> credits;
    Rational marginal;
};

CreditGameSummary credit_game_summary(int n_authors);

}  // namespace citecredit
