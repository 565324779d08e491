// Acceptance suite: every release criterion in one binary, one pass/fail
// line each. Exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "citecredit/career.hpp"
#include "citecredit/errors.hpp"
#include "citecredit/ingest.hpp"
#include "citecredit/metrics.hpp"
#include "citecredit/model.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace citecredit;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw CheckFailure(message);
}

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path base = fs::temp_directory_path() /
                          ("citecredit_acc_" + std::to_string(::getpid()) +
                           "_" + std::to_string(counter++));
    const fs::path out_path = base.string() + ".out";
    const fs::path err_path = base.string() + ".err";
    const std::string cmd = std::string(CITECREDIT_CLI) + " " + args + " >" +
                            out_path.string() + " 2>" + err_path.string();
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp_file(out_path);
    result.err = slurp_file(err_path);
    fs::remove(out_path);
    fs::remove(err_path);
    return result;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() /
                       ("citecredit_acc_" + std::to_string(::getpid()) + "_" +
                        name);
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string json_int_or_string(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return std::to_string(v.get<long long>());
}

// --- criterion bodies -------------------------------------------------------

void criterion1_cohort_aggregates() {
    const std::string fixture =
        std::string(CITECREDIT_FIXTURES) + "/top_cs_cohort.csv";
    std::ifstream in(fixture);
    expect(in.good(), "fixture not readable: " + fixture);
    const std::vector<CohortRow> rows = parse_cohort_csv(in);
    expect(rows.size() == 11, "fixture must hold 11 researchers");

    const CohortSummary s = cohort_stats(rows);
    expect(format_fixed(s.h.mean, 0) == "118",
           "mean h printed at integer precision must be 118, got " +
               format_fixed(s.h.mean, 0));
    expect(format_fixed(s.h.stddev, 1) == "9.1",
           "sigma_h must print as 9.1, got " + format_fixed(s.h.stddev, 1));
    expect(format_fixed(s.h_mod.mean, 0) == "69",
           "mean weighted h must print as 69");
    expect(format_fixed(s.h_mod.stddev, 1) == "12.9",
           "sigma of weighted h must print as 12.9");
    expect(format_fixed(s.c.mean, 0) == "77898", "mean c must print as 77898");
    expect(format_fixed(s.c_mod.mean, 0) == "31830",
           "mean weighted c must print as 31830");
    expect(format_fixed(s.m.mean, 1) == "3.5", "mean m must print as 3.5");
    expect(format_fixed(s.m_mod.mean, 1) == "2.0",
           "mean weighted m must print as 2.0");

    expect(std::abs(s.h_reduction * 100 - 42.0) <= 2.0,
           "h reduction outside 42% +/- 2pp");
    expect(std::abs(s.c_reduction * 100 - 60.0) <= 2.0,
           "c reduction outside 60% +/- 2pp");
    expect(std::abs(s.m_reduction * 100 - 41.0) <= 2.0,
           "m reduction outside 41% +/- 2pp");

    const CliResult cli = run_cli("cohort-stats " + fixture + " --format csv");
    expect(cli.exit_code == 0, "cohort-stats must succeed on the fixture");
    expect(contains(cli.out, "mean_h,118.27\n"), "CLI mean_h line missing");
    expect(contains(cli.out, "sd_h,9.10\n"), "CLI sd_h line missing");
    expect(contains(cli.out, "mean_c_mod,31830.00\n"),
           "CLI mean_c_mod line missing");
}

void criterion2_model_closed_form() {
    const ModelParams example{2, 5, 35, 1};
    const SimulationResult sim = simulate_career(example);
    const double closed = closed_form_h(example);
    expect(sim.h == 50, "simulate(2,5,35) must give h = 50");
    expect(closed == 50.0, "closed form at (2,5,35) must be exactly 50");
    expect(static_cast<double>(sim.h) == closed,
           "simulated h must equal the closed form at (2,5,35)");

    for (int p = 1; p <= 5; ++p) {
        for (int c = 1; c <= 5; ++c) {
            for (int n : {5, 10, 20, 40, 80}) {
                const ModelParams params{p, c, n, 1};
                const int h = simulate_career(params).h;
                const double cf = closed_form_h(params);
                expect(std::abs(h - cf) <= p + c,
                       "grid deviation beyond p+c at p=" + std::to_string(p) +
                           " c=" + std::to_string(c) + " n=" +
                           std::to_string(n));
                if (n == 80) {
                    expect(std::abs(h - cf) / cf < 0.05,
                           "relative error >= 5% at n=80");
                }
            }
        }
    }
}

void criterion3_modified_model() {
    const ModelParams weighted{2, 5, 35, 2};
    const SimulationResult sim = simulate_career(weighted);
    expect(sim.h_mod == 38, "simulate(2,5,35,r=2) must give weighted h = 38");
    expect(std::abs(sim.h_mod - 350.0 / 9.0) <= 1.0,
           "weighted h must land within 1 of 350/9");
    expect(closed_form_h_weighted({2, 5, 35, 1}) == closed_form_h({2, 5, 35, 1}),
           "weighted closed form must reduce to the plain one at r=1");

    for (int p = 1; p <= 5; ++p) {
        for (int c = 1; c <= 5; ++c) {
            for (int n : {5, 10, 20, 40, 80}) {
                const SimulationResult r = simulate_career({p, c, n, 1});
                expect(r.h_mod == r.h, "rank 1 must leave h unchanged");
            }
        }
    }
}

void criterion4_weighting_properties() {
    std::mt19937 rng(424242);

    // Rank-1 identity for all five indexes.
    for (int trial = 0; trial < 500; ++trial) {
        const auto ps = oracles::random_papers(rng, 12, 400, 1);
        const auto raw = oracles::raw_of(ps);
        expect(apply_modified(c_index, ps) == c_index(raw), "c identity");
        expect(apply_modified(h_index, ps) == h_index(raw), "h identity");
        expect(apply_modified(g_index, ps) == g_index(raw), "g identity");
        expect(apply_modified(e_index, ps) == e_index(raw), "e identity");
        expect(apply_modified(i10_index, ps) == i10_index(raw),
               "i10 identity");
    }

    // Dominance for the monotone indexes over 10^4 randomized lists.
    for (int trial = 0; trial < 10000; ++trial) {
        const auto ps = oracles::random_papers(rng, 20, 500, 6);
        const auto raw = oracles::raw_of(ps);
        expect(apply_modified(c_index, ps) <= c_index(raw), "c dominance");
        expect(apply_modified(h_index, ps) <= h_index(raw), "h dominance");
        expect(apply_modified(g_index, ps) <= g_index(raw), "g dominance");
        expect(apply_modified(i10_index, ps) <= i10_index(raw),
               "i10 dominance");
    }

    // Exhaustive-candidate oracle equivalence on the bounded domain.
    const auto check_oracles = [](std::span<const CitationValue> values) {
        expect(h_index(values) == oracles::h_bruteforce(values),
               "h differs from the brute-force scan");
        expect(g_index(values) == oracles::g_bruteforce(values),
               "g differs from the brute-force scan");
    };
    check_oracles(std::vector<CitationValue>{});
    check_oracles(std::vector<CitationValue>(8, CitationValue(0)));
    check_oracles(std::vector<CitationValue>(8, CitationValue(20)));
    check_oracles(std::vector<CitationValue>(5, CitationValue(9, 2)));
    for (int trial = 0; trial < 10000; ++trial) {
        const auto ps = oracles::random_papers(rng, 8, 20, 4);
        check_oracles(weight_citations(ps));
        check_oracles(oracles::raw_of(ps));
    }
}

void criterion5_credit_curve() {
    expect(harmonic_number(2) == Rational(3, 2), "H_2 must be 3/2");
    expect(harmonic_number(5) == Rational(137, 60), "H_5 must be 137/60");

    const CliResult cli = run_cli("credit-curve 100 --format json");
    expect(cli.exit_code == 0, "credit-curve 100 must succeed");
    const auto rows = nlohmann::json::parse(cli.out);
    expect(rows.size() == 100, "credit-curve must emit 100 rows");

    for (int n = 1; n <= 100; ++n) {
        const auto& row = rows[static_cast<std::size_t>(n - 1)];
        expect(row["n"] == n, "row order must follow n");
        expect(row["raw"] == n, "raw credit must equal n");
        const Rational expected = oracles::harmonic_bruteforce(n);
        expect(json_int_or_string(row["weighted"]["numerator"]) ==
                   expected.get_num().get_str(),
               "H_" + std::to_string(n) + " numerator mismatch");
        expect(json_int_or_string(row["weighted"]["denominator"]) ==
                   expected.get_den().get_str(),
               "H_" + std::to_string(n) + " denominator mismatch");
        expect(expected.get_d() <= 1.0 + std::log(static_cast<double>(n)),
               "H_n must stay below 1 + ln n");
    }
}

void criterion6_trajectory_contract() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> year_dist(1990, 2010);
    std::uniform_int_distribution<long long> cit_dist(0, 300);
    std::uniform_int_distribution<int> rank_dist(1, 6);
    std::uniform_int_distribution<int> count_dist(1, 40);

    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<CareerPaper> papers;
        const int count = count_dist(rng);
        for (int i = 0; i < count; ++i) {
            papers.push_back({year_dist(rng),
                              RankedPaper(cit_dist(rng), rank_dist(rng)),
                              false,
                              ""});
        }
        const CareerRecord record = make_career_record(std::move(papers), 2011);
        const CareerSeries raw = h_trajectory(record, false);
        const CareerSeries mod = h_trajectory(record, true);
        expect(raw.size() == mod.size(), "series must align");
        for (std::size_t i = 1; i < raw.size(); ++i) {
            expect(raw[i].value >= raw[i - 1].value,
                   "raw trajectory must be non-decreasing");
            expect(mod[i].value >= mod[i - 1].value,
                   "weighted trajectory must be non-decreasing");
        }
        for (std::size_t i = 0; i < raw.size(); ++i) {
            expect(mod[i].value <= raw[i].value,
                   "weighted trajectory must not exceed the raw one");
        }
        expect(raw.back().value == h_index(raw_values(record)),
               "terminal raw h must match the full record");
        expect(mod.back().value == h_index(weighted_values(record)),
               "terminal weighted h must match the full record");
    }
}

void criterion7_honorary_scenarios() {
    const std::vector<ModelParams> bases = {
        {1, 2, 10, 1}, {1, 2, 25, 1}, {1, 5, 10, 1}, {1, 5, 25, 1},
        {2, 2, 10, 1}, {2, 2, 25, 1}, {2, 5, 10, 1}, {2, 5, 25, 1},
        {1, 3, 15, 1}, {2, 3, 20, 1}};
    const std::vector<std::pair<int, int>> extras = {{1, 3}, {2, 5}};

    int points = 0;
    for (const ModelParams& base : bases) {
        for (const auto& [extra_papers, extra_rank] : extras) {
            const HonoraryComparison cmp =
                honorary_scenario({base, extra_papers, extra_rank});
            expect(cmp.delta_h_mod >= 0, "honorary papers must never lower "
                                         "the weighted h");
            expect(cmp.delta_h >= cmp.delta_h_mod,
                   "weighted gain must not exceed the raw gain");
            ++points;
        }
    }
    expect(points == 20, "scenario grid must hold 20 points");

    for (int rank = 1; rank <= 12; ++rank) {
        expect(marginal_credit(rank - 1) == Rational(1, rank),
               "marginal credit at rank k must be exactly 1/k");
    }
}

void criterion8_roundtrip_and_exit_codes() {
    // 50-record mixed corpus, both formats, round-tripped field for field.
    std::size_t total = 0;
    {
        std::ifstream in(std::string(CITECREDIT_TEST_DATA) + "/corpus_a.csv");
        expect(in.good(), "corpus_a.csv not readable");
        const auto pubs = parse_publications(in, PublicationFormat::csv);
        std::ostringstream out;
        write_publications(out, pubs, PublicationFormat::csv);
        std::istringstream back(out.str());
        expect(parse_publications(back, PublicationFormat::csv) == pubs,
               "CSV round-trip must be the identity");
        total += pubs.size();

        // Cross-format: CSV records survive a JSONL round-trip too.
        std::ostringstream as_jsonl;
        write_publications(as_jsonl, pubs, PublicationFormat::jsonl);
        std::istringstream back2(as_jsonl.str());
        expect(parse_publications(back2, PublicationFormat::jsonl) == pubs,
               "CSV -> JSONL -> parse must preserve the dataset");
    }
    {
        std::ifstream in(std::string(CITECREDIT_TEST_DATA) + "/corpus_b.jsonl");
        expect(in.good(), "corpus_b.jsonl not readable");
        const auto pubs = parse_publications(in, PublicationFormat::jsonl);
        std::ostringstream out;
        write_publications(out, pubs, PublicationFormat::jsonl);
        std::istringstream back(out.str());
        expect(parse_publications(back, PublicationFormat::jsonl) == pubs,
               "JSONL round-trip must be the identity");
        total += pubs.size();
    }
    expect(total == 50, "corpus must hold exactly 50 records, got " +
                            std::to_string(total));

    // Designated exit codes.
    const fs::path profile =
        write_temp("profile.json", R"({"canonical_name": "A. Kim"})");
    const fs::path good = write_temp(
        "good.csv",
        "id,year,citations,authors,rank_override,alphabetical\n"
        "p1,2001,12,\"A. Kim\",,\n"
        "p2,2002,8,\"A. Kim; B. Jones\",,\n");
    const fs::path malformed = write_temp(
        "malformed.csv",
        "id,year,citations,authors,rank_override,alphabetical\n"
        "p1,2001,twelve,\"A. Kim\",,\n");
    const fs::path negative = write_temp(
        "negative.csv",
        "id,year,citations,authors,rank_override,alphabetical\n"
        "p1,2001,-12,\"A. Kim\",,\n");
    const fs::path unmatched = write_temp(
        "unmatched.csv",
        "id,year,citations,authors,rank_override,alphabetical\n"
        "p1,2001,12,\"B. Jones\",,\n");

    const auto code = [&](const std::string& args) {
        return run_cli(args).exit_code;
    };
    expect(code("compute " + good.string() + " " + profile.string()) == 0,
           "valid input must exit 0");
    expect(code("compute") == 2, "missing arguments must exit 2");
    expect(code("simulate -p 0 -c 1 -n 1") == 2,
           "non-positive model parameters must exit 2");
    expect(code("compute " + malformed.string() + " " + profile.string()) == 3,
           "malformed input must exit 3");
    expect(code("compute " + negative.string() + " " + profile.string()) == 4,
           "validation failures must exit 4");
    expect(code("compute " + unmatched.string() + " " + profile.string()) == 4,
           "resolution failures must exit 4");

    for (const fs::path& p : {profile, good, malformed, negative, unmatched}) {
        fs::remove(p);
    }
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "cohort fixture reproduces the published aggregates",
         criterion1_cohort_aggregates},
        {2, "simulated h tracks the closed form over the grid",
         criterion2_model_closed_form},
        {3, "rank-weighted model: h_mod = 38 at (2,5,35,r=2), r=1 is exact",
         criterion3_modified_model},
        {4, "weighting identity, dominance and oracle equivalence",
         criterion4_weighting_properties},
        {5, "credit curve matches exact harmonic numbers to n = 100",
         criterion5_credit_curve},
        {6, "trajectory contract on 1000 randomized careers",
         criterion6_trajectory_contract},
        {7, "honorary scenarios: delta_h >= delta_h_mod >= 0, 1/k marginals",
         criterion7_honorary_scenarios},
        {8, "ingestion round-trip and designated exit codes",
         criterion8_roundtrip_and_exit_codes},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.body();
            std::cout << "[PASS] criterion " << c.number << ": " << c.title
                      << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << c.number << ": " << c.title
                      << " (" << e.what() << ")\n";
        }
    }
    if (failures > 0) {
        std::cout << failures << " of " << criteria.size()
                  << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
