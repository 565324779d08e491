// Command-line surface over the citecredit core: index computation with
// author-rank weighting, career trajectories, a constant-rate publishing
// model simulator, the per-paper credit curve and cohort statistics.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "citecredit/career.hpp"
#include "citecredit/errors.hpp"
#include "citecredit/ingest.hpp"
#include "citecredit/metrics.hpp"
#include "citecredit/model.hpp"

namespace {

using namespace citecredit;
using nlohmann::ordered_json;

enum class OutFormat { table, csv, json };

struct GlobalOptions {
    OutFormat format = OutFormat::table;
    std::string output_path;
    int precision = 2;
    bool strict_alphabetical = false;
    std::optional<int> snapshot_year;
};

// Data output goes to --output or stdout; warnings and csv-mode summary
// lines go to stderr so machine-readable output stays clean.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (path.empty()) {
            out_ = &std::cout;
            return;
        }
        file_.open(path, std::ios::binary);
        if (!file_) {
            throw ValidationError("cannot open output file: " + path);
        }
        out_ = &file_;
    }

    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_ = nullptr;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<Publication> load_publications(const std::string& path) {
    std::istringstream in(slurp(path));
    const PublicationFormat format = detect_format(in);
    return parse_publications(in, format);
}

ResearcherProfile load_profile(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_profile(in);
}

int default_snapshot(const std::vector<Publication>& pubs) {
    if (pubs.empty()) {
        throw ValidationError("publication list is empty");
    }
    int snapshot = pubs.front().year;
    for (const Publication& p : pubs) snapshot = std::max(snapshot, p.year);
    return snapshot;
}

void print_warnings(const BuiltCareer& career) {
    for (const CareerWarning& w : career.warnings) {
        std::cerr << "warning: publication '" << w.publication_id << "': "
                  << w.message << "\n";
    }
}

ordered_json rational_json(const Rational& v) {
    ordered_json j;
    if (v.get_num().fits_slong_p()) {
        j["numerator"] = v.get_num().get_si();
    } else {
        j["numerator"] = v.get_num().get_str();
    }
    if (v.get_den().fits_slong_p()) {
        j["denominator"] = v.get_den().get_si();
    } else {
        j["denominator"] = v.get_den().get_str();
    }
    j["value"] = v.get_d();
    return j;
}

double reduction_pct(double raw, double modified) {
    return raw == 0.0 ? 0.0 : (raw - modified) / raw * 100.0;
}

// ---------------------------------------------------------------------------
// compute

int run_compute(const GlobalOptions& g, const std::string& pubs_path,
                const std::string& profile_path) {
    const std::vector<Publication> pubs = load_publications(pubs_path);
    const ResearcherProfile profile = load_profile(profile_path);
    const int snapshot = g.snapshot_year.value_or(default_snapshot(pubs));
    const BuiltCareer career = build_career(pubs, profile, snapshot);
    print_warnings(career);

    const std::vector<CitationValue> raw = raw_values(career.record);
    const std::vector<CitationValue> weighted =
        weighted_values(career.record, g.strict_alphabetical);
    const IndexReport r = index_report(raw, false);
    const IndexReport m = index_report(weighted, true);

    const double red_c = reduction_pct(r.c.as_double(), m.c.as_double());
    const double red_h = reduction_pct(r.h, m.h);
    const double red_g = reduction_pct(r.g, m.g);
    const double red_e = reduction_pct(r.e, m.e);
    const double red_i10 = reduction_pct(r.i10, m.i10);

    OutputTarget target(g.output_path);
    std::ostream& out = target.stream();
    const int p = g.precision;

    switch (g.format) {
        case OutFormat::table: {
            out << std::left << std::setw(8) << "index" << std::setw(16)
                << "raw" << std::setw(16) << "weighted" << "reduction\n";
            const auto row = [&](const char* name, const std::string& raw_s,
                                 const std::string& mod_s, double red) {
                out << std::left << std::setw(8) << name << std::setw(16)
                    << raw_s << std::setw(16) << mod_s
                    << format_fixed(red, p) << "%\n";
            };
            row("c", format_fixed(r.c.value(), p), format_fixed(m.c.value(), p),
                red_c);
            row("h", std::to_string(r.h), std::to_string(m.h), red_h);
            row("g", std::to_string(r.g), std::to_string(m.g), red_g);
            row("e", format_fixed(r.e, p), format_fixed(m.e, p), red_e);
            row("i10", std::to_string(r.i10), std::to_string(m.i10), red_i10);
            break;
        }
        case OutFormat::csv: {
            out << "index,raw,modified,reduction_pct\n";
            out << "c," << format_fixed(r.c.value(), p) << ','
                << format_fixed(m.c.value(), p) << ',' << format_fixed(red_c, p)
                << '\n';
            out << "h," << r.h << ',' << m.h << ',' << format_fixed(red_h, p)
                << '\n';
            out << "g," << r.g << ',' << m.g << ',' << format_fixed(red_g, p)
                << '\n';
            out << "e," << format_fixed(r.e, p) << ',' << format_fixed(m.e, p)
                << ',' << format_fixed(red_e, p) << '\n';
            out << "i10," << r.i10 << ',' << m.i10 << ','
                << format_fixed(red_i10, p) << '\n';
            break;
        }
        case OutFormat::json: {
            ordered_json doc;
            doc["snapshot_year"] = snapshot;
            doc["papers"] = career.record.papers.size();
            doc["strict_alphabetical"] = g.strict_alphabetical;
            const auto report_json = [](const IndexReport& rep) {
                ordered_json j;
                j["c"] = rational_json(rep.c.value());
                j["h"] = rep.h;
                j["g"] = rep.g;
                j["e"] = rep.e;
                j["i10"] = rep.i10;
                return j;
            };
            doc["raw"] = report_json(r);
            doc["modified"] = report_json(m);
            doc["reduction_pct"] = {{"c", red_c},
                                    {"h", red_h},
                                    {"g", red_g},
                                    {"e", red_e},
                                    {"i10", red_i10}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// trajectory

int run_trajectory(const GlobalOptions& g, const std::string& pubs_path,
                   const std::string& profile_path) {
    const std::vector<Publication> pubs = load_publications(pubs_path);
    const ResearcherProfile profile = load_profile(profile_path);
    const int snapshot = g.snapshot_year.value_or(default_snapshot(pubs));
    const BuiltCareer career = build_career(pubs, profile, snapshot);
    print_warnings(career);
    const CareerRecord& record = career.record;

    const CareerSeries h_raw = h_trajectory(record, false);
    const CareerSeries h_mod =
        h_trajectory(record, true, g.strict_alphabetical);
    const CareerSeries rate = publication_rate(record);
    const CareerSeries ranks = average_author_rank(record);

    const int age = publishing_age(record);
    const double m_ratio_raw =
        m_coefficient(static_cast<long long>(h_raw.back().value), age);
    const double m_ratio_mod =
        m_coefficient(static_cast<long long>(h_mod.back().value), age);
    const double m_fit_raw = m_fit(h_raw);
    const double m_fit_mod = m_fit(h_mod);

    const auto mean_rank_at = [&](int year) -> std::optional<double> {
        for (const SeriesPoint& pt : ranks) {
            if (pt.year == year) return pt.value;
        }
        return std::nullopt;
    };

    OutputTarget target(g.output_path);
    std::ostream& out = target.stream();
    const int p = g.precision;

    switch (g.format) {
        case OutFormat::table: {
            out << std::left << std::setw(6) << "year" << std::setw(6) << "h"
                << std::setw(7) << "h_mod" << std::setw(8) << "papers"
                << "mean_rank\n";
            for (std::size_t i = 0; i < h_raw.size(); ++i) {
                const auto rank = mean_rank_at(h_raw[i].year);
                out << std::left << std::setw(6) << h_raw[i].year
                    << std::setw(6) << static_cast<long long>(h_raw[i].value)
                    << std::setw(7) << static_cast<long long>(h_mod[i].value)
                    << std::setw(8) << static_cast<long long>(rate[i].value)
                    << (rank ? format_fixed(*rank, p) : std::string("-"))
                    << '\n';
            }
            out << '\n';
            out << "m_ratio: raw " << format_fixed(m_ratio_raw, p)
                << ", weighted " << format_fixed(m_ratio_mod, p) << '\n';
            out << "m_fit:   raw " << format_fixed(m_fit_raw, p)
                << ", weighted " << format_fixed(m_fit_mod, p) << '\n';
            break;
        }
        case OutFormat::csv: {
            out << "year,h,h_mod,papers,mean_rank\n";
            for (std::size_t i = 0; i < h_raw.size(); ++i) {
                const auto rank = mean_rank_at(h_raw[i].year);
                out << h_raw[i].year << ','
                    << static_cast<long long>(h_raw[i].value) << ','
                    << static_cast<long long>(h_mod[i].value) << ','
                    << static_cast<long long>(rate[i].value) << ','
                    << (rank ? format_fixed(*rank, p) : std::string())
                    << '\n';
            }
            std::cerr << "m_ratio: raw " << format_fixed(m_ratio_raw, p)
                      << ", weighted " << format_fixed(m_ratio_mod, p) << '\n'
                      << "m_fit:   raw " << format_fixed(m_fit_raw, p)
                      << ", weighted " << format_fixed(m_fit_mod, p) << '\n';
            break;
        }
        case OutFormat::json: {
            ordered_json doc;
            doc["snapshot_year"] = snapshot;
            doc["first_year"] = record.first_year;
            doc["publishing_age"] = age;
            ordered_json series = ordered_json::array();
            for (std::size_t i = 0; i < h_raw.size(); ++i) {
                ordered_json pt;
                pt["year"] = h_raw[i].year;
                pt["h"] = static_cast<long long>(h_raw[i].value);
                pt["h_mod"] = static_cast<long long>(h_mod[i].value);
                pt["papers"] = static_cast<long long>(rate[i].value);
                const auto rank = mean_rank_at(h_raw[i].year);
                if (rank) {
                    pt["mean_rank"] = *rank;
                } else {
                    pt["mean_rank"] = nullptr;
                }
                series.push_back(std::move(pt));
            }
            doc["series"] = std::move(series);
            doc["m"] = {{"raw", {{"ratio", m_ratio_raw}, {"fit", m_fit_raw}}},
                        {"modified",
                         {{"ratio", m_ratio_mod}, {"fit", m_fit_mod}}}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(const GlobalOptions& g, const ModelParams& params,
                 int extra_papers, int extra_rank) {
    const SimulationResult sim = simulate_career(params);
    const double closed = closed_form_h(params);
    const double closed_w = closed_form_h_weighted(params);
    const double m_sim = double(sim.h) / params.years;
    const double m_mod_sim = double(sim.h_mod) / params.years;

    std::optional<HonoraryComparison> honorary;
    if (extra_papers > 0) {
        honorary = honorary_scenario({params, extra_papers, extra_rank});
    }

    std::vector<std::pair<std::string, std::string>> kv;
    const int p = g.precision;
    kv.emplace_back("p", std::to_string(params.papers_per_year));
    kv.emplace_back("c", std::to_string(params.citations_per_year));
    kv.emplace_back("n", std::to_string(params.years));
    kv.emplace_back("r", std::to_string(params.author_rank));
    kv.emplace_back("h_sim", std::to_string(sim.h));
    kv.emplace_back("h_mod_sim", std::to_string(sim.h_mod));
    kv.emplace_back("closed_h", format_fixed(closed, p));
    kv.emplace_back("closed_h_weighted", format_fixed(closed_w, p));
    kv.emplace_back("m_sim", format_fixed(m_sim, p));
    kv.emplace_back("m_mod_sim", format_fixed(m_mod_sim, p));
    kv.emplace_back("slowdown_rank", std::to_string(params.author_rank));
    kv.emplace_back("slowdown_model", format_fixed(model_slowdown(params), p));
    if (honorary) {
        kv.emplace_back("extra_papers_per_year", std::to_string(extra_papers));
        kv.emplace_back("extra_rank", std::to_string(extra_rank));
        kv.emplace_back("with_h", std::to_string(honorary->with_h));
        kv.emplace_back("with_h_mod", std::to_string(honorary->with_h_mod));
        kv.emplace_back("delta_h", std::to_string(honorary->delta_h));
        kv.emplace_back("delta_h_mod", std::to_string(honorary->delta_h_mod));
    }

    OutputTarget target(g.output_path);
    std::ostream& out = target.stream();

    switch (g.format) {
        case OutFormat::table:
            for (const auto& [key, value] : kv) {
                out << std::left << std::setw(24) << key << value << '\n';
            }
            break;
        case OutFormat::csv:
            out << "key,value\n";
            for (const auto& [key, value] : kv) {
                out << key << ',' << value << '\n';
            }
            break;
        case OutFormat::json: {
            ordered_json doc;
            doc["p"] = params.papers_per_year;
            doc["c"] = params.citations_per_year;
            doc["n"] = params.years;
            doc["r"] = params.author_rank;
            doc["h_sim"] = sim.h;
            doc["h_mod_sim"] = sim.h_mod;
            doc["closed_h"] = closed;
            doc["closed_h_weighted"] = closed_w;
            doc["m_sim"] = m_sim;
            doc["m_mod_sim"] = m_mod_sim;
            doc["slowdown_rank"] = params.author_rank;
            doc["slowdown_model"] = model_slowdown(params);
            if (honorary) {
                doc["honorary"] = {{"extra_papers_per_year", extra_papers},
                                   {"extra_rank", extra_rank},
                                   {"with_h", honorary->with_h},
                                   {"with_h_mod", honorary->with_h_mod},
                                   {"delta_h", honorary->delta_h},
                                   {"delta_h_mod", honorary->delta_h_mod}};
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// credit-curve

int run_credit_curve(const GlobalOptions& g, int n_max) {
    const std::vector<CreditPoint> curve = total_credit_curve(n_max);

    OutputTarget target(g.output_path);
    std::ostream& out = target.stream();
    const int p = g.precision;

    switch (g.format) {
        case OutFormat::table:
            out << std::left << std::setw(8) << "n" << std::setw(8) << "raw"
                << "weighted\n";
            for (const CreditPoint& pt : curve) {
                out << std::left << std::setw(8) << pt.authors << std::setw(8)
                    << pt.raw_total << format_fixed(pt.weighted_total, p)
                    << '\n';
            }
            break;
        case OutFormat::csv:
            out << "n,raw,weighted\n";
            for (const CreditPoint& pt : curve) {
                out << pt.authors << ',' << pt.raw_total << ','
                    << format_fixed(pt.weighted_total, p) << '\n';
            }
            break;
        case OutFormat::json: {
            ordered_json rows = ordered_json::array();
            for (const CreditPoint& pt : curve) {
                ordered_json row;
                row["n"] = pt.authors;
                row["raw"] = pt.raw_total;
                row["weighted"] = rational_json(pt.weighted_total);
                rows.push_back(std::move(row));
            }
            out << rows.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// cohort-stats

int run_cohort_stats(const GlobalOptions& g, const std::string& rows_path) {
    std::istringstream in(slurp(rows_path));
    const std::vector<CohortRow> rows = parse_cohort_csv(in);
    const CohortSummary s = cohort_stats(rows);

    OutputTarget target(g.output_path);
    std::ostream& out = target.stream();
    const int p = g.precision;

    switch (g.format) {
        case OutFormat::table: {
            out << "rows: " << s.rows << "\n\n";
            out << std::left << std::setw(8) << "column" << std::setw(14)
                << "mean" << "stddev\n";
            const auto row = [&](const char* name, const ColumnStats& cs) {
                out << std::left << std::setw(8) << name << std::setw(14)
                    << format_fixed(cs.mean, p) << format_fixed(cs.stddev, p)
                    << '\n';
            };
            row("h", s.h);
            row("h_mod", s.h_mod);
            row("c", s.c);
            row("c_mod", s.c_mod);
            row("m", s.m);
            row("m_mod", s.m_mod);
            out << '\n';
            out << "reduction_h   " << format_fixed(s.h_reduction * 100, p)
                << "%\n";
            out << "reduction_c   " << format_fixed(s.c_reduction * 100, p)
                << "%\n";
            out << "reduction_m   " << format_fixed(s.m_reduction * 100, p)
                << "%\n";
            break;
        }
        case OutFormat::csv: {
            out << "stat,value\n";
            out << "rows," << s.rows << '\n';
            const auto pair = [&](const char* name, const ColumnStats& cs) {
                out << "mean_" << name << ',' << format_fixed(cs.mean, p)
                    << '\n';
                out << "sd_" << name << ',' << format_fixed(cs.stddev, p)
                    << '\n';
            };
            pair("h", s.h);
            pair("h_mod", s.h_mod);
            pair("c", s.c);
            pair("c_mod", s.c_mod);
            pair("m", s.m);
            pair("m_mod", s.m_mod);
            out << "reduction_h_pct," << format_fixed(s.h_reduction * 100, p)
                << '\n';
            out << "reduction_c_pct," << format_fixed(s.c_reduction * 100, p)
                << '\n';
            out << "reduction_m_pct," << format_fixed(s.m_reduction * 100, p)
                << '\n';
            break;
        }
        case OutFormat::json: {
            ordered_json doc;
            doc["rows"] = s.rows;
            const auto stats_json = [](const ColumnStats& cs) {
                return ordered_json{{"mean", cs.mean}, {"stddev", cs.stddev}};
            };
            doc["h"] = stats_json(s.h);
            doc["h_mod"] = stats_json(s.h_mod);
            doc["c"] = stats_json(s.c);
            doc["c_mod"] = stats_json(s.c_mod);
            doc["m"] = stats_json(s.m);
            doc["m_mod"] = stats_json(s.m_mod);
            doc["reduction_pct"] = {{"h", s.h_reduction * 100},
                                    {"c", s.c_reduction * 100},
                                    {"m", s.m_reduction * 100}};
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"citation indexes with author-rank weighted variants"};
    app.require_subcommand(1);

    GlobalOptions g;
    const std::map<std::string, OutFormat> format_names{
        {"table", OutFormat::table},
        {"csv", OutFormat::csv},
        {"json", OutFormat::json}};
    app.add_option("--format", g.format, "output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    app.add_option("--output", g.output_path, "write data output to a file");
    app.add_option("--precision", g.precision,
                   "decimal places for real values")
        ->check(CLI::Range(0, 10));
    app.add_flag("--strict-alphabetical", g.strict_alphabetical,
                 "exclude alphabetically-ordered papers from weighted indexes");
    app.add_option("--snapshot-year", g.snapshot_year,
                   "citation snapshot year (default: latest publication year)");

    std::string pubs_path, profile_path, rows_path;

    CLI::App* compute = app.add_subcommand(
        "compute", "raw and rank-weighted c, h, g, e, i10 for one researcher");
    compute->fallthrough();
    compute->add_option("publications", pubs_path, "CSV or JSONL publications")
        ->required()
        ->check(CLI::ExistingFile);
    compute->add_option("profile", profile_path, "researcher profile JSON")
        ->required()
        ->check(CLI::ExistingFile);

    CLI::App* trajectory = app.add_subcommand(
        "trajectory",
        "per-year h, weighted h, publication rate and mean author rank");
    trajectory->fallthrough();
    trajectory
        ->add_option("publications", pubs_path, "CSV or JSONL publications")
        ->required()
        ->check(CLI::ExistingFile);
    trajectory->add_option("profile", profile_path, "researcher profile JSON")
        ->required()
        ->check(CLI::ExistingFile);

    CLI::App* simulate = app.add_subcommand(
        "simulate", "constant-rate publishing model: h against closed forms");
    simulate->fallthrough();
    ModelParams params;
    int extra_papers = 0;
    int extra_rank = 1;
    const auto positive = CLI::Range(1, std::numeric_limits<int>::max());
    simulate->add_option("-p,--papers", params.papers_per_year,
                         "papers published per year")
        ->required()
        ->check(positive);
    simulate->add_option("-c,--citations", params.citations_per_year,
                         "citations per paper per subsequent year")
        ->required()
        ->check(positive);
    simulate->add_option("-n,--years", params.years, "publishing age in years")
        ->required()
        ->check(positive);
    simulate->add_option("-r,--rank", params.author_rank,
                         "constant author rank")
        ->check(positive);
    simulate->add_option("--extra-papers", extra_papers,
                         "honorary papers picked up per year")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--extra-rank", extra_rank,
                         "author rank on honorary papers")
        ->check(positive);

    CLI::App* credit_curve = app.add_subcommand(
        "credit-curve",
        "total per-citation credit against author count: n vs H_n");
    credit_curve->fallthrough();
    int n_max = 0;
    credit_curve->add_option("n_max", n_max, "largest author count")
        ->required()
        ->check(positive);

    CLI::App* cohort = app.add_subcommand(
        "cohort-stats", "means, sample stddevs and reductions over a cohort");
    cohort->fallthrough();
    cohort->add_option("rows", rows_path, "cohort CSV")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(g, pubs_path, profile_path);
        if (trajectory->parsed()) {
            return run_trajectory(g, pubs_path, profile_path);
        }
        if (simulate->parsed()) {
            return run_simulate(g, params, extra_papers, extra_rank);
        }
        if (credit_curve->parsed()) return run_credit_curve(g, n_max);
        if (cohort->parsed()) return run_cohort_stats(g, rows_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
