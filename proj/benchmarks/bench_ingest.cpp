#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "citecredit/ingest.hpp"

namespace {

using namespace citecredit;

std::string synthetic_csv(int rows) {
    std::ostringstream out;
    out << "id,year,citations,authors,rank_override,alphabetical\n";
    for (int i = 0; i < rows; ++i) {
        out << 'p' << i << ',' << 1980 + i % 40 << ',' << (i * 37) % 900
            << ",\"A. Author; B. Builder; C. Candidate\",,\n";
    }
    return out.str();
}

std::string synthetic_jsonl(int rows) {
    std::ostringstream out;
    for (int i = 0; i < rows; ++i) {
        out << R"({"id":"p)" << i << R"(","year":)" << 1980 + i % 40
            << R"(,"citations":)" << (i * 37) % 900
            << R"(,"authors":["A. Author","B. Builder"]})"
            << '\n';
    }
    return out.str();
}

void BM_parse_csv(benchmark::State& state) {
    const std::string data = synthetic_csv(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::istringstream in(data);
        benchmark::DoNotOptimize(
            parse_publications(in, PublicationFormat::csv));
    }
    state.SetBytesProcessed(
        static_cast<int64_t>(state.iterations()) *
        static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_parse_csv)->Arg(100)->Arg(1000)->Arg(10000);

void BM_parse_jsonl(benchmark::State& state) {
    const std::string data = synthetic_jsonl(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::istringstream in(data);
        benchmark::DoNotOptimize(
            parse_publications(in, PublicationFormat::jsonl));
    }
    state.SetBytesProcessed(
        static_cast<int64_t>(state.iterations()) *
        static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_parse_jsonl)->Arg(100)->Arg(1000)->Arg(10000);

void BM_resolve_rank(benchmark::State& state) {
    Publication pub;
    pub.id = "p";
    pub.year = 2000;
    pub.citations = 10;
    pub.authors = {"A. First", "B. Second", "C. Third", "R. Target",
                   "E. Fifth"};
    ResearcherProfile profile;
    profile.canonical_name = "R. Target";
    profile.aliases = {"Target, R.", "R Target"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolve_author_rank(pub, profile));
    }
}
BENCHMARK(BM_resolve_rank);

}  // namespace
