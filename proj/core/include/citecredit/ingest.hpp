#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citecredit/career.hpp"

namespace citecredit {

// One publication as it appears in an input file, before any researcher
// is resolved against it.
struct Publication {
    std::string id;
    std::string title;  // optional, empty when absent (JSONL only)
    int year = 0;
    std::vector<std::string> authors;  // ordered, non-empty
    long long citations = 0;
    std::optional<int> rank_override;
    bool alphabetical = false;  // venue orders authors alphabetically

    friend bool operator==(const Publication&, const Publication&) = default;
};

enum class PublicationFormat { csv, jsonl };

// Sniffs JSONL (first significant byte '{') versus CSV. Leaves the
// stream position untouched.
PublicationFormat detect_format(std::istream& in);

// Parses and validates one dataset. Syntactic problems raise ParseError
// with the offending line; invariant violations (negative citations,
// empty author list, duplicate id, out-of-range rank override) raise
// ValidationError.
std::vector<Publication> parse_publications(std::istream& in,
                                            PublicationFormat format);

// Writes a dataset such that re-parsing yields the same publications
// field for field. CSV cannot carry titles; JSONL is lossless.
void write_publications(std::ostream& out, std::span<const Publication> pubs,
                        PublicationFormat format);

// The researcher whose rank is being resolved, with any name variants
// they publish under.
struct ResearcherProfile {
    std::string canonical_name;
    std::vector<std::string> aliases;
};

// JSON object with "canonical_name" and optional "aliases" array.
ResearcherProfile parse_profile(std::istream& in);

// Lower-cases ASCII letters, strips periods, trims, and collapses
// internal whitespace runs to single spaces. Bytes above ASCII pass
// through unchanged; variant spellings belong in the alias list.
std::string normalize_name(std::string_view name);

struct ResolvedRank {
    int rank;
    // Set when the rank is positional but the venue orders authors
    // alphabetically, making the position uninformative.
    bool alphabetical_warning;
};

// 1-based position of the unique author matching the profile, or the
// explicit rank_override when present. No match or more than one match
// raises ResolutionError; a guess is never made.
ResolvedRank resolve_author_rank(const Publication& pub,
                                 const ResearcherProfile& profile);

struct CareerWarning {
    std::string publication_id;
    std::string message;
};

struct BuiltCareer {
    CareerRecord record;
    std::vector<CareerWarning> warnings;
};

// Resolves every publication against the profile and assembles the
// career record. Any resolution failure aborts with the offending
// publication id; a snapshot earlier than some publication year is a
// ValidationError. Output paper count always equals input count.
BuiltCareer build_career(std::span<const Publication> pubs,
                         const ResearcherProfile& profile, int snapshot_year);

// CSV with header name,h,h_mod,c,c_mod,m,m_mod. Rows must satisfy
// h_mod <= h, c_mod <= c and m_mod <= m.
std::vector<CohortRow> parse_cohort_csv(std::istream& in);

}  // namespace citecredit
