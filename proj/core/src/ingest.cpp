#include "citecredit/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "citecredit/errors.hpp"

namespace citecredit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return std::string(s.substr(begin, end - begin));
}

long long parse_integer(const std::string& field, std::size_t line,
                        const char* what) {
    const std::string s = trim(field);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(line, std::string(what) + " is not an integer: '" +
                                   field + "'");
    }
    return value;
}

double parse_real(const std::string& field, std::size_t line, const char* what) {
    const std::string s = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(line, std::string(what) + " is not a number: '" +
                                   field + "'");
    }
    return value;
}

// Minimal RFC-4180 reader: quoted fields may contain commas, doubled
// quotes and newlines. Reports the line a record starts on.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& fields, std::size_t& record_line) {
        fields.clear();
        std::string field;
        bool in_quotes = false;
        bool any_input = false;
        record_line = line_ + 1;

        int ci;
        while ((ci = in_.get()) != std::char_traits<char>::eof()) {
            const char c = static_cast<char>(ci);
            any_input = true;
            if (in_quotes) {
                if (c == '"') {
                    if (in_.peek() == '"') {
                        field += '"';
                        in_.get();
                    } else {
                        in_quotes = false;
                    }
                } else {
                    if (c == '\n') ++line_;
                    field += c;
                }
                continue;
            }
            switch (c) {
                case '"':
                    in_quotes = true;
                    break;
                case ',':
                    fields.push_back(std::move(field));
                    field.clear();
                    break;
                case '\r':
                    break;  // dropped; record ends at the matching '\n'
                case '\n': {
                    ++line_;
                    fields.push_back(std::move(field));
                    field.clear();
                    if (fields.size() == 1 && fields[0].empty()) {
                        // blank line: start over on the next one
                        fields.clear();
                        any_input = false;
                        record_line = line_ + 1;
                        continue;
                    }
                    return true;
                }
                default:
                    field += c;
            }
        }
        if (in_quotes) {
            throw ParseError(record_line, "unterminated quoted field");
        }
        if (!any_input) return false;
        fields.push_back(std::move(field));
        if (fields.size() == 1 && fields[0].empty()) return false;
        return true;
    }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

void write_csv_field(std::ostream& out, std::string_view field,
                     bool force_quote = false) {
    const bool needs_quote =
        force_quote || field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quote) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

std::vector<std::string> split_authors(const std::string& field,
                                       std::size_t line) {
    std::vector<std::string> authors;
    std::size_t start = 0;
    while (start <= field.size()) {
        const std::size_t semi = field.find(';', start);
        const std::string name =
            trim(std::string_view(field).substr(start, semi == std::string::npos
                                                           ? std::string::npos
                                                           : semi - start));
        if (name.empty()) {
            throw ValidationError("line " + std::to_string(line) +
                                  ": empty author name in author list");
        }
        authors.push_back(name);
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return authors;
}

// Semantic checks shared by both formats. `where` identifies the record
// for error messages.
void validate_publication(const Publication& pub, const std::string& where) {
    if (pub.id.empty()) {
        throw ValidationError(where + ": publication id must not be empty");
    }
    if (pub.citations < 0) {
        throw ValidationError(where + ": negative citation count");
    }
    if (pub.authors.empty()) {
        throw ValidationError(where + ": author list must not be empty");
    }
    if (pub.rank_override) {
        if (*pub.rank_override < 1) {
            throw ValidationError(where + ": rank_override must be >= 1");
        }
        if (static_cast<std::size_t>(*pub.rank_override) > pub.authors.size()) {
            throw ValidationError(
                where + ": rank_override " + std::to_string(*pub.rank_override) +
                " exceeds the " + std::to_string(pub.authors.size()) +
                "-author list");
        }
    }
}

const std::vector<std::string> kPublicationHeader = {
    "id", "year", "citations", "authors", "rank_override", "alphabetical"};

std::vector<Publication> parse_publications_csv(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    std::size_t line = 0;

    if (!reader.next(fields, line)) {
        throw ParseError(1, "missing CSV header");
    }
    std::vector<std::string> header;
    header.reserve(fields.size());
    for (const std::string& f : fields) header.push_back(trim(f));
    if (header != kPublicationHeader) {
        throw ParseError(line,
                         "expected header id,year,citations,authors,"
                         "rank_override,alphabetical");
    }

    std::vector<Publication> pubs;
    std::unordered_set<std::string> seen_ids;
    while (reader.next(fields, line)) {
        if (fields.size() != kPublicationHeader.size()) {
            throw ParseError(line, "expected 6 fields, got " +
                                       std::to_string(fields.size()));
        }
        Publication pub;
        pub.id = trim(fields[0]);
        pub.year = static_cast<int>(parse_integer(fields[1], line, "year"));
        pub.citations = parse_integer(fields[2], line, "citations");
        if (!trim(fields[3]).empty()) {
            pub.authors = split_authors(fields[3], line);
        }
        if (!trim(fields[4]).empty()) {
            pub.rank_override =
                static_cast<int>(parse_integer(fields[4], line, "rank_override"));
        }
        const std::string alpha = trim(fields[5]);
        if (alpha.empty() || alpha == "false") {
            pub.alphabetical = false;
        } else if (alpha == "true") {
            pub.alphabetical = true;
        } else {
            throw ParseError(line, "alphabetical must be true, false or blank");
        }

        const std::string where = "line " + std::to_string(line);
        validate_publication(pub, where);
        if (!seen_ids.insert(pub.id).second) {
            throw ValidationError(where + ": duplicate publication id '" +
                                  pub.id + "'");
        }
        pubs.push_back(std::move(pub));
    }
    return pubs;
}

std::vector<Publication> parse_publications_jsonl(std::istream& in) {
    std::vector<Publication> pubs;
    std::unordered_set<std::string> seen_ids;
    std::string raw_line;
    std::size_t line = 0;
    while (std::getline(in, raw_line)) {
        ++line;
        if (trim(raw_line).empty()) continue;

        json record;
        try {
            record = json::parse(raw_line);
        } catch (const json::parse_error& e) {
            throw ParseError(line, e.what());
        }
        if (!record.is_object()) {
            throw ParseError(line, "record is not a JSON object");
        }

        Publication pub;
        if (!record.contains("id") || !record["id"].is_string()) {
            throw ParseError(line, "missing string field 'id'");
        }
        pub.id = record["id"].get<std::string>();
        if (!record.contains("year") || !record["year"].is_number_integer()) {
            throw ParseError(line, "missing integer field 'year'");
        }
        pub.year = record["year"].get<int>();
        if (!record.contains("citations") ||
            !record["citations"].is_number_integer()) {
            throw ParseError(line, "missing integer field 'citations'");
        }
        pub.citations = record["citations"].get<long long>();
        if (!record.contains("authors") || !record["authors"].is_array()) {
            throw ParseError(line, "missing array field 'authors'");
        }
        for (const json& author : record["authors"]) {
            if (!author.is_string()) {
                throw ParseError(line, "author entries must be strings");
            }
            pub.authors.push_back(author.get<std::string>());
        }
        if (record.contains("title")) {
            if (!record["title"].is_string()) {
                throw ParseError(line, "'title' must be a string");
            }
            pub.title = record["title"].get<std::string>();
        }
        if (record.contains("rank_override")) {
            if (!record["rank_override"].is_number_integer()) {
                throw ParseError(line, "'rank_override' must be an integer");
            }
            pub.rank_override = record["rank_override"].get<int>();
        }
        if (record.contains("alphabetical")) {
            if (!record["alphabetical"].is_boolean()) {
                throw ParseError(line, "'alphabetical' must be a boolean");
            }
            pub.alphabetical = record["alphabetical"].get<bool>();
        }

        const std::string where = "line " + std::to_string(line);
        for (const std::string& author : pub.authors) {
            if (trim(author).empty()) {
                throw ValidationError(where + ": empty author name");
            }
        }
        validate_publication(pub, where);
        if (!seen_ids.insert(pub.id).second) {
            throw ValidationError(where + ": duplicate publication id '" +
                                  pub.id + "'");
        }
        pubs.push_back(std::move(pub));
    }
    return pubs;
}

}  // namespace

PublicationFormat detect_format(std::istream& in) {
    const std::istream::pos_type start = in.tellg();
    PublicationFormat format = PublicationFormat::csv;
    int ci;
    while ((ci = in.get()) != std::char_traits<char>::eof()) {
        if (std::isspace(static_cast<unsigned char>(ci))) continue;
        if (ci == '{') format = PublicationFormat::jsonl;
        break;
    }
    in.clear();
    in.seekg(start);
    return format;
}

std::vector<Publication> parse_publications(std::istream& in,
                                            PublicationFormat format) {
    return format == PublicationFormat::csv ? parse_publications_csv(in)
                                            : parse_publications_jsonl(in);
}

void write_publications(std::ostream& out, std::span<const Publication> pubs,
                        PublicationFormat format) {
    if (format == PublicationFormat::csv) {
        out << "id,year,citations,authors,rank_override,alphabetical\n";
        for (const Publication& pub : pubs) {
            write_csv_field(out, pub.id);
            out << ',' << pub.year << ',' << pub.citations << ',';
            std::string joined;
            for (std::size_t i = 0; i < pub.authors.size(); ++i) {
                if (i > 0) joined += "; ";
                joined += pub.authors[i];
            }
            write_csv_field(out, joined, /*force_quote=*/true);
            out << ',';
            if (pub.rank_override) out << *pub.rank_override;
            out << ',' << (pub.alphabetical ? "true" : "false") << '\n';
        }
        return;
    }
    for (const Publication& pub : pubs) {
        ordered_json record;
        record["id"] = pub.id;
        if (!pub.title.empty()) record["title"] = pub.title;
        record["year"] = pub.year;
        record["citations"] = pub.citations;
        record["authors"] = pub.authors;
        if (pub.rank_override) record["rank_override"] = *pub.rank_override;
        if (pub.alphabetical) record["alphabetical"] = true;
        out << record.dump() << '\n';
    }
}

ResearcherProfile parse_profile(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(1, std::string("profile: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("canonical_name") ||
        !doc["canonical_name"].is_string()) {
        throw ParseError(1, "profile must be an object with a string "
                            "'canonical_name'");
    }
    ResearcherProfile profile;
    profile.canonical_name = doc["canonical_name"].get<std::string>();
    if (trim(profile.canonical_name).empty()) {
        throw ValidationError("profile: canonical_name must not be empty");
    }
    if (doc.contains("aliases")) {
        if (!doc["aliases"].is_array()) {
            throw ParseError(1, "profile: 'aliases' must be an array");
        }
        std::unordered_set<std::string> normalized;
        for (const json& alias : doc["aliases"]) {
            if (!alias.is_string()) {
                throw ParseError(1, "profile: alias entries must be strings");
            }
            std::string name = alias.get<std::string>();
            if (!normalized.insert(normalize_name(name)).second) {
                throw ValidationError(
                    "profile: duplicate alias after normalization: '" + name +
                    "'");
            }
            profile.aliases.push_back(std::move(name));
        }
    }
    return profile;
}

std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    bool pending_space = false;
    for (char ch : name) {
        const unsigned char c = static_cast<unsigned char>(ch);
        if (c == '.') continue;
        if (std::isspace(c)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out += ' ';
        pending_space = false;
        out += static_cast<char>(std::tolower(c));
    }
    return out;
}

ResolvedRank resolve_author_rank(const Publication& pub,
                                 const ResearcherProfile& profile) {
    if (pub.rank_override) {
        if (*pub.rank_override < 1 ||
            static_cast<std::size_t>(*pub.rank_override) > pub.authors.size()) {
            throw ValidationError("publication '" + pub.id +
                                  "': rank_override out of range");
        }
        return {*pub.rank_override, false};
    }

    std::unordered_set<std::string> candidates;
    candidates.insert(normalize_name(profile.canonical_name));
    for (const std::string& alias : profile.aliases) {
        candidates.insert(normalize_name(alias));
    }

    int match = -1;
    for (std::size_t i = 0; i < pub.authors.size(); ++i) {
        if (candidates.count(normalize_name(pub.authors[i])) == 0) continue;
        if (match >= 0) {
            throw ResolutionError(
                "publication '" + pub.id + "': ambiguous author match at "
                "positions " + std::to_string(match + 1) + " and " +
                std::to_string(i + 1));
        }
        match = static_cast<int>(i);
    }
    if (match < 0) {
        throw ResolutionError("publication '" + pub.id +
                              "': researcher is not among the authors");
    }
    return {match + 1, pub.alphabetical};
}

BuiltCareer build_career(std::span<const Publication> pubs,
                         const ResearcherProfile& profile, int snapshot_year) {
    if (pubs.empty()) {
        throw ValidationError("publication list is empty");
    }
    BuiltCareer built;
    std::vector<CareerPaper> papers;
    papers.reserve(pubs.size());
    for (const Publication& pub : pubs) {
        if (pub.year > snapshot_year) {
            throw ValidationError(
                "publication '" + pub.id + "' dated " +
                std::to_string(pub.year) + " is later than the snapshot year " +
                std::to_string(snapshot_year));
        }
        const ResolvedRank resolved = resolve_author_rank(pub, profile);
        if (resolved.alphabetical_warning) {
            built.warnings.push_back(
                {pub.id, "author order is alphabetical; positional rank " +
                             std::to_string(resolved.rank) +
                             " carries no contribution information"});
        }
        papers.push_back({pub.year, RankedPaper(pub.citations, resolved.rank),
                          resolved.alphabetical_warning, pub.id});
    }
    built.record = make_career_record(std::move(papers), snapshot_year);
    return built;
}

std::vector<CohortRow> parse_cohort_csv(std::istream& in) {
    static const std::vector<std::string> kHeader = {"name", "h",     "h_mod",
                                                     "c",    "c_mod", "m",
                                                     "m_mod"};
    CsvReader reader(in);
    std::vector<std::string> fields;
    std::size_t line = 0;
    if (!reader.next(fields, line)) {
        throw ParseError(1, "missing cohort CSV header");
    }
    std::vector<std::string> header;
    header.reserve(fields.size());
    for (const std::string& f : fields) header.push_back(trim(f));
    if (header != kHeader) {
        throw ParseError(line, "expected header name,h,h_mod,c,c_mod,m,m_mod");
    }

    std::vector<CohortRow> rows;
    while (reader.next(fields, line)) {
        if (fields.size() != kHeader.size()) {
            throw ParseError(line, "expected 7 fields, got " +
                                       std::to_string(fields.size()));
        }
        CohortRow row;
        row.name = trim(fields[0]);
        row.h = parse_integer(fields[1], line, "h");
        row.h_mod = parse_integer(fields[2], line, "h_mod");
        row.c = parse_integer(fields[3], line, "c");
        row.c_mod = parse_integer(fields[4], line, "c_mod");
        row.m = parse_real(fields[5], line, "m");
        row.m_mod = parse_real(fields[6], line, "m_mod");

        const std::string where = "line " + std::to_string(line);
        if (row.h < 0 || row.h_mod < 0 || row.c < 0 || row.c_mod < 0) {
            throw ValidationError(where + ": negative index value");
        }
        if (row.h_mod > row.h || row.c_mod > row.c || row.m_mod > row.m) {
            throw ValidationError(where +
                                  ": weighted columns must not exceed their "
                                  "unweighted counterparts");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace citecredit
