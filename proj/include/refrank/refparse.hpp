#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "refrank/ingest.hpp"

namespace refrank::refparse {

enum class Marker { upper, sentence };

/// The tail of the document after the reference-section heading.
struct ReferenceSection {
    std::string raw;
    Marker marker_used = Marker::upper;
};

/// One reference entry. `normalized` is free of CR, LF and decimal digits;
/// `author_tokens` keep their surface form and left-to-right order.
struct Citation {
    int index = 0;  // 1-based
    std::string raw;
    std::string normalized;
    std::vector<std::string> author_tokens;
};

struct AuthorMention {
    std::string canonical_name;  // trimmed, inner whitespace collapsed
    int citation_index = 0;
};

/// Words that disqualify a comma-separated part from being an author name
/// (venue names, connectives, dictionary words). Matching is case-insensitive
/// on whole words. Loadable from a plain-text file: one entry per line,
/// blank lines and `#` comments skipped.
class StopwordList {
public:
    static StopwordList builtin_default();
    static StopwordList from_file(const std::filesystem::path& path);

    bool matches(const std::string& token) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<std::string> entries_;  // lowercase
};

/// Splits on the LAST line-anchored "REFERENCES"; falls back to
/// "References". Throws NoReferenceSection when neither occurs.
ReferenceSection isolate_reference_section(const ingest::NormalizedText& text);

/// Segments on bracketed labels [1], [2], ... in ascending order, or on
/// numbered lines ("1. ...") when no bracketed labels exist. Output
/// citations carry raw text only, with 1-based contiguous indices.
/// Throws NoCitationsFound when no pattern matches.
std::vector<Citation> split_citations(const ReferenceSection& section);

/// Deletes CR/LF (each becomes a space) and every decimal digit, collapses
/// whitespace runs, trims. Total and idempotent.
std::string normalize_citation(const std::string& raw);

/// Comma-splits a normalized citation and keeps the valid author names that
/// appear before the first quote-opened part (the title). " and " and
/// "et al." connectives are treated as separators beforehand.
std::vector<std::string> extract_author_tokens(const std::string& normalized,
                                               const StopwordList& stopwords);

bool is_valid_author_name(const std::string& token, const StopwordList& stopwords);

/// Full parse: split, normalize and tokenize every citation of a section.
std::vector<Citation> parse_citations(const ReferenceSection& section,
                                      const StopwordList& stopwords);

/// Flattens citations into per-author mentions, in citation order.
std::vector<AuthorMention> collect_mentions(const std::vector<Citation>& citations);

}  // namespace refrank::refparse
