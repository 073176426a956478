#pragma once

#include <cstddef>
#include <string>

namespace refrank::ingest {

enum class Format { plain_text, pdf, auto_detect };

/// Raw manuscript bytes plus a format hint. `auto_detect` resolves to pdf
/// iff the bytes begin with the `%PDF` magic prefix.
struct SourceDocument {
    std::string bytes;
    Format format_hint = Format::auto_detect;
};

/// Decoded manuscript text. All line endings are a single '\n'.
struct NormalizedText {
    std::string text;
    std::size_t line_count = 0;
};

/// Interface for pluggable PDF-to-text conversion. Implementations take the
/// raw bytes and either return extracted text or throw ExtractionFailed.
class TextExtractionAdapter {
public:
    virtual ~TextExtractionAdapter() = default;
    virtual std::string extract(const std::string& bytes) const = 0;
};

Format resolve_format(const SourceDocument& doc);

/// Builds a NormalizedText from already-decoded text: normalizes CRLF and
/// lone CR to '\n' and counts lines.
NormalizedText normalize_text(std::string text);

/// Decodes the document into normalized plain text. Plain-text input is a
/// pure UTF-8 (lossy) decode plus newline normalization; PDF input goes
/// through `adapter`. Throws UnsupportedFormat for empty bytes, and
/// ExtractionFailed when the adapter is missing or fails.
NormalizedText extract_text(const SourceDocument& doc,
                            const TextExtractionAdapter* adapter = nullptr);

}  // namespace refrank::ingest
