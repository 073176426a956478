#include "refrank/ingest.hpp"

#include "refrank/errors.hpp"
#include "refrank/strings.hpp"

namespace refrank::ingest {

namespace {

constexpr std::string_view kPdfMagic = "%PDF";

std::size_t count_lines(const std::string& text) {
    if (text.empty()) return 0;
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    if (text.back() != '\n') ++lines;
    return lines;
}

}  // namespace

Format resolve_format(const SourceDocument& doc) {
    if (doc.format_hint != Format::auto_detect) return doc.format_hint;
    if (doc.bytes.size() >= kPdfMagic.size() &&
        std::string_view(doc.bytes).substr(0, kPdfMagic.size()) == kPdfMagic) {
        return Format::pdf;
    }
    return Format::plain_text;
}

NormalizedText normalize_text(std::string text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        } else {
            out.push_back(text[i]);
        }
    }
    NormalizedText result;
    result.line_count = count_lines(out);
    result.text = std::move(out);
    return result;
}

NormalizedText extract_text(const SourceDocument& doc, const TextExtractionAdapter* adapter) {
    if (doc.bytes.empty()) throw UnsupportedFormat("input document is empty");

    switch (resolve_format(doc)) {
        case Format::plain_text:
            return normalize_text(strings::utf8_sanitize(doc.bytes));
        case Format::pdf: {
            if (adapter == nullptr) {
                throw ExtractionFailed("pdf input but no text-extraction adapter configured");
            }
            return normalize_text(strings::utf8_sanitize(adapter->extract(doc.bytes)));
        }
        case Format::auto_detect:
            break;  // resolve_format never returns auto_detect
    }
    throw UnsupportedFormat("unresolvable document format");
}

}  // namespace refrank::ingest
