#include "refrank/pdf_adapter.hpp"

#include <optional>
#include <string_view>
#include <vector>

#include "refrank/errors.hpp"

#ifdef REFRANK_HAVE_ZLIB
#include <zlib.h>
#endif

namespace refrank::ingest {

namespace {

#ifdef REFRANK_HAVE_ZLIB
std::optional<std::string> inflate_bytes(std::string_view in) {
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) return std::nullopt;
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
    zs.avail_in = static_cast<uInt>(in.size());
    std::string out;
    char buf[16384];
    int rc = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf);
        zs.avail_out = sizeof(buf);
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            return std::nullopt;
        }
        out.append(buf, sizeof(buf) - zs.avail_out);
    } while (rc != Z_STREAM_END && zs.avail_in > 0);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END) return std::nullopt;
    return out;
}
#endif

// Decodes a PDF literal string body (between unescaped parens).
// `i` points just past '('; on return it points just past the closing ')'.
std::string read_literal_string(std::string_view s, std::size_t& i) {
    std::string out;
    int depth = 1;
    while (i < s.size()) {
        char c = s[i++];
        if (c == '\\') {
            if (i >= s.size()) break;
            char e = s[i++];
            switch (e) {
                case 'n': out.push_back('\n'); break;
                case 'r': out.push_back('\r'); break;
                case 't': out.push_back('\t'); break;
                case 'b': out.push_back('\b'); break;
                case 'f': out.push_back('\f'); break;
                case '(': out.push_back('('); break;
                case ')': out.push_back(')'); break;
                case '\\': out.push_back('\\'); break;
                case '\r':
                    if (i < s.size() && s[i] == '\n') ++i;
                    break;  // line continuation
                case '\n': break;
                default:
                    if (e >= '0' && e <= '7') {
                        int code = e - '0';
                        for (int k = 0; k < 2 && i < s.size() && s[i] >= '0' && s[i] <= '7'; ++k) {
                            code = code * 8 + (s[i++] - '0');
                        }
                        out.push_back(static_cast<char>(code & 0xFF));
                    } else {
                        out.push_back(e);
                    }
            }
        } else if (c == '(') {
            ++depth;
            out.push_back(c);
        } else if (c == ')') {
            if (--depth == 0) break;
            out.push_back(c);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string read_hex_string(std::string_view s, std::size_t& i) {
    std::string out;
    int hi = -1;
    while (i < s.size() && s[i] != '>') {
        char c = s[i++];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else continue;
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<char>((hi << 4) | v));
            hi = -1;
        }
    }
    if (hi >= 0) out.push_back(static_cast<char>(hi << 4));
    if (i < s.size()) ++i;  // consume '>'
    return out;
}

bool is_delim(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '(' ||
           c == ')' || c == '<' || c == '>' || c == '[' || c == ']' || c == '/' || c == '%';
}

// Runs the text-showing operators of one content stream. Strings accumulate
// until Tj/TJ/'/\" flushes them; Td/TD/T* start a new output line.
void scan_content_stream(std::string_view s, std::string& text) {
    std::vector<std::string> pending;
    auto flush = [&] {
        for (auto& p : pending) text += p;
        pending.clear();
    };
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '(') {
            ++i;
            pending.push_back(read_literal_string(s, i));
        } else if (c == '<') {
            if (i + 1 < s.size() && s[i + 1] == '<') {
                i += 2;  // dictionary start, not a string
            } else {
                ++i;
                pending.push_back(read_hex_string(s, i));
            }
        } else if (is_delim(c)) {
            ++i;
        } else {
            std::size_t start = i;
            while (i < s.size() && !is_delim(s[i])) ++i;
            std::string_view tok = s.substr(start, i - start);
            if (tok == "Tj" || tok == "TJ" || tok == "'" || tok == "\"") {
                flush();
            } else if (tok == "Td" || tok == "TD" || tok == "T*" || tok == "ET") {
                pending.clear();
                if (!text.empty() && text.back() != '\n') text.push_back('\n');
            } else if (tok == "BT") {
                pending.clear();
            }
        }
    }
}

}  // namespace

std::string BasicPdfTextAdapter::extract(const std::string& bytes) const {
    std::string_view pdf(bytes);
    if (pdf.substr(0, 4) != "%PDF") throw ExtractionFailed("missing %PDF header");

    std::string text;
    std::size_t pos = 0;
    bool saw_stream = false;
    while ((pos = pdf.find("stream", pos)) != std::string_view::npos) {
        // Skip matches inside words like "endstream".
        if (pos > 0 && !is_delim(pdf[pos - 1]) && pdf[pos - 1] != '>') {
            pos += 6;
            continue;
        }
        std::size_t data = pos + 6;
        if (data < pdf.size() && pdf[data] == '\r') ++data;
        if (data < pdf.size() && pdf[data] == '\n') ++data;
        const std::size_t end = pdf.find("endstream", data);
        if (end == std::string_view::npos) break;
        std::size_t data_end = end;
        while (data_end > data && (pdf[data_end - 1] == '\n' || pdf[data_end - 1] == '\r')) {
            --data_end;
        }

        // The stream dictionary sits between the enclosing "obj" and "stream".
        const std::size_t obj = pdf.rfind(" obj", pos);
        const std::size_t dict_from = (obj == std::string_view::npos) ? 0 : obj;
        const std::string_view dict = pdf.substr(dict_from, pos - dict_from);
        std::string_view body = pdf.substr(data, data_end - data);

        saw_stream = true;
        if (dict.find("/FlateDecode") != std::string_view::npos) {
#ifdef REFRANK_HAVE_ZLIB
            if (auto inflated = inflate_bytes(body)) {
                scan_content_stream(*inflated, text);
            }
            // Streams that fail to inflate (fonts, images) carry no text.
#else
            throw ExtractionFailed("FlateDecode stream but zlib support not built in");
#endif
        } else if (dict.find("/Filter") == std::string_view::npos) {
            scan_content_stream(body, text);
        }
        pos = end + 9;
    }

    if (!saw_stream) throw ExtractionFailed("no content streams found");
    return text;
}

}  // namespace refrank::ingest
