#pragma once

#include "refrank/ingest.hpp"

namespace refrank::ingest {

/// Text extraction for simple, digitally-born PDFs: walks content streams
/// (raw or FlateDecode when built with zlib) and emits the arguments of the
/// text-showing operators. No layout reconstruction, no OCR, no encryption.
class BasicPdfTextAdapter final : public TextExtractionAdapter {
public:
    std::string extract(const std::string& bytes) const override;
};

}  // namespace refrank::ingest
