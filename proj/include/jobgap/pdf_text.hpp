#pragma once

#include <filesystem>
#include <string>

namespace jobgap {

// Minimal text extraction for text-based PDFs: walks the file's stream
// objects (plain or FlateDecode), then collects the string arguments of
// Tj / TJ / ' / " operators inside BT..ET blocks. Handles ()-escapes and
// octal sequences. Scanned or otherwise non-textual PDFs yield a
// DataError; OCR is out of scope.
std::string extract_pdf_text(const std::filesystem::path& path);

// Same, over an in-memory buffer (exposed for tests).
std::string extract_pdf_text_from_bytes(const std::string& bytes,
                                        const std::string& name = "<memory>");

} // namespace jobgap
