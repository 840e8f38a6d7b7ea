#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jobgap/date.hpp"

namespace jobgap {

enum class DocKind { job_post, syllabus };

std::string_view to_string(DocKind kind);
DocKind parse_doc_kind(std::string_view text);

// One job post or one program syllabus, reduced to plain text plus
// provenance. Raw payloads (HTML, PDF bytes) are not retained.
struct Document {
    std::string id;
    DocKind kind = DocKind::job_post;
    std::string text;
    std::optional<Date> published_at; // required for job_post
    std::string source;               // archive name or file path
    std::optional<std::string> search_phrase;

    bool operator==(const Document&) const = default;
};

// Throws DataError unless: id non-empty, text non-empty after trimming,
// and published_at present for job posts.
void validate(const Document& doc);

// Ordered collection of documents of a single kind. Treated as immutable
// once ingestion finishes; duplicate ids may exist transiently between
// multi-phrase fetches and deduplicate().
class Corpus {
public:
    explicit Corpus(DocKind kind) : kind_(kind) {}

    DocKind kind() const { return kind_; }
    const std::vector<Document>& documents() const { return documents_; }
    std::size_t size() const { return documents_.size(); }
    bool empty() const { return documents_.empty(); }

    // Validates the document and rejects kind mismatches.
    void append(Document doc);

    void sort_by_id();

    bool operator==(const Corpus&) const = default;

private:
    DocKind kind_;
    std::vector<Document> documents_;
};

// Keeps the first occurrence of each id; stable order; idempotent.
Corpus deduplicate(const Corpus& corpus);

// One JSONL record per document, fields: id, kind, text, published_at
// (nullable), source, search_phrase (nullable). Rejects duplicate ids.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Reads documents in file order; malformed lines and duplicate ids are
// reported with line number / offending id.
Corpus load_corpus(const std::filesystem::path& path);

} // namespace jobgap
