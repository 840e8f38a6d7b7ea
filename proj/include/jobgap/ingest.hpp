#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jobgap/corpus.hpp"

namespace jobgap {

// One search over the ad archive: phrase, inclusive date range, paging.
struct ArchiveQuery {
    std::string phrase;
    Date date_from;
    Date date_to;
    int page_size = 100;
    std::string base_url;
};

void validate(const ArchiveQuery& query);

struct PageFailure {
    long page = 0; // 0-based page index; -1 for non-page failures (bad files, bad records)
    std::string reason;
};

struct IngestReport {
    long fetched = 0;          // records received / files imported
    long kept_after_dedup = 0; // documents actually appended to the sink
    long pages = 0;            // pages that returned at least one record
    std::vector<PageFailure> failures;
};

// Ad record as served by the archive wire format.
struct AdRecord {
    std::string id;
    std::string headline;
    std::string description;
    std::string publication_date;
};

// A page source. fetch_page returns records [offset, offset+limit); a page
// shorter than limit means the result set is exhausted. Throws on
// transport-level failure.
class ArchiveBackend {
public:
    virtual ~ArchiveBackend() = default;
    virtual std::vector<AdRecord> fetch_page(const ArchiveQuery& query,
                                             long offset, int limit) = 0;
};

// In-process archive loaded from a JSONL fixture file (one wire record per
// line). Pagination, phrase search (case-insensitive phrase containment in
// headline+description) and date filtering behave like the live endpoint.
class FixtureArchive : public ArchiveBackend {
public:
    explicit FixtureArchive(std::vector<AdRecord> ads) : ads_(std::move(ads)) {}

    std::vector<AdRecord> fetch_page(const ArchiveQuery& query,
                                     long offset, int limit) override;

    std::size_t size() const { return ads_.size(); }

private:
    std::vector<AdRecord> ads_;
};

FixtureArchive load_fixture_archive(const std::filesystem::path& path);

// Live client: GET {base_url}?q=...&published-after=...&published-before=
// ...&limit=...&offset=... expecting a JSON array of wire records. Sends
// JOBGAP_API_KEY as a bearer token when the variable is set.
class HttpArchive : public ArchiveBackend {
public:
    explicit HttpArchive(std::string base_url);
    ~HttpArchive() override;

    std::vector<AdRecord> fetch_page(const ArchiveQuery& query,
                                     long offset, int limit) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct RetryPolicy {
    int attempts = 3;
    std::chrono::milliseconds initial_backoff{500}; // doubles per retry
};

// Pulls every ad matching the query and appends them to the sink as
// documents (post-dedup against ids already present). Pagination stops at
// the first short page. A page that still fails after the retry budget is
// recorded and ends pagination for this query; malformed records are
// skipped and recorded. Ads dated outside [date_from, date_to] never reach
// the sink.
IngestReport fetch_job_posts(ArchiveBackend& archive, const ArchiveQuery& query,
                             Corpus& sink, const RetryPolicy& retry = {});

using TextExtractor = std::function<std::string(const std::filesystem::path&)>;

// extension (with dot, lowercase) -> extractor
using ExtractorMap = std::map<std::string, TextExtractor>;

// ".txt" reads the file as-is; ".pdf" extracts text from content streams
// and collapses whitespace runs to single spaces.
const ExtractorMap& default_extractors();

// Imports every file in dir whose extension has an extractor, in
// lexicographic name order. Document id = lowercase hex SHA-256 of the
// file bytes; unreadable or unparseable files are recorded as failures and
// the run continues. Files with unsupported extensions are ignored.
IngestReport import_text_dir(const std::filesystem::path& dir, DocKind kind,
                             Corpus& sink,
                             const ExtractorMap& extractors = default_extractors());

} // namespace jobgap
