#include "jobgap/ingest.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>
#include <openssl/evp.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "jobgap/errors.hpp"
#include "jobgap/pdf_text.hpp"

namespace jobgap {

namespace {

std::string ascii_lower_copy(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](char c) {
        return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    });
    return out;
}

std::string collapse_whitespace(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = true; // leading whitespace dropped
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_ws) out += ' ';
            in_ws = true;
        } else {
            out += c;
            in_ws = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw DataError("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AdRecord ad_from_json(const nlohmann::json& rec) {
    AdRecord ad;
    ad.id = rec.at("id").get<std::string>();
    ad.headline = rec.value("headline", std::string{});
    ad.description = rec.value("description", std::string{});
    ad.publication_date = rec.at("publication_date").get<std::string>();
    return ad;
}

Document ad_to_document(const AdRecord& ad, const ArchiveQuery& query,
                        const std::string& source) {
    Document doc;
    doc.id = ad.id;
    doc.kind = DocKind::job_post;
    doc.text = ad.headline + "\n" + ad.description;
    doc.published_at = parse_date(ad.publication_date);
    doc.source = source;
    doc.search_phrase = query.phrase;
    validate(doc);
    return doc;
}

} // namespace

void validate(const ArchiveQuery& query) {
    if (query.phrase.empty()) throw ConfigError("archive query has empty phrase");
    if (!is_valid_date(query.date_from) || !is_valid_date(query.date_to)) {
        throw ConfigError("archive query has invalid dates");
    }
    if (query.date_to < query.date_from) {
        throw ConfigError("archive query: date_from after date_to");
    }
    if (query.page_size < 1) throw ConfigError("archive query: page_size must be >= 1");
}

std::vector<AdRecord> FixtureArchive::fetch_page(const ArchiveQuery& query,
                                                 long offset, int limit) {
    const std::string needle = ascii_lower_copy(query.phrase);
    std::vector<AdRecord> hits;
    for (const auto& ad : ads_) {
        const auto date = try_parse_date(ad.publication_date);
        if (date && (*date < query.date_from || *date > query.date_to)) continue;
        const std::string haystack = ascii_lower_copy(ad.headline + "\n" + ad.description);
        if (haystack.find(needle) == std::string::npos) continue;
        hits.push_back(ad);
    }
    if (offset >= static_cast<long>(hits.size())) return {};
    const auto first = hits.begin() + offset;
    const auto last = hits.begin() + std::min<long>(static_cast<long>(hits.size()),
                                                    offset + limit);
    return {first, last};
}

FixtureArchive load_fixture_archive(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read fixture archive: " + path.string());
    std::vector<AdRecord> ads;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            ads.push_back(ad_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw DataError(path.string() + ": line " + std::to_string(line_no) + ": " +
                            e.what());
        }
    }
    return FixtureArchive(std::move(ads));
}

struct HttpArchive::Impl {
    std::string origin; // scheme://host[:port]
    std::string path;   // endpoint path
    httplib::Client client;

    explicit Impl(std::string origin_, std::string path_)
        : origin(std::move(origin_)), path(std::move(path_)), client(origin) {
        client.set_connection_timeout(10);
        client.set_read_timeout(30);
    }
};

HttpArchive::HttpArchive(std::string base_url) {
    const auto scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("archive base_url needs a scheme: " + base_url);
    }
    const auto path_start = base_url.find('/', scheme_end + 3);
    std::string origin = path_start == std::string::npos
                             ? base_url
                             : base_url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/"
                                                       : base_url.substr(path_start);
    impl_ = std::make_unique<Impl>(std::move(origin), std::move(path));
}

HttpArchive::~HttpArchive() = default;

std::vector<AdRecord> HttpArchive::fetch_page(const ArchiveQuery& query,
                                              long offset, int limit) {
    httplib::Params params{
        {"q", query.phrase},
        {"published-after", to_string(query.date_from)},
        {"published-before", to_string(query.date_to)},
        {"limit", std::to_string(limit)},
        {"offset", std::to_string(offset)},
    };
    httplib::Headers headers;
    if (const char* key = std::getenv("JOBGAP_API_KEY"); key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    auto res = impl_->client.Get(impl_->path, params, headers);
    if (!res) {
        throw DataError("archive request failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw DataError("archive returned HTTP " + std::to_string(res->status));
    }
    nlohmann::json body;
    try {
        body = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("archive response is not valid JSON: ") + e.what());
    }
    if (!body.is_array()) throw DataError("archive response is not a record list");
    std::vector<AdRecord> ads;
    ads.reserve(body.size());
    for (const auto& rec : body) ads.push_back(ad_from_json(rec));
    return ads;
}

IngestReport fetch_job_posts(ArchiveBackend& archive, const ArchiveQuery& query,
                             Corpus& sink, const RetryPolicy& retry) {
    validate(query);
    if (sink.kind() != DocKind::job_post) {
        throw DataError("job posts can only be fetched into a job_post corpus");
    }

    IngestReport report;
    std::unordered_set<std::string> seen;
    for (const auto& doc : sink.documents()) seen.insert(doc.id);
    const std::string source =
        query.base_url.empty() ? std::string("archive") : query.base_url;

    for (long page = 0;; ++page) {
        std::vector<AdRecord> records;
        bool page_ok = false;
        auto backoff = retry.initial_backoff;
        for (int attempt = 1; attempt <= retry.attempts; ++attempt) {
            try {
                records = archive.fetch_page(query, page * query.page_size,
                                             query.page_size);
                page_ok = true;
                break;
            } catch (const std::exception& e) {
                if (attempt == retry.attempts) {
                    report.failures.push_back({page, e.what()});
                } else {
                    std::this_thread::sleep_for(backoff);
                    backoff *= 2;
                }
            }
        }
        if (!page_ok) break; // rest of this query is unreachable; move on

        if (!records.empty()) ++report.pages;
        report.fetched += static_cast<long>(records.size());
        for (const auto& ad : records) {
            Document doc;
            try {
                doc = ad_to_document(ad, query, source);
            } catch (const std::exception& e) {
                report.failures.push_back({page, e.what()});
                continue;
            }
            // inclusive date window; drop strays the backend let through
            if (*doc.published_at < query.date_from || *doc.published_at > query.date_to) {
                continue;
            }
            if (seen.insert(doc.id).second) {
                sink.append(std::move(doc));
                ++report.kept_after_dedup;
            }
        }
        if (static_cast<int>(records.size()) < query.page_size) break;
    }
    return report;
}

const ExtractorMap& default_extractors() {
    static const ExtractorMap map = {
        {".txt", [](const std::filesystem::path& p) { return read_file_bytes(p); }},
        {".pdf",
         [](const std::filesystem::path& p) {
             return collapse_whitespace(extract_pdf_text(p));
         }},
    };
    return map;
}

IngestReport import_text_dir(const std::filesystem::path& dir, DocKind kind,
                             Corpus& sink, const ExtractorMap& extractors) {
    if (!std::filesystem::is_directory(dir)) {
        throw DataError("not a directory: " + dir.string());
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = ascii_lower_copy(entry.path().extension().string());
        if (extractors.contains(ext)) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end()); // lexicographic, deterministic

    IngestReport report;
    std::unordered_set<std::string> seen;
    for (const auto& doc : sink.documents()) seen.insert(doc.id);

    for (const auto& file : files) {
        try {
            const std::string ext = ascii_lower_copy(file.extension().string());
            const std::string bytes = read_file_bytes(file);
            Document doc;
            doc.id = sha256_hex(bytes);
            doc.kind = kind;
            doc.text = extractors.at(ext)(file);
            doc.source = file.string();
            validate(doc);
            ++report.fetched;
            if (seen.insert(doc.id).second) {
                sink.append(std::move(doc));
                ++report.kept_after_dedup;
            }
        } catch (const std::exception& e) {
            report.failures.push_back({-1, e.what()});
        }
    }
    return report;
}

} // namespace jobgap
