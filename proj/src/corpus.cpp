#include "jobgap/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "jobgap/errors.hpp"

namespace jobgap {

namespace {

bool is_blank(const std::string& text) {
    return std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

nlohmann::ordered_json to_record(const Document& doc) {
    nlohmann::ordered_json rec;
    rec["id"] = doc.id;
    rec["kind"] = std::string(to_string(doc.kind));
    rec["text"] = doc.text;
    rec["published_at"] =
        doc.published_at ? nlohmann::ordered_json(to_string(*doc.published_at))
                         : nlohmann::ordered_json(nullptr);
    rec["source"] = doc.source;
    rec["search_phrase"] = doc.search_phrase
                               ? nlohmann::ordered_json(*doc.search_phrase)
                               : nlohmann::ordered_json(nullptr);
    return rec;
}

Document from_record(const nlohmann::json& rec) {
    Document doc;
    doc.id = rec.at("id").get<std::string>();
    doc.kind = parse_doc_kind(rec.at("kind").get<std::string>());
    doc.text = rec.at("text").get<std::string>();
    if (rec.contains("published_at") && !rec.at("published_at").is_null()) {
        doc.published_at = parse_date(rec.at("published_at").get<std::string>());
    }
    doc.source = rec.value("source", std::string{});
    if (rec.contains("search_phrase") && !rec.at("search_phrase").is_null()) {
        doc.search_phrase = rec.at("search_phrase").get<std::string>();
    }
    return doc;
}

} // namespace

std::string_view to_string(DocKind kind) {
    return kind == DocKind::job_post ? "job_post" : "syllabus";
}

DocKind parse_doc_kind(std::string_view text) {
    if (text == "job_post") return DocKind::job_post;
    if (text == "syllabus") return DocKind::syllabus;
    throw DataError("unknown document kind: '" + std::string(text) + "'");
}

void validate(const Document& doc) {
    if (doc.id.empty()) throw DataError("document has empty id");
    if (is_blank(doc.text)) {
        throw DataError("document '" + doc.id + "' has empty text");
    }
    if (doc.kind == DocKind::job_post && !doc.published_at) {
        throw DataError("job post '" + doc.id + "' lacks published_at");
    }
    if (doc.published_at && !is_valid_date(*doc.published_at)) {
        throw DataError("document '" + doc.id + "' has invalid published_at");
    }
}

void Corpus::append(Document doc) {
    validate(doc);
    if (doc.kind != kind_) {
        throw DataError("document '" + doc.id + "' has kind " +
                        std::string(to_string(doc.kind)) + ", corpus holds " +
                        std::string(to_string(kind_)));
    }
    documents_.push_back(std::move(doc));
}

void Corpus::sort_by_id() {
    std::stable_sort(documents_.begin(), documents_.end(),
                     [](const Document& a, const Document& b) { return a.id < b.id; });
}

Corpus deduplicate(const Corpus& corpus) {
    Corpus out(corpus.kind());
    std::unordered_set<std::string> seen;
    for (const auto& doc : corpus.documents()) {
        if (seen.insert(doc.id).second) out.append(doc);
    }
    return out;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::unordered_set<std::string> seen;
    for (const auto& doc : corpus.documents()) {
        validate(doc);
        if (!seen.insert(doc.id).second) {
            throw DataError("corpus has duplicate id '" + doc.id +
                            "'; deduplicate before saving");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path.string());
    for (const auto& doc : corpus.documents()) {
        out << to_record(doc).dump() << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read corpus file: " + path.string());

    std::optional<Corpus> corpus;
    std::unordered_set<std::string> seen;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Document doc;
        try {
            doc = from_record(nlohmann::json::parse(line));
        } catch (const nlohmann::json::exception& e) {
            throw DataError(path.string() + ": line " + std::to_string(line_no) +
                            ": " + e.what());
        }
        validate(doc);
        if (!seen.insert(doc.id).second) {
            throw DataError(path.string() + ": line " + std::to_string(line_no) +
                            ": duplicate id '" + doc.id + "'");
        }
        if (!corpus) corpus.emplace(doc.kind);
        corpus->append(std::move(doc));
    }
    // An empty file loads as an empty job-post corpus; the kind of an empty
    // corpus is unobservable downstream.
    if (!corpus) corpus.emplace(DocKind::job_post);
    return *corpus;
}

} // namespace jobgap
