#include "jobgap/skills.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "jobgap/errors.hpp"

namespace jobgap {

namespace {

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string ascii_lower_copy(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
}

void validate_entries(const std::vector<SkillEntry>& entries,
                      const std::vector<std::string>& excluded) {
    std::map<std::string, const SkillEntry*> by_name;
    std::map<std::string, std::string> keyword_owner; // lowered keyword -> skill
    for (const auto& entry : entries) {
        if (entry.skill.empty()) throw DataError("skill with empty name");
        if (!by_name.emplace(entry.skill, &entry).second) {
            throw DataError("duplicate skill name '" + entry.skill + "'");
        }
        if (entry.keywords.empty()) {
            throw DataError("skill '" + entry.skill + "' has no keywords");
        }
        for (const auto& kw : entry.keywords) {
            if (kw.empty()) {
                throw DataError("skill '" + entry.skill + "' has an empty keyword");
            }
            if (kw.back() == '.') {
                throw DataError("keyword '" + kw + "' of skill '" + entry.skill +
                                "' ends in '.', which can never match cleanly");
            }
            auto [it, inserted] = keyword_owner.emplace(ascii_lower_copy(kw), entry.skill);
            if (!inserted && it->second != entry.skill) {
                throw DataError("keyword '" + kw + "' maps to both '" + it->second +
                                "' and '" + entry.skill + "'");
            }
        }
    }
    for (const auto& ex : excluded) {
        auto it = keyword_owner.find(ascii_lower_copy(ex));
        if (it != keyword_owner.end()) {
            throw DataError("keyword '" + ex + "' of skill '" + it->second +
                            "' is also in the exclusion list");
        }
    }
}

} // namespace

bool is_identifier_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if ((u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9')) {
        return true;
    }
    return c == '#' || c == '+' || c == '.';
}

namespace {

// Both arguments already lowered.
bool occurs_lowered(std::string_view text, std::string_view keyword) {
    if (keyword.empty() || keyword.size() > text.size()) return false;
    std::size_t pos = 0;
    while ((pos = text.find(keyword, pos)) != std::string_view::npos) {
        const bool left_ok = pos == 0 || !is_identifier_char(text[pos - 1]);
        const std::size_t end = pos + keyword.size();
        const bool right_ok = end == text.size() || !is_identifier_char(text[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

} // namespace

bool keyword_occurs(std::string_view text, std::string_view keyword) {
    return occurs_lowered(ascii_lower_copy(text), ascii_lower_copy(keyword));
}

SkillDictionary SkillDictionary::from_entries(std::vector<SkillEntry> entries,
                                              std::vector<std::string> excluded) {
    validate_entries(entries, excluded);
    SkillDictionary dict;
    dict.entries_ = std::move(entries);
    dict.excluded_ = std::move(excluded);
    dict.lowered_.reserve(dict.entries_.size());
    for (const auto& entry : dict.entries_) {
        std::vector<std::string> lowered;
        lowered.reserve(entry.keywords.size());
        for (const auto& kw : entry.keywords) lowered.push_back(ascii_lower_copy(kw));
        dict.lowered_.push_back(std::move(lowered));
    }
    return dict;
}

std::vector<std::string> SkillDictionary::skill_names() const {
    std::vector<std::string> names;
    names.reserve(entries_.size());
    for (const auto& entry : entries_) names.push_back(entry.skill);
    return names;
}

SkillDictionary load_dictionary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read dictionary file: " + path.string());
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    if (!root.is_object() || !root.contains("skills")) {
        throw DataError(path.string() + ": expected top-level keys \"skills\" and \"excluded\"");
    }
    std::vector<SkillEntry> entries;
    std::vector<std::string> excluded;
    try {
        for (const auto& item : root.at("skills")) {
            SkillEntry entry;
            entry.skill = item.at("name").get<std::string>();
            entry.category = item.value("category", std::string{});
            entry.keywords = item.at("keywords").get<std::vector<std::string>>();
            entries.push_back(std::move(entry));
        }
        if (root.contains("excluded")) {
            excluded = root.at("excluded").get<std::vector<std::string>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    return SkillDictionary::from_entries(std::move(entries), std::move(excluded));
}

std::set<std::string> match_text(std::string_view text, const SkillDictionary& dict) {
    std::set<std::string> skills;
    if (text.empty()) return skills;
    const std::string lowered = ascii_lower_copy(text);
    const auto& entries = dict.entries();
    const auto& keywords = dict.lowered_keywords();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (const auto& kw : keywords[i]) {
            if (occurs_lowered(lowered, kw)) {
                skills.insert(entries[i].skill);
                break; // presence established, skip remaining synonyms
            }
        }
    }
    return skills;
}

MatchSet match_document(const Document& doc, const SkillDictionary& dict) {
    return MatchSet{doc.id, match_text(doc.text, dict)};
}

std::vector<MatchSet> match_corpus(const Corpus& corpus, const SkillDictionary& dict) {
    std::vector<MatchSet> out;
    out.reserve(corpus.size());
    for (const auto& doc : corpus.documents()) {
        out.push_back(match_document(doc, dict));
    }
    return out;
}

} // namespace jobgap
