#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jobgap/corpus.hpp"

namespace jobgap {

// One canonical skill plus the literal strings that signal it.
// "HTML" and "HTML5" in a text both map to the skill "HTML/CSS".
struct SkillEntry {
    std::string skill;    // canonical display name
    std::string category; // free-text grouping label
    std::vector<std::string> keywords;
};

// Validated skill table. Construction enforces:
//  - canonical skill names unique
//  - a keyword string never maps to two different skills
//  - keywords non-empty, never the empty string, never ending in '.'
//  - no keyword appears in the exclusion list
class SkillDictionary {
public:
    static SkillDictionary from_entries(std::vector<SkillEntry> entries,
                                        std::vector<std::string> excluded);

    const std::vector<SkillEntry>& entries() const { return entries_; }
    const std::vector<std::string>& excluded_keywords() const { return excluded_; }

    // Pre-lowered keywords, parallel to entries(); what the matcher scans.
    const std::vector<std::vector<std::string>>& lowered_keywords() const {
        return lowered_;
    }

    std::vector<std::string> skill_names() const;

private:
    SkillDictionary() = default;
    std::vector<SkillEntry> entries_;
    std::vector<std::string> excluded_;
    std::vector<std::vector<std::string>> lowered_;
};

// Dictionary file: JSON with top-level keys "skills" (list of
// {name, category, keywords}) and "excluded" (list of strings).
SkillDictionary load_dictionary(const std::filesystem::path& path);

// Detected canonical skills for one document. Presence, not frequency:
// a skill appears at most once no matter how often its keywords repeat.
struct MatchSet {
    std::string document_id;
    std::set<std::string> skills;

    bool operator==(const MatchSet&) const = default;
};

// Boundary rule (normative): keyword K occurs in text T iff T contains K
// case-insensitively at a position where the characters immediately
// before and after the match are each absent (string edge) or outside
// the identifier class {letters, digits, '#', '+', '.'}. Hence "Java"
// never fires inside "JavaScript" and ".NET" never fires inside
// "ASP.NET", while "C++" matches in "C++," and "C#" at end of sentence.
// Case folding is plain ASCII; non-ASCII bytes compare as-is.
bool keyword_occurs(std::string_view text, std::string_view keyword);

bool is_identifier_char(char c);

std::set<std::string> match_text(std::string_view text, const SkillDictionary& dict);

MatchSet match_document(const Document& doc, const SkillDictionary& dict);

// One MatchSet per document, in corpus order.
std::vector<MatchSet> match_corpus(const Corpus& corpus, const SkillDictionary& dict);

} // namespace jobgap
