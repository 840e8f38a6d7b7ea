#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jobgap/date.hpp"

namespace jobgap {

// A full run pinned down in one file; command-line flags override fields.
struct RunConfig {
    std::string base_url;        // live archive endpoint root
    std::string archive_fixture; // path to a JSONL fixture; non-empty = offline mode
    std::vector<std::string> phrases = default_search_phrases();
    Date date_from{2016, 1, 1};
    Date date_to{2021, 12, 31};
    std::string dictionary_path;
    std::string job_corpus_path;
    std::string syllabus_corpus_path;
    std::string out_dir = "out";
    double epsilon = 0.05; // with_market deadband, pp/year
    int page_size = 100;
    std::vector<std::string> skills_filter; // restrict trend rows; empty = all

    static std::vector<std::string> default_search_phrases();
};

// JSON file mirroring the RunConfig fields (all optional).
RunConfig load_config(const std::filesystem::path& path);

} // namespace jobgap
