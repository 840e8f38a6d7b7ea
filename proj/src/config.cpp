#include "jobgap/config.hpp"

#include <fstream>

#include <json.hpp>

#include "jobgap/errors.hpp"

namespace jobgap {

std::vector<std::string> RunConfig::default_search_phrases() {
    return {"software engineer", "software developer", "systemutvecklare",
            "mjukvaruutvecklare", "programmerare"};
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + path.string());
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }

    RunConfig cfg;
    try {
        cfg.base_url = root.value("base_url", cfg.base_url);
        cfg.archive_fixture = root.value("archive_fixture", cfg.archive_fixture);
        if (root.contains("phrases")) {
            cfg.phrases = root.at("phrases").get<std::vector<std::string>>();
        }
        if (root.contains("date_from")) {
            cfg.date_from = parse_date(root.at("date_from").get<std::string>());
        }
        if (root.contains("date_to")) {
            cfg.date_to = parse_date(root.at("date_to").get<std::string>());
        }
        cfg.dictionary_path = root.value("dictionary", cfg.dictionary_path);
        cfg.job_corpus_path = root.value("job_corpus", cfg.job_corpus_path);
        cfg.syllabus_corpus_path = root.value("syllabus_corpus", cfg.syllabus_corpus_path);
        cfg.out_dir = root.value("out_dir", cfg.out_dir);
        cfg.epsilon = root.value("epsilon", cfg.epsilon);
        cfg.page_size = root.value("page_size", cfg.page_size);
        if (root.contains("skills")) {
            cfg.skills_filter = root.at("skills").get<std::vector<std::string>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    } catch (const DataError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (cfg.epsilon < 0) throw ConfigError("epsilon must be >= 0");
    if (cfg.page_size < 1) throw ConfigError("page_size must be >= 1");
    return cfg;
}

} // namespace jobgap
