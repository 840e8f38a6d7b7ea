#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jobgap/analysis.hpp"
#include "jobgap/config.hpp"
#include "jobgap/corpus.hpp"
#include "jobgap/errors.hpp"
#include "jobgap/ingest.hpp"
#include "jobgap/report.hpp"
#include "jobgap/skills.hpp"

namespace {

using namespace jobgap;

struct CliOptions {
    std::string config_path;
    std::string from, to;
    std::string dict;
    std::string out;
    std::string archive_fixture;
    std::string base_url;
    std::string job_corpus;
    std::string syllabus_corpus;
    std::vector<std::string> skills;
    std::vector<std::string> phrases;
    int page_size = 0;
    double epsilon = -1;
    // import
    std::string dir;
    std::string kind = "syllabus";
    // match / dict-check positional-ish inputs
    std::string corpus_path;
};

// config file first, then explicit flags on top
RunConfig resolve_config(const CliOptions& opt) {
    RunConfig cfg;
    if (!opt.config_path.empty()) cfg = load_config(opt.config_path);
    if (!opt.from.empty()) cfg.date_from = parse_date(opt.from);
    if (!opt.to.empty()) cfg.date_to = parse_date(opt.to);
    if (!opt.dict.empty()) cfg.dictionary_path = opt.dict;
    if (!opt.out.empty()) cfg.out_dir = opt.out;
    if (!opt.archive_fixture.empty()) cfg.archive_fixture = opt.archive_fixture;
    if (!opt.base_url.empty()) cfg.base_url = opt.base_url;
    if (!opt.job_corpus.empty()) cfg.job_corpus_path = opt.job_corpus;
    if (!opt.syllabus_corpus.empty()) cfg.syllabus_corpus_path = opt.syllabus_corpus;
    if (!opt.skills.empty()) cfg.skills_filter = opt.skills;
    if (!opt.phrases.empty()) cfg.phrases = opt.phrases;
    if (opt.page_size > 0) cfg.page_size = opt.page_size;
    if (opt.epsilon >= 0) cfg.epsilon = opt.epsilon;
    if (cfg.date_to < cfg.date_from) throw ConfigError("--from is after --to");
    if (cfg.epsilon < 0) throw ConfigError("epsilon must be >= 0");
    if (cfg.page_size < 1) throw ConfigError("page_size must be >= 1");
    return cfg;
}

void print_report(const std::string& what, const IngestReport& report) {
    std::printf("%s: fetched %ld, kept %ld, pages %ld, failures %zu\n", what.c_str(),
                report.fetched, report.kept_after_dedup, report.pages,
                report.failures.size());
    for (const auto& f : report.failures) {
        if (f.page >= 0) {
            std::fprintf(stderr, "warning: page %ld: %s\n", f.page, f.reason.c_str());
        } else {
            std::fprintf(stderr, "warning: %s\n", f.reason.c_str());
        }
    }
}

int cmd_ingest(const CliOptions& opt) {
    RunConfig cfg = resolve_config(opt);
    if (cfg.archive_fixture.empty() && cfg.base_url.empty()) {
        throw ConfigError(
            "no archive source configured: set --archive-fixture or --base-url");
    }
    if (cfg.job_corpus_path.empty()) cfg.job_corpus_path = "job_posts.jsonl";

    std::unique_ptr<ArchiveBackend> backend;
    std::string source_label;
    if (!cfg.archive_fixture.empty()) {
        backend = std::make_unique<FixtureArchive>(
            load_fixture_archive(cfg.archive_fixture));
        source_label = "fixture:" + cfg.archive_fixture;
    } else {
        backend = std::make_unique<HttpArchive>(cfg.base_url);
        source_label = cfg.base_url;
    }

    Corpus corpus(DocKind::job_post);
    IngestReport total;
    for (const auto& phrase : cfg.phrases) {
        ArchiveQuery query{phrase, cfg.date_from, cfg.date_to, cfg.page_size,
                           source_label};
        IngestReport rep = fetch_job_posts(*backend, query, corpus);
        print_report("phrase '" + phrase + "'", rep);
        total.fetched += rep.fetched;
        total.kept_after_dedup += rep.kept_after_dedup;
        total.pages += rep.pages;
        total.failures.insert(total.failures.end(), rep.failures.begin(),
                              rep.failures.end());
    }
    corpus.sort_by_id();
    save_corpus(corpus, cfg.job_corpus_path);
    std::printf("total: fetched %ld, kept %ld -> %s (%zu documents)\n", total.fetched,
                total.kept_after_dedup, cfg.job_corpus_path.c_str(), corpus.size());
    return 0;
}

int cmd_import(const CliOptions& opt) {
    RunConfig cfg = resolve_config(opt);
    if (opt.dir.empty()) throw ConfigError("--dir is required");
    const DocKind kind = parse_doc_kind(opt.kind);
    std::string target = kind == DocKind::syllabus ? cfg.syllabus_corpus_path
                                                   : cfg.job_corpus_path;
    if (target.empty()) {
        target = kind == DocKind::syllabus ? "syllabi.jsonl" : "job_posts.jsonl";
    }

    Corpus corpus(kind);
    IngestReport rep = import_text_dir(opt.dir, kind, corpus);
    print_report("import " + opt.dir, rep);
    corpus.sort_by_id();
    save_corpus(corpus, target);
    std::printf("wrote %s (%zu documents)\n", target.c_str(), corpus.size());
    return 0;
}

int cmd_dict_check(const CliOptions& opt) {
    RunConfig cfg = resolve_config(opt);
    const std::string path = !opt.corpus_path.empty() ? opt.corpus_path
                                                      : cfg.dictionary_path;
    if (path.empty()) throw ConfigError("dictionary path required (--dict or argument)");
    const SkillDictionary dict = load_dictionary(path);
    std::size_t keywords = 0;
    for (const auto& entry : dict.entries()) keywords += entry.keywords.size();
    std::printf("OK: %zu skills, %zu keywords, %zu excluded\n", dict.entries().size(),
                keywords, dict.excluded_keywords().size());
    return 0;
}

int cmd_match(const CliOptions& opt) {
    RunConfig cfg = resolve_config(opt);
    const std::string path = !opt.corpus_path.empty() ? opt.corpus_path
                                                      : cfg.job_corpus_path;
    if (path.empty()) throw ConfigError("corpus path required (--corpus)");
    if (cfg.dictionary_path.empty()) throw ConfigError("dictionary path required (--dict)");

    const Corpus corpus = load_corpus(path);
    const SkillDictionary dict = load_dictionary(cfg.dictionary_path);
    for (const auto& ms : match_corpus(corpus, dict)) {
        nlohmann::ordered_json rec;
        rec["id"] = ms.document_id;
        rec["skills"] = ms.skills;
        std::printf("%s\n", rec.dump().c_str());
    }
    return 0;
}

struct AnalysisInputs {
    std::optional<Corpus> job;
    std::optional<Corpus> syllabi;
    SkillDictionary dict;
};

AnalysisInputs load_analysis_inputs(const RunConfig& cfg) {
    if (cfg.dictionary_path.empty()) {
        throw ConfigError("dictionary path required (--dict)");
    }
    AnalysisInputs in{std::nullopt, std::nullopt, load_dictionary(cfg.dictionary_path)};
    if (cfg.job_corpus_path.empty() && cfg.syllabus_corpus_path.empty()) {
        throw ConfigError("no corpus configured: set job_corpus and/or syllabus_corpus");
    }
    if (!cfg.job_corpus_path.empty()) {
        if (!std::filesystem::exists(cfg.job_corpus_path)) {
            throw DataError("job corpus not found: " + cfg.job_corpus_path);
        }
        in.job = load_corpus(cfg.job_corpus_path);
    }
    if (!cfg.syllabus_corpus_path.empty()) {
        if (!std::filesystem::exists(cfg.syllabus_corpus_path)) {
            throw DataError("syllabus corpus not found: " + cfg.syllabus_corpus_path);
        }
        in.syllabi = load_corpus(cfg.syllabus_corpus_path);
    }
    return in;
}

std::vector<CoverageRow> coverage_rows(const std::map<std::string, SkillRatio>& ratios) {
    std::vector<CoverageRow> rows;
    for (const auto& [skill, ratio] : ratios) {
        rows.push_back({skill, ratio.count, ratio.pct});
    }
    return rows;
}

ReportBundle build_bundle(const AnalysisInputs& in, const RunConfig& cfg,
                          std::vector<std::string>& notices) {
    ReportBundle bundle;
    const auto skill_names = in.dict.skill_names();

    std::map<std::string, double> edu_pct, job_pct;
    if (in.syllabi && !in.syllabi->empty()) {
        const auto matches = match_corpus(*in.syllabi, in.dict);
        const auto ratios =
            skill_ratio(matches, static_cast<long>(in.syllabi->size()), skill_names);
        bundle.coverage_edu = coverage_rows(ratios);
        for (const auto& [skill, r] : ratios) edu_pct[skill] = r.pct;
    } else if (in.syllabi) {
        notices.push_back("syllabus corpus is empty; education coverage skipped");
    }

    if (in.job && !in.job->empty()) {
        const auto matches = match_corpus(*in.job, in.dict);
        const auto ratios =
            skill_ratio(matches, static_cast<long>(in.job->size()), skill_names);
        bundle.coverage_job = coverage_rows(ratios);
        for (const auto& [skill, r] : ratios) job_pct[skill] = r.pct;

        bundle.interval_table =
            bin_by_interval(*in.job, matches, HalfYearInterval::of(cfg.date_from),
                            HalfYearInterval::of(cfg.date_to));
        if (bundle.interval_table.excluded > 0) {
            notices.push_back(std::to_string(bundle.interval_table.excluded) +
                              " job post(s) outside the date range were excluded");
        }

        // one trend per skill present in the table, filtered when requested
        std::map<std::string, std::vector<SeriesPoint>> series;
        for (const auto& stat : bundle.interval_table.stats) {
            series[stat.skill].push_back({stat.interval, stat.pct});
        }
        const auto& filter = cfg.skills_filter;
        for (const auto& [skill, points] : series) {
            if (!filter.empty() &&
                std::find(filter.begin(), filter.end(), skill) == filter.end()) {
                continue;
            }
            if (points.size() < 2) {
                notices.push_back("skill '" + skill +
                                  "' has fewer than two populated intervals; no trend");
                continue;
            }
            TrendFit fit = fit_trend(skill, points);
            bundle.trends.push_back({fit, trend_classification(fit, cfg.epsilon)});
        }
    } else {
        notices.push_back("no dated job corpus; interval and trend outputs skipped");
    }

    if (!edu_pct.empty() && !job_pct.empty()) {
        bundle.gaps = compute_gap(edu_pct, job_pct);
    } else {
        notices.push_back("gap table needs both corpora; skipped");
    }
    return bundle;
}

void print_summary(const ReportBundle& bundle) {
    const auto top5 = [](std::vector<CoverageRow> rows, const char* title) {
        if (rows.empty()) return;
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.count != b.count) return a.count > b.count;
            return a.skill < b.skill;
        });
        std::printf("%s\n", title);
        for (std::size_t i = 0; i < rows.size() && i < 5 && rows[i].count > 0; ++i) {
            std::printf("  %-20s %6ld  %s%%\n", rows[i].skill.c_str(), rows[i].count,
                        format_pct(rows[i].pct).c_str());
        }
    };
    top5(bundle.coverage_job, "top skills, job posts:");
    top5(bundle.coverage_edu, "top skills, syllabi:");

    if (!bundle.gaps.empty()) {
        auto gaps = bundle.gaps;
        std::sort(gaps.begin(), gaps.end(), [](const GapRow& a, const GapRow& b) {
            if (a.gap != b.gap) return a.gap > b.gap;
            return a.skill < b.skill;
        });
        std::printf("largest education/industry gaps:\n");
        for (std::size_t i = 0; i < gaps.size() && i < 5; ++i) {
            std::printf("  %-20s edu %s%%  job %s%%  gap %s pp\n", gaps[i].skill.c_str(),
                        format_pct(gaps[i].edu_pct).c_str(),
                        format_pct(gaps[i].job_pct).c_str(),
                        format_pct(gaps[i].gap).c_str());
        }
    }
}

int cmd_analyze(const CliOptions& opt, bool summary) {
    const RunConfig cfg = resolve_config(opt);
    const AnalysisInputs in = load_analysis_inputs(cfg);
    std::vector<std::string> notices;
    const ReportBundle bundle = build_bundle(in, cfg, notices);

    auto written = emit_csv(bundle, cfg.out_dir);
    auto charts = emit_charts(bundle, cfg.out_dir);
    written.insert(written.end(), charts.begin(), charts.end());

    for (const auto& note : notices) std::fprintf(stderr, "notice: %s\n", note.c_str());
    if (summary) {
        print_summary(bundle);
        std::printf("wrote %zu files to %s\n", written.size(), cfg.out_dir.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"job market vs education skill analysis"};
    app.require_subcommand(1);
    CliOptions opt;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "JSON config file");
        cmd->add_option("--from", opt.from, "start date (YYYY-MM-DD)");
        cmd->add_option("--to", opt.to, "end date (YYYY-MM-DD)");
        cmd->add_option("--dict", opt.dict, "skill dictionary file");
        cmd->add_option("--out", opt.out, "output directory");
        cmd->add_option("--archive-fixture", opt.archive_fixture,
                        "JSONL ad fixture (offline mode)");
        cmd->add_option("--skills", opt.skills, "restrict trend rows")->delimiter(',');
        cmd->add_option("--page-size", opt.page_size, "archive page size");
        cmd->add_option("--epsilon", opt.epsilon, "with_market deadband, pp/year");
        cmd->add_option("--job-corpus", opt.job_corpus, "job post corpus path");
        cmd->add_option("--syllabus-corpus", opt.syllabus_corpus,
                        "syllabus corpus path");
    };

    auto* ingest = app.add_subcommand("ingest", "fetch job posts from the ad archive");
    add_common(ingest);
    ingest->add_option("--base-url", opt.base_url, "live archive endpoint");
    ingest->add_option("--phrase", opt.phrases, "search phrase (repeatable)");

    auto* import_cmd = app.add_subcommand("import", "import a directory of text/pdf files");
    add_common(import_cmd);
    import_cmd->add_option("--dir", opt.dir, "directory to import")->required();
    import_cmd->add_option("--kind", opt.kind, "document kind (syllabus|job_post)");

    auto* match = app.add_subcommand("match", "print per-document skill matches");
    add_common(match);
    match->add_option("--corpus", opt.corpus_path, "corpus to match");

    auto* analyze = app.add_subcommand("analyze", "full analysis with summary");
    add_common(analyze);

    auto* report = app.add_subcommand("report", "emit CSV/SVG outputs only");
    add_common(report);

    auto* dict_check = app.add_subcommand("dict-check", "validate a dictionary file");
    add_common(dict_check);
    dict_check->add_option("path", opt.corpus_path, "dictionary file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1; --help is success
    }

    try {
        if (ingest->parsed()) return cmd_ingest(opt);
        if (import_cmd->parsed()) return cmd_import(opt);
        if (match->parsed()) return cmd_match(opt);
        if (analyze->parsed()) return cmd_analyze(opt, true);
        if (report->parsed()) return cmd_analyze(opt, false);
        if (dict_check->parsed()) return cmd_dict_check(opt);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
