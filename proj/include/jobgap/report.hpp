#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jobgap/analysis.hpp"

namespace jobgap {

struct CoverageRow {
    std::string skill;
    long count = 0;
    double pct = 0.0;
};

struct TrendRow {
    TrendFit fit;
    TrendClass cls = TrendClass::with_market;
};

struct ReportBundle {
    std::vector<CoverageRow> coverage_edu;
    std::vector<CoverageRow> coverage_job;
    IntervalBinning interval_table;
    std::vector<TrendRow> trends;
    std::vector<GapRow> gaps;
};

// Locale-independent fixed formatting, '.' decimal separator always.
std::string format_pct(double value);            // exactly 1 decimal
std::string format_double(double value, int precision);

// Writes coverage_edu.csv, coverage_job.csv, intervals.csv, trends.csv,
// gaps.csv into out_dir. Counts as integers, percentages with exactly one
// decimal; coverage rows ordered by count descending then name; UTF-8,
// '\n' line endings, comma-separated, '"'-quoted when needed.
std::vector<std::filesystem::path> emit_csv(const ReportBundle& bundle,
                                            const std::filesystem::path& out_dir);

// Standalone SVG charts: horizontal bars for both coverage tables, paired
// bars for the gap table, per-skill percentage polylines with fitted trend
// lines, and a per-interval document-count bar chart. Identical input
// produces byte-identical files.
std::vector<std::filesystem::path> emit_charts(const ReportBundle& bundle,
                                               const std::filesystem::path& out_dir);

} // namespace jobgap
