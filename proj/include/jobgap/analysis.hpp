#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jobgap/corpus.hpp"
#include "jobgap/skills.hpp"

namespace jobgap {

// H1 = Jan 1 - Jun 30, H2 = Jul 1 - Dec 31. Every date maps to exactly
// one interval; intervals are totally ordered.
struct HalfYearInterval {
    int year = 0;
    int half = 1; // 1 or 2

    static HalfYearInterval of(const Date& d);
    HalfYearInterval next() const;
    std::string label() const; // e.g. "2016H1"

    auto operator<=>(const HalfYearInterval&) const = default;
};

// Count of documents in an interval that contain the skill, against the
// interval's document total, normalized to a percentage.
struct IntervalStat {
    HalfYearInterval interval;
    std::string skill;
    long count = 0;
    long total = 0;
    double pct = 0.0; // 100 * count / total
};

struct SkillRatio {
    long count = 0;
    double pct = 0.0;
};

// count = number of MatchSets containing the skill, pct = 100*count/total_docs.
// Skills in `include` are present in the result even at count 0.
// total_docs = 0 is an error (undefined ratio).
std::map<std::string, SkillRatio> skill_ratio(const std::vector<MatchSet>& matches,
                                              long total_docs,
                                              std::span<const std::string> include = {});

struct IntervalBinning {
    std::vector<HalfYearInterval> intervals; // the full requested range, in order
    std::vector<long> totals;                // documents per interval
    std::vector<IntervalStat> stats;         // skill x interval, only where total > 0
    long excluded = 0;                       // documents outside the range
};

// Bins dated documents into half-year intervals and counts skill presence
// per interval. Every document must carry published_at (job corpora do by
// invariant); an undated corpus is an error. matches must map 1:1 onto
// corpus documents.
IntervalBinning bin_by_interval(const Corpus& corpus,
                                const std::vector<MatchSet>& matches,
                                HalfYearInterval first,
                                HalfYearInterval last);

// Least-squares line over an interval series. x is measured in years with
// the i-th series element (0-based) at x = 0.5*i, so m reads as
// percentage points per year.
struct TrendFit {
    std::string skill;
    double m = 0.0; // slope, pp/year
    double b = 0.0; // intercept at the series origin, pp
    int n = 0;
};

struct LineFit {
    double m = 0.0;
    double b = 0.0;
};

// Closed-form least squares, m = (N*sum(xy) - sum(x)*sum(y)) /
// (N*sum(x^2) - sum(x)^2), b = (sum(y) - m*sum(x)) / N, evaluated on
// origin-rebased x for numerical stability (algebraically identical).
// Throws on n < 2 or all-equal x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct SeriesPoint {
    HalfYearInterval interval;
    double pct = 0.0;
};

TrendFit fit_trend(std::string skill, std::span<const SeriesPoint> series);

enum class TrendClass { above_market, with_market, below_market };

std::string_view to_string(TrendClass c);

// m > eps: above_market, |m| <= eps: with_market, m < -eps: below_market.
TrendClass trend_classification(const TrendFit& fit, double epsilon = 0.05);

// Absolute difference between education coverage and job-post mentions,
// in percentage points. 0 means a perfect supply/demand match.
struct GapRow {
    std::string skill;
    double edu_pct = 0.0;
    double job_pct = 0.0;
    double gap = 0.0;
};

// One row per skill in the union of both maps; a skill missing on either
// side counts as 0%. Rows sorted by edu_pct descending, then name.
std::vector<GapRow> compute_gap(const std::map<std::string, double>& edu,
                                const std::map<std::string, double>& job);

} // namespace jobgap
