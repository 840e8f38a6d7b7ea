#include "jobgap/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "jobgap/errors.hpp"

namespace jobgap {

HalfYearInterval HalfYearInterval::of(const Date& d) {
    return HalfYearInterval{d.year, d.month <= 6 ? 1 : 2};
}

HalfYearInterval HalfYearInterval::next() const {
    return half == 1 ? HalfYearInterval{year, 2} : HalfYearInterval{year + 1, 1};
}

std::string HalfYearInterval::label() const {
    return std::to_string(year) + (half == 1 ? "H1" : "H2");
}

std::map<std::string, SkillRatio> skill_ratio(const std::vector<MatchSet>& matches,
                                              long total_docs,
                                              std::span<const std::string> include) {
    if (total_docs <= 0) {
        throw DataError("skill ratio over zero documents is undefined");
    }
    if (static_cast<long>(matches.size()) > total_docs) {
        throw DataError("more match sets than counted documents");
    }
    std::map<std::string, SkillRatio> out;
    for (const auto& name : include) out[name];
    for (const auto& ms : matches) {
        for (const auto& skill : ms.skills) out[skill].count += 1;
    }
    for (auto& [skill, ratio] : out) {
        ratio.pct = 100.0 * static_cast<double>(ratio.count) /
                    static_cast<double>(total_docs);
    }
    return out;
}

IntervalBinning bin_by_interval(const Corpus& corpus,
                                const std::vector<MatchSet>& matches,
                                HalfYearInterval first, HalfYearInterval last) {
    if (first > last) throw DataError("empty interval range");
    if (matches.size() != corpus.size()) {
        throw DataError("match list does not map 1:1 onto the corpus");
    }

    IntervalBinning out;
    for (auto iv = first;; iv = iv.next()) {
        out.intervals.push_back(iv);
        if (iv == last) break;
    }
    const auto index_of = [&](HalfYearInterval iv) -> long {
        if (iv < first || iv > last) return -1;
        return static_cast<long>(2L * (iv.year - first.year) + (iv.half - first.half));
    };

    out.totals.assign(out.intervals.size(), 0);
    std::map<std::string, std::vector<long>> counts; // skill -> per-interval

    const auto& docs = corpus.documents();
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (!docs[i].published_at) {
            throw DataError("document '" + docs[i].id +
                            "' is undated; binning applies to dated corpora only");
        }
        const long idx = index_of(HalfYearInterval::of(*docs[i].published_at));
        if (idx < 0) {
            ++out.excluded;
            continue;
        }
        out.totals[static_cast<std::size_t>(idx)] += 1;
        for (const auto& skill : matches[i].skills) {
            auto [it, inserted] = counts.try_emplace(skill);
            if (inserted) it->second.assign(out.intervals.size(), 0);
            it->second[static_cast<std::size_t>(idx)] += 1;
        }
    }

    for (const auto& [skill, per_interval] : counts) {
        for (std::size_t k = 0; k < out.intervals.size(); ++k) {
            if (out.totals[k] == 0) continue; // a stat needs a nonzero total
            IntervalStat stat;
            stat.interval = out.intervals[k];
            stat.skill = skill;
            stat.count = per_interval[k];
            stat.total = out.totals[k];
            stat.pct = 100.0 * static_cast<double>(stat.count) /
                       static_cast<double>(stat.total);
            out.stats.push_back(std::move(stat));
        }
    }
    return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size()) throw DataError("fit_line: x/y size mismatch");
    if (n < 2) throw DataError("fit_line: need at least two points");

    // Rebase to the first point. u = x - x0 and v = y - y0 keep the sums
    // small and make the slope independent of a common shift in x; the
    // formulas below are the textbook closed forms in (u, v) coordinates.
    const double x0 = x[0];
    const double y0 = y[0];
    double su = 0.0, sv = 0.0, suv = 0.0, suu = 0.0;
    bool distinct = false;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = x[i] - x0;
        const double v = y[i] - y0;
        if (x[i] != x0) distinct = true;
        su += u;
        sv += v;
        suv += u * v;
        suu += u * u;
    }
    if (!distinct) throw DataError("fit_line: all x values equal");

    const double nn = static_cast<double>(n);
    const double m = (nn * suv - su * sv) / (nn * suu - su * su);
    const double b = (sv - m * su) / nn + (y0 - m * x0);
    if (!std::isfinite(m) || !std::isfinite(b)) {
        throw DataError("fit_line: degenerate fit");
    }
    return LineFit{m, b};
}

TrendFit fit_trend(std::string skill, std::span<const SeriesPoint> series) {
    if (series.size() < 2) {
        throw DataError("trend for '" + skill + "': need at least two points");
    }
    std::vector<double> x(series.size()), y(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        x[i] = 0.5 * static_cast<double>(i); // half-year steps, x in years
        y[i] = series[i].pct;
    }
    const LineFit fit = fit_line(x, y);
    return TrendFit{std::move(skill), fit.m, fit.b, static_cast<int>(series.size())};
}

std::string_view to_string(TrendClass c) {
    switch (c) {
        case TrendClass::above_market: return "above_market";
        case TrendClass::with_market: return "with_market";
        case TrendClass::below_market: return "below_market";
    }
    return "with_market";
}

TrendClass trend_classification(const TrendFit& fit, double epsilon) {
    if (epsilon < 0) throw DataError("negative trend deadband");
    if (fit.m > epsilon) return TrendClass::above_market;
    if (fit.m < -epsilon) return TrendClass::below_market;
    return TrendClass::with_market;
}

std::vector<GapRow> compute_gap(const std::map<std::string, double>& edu,
                                const std::map<std::string, double>& job) {
    std::map<std::string, GapRow> rows;
    for (const auto& [skill, pct] : edu) rows[skill].edu_pct = pct;
    for (const auto& [skill, pct] : job) rows[skill].job_pct = pct;

    std::vector<GapRow> out;
    out.reserve(rows.size());
    for (auto& [skill, row] : rows) {
        row.skill = skill;
        row.gap = std::abs(row.edu_pct - row.job_pct);
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(), [](const GapRow& a, const GapRow& b) {
        if (a.edu_pct != b.edu_pct) return a.edu_pct > b.edu_pct;
        return a.skill < b.skill;
    });
    return out;
}

} // namespace jobgap
