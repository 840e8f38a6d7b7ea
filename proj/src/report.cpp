#include "jobgap/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "jobgap/errors.hpp"

namespace jobgap {

namespace {

std::string csv_escape(const std::string& s) {
    bool need_quotes = false;
    for (char c : s) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') { need_quotes = true; break; }
    }
    if (!need_quotes) return s;

    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write: " + path.string());
    out << content;
    if (!out) throw DataError("write failed: " + path.string());
}

std::vector<CoverageRow> sorted_coverage(std::vector<CoverageRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const CoverageRow& a, const CoverageRow& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.skill < b.skill;
    });
    return rows;
}

std::string coverage_csv(const std::vector<CoverageRow>& rows) {
    std::string out = "skill,count,pct\n";
    for (const auto& row : sorted_coverage(rows)) {
        out += csv_escape(row.skill) + ',' + std::to_string(row.count) + ',' +
               format_pct(row.pct) + '\n';
    }
    return out;
}

// skill -> per-interval counts, aligned with binning.intervals. Intervals
// without documents contribute zero cells.
std::map<std::string, std::vector<long>> count_matrix(const IntervalBinning& binning) {
    std::map<std::string, long> index;
    for (std::size_t i = 0; i < binning.intervals.size(); ++i) {
        index[binning.intervals[i].label()] = static_cast<long>(i);
    }
    std::map<std::string, std::vector<long>> matrix;
    for (const auto& stat : binning.stats) {
        auto [it, inserted] = matrix.try_emplace(stat.skill);
        if (inserted) it->second.assign(binning.intervals.size(), 0);
        it->second[static_cast<std::size_t>(index.at(stat.interval.label()))] = stat.count;
    }
    return matrix;
}

std::string intervals_csv(const IntervalBinning& binning) {
    std::string out = "skill";
    for (const auto& iv : binning.intervals) out += ',' + iv.label();
    out += '\n';

    auto matrix = count_matrix(binning);
    std::vector<std::pair<std::string, long>> order; // skill, grand total
    for (const auto& [skill, counts] : matrix) {
        long sum = 0;
        for (long c : counts) sum += c;
        order.emplace_back(skill, sum);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    for (const auto& [skill, sum] : order) {
        out += csv_escape(skill);
        for (long c : matrix.at(skill)) out += ',' + std::to_string(c);
        out += '\n';
    }
    if (!binning.intervals.empty()) {
        out += "TOTAL";
        for (long t : binning.totals) out += ',' + std::to_string(t);
        out += '\n';
    }
    return out;
}

std::string trends_csv(const std::vector<TrendRow>& trends) {
    auto rows = trends;
    std::sort(rows.begin(), rows.end(), [](const TrendRow& a, const TrendRow& b) {
        if (a.fit.m != b.fit.m) return a.fit.m > b.fit.m;
        return a.fit.skill < b.fit.skill;
    });
    std::string out = "skill,slope_pp_per_year,intercept_pp,n,classification\n";
    for (const auto& row : rows) {
        out += csv_escape(row.fit.skill) + ',' + format_double(row.fit.m, 6) + ',' +
               format_double(row.fit.b, 6) + ',' + std::to_string(row.fit.n) + ',' +
               std::string(to_string(row.cls)) + '\n';
    }
    return out;
}

std::string gaps_csv(const std::vector<GapRow>& gaps) {
    std::string out = "skill,edu_pct,job_pct,gap\n";
    for (const auto& row : gaps) {
        out += csv_escape(row.skill) + ',' + format_pct(row.edu_pct) + ',' +
               format_pct(row.job_pct) + ',' + format_pct(row.gap) + '\n';
    }
    return out;
}

void validate_bundle(const ReportBundle& bundle) {
    std::set<std::string> in_table;
    for (const auto& stat : bundle.interval_table.stats) in_table.insert(stat.skill);
    for (const auto& row : bundle.trends) {
        if (!in_table.contains(row.fit.skill)) {
            throw DataError("trend row '" + row.fit.skill +
                            "' missing from the interval table");
        }
    }
}

// ---- SVG assembly ------------------------------------------------------

constexpr const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#2f4b7c", "#a05195",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c); break;
        }
    }
    return out;
}

std::string num(double v) { return format_double(v, 2); }

struct SvgDoc {
    std::string body;
    double width = 0;
    double height = 0;

    void rect(double x, double y, double w, double h, const std::string& fill) {
        body += "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
                "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
    }
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              const std::string& extra = "") {
        body += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke + "\"" + extra + "/>\n";
    }
    void text(double x, double y, const std::string& s, int size,
              const std::string& anchor = "start", const std::string& extra = "") {
        body += "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" +
                std::to_string(size) +
                "\" font-family=\"sans-serif\" text-anchor=\"" + anchor + "\"" + extra +
                ">" + xml_escape(s) + "</text>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& stroke, const std::string& extra = "") {
        body += "  <polyline fill=\"none\" stroke=\"" + stroke + "\"" + extra +
                " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body += ' ';
            body += num(pts[i].first) + ',' + num(pts[i].second);
        }
        body += "\"/>\n";
    }

    std::string finish(const std::string& title) const {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
               "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + ' ' +
               num(height) + "\">\n";
        out += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" +
               num(height) + "\" fill=\"#ffffff\"/>\n";
        out += "  <text x=\"" + num(width / 2) +
               "\" y=\"20\" font-size=\"14\" font-family=\"sans-serif\" "
               "text-anchor=\"middle\" font-weight=\"bold\">" +
               xml_escape(title) + "</text>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

constexpr double kLabelGutter = 170;
constexpr double kBarAreaWidth = 520;
constexpr double kTopMargin = 40;

// Horizontal bar chart: one row per (label, value), value annotated.
std::string hbar_chart(const std::string& title,
                       const std::vector<std::pair<std::string, double>>& rows,
                       const std::string& value_suffix) {
    const double row_h = 22;
    SvgDoc svg;
    svg.width = kLabelGutter + kBarAreaWidth + 110;
    svg.height = kTopMargin + row_h * static_cast<double>(rows.size()) + 20;

    double max_v = 0;
    for (const auto& [label, v] : rows) max_v = std::max(max_v, v);
    const double scale = max_v > 0 ? kBarAreaWidth / max_v : 0;

    double y = kTopMargin;
    for (const auto& [label, v] : rows) {
        const double w = v * scale;
        svg.text(kLabelGutter - 6, y + 14, label, 11, "end");
        svg.rect(kLabelGutter, y + 3, w, row_h - 8, kPalette[0]);
        svg.text(kLabelGutter + w + 4, y + 14, format_pct(v) + value_suffix, 10);
        y += row_h;
    }
    svg.line(kLabelGutter, kTopMargin, kLabelGutter,
             kTopMargin + row_h * static_cast<double>(rows.size()), "#333333");
    return svg.finish(title);
}

std::string gap_chart(const std::vector<GapRow>& gaps) {
    const double row_h = 30;
    SvgDoc svg;
    svg.width = kLabelGutter + kBarAreaWidth + 110;
    svg.height = kTopMargin + 24 + row_h * static_cast<double>(gaps.size()) + 20;

    double max_v = 0;
    for (const auto& row : gaps) max_v = std::max({max_v, row.edu_pct, row.job_pct});
    const double scale = max_v > 0 ? kBarAreaWidth / max_v : 0;

    // legend
    svg.rect(kLabelGutter, kTopMargin, 10, 10, kPalette[0]);
    svg.text(kLabelGutter + 14, kTopMargin + 9, "syllabi", 10);
    svg.rect(kLabelGutter + 80, kTopMargin, 10, 10, kPalette[1]);
    svg.text(kLabelGutter + 94, kTopMargin + 9, "job posts", 10);

    double y = kTopMargin + 24;
    for (const auto& row : gaps) {
        svg.text(kLabelGutter - 6, y + 16, row.skill, 11, "end");
        const double we = row.edu_pct * scale;
        const double wj = row.job_pct * scale;
        svg.rect(kLabelGutter, y + 3, we, 10, kPalette[0]);
        svg.text(kLabelGutter + we + 4, y + 11, format_pct(row.edu_pct) + "%", 9);
        svg.rect(kLabelGutter, y + 15, wj, 10, kPalette[1]);
        svg.text(kLabelGutter + wj + 4, y + 23, format_pct(row.job_pct) + "%", 9);
        y += row_h;
    }
    svg.line(kLabelGutter, kTopMargin + 24, kLabelGutter, y, "#333333");
    return svg.finish("Education coverage vs industry demand");
}

std::string trend_chart(const IntervalBinning& binning,
                        const std::vector<TrendRow>& trends) {
    const double plot_w = 640, plot_h = 380, left = 60, top = kTopMargin;
    SvgDoc svg;
    svg.width = left + plot_w + 170;
    svg.height = top + plot_h + 60;

    const std::size_t n = binning.intervals.size();
    auto matrix = count_matrix(binning);

    double max_pct = 0;
    for (const auto& stat : binning.stats) {
        for (const auto& row : trends) {
            if (row.fit.skill == stat.skill) {
                max_pct = std::max(max_pct, stat.pct);
                break;
            }
        }
    }
    if (max_pct <= 0) max_pct = 1;

    const double dx = n > 1 ? plot_w / static_cast<double>(n - 1) : 0;
    const auto px = [&](std::size_t i) { return left + dx * static_cast<double>(i); };
    const auto py = [&](double pct) { return top + plot_h * (1.0 - pct / max_pct); };

    // axes and x tick labels
    svg.line(left, top, left, top + plot_h, "#333333");
    svg.line(left, top + plot_h, left + plot_w, top + plot_h, "#333333");
    for (std::size_t i = 0; i < n; ++i) {
        svg.line(px(i), top + plot_h, px(i), top + plot_h + 4, "#333333");
        svg.text(px(i), top + plot_h + 16, binning.intervals[i].label(), 8, "middle");
    }
    for (int g = 0; g <= 4; ++g) {
        const double pct = max_pct * g / 4.0;
        svg.line(left - 4, py(pct), left, py(pct), "#333333");
        svg.text(left - 6, py(pct) + 3, format_pct(pct), 8, "end");
    }
    svg.text(left - 40, top + plot_h / 2, "% of posts", 10, "middle",
             " transform=\"rotate(-90 " + num(left - 40) + ' ' +
                 num(top + plot_h / 2) + ")\"");

    std::size_t color = 0;
    double legend_y = top + 10;
    for (const auto& row : trends) {
        const auto it = matrix.find(row.fit.skill);
        if (it == matrix.end()) continue;
        const std::string stroke = kPalette[color % kPaletteSize];
        ++color;

        std::vector<std::pair<double, double>> pts;
        std::size_t first_col = n, last_col = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (binning.totals[i] == 0) continue;
            if (first_col == n) first_col = i;
            last_col = i;
            const double pct = 100.0 * static_cast<double>(it->second[i]) /
                               static_cast<double>(binning.totals[i]);
            pts.emplace_back(px(i), py(pct));
        }
        svg.polyline(pts, stroke, " stroke-width=\"1.5\"");

        // fitted line over the populated span; x in years = 0.5 * series index
        if (row.fit.n >= 2 && first_col < n) {
            const double x_last = 0.5 * static_cast<double>(row.fit.n - 1);
            const double y0 = std::clamp(row.fit.b, 0.0, max_pct);
            const double y1 = std::clamp(row.fit.m * x_last + row.fit.b, 0.0, max_pct);
            svg.line(px(first_col), py(y0), px(last_col), py(y1), stroke,
                     " stroke-dasharray=\"5,3\"");
        }

        svg.line(left + plot_w + 10, legend_y, left + plot_w + 26, legend_y, stroke,
                 " stroke-width=\"2\"");
        svg.text(left + plot_w + 30, legend_y + 3,
                 row.fit.skill + " (" + format_double(row.fit.m, 2) + ")", 9);
        legend_y += 14;
    }
    return svg.finish("Skill share of job posts per half-year");
}

std::string totals_chart(const IntervalBinning& binning) {
    const double plot_w = 640, plot_h = 320, left = 70, top = kTopMargin;
    SvgDoc svg;
    svg.width = left + plot_w + 30;
    svg.height = top + plot_h + 60;

    long max_t = 1;
    for (long t : binning.totals) max_t = std::max(max_t, t);

    const std::size_t n = binning.intervals.size();
    const double slot = n > 0 ? plot_w / static_cast<double>(n) : plot_w;
    svg.line(left, top, left, top + plot_h, "#333333");
    svg.line(left, top + plot_h, left + plot_w, top + plot_h, "#333333");

    for (std::size_t i = 0; i < n; ++i) {
        const double h =
            plot_h * static_cast<double>(binning.totals[i]) / static_cast<double>(max_t);
        const double x = left + slot * static_cast<double>(i) + slot * 0.15;
        svg.rect(x, top + plot_h - h, slot * 0.7, h, kPalette[0]);
        svg.text(x + slot * 0.35, top + plot_h + 14, binning.intervals[i].label(), 8,
                 "middle");
        svg.text(x + slot * 0.35, top + plot_h - h - 4, std::to_string(binning.totals[i]),
                 8, "middle");
    }
    return svg.finish("Documents per half-year interval");
}

} // namespace

std::string format_double(double value, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed,
                             precision);
    if (res.ec != std::errc{}) throw DataError("number formatting failed");
    return std::string(buf, res.ptr);
}

std::string format_pct(double value) { return format_double(value, 1); }

std::vector<std::filesystem::path> emit_csv(const ReportBundle& bundle,
                                            const std::filesystem::path& out_dir) {
    validate_bundle(bundle);
    std::filesystem::create_directories(out_dir);

    std::vector<std::filesystem::path> written;
    const auto emit = [&](const char* name, const std::string& content) {
        const auto path = out_dir / name;
        write_file(path, content);
        written.push_back(path);
    };
    emit("coverage_edu.csv", coverage_csv(bundle.coverage_edu));
    emit("coverage_job.csv", coverage_csv(bundle.coverage_job));
    emit("intervals.csv", intervals_csv(bundle.interval_table));
    emit("trends.csv", trends_csv(bundle.trends));
    emit("gaps.csv", gaps_csv(bundle.gaps));
    return written;
}

std::vector<std::filesystem::path> emit_charts(const ReportBundle& bundle,
                                               const std::filesystem::path& out_dir) {
    validate_bundle(bundle);
    std::filesystem::create_directories(out_dir);

    const auto coverage_rows = [](const std::vector<CoverageRow>& rows) {
        std::vector<std::pair<std::string, double>> out;
        for (const auto& row : sorted_coverage(rows)) out.emplace_back(row.skill, row.pct);
        return out;
    };

    std::vector<std::filesystem::path> written;
    const auto emit = [&](const char* name, const std::string& content) {
        const auto path = out_dir / name;
        write_file(path, content);
        written.push_back(path);
    };
    emit("coverage_edu.svg", hbar_chart("Technical skills in program syllabi",
                                        coverage_rows(bundle.coverage_edu), "%"));
    emit("coverage_job.svg", hbar_chart("Technical skills in job posts",
                                        coverage_rows(bundle.coverage_job), "%"));
    emit("gaps.svg", gap_chart(bundle.gaps));
    emit("trends.svg", trend_chart(bundle.interval_table, bundle.trends));
    emit("posts_per_interval.svg", totals_chart(bundle.interval_table));
    return written;
}

} // namespace jobgap
