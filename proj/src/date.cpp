#include "jobgap/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "jobgap/errors.hpp"

namespace jobgap {

namespace {

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 13> days = {0, 31, 28, 31, 30, 31, 30,
                                                 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return days[month];
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

bool is_valid_date(const Date& d) {
    if (d.year < 1 || d.month < 1 || d.month > 12) return false;
    return d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

std::optional<Date> try_parse_date(std::string_view text) {
    if (text.size() > 10) text = text.substr(0, 10); // drop time-of-day
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    Date d;
    if (!parse_int(text.substr(0, 4), d.year) ||
        !parse_int(text.substr(5, 2), d.month) ||
        !parse_int(text.substr(8, 2), d.day)) {
        return std::nullopt;
    }
    if (!is_valid_date(d)) return std::nullopt;
    return d;
}

Date parse_date(std::string_view text) {
    auto d = try_parse_date(text);
    if (!d) throw DataError("invalid date: '" + std::string(text) + "'");
    return *d;
}

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

} // namespace jobgap
