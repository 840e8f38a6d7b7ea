#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace jobgap {

// Calendar date, no time-of-day. Archive timestamps are truncated to the
// date part on parse.
struct Date {
    int year = 0;
    int month = 0; // 1..12
    int day = 0;   // 1..31

    auto operator<=>(const Date&) const = default;
};

bool is_valid_date(const Date& d);

// Parses "YYYY-MM-DD"; anything after the day (e.g. "T08:30:00Z") is
// discarded. Returns nullopt on malformed or impossible dates.
std::optional<Date> try_parse_date(std::string_view text);

// Same, but throws DataError naming the offending input.
Date parse_date(std::string_view text);

std::string to_string(const Date& d);

} // namespace jobgap
