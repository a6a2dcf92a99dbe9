#pragma once

#include <cstdint>
#include <string>

namespace bps {

// Timestamps are seconds since the Unix epoch interpreted as local standard
// time (no DST). Weather files use the same convention.
using Timestamp = std::int64_t;

Timestamp parse_iso8601(const std::string& text);
std::string format_iso8601(Timestamp t);
// Builds a timestamp from calendar fields; throws ParseError on bad dates.
Timestamp make_timestamp(int year, int month, int day, int hour, int minute, int second);

// One-based day of year (Jan 1 -> 1).
int day_of_year(Timestamp t);
// Seconds since local midnight, [0, 86400).
int second_of_day(Timestamp t);
// ISO weekday index, Monday = 1 ... Sunday = 7.
int iso_weekday(Timestamp t);
bool is_weekend(Timestamp t);

}  // namespace bps
