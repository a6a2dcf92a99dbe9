#include "bps/clock.hpp"

#include <chrono>
#include <cstdio>

#include "bps/common.hpp"

namespace bps {

namespace {
using days_t = std::chrono::sys_days;

days_t to_sys_days(Timestamp t) {
  // floor division so negative remainders cannot appear for t >= 0
  auto d = t / 86400;
  if (t < 0 && t % 86400 != 0) --d;
  return days_t{std::chrono::days{d}};
}
}  // namespace

Timestamp parse_iso8601(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0, consumed = 0;
  char sep = 0;
  const int n = std::sscanf(text.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d%n", &y, &mo, &d, &sep,
                            &h, &mi, &s, &consumed);
  if (n != 7 || sep != 'T' || consumed != static_cast<int>(text.size()))
    throw ParseError("invalid ISO-8601 timestamp: '" + text + "'");
  return make_timestamp(y, mo, d, h, mi, s);
}

Timestamp make_timestamp(int year, int month, int day, int hour, int minute, int second) {
  using namespace std::chrono;
  const year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                           std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok())
    throw ParseError("invalid calendar date: " + std::to_string(year) + "-" +
                     std::to_string(month) + "-" + std::to_string(day));
  if (hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 || second > 59)
    throw ParseError("invalid time of day: " + std::to_string(hour) + ":" +
                     std::to_string(minute) + ":" + std::to_string(second));
  const sys_days sd{ymd};
  return static_cast<Timestamp>(sd.time_since_epoch().count()) * 86400 + hour * 3600 +
         minute * 60 + second;
}

std::string format_iso8601(Timestamp t) {
  using namespace std::chrono;
  const auto sd = to_sys_days(t);
  const year_month_day ymd{sd};
  const auto sod = t - static_cast<Timestamp>(sd.time_since_epoch().count()) * 86400;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(sod / 3600),
                static_cast<int>((sod / 60) % 60), static_cast<int>(sod % 60));
  return buf;
}

int day_of_year(Timestamp t) {
  using namespace std::chrono;
  const auto sd = to_sys_days(t);
  const year_month_day ymd{sd};
  const sys_days jan1{year_month_day{ymd.year(), month{1}, day{1}}};
  return static_cast<int>((sd - jan1).count()) + 1;
}

int second_of_day(Timestamp t) {
  const auto sd = to_sys_days(t);
  return static_cast<int>(t - static_cast<Timestamp>(sd.time_since_epoch().count()) * 86400);
}

int iso_weekday(Timestamp t) {
  const std::chrono::weekday wd{to_sys_days(t)};
  return static_cast<int>(wd.iso_encoding());
}

bool is_weekend(Timestamp t) { return iso_weekday(t) >= 6; }

}  // namespace bps
