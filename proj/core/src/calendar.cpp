#include "btcml/calendar.hpp"

#include <chrono>
#include <cstdio>

#include "btcml/error.hpp"

namespace btcml {

namespace {

std::optional<int> parse_serial(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  int y = 0, m = 0, d = 0;
  for (int i : {0, 1, 2, 3}) {
    char c = iso[static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return std::nullopt;
    y = y * 10 + (c - '0');
  }
  for (int i : {5, 6}) {
    char c = iso[static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return std::nullopt;
    m = m * 10 + (c - '0');
  }
  for (int i : {8, 9}) {
    char c = iso[static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return std::nullopt;
    d = d * 10 + (c - '0');
  }
  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return static_cast<int>(sys_days{ymd}.time_since_epoch().count());
}

}  // namespace

Date Date::parse(std::string_view iso) {
  auto s = parse_serial(iso);
  if (!s) fail<ParseError>("invalid date '", std::string(iso), "' (expected YYYY-MM-DD)");
  return Date(*s);
}

std::optional<Date> Date::try_parse(std::string_view iso) {
  auto s = parse_serial(iso);
  if (!s) return std::nullopt;
  return Date(*s);
}

std::string Date::to_string() const {
  using namespace std::chrono;
  year_month_day ymd{sys_days{days{days_}}};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace btcml
