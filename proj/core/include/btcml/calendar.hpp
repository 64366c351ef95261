#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace btcml {

/// Calendar day with no timezone. Stored as days since 1970-01-01.
class Date {
 public:
  Date() = default;

  /// Parses "YYYY-MM-DD"; throws ParseError on malformed or impossible dates.
  static Date parse(std::string_view iso);
  static std::optional<Date> try_parse(std::string_view iso);
  static Date from_serial(int days) { return Date(days); }

  std::string to_string() const;
  int serial() const { return days_; }

  Date operator+(int days) const { return Date(days_ + days); }
  Date operator-(int days) const { return Date(days_ - days); }
  int operator-(Date other) const { return days_ - other.days_; }
  auto operator<=>(const Date&) const = default;

 private:
  explicit Date(int days) : days_(days) {}
  int days_ = 0;
};

}  // namespace btcml
