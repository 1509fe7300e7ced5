#include "rtk/time.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace rtk {
namespace {

int read_digits(std::string_view text, std::size_t& pos, std::size_t count) {
  if (pos + count > text.size()) throw std::invalid_argument("truncated timestamp");
  int value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = text[pos + i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("expected digit in timestamp");
    }
    value = value * 10 + (c - '0');
  }
  pos += count;
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw std::invalid_argument(std::string("expected '") + c + "' in timestamp");
  }
  ++pos;
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  std::size_t pos = 0;
  const int y = read_digits(text, pos, 4);
  expect(text, pos, '-');
  const int mo = read_digits(text, pos, 2);
  expect(text, pos, '-');
  const int d = read_digits(text, pos, 2);
  if (pos >= text.size() || (text[pos] != 'T' && text[pos] != 't' && text[pos] != ' ')) {
    throw std::invalid_argument("expected 'T' in timestamp");
  }
  ++pos;
  const int hh = read_digits(text, pos, 2);
  expect(text, pos, ':');
  const int mm = read_digits(text, pos, 2);
  expect(text, pos, ':');
  const int ss = read_digits(text, pos, 2);

  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw std::invalid_argument("empty fractional seconds");
  }

  long offset_seconds = 0;
  if (pos >= text.size()) throw std::invalid_argument("missing UTC offset");
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else if (text[pos] == '+' || text[pos] == '-') {
    const int sign = text[pos] == '-' ? -1 : 1;
    ++pos;
    const int oh = read_digits(text, pos, 2);
    expect(text, pos, ':');
    const int om = read_digits(text, pos, 2);
    if (oh > 23 || om > 59) throw std::invalid_argument("bad UTC offset");
    offset_seconds = sign * (oh * 3600L + om * 60L);
  } else {
    throw std::invalid_argument("bad UTC offset");
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in timestamp");

  const year_month_day date{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!date.ok()) throw std::invalid_argument("invalid calendar date");
  // 60 admits a leap second; it rolls into the next minute.
  if (hh > 23 || mm > 59 || ss > 60) throw std::invalid_argument("invalid time of day");

  const auto local = sys_days{date} + hours{hh} + minutes{mm} + seconds{ss};
  return Timestamp{local - seconds{offset_seconds}};
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto day_point = floor<days>(t);
  const year_month_day date{day_point};
  const hh_mm_ss<seconds> tod{t - day_point};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()),
                static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()));
  return buf;
}

}  // namespace rtk
