#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ardl/errors.hpp"

namespace ardl {

/// A calendar month. Totally ordered; `next()` adds one month with year carry.
struct TimePoint {
    int year = 1970;
    int month = 1;  // 1..12

    auto operator<=>(const TimePoint&) const = default;

    [[nodiscard]] TimePoint next() const {
        return month == 12 ? TimePoint{year + 1, 1} : TimePoint{year, month + 1};
    }

    /// Months from `other` to `*this` (positive when *this is later).
    [[nodiscard]] int months_since(const TimePoint& other) const {
        return (year - other.year) * 12 + (month - other.month);
    }

    [[nodiscard]] TimePoint plus_months(int n) const;

    [[nodiscard]] std::string to_string() const;                 // "YYYY-MM"
    static TimePoint parse(const std::string& text);             // throws ParseError(0, ...)
    static bool try_parse(const std::string& text, TimePoint& out);
};

/// A named monthly series with contiguous, finite values.
struct Series {
    std::string name;
    TimePoint start;
    std::vector<double> values;

    [[nodiscard]] std::size_t length() const { return values.size(); }
    [[nodiscard]] TimePoint time_at(std::size_t i) const {
        return start.plus_months(static_cast<int>(i));
    }
};

/// Aligned collection of series sharing one start and length, unique names.
class Dataset {
public:
    Dataset() = default;

    void add(Series s);

    [[nodiscard]] const Series& at(const std::string& name) const;  // throws UnknownSeries
    [[nodiscard]] bool contains(const std::string& name) const;
    [[nodiscard]] const std::vector<Series>& all() const { return series_; }
    [[nodiscard]] std::size_t length() const { return series_.empty() ? 0 : series_[0].length(); }
    [[nodiscard]] TimePoint start() const { return series_.empty() ? TimePoint{} : series_[0].start; }
    [[nodiscard]] bool empty() const { return series_.empty(); }

private:
    std::vector<Series> series_;
};

struct StatsSummary {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double std_dev = 0.0;  // sample standard deviation, divisor n-1
};

/// Rule for a 0/1 indicator series: either a list of event months or a
/// regime threshold (1 at and after the threshold).
struct EventMonths {
    std::vector<TimePoint> months;
};
struct RegimeFrom {
    TimePoint threshold;
};
using DummyRule = std::variant<EventMonths, RegimeFrom>;

/// Element-wise natural log; the result is named "L" + s.name.
/// Throws NonPositiveValue if any value <= 0.
Series log_transform(const Series& s);

/// Inverse of log_transform (element-wise exp); name gets an "E" prefix.
Series exp_transform(const Series& s);

/// Build an indicator series over [start, start + length) from a rule.
Series make_dummy(const std::string& name, TimePoint start, std::size_t length,
                  const DummyRule& rule);

/// Element-wise a/b. Throws MisalignedSeries or DivisionByZero.
Series ratio(const std::string& name, const Series& a, const Series& b);

/// Sample mean/min/max/std-dev. Throws TooShort when length < 2.
StatsSummary descriptive_stats(const Series& s);

}  // namespace ardl
