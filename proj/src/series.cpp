#include "ardl/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ardl {

TimePoint TimePoint::plus_months(int n) const {
    int zero_based = year * 12 + (month - 1) + n;
    int y = zero_based / 12;
    int m = zero_based % 12;
    if (m < 0) {
        m += 12;
        y -= 1;
    }
    return TimePoint{y, m + 1};
}

std::string TimePoint::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

bool TimePoint::try_parse(const std::string& text, TimePoint& out) {
    int y = 0, m = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d-%d%c", &y, &m, &extra) != 2) return false;
    if (m < 1 || m > 12) return false;
    out = TimePoint{y, m};
    return true;
}

TimePoint TimePoint::parse(const std::string& text) {
    TimePoint tp;
    if (!try_parse(text, tp)) throw ParseError(0, "date", "expected YYYY-MM, got '" + text + "'");
    return tp;
}

void Dataset::add(Series s) {
    if (s.values.empty()) throw EmptyRange();
    for (double v : s.values) {
        if (!std::isfinite(v))
            throw ParseError(0, s.name, "non-finite value in series");
    }
    if (!series_.empty()) {
        if (s.start != series_[0].start)
            throw MisalignedSeries("'" + s.name + "' starts at " + s.start.to_string() +
                                   ", dataset starts at " + series_[0].start.to_string());
        if (s.length() != series_[0].length())
            throw MisalignedSeries("'" + s.name + "' has length " + std::to_string(s.length()) +
                                   ", dataset length is " + std::to_string(series_[0].length()));
    }
    if (contains(s.name)) throw MisalignedSeries("duplicate series name '" + s.name + "'");
    series_.push_back(std::move(s));
}

const Series& Dataset::at(const std::string& name) const {
    for (const auto& s : series_)
        if (s.name == name) return s;
    throw UnknownSeries(name);
}

bool Dataset::contains(const std::string& name) const {
    return std::any_of(series_.begin(), series_.end(),
                       [&](const Series& s) { return s.name == name; });
}

Series log_transform(const Series& s) {
    Series out{"L" + s.name, s.start, {}};
    out.values.reserve(s.length());
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (s.values[i] <= 0.0) throw NonPositiveValue(s.name, i);
        out.values.push_back(std::log(s.values[i]));
    }
    return out;
}

Series exp_transform(const Series& s) {
    Series out{"E" + s.name, s.start, {}};
    out.values.reserve(s.length());
    for (double v : s.values) out.values.push_back(std::exp(v));
    return out;
}

Series make_dummy(const std::string& name, TimePoint start, std::size_t length,
                  const DummyRule& rule) {
    if (length == 0) throw EmptyRange();
    Series out{name, start, std::vector<double>(length, 0.0)};
    if (const auto* ev = std::get_if<EventMonths>(&rule)) {
        for (const TimePoint& tp : ev->months) {
            int offset = tp.months_since(start);
            if (offset >= 0 && static_cast<std::size_t>(offset) < length)
                out.values[static_cast<std::size_t>(offset)] = 1.0;
        }
    } else {
        const auto& regime = std::get<RegimeFrom>(rule);
        for (std::size_t i = 0; i < length; ++i)
            if (start.plus_months(static_cast<int>(i)) >= regime.threshold) out.values[i] = 1.0;
    }
    return out;
}

Series ratio(const std::string& name, const Series& a, const Series& b) {
    if (a.start != b.start || a.length() != b.length())
        throw MisalignedSeries("'" + a.name + "' vs '" + b.name + "'");
    Series out{name, a.start, {}};
    out.values.reserve(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (b.values[i] == 0.0) throw DivisionByZero(b.name, i);
        out.values.push_back(a.values[i] / b.values[i]);
    }
    return out;
}

StatsSummary descriptive_stats(const Series& s) {
    const std::size_t n = s.length();
    if (n < 2) throw TooShort("descriptive statistics need at least 2 observations");
    StatsSummary out;
    out.min = out.max = s.values[0];
    double sum = 0.0;
    for (double v : s.values) {
        sum += v;
        out.min = std::min(out.min, v);
        out.max = std::max(out.max, v);
    }
    out.mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : s.values) ss += (v - out.mean) * (v - out.mean);
    out.std_dev = std::sqrt(ss / static_cast<double>(n - 1));
    return out;
}

}  // namespace ardl
