#include "ardl/csv.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ardl {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& date_column) {
    std::ifstream in(path);
    if (!in) throw MissingFile(path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError(0, date_column, "empty file, header expected");
    std::vector<std::string> header = split_line(line);
    for (auto& h : header) h = trim(h);

    std::size_t date_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == date_column) date_idx = i;
    if (date_idx == header.size())
        throw ParseError(0, date_column, "date column not found in header");

    struct Row {
        TimePoint tp;
        std::vector<double> values;
    };
    std::vector<Row> rows;

    std::size_t row_no = 0;
    while (std::getline(in, line)) {
        ++row_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_line(line);
        if (fields.size() != header.size())
            throw ParseError(row_no, date_column,
                             "expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        Row row;
        if (!TimePoint::try_parse(trim(fields[date_idx]), row.tp))
            throw ParseError(row_no, date_column,
                             "bad month '" + trim(fields[date_idx]) + "', expected YYYY-MM");
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i == date_idx) continue;
            const std::string cell = trim(fields[i]);
            errno = 0;
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size() || errno == ERANGE)
                throw ParseError(row_no, header[i], "not a number: '" + cell + "'");
            row.values.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(0, date_column, "no data rows");

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.tp < b.tp; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        TimePoint expected = rows[i - 1].tp.next();
        if (rows[i].tp != expected) {
            if (rows[i].tp == rows[i - 1].tp)
                throw ParseError(i + 1, date_column, "duplicate month " + rows[i].tp.to_string());
            throw GapInIndex(expected.to_string());
        }
    }

    Dataset d;
    std::size_t col = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i == date_idx) continue;
        Series s{header[i], rows[0].tp, {}};
        s.values.reserve(rows.size());
        for (const Row& r : rows) s.values.push_back(r.values[col]);
        d.add(std::move(s));
        ++col;
    }
    return d;
}

void write_csv(const Dataset& d, const std::string& path, const std::string& date_column) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << date_column;
    for (const auto& s : d.all()) out << ',' << s.name;
    out << '\n';
    char buf[40];
    for (std::size_t t = 0; t < d.length(); ++t) {
        out << d.start().plus_months(static_cast<int>(t)).to_string();
        for (const auto& s : d.all()) {
            std::snprintf(buf, sizeof(buf), "%.17g", s.values[t]);
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace ardl
