#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ardl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- data ingestion -------------------------------------------------------

class MissingFile : public Error {
public:
    explicit MissingFile(const std::string& path)
        : Error("file not found: " + path), path(path) {}
    std::string path;
};

class ParseError : public Error {
public:
    ParseError(std::size_t row, const std::string& column, const std::string& detail)
        : Error("parse error at row " + std::to_string(row) + ", column '" + column +
                "': " + detail),
          row(row), column(column) {}
    std::size_t row;     ///< 1-based data row (header excluded)
    std::string column;
};

class GapInIndex : public Error {
public:
    explicit GapInIndex(const std::string& missing_month)
        : Error("month index is not contiguous; missing " + missing_month),
          missing_month(missing_month) {}
    std::string missing_month;  ///< "YYYY-MM"
};

class NonPositiveValue : public Error {
public:
    NonPositiveValue(const std::string& series, std::size_t index)
        : Error("series '" + series + "' has a non-positive value at index " +
                std::to_string(index) + "; log transform undefined"),
          series(series), index(index) {}
    std::string series;
    std::size_t index;
};

class DivisionByZero : public Error {
public:
    DivisionByZero(const std::string& series, std::size_t index)
        : Error("zero denominator in '" + series + "' at index " + std::to_string(index)),
          series(series), index(index) {}
    std::string series;
    std::size_t index;
};

class MisalignedSeries : public Error {
public:
    explicit MisalignedSeries(const std::string& detail)
        : Error("series are not aligned: " + detail) {}
};

class EmptyRange : public Error {
public:
    EmptyRange() : Error("empty time range") {}
};

class TooShort : public Error {
public:
    explicit TooShort(const std::string& detail) : Error("series too short: " + detail) {}
};

class UnknownSeries : public Error {
public:
    explicit UnknownSeries(const std::string& name)
        : Error("no series named '" + name + "' in dataset"), name(name) {}
    std::string name;
};

// ---- estimation kernel ----------------------------------------------------

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& detail)
        : Error("dimension mismatch: " + detail) {}
};

class RankDeficient : public Error {
public:
    explicit RankDeficient(std::vector<std::string> columns)
        : Error(format(columns)), columns(std::move(columns)) {}
    std::vector<std::string> columns;

private:
    static std::string format(const std::vector<std::string>& cols) {
        std::string msg = "design matrix is rank deficient";
        if (!cols.empty()) {
            msg += "; dependent columns:";
            for (const auto& c : cols) msg += " " + c;
        }
        return msg;
    }
};

class EmptyRestriction : public Error {
public:
    EmptyRestriction() : Error("restriction set is empty") {}
};

// ---- unit-root testing ----------------------------------------------------

class SeriesTooShort : public Error {
public:
    explicit SeriesTooShort(const std::string& detail)
        : Error("series too short for test: " + detail) {}
};

class ConstantSeries : public Error {
public:
    explicit ConstantSeries(const std::string& name)
        : Error("series '" + name + "' has zero variance"), name(name) {}
    std::string name;
};

// ---- ARDL model -----------------------------------------------------------

class InsufficientSample : public Error {
public:
    explicit InsufficientSample(const std::string& detail)
        : Error("insufficient sample: " + detail) {}
};

class GridTooLarge : public Error {
public:
    GridTooLarge(std::size_t candidates, std::size_t cap)
        : Error("order grid has " + std::to_string(candidates) + " candidates, above the cap of " +
                std::to_string(cap) + "; lower max_lag or raise the cap"),
          candidates(candidates), cap(cap) {}
    std::size_t candidates;
    std::size_t cap;
};

class DegenerateAdjustment : public Error {
public:
    DegenerateAdjustment()
        : Error("adjustment coefficient is numerically zero; long-run coefficients undefined") {}
};

// ---- bounds test ----------------------------------------------------------

class UnsupportedCombination : public Error {
public:
    explicit UnsupportedCombination(const std::string& detail)
        : Error("no tabulated critical values for " + detail) {}
};

class InvalidBounds : public Error {
public:
    InvalidBounds(double i0, double i1)
        : Error("invalid bounds: lower " + std::to_string(i0) + " above upper " +
                std::to_string(i1)) {}
};

// ---- diagnostics ----------------------------------------------------------

class ZeroVariance : public Error {
public:
    explicit ZeroVariance(const std::string& detail) : Error("zero variance: " + detail) {}
};

class CollinearAugmentation : public Error {
public:
    CollinearAugmentation()
        : Error("augmentation terms are collinear with the design matrix") {}
};

class DegenerateResiduals : public Error {
public:
    explicit DegenerateResiduals(const std::string& detail)
        : Error("degenerate residuals: " + detail) {}
};

// ---- forecasting / simulation / pipeline ----------------------------------

class IncompleteScenario : public Error {
public:
    explicit IncompleteScenario(const std::string& detail)
        : Error("exogenous scenario incomplete: " + detail) {}
};

class InvalidConfig : public Error {
public:
    explicit InvalidConfig(const std::string& detail) : Error("invalid config: " + detail) {}
};

class I2Detected : public Error {
public:
    explicit I2Detected(const std::string& variable)
        : Error("variable '" + variable +
                "' appears integrated of order 2 or higher; bounds testing requires at most I(1)"),
          variable(variable) {}
    std::string variable;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& detail) : Error("i/o error: " + detail) {}
};

}  // namespace ardl
