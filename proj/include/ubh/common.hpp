#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ubh {

// Default nodata sentinel used by every raster unless a file says otherwise.
inline constexpr double kDefaultNodata = -9999.0;

// World Mollweide sphere radius: WGS84 semi-major axis, meters.
inline constexpr double kDefaultSphereRadius = 6378137.0;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; message carries file context and 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& file, long line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    long line_number;
};

// API misuse: incompatible grids, wrong sensor, bad call arguments.
struct UsageError : Error {
    using Error::Error;
};

// Input outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Bad run configuration (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// Pipeline stage failure (CLI exit code 3).
struct StageError : Error {
    StageError(const std::string& stage, const std::string& what)
        : Error("stage " + stage + ": " + what), stage_name(stage) {}
    std::string stage_name;
};

struct TrainError : Error {
    using Error::Error;
};

// Shortest exact decimal form; reparsing yields the identical double.
std::string format_double(double v);

// Strict full-token parses; return false on any trailing garbage.
bool try_parse_double(std::string_view s, double& out);
bool try_parse_long(std::string_view s, long long& out);

struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;
    auto operator<=>(const Date&) const = default;
};

// ISO-8601 calendar date, YYYY-MM-DD.
bool try_parse_date(std::string_view s, Date& out);
std::string format_date(const Date& d);

// splitmix64-style mixer for deriving independent seeds.
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);

}  // namespace ubh
