#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgreti {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (lexicon, embedding, scene-graph files). Carries the
// 1-based line number of the offending record when known (0 = unknown).
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Query DSL syntax or resolution problem. Position is a 1-based character
// offset into the query text.
class QueryError : public Error {
public:
    QueryError(const std::string& what, std::size_t position)
        : Error("position " + std::to_string(position) + ": " + what), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Database directory problems: missing files, version mismatch, checksum
// mismatch, or content inconsistent with the supplied lexicon.
class DatabaseError : public Error {
public:
    explicit DatabaseError(const std::string& what) : Error(what) {}
};

}  // namespace sgreti
