#pragma once

#include <stdexcept>
#include <string>

namespace ctc {

/// Base of all errors raised by the library (bad arguments, violated preconditions).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed "heg 1" / "pqc 1" text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string & detail, const std::string & path = {})
        : Error(format(line, detail, path)), line_(line), detail_(detail)
    {
    }
    int line() const { return line_; }
    const std::string & detail() const { return detail_; }

private:
    static std::string format(int line, const std::string & detail, const std::string & path)
    {
        std::string where = path;
        if (line > 0)
            where += (path.empty() ? "line " : ":") + std::to_string(line);
        return where.empty() ? detail : where + ": " + detail;
    }

    int line_;
    std::string detail_;
};

/// A constructive colouring failed its own certificate check. This is a bug in
/// the construction, never an expected outcome.
class ConstructionFault : public Error {
public:
    using Error::Error;
};

/// A bounded search for a construction found no valid combination.
class ConstructionIncomplete : public Error {
public:
    using Error::Error;
};

} // namespace ctc
