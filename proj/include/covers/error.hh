// SPDX-License-Identifier: Apache-2.0
// Error taxonomy shared by the library and the command-line front end.

#pragma once

#include <stdexcept>
#include <string>

namespace covers
{
    // Malformed input files or command-line data (exit code 2).
    class input_error : public std::runtime_error
    {
    public:
        explicit input_error(const std::string & message) :
            std::runtime_error(message)
        {
        }
    };

    // Input that failed to parse, with position information when available.
    class parse_error : public input_error
    {
    public:
        parse_error(const std::string & message, long line) :
            input_error("line " + std::to_string(line) + ": " + message),
            _line(line)
        {
        }

        explicit parse_error(const std::string & message) :
            input_error(message)
        {
        }

        // 1-based input line, or -1 when the position is unknown.
        auto line() const -> long { return _line; }

    private:
        long _line = -1;
    };

    // A configured node or time budget ran out before the answer was decided
    // (exit code 3).  Only raised where an honest yes/no is impossible.
    class budget_error : public std::runtime_error
    {
    public:
        explicit budget_error(const std::string & message) :
            std::runtime_error(message)
        {
        }
    };

    // An input exceeds a documented hard size limit of an exact routine.
    class resource_error : public std::runtime_error
    {
    public:
        explicit resource_error(const std::string & message) :
            std::runtime_error(message)
        {
        }
    };

    // Invariant violation inside the library: catalog inconsistencies,
    // impossible states, broken postconditions (exit code 4).
    class internal_error : public std::logic_error
    {
    public:
        explicit internal_error(const std::string & message) :
            std::logic_error(message)
        {
        }
    };
}
