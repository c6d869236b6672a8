// Copyright 2026 the ltlnav authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the repository root for details.

#ifndef LTLNAV_UTIL_ERROR_HPP
#define LTLNAV_UTIL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ltlnav {

// Base class for every error raised by the library. Callers that only need
// coarse handling can catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// LTL / task-text syntax error. `token_index` is 1-based, `offset` is the
// 0-based character offset into the source string.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t token_index, std::size_t offset, const std::string& expected)
        : Error("syntax error at token " + std::to_string(token_index) + " (offset " +
                std::to_string(offset) + "): " + expected),
          token_index(token_index),
          offset(offset),
          expected(expected) {}

    std::size_t token_index;
    std::size_t offset;
    std::string expected;
};

class UnknownProposition : public Error {
public:
    explicit UnknownProposition(const std::string& name)
        : Error("unknown proposition: " + name), name(name) {}
    std::string name;
};

class UnknownRegion : public Error {
public:
    explicit UnknownRegion(const std::string& name)
        : Error("unknown region: " + name), name(name) {}
    std::string name;
};

class SamplingExhausted : public Error {
public:
    explicit SamplingExhausted(int attempts)
        : Error("free-space sampling exhausted after " + std::to_string(attempts) +
                " attempts"),
          attempts(attempts) {}
    int attempts;
};

class NoPlanFound : public Error {
public:
    explicit NoPlanFound(int n_samples)
        : Error("no plan found after " + std::to_string(n_samples) + " samples"),
          n_samples(n_samples) {}
    int n_samples;
};

class TaskBlocked : public Error {
public:
    explicit TaskBlocked(const std::string& why) : Error("task blocked: " + why) {}
};

class NoHumanPoints : public Error {
public:
    NoHumanPoints() : Error("point cloud contains no human-labeled points") {}
};

class NonMonotoneTimestamps : public Error {
public:
    NonMonotoneTimestamps() : Error("detection timestamps are not increasing") {}
};

// Scenario-file structural error (bad token, bad section, ...).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("parse error at line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// Scenario-file semantic error (dangling reference, bad value, ...).
class ValidationError : public Error {
public:
    ValidationError(const std::string& field, const std::string& reason)
        : Error("invalid scenario field '" + field + "': " + reason), field(field) {}
    std::string field;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error("i/o error: " + msg) {}
};

}  // namespace ltlnav

#endif  // LTLNAV_UTIL_ERROR_HPP
