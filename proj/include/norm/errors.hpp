#pragma once

#include <stdexcept>
#include <string>

namespace norm {

struct SourcePos {
    std::string file;
    int line = 0;
    int col = 0;

    std::string str() const { return file + ":" + std::to_string(line) + ":" + std::to_string(col); }
};

class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

// Diagnostics from the rule DSL. what() is formatted as file:line:col: message.
class ParseError : public EngineError {
public:
    ParseError(SourcePos pos, const std::string& message)
        : EngineError(pos.str() + ": " + message), pos_(std::move(pos)), message_(message) {}

    const SourcePos& pos() const { return pos_; }
    const std::string& message() const { return message_; }

private:
    SourcePos pos_;
    std::string message_;
};

// A default (normal or semi-normal) with a conjunctive conclusion.
class ArityError : public ParseError {
public:
    using ParseError::ParseError;
};

// A conclusion or justification variable not bound by any premise.
class RangeError : public ParseError {
public:
    using ParseError::ParseError;
};

// A variable inside a fact.
class NonGroundError : public ParseError {
public:
    using ParseError::ParseError;
};

// Grounding asked for on a scenario with no facts (no time horizon).
class EmptyScenario : public EngineError {
public:
    using EngineError::EngineError;
};

// The oracle's instance or candidate budget was exceeded.
class CapExceeded : public EngineError {
public:
    using EngineError::EngineError;
};

}  // namespace norm
