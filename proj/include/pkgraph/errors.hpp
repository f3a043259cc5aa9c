// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pkgraph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GraphSealedError : public Error {
public:
    GraphSealedError() : Error("graph is sealed") {}
};

class InvalidLabelError : public Error {
public:
    explicit InvalidLabelError(const std::string& what) : Error(what) {}
};

class UnknownNodeError : public Error {
public:
    explicit UnknownNodeError(const std::string& what) : Error(what) {}
};

class ExportError : public Error {
public:
    explicit ExportError(const std::string& what) : Error(what) {}
};

/// Malformed CSV input. `line` is the 1-based physical line the record starts on.
class CsvError : public Error {
public:
    CsvError(std::size_t line, std::string reason)
        : Error("line " + std::to_string(line) + ": " + reason),
          line_(line),
          reason_(std::move(reason)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// Source location carrying error (C extraction and query parsing share it).
class LocatedError : public Error {
public:
    LocatedError(std::size_t line, std::size_t column, std::string message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column),
          message_(std::move(message)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

class ParseError : public LocatedError {
public:
    using LocatedError::LocatedError;
};

class SyntaxError : public LocatedError {
public:
    using LocatedError::LocatedError;
};

class UnboundVariableError : public Error {
public:
    explicit UnboundVariableError(const std::string& expression)
        : Error("unbound variable in `" + expression + "`"), expression_(expression) {}
    const std::string& expression() const noexcept { return expression_; }

private:
    std::string expression_;
};

class TypeMismatchError : public Error {
public:
    TypeMismatchError(const std::string& expression, const std::string& detail)
        : Error("type mismatch in `" + expression + "`: " + detail), expression_(expression) {}
    const std::string& expression() const noexcept { return expression_; }

private:
    std::string expression_;
};

class UnsupportedTemplateError : public Error {
public:
    explicit UnsupportedTemplateError(const std::string& cwe_id)
        : Error("no query template for " + cwe_id), cwe_id_(cwe_id) {}
    const std::string& cwe_id() const noexcept { return cwe_id_; }

private:
    std::string cwe_id_;
};

}  // namespace pkgraph
