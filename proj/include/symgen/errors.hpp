#pragma once

#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symgen/source_pos.hpp"

namespace symgen {

enum class ErrorCode {
    PARSE,
    DUP_NAME,
    UNKNOWN_TYPE,
    CYCLIC_INHERITANCE,
    SYMBOL_NOT_FOUND,
    DUP_GENERATOR,
    MAPPING_CONFLICT,
    ORDER_VIOLATION,
    KIND,
    MISSING_GEN_INFO,
    TMPL_PARSE,
    UNKNOWN_PATH,
    INCLUDE_DEPTH,
    TEMPLATE,
    PRECONDITION,
    LINT,
    CONFIG,
    IO,
    USAGE,
};

const char* errorCodeName(ErrorCode code);

// Process exit code the CLI uses for a given error class:
// 1 usage error, 2 parse/build error, 3 generation error.
int exitCodeFor(ErrorCode code);

// Base of all typed errors. Carries an optional source position and, once an
// error crosses template evaluation, the template name and segment position.
class Error : public std::exception {
public:
    Error(ErrorCode code, std::string message, std::optional<SourcePos> pos = std::nullopt);

    const char* what() const noexcept override { return what_.c_str(); }

    ErrorCode code() const { return code_; }
    const std::string& message() const { return message_; }
    const std::optional<SourcePos>& pos() const { return pos_; }
    const std::optional<std::string>& templateName() const { return templateName_; }
    const std::optional<SourcePos>& templatePos() const { return templatePos_; }

    // Records the innermost template frame; later calls are ignored so the
    // most specific location wins.
    void attachTemplateContext(const std::string& templateName, const SourcePos& pos);

private:
    void rebuildWhat();

    ErrorCode code_;
    std::string message_;
    std::optional<SourcePos> pos_;
    std::optional<std::string> templateName_;
    std::optional<SourcePos> templatePos_;
    std::string what_;
};

struct ParseError : Error {
    ParseError(SourcePos pos, std::string message)
        : Error(ErrorCode::PARSE, std::move(message), std::move(pos)) {}
};

struct DuplicateNameError : Error {
    DuplicateNameError(SourcePos pos, std::string name)
        : Error(ErrorCode::DUP_NAME, "duplicate name '" + name + "'", std::move(pos)),
          name(std::move(name)) {}
    std::string name;
};

struct UnknownTypeError : Error {
    UnknownTypeError(SourcePos pos, std::string name)
        : Error(ErrorCode::UNKNOWN_TYPE, "unknown type '" + name + "'", std::move(pos)),
          name(std::move(name)) {}
    std::string name;
};

struct CyclicInheritanceError : Error {
    explicit CyclicInheritanceError(std::vector<std::string> cycle)
        : Error(ErrorCode::CYCLIC_INHERITANCE, "cyclic inheritance: " + join(cycle)),
          names(std::move(cycle)) {}
    std::vector<std::string> names;

private:
    static std::string join(const std::vector<std::string>& names) {
        std::string out;
        for (const auto& n : names) {
            if (!out.empty()) out += " -> ";
            out += n;
        }
        return out;
    }
};

struct SymbolNotFoundError : Error {
    SymbolNotFoundError(std::string name, std::string kindName, std::string fromScopeName)
        : Error(ErrorCode::SYMBOL_NOT_FOUND,
                "symbol '" + name + "' of kind " + kindName + " not found from scope '" +
                    fromScopeName + "'"),
          name(std::move(name)), kindName(std::move(kindName)),
          fromScopeName(std::move(fromScopeName)) {}
    std::string name;
    std::string kindName;
    std::string fromScopeName;
};

struct DuplicateGeneratorError : Error {
    explicit DuplicateGeneratorError(std::string id)
        : Error(ErrorCode::DUP_GENERATOR, "generator id '" + id + "' already registered"),
          id(std::move(id)) {}
    std::string id;
};

struct MappingConflictError : Error {
    explicit MappingConflictError(std::string message)
        : Error(ErrorCode::MAPPING_CONFLICT, std::move(message)) {}
};

struct OrderViolationError : Error {
    OrderViolationError(std::string symbolName, std::string needed, std::string message)
        : Error(ErrorCode::ORDER_VIOLATION, std::move(message)),
          symbolName(std::move(symbolName)), needed(std::move(needed)) {}
    std::string symbolName;
    std::string needed;
};

struct KindError : Error {
    explicit KindError(std::string message) : Error(ErrorCode::KIND, std::move(message)) {}
};

struct MissingGeneratorInfoError : Error {
    MissingGeneratorInfoError(std::string symbolName, std::string neededInfo)
        : Error(ErrorCode::MISSING_GEN_INFO,
                "no " + neededInfo + " information stored for symbol '" + symbolName + "'"),
          symbolName(std::move(symbolName)), neededInfo(std::move(neededInfo)) {}
    std::string symbolName;
    std::string neededInfo;
};

struct TemplateParseError : Error {
    TemplateParseError(SourcePos pos, std::string message)
        : Error(ErrorCode::TMPL_PARSE, std::move(message), std::move(pos)) {}
};

struct UnknownPathError : Error {
    explicit UnknownPathError(std::string path)
        : Error(ErrorCode::UNKNOWN_PATH, "unknown path '" + path + "'"), path(std::move(path)) {}
    std::string path;
};

struct InfiniteIncludeError : Error {
    explicit InfiniteIncludeError(std::string templateName)
        : Error(ErrorCode::INCLUDE_DEPTH,
                "include depth limit exceeded while including '" + templateName + "'") {}
};

struct TemplateError : Error {
    explicit TemplateError(std::string message) : Error(ErrorCode::TEMPLATE, std::move(message)) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(std::string message)
        : Error(ErrorCode::PRECONDITION, std::move(message)) {}
};

struct LintError : Error {
    explicit LintError(std::string message) : Error(ErrorCode::LINT, std::move(message)) {}
};

struct ConfigError : Error {
    explicit ConfigError(std::string message) : Error(ErrorCode::CONFIG, std::move(message)) {}
};

struct IoError : Error {
    explicit IoError(std::string message) : Error(ErrorCode::IO, std::move(message)) {}
};

struct UsageError : Error {
    explicit UsageError(std::string message) : Error(ErrorCode::USAGE, std::move(message)) {}
};

} // namespace symgen
