#include "symgen/errors.hpp"

namespace symgen {

const char* errorCodeName(ErrorCode code) {
    switch (code) {
    case ErrorCode::PARSE: return "E_PARSE";
    case ErrorCode::DUP_NAME: return "E_DUP_NAME";
    case ErrorCode::UNKNOWN_TYPE: return "E_UNKNOWN_TYPE";
    case ErrorCode::CYCLIC_INHERITANCE: return "E_CYCLIC_INHERITANCE";
    case ErrorCode::SYMBOL_NOT_FOUND: return "E_SYMBOL_NOT_FOUND";
    case ErrorCode::DUP_GENERATOR: return "E_DUP_GENERATOR";
    case ErrorCode::MAPPING_CONFLICT: return "E_MAPPING_CONFLICT";
    case ErrorCode::ORDER_VIOLATION: return "E_ORDER_VIOLATION";
    case ErrorCode::KIND: return "E_KIND";
    case ErrorCode::MISSING_GEN_INFO: return "E_MISSING_GEN_INFO";
    case ErrorCode::TMPL_PARSE: return "E_TMPL_PARSE";
    case ErrorCode::UNKNOWN_PATH: return "E_UNKNOWN_PATH";
    case ErrorCode::INCLUDE_DEPTH: return "E_INCLUDE_DEPTH";
    case ErrorCode::TEMPLATE: return "E_TEMPLATE";
    case ErrorCode::PRECONDITION: return "E_PRECONDITION";
    case ErrorCode::LINT: return "E_LINT";
    case ErrorCode::CONFIG: return "E_CONFIG";
    case ErrorCode::IO: return "E_IO";
    case ErrorCode::USAGE: return "E_USAGE";
    }
    return "E_UNKNOWN";
}

int exitCodeFor(ErrorCode code) {
    switch (code) {
    case ErrorCode::USAGE:
    case ErrorCode::CONFIG:
        return 1;
    case ErrorCode::PARSE:
    case ErrorCode::DUP_NAME:
    case ErrorCode::UNKNOWN_TYPE:
    case ErrorCode::CYCLIC_INHERITANCE:
    case ErrorCode::IO:
        return 2;
    default:
        return 3;
    }
}

Error::Error(ErrorCode code, std::string message, std::optional<SourcePos> pos)
    : code_(code), message_(std::move(message)), pos_(std::move(pos)) {
    rebuildWhat();
}

void Error::attachTemplateContext(const std::string& templateName, const SourcePos& pos) {
    if (templateName_) return;
    templateName_ = templateName;
    templatePos_ = pos;
    rebuildWhat();
}

void Error::rebuildWhat() {
    what_.clear();
    if (pos_) what_ += pos_->str() + ": ";
    what_ += message_;
    if (templateName_) {
        what_ += " (in template '" + *templateName_ + "' at " +
                 std::to_string(templatePos_->line) + ":" + std::to_string(templatePos_->col) + ")";
    }
}

} // namespace symgen
