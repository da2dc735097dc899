#pragma once

#include <string>

namespace symgen {

// Position of a token in a source or template file. Lines and columns are
// 1-based; columns count bytes.
struct SourcePos {
    std::string file;
    int line = 1;
    int col = 1;

    bool operator==(const SourcePos&) const = default;

    std::string str() const {
        return file + ":" + std::to_string(line) + ":" + std::to_string(col);
    }
};

} // namespace symgen
