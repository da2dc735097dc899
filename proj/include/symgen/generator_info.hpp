#pragma once

#include <optional>
#include <string>
#include <variant>

namespace symgen {

enum class InstantiationStrategy { DIRECT_NEW, FACTORY, SINGLETON, CUSTOM };

const char* instantiationStrategyName(InstantiationStrategy strategy);

// Output-specific information attached to a JAVA_CLASS symbol: how instances
// of the generated class are created.
struct JavaClassInfo {
    InstantiationStrategy strategy = InstantiationStrategy::DIRECT_NEW;
    std::optional<std::string> instantiationCode;
    // Set by transformations that take over instantiation (factory,
    // singleton); strict rendering then refuses to fall back to `new`.
    bool requiresExplicitInstantiation = false;
};

// Output-specific information attached to a JAVA_FIELD symbol: the method
// names used to read and write the generated field.
struct JavaFieldInfo {
    std::optional<std::string> accessorCode;
    std::optional<std::string> mutatorCode;
};

using GeneratorInfo = std::variant<JavaClassInfo, JavaFieldInfo>;

} // namespace symgen
