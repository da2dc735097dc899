#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symgen/source_pos.hpp"

namespace symgen {

enum class TypeForm { CLASS, INTERFACE, ENUM };

const char* typeFormName(TypeForm form);

struct CdParam {
    std::string name;
    std::string typeName;
    SourcePos pos;
};

struct CdFieldNode {
    std::string name;
    std::string typeName;
    SourcePos pos;
    std::vector<std::string> attachedTemplates;
};

struct CdMethodNode {
    std::string name;
    std::string returnTypeName;
    std::vector<CdParam> params;
    SourcePos pos;
    std::vector<std::string> attachedTemplates;

    // Filled in by transformations, never by the parser.
    bool isStatic = false;
    bool synthesized = false;
    std::string bodyCode; // rendered verbatim as the method body when non-empty
};

struct CdTypeNode {
    std::string name;
    TypeForm form = TypeForm::CLASS;
    bool isAbstract = false;
    std::optional<std::string> superName;
    std::vector<CdFieldNode> fields;
    std::vector<CdMethodNode> methods;
    std::vector<std::string> enumConstants;
    std::vector<std::string> attachedTemplates;
    SourcePos pos;

    // Transformation-owned extensions. memberTemplates name template
    // fragments the default class template expands inside the class body;
    // synthesized marks nodes invented by a transformation.
    std::vector<std::string> memberTemplates;
    bool synthesized = false;

    const CdFieldNode* findField(const std::string& fieldName) const;
    const CdMethodNode* findMethod(const std::string& methodName) const;
};

struct CdAst {
    std::string diagramName;
    std::vector<CdTypeNode> types;
    SourcePos pos;
    std::string fileName;

    CdTypeNode* findType(const std::string& typeName);
    const CdTypeNode* findType(const std::string& typeName) const;
};

} // namespace symgen
