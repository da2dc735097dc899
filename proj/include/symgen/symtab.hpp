#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symgen/cd_ast.hpp"
#include "symgen/generator_info.hpp"
#include "symgen/source_pos.hpp"

namespace symgen {

enum class SymbolKind {
    CD_TYPE,
    CD_FIELD,
    CD_METHOD,
    JAVA_TYPE, // query-only: matches any of the three concrete Java type kinds
    JAVA_CLASS,
    JAVA_INTERFACE,
    JAVA_ENUM,
    JAVA_FIELD,
    JAVA_METHOD,
};

const char* symbolKindName(SymbolKind kind);

// Name uniqueness within a scope is per namespace: types, fields, methods.
enum class KindNamespace { TYPES, FIELDS, METHODS };

KindNamespace namespaceOf(SymbolKind kind);

// Kind matching during resolution; a JAVA_TYPE query matches JAVA_CLASS,
// JAVA_INTERFACE, and JAVA_ENUM.
bool kindMatches(SymbolKind query, SymbolKind actual);

struct TypePayload {
    TypeForm form = TypeForm::CLASS;
    bool isAbstract = false;
    std::optional<std::string> superName;
};

struct FieldPayload {
    std::string typeName;
};

struct MethodPayload {
    std::string returnTypeName;
    std::vector<CdParam> params;
    bool isStatic = false;
};

using SymbolPayload = std::variant<TypePayload, FieldPayload, MethodPayload>;

class Scope;

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::CD_TYPE;
    Scope* scope = nullptr;       // owning scope
    Scope* memberScope = nullptr; // sub-scope owned by type symbols
    std::optional<SourcePos> pos;
    bool shadows = false; // meaningful for CD_FIELD / JAVA_FIELD only
    SymbolPayload payload;
    std::optional<GeneratorInfo> generatorInfo;

    const TypePayload* typePayload() const { return std::get_if<TypePayload>(&payload); }
    const FieldPayload* fieldPayload() const { return std::get_if<FieldPayload>(&payload); }
    const MethodPayload* methodPayload() const { return std::get_if<MethodPayload>(&payload); }

    // "Book.title" for members, "Book" for top-level symbols.
    std::string qualifiedName() const;
};

class Scope {
public:
    Scope(std::string name, Scope* enclosing) : name_(std::move(name)), enclosing_(enclosing) {}

    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

    const std::string& name() const { return name_; }
    Scope* enclosing() const { return enclosing_; }
    Symbol* ownerSymbol() const { return ownerSymbol_; }

    const std::vector<std::unique_ptr<Symbol>>& symbols() const { return symbols_; }
    const std::vector<std::unique_ptr<Scope>>& subScopes() const { return subScopes_; }

    // Throws DuplicateNameError when (name, namespace) is already taken.
    Symbol& addSymbol(Symbol symbol);
    Scope& addSubScope(std::string name);

    // Local lookup only; respects the JAVA_TYPE sub-kind rule.
    Symbol* find(const std::string& name, SymbolKind kind) const;
    Symbol* findInNamespace(const std::string& name, KindNamespace ns) const;

private:
    friend class SymbolTable;

    std::string name_;
    Scope* enclosing_ = nullptr;
    Symbol* ownerSymbol_ = nullptr;
    std::vector<std::unique_ptr<Symbol>> symbols_;
    std::vector<std::unique_ptr<Scope>> subScopes_;
};

// Scope tree rooted at an anonymous global scope. Construction and mutation
// are single-threaded; once a pipeline run finishes the tree is only read.
class SymbolTable {
public:
    SymbolTable() : global_(std::make_unique<Scope>("", nullptr)) {}

    SymbolTable(SymbolTable&&) = default;
    SymbolTable& operator=(SymbolTable&&) = default;

    Scope& globalScope() { return *global_; }
    const Scope& globalScope() const { return *global_; }

    // Adds a CD_TYPE symbol plus its member scope with CD_FIELD / CD_METHOD
    // symbols for `node`. Shadowing flags are not computed here.
    Symbol& addCdType(const CdTypeNode& node);

    // Recomputes `shadows` for every CD field from the extends chains.
    void recomputeCdShadows();

private:
    std::unique_ptr<Scope> global_;
};

// Builds the scope tree for a parsed model: one CD_TYPE symbol per type, each
// owning a member scope, with shadowing computed over extends chains.
// Validates extends targets and field type names against declared types and
// builtins; detects inheritance cycles.
SymbolTable buildSymbolTable(const CdAst& ast);

bool isBuiltinTypeName(const std::string& name);

// Nearest symbol matching (name, kind) from `from` up the enclosing chain.
const Symbol& resolve(const std::string& name, SymbolKind kind, const Scope& from);
Symbol* tryResolve(const std::string& name, SymbolKind kind, const Scope& from);

// Field lookup that searches `from` (a CD type member scope) and then the
// extends chain of the owning type; never sibling types.
const Symbol& resolveFieldConsideringInheritance(const std::string& name, const Scope& from);
Symbol* tryResolveFieldConsideringInheritance(const std::string& name, const Scope& from);

// CD super-type symbol of the type owning `typeScope`, or null.
Symbol* cdSuperTypeOf(const Scope& typeScope);

} // namespace symgen
