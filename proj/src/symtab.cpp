#include "symgen/symtab.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "symgen/errors.hpp"

namespace symgen {

const char* symbolKindName(SymbolKind kind) {
    switch (kind) {
    case SymbolKind::CD_TYPE: return "CD_TYPE";
    case SymbolKind::CD_FIELD: return "CD_FIELD";
    case SymbolKind::CD_METHOD: return "CD_METHOD";
    case SymbolKind::JAVA_TYPE: return "JAVA_TYPE";
    case SymbolKind::JAVA_CLASS: return "JAVA_CLASS";
    case SymbolKind::JAVA_INTERFACE: return "JAVA_INTERFACE";
    case SymbolKind::JAVA_ENUM: return "JAVA_ENUM";
    case SymbolKind::JAVA_FIELD: return "JAVA_FIELD";
    case SymbolKind::JAVA_METHOD: return "JAVA_METHOD";
    }
    return "?";
}

KindNamespace namespaceOf(SymbolKind kind) {
    switch (kind) {
    case SymbolKind::CD_FIELD:
    case SymbolKind::JAVA_FIELD:
        return KindNamespace::FIELDS;
    case SymbolKind::CD_METHOD:
    case SymbolKind::JAVA_METHOD:
        return KindNamespace::METHODS;
    default:
        return KindNamespace::TYPES;
    }
}

bool kindMatches(SymbolKind query, SymbolKind actual) {
    if (query == actual) return true;
    if (query == SymbolKind::JAVA_TYPE)
        return actual == SymbolKind::JAVA_CLASS || actual == SymbolKind::JAVA_INTERFACE ||
               actual == SymbolKind::JAVA_ENUM;
    return false;
}

std::string Symbol::qualifiedName() const {
    if (scope && scope->ownerSymbol()) return scope->ownerSymbol()->name + "." + name;
    return name;
}

Symbol& Scope::addSymbol(Symbol symbol) {
    if (findInNamespace(symbol.name, namespaceOf(symbol.kind))) {
        throw DuplicateNameError(symbol.pos.value_or(SourcePos{}), symbol.name);
    }
    symbols_.push_back(std::make_unique<Symbol>(std::move(symbol)));
    Symbol& added = *symbols_.back();
    added.scope = this;
    return added;
}

Scope& Scope::addSubScope(std::string name) {
    subScopes_.push_back(std::make_unique<Scope>(std::move(name), this));
    return *subScopes_.back();
}

Symbol* Scope::find(const std::string& name, SymbolKind kind) const {
    for (const auto& sym : symbols_)
        if (sym->name == name && kindMatches(kind, sym->kind)) return sym.get();
    return nullptr;
}

Symbol* Scope::findInNamespace(const std::string& name, KindNamespace ns) const {
    for (const auto& sym : symbols_)
        if (sym->name == name && namespaceOf(sym->kind) == ns) return sym.get();
    return nullptr;
}

bool isBuiltinTypeName(const std::string& name) {
    return name == "String" || name == "int" || name == "boolean" || name == "double";
}

Symbol& SymbolTable::addCdType(const CdTypeNode& node) {
    Symbol typeSym;
    typeSym.name = node.name;
    typeSym.kind = SymbolKind::CD_TYPE;
    typeSym.pos = node.pos;
    typeSym.payload = TypePayload{node.form, node.isAbstract, node.superName};
    Symbol& added = global_->addSymbol(std::move(typeSym));

    Scope& memberScope = global_->addSubScope(node.name);
    memberScope.ownerSymbol_ = &added;
    added.memberScope = &memberScope;

    for (const auto& field : node.fields) {
        Symbol fieldSym;
        fieldSym.name = field.name;
        fieldSym.kind = SymbolKind::CD_FIELD;
        fieldSym.pos = field.pos;
        fieldSym.payload = FieldPayload{field.typeName};
        memberScope.addSymbol(std::move(fieldSym));
    }
    for (const auto& method : node.methods) {
        Symbol methodSym;
        methodSym.name = method.name;
        methodSym.kind = SymbolKind::CD_METHOD;
        methodSym.pos = method.pos;
        methodSym.payload = MethodPayload{method.returnTypeName, method.params, method.isStatic};
        memberScope.addSymbol(std::move(methodSym));
    }
    return added;
}

Symbol* cdSuperTypeOf(const Scope& typeScope) {
    Symbol* owner = typeScope.ownerSymbol();
    if (!owner) return nullptr;
    const TypePayload* payload = owner->typePayload();
    if (!payload || !payload->superName) return nullptr;
    const Scope* global = typeScope.enclosing();
    if (!global) return nullptr;
    return global->find(*payload->superName, SymbolKind::CD_TYPE);
}

void SymbolTable::recomputeCdShadows() {
    for (const auto& sub : global_->subScopes()) {
        Symbol* owner = sub->ownerSymbol();
        if (!owner || owner->kind != SymbolKind::CD_TYPE) continue;
        for (const auto& sym : sub->symbols()) {
            if (sym->kind != SymbolKind::CD_FIELD) continue;
            sym->shadows = false;
            for (Symbol* ancestor = cdSuperTypeOf(*sub); ancestor;
                 ancestor = ancestor->memberScope ? cdSuperTypeOf(*ancestor->memberScope)
                                                  : nullptr) {
                if (ancestor->memberScope &&
                    ancestor->memberScope->find(sym->name, SymbolKind::CD_FIELD)) {
                    sym->shadows = true;
                    break;
                }
            }
        }
    }
}

namespace {

void checkInheritanceCycles(const CdAst& ast) {
    std::unordered_map<std::string, const CdTypeNode*> byName;
    for (const auto& type : ast.types) byName[type.name] = &type;

    // 0 unvisited, 1 on current path, 2 done
    std::unordered_map<std::string, int> state;
    for (const auto& type : ast.types) {
        std::vector<std::string> path;
        const CdTypeNode* node = &type;
        while (node && state[node->name] == 0) {
            state[node->name] = 1;
            path.push_back(node->name);
            node = node->superName && byName.count(*node->superName) ? byName[*node->superName]
                                                                     : nullptr;
        }
        if (node && state[node->name] == 1) {
            // Trim the path down to the cycle itself.
            auto it = std::find(path.begin(), path.end(), node->name);
            throw CyclicInheritanceError(std::vector<std::string>(it, path.end()));
        }
        for (const auto& name : path) state[name] = 2;
    }
}

} // namespace

SymbolTable buildSymbolTable(const CdAst& ast) {
    std::unordered_set<std::string> declared;
    for (const auto& type : ast.types) declared.insert(type.name);

    for (const auto& type : ast.types) {
        if (type.superName && !declared.count(*type.superName))
            throw UnknownTypeError(type.pos, *type.superName);
        for (const auto& field : type.fields) {
            if (!declared.count(field.typeName) && !isBuiltinTypeName(field.typeName))
                throw UnknownTypeError(field.pos, field.typeName);
        }
    }
    checkInheritanceCycles(ast);

    SymbolTable table;
    for (const auto& type : ast.types) table.addCdType(type);
    table.recomputeCdShadows();
    return table;
}

Symbol* tryResolve(const std::string& name, SymbolKind kind, const Scope& from) {
    for (const Scope* scope = &from; scope; scope = scope->enclosing()) {
        if (Symbol* found = scope->find(name, kind)) return found;
    }
    return nullptr;
}

const Symbol& resolve(const std::string& name, SymbolKind kind, const Scope& from) {
    if (Symbol* found = tryResolve(name, kind, from)) return *found;
    throw SymbolNotFoundError(name, symbolKindName(kind),
                              from.name().empty() ? "<global>" : from.name());
}

Symbol* tryResolveFieldConsideringInheritance(const std::string& name, const Scope& from) {
    const Scope* scope = &from;
    while (scope) {
        if (Symbol* found = scope->find(name, SymbolKind::CD_FIELD)) return found;
        Symbol* super = cdSuperTypeOf(*scope);
        scope = super ? super->memberScope : nullptr;
    }
    return nullptr;
}

const Symbol& resolveFieldConsideringInheritance(const std::string& name, const Scope& from) {
    if (!from.ownerSymbol() || from.ownerSymbol()->kind != SymbolKind::CD_TYPE)
        throw PreconditionError("field lookup requires a CD type scope, got scope '" +
                                from.name() + "'");
    if (Symbol* found = tryResolveFieldConsideringInheritance(name, from)) return *found;
    throw SymbolNotFoundError(name, symbolKindName(SymbolKind::CD_FIELD), from.name());
}

} // namespace symgen
