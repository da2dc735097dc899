#include "symgen/cd_parser.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

#include "symgen/errors.hpp"

namespace symgen {

const char* typeFormName(TypeForm form) {
    switch (form) {
    case TypeForm::CLASS: return "CLASS";
    case TypeForm::INTERFACE: return "INTERFACE";
    case TypeForm::ENUM: return "ENUM";
    }
    return "?";
}

const CdFieldNode* CdTypeNode::findField(const std::string& fieldName) const {
    for (const auto& f : fields)
        if (f.name == fieldName) return &f;
    return nullptr;
}

const CdMethodNode* CdTypeNode::findMethod(const std::string& methodName) const {
    for (const auto& m : methods)
        if (m.name == methodName) return &m;
    return nullptr;
}

CdTypeNode* CdAst::findType(const std::string& typeName) {
    for (auto& t : types)
        if (t.name == typeName) return &t;
    return nullptr;
}

const CdTypeNode* CdAst::findType(const std::string& typeName) const {
    for (const auto& t : types)
        if (t.name == typeName) return &t;
    return nullptr;
}

bool isDslIdentifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "classdiagram", "class", "interface", "enum", "abstract", "extends",
};

enum class TokKind { IDENT, KEYWORD, PUNCT, END };

struct Token {
    TokKind kind = TokKind::END;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    Lexer(std::string_view text, const std::string& fileName)
        : text_(text), file_(fileName) {
        // Tolerate a UTF-8 BOM.
        if (text_.substr(0, 3) == "\xEF\xBB\xBF") index_ = 3;
    }

    Token next() {
        skipTrivia();
        Token tok;
        tok.pos = SourcePos{file_, line_, col_};
        if (index_ >= text_.size()) return tok;

        unsigned char c = text_[index_];
        if (std::isalpha(c)) {
            size_t start = index_;
            while (index_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[index_])) ||
                                             text_[index_] == '_'))
                advance();
            tok.text = std::string(text_.substr(start, index_ - start));
            tok.kind = kKeywords.count(tok.text) ? TokKind::KEYWORD : TokKind::IDENT;
            return tok;
        }
        if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',' || c == ';') {
            tok.kind = TokKind::PUNCT;
            tok.text = std::string(1, static_cast<char>(c));
            advance();
            return tok;
        }
        throw ParseError(tok.pos, "unexpected character " + printable(c));
    }

private:
    void advance() {
        if (text_[index_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++index_;
    }

    void skipTrivia() {
        while (index_ < text_.size()) {
            char c = text_[index_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '/' && index_ + 1 < text_.size() && text_[index_ + 1] == '/') {
                while (index_ < text_.size() && text_[index_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    static std::string printable(unsigned char c) {
        if (std::isprint(c)) return std::string("'") + static_cast<char>(c) + "'";
        char buf[8];
        std::snprintf(buf, sizeof buf, "0x%02X", c);
        return buf;
    }

    std::string_view text_;
    std::string file_;
    size_t index_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const std::string& fileName) : lexer_(text, fileName) {
        cur_ = lexer_.next();
    }

    CdAst parseDiagram() {
        CdAst ast;
        expectKeyword("classdiagram");
        Token name = expectIdent("diagram name");
        ast.diagramName = name.text;
        ast.pos = name.pos;
        ast.fileName = name.pos.file;
        expectPunct("{");
        std::unordered_set<std::string> typeNames;
        while (!atPunct("}")) {
            CdTypeNode type = parseTypeDecl();
            if (!typeNames.insert(type.name).second)
                throw DuplicateNameError(type.pos, type.name);
            ast.types.push_back(std::move(type));
        }
        expectPunct("}");
        if (cur_.kind != TokKind::END)
            throw ParseError(cur_.pos, "unexpected token '" + cur_.text + "' after diagram");
        return ast;
    }

private:
    CdTypeNode parseTypeDecl() {
        CdTypeNode type;
        bool isAbstract = false;
        if (atKeyword("abstract")) {
            isAbstract = true;
            consume();
            if (!atKeyword("class"))
                throw ParseError(cur_.pos, "'abstract' must be followed by 'class'");
        }
        if (atKeyword("class")) {
            consume();
            Token name = expectIdent("class name");
            type.name = name.text;
            type.pos = name.pos;
            type.form = TypeForm::CLASS;
            type.isAbstract = isAbstract;
            if (atKeyword("extends")) {
                consume();
                type.superName = expectIdent("superclass name").text;
            }
            parseClassBody(type);
            return type;
        }
        if (atKeyword("interface")) {
            consume();
            Token name = expectIdent("interface name");
            type.name = name.text;
            type.pos = name.pos;
            type.form = TypeForm::INTERFACE;
            parseInterfaceBody(type);
            return type;
        }
        if (atKeyword("enum")) {
            consume();
            Token name = expectIdent("enum name");
            type.name = name.text;
            type.pos = name.pos;
            type.form = TypeForm::ENUM;
            parseEnumBody(type);
            return type;
        }
        throw ParseError(cur_.pos, "expected 'class', 'interface', 'enum', or 'abstract', got " +
                                       describe(cur_));
    }

    void parseClassBody(CdTypeNode& type) {
        expectPunct("{");
        std::unordered_set<std::string> fieldNames;
        std::unordered_set<std::string> methodNames;
        while (!atPunct("}")) {
            Token typeName = expectIdent("member type name");
            Token memberName = expectIdent("member name");
            if (atPunct("(")) {
                CdMethodNode method = parseMethodRest(typeName, memberName);
                if (!methodNames.insert(method.name).second)
                    throw DuplicateNameError(method.pos, method.name);
                type.methods.push_back(std::move(method));
            } else {
                expectPunct(";");
                if (!fieldNames.insert(memberName.text).second)
                    throw DuplicateNameError(memberName.pos, memberName.text);
                CdFieldNode field;
                field.name = memberName.text;
                field.typeName = typeName.text;
                field.pos = memberName.pos;
                type.fields.push_back(std::move(field));
            }
        }
        expectPunct("}");
    }

    void parseInterfaceBody(CdTypeNode& type) {
        expectPunct("{");
        std::unordered_set<std::string> methodNames;
        while (!atPunct("}")) {
            Token returnType = expectIdent("method return type");
            Token methodName = expectIdent("method name");
            if (!atPunct("("))
                throw ParseError(cur_.pos, "interface members must be methods; expected '('");
            CdMethodNode method = parseMethodRest(returnType, methodName);
            if (!methodNames.insert(method.name).second)
                throw DuplicateNameError(method.pos, method.name);
            type.methods.push_back(std::move(method));
        }
        expectPunct("}");
    }

    void parseEnumBody(CdTypeNode& type) {
        expectPunct("{");
        std::unordered_set<std::string> constants;
        Token first = expectIdent("enum constant");
        constants.insert(first.text);
        type.enumConstants.push_back(first.text);
        while (atPunct(",")) {
            consume();
            Token constant = expectIdent("enum constant");
            if (!constants.insert(constant.text).second)
                throw DuplicateNameError(constant.pos, constant.text);
            type.enumConstants.push_back(constant.text);
        }
        expectPunct("}");
    }

    CdMethodNode parseMethodRest(const Token& returnType, const Token& methodName) {
        CdMethodNode method;
        method.name = methodName.text;
        method.returnTypeName = returnType.text;
        method.pos = methodName.pos;
        expectPunct("(");
        std::unordered_set<std::string> paramNames;
        if (!atPunct(")")) {
            for (;;) {
                Token paramType = expectIdent("parameter type");
                Token paramName = expectIdent("parameter name");
                if (!paramNames.insert(paramName.text).second)
                    throw DuplicateNameError(paramName.pos, paramName.text);
                method.params.push_back(CdParam{paramName.text, paramType.text, paramName.pos});
                if (atPunct(",")) {
                    consume();
                    continue;
                }
                break;
            }
        }
        expectPunct(")");
        expectPunct(";");
        return method;
    }

    static std::string describe(const Token& tok) {
        switch (tok.kind) {
        case TokKind::END: return "end of input";
        case TokKind::KEYWORD: return "keyword '" + tok.text + "'";
        default: return "'" + tok.text + "'";
        }
    }

    bool atPunct(std::string_view p) const { return cur_.kind == TokKind::PUNCT && cur_.text == p; }
    bool atKeyword(std::string_view k) const {
        return cur_.kind == TokKind::KEYWORD && cur_.text == k;
    }

    void consume() { cur_ = lexer_.next(); }

    Token expectIdent(const std::string& what) {
        if (cur_.kind != TokKind::IDENT)
            throw ParseError(cur_.pos, "expected " + what + ", got " + describe(cur_));
        Token tok = cur_;
        consume();
        return tok;
    }

    void expectKeyword(const std::string& keyword) {
        if (!atKeyword(keyword))
            throw ParseError(cur_.pos, "expected '" + keyword + "', got " + describe(cur_));
        consume();
    }

    void expectPunct(const std::string& punct) {
        if (!atPunct(punct))
            throw ParseError(cur_.pos, "expected '" + punct + "', got " + describe(cur_));
        consume();
    }

    Lexer lexer_;
    Token cur_;
};

} // namespace

CdAst parseCd(std::string_view text, const std::string& fileName) {
    return Parser(text, fileName).parseDiagram();
}

} // namespace symgen
