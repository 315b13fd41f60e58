#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "realit/edit.hpp"

namespace realit::pytok {

enum class TokenKind {
    Identifier,
    Keyword,
    BinaryOp,
    AssignOp,
    UnaryOp,
    LiteralBool,
    LiteralInt,
    LiteralStr,
    LiteralOther,
    Punct,
    Indent,
    Dedent,
    Newline,
};

inline const char* to_string(TokenKind k) {
    switch (k) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Keyword: return "keyword";
        case TokenKind::BinaryOp: return "binary_op";
        case TokenKind::AssignOp: return "assign_op";
        case TokenKind::UnaryOp: return "unary_op";
        case TokenKind::LiteralBool: return "literal_bool";
        case TokenKind::LiteralInt: return "literal_int";
        case TokenKind::LiteralStr: return "literal_str";
        case TokenKind::LiteralOther: return "literal_other";
        case TokenKind::Punct: return "punct";
        case TokenKind::Indent: return "indent";
        case TokenKind::Dedent: return "dedent";
        case TokenKind::Newline: return "newline";
    }
    return "?";
}

struct Token {
    std::string text;   // empty for synthetic indent/dedent/newline
    TokenKind kind;
    int line = 1;       // 1-based
    int col = 0;        // 0-based
    size_t begin = 0;   // half-open byte span into source; begin==end for synthetic
    size_t end = 0;

    bool synthetic() const {
        return kind == TokenKind::Indent || kind == TokenKind::Dedent ||
               kind == TokenKind::Newline;
    }
};

// Per-token context tags (tag_contexts output).
enum ContextTag : uint8_t {
    kInCondition = 1,
    kInArithExpr = 2,
};

struct TokenSeq {
    std::vector<Token> tokens;
    std::string source;
    std::vector<uint8_t> context_tags;   // ContextTag bitmask, parallel to tokens
    std::vector<uint8_t> binding;        // 1 where the token is a binding occurrence
    std::set<std::string> scope_vars;    // names bound anywhere in the function

    size_t size() const { return tokens.size(); }

    bool in_condition(size_t i) const { return context_tags[i] & kInCondition; }
    bool in_arith_expr(size_t i) const { return context_tags[i] & kInArithExpr; }
    bool is_binding(size_t i) const { return binding[i] != 0; }

    // Attribute name: identifier directly after '.'.
    bool is_attribute(size_t i) const {
        if (tokens[i].kind != TokenKind::Identifier) return false;
        for (size_t j = i; j-- > 0;) {
            if (tokens[j].synthetic()) continue;
            return tokens[j].text == ".";
        }
        return false;
    }

    // Keyword-argument name: `f(key=...)` — identifier inside brackets with
    // '(' or ',' before it and a plain '=' after it.
    bool is_kwarg_name(size_t i) const {
        if (tokens[i].kind != TokenKind::Identifier) return false;
        const Token* prev = prev_real(i);
        const Token* next = next_real(i);
        if (!prev || !next) return false;
        return (prev->text == "(" || prev->text == ",") && next->text == "=" &&
               next->kind == TokenKind::AssignOp && prev->text == "(";
    }

    const Token* prev_real(size_t i) const {
        for (size_t j = i; j-- > 0;)
            if (!tokens[j].synthetic()) return &tokens[j];
        return nullptr;
    }
    const Token* next_real(size_t i) const {
        for (size_t j = i + 1; j < tokens.size(); ++j)
            if (!tokens[j].synthetic()) return &tokens[j];
        return nullptr;
    }
    size_t next_real_index(size_t i) const {
        for (size_t j = i + 1; j < tokens.size(); ++j)
            if (!tokens[j].synthetic()) return j;
        return tokens.size();
    }
};

struct TokenizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedSyntax : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEdit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline const std::set<std::string>& supported_keywords() {
    static const std::set<std::string> kw = {
        "def", "return", "if", "elif", "else", "for", "while", "in",
        "not", "and", "or", "is", "pass", "break", "continue",
        "assert", "with", "as", "raise",
    };
    return kw;
}

inline const std::set<std::string>& unsupported_keywords() {
    static const std::set<std::string> kw = {
        "class", "import", "from", "try", "except", "finally", "yield",
        "async", "await", "global", "nonlocal", "lambda", "del",
    };
    return kw;
}

// Operators, longest first within each length class.
inline const std::vector<std::string>& operator_table() {
    static const std::vector<std::string> ops = {
        "**=", "//=", "<<=", ">>=",
        "==", "!=", "<=", ">=", "//", "**", "<<", ">>", "->",
        "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
        "+", "-", "*", "/", "%", "<", ">", "&", "|", "^", "~",
        "=", "@", ".", ",", ":", ";", "(", ")", "[", "]", "{", "}",
    };
    return ops;
}

inline bool is_assign_text(const std::string& t) {
    static const std::set<std::string> s = {"=",  "+=", "-=",  "*=",  "/=", "//=",
                                            "%=", "**=", "&=", "|=", "^=", "<<=",
                                            ">>="};
    return s.count(t) > 0;
}

inline bool is_arith_text(const std::string& t) {
    static const std::set<std::string> s = {"+", "-", "*", "/", "//", "%", "**"};
    return s.count(t) > 0;
}

// A '-'/'+'/'*'/'**' sits in operand (unary/marker) position unless the
// previous real token can end an operand.
inline bool ends_operand(const Token& t) {
    switch (t.kind) {
        case TokenKind::Identifier:
        case TokenKind::LiteralBool:
        case TokenKind::LiteralInt:
        case TokenKind::LiteralStr:
        case TokenKind::LiteralOther:
            return true;
        case TokenKind::Punct:
            return t.text == ")" || t.text == "]" || t.text == "}";
        default:
            return false;
    }
}

class Lexer {
public:
    explicit Lexer(std::string source) : src_(std::move(source)) {}

    TokenSeq run() {
        TokenSeq seq;
        seq.source = src_;
        indents_.push_back(0);
        at_line_start_ = true;

        while (pos_ < src_.size()) {
            if (at_line_start_ && depth_ == 0) {
                if (!handle_line_start()) continue;  // blank/comment line skipped
            }
            char c = src_[pos_];
            if (c == ' ' || c == '\t') {
                advance();
                continue;
            }
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (c == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') {
                advance();
                newline();
                continue;
            }
            if (c == '\r') {
                advance();
                continue;
            }
            if (c == '\n') {
                if (depth_ > 0) {
                    newline();
                } else {
                    emit_newline();
                    newline();
                    at_line_start_ = true;
                }
                continue;
            }
            lex_token();
        }
        if (depth_ > 0) throw TokenizeError("unclosed bracket at end of input");
        if (line_has_tokens_) emit_newline();
        while (indents_.size() > 1) {
            indents_.pop_back();
            push_synthetic(TokenKind::Dedent);
        }
        seq.tokens = std::move(tokens_);
        seq.context_tags.assign(seq.tokens.size(), 0);
        seq.binding.assign(seq.tokens.size(), 0);
        return seq;
    }

private:
    void advance() {
        ++pos_;
        ++col_;
    }
    void newline() {
        ++pos_;
        ++line_;
        col_ = 0;
    }

    // Measures the indentation of the upcoming line; emits indent/dedent.
    // Returns false when the line is blank or comment-only (skipped whole).
    bool handle_line_start() {
        size_t p = pos_;
        int width = 0;
        while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t')) {
            width = src_[p] == '\t' ? (width / 8 + 1) * 8 : width + 1;
            ++p;
        }
        if (p >= src_.size()) {
            pos_ = p;
            col_ += static_cast<int>(p - pos_);
            return false;
        }
        if (src_[p] == '\n' || src_[p] == '#' || src_[p] == '\r') {
            // Blank or comment-only line: consume it without tokens.
            while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            if (pos_ < src_.size()) newline();
            return false;
        }
        col_ += static_cast<int>(p - pos_);
        pos_ = p;
        at_line_start_ = false;
        line_has_tokens_ = false;
        if (width > indents_.back()) {
            indents_.push_back(width);
            push_synthetic(TokenKind::Indent);
        } else {
            while (width < indents_.back()) {
                indents_.pop_back();
                push_synthetic(TokenKind::Dedent);
            }
            if (width != indents_.back())
                throw TokenizeError("inconsistent dedent at line " +
                                    std::to_string(line_));
        }
        return true;
    }

    void lex_token() {
        char c = src_[pos_];
        if (is_ident_start(c)) {
            lex_word();
        } else if (is_digit(c)) {
            lex_number(pos_);
        } else if (c == '\'' || c == '"') {
            lex_string(pos_, 0);
        } else if (c == '-' && in_operand_position() && pos_ + 1 < src_.size() &&
                   is_digit(src_[pos_ + 1])) {
            // Signed small-integer folding: the minus cannot be binary here.
            lex_number(pos_ + 1, /*signed_from=*/pos_);
        } else {
            lex_operator();
        }
        line_has_tokens_ = true;
    }

    void lex_word() {
        size_t start = pos_;
        int scol = col_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
        std::string text = src_.substr(start, pos_ - start);

        // String prefixes: r'...', b"...", rb'...', f'...'
        if (pos_ < src_.size() && (src_[pos_] == '\'' || src_[pos_] == '"') &&
            text.size() <= 2 && is_string_prefix(text)) {
            pos_ = start;
            col_ = scol;
            lex_string(start + text.size(), text.size());
            return;
        }

        TokenKind kind;
        if (text == "True" || text == "False") {
            kind = TokenKind::LiteralBool;
        } else if (text == "None") {
            kind = TokenKind::LiteralOther;
        } else if (text == "and" || text == "or") {
            kind = TokenKind::BinaryOp;
        } else if (text == "not") {
            // `not` after an operand belongs to `not in`; otherwise unary.
            kind = in_operand_position() ? TokenKind::UnaryOp : TokenKind::Keyword;
        } else if (supported_keywords().count(text)) {
            kind = TokenKind::Keyword;
        } else if (unsupported_keywords().count(text)) {
            throw UnsupportedSyntax("'" + text + "' at line " + std::to_string(line_));
        } else {
            kind = TokenKind::Identifier;
        }
        push(text, kind, line_, scol, start, pos_);
    }

    static bool is_string_prefix(const std::string& t) {
        for (char c : t) {
            char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (l != 'r' && l != 'b' && l != 'u' && l != 'f') return false;
        }
        return !t.empty();
    }

    void lex_number(size_t digits_at, size_t signed_from = std::string::npos) {
        size_t start = signed_from == std::string::npos ? digits_at : signed_from;
        int scol = col_;
        int sline = line_;
        pos_ = digits_at;
        col_ += static_cast<int>(digits_at - start);

        bool is_int = true;
        if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
            (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X' || src_[pos_ + 1] == 'o' ||
             src_[pos_ + 1] == 'O' || src_[pos_ + 1] == 'b' || src_[pos_ + 1] == 'B')) {
            advance();
            advance();
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                advance();
        } else {
            while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_'))
                advance();
            if (pos_ < src_.size() && src_[pos_] == '.') {
                is_int = false;
                advance();
                while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '_'))
                    advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                is_int = false;
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
                    advance();
                while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) {
                is_int = false;
                advance();
            }
        }
        std::string text = src_.substr(start, pos_ - start);
        if (signed_from != std::string::npos && !is_int) {
            // Float after a unary minus: back out of the fold, emit '-' alone.
            pos_ = start;
            col_ = scol;
            push("-", TokenKind::UnaryOp, sline, scol, start, start + 1);
            advance();
            return;
        }
        push(text, is_int ? TokenKind::LiteralInt : TokenKind::LiteralOther, sline,
             scol, start, pos_);
    }

    void lex_string(size_t quote_at, size_t prefix_len) {
        size_t start = pos_;
        int scol = col_;
        int sline = line_;
        pos_ = quote_at;
        col_ += static_cast<int>(quote_at - start);
        char q = src_[pos_];
        bool triple = pos_ + 2 < src_.size() && src_[pos_ + 1] == q && src_[pos_ + 2] == q;
        advance();
        if (triple) {
            advance();
            advance();
            while (pos_ + 2 < src_.size() + 1) {
                if (pos_ + 2 <= src_.size() - 1 && src_[pos_] == q &&
                    src_[pos_ + 1] == q && src_[pos_ + 2] == q) {
                    advance();
                    advance();
                    advance();
                    push(src_.substr(start, pos_ - start), TokenKind::LiteralStr,
                         sline, scol, start, pos_);
                    return;
                }
                if (pos_ >= src_.size())
                    throw TokenizeError("unterminated string at line " +
                                        std::to_string(sline));
                if (src_[pos_] == '\n')
                    newline();
                else
                    advance();
            }
            throw TokenizeError("unterminated string at line " + std::to_string(sline));
        }
        while (pos_ < src_.size() && src_[pos_] != q) {
            if (src_[pos_] == '\n')
                throw TokenizeError("unterminated string at line " +
                                    std::to_string(sline));
            if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
            advance();
        }
        if (pos_ >= src_.size())
            throw TokenizeError("unterminated string at line " + std::to_string(sline));
        advance();  // closing quote
        push(src_.substr(start, pos_ - start), TokenKind::LiteralStr, sline, scol,
             start, pos_);
        (void)prefix_len;
    }

    void lex_operator() {
        for (const auto& op : operator_table()) {
            if (src_.compare(pos_, op.size(), op) == 0) {
                if (op == ":" && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=')
                    throw UnsupportedSyntax("':=' at line " + std::to_string(line_));
                size_t start = pos_;
                int scol = col_;
                for (size_t i = 0; i < op.size(); ++i) advance();
                push(op, classify_operator(op), line_, scol, start, pos_);
                if (op == "(" || op == "[" || op == "{") ++depth_;
                if (op == ")" || op == "]" || op == "}") {
                    if (depth_ == 0)
                        throw TokenizeError("unbalanced '" + op + "' at line " +
                                            std::to_string(line_));
                    --depth_;
                }
                return;
            }
        }
        throw TokenizeError(std::string("unexpected character '") + src_[pos_] +
                            "' at line " + std::to_string(line_));
    }

    TokenKind classify_operator(const std::string& op) {
        if (is_assign_text(op)) return TokenKind::AssignOp;
        if (op == "~") return TokenKind::UnaryOp;
        if (op == "+" || op == "-")
            return in_operand_position() ? TokenKind::UnaryOp : TokenKind::BinaryOp;
        if (op == "*" || op == "**")
            return in_operand_position() ? TokenKind::Punct : TokenKind::BinaryOp;
        if (op == "/" || op == "//" || op == "%" || op == "<" || op == ">" ||
            op == "<=" || op == ">=" || op == "==" || op == "!=" || op == "&" ||
            op == "|" || op == "^" || op == "<<" || op == ">>")
            return TokenKind::BinaryOp;
        return TokenKind::Punct;
    }

    bool in_operand_position() const {
        for (size_t j = tokens_.size(); j-- > 0;) {
            if (tokens_[j].synthetic()) continue;
            return !ends_operand(tokens_[j]);
        }
        return true;
    }

    void push(std::string text, TokenKind kind, int line, int col, size_t b, size_t e) {
        tokens_.push_back(Token{std::move(text), kind, line, col, b, e});
    }
    void push_synthetic(TokenKind kind) {
        tokens_.push_back(Token{"", kind, line_, col_, pos_, pos_});
    }
    void emit_newline() {
        push_synthetic(TokenKind::Newline);
        line_has_tokens_ = false;
    }

    std::string src_;
    std::vector<Token> tokens_;
    std::vector<int> indents_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 0;
    int depth_ = 0;
    bool at_line_start_ = true;
    bool line_has_tokens_ = false;
};

// Marks binding occurrences and collects scope_vars. A name binds when it is
// a parameter, a plain assignment target, a for/comprehension target, or an
// `as` target; attribute/subscript/call heads never bind.
inline void collect_scopes(TokenSeq& seq) {
    auto& toks = seq.tokens;
    auto plain_name = [&](size_t i) {
        if (toks[i].kind != TokenKind::Identifier) return false;
        const Token* prev = seq.prev_real(i);
        if (prev && prev->text == ".") return false;
        const Token* next = seq.next_real(i);
        if (next && (next->text == "." || next->text == "[" || next->text == "("))
            return false;
        return true;
    };
    auto bind = [&](size_t i) {
        if (!plain_name(i)) return;
        seq.binding[i] = 1;
        seq.scope_vars.insert(toks[i].text);
    };

    // Bracket depth per token, and statement segmentation at depth 0.
    std::vector<int> depth(toks.size(), 0);
    int d = 0;
    for (size_t i = 0; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        if (t == "(" || t == "[" || t == "{") {
            depth[i] = d;
            ++d;
        } else if (t == ")" || t == "]" || t == "}") {
            --d;
            depth[i] = d;
        } else {
            depth[i] = d;
        }
    }

    for (size_t i = 0; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        // Parameters: def NAME ( ... ) — names at bracket depth of '(' + 1.
        if (toks[i].kind == TokenKind::Keyword && t == "def") {
            size_t open = i;
            while (open < toks.size() && toks[open].text != "(") ++open;
            if (open >= toks.size()) continue;
            int base = depth[open];
            for (size_t j = open + 1; j < toks.size(); ++j) {
                if (toks[j].text == ")" && depth[j] == base) break;
                if (toks[j].kind != TokenKind::Identifier || depth[j] != base + 1)
                    continue;
                const Token* prev = seq.prev_real(j);
                if (!prev) continue;
                std::string p = prev->text;
                if (p == "(" || p == "," || p == "*" || p == "**") bind(j);
            }
        }
        // for TARGETS in ...: — also covers comprehension clauses.
        if (toks[i].kind == TokenKind::Keyword && t == "for") {
            for (size_t j = i + 1; j < toks.size(); ++j) {
                if (toks[j].kind == TokenKind::Keyword && toks[j].text == "in" &&
                    depth[j] == depth[i])
                    break;
                if (toks[j].kind == TokenKind::Newline) break;
                if (toks[j].kind == TokenKind::Identifier && depth[j] <= depth[i] + 1)
                    bind(j);
            }
        }
        // with ... as TARGET:
        if (toks[i].kind == TokenKind::Keyword && t == "as") {
            for (size_t j = i + 1; j < toks.size(); ++j) {
                if (toks[j].synthetic() || toks[j].text == ":" ) break;
                if (toks[j].kind == TokenKind::Identifier) bind(j);
                else if (toks[j].text != "(" && toks[j].text != "," && toks[j].text != ")")
                    break;
            }
        }
        // Plain assignment targets: every depth-0 '=' marks the names of the
        // segment before it (handles `a = b = 1` and tuple targets).
        if (toks[i].kind == TokenKind::AssignOp && t == "=" && depth[i] == 0) {
            for (size_t j = i; j-- > 0;) {
                if (toks[j].synthetic()) break;
                if (toks[j].kind == TokenKind::AssignOp) break;
                if (toks[j].kind == TokenKind::Identifier && depth[j] == 0) bind(j);
            }
        }
        // Augmented assignment target reads the old value: record the name in
        // scope_vars but leave the occurrence mutable (not a binding).
        if (toks[i].kind == TokenKind::AssignOp && t != "=" && depth[i] == 0) {
            for (size_t j = i; j-- > 0;) {
                if (toks[j].synthetic()) break;
                if (toks[j].kind == TokenKind::Identifier && depth[j] == 0 &&
                    plain_name(j)) {
                    seq.scope_vars.insert(toks[j].text);
                    break;
                }
                if (toks[j].text == "." || toks[j].text == "]") break;
            }
        }
    }
}

}  // namespace detail

// Tokenizes one top-level Python function definition (supported subset).
// Scope information is computed here; context tags come from tag_contexts.
inline TokenSeq tokenize(const std::string& source) {
    detail::Lexer lexer(source);
    TokenSeq seq = lexer.run();
    bool saw_def = false;
    for (const auto& t : seq.tokens) {
        if (t.synthetic()) continue;
        if (t.text == "def") {
            saw_def = true;
            break;
        }
        if (t.text != "@" && !(t.kind == TokenKind::Identifier) && t.text != ".")
            break;
    }
    if (!saw_def)
        throw UnsupportedSyntax("input is not a function definition (line 1)");
    detail::collect_scopes(seq);
    return seq;
}

// Adds in_condition / in_arith_expr tags. Pure enrichment.
inline TokenSeq tag_contexts(TokenSeq seq) {
    auto& toks = seq.tokens;
    std::fill(seq.context_tags.begin(), seq.context_tags.end(), 0);

    std::vector<int> depth(toks.size(), 0);
    int d = 0;
    for (size_t i = 0; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        if (t == "(" || t == "[" || t == "{") {
            depth[i] = d;
            ++d;
        } else if (t == ")" || t == "]" || t == "}") {
            --d;
            depth[i] = d;
        } else {
            depth[i] = d;
        }
    }

    auto at_line_start = [&](size_t i) {
        const Token* prev = nullptr;
        for (size_t j = i; j-- > 0;) {
            prev = &toks[j];
            break;
        }
        if (!prev) return true;
        return prev->synthetic();
    };

    for (size_t i = 0; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        bool cond_kw = toks[i].kind == TokenKind::Keyword &&
                       (t == "if" || t == "elif" || t == "while" || t == "assert");
        if (cond_kw) {
            bool statement = at_line_start(i) || t == "elif";
            bool ternary = t == "if" && !statement;
            for (size_t j = i + 1; j < toks.size(); ++j) {
                if (toks[j].kind == TokenKind::Newline) break;
                if (depth[j] < depth[i]) break;  // enclosing bracket closed
                if (depth[j] == depth[i]) {
                    if (!ternary && toks[j].text == ":") break;
                    if (t == "assert" && toks[j].text == ",") break;
                    if (ternary && (toks[j].text == "else" || toks[j].text == "for"))
                        break;
                }
                seq.context_tags[j] |= kInCondition;
            }
        }
        // Operands adjacent to an arithmetic binary operator.
        if (toks[i].kind == TokenKind::BinaryOp && detail::is_arith_text(t)) {
            for (size_t j = i; j-- > 0;) {
                if (toks[j].synthetic()) break;
                if (toks[j].kind == TokenKind::Identifier ||
                    toks[j].kind == TokenKind::LiteralInt ||
                    toks[j].kind == TokenKind::LiteralOther ||
                    toks[j].kind == TokenKind::LiteralBool)
                    seq.context_tags[j] |= kInArithExpr;
                break;
            }
            for (size_t j = i + 1; j < toks.size(); ++j) {
                if (toks[j].synthetic()) break;
                if (toks[j].kind == TokenKind::UnaryOp) continue;  // skip over unary
                if (toks[j].kind == TokenKind::Identifier ||
                    toks[j].kind == TokenKind::LiteralInt ||
                    toks[j].kind == TokenKind::LiteralOther ||
                    toks[j].kind == TokenKind::LiteralBool)
                    seq.context_tags[j] |= kInArithExpr;
                break;
            }
        }
    }
    return seq;
}

inline TokenSeq analyze(const std::string& source) {
    return tag_contexts(tokenize(source));
}

// Applies one edit to the source text. Whitespace outside the edited span is
// preserved byte-exactly; NOOP returns the source unchanged.
inline std::string render(const TokenSeq& seq, const EditOp& edit) {
    if (edit.is_noop()) return seq.source;
    if (edit.loc >= seq.tokens.size())
        throw InvalidEdit("edit location " + std::to_string(edit.loc) +
                          " out of range");
    const Token& tok = seq.tokens[edit.loc];
    if (tok.synthetic())
        throw InvalidEdit("edit at synthetic token " + std::to_string(edit.loc));

    switch (edit.action) {
        case EditAction::Replace:
            return seq.source.substr(0, tok.begin) + edit.payload +
                   seq.source.substr(tok.end);
        case EditAction::InsertBefore: {
            if (edit.payload != "not" && edit.payload != "-")
                throw InvalidEdit("insert payload must be 'not' or '-'");
            std::string ins = edit.payload == "not" ? "not " : "-";
            return seq.source.substr(0, tok.begin) + ins + seq.source.substr(tok.begin);
        }
        case EditAction::Delete: {
            if (tok.kind != TokenKind::UnaryOp || (tok.text != "not" && tok.text != "-"))
                throw InvalidEdit("delete requires a unary 'not' or '-' token");
            size_t end = tok.end;
            if (tok.text == "not" && end < seq.source.size() && seq.source[end] == ' ')
                ++end;
            return seq.source.substr(0, tok.begin) + seq.source.substr(end);
        }
        case EditAction::Noop:
            break;
    }
    return seq.source;
}

}  // namespace realit::pytok
