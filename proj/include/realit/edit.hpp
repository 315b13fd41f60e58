#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace realit {

enum class BugType {
    VarMisuse,
    WrongBinop,
    WrongAssignOp,
    WrongUnary,
    WrongLiteral,
};

enum class EditAction {
    Replace,
    InsertBefore,
    Delete,
    Noop,
};

inline const char* to_string(BugType t) {
    switch (t) {
        case BugType::VarMisuse: return "var_misuse";
        case BugType::WrongBinop: return "wrong_binop";
        case BugType::WrongAssignOp: return "wrong_assign_op";
        case BugType::WrongUnary: return "wrong_unary";
        case BugType::WrongLiteral: return "wrong_literal";
    }
    return "?";
}

inline const char* to_string(EditAction a) {
    switch (a) {
        case EditAction::Replace: return "replace";
        case EditAction::InsertBefore: return "insert_before";
        case EditAction::Delete: return "delete";
        case EditAction::Noop: return "noop";
    }
    return "?";
}

inline BugType bug_type_from_string(const std::string& s) {
    if (s == "var_misuse") return BugType::VarMisuse;
    if (s == "wrong_binop") return BugType::WrongBinop;
    if (s == "wrong_assign_op") return BugType::WrongAssignOp;
    if (s == "wrong_unary") return BugType::WrongUnary;
    if (s == "wrong_literal") return BugType::WrongLiteral;
    throw std::invalid_argument("unknown bug type: " + s);
}

inline EditAction edit_action_from_string(const std::string& s) {
    if (s == "replace") return EditAction::Replace;
    if (s == "insert_before") return EditAction::InsertBefore;
    if (s == "delete") return EditAction::Delete;
    if (s == "noop") return EditAction::Noop;
    throw std::invalid_argument("unknown edit action: " + s);
}

// One token-level edit. `loc` indexes into TokenSeq::tokens (synthetic
// indent/dedent/newline tokens included in the numbering).
struct EditOp {
    EditAction action = EditAction::Noop;
    size_t loc = 0;                    // meaningless for noop
    std::string payload;               // empty for delete/noop
    std::optional<BugType> bug_type;   // nullopt for noop

    static EditOp noop() { return EditOp{}; }

    static EditOp replace(size_t loc, std::string payload, BugType type) {
        return EditOp{EditAction::Replace, loc, std::move(payload), type};
    }

    static EditOp insert_before(size_t loc, std::string payload, BugType type) {
        return EditOp{EditAction::InsertBefore, loc, std::move(payload), type};
    }

    static EditOp del(size_t loc, BugType type) {
        return EditOp{EditAction::Delete, loc, "", type};
    }

    bool is_noop() const { return action == EditAction::Noop; }

    friend bool operator==(const EditOp& a, const EditOp& b) {
        if (a.action != b.action) return false;
        if (a.action == EditAction::Noop) return true;
        return a.loc == b.loc && a.payload == b.payload;
    }
    friend bool operator!=(const EditOp& a, const EditOp& b) { return !(a == b); }
};

}  // namespace realit
