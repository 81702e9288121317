#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sysc/error.hpp"

namespace sysc {

enum class ElemType { I32, F32 };

// Runtime value: a 32-bit int, a 32-bit float, or poison. Poison marks
// storage that was never written (or a one-armed select whose condition
// was false). Arithmetic never silently turns poison into a number.
struct Value {
    enum class Tag : uint8_t { Poison, I32, F32 } tag = Tag::Poison;
    int32_t i = 0;
    float f = 0.0f;

    static Value poison() { return Value{}; }
    static Value of_i32(int32_t v) { return Value{Tag::I32, v, 0.0f}; }
    static Value of_f32(float v) { return Value{Tag::F32, 0, v}; }
    bool is_poison() const { return tag == Tag::Poison; }
    bool operator==(const Value& o) const {
        if (tag != o.tag) return false;
        if (tag == Tag::I32) return i == o.i;
        if (tag == Tag::F32) return f == o.f;
        return true;
    }
    std::string str() const;
};

enum class BinOp { Add, Sub, Mul, Div, Eq, Ne, Lt, Le, Or, And };

const char* binop_symbol(BinOp op);
int binop_precedence(BinOp op);

// Pure expression tree. `Call` is the unresolved surface form `name(args)`;
// design construction resolves it into VarRef or InputRef. LaneRead only
// appears after a space-time transform: it reads a variable's lane storage
// at a constant lane offset and a constant time distance.
struct Expr {
    enum class Kind {
        ConstInt, ConstFloat, Param, LoopIndex, Call, InputRef, VarRef,
        Select, Bin, Neg, LaneRead,
    };
    Kind kind = Kind::ConstInt;
    int64_t ival = 0;       // ConstInt
    double fval = 0.0;      // ConstFloat
    std::string name;       // Param/LoopIndex/Call/InputRef/VarRef/LaneRead
    BinOp op = BinOp::Add;  // Bin
    std::vector<Expr> args; // children: Call/refs = indices, Select = c,t[,e],
                            // Bin = l,r, Neg = x
    int lane_offset = 0;    // LaneRead: offset added to the current lane
    int time_dist = 0;      // LaneRead: how many steps ago the value was made

    bool operator==(const Expr& o) const;
};

Expr e_int(int64_t v);
Expr e_float(double v);
Expr e_param(std::string n);
Expr e_index(std::string n);
Expr e_call(std::string n, std::vector<Expr> idx);
Expr e_select(Expr c, Expr t);
Expr e_select(Expr c, Expr t, Expr e);
Expr e_bin(BinOp op, Expr l, Expr r);
Expr e_neg(Expr x);
Expr e_lane_read(std::string var, int lane_offset, int time_dist);

// Hooks the evaluator uses to resolve names. Index evaluation (bounds,
// let bindings, reference indices) runs over int64 and never touches
// inputs or variables.
struct EvalHooks {
    std::function<int64_t(const std::string&)> param;
    std::function<int64_t(const std::string&)> index;
    std::function<Value(const std::string&, const std::vector<int64_t>&)> input;
    std::function<Value(const std::string&, const std::vector<int64_t>&)> var;
    std::function<Value(const std::string&, int lane_offset, int time_dist)> lane;
    // Called when poison is consumed by arithmetic or a comparison; decides
    // whether to throw or to propagate poison.
    std::function<Value()> on_poison_use;
};

// Integer evaluation of an index-space expression (params, loop indexes,
// integer arithmetic, select). Throws DesignError on any value-space node.
int64_t eval_index(const Expr& e, const EvalHooks& h);

// Value evaluation. Select is lazy: only the chosen arm is evaluated.
// A one-armed select whose condition is false yields poison.
Value eval_value(const Expr& e, ElemType et, const EvalHooks& h);

// Constant folding over integer arithmetic; leaves everything else alone.
Expr fold(const Expr& e);

// Substitute params by their bound integers (used after instantiation).
Expr substitute_params(const Expr& e, const std::function<const int64_t*(const std::string&)>& lookup);

// Substitute loop-index names by expressions (used by tiling).
Expr substitute_index(const Expr& e, const std::string& name, const Expr& repl);

// Canonical printing with minimal parenthesization (C precedence).
std::string print_expr(const Expr& e);

}  // namespace sysc
