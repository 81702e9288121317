#include "sysc/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace sysc {

std::string Value::str() const {
    switch (tag) {
        case Tag::Poison: return "_";
        case Tag::I32: return std::to_string(i);
        case Tag::F32: {
            char buf[64];
            auto r = std::to_chars(buf, buf + sizeof(buf), f);
            return std::string(buf, r.ptr);
        }
    }
    return "_";
}

const char* binop_symbol(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Or: return "||";
        case BinOp::And: return "&&";
    }
    return "?";
}

// Higher binds tighter.
int binop_precedence(BinOp op) {
    switch (op) {
        case BinOp::Or: return 1;
        case BinOp::And: return 2;
        case BinOp::Eq:
        case BinOp::Ne:
        case BinOp::Lt:
        case BinOp::Le: return 3;
        case BinOp::Add:
        case BinOp::Sub: return 4;
        case BinOp::Mul:
        case BinOp::Div: return 5;
    }
    return 0;
}

bool Expr::operator==(const Expr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::ConstInt: return ival == o.ival;
        case Kind::ConstFloat: return fval == o.fval;
        case Kind::Param:
        case Kind::LoopIndex: return name == o.name;
        case Kind::Bin:
            if (op != o.op) return false;
            break;
        case Kind::LaneRead:
            if (name != o.name || lane_offset != o.lane_offset || time_dist != o.time_dist)
                return false;
            break;
        default:
            if (name != o.name) return false;
            break;
    }
    return args == o.args;
}

Expr e_int(int64_t v) { Expr e; e.kind = Expr::Kind::ConstInt; e.ival = v; return e; }
Expr e_float(double v) { Expr e; e.kind = Expr::Kind::ConstFloat; e.fval = v; return e; }
Expr e_param(std::string n) { Expr e; e.kind = Expr::Kind::Param; e.name = std::move(n); return e; }
Expr e_index(std::string n) { Expr e; e.kind = Expr::Kind::LoopIndex; e.name = std::move(n); return e; }
Expr e_call(std::string n, std::vector<Expr> idx) {
    Expr e; e.kind = Expr::Kind::Call; e.name = std::move(n); e.args = std::move(idx); return e;
}
Expr e_select(Expr c, Expr t) {
    Expr e; e.kind = Expr::Kind::Select; e.args = {std::move(c), std::move(t)}; return e;
}
Expr e_select(Expr c, Expr t, Expr el) {
    Expr e; e.kind = Expr::Kind::Select; e.args = {std::move(c), std::move(t), std::move(el)}; return e;
}
Expr e_bin(BinOp op, Expr l, Expr r) {
    Expr e; e.kind = Expr::Kind::Bin; e.op = op; e.args = {std::move(l), std::move(r)}; return e;
}
Expr e_neg(Expr x) { Expr e; e.kind = Expr::Kind::Neg; e.args = {std::move(x)}; return e; }
Expr e_lane_read(std::string var, int lane_offset, int time_dist) {
    Expr e; e.kind = Expr::Kind::LaneRead; e.name = std::move(var);
    e.lane_offset = lane_offset; e.time_dist = time_dist; return e;
}

int64_t eval_index(const Expr& e, const EvalHooks& h) {
    switch (e.kind) {
        case Expr::Kind::ConstInt: return e.ival;
        case Expr::Kind::Param:
            if (!h.param) throw DesignError("NoParamEnv", "no parameter environment");
            return h.param(e.name);
        case Expr::Kind::LoopIndex:
            if (!h.index) throw DesignError("NoIndexEnv", "no index environment for '" + e.name + "'");
            return h.index(e.name);
        case Expr::Kind::Neg: return -eval_index(e.args[0], h);
        case Expr::Kind::Select: {
            int64_t c = eval_index(e.args[0], h);
            if (c) return eval_index(e.args[1], h);
            if (e.args.size() < 3)
                throw DesignError("UndefinedSelect", "one-armed select is undefined in index context");
            return eval_index(e.args[2], h);
        }
        case Expr::Kind::Bin: {
            int64_t l = eval_index(e.args[0], h);
            // Short-circuit for logic ops.
            if (e.op == BinOp::Or) return l ? 1 : (eval_index(e.args[1], h) != 0);
            if (e.op == BinOp::And) return !l ? 0 : (eval_index(e.args[1], h) != 0);
            int64_t r = eval_index(e.args[1], h);
            switch (e.op) {
                case BinOp::Add: return l + r;
                case BinOp::Sub: return l - r;
                case BinOp::Mul: return l * r;
                case BinOp::Div:
                    if (r == 0) throw DesignError("DivByZero", "division by zero in index expression");
                    return l / r;
                case BinOp::Eq: return l == r;
                case BinOp::Ne: return l != r;
                case BinOp::Lt: return l < r;
                case BinOp::Le: return l <= r;
                default: break;
            }
            return 0;
        }
        default:
            throw DesignError("NonIndexExpr", "value-space node in index expression");
    }
}

namespace {

Value poison_used(const EvalHooks& h) {
    if (h.on_poison_use) return h.on_poison_use();
    throw SimError("UndefinedSelect", "poison value consumed by arithmetic");
}

bool truthy(const Value& v, const EvalHooks& h) {
    if (v.is_poison()) {
        Value p = poison_used(h);
        (void)p;
        return false;
    }
    return v.tag == Value::Tag::I32 ? v.i != 0 : v.f != 0.0f;
}

Value apply_bin(BinOp op, const Value& l, const Value& r, ElemType et, const EvalHooks& h) {
    if (l.is_poison() || r.is_poison()) return poison_used(h);
    auto boolean = [](bool b) { return Value::of_i32(b ? 1 : 0); };
    if (l.tag == Value::Tag::I32 && r.tag == Value::Tag::I32) {
        int64_t a = l.i, b = r.i;
        switch (op) {
            case BinOp::Add: return Value::of_i32(int32_t(a + b));
            case BinOp::Sub: return Value::of_i32(int32_t(a - b));
            case BinOp::Mul: return Value::of_i32(int32_t(a * b));
            case BinOp::Div:
                if (b == 0) throw SimError("DivByZero", "integer division by zero");
                return Value::of_i32(int32_t(a / b));
            case BinOp::Eq: return boolean(a == b);
            case BinOp::Ne: return boolean(a != b);
            case BinOp::Lt: return boolean(a < b);
            case BinOp::Le: return boolean(a <= b);
            case BinOp::Or: return boolean(a || b);
            case BinOp::And: return boolean(a && b);
        }
    }
    float a = l.tag == Value::Tag::I32 ? float(l.i) : l.f;
    float b = r.tag == Value::Tag::I32 ? float(r.i) : r.f;
    (void)et;
    switch (op) {
        case BinOp::Add: return Value::of_f32(a + b);
        case BinOp::Sub: return Value::of_f32(a - b);
        case BinOp::Mul: return Value::of_f32(a * b);
        case BinOp::Div: return Value::of_f32(a / b);
        case BinOp::Eq: return boolean(a == b);
        case BinOp::Ne: return boolean(a != b);
        case BinOp::Lt: return boolean(a < b);
        case BinOp::Le: return boolean(a <= b);
        case BinOp::Or: return boolean(a != 0.0f || b != 0.0f);
        case BinOp::And: return boolean(a != 0.0f && b != 0.0f);
    }
    return Value::poison();
}

std::vector<int64_t> eval_indices(const std::vector<Expr>& idx, const EvalHooks& h) {
    std::vector<int64_t> out;
    out.reserve(idx.size());
    for (const auto& e : idx) out.push_back(eval_index(e, h));
    return out;
}

}  // namespace

Value eval_value(const Expr& e, ElemType et, const EvalHooks& h) {
    switch (e.kind) {
        case Expr::Kind::ConstInt:
            return et == ElemType::I32 ? Value::of_i32(int32_t(e.ival)) : Value::of_f32(float(e.ival));
        case Expr::Kind::ConstFloat:
            if (et == ElemType::I32)
                throw DesignError("TypeMismatch", "float constant in an i32 design");
            return Value::of_f32(float(e.fval));
        case Expr::Kind::Param: {
            int64_t v = h.param(e.name);
            return et == ElemType::I32 ? Value::of_i32(int32_t(v)) : Value::of_f32(float(v));
        }
        case Expr::Kind::LoopIndex: {
            int64_t v = h.index(e.name);
            return et == ElemType::I32 ? Value::of_i32(int32_t(v)) : Value::of_f32(float(v));
        }
        case Expr::Kind::InputRef:
            return h.input(e.name, eval_indices(e.args, h));
        case Expr::Kind::VarRef:
            return h.var(e.name, eval_indices(e.args, h));
        case Expr::Kind::LaneRead:
            return h.lane(e.name, e.lane_offset, e.time_dist);
        case Expr::Kind::Select: {
            Value c = eval_value(e.args[0], et, h);
            if (truthy(c, h)) return eval_value(e.args[1], et, h);
            if (e.args.size() < 3) return Value::poison();
            return eval_value(e.args[2], et, h);
        }
        case Expr::Kind::Bin: {
            // Short-circuit logic mirrors the index evaluator.
            if (e.op == BinOp::Or || e.op == BinOp::And) {
                Value l = eval_value(e.args[0], et, h);
                bool lt = truthy(l, h);
                if (e.op == BinOp::Or && lt) return Value::of_i32(1);
                if (e.op == BinOp::And && !lt) return Value::of_i32(0);
                Value r = eval_value(e.args[1], et, h);
                return Value::of_i32(truthy(r, h) ? 1 : 0);
            }
            Value l = eval_value(e.args[0], et, h);
            Value r = eval_value(e.args[1], et, h);
            return apply_bin(e.op, l, r, et, h);
        }
        case Expr::Kind::Neg: {
            Value v = eval_value(e.args[0], et, h);
            if (v.is_poison()) return poison_used(h);
            if (v.tag == Value::Tag::I32) return Value::of_i32(-v.i);
            return Value::of_f32(-v.f);
        }
        case Expr::Kind::Call:
            throw DesignError("UnresolvedCall", "unresolved call '" + e.name + "' in evaluation");
    }
    return Value::poison();
}

Expr fold(const Expr& e) {
    Expr out = e;
    for (auto& a : out.args) a = fold(a);
    switch (out.kind) {
        case Expr::Kind::Neg:
            if (out.args[0].kind == Expr::Kind::ConstInt) return e_int(-out.args[0].ival);
            return out;
        case Expr::Kind::Bin: {
            const Expr& l = out.args[0];
            const Expr& r = out.args[1];
            if (l.kind == Expr::Kind::ConstInt && r.kind == Expr::Kind::ConstInt) {
                int64_t a = l.ival, b = r.ival;
                switch (out.op) {
                    case BinOp::Add: return e_int(a + b);
                    case BinOp::Sub: return e_int(a - b);
                    case BinOp::Mul: return e_int(a * b);
                    case BinOp::Div: return b == 0 ? out : e_int(a / b);
                    case BinOp::Eq: return e_int(a == b);
                    case BinOp::Ne: return e_int(a != b);
                    case BinOp::Lt: return e_int(a < b);
                    case BinOp::Le: return e_int(a <= b);
                    case BinOp::Or: return e_int(a || b);
                    case BinOp::And: return e_int(a && b);
                }
            }
            // x + 0, x - 0, x * 1, x * 0, 0 + x, 1 * x
            auto is_int = [](const Expr& x, int64_t v) {
                return x.kind == Expr::Kind::ConstInt && x.ival == v;
            };
            if (out.op == BinOp::Add && is_int(l, 0)) return r;
            if (out.op == BinOp::Add && is_int(r, 0)) return l;
            if (out.op == BinOp::Sub && is_int(r, 0)) return l;
            if (out.op == BinOp::Mul && (is_int(l, 0) || is_int(r, 0))) return e_int(0);
            if (out.op == BinOp::Mul && is_int(l, 1)) return r;
            if (out.op == BinOp::Mul && is_int(r, 1)) return l;
            return out;
        }
        default:
            return out;
    }
}

Expr substitute_params(const Expr& e, const std::function<const int64_t*(const std::string&)>& lookup) {
    if (e.kind == Expr::Kind::Param) {
        if (const int64_t* v = lookup(e.name)) return e_int(*v);
        return e;
    }
    Expr out = e;
    for (auto& a : out.args) a = substitute_params(a, lookup);
    return out;
}

Expr substitute_index(const Expr& e, const std::string& name, const Expr& repl) {
    if (e.kind == Expr::Kind::LoopIndex && e.name == name) return repl;
    Expr out = e;
    for (auto& a : out.args) a = substitute_index(a, name, repl);
    return out;
}

namespace {

std::string print_float(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, r.ptr);
    // Keep a decimal point so the token re-parses as a float.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

// prec: precedence of the enclosing operator; wrap when we bind looser.
void print_rec(const Expr& e, int prec, bool right_operand, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::ConstInt:
            if (e.ival < 0) {
                out += "(" + std::to_string(e.ival) + ")";
            } else {
                out += std::to_string(e.ival);
            }
            return;
        case Expr::Kind::ConstFloat: out += print_float(e.fval); return;
        case Expr::Kind::Param:
        case Expr::Kind::LoopIndex: out += e.name; return;
        case Expr::Kind::Call:
        case Expr::Kind::InputRef:
        case Expr::Kind::VarRef: {
            out += e.name + "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ", ";
                print_rec(e.args[i], 0, false, out);
            }
            out += ")";
            return;
        }
        case Expr::Kind::LaneRead: {
            out += e.name + "[lane";
            if (e.lane_offset > 0) out += " + " + std::to_string(e.lane_offset);
            if (e.lane_offset < 0) out += " - " + std::to_string(-e.lane_offset);
            out += " @" + std::to_string(e.time_dist) + "]";
            return;
        }
        case Expr::Kind::Select: {
            out += "select(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ", ";
                print_rec(e.args[i], 0, false, out);
            }
            out += ")";
            return;
        }
        case Expr::Kind::Neg: {
            out += "-";
            // Negation binds tightest; parenthesize any non-atom operand.
            const Expr& x = e.args[0];
            bool atom = x.kind == Expr::Kind::ConstInt || x.kind == Expr::Kind::ConstFloat ||
                        x.kind == Expr::Kind::Param || x.kind == Expr::Kind::LoopIndex ||
                        x.kind == Expr::Kind::Call || x.kind == Expr::Kind::InputRef ||
                        x.kind == Expr::Kind::VarRef || x.kind == Expr::Kind::Select;
            if (!atom) out += "(";
            print_rec(x, 6, false, out);
            if (!atom) out += ")";
            return;
        }
        case Expr::Kind::Bin: {
            int p = binop_precedence(e.op);
            bool paren = p < prec || (p == prec && right_operand);
            if (paren) out += "(";
            print_rec(e.args[0], p, false, out);
            out += " ";
            out += binop_symbol(e.op);
            out += " ";
            print_rec(e.args[1], p, true, out);
            if (paren) out += ")";
            return;
        }
    }
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_rec(e, 0, false, out);
    return out;
}

}  // namespace sysc
