#include "symcalc/expr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symcalc {

namespace {

using NodePtr = std::shared_ptr<const ExNode>;

NodePtr make(ExOp op, double value, int axis, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<ExNode>();
    n->op = op;
    n->value = value;
    n->axis = axis;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

bool const_of(const NodePtr& n, double& out) {
    if (n->op == ExOp::Const) {
        out = n->value;
        return true;
    }
    return false;
}

NodePtr konst(double v) { return make(ExOp::Const, v, 0); }

NodePtr add(const NodePtr& a, const NodePtr& b);
NodePtr sub(const NodePtr& a, const NodePtr& b);
NodePtr mul(const NodePtr& a, const NodePtr& b);
NodePtr neg(const NodePtr& a);

NodePtr add(const NodePtr& a, const NodePtr& b) {
    double ca, cb;
    const bool ia = const_of(a, ca), ib = const_of(b, cb);
    if (ia && ib) return konst(ca + cb);
    if (ia && ca == 0.0) return b;
    if (ib && cb == 0.0) return a;
    return make(ExOp::Add, 0, 0, a, b);
}

NodePtr sub(const NodePtr& a, const NodePtr& b) {
    double ca, cb;
    const bool ia = const_of(a, ca), ib = const_of(b, cb);
    if (ia && ib) return konst(ca - cb);
    if (ib && cb == 0.0) return a;
    if (ia && ca == 0.0) return neg(b);
    if (a == b) return konst(0.0);
    return make(ExOp::Sub, 0, 0, a, b);
}

NodePtr mul(const NodePtr& a, const NodePtr& b) {
    double ca, cb;
    const bool ia = const_of(a, ca), ib = const_of(b, cb);
    if (ia && ib) return konst(ca * cb);
    if (ia) {
        if (ca == 0.0) return konst(0.0);
        if (ca == 1.0) return b;
        if (ca == -1.0) return neg(b);
    }
    if (ib) {
        if (cb == 0.0) return konst(0.0);
        if (cb == 1.0) return a;
        if (cb == -1.0) return neg(a);
    }
    return make(ExOp::Mul, 0, 0, a, b);
}

NodePtr neg(const NodePtr& a) {
    double ca;
    if (const_of(a, ca)) return konst(-ca);
    if (a->op == ExOp::Neg) return a->a;
    return make(ExOp::Neg, 0, 0, a);
}

NodePtr unary(ExOp op, const NodePtr& a) {
    double ca;
    if (const_of(a, ca)) {
        switch (op) {
            case ExOp::Sin: return konst(std::sin(ca));
            case ExOp::Cos: return konst(std::cos(ca));
            case ExOp::Exp: return konst(std::exp(ca));
            default: break;
        }
    }
    return make(op, 0, 0, a);
}

NodePtr powi(const NodePtr& a, int k) {
    if (k == 0) return konst(1.0);
    if (k == 1) return a;
    double ca;
    if (const_of(a, ca)) return konst(std::pow(ca, k));
    return make(ExOp::PowInt, static_cast<double>(k), 0, a);
}

NodePtr powr(const NodePtr& a, double r) {
    if (r == 0.0) return konst(1.0);
    if (r == 1.0) return a;
    double ca;
    if (const_of(a, ca)) return konst(std::pow(ca, r));
    return make(ExOp::PowReal, r, 0, a);
}

double eval_node(const ExNode* n, const Point& x,
                 std::unordered_map<const ExNode*, double>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    double v = 0;
    switch (n->op) {
        case ExOp::Const: v = n->value; break;
        case ExOp::Coord: v = x[static_cast<size_t>(n->axis)]; break;
        case ExOp::Add: v = eval_node(n->a.get(), x, memo) + eval_node(n->b.get(), x, memo); break;
        case ExOp::Sub: v = eval_node(n->a.get(), x, memo) - eval_node(n->b.get(), x, memo); break;
        case ExOp::Mul: v = eval_node(n->a.get(), x, memo) * eval_node(n->b.get(), x, memo); break;
        case ExOp::Neg: v = -eval_node(n->a.get(), x, memo); break;
        case ExOp::Sin: v = std::sin(eval_node(n->a.get(), x, memo)); break;
        case ExOp::Cos: v = std::cos(eval_node(n->a.get(), x, memo)); break;
        case ExOp::Exp: v = std::exp(eval_node(n->a.get(), x, memo)); break;
        case ExOp::PowInt:
            v = std::pow(eval_node(n->a.get(), x, memo), static_cast<int>(n->value));
            break;
        case ExOp::PowReal: v = std::pow(eval_node(n->a.get(), x, memo), n->value); break;
    }
    memo.emplace(n, v);
    return v;
}

NodePtr diff_node(const NodePtr& n, int axis,
                  std::unordered_map<const ExNode*, NodePtr>& memo) {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    NodePtr d;
    switch (n->op) {
        case ExOp::Const: d = konst(0.0); break;
        case ExOp::Coord: d = konst(n->axis == axis ? 1.0 : 0.0); break;
        case ExOp::Add: d = add(diff_node(n->a, axis, memo), diff_node(n->b, axis, memo)); break;
        case ExOp::Sub: d = sub(diff_node(n->a, axis, memo), diff_node(n->b, axis, memo)); break;
        case ExOp::Mul:
            d = add(mul(diff_node(n->a, axis, memo), n->b), mul(n->a, diff_node(n->b, axis, memo)));
            break;
        case ExOp::Neg: d = neg(diff_node(n->a, axis, memo)); break;
        case ExOp::Sin: d = mul(unary(ExOp::Cos, n->a), diff_node(n->a, axis, memo)); break;
        case ExOp::Cos: d = neg(mul(unary(ExOp::Sin, n->a), diff_node(n->a, axis, memo))); break;
        case ExOp::Exp: d = mul(unary(ExOp::Exp, n->a), diff_node(n->a, axis, memo)); break;
        case ExOp::PowInt: {
            const int k = static_cast<int>(n->value);
            d = mul(konst(static_cast<double>(k)),
                    mul(powi(n->a, k - 1), diff_node(n->a, axis, memo)));
            break;
        }
        case ExOp::PowReal:
            d = mul(konst(n->value), mul(powr(n->a, n->value - 1.0), diff_node(n->a, axis, memo)));
            break;
    }
    memo.emplace(n.get(), d);
    return d;
}

NodePtr subst_node(const NodePtr& n, const std::array<NodePtr, 4>& repl,
                   std::unordered_map<const ExNode*, NodePtr>& memo) {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    NodePtr r;
    switch (n->op) {
        case ExOp::Const: r = n; break;
        case ExOp::Coord: r = repl[static_cast<size_t>(n->axis)]; break;
        case ExOp::Add: r = add(subst_node(n->a, repl, memo), subst_node(n->b, repl, memo)); break;
        case ExOp::Sub: r = sub(subst_node(n->a, repl, memo), subst_node(n->b, repl, memo)); break;
        case ExOp::Mul: r = mul(subst_node(n->a, repl, memo), subst_node(n->b, repl, memo)); break;
        case ExOp::Neg: r = neg(subst_node(n->a, repl, memo)); break;
        case ExOp::Sin:
        case ExOp::Cos:
        case ExOp::Exp: r = unary(n->op, subst_node(n->a, repl, memo)); break;
        case ExOp::PowInt:
            r = powi(subst_node(n->a, repl, memo), static_cast<int>(n->value));
            break;
        case ExOp::PowReal: r = powr(subst_node(n->a, repl, memo), n->value); break;
    }
    memo.emplace(n.get(), r);
    return r;
}

void print_node(const ExNode* n, std::ostringstream& os) {
    switch (n->op) {
        case ExOp::Const: os << n->value; break;
        case ExOp::Coord: os << "x" << (n->axis + 1); break;
        case ExOp::Add:
            os << "(";
            print_node(n->a.get(), os);
            os << " + ";
            print_node(n->b.get(), os);
            os << ")";
            break;
        case ExOp::Sub:
            os << "(";
            print_node(n->a.get(), os);
            os << " - ";
            print_node(n->b.get(), os);
            os << ")";
            break;
        case ExOp::Mul:
            os << "(";
            print_node(n->a.get(), os);
            os << " * ";
            print_node(n->b.get(), os);
            os << ")";
            break;
        case ExOp::Neg:
            os << "-(";
            print_node(n->a.get(), os);
            os << ")";
            break;
        case ExOp::Sin:
            os << "sin(";
            print_node(n->a.get(), os);
            os << ")";
            break;
        case ExOp::Cos:
            os << "cos(";
            print_node(n->a.get(), os);
            os << ")";
            break;
        case ExOp::Exp:
            os << "exp(";
            print_node(n->a.get(), os);
            os << ")";
            break;
        case ExOp::PowInt:
            os << "(";
            print_node(n->a.get(), os);
            os << ")^" << static_cast<int>(n->value);
            break;
        case ExOp::PowReal:
            os << "(";
            print_node(n->a.get(), os);
            os << ")^" << n->value;
            break;
    }
}

} // namespace

ScalarField ScalarField::constant(double v) { return ScalarField(konst(v)); }

ScalarField ScalarField::coordinate(int axis) {
    if (axis < 0 || axis > 3) throw std::out_of_range("coordinate axis must be 0..3");
    return ScalarField(make(ExOp::Coord, 0, axis));
}

double ScalarField::eval(const Point& x) const {
    std::unordered_map<const ExNode*, double> memo;
    return eval_node(node_.get(), x, memo);
}

ScalarField ScalarField::derivative(int axis) const {
    if (axis < 0 || axis > 3) throw std::out_of_range("derivative axis must be 0..3");
    std::unordered_map<const ExNode*, NodePtr> memo;
    return ScalarField(diff_node(node_, axis, memo));
}

ScalarField ScalarField::substitute_affine(const std::array<std::array<double, 4>, 4>& m,
                                           const Point& shift) const {
    std::array<NodePtr, 4> repl;
    for (size_t al = 0; al < 4; ++al) {
        NodePtr acc = konst(shift[al]);
        for (size_t be = 0; be < 4; ++be)
            acc = add(acc, mul(konst(m[al][be]), make(ExOp::Coord, 0, static_cast<int>(be))));
        repl[al] = acc;
    }
    std::unordered_map<const ExNode*, NodePtr> memo;
    return ScalarField(subst_node(node_, repl, memo));
}

bool ScalarField::is_zero() const {
    return node_->op == ExOp::Const && node_->value == 0.0;
}

bool ScalarField::is_constant(double* out) const {
    if (node_->op != ExOp::Const) return false;
    if (out) *out = node_->value;
    return true;
}

std::string ScalarField::to_string() const {
    std::ostringstream os;
    print_node(node_.get(), os);
    return os.str();
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    return ScalarField(add(a.node(), b.node()));
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    return ScalarField(sub(a.node(), b.node()));
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    return ScalarField(mul(a.node(), b.node()));
}
ScalarField operator-(const ScalarField& a) { return ScalarField(neg(a.node())); }
ScalarField operator*(double s, const ScalarField& a) {
    return ScalarField(mul(konst(s), a.node()));
}
ScalarField operator+(double s, const ScalarField& a) {
    return ScalarField(add(konst(s), a.node()));
}
ScalarField sin(const ScalarField& a) { return ScalarField(unary(ExOp::Sin, a.node())); }
ScalarField cos(const ScalarField& a) { return ScalarField(unary(ExOp::Cos, a.node())); }
ScalarField exp(const ScalarField& a) { return ScalarField(unary(ExOp::Exp, a.node())); }
ScalarField pow_int(const ScalarField& a, int k) { return ScalarField(powi(a.node(), k)); }
ScalarField pow_real(const ScalarField& a, double r) { return ScalarField(powr(a.node(), r)); }

Compiled::Compiled(const std::vector<ScalarField>& fields) {
    std::unordered_map<const ExNode*, int> slot;
    // Iterative post-order flattening; shared subtrees get a single slot.
    struct Frame {
        const ExNode* n;
        bool expanded;
    };
    std::vector<Frame> stack;
    auto visit = [&](const ExNode* root) {
        if (slot.count(root)) return;
        stack.push_back({root, false});
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (slot.count(f.n)) continue;
            if (!f.expanded) {
                stack.push_back({f.n, true});
                if (f.n->a && !slot.count(f.n->a.get())) stack.push_back({f.n->a.get(), false});
                if (f.n->b && !slot.count(f.n->b.get())) stack.push_back({f.n->b.get(), false});
            } else {
                Step s;
                s.op = f.n->op;
                s.value = f.n->value;
                s.axis = f.n->axis;
                s.a = f.n->a ? slot.at(f.n->a.get()) : -1;
                s.b = f.n->b ? slot.at(f.n->b.get()) : -1;
                slot[f.n] = static_cast<int>(steps_.size());
                steps_.push_back(s);
            }
        }
    };
    roots_.reserve(fields.size());
    for (const auto& f : fields) {
        visit(f.node().get());
        roots_.push_back(slot.at(f.node().get()));
    }
}

void Compiled::eval(const Point& x, std::vector<double>& out) const {
    thread_local std::vector<double> buf;
    buf.resize(steps_.size());
    for (size_t i = 0; i < steps_.size(); ++i) {
        const Step& s = steps_[i];
        double v = 0;
        switch (s.op) {
            case ExOp::Const: v = s.value; break;
            case ExOp::Coord: v = x[static_cast<size_t>(s.axis)]; break;
            case ExOp::Add: v = buf[s.a] + buf[s.b]; break;
            case ExOp::Sub: v = buf[s.a] - buf[s.b]; break;
            case ExOp::Mul: v = buf[s.a] * buf[s.b]; break;
            case ExOp::Neg: v = -buf[s.a]; break;
            case ExOp::Sin: v = std::sin(buf[s.a]); break;
            case ExOp::Cos: v = std::cos(buf[s.a]); break;
            case ExOp::Exp: v = std::exp(buf[s.a]); break;
            case ExOp::PowInt: v = std::pow(buf[s.a], static_cast<int>(s.value)); break;
            case ExOp::PowReal: v = std::pow(buf[s.a], s.value); break;
        }
        buf[i] = v;
    }
    out.resize(roots_.size());
    for (size_t i = 0; i < roots_.size(); ++i) out[i] = buf[static_cast<size_t>(roots_[i])];
}

} // namespace symcalc
