#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"

namespace hornmx {

/// c0 + cv*v where v is the shift order r (differential formulae) or the summation index n.
struct Linear {
    int c0 = 0;
    int cv = 0;
    int at(int v) const { return c0 + cv * v; }
};

struct ParamShift {
    ParamId param;
    Linear shift;  // param + shift*I
};

/// x^px * y^py * (1-t)^pt
struct ArgExpr {
    int px = 0, py = 0, pt = 0;

    Complex value(Complex x, Complex y, double t = 0.0) const {
        Complex v = 1.0;
        v *= std::pow(x, px);
        v *= std::pow(y, py);
        if (pt != 0) v *= std::pow(1.0 - t, pt);
        return v;
    }
};

struct SeriesCall {
    std::string function;
    std::vector<ParamShift> args;  // positional, as printed
    ArgExpr first, second;
};

enum class AtomKind { sign, poch, power, one_minus_t_power, series };

struct Atom {
    AtomKind kind = AtomKind::sign;
    // poch: (P)_index or (I-P)_index, optionally inverted
    ParamId param = ParamId::A;
    bool one_minus = false;
    Linear index;
    bool inverted = false;
    // power: var^{P + offset I}
    char var = 'x';
    Linear offset;
    // series
    SeriesCall call;
};

/// (var^2 d/dvar)^r (euler) or d^r/dvar^r (plain)
struct Operator {
    bool euler = false;
    char var = 'x';
};

struct Expression {
    std::optional<Operator> op;
    std::vector<Atom> atoms;
};

namespace detail {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view s) : s_(s) {}

    Expression parse() {
        Expression e;
        skip();
        if (eat("(x^2 d/dx)^")) e.op = Operator{true, 'x'};
        else if (eat("(y^2 d/dy)^")) e.op = Operator{true, 'y'};
        else if (eat("d^r/dx^")) e.op = Operator{false, 'x'};
        else if (eat("d^r/dy^")) e.op = Operator{false, 'y'};
        if (e.op && !eat("r")) fail("operator order must be r");
        while (skip(), pos_ < s_.size()) e.atoms.push_back(parse_atom());
        return e;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("formula parser: " + what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(std::string_view lit) {
        skip();
        if (s_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view lit) {
        if (!eat(lit)) fail("expected '" + std::string(lit) + "'");
    }

    ParamId parse_param_token() {
        skip();
        if (pos_ >= s_.size() || (s_[pos_] != 'A' && s_[pos_] != 'B' && s_[pos_] != 'C')) fail("expected parameter");
        std::string name(1, s_[pos_++]);
        while (pos_ < s_.size() && s_[pos_] == '\'') name += s_[pos_++];
        auto p = parse_param(name);
        if (!p) fail("unknown parameter " + name);
        return *p;
    }

    int parse_int() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    bool at_var() {
        skip();
        return pos_ < s_.size() && (s_[pos_] == 'r' || s_[pos_] == 'n');
    }

    // One signless term of a linear form: "2r", "r", "3", "1"
    Linear parse_linear_term() {
        Linear l;
        skip();
        int k = 1;
        bool have_int = pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
        if (have_int) k = parse_int();
        if (at_var()) {
            ++pos_;
            l.cv = k;
        } else {
            if (!have_int) fail("expected linear term");
            l.c0 = k;
        }
        return l;
    }

    // "r-1", "r+1", "2r", "1" (signs between terms)
    Linear parse_linear() {
        Linear l = parse_linear_term();
        while (true) {
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
            int sg = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
            Linear t = parse_linear_term();
            l.c0 += sg * t.c0;
            l.cv += sg * t.cv;
        }
        return l;
    }

    // "+rI", "-2rI", "+(r-1)I", "-(r+1)I", "-I", "" after a parameter
    Linear parse_offset() {
        skip();
        if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return {};
        int sg = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        Linear l;
        if (eat("(")) {
            l = parse_linear();
            expect(")");
        } else if (skip(), pos_ < s_.size() && s_[pos_] == 'I') {
            l.c0 = 1;
        } else {
            l = parse_linear_term();
        }
        expect("I");
        return {sg * l.c0, sg * l.cv};
    }

    ArgExpr parse_arg() {
        ArgExpr a;
        int sg = 1;
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == ',' || c == ')' || c == ';') break;
            if (c == '/') {
                ++pos_;
                sg = -1;
                continue;
            }
            int *slot = nullptr;
            if (c == 'x') {
                ++pos_;
                slot = &a.px;
            } else if (c == 'y') {
                ++pos_;
                slot = &a.py;
            } else if (eat("(1-t)")) {
                slot = &a.pt;
            } else {
                fail("bad argument");
            }
            int e = 1;
            if (eat("^")) e = parse_int();
            *slot += sg * e;
            sg = 1;
            first = false;
        }
        if (first) fail("empty argument");
        return a;
    }

    Linear parse_index() {
        expect("_");
        if (eat("{")) {
            Linear l = parse_linear();
            expect("}");
            return l;
        }
        return parse_linear_term();
    }

    Atom parse_atom() {
        Atom a;
        skip();
        if (eat("(-1)^")) {
            if (!at_var()) fail("expected r or n");
            ++pos_;
            a.kind = AtomKind::sign;
            return a;
        }
        if (eat("(1-t)^{-")) {
            a.kind = AtomKind::one_minus_t_power;
            a.param = parse_param_token();
            expect("}");
            return a;
        }
        if (eat("(")) {
            a.kind = AtomKind::poch;
            if (eat("I-") || eat("1-")) a.one_minus = true;
            a.param = parse_param_token();
            expect(")");
            a.index = parse_index();
            if (eat("^-1")) a.inverted = true;
            return a;
        }
        skip();
        if (pos_ + 1 < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y') && s_[pos_ + 1] == '^') {
            a.kind = AtomKind::power;
            a.var = s_[pos_];
            pos_ += 2;
            expect("{");
            a.param = parse_param_token();
            a.offset = parse_offset();
            expect("}");
            return a;
        }
        if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            a.kind = AtomKind::series;
            a.call.function = std::string(s_.substr(start, pos_ - start));
            expect("(");
            // parameters then the two arguments; ',' and ';' are interchangeable separators
            std::vector<ParamShift> params;
            while (true) {
                skip();
                size_t save = pos_;
                if (pos_ < s_.size() && (s_[pos_] == 'A' || s_[pos_] == 'B' || s_[pos_] == 'C')) {
                    ParamShift ps;
                    ps.param = parse_param_token();
                    ps.shift = parse_offset();
                    params.push_back(ps);
                } else {
                    pos_ = save;
                    break;
                }
                if (!eat(",") && !eat(";")) fail("expected separator");
            }
            a.call.args = std::move(params);
            a.call.first = parse_arg();
            expect(",");
            a.call.second = parse_arg();
            expect(")");
            return a;
        }
        fail("unexpected token");
    }
};

}  // namespace detail

inline Expression parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

}  // namespace hornmx
