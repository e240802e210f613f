#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"

namespace hornmx {

enum class Deriv { U, Ux, Uy, Uxx, Uxy, Uyy };

inline std::string_view deriv_name(Deriv d) {
    switch (d) {
        case Deriv::U: return "U";
        case Deriv::Ux: return "U_x";
        case Deriv::Uy: return "U_y";
        case Deriv::Uxx: return "U_xx";
        case Deriv::Uxy: return "U_xy";
        case Deriv::Uyy: return "U_yy";
    }
    return "U";
}

inline std::pair<int, int> deriv_orders(Deriv d) {
    switch (d) {
        case Deriv::U: return {0, 0};
        case Deriv::Ux: return {1, 0};
        case Deriv::Uy: return {0, 1};
        case Deriv::Uxx: return {2, 0};
        case Deriv::Uxy: return {1, 1};
        case Deriv::Uyy: return {0, 2};
    }
    return {0, 0};
}

/// coef * x^px * y^py * left-word * D(U) * right-word. Words are products of parameters
/// (the identity is dropped).
struct Monomial {
    double coef = 1.0;
    int px = 0, py = 0;
    bool has_u = false;
    Deriv deriv = Deriv::U;
    std::vector<ParamId> left, right;
};

/// One printed summand of an equation, expanded into monomials.
struct BilateralTerm {
    std::string text;
    std::vector<Monomial> monomials;
};

namespace detail {

// Recursive-descent parser for the ASCII transcription of the table entries, e.g.
//   x(1+x)U_xx - yU_xy + U_x(I-B) + x(A+I)U_x + AUB'
// Juxtaposition is multiplication; matrix factors left of U multiply on the left.
class BilateralParser {
public:
    explicit BilateralParser(std::string_view s) : s_(s) {}

    std::vector<BilateralTerm> parse_equation() {
        std::vector<BilateralTerm> out;
        skip();
        while (pos_ < s_.size()) {
            size_t start = pos_;
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                ++pos_;
            }
            auto ms = parse_product();
            for (auto& m : ms) m.coef *= sign;
            BilateralTerm t;
            t.text = trim(s_.substr(start, pos_ - start));
            t.monomials = std::move(ms);
            for (const auto& m : t.monomials)
                if (!m.has_u) fail("summand without U");
            out.push_back(std::move(t));
            skip();
        }
        return out;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("bilateral parser: " + what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(s_) + "'");
    }

    static std::string trim(std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return std::string(v);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    static std::vector<Monomial> multiply(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
        std::vector<Monomial> out;
        for (const auto& p : a)
            for (const auto& q : b) {
                if (p.has_u && q.has_u) throw DomainError("bilateral parser: product of two U factors");
                Monomial m;
                m.coef = p.coef * q.coef;
                m.px = p.px + q.px;
                m.py = p.py + q.py;
                if (p.has_u) {
                    m.has_u = true;
                    m.deriv = p.deriv;
                    m.left = p.left;
                    m.right = p.right;
                    m.right.insert(m.right.end(), q.left.begin(), q.left.end());
                } else if (q.has_u) {
                    m.has_u = true;
                    m.deriv = q.deriv;
                    m.left = p.left;
                    m.left.insert(m.left.end(), q.left.begin(), q.left.end());
                    m.right = q.right;
                } else {
                    m.left = p.left;
                    m.left.insert(m.left.end(), q.left.begin(), q.left.end());
                }
                out.push_back(std::move(m));
            }
        return out;
    }

    std::vector<Monomial> parse_sum() {
        std::vector<Monomial> out;
        bool first = true;
        while (true) {
            char c = peek();
            double sign = 1.0;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1.0 : 1.0;
                ++pos_;
            } else if (!first) {
                break;
            }
            auto ms = parse_product();
            for (auto& m : ms) {
                m.coef *= sign;
                out.push_back(std::move(m));
            }
            first = false;
            c = peek();
            if (c != '+' && c != '-') break;
        }
        return out;
    }

    bool at_factor() {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'A' ||
               c == 'B' || c == 'C' || c == 'I' || c == 'U';
    }

    std::vector<Monomial> parse_product() {
        if (!at_factor()) fail("expected a factor");
        std::vector<Monomial> acc = parse_factor();
        while (at_factor()) acc = multiply(acc, parse_factor());
        return acc;
    }

    std::vector<Monomial> parse_factor() {
        std::vector<Monomial> base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
            int e = s_[pos_++] - '0';
            std::vector<Monomial> r = base;
            for (int k = 1; k < e; ++k) r = multiply(r, base);
            return r;
        }
        return base;
    }

    std::vector<Monomial> parse_atom() {
        char c = peek();
        Monomial m;
        if (c == '(') {
            ++pos_;
            auto inner = parse_sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            m.coef = std::stod(std::string(s_.substr(start, pos_ - start)));
            return {m};
        }
        ++pos_;
        switch (c) {
            case 'x': m.px = 1; return {m};
            case 'y': m.py = 1; return {m};
            case 'I': return {m};
            case 'U': {
                m.has_u = true;
                std::string sub;
                if (pos_ < s_.size() && s_[pos_] == '_') {
                    ++pos_;
                    while (pos_ < s_.size() && sub.size() < 2 && (s_[pos_] == 'x' || s_[pos_] == 'y')) sub += s_[pos_++];
                    if (sub.empty()) fail("bad derivative subscript");
                }
                if (sub.empty()) m.deriv = Deriv::U;
                else if (sub == "x") m.deriv = Deriv::Ux;
                else if (sub == "y") m.deriv = Deriv::Uy;
                else if (sub == "xx") m.deriv = Deriv::Uxx;
                else if (sub == "xy" || sub == "yx") m.deriv = Deriv::Uxy;
                else m.deriv = Deriv::Uyy;
                return {m};
            }
            default: break;
        }
        if (c == 'A' || c == 'B' || c == 'C') {
            std::string name(1, c);
            while (pos_ < s_.size() && s_[pos_] == '\'') name += s_[pos_++];
            auto p = parse_param(name);
            if (!p) fail("unknown parameter " + name);
            m.left.push_back(*p);
            return {m};
        }
        --pos_;
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace detail

inline std::vector<BilateralTerm> parse_bilateral(std::string_view text) {
    return detail::BilateralParser(text).parse_equation();
}

}  // namespace hornmx
