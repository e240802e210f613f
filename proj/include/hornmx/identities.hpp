#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"

namespace hornmx {

enum class IdentityKind { pde, diff_formula, summation, confluence, integral };

inline std::string_view kind_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::pde: return "pde";
        case IdentityKind::diff_formula: return "diff_formula";
        case IdentityKind::summation: return "summation";
        case IdentityKind::confluence: return "confluence";
        case IdentityKind::integral: return "integral";
    }
    return "pde";
}

using CommutePairs = std::vector<std::pair<ParamId, ParamId>>;

/// "BB' CC''" -> {(B, B'), (C, C'')}
inline CommutePairs parse_conditions(std::string_view text) {
    CommutePairs out;
    size_t i = 0;
    auto next_param = [&](std::string_view tok, size_t& j) {
        if (j >= tok.size()) throw DomainError("bad condition '" + std::string(tok) + "'");
        std::string name(1, tok[j++]);
        while (j < tok.size() && tok[j] == '\'') name += tok[j++];
        auto p = parse_param(name);
        if (!p) throw DomainError("bad condition '" + std::string(tok) + "'");
        return *p;
    };
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        if (start == i) break;
        std::string_view tok = text.substr(start, i - start);
        size_t j = 0;
        ParamId a = next_param(tok, j);
        ParamId b = next_param(tok, j);
        if (j != tok.size()) throw DomainError("bad condition '" + std::string(tok) + "'");
        out.emplace_back(a, b);
    }
    return out;
}

/// One equation of a bilateral system, transcribed to the grammar of parse_bilateral.
struct PdeEntry {
    std::string id;
    std::string function;
    std::string anchor;
    std::string equation;
    std::string conditions;
    std::string note;
};

/// Differential or summation formula written in the grammar of parse_formula.
struct FormulaEntry {
    IdentityKind kind;
    std::string id;
    std::string function;
    std::string anchor;
    std::string lhs;
    std::string rhs;
    std::string conditions;
    std::string note;
};

/// Confluent function as a limit of a parent series. Parent arguments are child parameter
/// names or "eps" for (1/eps)I; the parent is evaluated at (x eps^kx, y eps^ky).
struct ConfluenceEntry {
    std::string id;
    std::string function;
    std::string parent;
    std::string anchor;
    std::vector<std::string> parent_args;
    int kx = 0, ky = 0;
};

struct IntegralEntry {
    std::string id;
    std::string function;
    std::string anchor;
    bool y_axis = false;  // evaluate at x = 0 only
};

namespace detail {

inline std::vector<PdeEntry> build_pde_table() {
    std::vector<PdeEntry> v;
    auto add = [&](std::string f, std::string anchor1, std::string eq1, std::string anchor2, std::string eq2,
                   std::string cond) {
        v.push_back({f + ".pde.1", f, std::move(anchor1), std::move(eq1), cond, ""});
        v.push_back({f + ".pde.2", f, std::move(anchor2), std::move(eq2), cond, ""});
    };
    add("G1", R"~(x (1 + x) U_{xx} - y U_{xy} - y^2 U_{yy} + U_x(I-B) + x (A+I) U_x + x U_x B' + yU_y B')~",
        "x(1+x)U_xx - yU_xy - y^2U_yy + U_x(I-B) + x(A+I)U_x + xU_xB' + yU_yB' - y(A+I)U_y + AUB'",
        R"~(y (1 + y) U_{yy} - x U_{xy} - x^2 U_{xx} + U_y(I-B') + y (A+I) U_y + y U_y B + xU_x B)~",
        "y(1+y)U_yy - xU_xy - x^2U_xx + U_y(I-B') + y(A+I)U_y + yU_yB + xU_xB - x(A+I)U_x + AUB", "BB'");
    add("G2", R"~(x(1+x) U_{xx} - y(1+x)U_{xy}  + U_x(I-B) + x(A+I)U_x)~",
        "x(1+x)U_xx - y(1+x)U_xy + U_x(I-B) + x(A+I)U_x + xU_xB' - yAU_y + AUB'",
        R"~(y(1+y) U_{yy} - x(1+y)U_{xy}  + U_y(I-B') + y(A'+I)U_y)~",
        "y(1+y)U_yy - x(1+y)U_xy + U_y(I-B') + y(A'+I)U_y + yU_yB - xA'U_x + A'UB", "AA' BB'");
    add("G3", R"~(x(1+4x) U_{xx} - (4x + 2) y U_{xy} + y^2 U_{yy} + (I-A)U_x)~",
        "x(1+4x)U_xx - (4x+2)yU_xy + y^2U_yy + (I-A)U_x + x(4A'+6I)U_x - 2yA'U_y + A'(A'+I)U",
        R"~(y(1+4y) U_{yy} - (4y + 2) x U_{xy} + x^2 U_{xx} + (I-A')U_y)~",
        "y(1+4y)U_yy - (4y+2)xU_xy + x^2U_xx + (I-A')U_y + y(4A+6I)U_y - 2xAU_x + A(A+I)U", "");
    add("H1", R"~(x(1-x)U_{xx} + y^2 U_{yy} + U_x C' - x (A+I)U_x)~",
        "x(1-x)U_xx + y^2U_yy + U_xC' - x(A+I)U_x - BxU_x - yAU_y + (B+I)yU_y - ABU",
        R"~(-y(1+y)U_{yy} + x(1-y) U_{xy} + (A-I)U_y)~",
        "-y(1+y)U_yy + x(1-y)U_xy + (A-I)U_y - yU_y(C+I) - ByU_y - xU_xC - BUC", "AB CC'");
    add("H2", R"~(x(x-1)U_{xx} - xyU_{xy} + x (A+I)U_x + B xU_x)~",
        "x(x-1)U_xx - xyU_xy + x(A+I)U_x + BxU_x - U_xC'' - ByU_y + ABU",
        R"~(y(1+y)U_{yy} - xU_{xy} + y (I-A)U_y)~", "y(1+y)U_yy - xU_xy + y(I-A)U_y + yU_y(C+C'+I) + UCC'",
        "AB CC' CC'' C'C''");
    add("H3", R"~(x(1-4x)U_{xx} - y(1-4x)U_{xy} - y^2 U_{yy} + U_x C)~",
        "x(1-4x)U_xx - y(1-4x)U_xy - y^2U_yy + U_xC - x(4A+6I)U_x - 2(A+I)yU_y - A(A+I)U",
        R"~(y(1-y)U_{yy} + x(1-2y)U_{xy}  + U_y C -(A+I)yU_y)~",
        "y(1-y)U_yy + x(1-2y)U_xy + U_yC - (A+I)yU_y - yU_yB - 2xU_xB - AUB", "BC");
    add("H4", R"~(x(1-4x) U_{xx} - 4xy U_{xy} - y^2 U_{yy} + U_x C - 4x(A + I)U_x)~",
        "x(1-4x)U_xx - 4xyU_xy - y^2U_yy + U_xC - 4x(A+I)U_x - y(3A+2I)U_y - A(A+I)U",
        R"~(y(1-y)U_{yy} - 2xy U_{xy} +  U_{y} C'  - y A U_y)~",
        "y(1-y)U_yy - 2xyU_xy + U_yC' - yAU_y - ByU_y - 2BxU_x - ABU", "AB CC'");
    add("H5", R"~(x(1+4x)U_{xx} -  y(1-4x)U_{xy} + y^2 U_{yy} +U_x (I-C))~",
        "x(1+4x)U_xx - y(1-4x)U_xy + y^2U_yy + U_x(I-C) + 4x(A+I)U_x + y(3A+2I)U_y - A(A+I)U",
        R"~(y(1-y)U_{yy} -  xyU_{xy} +  2 x^2U_{xx} + U_y C - (A + I)yU_y)~",
        "y(1-y)U_yy - xyU_xy + 2x^2U_xx + U_yC - (A+I)yU_y - yU_yB + (A+2I)xU_x - 2xU_xB - AUB", "BC");
    add("H6", R"~(x(1+4x)U_{xx} -  y(1+4x)U_{xy} + y ^2 U_{yy} + U_{x} (I-B))~",
        "x(1+4x)U_xx - y(1+4x)U_xy + y^2U_yy + U_x(I-B) + (4A+6I)xU_x - 2AyU_y + A(A+I)U",
        R"~(y(1+y)U_{yy} -  x(2+y)U_{xy}  + yU_{y} (B+C+I))~",
        "y(1+y)U_yy - x(2+y)U_xy + yU_y(B+C+I) + (I-A)U_y - xU_xC + BUC", "BC");
    add("H7", R"~(x(1-4x)U_{xx} + 4xy U_{xy} - y^2U_{yy} + U_x C)~",
        "x(1-4x)U_xx + 4xyU_xy - y^2U_yy + U_xC - x(4A+6I)U_x + 2AyU_y - A(A+I)U",
        R"~(y(1+y)U_{yy} -  3xyU_{xy}  + yU_y (C+I) + ByU_y)~",
        "y(1+y)U_yy - 3xyU_xy + yU_y(C+I) + ByU_y + (I-A)U_y - xU_xC + BUC", "AB CC'");
    add("Gamma1", R"~(x(1+x)U_{xx}  - y(1+x) U_{xy} + (I-B)U_x + (A+I) x U_x)~",
        "x(1+x)U_xx - y(1+x)U_xy + (I-B)U_x + (A+I)xU_x + xU_xB' - AyU_y + AUB'",
        R"~(y U_{yy} - A U_{xy}  + (1+y) U_y - U_y B')~", "yU_yy - AU_xy + (1+y)U_y - U_yB' - xU_x + BU", "AB");
    v.push_back({"Gamma1.pde.2.alt", "Gamma1", R"~(y U_{yy} - A U_{xy}  + (1+y) U_y - U_y B')~",
                 "yU_yy - xU_xy + (1+y)U_y - U_yB' - xU_x + BU", "AB", "A U_xy replaced by x U_xy"});
    add("Gamma2", R"~(x U_{xx}  - y U_{xy} + (I-B)U_x +  x U_x  + yU_y + UB'  = 0)~",
        "xU_xx - yU_xy + (I-B)U_x + xU_x + yU_y + UB'",
        R"~(y U_{yy} - x U_{xy}  + (1+y) U_y - U_y B' - xU_x  + B U  = 0)~",
        "yU_yy - xU_xy + (1+y)U_y - U_yB' - xU_x + BU", "");
    add("cH1", R"~(x(1-x)U_{xx}  + y^2  U_{yy} + U_x C - (A+I) x U_x)~",
        "x(1-x)U_xx + y^2U_yy + U_xC - (A+I)xU_x + (yU_y-xU_x)B + (I-A)yU_y - AUB",
        R"~(y U_{yy} - x U_{xy}  + (I-A) U_y + y U_y)~", "yU_yy - xU_xy + (I-A)U_y + yU_y + xU_x + UB", "BC");
    add("cH2", R"~(x(1-x)U_{xx}  + xy  U_{xy} + U_x C - (A+I) x U_x  \\
	+ B (yU_y- xU_x)   - A BU  = 0)~",
        "x(1-x)U_xx + xyU_xy + U_xC - (A+I)xU_x + B(yU_y-xU_x) - ABU",
        R"~(y U_{yy} - x U_{xy}  + (I-A) U_y + y U_y  +  U B' = 0)~", "yU_yy - xU_xy + (I-A)U_y + yU_y + UB'",
        "AB B'C");
    add("cH3", R"~(+ (yU_y- xU_x) B  - A U B = 0)~",
        "x(1-x)U_xx + xyU_xy + U_xC - (A+I)xU_x + (yU_y-xU_x)B - AUB",
        R"~(y U_{yy} - x U_{xy}  + (I-A) U_y + y U_y   +  U  = 0)~", "yU_yy - xU_xy + (I-A)U_y + yU_y + U", "BC");
    add("cH4", R"~(x U_{xx}  + U_x C -  x U_x 	+ yU_y - A U  = 0)~", "xU_xx + U_xC - xU_x + yU_y - AU",
        R"~(y U_{yy} - x U_{xy}  + (I-A) U_y + y U_y   +  U B' = 0)~", "yU_yy - xU_xy + (I-A)U_y + yU_y + UB'",
        "B'C");
    add("cH5", R"~(xU_{xx}  +  U_x C + yU_y- xU_x  - A U = 0)~", "xU_xx + U_xC + yU_y - xU_x - AU",
        R"~(y U_{yy} - x U_{xy}  + (I-A) U_y + y U_y  +  U = 0)~", "yU_yy - xU_xy + (I-A)U_y + yU_y + U", "");
    add("cH6", R"~(x(1-4x)U_{xx} + y(1-4x)U_{xy} - y^2  U_{yy} + U_x C)~",
        "x(1-4x)U_xx + y(1-4x)U_xy - y^2U_yy + U_xC - (4A+6I)xU_x - (2A+2I)yU_y - A(A+I)U",
        R"~(y U_{yy} + x U_{xy}  +  U_y C - y U_y   -2 xU_x  -A  U = 0)~",
        "yU_yy + xU_xy + U_yC - yU_y - 2xU_x - AU", "");
    add("cH7", R"~(x(1-4x)U_{xx}  - 4xy U_{xy} - y^2  U_{yy} + U_x C)~",
        "x(1-4x)U_xx - 4xyU_xy - y^2U_yy + U_xC - (4A+4I)xU_x - (3A+2I)yU_y - A(A+I)U",
        R"~(y U_{yy}  +  U_y C' - y U_y   -2 xU_x  -A  U = 0)~", "yU_yy + U_yC' - yU_y - 2xU_x - AU", "CC'");
    add("cH8", R"~(x(1+4x)U_{xx} + y(1+4x)U_{xy} + y^2  U_{yy} + U_x (I-B))~",
        "x(1+4x)U_xx + y(1+4x)U_xy + y^2U_yy + U_x(I-B) + (4A+6I)xU_x + 2AyU_y + A(A+I)U",
        R"~(y U_{yy} -2 x U_{xy}  + (I-A) U_y + y U_y   - xU_x  +  UB = 0)~",
        "yU_yy - 2xU_xy + (I-A)U_y + yU_y - xU_x + UB", "");
    add("cH9", R"~(x(1-4x)U_{xx}  + 4xy U_{xy} - y^2  U_{yy} + U_x C)~",
        "x(1-4x)U_xx + 4xyU_xy - y^2U_yy + U_xC - (4A+6I)xU_x + 2AyU_y - A(A+I)U",
        R"~(y U_{yy} - 2xU_{xy} +  (I-A)U_y  + y U_y   + UB = 0)~", "yU_yy - 2xU_xy + (I-A)U_y + yU_y + UB",
        "BC");
    add("cH10", R"~(x(1-4x)U_{xx}  + 4xy U_{xy} - y^2  U_{yy} + U_x C)~",
        "x(1-4x)U_xx + 4xyU_xy - y^2U_yy + U_xC - (4A+6I)xU_x + 2AyU_y - A(A+I)U",
        R"~(y U_{yy} - 2xU_{xy} +  (I-A)U_y    + U = 0)~", "yU_yy - 2xU_xy + (I-A)U_y + U", "");
    add("cH11", R"~(x U_{xx}   + U_x C' -  x U_x +  yU_y  - A U = 0)~", "xU_xx + U_xC' - xU_x + yU_y - AU",
        R"~(y (1+y)U_{yy} - xU_{xy} +  (I-A)U_y  + (I+B)y U_y)~",
        "y(1+y)U_yy - xU_xy + (I-A)U_y + (I+B)yU_y + yU_yC + BUC", "AB CC'");
    return v;
}

// Differential formulae. Euler-operator rows are printed with the prefix z^{P+(r-1)I};
// the ".corrected" variants use z^{P}.
inline std::vector<FormulaEntry> build_diff_table() {
    std::vector<FormulaEntry> v;
    auto d = [&](std::string id, std::string anchor, std::string lhs, std::string rhs, std::string cond = "",
                 std::string note = "") {
        std::string f = id.substr(0, id.find('.'));
        v.push_back({IdentityKind::diff_formula, std::move(id), f, std::move(anchor), std::move(lhs), std::move(rhs),
                     std::move(cond), std::move(note)});
    };
    // G1
    d("G1.d1", R"~((-1)^r \, (A)_r \, G_1(A+rI, B-rI, B'+rI; x, y) \, (I-B)_r^{-1} \, (B')_r)~",
      "d^r/dx^r G1(A, B, B'; x, y)", "(-1)^r (A)_r G1(A+rI, B-rI, B'+rI; x, y) (I-B)_r^-1 (B')_r", "BB'");
    d("G1.d2", R"~((-1)^r \, (A)_r \, G_1(A+rI, B+rI, B' - rI; x, y) \, (B)_r \, (I-B')_r^{-1})~",
      "d^r/dy^r G1(A, B, B'; x, y)", "(-1)^r (A)_r G1(A+rI, B+rI, B'-rI; x, y) (B)_r (I-B')_r^-1", "BB'");
    d("G1.d3", R"~([x^{A+(r-1)I} G_1(A, B, B'; x, xy)]  = x^{A+rI} \, (A)_r \, G_1(A+rI, B, B'; x, xy))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} G1(A, B, B'; x, xy)", "x^{A+rI} (A)_r G1(A+rI, B, B'; x, xy)");
    d("G1.d4", R"~([y^{A+(r-1)I} G_1(A, B, B'; xy, y)]  = y^{A+rI} \, (A)_r \, G_1(A+rI, B, B'; xy, y))~",
      "(y^2 d/dy)^r y^{A+(r-1)I} G1(A, B, B'; xy, y)", "y^{A+rI} (A)_r G1(A+rI, B, B'; xy, y)");
    d("G1.d5", R"~(G_1(A, B, B'+rI; x, \frac{y}{x}) \ x^{B'+rI} \, (B')_r)~",
      "(x^2 d/dx)^r G1(A, B, B'; x, y/x) x^{B'+(r-1)I}", "G1(A, B, B'+rI; x, y/x) x^{B'+rI} (B')_r");
    d("G1.d6", R"~(G_1(A, B+rI, B'; \frac{x}{y}, y) \, y^{B+rI} \, (B)_r)~",
      "(y^2 d/dy)^r G1(A, B, B'; x/y, y) y^{B+(r-1)I}", "G1(A, B+rI, B'; x/y, y) y^{B+rI} (B)_r");
    // G2
    d("G2.d1", R"~((-1)^r \, (A)_r \, G_2(A+rI, A', B-rI, B'+rI; x, y) \, (I-B)_r^{-1} \, (B')_r)~",
      "d^r/dx^r G2(A, A', B, B'; x, y)", "(-1)^r (A)_r G2(A+rI, A', B-rI, B'+rI; x, y) (I-B)_r^-1 (B')_r", "BB'");
    d("G2.d2", R"~((-1)^r \, (A')_r \, G_2(A, A'+rI, B+rI, B' - rI; x, y) \, (B)_r \, (I-B')_r^{-1})~",
      "d^r/dy^r G2(A, A', B, B'; x, y)", "(-1)^r (A')_r G2(A, A'+rI, B+rI, B'-rI; x, y) (B)_r (I-B')_r^-1",
      "AA' BB'");
    d("G2.d3", R"~(= x^{A+rI} \, (A)_r \, G_2(A+rI, A', B, B'; x, y))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} G2(A, A', B, B'; x, y)", "x^{A+rI} (A)_r G2(A+rI, A', B, B'; x, y)");
    d("G2.d4", R"~(= y^{A'+rI} \, (A')_r \, G_1(A, A'+rI, B, B'; x, y), \quad AA' = A'A)~",
      "(y^2 d/dy)^r y^{A'+(r-1)I} G2(A, A', B, B'; x, y)", "y^{A'+rI} (A')_r G1(A, A'+rI, B, B'; x, y)", "AA'");
    d("G2.d4.corrected", R"~(= y^{A'+rI} \, (A')_r \, G_1(A, A'+rI, B, B'; x, y), \quad AA' = A'A)~",
      "(y^2 d/dy)^r y^{A'+(r-1)I} G2(A, A', B, B'; x, y)", "y^{A'+rI} (A')_r G2(A, A'+rI, B, B'; x, y)", "AA'",
      "G_1 on the right read as G_2");
    d("G2.d5", R"~(=  G_2(A, A', B, B'+rI; x, \frac{y}{x}) \ x^{B'+rI} \, (B')_r)~",
      "(x^2 d/dx)^r G2(A, A', B, B'; x, y/x) x^{B'+(r-1)I}", "G2(A, A', B, B'+rI; x, y/x) x^{B'+rI} (B')_r");
    d("G2.d6", R"~(=  G_2(A, A', B+rI, B'; \frac{x}{y}, y) \, y^{B+rI} \, (B)_r, \quad BB' = B'B)~",
      "(y^2 d/dy)^r G2(A, A', B, B'; x/y, y) y^{B+(r-1)I}", "G2(A, A', B+rI, B'; x/y, y) y^{B+rI} (B)_r", "BB'");
    // G3
    d("G3.d1", R"~((-1)^r \, (I-A)^{-1}_r \, G_3(A-rI, A'+2rI; x, y) \,  (A')_{2r})~",
      "d^r/dx^r G3(A, A'; x, y)", "(-1)^r (I-A)_r^-1 G3(A-rI, A'+2rI; x, y) (A')_{2r}");
    d("G3.d2", R"~((-1)^r \, (A)_{2r} \, G_3(A+2rI, A'-rI; x, y) \, (I-A')_r^{-1})~", "d^r/dy^r G3(A, A'; x, y)",
      "(-1)^r (A)_{2r} G3(A+2rI, A'-rI; x, y) (I-A')_r^-1");
    d("G3.d3", R"~(G_3 (A, A'+rI; x^2, \frac{y}{x}) x^{A'+rI} \, (A')_r)~",
      "(x^2 d/dx)^r G3(A, A'; x^2, y/x) x^{A'+(r-1)I}", "G3(A, A'+rI; x^2, y/x) x^{A'+rI} (A')_r");
    d("G3.d4", R"~(y^{A+rI} \, (A)_r \, G_3(A+rI, A'; \frac{x}{y}, y^2))~",
      "(y^2 d/dy)^r y^{A+(r-1)I} G3(A, A'; x/y, y^2)", "y^{A+rI} (A)_r G3(A+rI, A'; x/y, y^2)");
    // H1
    d("H1.d1", R"~((A)_r \, (B)_r \, H_1(A+rI, B+rI, C, C'+rI; x, y) \,   (C')^{-1}_r,\quad AB = BA)~",
      "d^r/dx^r H1(A, B, C, C'; x, y)", "(A)_r (B)_r H1(A+rI, B+rI, C, C'+rI; x, y) (C')_r^-1", "AB");
    d("H1.d2", R"~(\times  H_1(A-rI, B+rI, C+rI, C'; x, y) \, (C)_r, \quad AB = BA,  CC' = C'C)~",
      "d^r/dy^r H1(A, B, C, C'; x, y)", "(-1)^r (I-A)_r^-1 (B)_r H1(A-rI, B+rI, C+rI, C'; x, y) (C)_r", "AB CC'");
    d("H1.d3", R"~(= x^{A+rI} \, (A)_r \, H_1(A+rI, B, C, C'; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} H1(A, B, C, C'; x, y/x)", "x^{A+rI} (A)_r H1(A+rI, B, C, C'; x, y/x)");
    d("H1.d4", R"~(= x^{B+rI} \, (B)_r \, H_1(A, B+rI, C, C'; x, {y}{x}), \quad AB = BA)~",
      "(x^2 d/dx)^r x^{B+(r-1)I} H1(A, B, C, C'; x, xy)", "x^{B+rI} (B)_r H1(A, B+rI, C, C'; x, xy)", "AB");
    d("H1.d5", R"~(=  H_1(A, B, C + rI, C'; x, {y}) \,  x^{C+rI} \, (C)_r, \quad CC'= C'C)~",
      "(y^2 d/dy)^r H1(A, B, C, C'; x, y) y^{C+(r-1)I}", "H1(A, B, C+rI, C'; x, y) x^{C+rI} (C)_r", "CC'");
    d("H1.d5.corrected", R"~(=  H_1(A, B, C + rI, C'; x, {y}) \,  x^{C+rI} \, (C)_r, \quad CC'= C'C)~",
      "(y^2 d/dy)^r H1(A, B, C, C'; x, y) y^{C+(r-1)I}", "H1(A, B, C+rI, C'; x, y) y^{C+rI} (C)_r", "CC'",
      "x^{C+rI} read as y^{C+rI}");
    d("H1.d6", R"~(=  (-1)^r \, H_1(A, B, C, C'-rI; x, {y}) \, (I-C')_r \, x^{C'-(r+1)I})~",
      "d^r/dx^r H1(A, B, C, C'; x, y) x^{C'-I}", "(-1)^r H1(A, B, C, C'-rI; x, y) (I-C')_r x^{C'-(r+1)I}");
    // H2
    d("H2.d1", R"~((A)_r \, (B)_r \, H_2(A+rI, B+rI, C, C', C''+rI; x, y) \,   (C'')^{-1}_r,\quad AB = BA)~",
      "d^r/dx^r H2(A, B, C, C', C''; x, y)", "(A)_r (B)_r H2(A+rI, B+rI, C, C', C''+rI; x, y) (C'')_r^-1", "AB");
    d("H2.d2", R"~((-1)^r \, (I-A)^{-1}_r   H_2(A-rI, B, C+rI, C'+rI, C''; x, y) \, (C)_r \, (C')_r)~",
      "d^r/dy^r H2(A, B, C, C', C''; x, y)", "(-1)^r (I-A)_r^-1 H2(A-rI, B, C+rI, C'+rI, C''; x, y) (C)_r (C')_r",
      "CC' CC'' C'C''");
    d("H2.d3", R"~(= x^{A+rI} \, (A)_r \, H_2(A+rI, B, C, C', C''; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} H2(A, B, C, C', C''; x, y/x)", "x^{A+rI} (A)_r H2(A+rI, B, C, C', C''; x, y/x)");
    d("H2.d4", R"~(= x^{B+rI} \, (B)_r \, H_2(A, B+rI, C, C', C''; x, {y}), \quad AB = BA)~",
      "(x^2 d/dx)^r x^{B+(r-1)I} H2(A, B, C, C', C''; x, y)", "x^{B+rI} (B)_r H2(A, B+rI, C, C', C''; x, y)",
      "AB");
    d("H2.d5", R"~(=  H_2(A, B, C + rI, C', C''; x, {y}) \,  y^{C+rI} \, (C)_r, \quad CC'= C'C, CC'' = C''C)~",
      "(y^2 d/dy)^r H2(A, B, C, C', C''; x, y) y^{C+(r-1)I}", "H2(A, B, C+rI, C', C''; x, y) y^{C+rI} (C)_r",
      "CC' CC''");
    d("H2.d6", R"~(=  (-1)^r \, H_2(A, B, C, C', C''-rI; x, {y}) \, (I-C'')_r \, x^{C''-(r+1)I})~",
      "d^r/dx^r H2(A, B, C, C', C''; x, y) x^{C''-I}",
      "(-1)^r H2(A, B, C, C', C''-rI; x, y) (I-C'')_r x^{C''-(r+1)I}");
    // H3
    d("H3.d1", R"~(=  (A)_{2r}  \, H_3(A+2rI, B; C+rI; x, y) \,   (C)^{-1}_r)~", "d^r/dx^r H3(A, B; C; x, y)",
      "(A)_{2r} H3(A+2rI, B; C+rI; x, y) (C)_r^-1");
    d("H3.d2", R"~(= (A)_r  \, H_3(A+rI, B+rI; C+rI; x, y) \, (B)_r \, (C)^{-1}_r, \quad BC = CB)~",
      "d^r/dy^r H3(A, B; C; x, y)", "(A)_r H3(A+rI, B+rI; C+rI; x, y) (B)_r (C)_r^-1", "BC");
    d("H3.d3", R"~(= x^{A+rI} \, (A)_r \, H_3(A+rI, B; C; x^2, {y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} H3(A, B; C; x^2, xy)", "x^{A+rI} (A)_r H3(A+rI, B; C; x^2, xy)");
    d("H3.d4", R"~(=  H_3(A, B+rI; C; x, {y}) \,  y^{B+rI} \, (B)_r, \quad BC = CB)~",
      "(y^2 d/dy)^r H3(A, B; C; x, y) y^{B+(r-1)I}", "H3(A, B+rI; C; x, y) y^{B+rI} (B)_r", "BC");
    d("H3.d5", R"~(=  (-1)^r \, H_3(A, B; C-rI; x, {y}) \, x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r H3(A, B; C; x, xy) x^{C-I}", "(-1)^r H3(A, B; C-rI; x, y) x^{C-(r+1)I} (I-C)_r");
    d("H3.d5.corrected", R"~(=  (-1)^r \, H_3(A, B; C-rI; x, {y}) \, x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r H3(A, B; C; x, xy) x^{C-I}", "(-1)^r H3(A, B; C-rI; x, xy) x^{C-(r+1)I} (I-C)_r", "",
      "right-hand arguments read as (x, xy)");
    // H4
    d("H4.d1", R"~(=  (A)_{2r}  \, H_4(A+2rI, B; C+rI, C'; x, y) \,   (C)^{-1}_r)~",
      "d^r/dx^r H4(A, B; C, C'; x, y)", "(A)_{2r} H4(A+2rI, B; C+rI, C'; x, y) (C)_r^-1");
    d("H4.d2", R"~(= (A)_r \, (B)_r \,  H_4(A+rI, B+rI; C, C'+rI; x, y) \,  (C')_r, \quad AB = BA)~",
      "d^r/dy^r H4(A, B; C, C'; x, y)", "(A)_r (B)_r H4(A+rI, B+rI; C, C'+rI; x, y) (C')_r", "AB");
    d("H4.d2.corrected", R"~(= (A)_r \, (B)_r \,  H_4(A+rI, B+rI; C, C'+rI; x, y) \,  (C')_r, \quad AB = BA)~",
      "d^r/dy^r H4(A, B; C, C'; x, y)", "(A)_r (B)_r H4(A+rI, B+rI; C, C'+rI; x, y) (C')_r^-1", "AB",
      "(C')_r read as (C')_r^{-1}");
    d("H4.d3", R"~(= x^{A+rI} \, (A)_r \, H_4(A+rI, B; C, C'; x^2, {y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} H4(A, B; C, C'; x^2, xy)", "x^{A+rI} (A)_r H4(A+rI, B; C, C'; x^2, xy)");
    d("H4.d4", R"~(= y^{B+rI} (B)_r \, H_4(A, B+rI; C, C'; x, {y}), \quad AB = BA)~",
      "(y^2 d/dy)^r y^{B+(r-1)I} H4(A, B; C, C'; x, y)", "y^{B+rI} (B)_r H4(A, B+rI; C, C'; x, y)", "AB");
    d("H4.d5", R"~(=  (-1)^r \, H_4(A, B; C-rI, C'; x, {y}) \, x^{C-(r+1)I} \,  (I-C)_r, \quad CC' = C'C)~",
      "d^r/dx^r H4(A, B; C, C'; x, y) x^{C-I}", "(-1)^r H4(A, B; C-rI, C'; x, y) x^{C-(r+1)I} (I-C)_r", "CC'");
    d("H4.d6", R"~(=  (-1)^r \, H_4(A, B; C, C'-rI; x, {y}) \, y^{C'-(r+1)I} \,  (I-C')_r)~",
      "d^r/dy^r H4(A, B; C, C'; x, y) y^{C'-I}", "(-1)^r H4(A, B; C, C'-rI; x, y) y^{C'-(r+1)I} (I-C')_r");
    // H5
    d("H5.d1", R"~(=  (-1)^r (A)_{2r} \, (I-B)_r^{-1}\, H_5(A+2rI, B-rI; C; x, y), \quad AB = BA)~",
      "d^r/dx^r H5(A, B; C; x, y)", "(-1)^r (A)_{2r} (I-B)_r^-1 H5(A+2rI, B-rI; C; x, y)", "AB");
    d("H5.d2", R"~(= (A)_r \, (B)_r \,  H_5(A+rI, B+rI; C+rI; x, y) \,  (C)^{-1}_r, \quad AB = BA)~",
      "d^r/dy^r H5(A, B; C; x, y)", "(A)_r (B)_r H5(A+rI, B+rI; C+rI; x, y) (C)_r^-1", "AB");
    d("H5.d3", R"~(= x^{A+rI} \, (A)_r \, H_5(A+rI, B; C; x^2, {y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} H5(A, B; C; x^2, xy)", "x^{A+rI} (A)_r H5(A+rI, B; C; x^2, xy)");
    d("H5.d4", R"~(= y^{B+rI} (B)_r \, H_5(A, B+rI; C; \frac{x}{y}, {y}), \quad AB = BA)~",
      "(y^2 d/dy)^r y^{B+(r-1)I} H5(A, B; C; x/y, y)", "y^{B+rI} (B)_r H5(A, B+rI; C; x/y, y)", "AB");
    d("H5.d5", R"~(=  (-1)^r \, H_5(A, B; C-rI; x, {y}) \, y^{C-(r+1)I} \,  (I-C)_r)~",
      "d^r/dy^r H5(A, B; C; x, y) y^{C-I}", "(-1)^r H5(A, B; C-rI; x, y) y^{C-(r+1)I} (I-C)_r");
    // H6
    d("H6.d1", R"~(=  (-1)^r (A)_{2r} \, (I-B)_r^{-1}\, H_6(A+2rI, B-rI; C; x, y), \quad AB = BA)~",
      "d^r/dx^r H6(A, B; C; x, y)", "(-1)^r (A)_{2r} (I-B)_r^-1 H6(A+2rI, B-rI; C; x, y)", "AB");
    d("H6.d2", R"~(= (-1)^r (I-A)^{-1}_r \, (B)_r \,  H_6(A-rI, B+rI; C+rI; x, y) \,  (C)_r, \quad AB = BA)~",
      "d^r/dy^r H6(A, B; C; x, y)", "(-1)^r (I-A)_r^-1 (B)_r H6(A-rI, B+rI; C+rI; x, y) (C)_r", "AB");
    d("H6.d3", R"~(= x^{A+rI} \, (A)_r \, H_6(A+rI, B; C; x^2, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} H6(A, B; C; x^2, y/x)", "x^{A+rI} (A)_r H6(A+rI, B; C; x^2, y/x)");
    d("H6.d4", R"~(= y^{B+rI} (B)_r \, H_6(A, B+rI; C; \frac{x}{y}, {y}), \quad AB = BA)~",
      "(y^2 d/dy)^r y^{B+(r-1)I} H6(A, B; C; x/y, y)", "y^{B+rI} (B)_r H6(A, B+rI; C; x/y, y)", "AB");
    d("H6.d5", R"~(=   \, H_6(A, B; C+rI; x, {y}) \, y^{C+rI} \,  (C)_r)~",
      "(y^2 d/dy)^r H6(A, B; C; x, y) y^{C+(r-1)I}", "H6(A, B; C+rI; x, y) y^{C+rI} (C)_r");
    // H7
    d("H7.d1", R"~(=  (A)_{2r}  \, H_7(A+2rI, B, C; C'+rI; x, y) \,   (C')^{-1}_r)~",
      "d^r/dx^r H7(A, B, C; C'; x, y)", "(A)_{2r} H7(A+2rI, B, C; C'+rI; x, y) (C')_r^-1");
    d("H7.d2", R"~(\times   H_7(A-rI, B+rI, C+rI; C'; x, y) \, (C)_r, \quad AB + BA,  CC' = C'C)~",
      "d^r/dy^r H7(A, B, C; C'; x, y)", "(-1)^r (I-A)_r^-1 (B)_r H7(A-rI, B+rI, C+rI; C'; x, y) (C)_r", "AB CC'",
      "condition AB + BA read as AB = BA");
    d("H7.d3", R"~(= x^{A+rI} \, (A)_{r} \, H_7(A+rI, B, C; C'; x^2, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} H7(A, B, C; C'; x^2, y/x)", "x^{A+rI} (A)_r H7(A+rI, B, C; C'; x^2, y/x)");
    d("H7.d4", R"~(= x^{B+rI} \, (B)_r \, H_7(A, B+rI, C; C'; x, {y}), \quad AB = BA)~",
      "(y^2 d/dy)^r x^{B+(r-1)I} H7(A, B, C; C'; x, y)", "x^{B+rI} (B)_r H7(A, B+rI, C; C'; x, y)", "AB");
    d("H7.d4.corrected", R"~(= x^{B+rI} \, (B)_r \, H_7(A, B+rI, C; C'; x, {y}), \quad AB = BA)~",
      "(y^2 d/dy)^r y^{B+(r-1)I} H7(A, B, C; C'; x, y)", "y^{B+rI} (B)_r H7(A, B+rI, C; C'; x, y)", "AB",
      "x^{B+...} read as y^{B+...} on both sides");
    d("H7.d5", R"~(=  H_7(A, B, C + rI; C'; x, {y}) \,  y^{C+rI} \, (C)_r, \quad CC'= C'C)~",
      "(y^2 d/dy)^r H7(A, B, C; C'; x, y) y^{C+(r-1)I}", "H7(A, B, C+rI; C'; x, y) y^{C+rI} (C)_r", "CC'");
    d("H7.d6", R"~(=  (-1)^r \, H_7(A, B, C; C'-rI; x, {y}) \, x^{C'-(r+1)I} \, (I-C')_r)~",
      "d^r/dx^r H7(A, B, C; C'; x, y) x^{C'-I}", "(-1)^r H7(A, B, C; C'-rI; x, y) x^{C'-(r+1)I} (I-C')_r");
    // Gamma1
    d("Gamma1.d1", R"~((-1)^r \, (A)_r \, \Gamma_1(A+rI, B-rI, B'+rI; x, y) \, (I-B)_r^{-1} \, (B')_r, \quad BB' = B'B)~",
      "d^r/dx^r Gamma1(A, B, B'; x, y)", "(-1)^r (A)_r Gamma1(A+rI, B-rI, B'+rI; x, y) (I-B)_r^-1 (B')_r", "BB'");
    d("Gamma1.d2", R"~((-1)^r  \, \Gamma_1(A, B+rI, B' - rI; x, y) \, (B)_r \, (I-B')_r^{-1}, \quad BB' = B'B)~",
      "d^r/dy^r Gamma1(A, B, B'; x, y)", "(-1)^r Gamma1(A, B+rI, B'-rI; x, y) (B)_r (I-B')_r^-1", "BB'");
    d("Gamma1.d3", R"~(= x^{A+rI} \, (A)_r \, \Gamma_1(A+rI, B, B'; x, y))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} Gamma1(A, B, B'; x, y)", "x^{A+rI} (A)_r Gamma1(A+rI, B, B'; x, y)");
    d("Gamma1.d4", R"~(=  \Gamma_1(A, B, B'+rI; x, \frac{y}{x}) \ x^{B'+rI} \, (B')_r)~",
      "(x^2 d/dx)^r Gamma1(A, B, B'; x, y/x) x^{B'+(r-1)I}", "Gamma1(A, B, B'+rI; x, y/x) x^{B'+rI} (B')_r");
    d("Gamma1.d5", R"~(=  \Gamma_1(A, B+rI, B'; \frac{x}{y}, y) \, y^{B+rI} \, (B)_r)~",
      "(y^2 d/dy)^r Gamma1(A, B, B'; x/y, y) y^{B+(r-1)I}", "Gamma1(A, B+rI, B'; x/y, y) y^{B+rI} (B)_r");
    // Gamma2
    d("Gamma2.d1", R"~((-1)^r \, (I-B)_r^{-1} \, \Gamma_2( B-rI, B'+rI; x, y) \,  (B')_r)~",
      "d^r/dx^r Gamma2(B, B'; x, y)", "(-1)^r (I-B)_r^-1 Gamma2(B-rI, B'+rI; x, y) (B')_r");
    d("Gamma2.d2", R"~((-1)^r \, (B)_r \, \Gamma_2( B+rI, B' - rI; x, y) \,  (I-B')_r^{-1})~",
      "d^r/dy^r Gamma2(B, B'; x, y)", "(-1)^r (B)_r Gamma2(B+rI, B'-rI; x, y) (I-B')_r^-1");
    d("Gamma2.d3", R"~(=  \Gamma_2( B, B'+rI; x, \frac{y}{x}) \ x^{B'+rI} \, (B')_r)~",
      "(x^2 d/dx)^r Gamma2(B, B'; x, y/x) x^{B'+(r-1)I}", "Gamma2(B, B'+rI; x, y/x) x^{B'+rI} (B')_r");
    d("Gamma2.d4", R"~(=  \Gamma_2(B+rI, B'; \frac{x}{y}, y) \, y^{B+rI} \, (B)_r)~",
      "(y^2 d/dy)^r Gamma2(B, B'; x/y, y) y^{B+(r-1)I}", "Gamma2(B+rI, B'; x/y, y) y^{B+rI} (B)_r");
    // cH1
    d("cH1.d1", R"~((A)_r \, (B)_r \, \mathcal{H}_1(A+rI, B+rI; C+rI; x, y) \,   (C)^{-1}_r,\quad AB = BA)~",
      "d^r/dx^r cH1(A, B; C; x, y)", "(A)_r (B)_r cH1(A+rI, B+rI; C+rI; x, y) (C)_r^-1", "AB");
    d("cH1.d2", R"~(\times  \mathcal{H}_1(A-rI, B+rI, C; x, y) \, (C)_r, \quad AB = BA)~",
      "d^r/dy^r cH1(A, B; C; x, y)", "(-1)^r (I-A)_r^-1 (B)_r cH1(A-rI, B+rI, C; x, y) (C)_r", "AB");
    d("cH1.d2.corrected", R"~(\times  \mathcal{H}_1(A-rI, B+rI, C; x, y) \, (C)_r, \quad AB = BA)~",
      "d^r/dy^r cH1(A, B; C; x, y)", "(-1)^r (I-A)_r^-1 (B)_r cH1(A-rI, B+rI, C; x, y)", "AB",
      "trailing (C)_r dropped");
    d("cH1.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_1(A+rI, B; C; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH1(A, B; C; x, y/x)", "x^{A+rI} (A)_r cH1(A+rI, B; C; x, y/x)");
    d("cH1.d4", R"~(= x^{B+rI} \, (B)_r \, \mathcal{H}_1(A, B+rI; C; x, {y}{x}), \quad AB = BA)~",
      "(x^2 d/dx)^r x^{B+(r-1)I} cH1(A, B; C; x, xy)", "x^{B+rI} (B)_r cH1(A, B+rI; C; x, xy)", "AB");
    d("cH1.d5", R"~(=  (-1)^r \, \mathcal{H}_1(A, B; C-rI; x, {y}) \, x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r cH1(A, B; C; x, y) x^{C-I}", "(-1)^r cH1(A, B; C-rI; x, y) x^{C-(r+1)I} (I-C)_r");
    // cH2
    d("cH2.d1", R"~((A)_r \, (B)_r \, \mathcal{H}_2(A+rI, B+rI, B'; C+rI; x, y) \,   (C)^{-1}_r,\quad AB = BA)~",
      "d^r/dx^r cH2(A, B, B'; C; x, y)", "(A)_r (B)_r cH2(A+rI, B+rI, B'; C+rI; x, y) (C)_r^-1", "AB");
    d("cH2.d2", R"~((-1)^r \, (I-A)^{-1}_r   \mathcal{H}_2(A-rI, B, B'+rI; C; x, y) \,  (B')_r, \quad  CB' = B'C)~",
      "d^r/dy^r cH2(A, B, B'; C; x, y)", "(-1)^r (I-A)_r^-1 cH2(A-rI, B, B'+rI; C; x, y) (B')_r", "CB'");
    d("cH2.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_2(A+rI, B, B'; C; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH2(A, B, B'; C; x, y/x)", "x^{A+rI} (A)_r cH2(A+rI, B, B'; C; x, y/x)");
    d("cH2.d4", R"~(= x^{B+rI} \, (B)_r \, \mathcal{H}_2(A, B+rI, B'; C; x, {y}), \quad AB = BA)~",
      "(x^2 d/dx)^r x^{B+(r-1)I} cH2(A, B, B'; C; x, y)", "x^{B+rI} (B)_r cH2(A, B+rI, B'; C; x, y)", "AB");
    d("cH2.d5", R"~(=  \mathcal{H}_2(A, B, B' + rI; C; x, {y}) \,  y^{B'+rI} \, (B')_r, \quad CB'= B'C)~",
      "(y^2 d/dy)^r cH2(A, B, B'; C; x, y) y^{B'+(r-1)I}", "cH2(A, B, B'+rI; C; x, y) y^{B'+rI} (B')_r", "CB'");
    d("cH2.d6", R"~(=  (-1)^r \, \mathcal{H}_2(A, B, B'; C-rI; x, {y}) \,  x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r cH2(A, B, B'; C; x, y) x^{C-I}", "(-1)^r cH2(A, B, B'; C-rI; x, y) x^{C-(r+1)I} (I-C)_r");
    // cH3
    d("cH3.d1", R"~(=  (A)_{r}  \, \mathcal{H}_3(A+rI, B+rI; C+rI; x, y) \,  (B)_r \, (C)^{-1}_r, \quad BC = CB)~",
      "d^r/dx^r cH3(A, B; C; x, y)", "(A)_r cH3(A+rI, B+rI; C+rI; x, y) (B)_r (C)_r^-1", "BC");
    d("cH3.d2", R"~(= (-1)^r \, (I-A)^{-1}_r  \,  \mathcal{H}_3(A-rI, B; C; x, y))~",
      "d^r/dy^r cH3(A, B; C; x, y)", "(-1)^r (I-A)_r^-1 cH3(A-rI, B; C; x, y)");
    d("cH3.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_3(A+rI, B; C; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH3(A, B; C; x, y/x)", "x^{A+rI} (A)_r cH3(A+rI, B; C; x, y/x)");
    d("cH3.d4", R"~(=  \mathcal{H}_3(A, B+rI; C; x, {y}) \,  x^{B+rI} \, (B)_r, \quad BC = CB)~",
      "(x^2 d/dx)^r cH3(A, B; C; x, y) x^{B+(r-1)I}", "cH3(A, B+rI; C; x, y) x^{B+rI} (B)_r", "BC");
    d("cH3.d5", R"~(=  (-1)^r \, \mathcal{H}_3(A, B; C-rI; x, {y}) \, x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r cH3(A, B; C; x, y) x^{C-I}", "(-1)^r cH3(A, B; C-rI; x, y) x^{C-(r+1)I} (I-C)_r");
    // cH4
    d("cH4.d1", R"~(=  (A)_{r}  \, \mathcal{H}_4(A+rI, B'; C+rI; x, y)  \, (C)^{-1}_r)~",
      "d^r/dx^r cH4(A, B'; C; x, y)", "(A)_r cH4(A+rI, B'; C+rI; x, y) (C)_r^-1");
    d("cH4.d2", R"~(= (-1)^r \, (I-A)^{-1}_r  \,  \mathcal{H}_4(A-rI, B'+rI; C; x, y) \, (B')_r, \quad B'C = CB')~",
      "d^r/dy^r cH4(A, B'; C; x, y)", "(-1)^r (I-A)_r^-1 cH4(A-rI, B'+rI; C; x, y) (B')_r", "B'C");
    d("cH4.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_4(A+rI, B'; C; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH4(A, B'; C; x, y/x)", "x^{A+rI} (A)_r cH4(A+rI, B'; C; x, y/x)");
    d("cH4.d4", R"~(=  \mathcal{H}_4(A, B'+rI; C; x, {y}) \,  y^{B'+rI} \, (B')_r, \quad B'C = CB')~",
      "(y^2 d/dy)^r cH4(A, B'; C; x, y) y^{B'+(r-1)I}", "cH4(A, B'+rI; C; x, y) y^{B'+rI} (B')_r", "B'C");
    d("cH4.d5", R"~(=  (-1)^r \, \mathcal{H}_4(A, B'; C-rI; x, {y}) \, x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r cH4(A, B'; C; x, y) x^{C-I}", "(-1)^r cH4(A, B'; C-rI; x, y) x^{C-(r+1)I} (I-C)_r");
    // cH5
    d("cH5.d1", R"~(=  (A)_{r}  \, \mathcal{H}_5(A+rI; C+rI; x, y)  \, (C)^{-1}_r)~", "d^r/dx^r cH5(A; C; x, y)",
      "(A)_r cH5(A+rI; C+rI; x, y) (C)_r^-1");
    d("cH5.d2", R"~(= (-1)^r \, (I-A)^{-1}_r  \,  \mathcal{H}_5(A-rI; C; x, y))~", "d^r/dy^r cH5(A; C; x, y)",
      "(-1)^r (I-A)_r^-1 cH5(A-rI; C; x, y)");
    d("cH5.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_5(A+rI; C; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH5(A; C; x, y/x)", "x^{A+rI} (A)_r cH5(A+rI; C; x, y/x)");
    d("cH5.d4", R"~(=  (-1)^r \, \mathcal{H}_5(A; C-rI; x, {y}) \, x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r cH5(A; C; x, y) x^{C-I}", "(-1)^r cH5(A; C-rI; x, y) x^{C-(r+1)I} (I-C)_r");
    // cH6
    d("cH6.d1", R"~(=  (A)_{2r}  \, \mathcal{H}_6(A+2rI; C+rI; x, y)  \, (C)^{-1}_r)~", "d^r/dx^r cH6(A; C; x, y)",
      "(A)_{2r} cH6(A+2rI; C+rI; x, y) (C)_r^-1");
    d("cH6.d2", R"~(= (A)_r  \,  \mathcal{H}_6(A+rI; C+rI; x, y) \, (C)_r^{-1})~", "d^r/dy^r cH6(A; C; x, y)",
      "(A)_r cH6(A+rI; C+rI; x, y) (C)_r^-1");
    d("cH6.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_6(A+rI; C; x^2, {y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH6(A; C; x^2, xy)", "x^{A+rI} (A)_r cH6(A+rI; C; x^2, xy)");
    d("cH6.d4", R"~(=  (-1)^r \, \mathcal{H}_6(A; C-rI; x, {x y}) \, x^{C-(r+1)I} \, (I-C)_r)~",
      "d^r/dx^r cH6(A; C; x, xy) x^{C-I}", "(-1)^r cH6(A; C-rI; x, xy) x^{C-(r+1)I} (I-C)_r");
    // cH7
    d("cH7.d1", R"~(=  (A)_{2r}  \, \mathcal{H}_7(A+2rI; C+rI, C'; x, y)  \, (C)^{-1}_r, \quad CC' = C'C)~",
      "d^r/dx^r cH7(A; C, C'; x, y)", "(A)_{2r} cH7(A+2rI; C+rI, C'; x, y) (C)_r^-1", "CC'");
    d("cH7.d2", R"~(= (A)_r  \,  \mathcal{H}_7(A+rI; C, C'+rI; x, y) \, (C')_r^{-1})~",
      "d^r/dy^r cH7(A; C, C'; x, y)", "(A)_r cH7(A+rI; C, C'+rI; x, y) (C')_r^-1");
    d("cH7.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_7(A+rI; C, C'; x^2, {y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH7(A; C, C'; x^2, xy)", "x^{A+rI} (A)_r cH7(A+rI; C, C'; x^2, xy)");
    d("cH7.d4", R"~(=  (-1)^r \, \mathcal{H}_7(A; C-rI, C'; x, {y}) \, x^{C-(r+1)I} \, (I-C)_r, \quad CC' = C'C)~",
      "d^r/dx^r cH7(A; C, C'; x, y) x^{C-I}", "(-1)^r cH7(A; C-rI, C'; x, y) x^{C-(r+1)I} (I-C)_r", "CC'");
    d("cH7.d5", R"~(=  (-1)^r \, \mathcal{H}_7(A; C, C'-rI; x, {y}) \, x^{C'-(r+1)I} \, (I-C')_r)~",
      "d^r/dy^r cH7(A; C, C'; x, y) y^{C'-I}", "(-1)^r cH7(A; C, C'-rI; x, y) x^{C'-(r+1)I} (I-C')_r");
    d("cH7.d5.corrected", R"~(=  (-1)^r \, \mathcal{H}_7(A; C, C'-rI; x, {y}) \, x^{C'-(r+1)I} \, (I-C')_r)~",
      "d^r/dy^r cH7(A; C, C'; x, y) y^{C'-I}", "(-1)^r cH7(A; C, C'-rI; x, y) y^{C'-(r+1)I} (I-C')_r", "",
      "x^{C'-(r+1)I} read as y^{C'-(r+1)I}");
    // cH8
    d("cH8.d1", R"~(=  (-1)^r \, (A)_{2r}  \, \mathcal{H}_8(A+2rI, B-rI; x, y)  \, (I-B)^{-1}_r)~",
      "d^r/dx^r cH8(A, B; x, y)", "(-1)^r (A)_{2r} cH8(A+2rI, B-rI; x, y) (I-B)_r^-1");
    d("cH8.d2", R"~(= (-1)^r \, (I-A)^{-1}_r  \,  \mathcal{H}_8(A-rI, B+rI; x, y) \, (B)_r)~",
      "d^r/dy^r cH8(A, B; x, y)", "(-1)^r (I-A)_r^-1 cH8(A-rI, B+rI; x, y) (B)_r");
    d("cH8.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_8(A+rI, B; x^2, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH8(A, B; x^2, y/x)", "x^{A+rI} (A)_r cH8(A+rI, B; x^2, y/x)");
    d("cH8.d4", R"~(= \mathcal{H}_8(A, B+rI; \frac{x}{y}, {y}) \, y^{B+rI} \, (B)_r)~",
      "(y^2 d/dy)^r y^{B+(r-1)I} cH8(A, B; x/y, y)", "cH8(A, B+rI; x/y, y) y^{B+rI} (B)_r");
    // cH9
    d("cH9.d1", R"~(=  (A)_{2r}  \, \mathcal{H}_9(A+2rI, B; C+rI; x, y)  \, (C)^{-1}_r)~",
      "d^r/dx^r cH9(A, B; C; x, y)", "(A)_{2r} cH9(A+2rI, B; C+rI; x, y) (C)_r^-1");
    d("cH9.d2", R"~(= (-1)^r \, (I-A)^{-1}_r  \,  \mathcal{H}_9(A-rI, B+rI; C; x, y) \, (B)_r, \quad BC = CB)~",
      "d^r/dy^r cH9(A, B; C; x, y)", "(-1)^r (I-A)_r^-1 cH9(A-rI, B+rI; C; x, y) (B)_r", "BC");
    d("cH9.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_9(A+rI, B; C; x^2, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH9(A, B; C; x^2, y/x)", "x^{A+rI} (A)_r cH9(A+rI, B; C; x^2, y/x)");
    d("cH9.d4", R"~(= \mathcal{H}_9(A, B+rI; C; {x}, {y}) \, y^{B+rI} \, (B)_r, \quad BC = CB)~",
      "(y^2 d/dy)^r y^{B+(r-1)I} cH9(A, B; C; x, y)", "cH9(A, B+rI; C; x, y) y^{B+rI} (B)_r", "BC");
    d("cH9.d5", R"~(= (-1)^r \, \mathcal{H}_9(A, B; C-rI; {x}, {y}) \, x^{C-(r+1)I} \, (1-C)_r)~",
      "d^r/dx^r cH9(A, B; C; x, y) x^{C-I}", "(-1)^r cH9(A, B; C-rI; x, y) x^{C-(r+1)I} (1-C)_r", "",
      "(1-C)_r read as (I-C)_r");
    // cH10
    d("cH10.d1", R"~(=   (A)_{2r}  \, \mathcal{H}_{10}(A+2rI; C+rI; x, y)  \, (C)^{-1}_r)~",
      "d^r/dx^r cH10(A; C; x, y)", "(A)_{2r} cH10(A+2rI; C+rI; x, y) (C)_r^-1");
    d("cH10.d2", R"~(= (-1)^r \, (I-A)^{-1}_r  \,  \mathcal{H}_{10}(A-rI; C; x, y))~", "d^r/dy^r cH10(A; C; x, y)",
      "(-1)^r (I-A)_r^-1 cH10(A-rI; C; x, y)");
    d("cH10.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_{10}(A+rI; C; x^2, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH10(A; C; x^2, y/x)", "x^{A+rI} (A)_r cH10(A+rI; C; x^2, y/x)");
    d("cH10.d4", R"~(= (-1)^r \, \mathcal{H}_{10}(A; C-rI; {x}, {y}) \, x^{C-(r+1)I} \, (1-C)_r)~",
      "d^r/dx^r cH10(A; C; x, y) x^{C-I}", "(-1)^r cH10(A; C-rI; x, y) x^{C-(r+1)I} (1-C)_r", "",
      "(1-C)_r read as (I-C)_r");
    // cH11
    d("cH11.d1", R"~(=   (A)_{2}  \, \mathcal{H}_{11}(A+rI, B, C; C'+rI; x, y)  \, (C')^{-1}_r)~",
      "d^r/dx^r cH11(A, B, C; C'; x, y)", "(A)_2 cH11(A+rI, B, C; C'+rI; x, y) (C')_r^-1");
    d("cH11.d1.corrected", R"~(=   (A)_{2}  \, \mathcal{H}_{11}(A+rI, B, C; C'+rI; x, y)  \, (C')^{-1}_r)~",
      "d^r/dx^r cH11(A, B, C; C'; x, y)", "(A)_r cH11(A+rI, B, C; C'+rI; x, y) (C')_r^-1", "",
      "(A)_2 read as (A)_r");
    d("cH11.d2", R"~(\times  \mathcal{H}_{11}(A-rI, B+rI, C+rI; C'; x, y) (C)_r, \quad AB = BA, CC' = C'C)~",
      "d^r/dy^r cH11(A, B, C; C'; x, y)", "(-1)^r (I-A)_r^-1 (B)_r cH11(A-rI, B+rI, C+rI; C'; x, y) (C)_r",
      "AB CC'");
    d("cH11.d3", R"~(= x^{A+rI} \, (A)_r \, \mathcal{H}_{11}(A+rI, B, C; C'; x, \frac{y}{x}))~",
      "(x^2 d/dx)^r x^{A+(r-1)I} cH11(A, B, C; C'; x, y/x)", "x^{A+rI} (A)_r cH11(A+rI, B, C; C'; x, y/x)");
    d("cH11.d4", R"~(= y^{B+rI} \, (B)_r \, \mathcal{H}_{11}(A, B+rI, C; C'; x, {y}))~",
      "(y^2 d/dy)^r y^{B+(r-1)I} cH11(A, B, C; C'; x, y)", "y^{B+rI} (B)_r cH11(A, B+rI, C; C'; x, y)");
    d("cH11.d5", R"~(= (-1)^r \, \mathcal{H}_{11}(A, B, C; C'-rI; {x}, {y}) \, x^{C'-(r+1)I} \, (1-C')_r)~",
      "d^r/dx^r cH11(A, B, C; C'; x, y) x^{C'-I}", "(-1)^r cH11(A, B, C; C'-rI; x, y) x^{C'-(r+1)I} (1-C')_r", "",
      "(1-C')_r read as (I-C')_r");

    // Euler rows: z^{P+(r-1)I} -> z^{P}. A row already carrying a hand correction is fixed
    // in place; a verbatim row gains a ".corrected" sibling unless one exists.
    const std::string prefix = "+(r-1)I}";
    std::vector<FormulaEntry> extra;
    for (auto& e : v) {
        const size_t at = e.lhs.find(prefix);
        if (at == std::string::npos || e.lhs.rfind("(x^2", 0) != 0 && e.lhs.rfind("(y^2", 0) != 0) continue;
        std::string fixed = e.lhs;
        fixed.replace(at, prefix.size(), "}");
        const std::string note = "z^{P+(r-1)I} read as z^{P}";
        if (e.id.size() > 10 && e.id.compare(e.id.size() - 10, 10, ".corrected") == 0) {
            e.lhs = fixed;
            e.note += "; " + note;
            continue;
        }
        const std::string cid = e.id + ".corrected";
        if (std::any_of(v.begin(), v.end(), [&](const FormulaEntry& o) { return o.id == cid; })) continue;
        FormulaEntry c = e;
        c.id = cid;
        c.lhs = fixed;
        c.note = e.note.empty() ? note : e.note + "; " + note;
        extra.push_back(std::move(c));
    }
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
}

inline std::vector<FormulaEntry> build_sum_table() {
    std::vector<FormulaEntry> v;
    auto s = [&](std::string id, std::string anchor, std::string lhs, std::string rhs, std::string cond = "",
                 std::string note = "") {
        std::string f = id.substr(0, id.find('.'));
        v.push_back({IdentityKind::summation, std::move(id), f, std::move(anchor), std::move(lhs), std::move(rhs),
                     std::move(cond), std::move(note)});
    };
    // G1
    s("G1.s1", R"~(& (1-t)^{-A} G_{1} \left(A, B, B'; \frac{x}{1-t}, \frac{y}{1-t}\right))~",
      "(1-t)^{-A} G1(A, B, B'; x/(1-t), y/(1-t))", "(A)_n G1(A+nI, B, B'; x, y)");
    s("G1.s2", R"~(&  G_{1} \left(A, B, B'; {x}{(1-t)}, \frac{y}{1-t}\right) \, (1-t)^{-B})~",
      "G1(A, B, B'; x(1-t), y/(1-t)) (1-t)^{-B}", "G1(A, B+nI, B'; x, y) (B)_n", "BB'");
    s("G1.s3", R"~(&  G_{1} \left(A, B, B'; \frac{x}{1-t}, {y}{(1-t)}\right) (1-t)^{-B'})~",
      "G1(A, B, B'; x/(1-t), y(1-t)) (1-t)^{-B'}", "G1(A, B, B'+nI; x, y) (B')_n");
    // G2
    s("G2.s1", R"~(& (1-t)^{-A} G_{2} \left(A, A', B, B'; \frac{x}{1-t}, {y}\right))~",
      "(1-t)^{-A} G2(A, A', B, B'; x/(1-t), y)", "(A)_n G2(A+nI, A', B, B'; x, y)");
    s("G2.s2", R"~(& (1-t)^{-A'} G_{2} \left(A, A', B, B'; {x}, \frac{y}{1-t}\right))~",
      "(1-t)^{-A'} G2(A, A', B, B'; x, y/(1-t))", "(A')_n G2(A, A'+nI, B, B'; x, y)", "AA'");
    s("G2.s3", R"~(&  G_{2} \left(A, A', B, B'; {x}{(1-t)}, \frac{y}{1-t}\right) \, (1-t)^{-B})~",
      "G2(A, A', B, B'; x(1-t), y/(1-t)) (1-t)^{-B}", "G2(A, A', B+nI, B'; x, y) (B)_n", "BB'");
    s("G2.s4", R"~(&  G_{2} \left(A, A', B, B'; \frac{x}{1-t}, {y}{(1-t)}\right) (1-t)^{-B'})~",
      "G2(A, A', B, B'; x/(1-t), y(1-t)) (1-t)^{-B'}", "G2(A, A', B, B'+nI; x, y) (B')_n");
    // G3
    s("G3.s1", R"~(& (1-t)^{-A} G_{3} \left(A, A'; {x}{(1-t)}, \frac{y}{(1-t)^2}\right))~",
      "(1-t)^{-A} G3(A, A'; x(1-t), y/(1-t)^2)", "(A)_n G3(A+nI, A'; x, y)");
    s("G3.s2", R"~(&  G_{3} \left(A, A'; \frac{x}{(1-t)^2}, {y}{(1-t)}\right) \, (1-t)^{-A'})~",
      "G3(A, A'; x/(1-t)^2, y(1-t)) (1-t)^{-A'}", "G3(A, A'+nI; x, y) (A')_n");
    // H1
    s("H1.s1", R"~(& (1-t)^{-A} H_{1} \left(A, B, C; C'; \frac{x}{1-t}, y(1-t)\right))~",
      "(1-t)^{-A} H1(A, B, C; C'; x/(1-t), y(1-t))", "(A)_n H1(A+nI, B, C; C'; x, y)");
    s("H1.s2", R"~(& (1-t)^{-B} H_{1} \left(A, B, C; C'; \frac{x}{1-t}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} H1(A, B, C; C'; x/(1-t), y/(1-t))", "(B)_n H1(A, B+nI, C; C'; x, y)", "AB");
    s("H1.s3", R"~(&  H_{1} \left(A, B, C; C'; {x}, \frac{y}{1-t}\right) (1-t)^{-C})~",
      "H1(A, B, C; C'; x, y/(1-t)) (1-t)^{-C}", "H1(A, B, C+nI; C'; x, y) (C)_n", "CC'");
    // H2
    s("H2.s1", R"~(& (1-t)^{-A} H_{2} \left(A, B, C, C'; C''; \frac{x}{1-t}, {y}{(1-t)}\right))~",
      "(1-t)^{-A} H2(A, B, C, C'; C''; x/(1-t), y(1-t))", "(A)_n H2(A+nI, B, C, C'; C''; x, y)");
    s("H2.s2", R"~(& (1-t)^{-B} H_{2} \left(A, B, C, C'; C''; \frac{x}{1-t}, {y}\right))~",
      "(1-t)^{-B} H2(A, B, C, C'; C''; x/(1-t), y)", "(B)_n H2(A, B+nI, C, C'; C''; x, y)", "AB");
    s("H2.s3", R"~(&  H_{2} \left(A, B, C, C'; C''; {x}, \frac{y}{1-t}\right) (1-t)^{-C})~",
      "H2(A, B, C, C'; C''; x, y/(1-t)) (1-t)^{-C}", "H2(A, B, C+nI, C'; C''; x, y) (C)_n", "CC' CC''");
    s("H2.s4", R"~(& = \sum_{n = 0}^{\infty} H_{2} (A, B, C, C'+nI; C''; {x}, y) \,  \frac{(B)_n}{n!} \, t^n)~",
      "H2(A, B, C, C'; C''; x, y/(1-t)) (1-t)^{-C'}", "H2(A, B, C, C'+nI; C''; x, y) (B)_n", "CC''");
    s("H2.s4.corrected", R"~(& = \sum_{n = 0}^{\infty} H_{2} (A, B, C, C'+nI; C''; {x}, y) \,  \frac{(B)_n}{n!} \, t^n)~",
      "H2(A, B, C, C'; C''; x, y/(1-t)) (1-t)^{-C'}", "H2(A, B, C, C'+nI; C''; x, y) (C')_n", "CC''",
      "(B)_n read as (C')_n");
    // H3
    s("H3.s1", R"~(& (1-t)^{-A} H_{3} \left(A, B; C; \frac{x}{(1-t)^2}, \frac{y}{1-t}\right))~",
      "(1-t)^{-A} H3(A, B; C; x/(1-t)^2, y/(1-t))", "(A)_n H3(A+nI, B; C; x, y)");
    s("H3.s2", R"~(& (1-t)^{-B} H_{3} \left(A, B; C; {x}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} H3(A, B; C; x, y/(1-t))", "(B)_n H3(A, B+nI; C; x, y)", "AB");
    // H4
    s("H4.s1", R"~(& (1-t)^{-A} H_{4} \left(A, B; C, C'; \frac{x}{(1-t)^2}, \frac{y}{1-t}\right))~",
      "(1-t)^{-A} H4(A, B; C, C'; x/(1-t)^2, y/(1-t))", "(A)_n H4(A+nI, B; C, C'; x, y)");
    s("H4.s2", R"~(& (1-t)^{-B} H_{4} \left(A, B; C, C'; {x}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} H4(A, B; C, C'; x, y/(1-t))", "(B)_n H4(A, B+nI; C, C'; x, y)", "AB");
    // H5
    s("H5.s1", R"~(& (1-t)^{-A} H_{5} \left(A, B; C; \frac{x}{(1-t)^2}, \frac{y}{1-t}\right))~",
      "(1-t)^{-A} H5(A, B; C; x/(1-t)^2, y/(1-t))", "(A)_n H5(A+nI, B; C; x, y)");
    s("H5.s2", R"~(& (1-t)^{-B} H_{5} \left(A, B; C; {x}(1-t), \frac{y}{1-t}\right))~",
      "(1-t)^{-B} H5(A, B; C; x(1-t), y/(1-t))", "(B)_n H5(A, B+nI; C; x, y)", "AB");
    // H6
    s("H6.s1", R"~(& (1-t)^{-A} H_{6} \left(A, B; C; \frac{x}{(1-t)^2}, {y}{(1-t)}\right))~",
      "(1-t)^{-A} H6(A, B; C; x/(1-t)^2, y(1-t))", "(A)_n H6(A+nI, B; C; x, y)");
    s("H6.s2", R"~(& = \sum_{n = 0}^{\infty} \frac{(B)_n}{n!} H_{3} (A, B+nI; C; {x}, y) t^n, \quad AB = BA)~",
      "(1-t)^{-B} H6(A, B; C; x(1-t), y/(1-t))", "(B)_n H3(A, B+nI; C; x, y)", "AB");
    s("H6.s2.corrected", R"~(& = \sum_{n = 0}^{\infty} \frac{(B)_n}{n!} H_{3} (A, B+nI; C; {x}, y) t^n, \quad AB = BA)~",
      "(1-t)^{-B} H6(A, B; C; x(1-t), y/(1-t))", "(B)_n H6(A, B+nI; C; x, y)", "AB", "H_3 on the right read as H_6");
    // H7
    s("H7.s1", R"~(& (1-t)^{-A} H_{7} \left(A, B; C, C'; \frac{x}{(1-t)^2}, {y}{(1-t)}\right))~",
      "(1-t)^{-A} H7(A, B; C, C'; x/(1-t)^2, y(1-t))", "(A)_n H7(A+nI, B; C, C'; x, y)");
    s("H7.s2", R"~(& (1-t)^{-B} H_{7} \left(A, B; C, C'; {x}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} H7(A, B; C, C'; x, y/(1-t))", "(B)_n H7(A, B+nI; C, C'; x, y)", "AB");
    s("H7.s3", R"~(& = \sum_{n = 0}^{\infty}  H_{7} (A, B+nI; C, C'; {x}, y) \, \frac{(C)_n}{n!} t^n)~",
      "H7(A, B; C, C'; x, y/(1-t)) (1-t)^{-C}", "H7(A, B+nI; C, C'; x, y) (C)_n");
    s("H7.s3.corrected", R"~(& = \sum_{n = 0}^{\infty}  H_{7} (A, B+nI; C, C'; {x}, y) \, \frac{(C)_n}{n!} t^n)~",
      "H7(A, B; C, C'; x, y/(1-t)) (1-t)^{-C}", "H7(A, B; C+nI, C'; x, y) (C)_n", "", "B+nI read as C+nI");
    // Gamma1
    s("Gamma1.s1", R"~(& (1-t)^{-A} \Gamma_{1} \left(A, B, B'; \frac{x}{1-t}, {y}\right))~",
      "(1-t)^{-A} Gamma1(A, B, B'; x/(1-t), y)", "(A)_n Gamma1(A+nI, B, B'; x, y)");
    s("Gamma1.s2", R"~(&  \Gamma_{1} \left(A, B, B'; {x}{(1-t)}, \frac{y}{1-t}\right) \, (1-t)^{-B})~",
      "Gamma1(A, B, B'; x(1-t), y/(1-t)) (1-t)^{-B}", "Gamma1(A, B+nI, B'; x, y) (B)_n", "BB'");
    s("Gamma1.s3", R"~(&  \Gamma_{1} \left(A, B, B'; \frac{x}{1-t}, {y}{(1-t)}\right) (1-t)^{-B'})~",
      "Gamma1(A, B, B'; x/(1-t), y(1-t)) (1-t)^{-B'}", "Gamma1(A, B, B'+nI; x, y) (B')_n");
    // Gamma2
    s("Gamma2.s1", R"~(&  (1-t)^{-B} \, \Gamma_{2} \left(B, B'; {x}{(1-t)}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} Gamma2(B, B'; x(1-t), y/(1-t))", "(B)_n Gamma2(B+nI, B'; x, y)");
    s("Gamma2.s2", R"~(&  \Gamma_{2} \left(B, B'; \frac{x}{1-t}, {y}{(1-t)}\right) (1-t)^{-B'})~",
      "Gamma2(B, B'; x/(1-t), y(1-t)) (1-t)^{-B'}", "Gamma2(B, B'+nI; x, y) (B')_n");
    // cH1
    s("cH1.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_1 \left(A, B; C; \frac{x}{1-t}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH1(A, B; C; x/(1-t), y(1-t))", "(A)_n cH1(A+nI, B; C; x, y)");
    s("cH1.s2", R"~(&  (1-t)^{-B} \, \mathcal{H}_1 \left(A, B; C; \frac{x}{1-t}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} cH1(A, B; C; x/(1-t), y/(1-t))", "(B)_n cH1(A, B+nI; C; x, y)", "AB");
    // cH2
    s("cH2.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_2 \left(A, B, B'; C; \frac{x}{1-t}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH2(A, B, B'; C; x/(1-t), y(1-t))", "(A)_n cH2(A+nI, B, B'; C; x, y)");
    s("cH2.s2", R"~(&  (1-t)^{-B} \, \mathcal{H}_2 \left(A, B, B'; C; \frac{x}{1-t}, {y}\right))~",
      "(1-t)^{-B} cH2(A, B, B'; C; x/(1-t), y)", "(B)_n cH2(A, B+nI, B'; C; x, y)", "AB");
    s("cH2.s3", R"~(&  \mathcal{H}_2 \left(A, B, B'; C; {x}, \frac{y}{1-t}\right) \, (1-t)^{-B'})~",
      "cH2(A, B, B'; C; x, y/(1-t)) (1-t)^{-B'}", "cH2(A, B, B'+nI; C; x, y) (B')_n", "B'C");
    // cH3
    s("cH3.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_3 \left(A, B; C; \frac{x}{1-t}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH3(A, B; C; x/(1-t), y(1-t))", "(A)_n cH3(A+nI, B; C; x, y)");
    s("cH3.s2", R"~(&  (1-t)^{-B} \, \mathcal{H}_3 \left(A, B; C; \frac{x}{1-t}, {y}\right))~",
      "(1-t)^{-B} cH3(A, B; C; x/(1-t), y)", "(B)_n cH3(A, B+nI; C; x, y)", "AB");
    // cH4
    s("cH4.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_4 \left(A, B'; C; \frac{x}{1-t}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH4(A, B'; C; x/(1-t), y(1-t))", "(A)_n cH4(A+nI, B'; C; x, y)");
    s("cH4.s2", R"~(&  (1-t)^{-B'} \, \mathcal{H}_4 \left(A, B'; C; {x},  \frac{y}{1-t}\right))~",
      "(1-t)^{-B'} cH4(A, B'; C; x, y/(1-t))", "(B')_n cH4(A, B'+nI; C; x, y)", "AB'");
    // cH5 .. cH7
    s("cH5.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_5 \left(A; C; \frac{x}{1-t}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH5(A; C; x/(1-t), y(1-t))", "(A)_n cH5(A+nI; C; x, y)");
    s("cH6.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_6 \left(A; C; \frac{x}{(1-t)^2}, \frac{y}{1-t}\right))~",
      "(1-t)^{-A} cH6(A; C; x/(1-t)^2, y/(1-t))", "(A)_n cH6(A+nI; C; x, y)");
    s("cH7.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_7\left(A; C, C'; \frac{x}{(1-t)^2}, \frac{y}{1-t}\right))~",
      "(1-t)^{-A} cH7(A; C, C'; x/(1-t)^2, y/(1-t))", "(A)_n cH7(A+nI; C, C'; x, y)");
    // cH8
    s("cH8.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_8 \left(A, B; \frac{x}{(1-t)^2}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH8(A, B; x/(1-t)^2, y(1-t))", "(A)_n cH8(A+nI, B; x, y)");
    s("cH8.s2", R"~(&   \mathcal{H}_8 \left(A, B; {x}{(1-t)}, \frac{y}{1-t}\right) (1-t)^{-B})~",
      "cH8(A, B; x(1-t), y/(1-t)) (1-t)^{-B}", "cH8(A, B+nI; x, y) (B)_n");
    // cH9
    s("cH9.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_9 \left(A, B; C; \frac{x}{(1-t)^2}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH9(A, B; C; x/(1-t)^2, y(1-t))", "(A)_n cH9(A+nI, B; C; x, y)");
    s("cH9.s2", R"~(&  (1-t)^{-B} \, \mathcal{H}_9 \left(A, B; C; {x}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} cH9(A, B; C; x, y/(1-t))", "(B)_n cH9(A, B+nI; C; x, y)", "AB");
    // cH10
    s("cH10.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_{10} \left(A; C; \frac{x}{(1-t)^2}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH10(A; C; x/(1-t)^2, y(1-t))", "(A)_n cH10(A+nI; C; x, y)");
    // cH11
    s("cH11.s1", R"~(&  (1-t)^{-A} \, \mathcal{H}_{11} \left(A, B, C; C'; \frac{x}{1-t}, y{(1-t)}\right))~",
      "(1-t)^{-A} cH11(A, B, C; C'; x/(1-t), y(1-t))", "(A)_n cH11(A+nI, B, C; C'; x, y)");
    s("cH11.s2", R"~(&  (1-t)^{-B} \, \mathcal{H}_{11} \left(A, B, C; C'; {x}, \frac{y}{1-t}\right))~",
      "(1-t)^{-B} cH11(A, B, C; C'; x, y/(1-t))", "(B)_n cH11(A, B+nI, C; C'; x, y)", "AB");
    s("cH11.s3", R"~(&   \mathcal{H}_{11} \left(A, B, C; C'; {x}, \frac{y}{1-t}\right)\, (1-t)^{-C})~",
      "cH11(A, B, C; C'; x, y/(1-t)) (1-t)^{-C}", "cH11(A, B, C+nI; C'; x, y) (C)_n", "CC'");
    return v;
}

inline std::vector<ConfluenceEntry> build_confluence_table() {
    using S = std::vector<std::string>;
    return {
        {"Gamma1.conf", "Gamma1", "G2",
         R"~(\Gamma_1 (A, B; B'; x, y) &= \lim_{\varepsilon \to 0} G_2\left(A, \frac{1}{\varepsilon}I, B, B'; x, \varepsilon y\right))~",
         S{"A", "eps", "B", "B'"}, 0, 1},
        {"Gamma2.conf", "Gamma2", "G1",
         R"~(\Gamma_2 (B, B'; x, y)  &= \lim_{\varepsilon \to 0} G_1\left(\frac{1}{\varepsilon}I, B, B'; \varepsilon x, \varepsilon y\right))~",
         S{"eps", "B", "B'"}, 1, 1},
        {"cH1.conf", "cH1", "H1",
         R"~(\mathcal{H}_1 (A, B; C'; x, y) &= \lim_{\varepsilon \to 0} H_1 \left(A, B, \frac{1}{\varepsilon}I; C'; x, \varepsilon y\right))~",
         S{"A", "B", "eps", "C"}, 0, 1},
        {"cH2.conf", "cH2", "H2",
         R"~(\mathcal{H}_2 (A, B, C; C''; x, y)  &=\lim_{\varepsilon \to 0} H_2\left(A, B, C, \frac{1}{\varepsilon}I;  C''; x, \varepsilon y\right))~",
         S{"A", "B", "B'", "eps", "C"}, 0, 1},
        {"cH3.conf.1", "cH3", "H2",
         R"~(\mathcal{H}_3 (A, B, C''; x, y)  &=\lim_{\varepsilon \to 0} H_2\left(A, B, \frac{1}{\varepsilon}I, \frac{1}{\varepsilon}I;  C''; x, (\varepsilon)^2 y\right))~",
         S{"A", "B", "eps", "eps", "C"}, 0, 2},
        {"cH3.conf.2", "cH3", "cH2",
         R"~(&=\lim_{\varepsilon \to 0} \mathcal{H}_2 (A, B, \frac{1}{\varepsilon}I; C''; x, \varepsilon y))~",
         S{"A", "B", "eps", "C"}, 0, 1},
        {"cH4.conf.1", "cH4", "H2",
         R"~(\mathcal{H}_4 (A, C, C''; x, y)  &=\lim_{\varepsilon \to 0} H_2\left(A, \frac{1}{\varepsilon}I, C, \frac{1}{\varepsilon}I;  C''; \varepsilon x, \varepsilon y\right))~",
         S{"A", "eps", "B'", "eps", "C"}, 1, 1},
        {"cH4.conf.2", "cH4", "cH2",
         R"~(&=\lim_{\varepsilon \to 0} \mathcal{H}_2 (A, \frac{1}{\varepsilon}I, C; C''; \varepsilon x,  y))~",
         S{"A", "eps", "B'", "C"}, 1, 0},
        {"cH5.conf.1", "cH5", "H2",
         R"~(\mathcal{H}_5 (A; C''; x, y)  &=\lim_{\varepsilon \to 0} H_2\left(A, \frac{1}{\varepsilon}I, \frac{1}{\varepsilon}I, \frac{1}{\varepsilon}I;  C''; \varepsilon x, (\varepsilon)^2 y\right))~",
         S{"A", "eps", "eps", "eps", "C"}, 1, 2},
        {"cH5.conf.2", "cH5", "cH2",
         R"~(&=\lim_{\varepsilon \to 0} \mathcal{H}_2 (A, \frac{1}{\varepsilon}I, \frac{1}{\varepsilon}I; C''; \varepsilon x,  \varepsilon y))~",
         S{"A", "eps", "eps", "C"}, 1, 1},
        {"cH6.conf", "cH6", "H3",
         R"~(\mathcal{H}_6 (A; C; x, y) & =\lim_{\varepsilon \to 0} H_3 \left(A, \frac{1}{\varepsilon}I; C;  x, \varepsilon y\right))~",
         S{"A", "eps", "C"}, 0, 1},
        {"cH7.conf", "cH7", "H4",
         R"~(\mathcal{H}_7 (A; C, C'; x, y) & =\lim_{\varepsilon \to 0} H_4 \left(A, \frac{1}{\varepsilon}I; C, C';  x, \varepsilon y\right))~",
         S{"A", "eps", "C", "C'"}, 0, 1},
        {"cH8.conf", "cH8", "H6",
         R"~(\mathcal{H}_8 (A, B; x, y) & =\lim_{\varepsilon \to 0} H_6 \left(A, B, \frac{1}{\varepsilon}I;  x, \varepsilon y\right))~",
         S{"A", "B", "eps"}, 0, 1},
        {"cH9.conf", "cH9", "H7",
         R"~(\mathcal{H}_9 (A, B; C'; x, y) & =\lim_{\varepsilon \to 0} H_7 \left(A, B, \frac{1}{\varepsilon}I; C';  x, \varepsilon y\right))~",
         S{"A", "B", "eps", "C"}, 0, 1},
        {"cH10.conf", "cH10", "H7",
         R"~(\mathcal{H}_{10} (A; C'; x, y) & =\lim_{\varepsilon \to 0} H_7 \left(A, \frac{1}{\varepsilon}I, \frac{1}{\varepsilon}I; C';  x, (\varepsilon)^2 y\right))~",
         S{"A", "eps", "eps", "C"}, 0, 2},
        {"cH11.conf", "cH11", "H2",
         R"~(\mathcal{H}_{11} (A, C, C'; C''; x, y) & =\lim_{\varepsilon \to 0} H_2 \left(A, \frac{1}{\varepsilon}I, C, C'; C'';  \varepsilon x,  y\right))~",
         S{"A", "eps", "B", "C", "C'"}, 1, 0},
    };
}

inline std::vector<IntegralEntry> build_integral_table() {
    const std::string g1 =
        R"~(G_1(A, B, B'; x, y) = \int_{0}^{1} \left(1 + \frac{x}{t} + y t \right)^{-A} t^{B- I} (1 - t)^{-(B + B')} dt)~";
    const std::string g2 =
        R"~(\int_{0}^{1} \left(1 + \frac{x}{t}\right)^{-A} \, (1 + y \, t)^{-A'} \, t^{B - I} \, (1 - t)^{-(B + B')} \, dt)~";
    return {
        {"G1.integral", "G1", g1, false},
        {"G1.integral.y_axis", "G1", g1, true},
        {"G2.integral", "G2", g2, false},
        {"G2.integral.y_axis", "G2", g2, true},
        {"H3.integral", "H3",
         R"~(\int_{0}^{1} (1 - y \, t)^{-B} \, t^{A - I} \left(1 + \frac{x \, t^2}{1 - t}\right)^{-C - A - I} \,  (1 - t)^{C - A - I} \, dt)~",
         false},
        {"H4.integral", "H4",
         R"~(\int_{0}^{1}\int_{0}^{1} t^{A - I} \, (1 -  t)^{C - A - I} \, u^{B - I} \left(1 - u\right)^{C' - B - I} \,  (1 - u y)^{ - A} \, \left(1 - \frac{tx}{(1 - u y)^2}\right) \, dt \, du)~",
         false},
    };
}

}  // namespace detail

inline const std::vector<PdeEntry>& pde_table() {
    static const std::vector<PdeEntry> t = detail::build_pde_table();
    return t;
}

inline const std::vector<FormulaEntry>& diff_table() {
    static const std::vector<FormulaEntry> t = detail::build_diff_table();
    return t;
}

inline const std::vector<FormulaEntry>& summation_table() {
    static const std::vector<FormulaEntry> t = detail::build_sum_table();
    return t;
}

inline const std::vector<ConfluenceEntry>& confluence_table() {
    static const std::vector<ConfluenceEntry> t = detail::build_confluence_table();
    return t;
}

inline const std::vector<IntegralEntry>& integral_table() {
    static const std::vector<IntegralEntry> t = detail::build_integral_table();
    return t;
}

}  // namespace hornmx
