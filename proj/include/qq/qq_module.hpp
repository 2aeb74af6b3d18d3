#pragma once

#include <utility>
#include <vector>

#include "qq/cone.hpp"
#include "qq/report.hpp"
#include "qq/series.hpp"

namespace qq {

enum class LevelsViolation {
    none,
    zero_min_level,      // the level-m cone must be nonzero
    real_level_zero,     // level 0 must lie inside the real axis
    symmetric_needs_full // a symmetric level m forces level m+1 to be everything
};

const char* to_string(LevelsViolation v);

// Normal form of a quasi-quadratic A-module over A = R + X*C[[X]]: the zero
// module, or a minimum valuation level m with the two cones of pseudo-angular
// components at levels m and m+1. Levels below m are zero, levels at and
// beyond m+2 are the whole plane.
class QQModule {
public:
    static QQModule zero_module();
    // Validates the structural conditions; throws errc::validation.
    static QQModule levels(unsigned m, Cone level_m, Cone level_m1);

    bool is_zero_module() const { return zero_; }
    unsigned min_level() const;
    const Cone& cone_m() const;
    const Cone& cone_m1() const;

    friend bool operator==(const QQModule& a, const QQModule& b);
    friend bool operator!=(const QQModule& a, const QQModule& b) { return !(a == b); }

private:
    QQModule() : zero_(true), m_(0), mm_(Cone::zero()), mm1_(Cone::zero()) {}
    bool zero_;
    unsigned m_;
    Cone mm_;
    Cone mm1_;
};

LevelsViolation check_levels(unsigned m, const Cone& level_m, const Cone& level_m1);

// The cone of pseudo-angular components at valuation level g.
Cone level_of(const QQModule& M, unsigned g);

enum class PsiClass { not_member, in_psi1, in_psi2 };

const char* to_string(PsiClass c);

// Classification of x against the reconstruction set built from a level cone
// M at level g. x must lie in A; a zero series classifies as not_member (zero
// belongs to the set by fiat and is handled by psi_member).
PsiClass psi_classify(const Cone& M, unsigned g, const Series& x);

bool psi_member(const Cone& M, unsigned g, const Series& x);

// Membership in the normal form. Requires in_A(x); a series with no known
// nonzero coefficient needs precision >= m+2 so the answer does not depend on
// unknown coefficients, otherwise errc::precision is raised.
bool qq_member(const QQModule& M, const Series& x);

// Per-sample agreement between direct membership and the union of the
// reconstruction sets over the window {m, m+1, m+2}.
Report qq_decompose_check(const QQModule& M, const std::vector<Series>& samples);

using LevelFamily = std::vector<std::pair<unsigned, Cone>>;

// Explicit level window {0, ..., m+2}; all later levels are the full plane.
LevelFamily sigma(const QQModule& M);

// Inverse of sigma: validates the family conditions and folds the window back
// into the normal form. Levels omitted from the family are implied (zero below
// the first nonzero entry, full from m+2 on).
QQModule rho(const LevelFamily& family);

QQModule qq_negate(const QQModule& M);
QQModule qq_intersect(const QQModule& M1, const QQModule& M2);
QQModule qq_sum(const QQModule& M1, const QQModule& M2);
QQModule qq_symmetric_part(const QQModule& M);
bool qq_is_ideal(const QQModule& M);

// Normal form of the quasi-quadratic closure of finitely many generators.
QQModule qq_from_generators(const std::vector<Series>& gens);

bool qq_is_fg(const QQModule& M);

// A finite generating set whose closure reproduces M exactly.
std::vector<Series> qq_fg_generators(const QQModule& M);

// Exact decomposition of x in M1 + M2 as x1 + x2 with xi in Mi.
bool qq_sum_realize(const QQModule& M1, const QQModule& M2, const Series& x, Series& x1,
                    Series& x2);

// f = alpha * X^shift * base^2 + beta * i * X^shift * base^2, with rational
// alpha, beta and base in A; shift is 0 for even valuation and 1 for odd.
// Signs of alpha/beta select among the eight monomial generators
// {+-1, +-i, +-X, +-iX} of the valuation ring.
struct SquareScaleDecomposition {
    Rat alpha;
    Rat beta;
    unsigned shift;
    Series base;

    Series recombine() const;
};

SquareScaleDecomposition lemma43_decompose(const Series& f);

// "zero" or "levels(1; ray(1,0); zero)"
std::string to_string(const QQModule& M);

} // namespace qq
