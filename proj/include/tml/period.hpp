#pragma once

#include <array>
#include <string>
#include <vector>

#include "tml/ratfunc.hpp"

namespace tml {

enum class PeriodMode { strict, real_residue };

// Weierstrass data (g, f) of one maximal factor. Conjugate symmetry of both
// functions is enforced at construction.
struct WeierstrassPair {
    RationalFunction g;
    RationalFunction f;
    GQ base_point;

    WeierstrassPair(RationalFunction g_, RationalFunction f_, GQ base = gq(0));
};

// alpha = ((1 - g^2), 2g, (1 + g^2)) f
std::array<RationalFunction, 3> build_alpha(const WeierstrassPair& w);

struct ResidueCheckEntry {
    GQ pole;
    int component = 0;  // 0..2
    GQ residue;
    bool pass = true;
};

struct PeriodReport {
    PeriodMode mode = PeriodMode::strict;
    bool pass = true;
    std::vector<ResidueCheckEntry> entries;
};

// strict: all residues of all three alpha components vanish at every finite
// pole; real_residue: all residues purely real (Re of every loop period 0).
PeriodReport check_period(const WeierstrassPair& w, PeriodMode mode);

using ExactVector = std::vector<Rational>;

// Homogeneous residue system for the f ansatz
//   f = sum_i a_i/(z - p_i)^2 + sum_{j=0}^{2n-2} b_j z^j,  n = #poles + 1.
struct PeriodSystem {
    std::vector<std::string> unknowns;            // a_1..a_{n-1}, b_0..b_{2n-2}
    std::vector<ExactVector> matrix;              // <= 2n-2 rows, 3n-2 cols
    std::vector<Rational> pole_set;
    int n = 1;
    int num_a = 0;
};

// Builds f from a solution vector in the ansatz above.
RationalFunction ansatz_f(const std::vector<Rational>& finite_poles, const ExactVector& v);

// Exact nullspace basis of the residue system; basis vectors are
// integer-scaled with positive first nonzero entry. Dimension >= n is
// asserted (the solver raises on violation).
std::pair<PeriodSystem, std::vector<ExactVector>> solve_period_system(
    const RationalFunction& g, const std::vector<Rational>& finite_poles);

struct SolutionChoice {
    ExactVector vector;
    std::vector<int> a_zero;  // 1-based indices i with a_i == 0
    std::string rationale;
};

// Deterministic pick: integer combination with entries in {-1,0,1,2}
// maximizing the count of nonzero a-entries, lexicographically smallest on
// ties. num_a = number of leading a-unknowns.
SolutionChoice choose_solution(const std::vector<ExactVector>& basis, int num_a);

// Correction term (f)_i = sum_{l=1}^{2n} alpha_l/(z - p)^{2+l} solving the
// residue constraints at every finite end; nonzero. The caller forms
// F = f + sum of corrections.
RationalFunction augment_weak_complete(const RationalFunction& g, const RationalFunction& f,
                                       const Rational& p, int n);

struct PairedEnd {
    GQ p1;       // end of factor 1
    GQ p2;       // end of factor 2
    int order1 = 0;  // max pole order over the alpha components
    int order2 = 0;
};

struct BicomplexWeierstrass {
    WeierstrassPair factor1;
    WeierstrassPair factor2;
    std::vector<PairedEnd> ends;  // finite ends, paired by sorted position
};

// Validates real_residue period condition for both factors and matching pole
// orders at paired ends.
BicomplexWeierstrass assemble_bicomplex(const WeierstrassPair& w1, const WeierstrassPair& w2);

// Distinct finite poles of the alpha components with max order.
std::vector<Pole> alpha_poles(const WeierstrassPair& w);

// Exact nullspace of a rational matrix (RREF); exposed for tests.
std::vector<ExactVector> nullspace(const std::vector<ExactVector>& rows, int cols);

} // namespace tml
