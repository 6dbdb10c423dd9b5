#pragma once

#include <array>
#include <string>
#include <vector>

#include "tml/surface.hpp"

namespace tml {

struct Box {
    double x1_min = -3, x1_max = 3;
    double x4_min = -3, x4_max = 3;
};

struct Interval {
    double lo = 0, hi = 0;
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Zero set of F(x1,x4) = g1(x1+x4) - g2(x1-x4) in (x1,x4) coordinates.
struct SingularCurve {
    std::vector<std::vector<std::array<double, 2>>> polylines;
    double residual = 0.0;   // max |F| over emitted vertices
    bool bounded_flag = true;  // no polyline reaches the box boundary
};

SingularCurve extract_singular_set(const WeierstrassPair& w1, const WeierstrassPair& w2,
                                   const Box& box, int grid_n, double delta = 0.05,
                                   double refine_tol = 1e-10);

struct CompactnessReport {
    bool contained = false;  // all vertices in (A1 e + A2 e†) ∩ D
    std::string classification;  // "whole" | "curve" | "empty"
    std::string note;
};

CompactnessReport check_compactness(const WeierstrassPair& w1, const WeierstrassPair& w2,
                                    const SingularCurve& sing, const Box& box,
                                    const Interval& a1, const Interval& a2,
                                    double delta = 0.05);

// Real zeros of f in the interval: exact when Gaussian-rational, otherwise
// bisection on sign changes of the numerator.
std::vector<double> branch_points(const WeierstrassPair& w, const Interval& box);

struct FactorEnd {
    double a = 0;      // (z-p)^{-2} Laurent coefficient of the first alpha component
    double c = 0;      // log coefficient
    int type = 1;      // 1: log in the second coordinate; 2: log in first/third
};

struct EndDescriptor {
    Rational p1, p2;   // paired end points
    FactorEnd factor[2];
    int combined_type = 1;  // (1,1)->1 (1,2)->2 (2,1)->3 (2,2)->4
    bool simple = true;
};

EndDescriptor classify_end(const WeierstrassPair& w1, const WeierstrassPair& w2,
                           int end_index);

struct AsymptoticTable {
    std::vector<double> radii;
    std::vector<double> residuals;   // max over the four sign quadrants
    std::vector<double> ratios;      // residual / model magnitude
};

AsymptoticTable asymptotic_residual(const SurfaceModel& m, const EndDescriptor& d,
                                    const std::vector<double>& radii);

} // namespace tml
