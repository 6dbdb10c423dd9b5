#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "tml/algebra.hpp"
#include "tml/period.hpp"

namespace tml {

struct LogTerm {
    GQ pole;          // real in the conjugate-symmetric pipeline
    Rational coeff;   // real by construction (ComplexResidue otherwise)
};

// Exact antiderivative of a rational integrand with real residues, split as
// rational part + sum of coeff * ln|z - pole|. Re of it is single-valued on
// C minus the poles.
struct ClosedFormIntegral {
    RationalFunction rational_part;
    std::vector<LogTerm> log_terms;

    // Re(F(z)) with the integration constant fixed to zero.
    double eval_raw(std::complex<double> z) const;
    // Re(F(z) - F(z0)).
    double eval_from(std::complex<double> z, std::complex<double> z0) const;
    // d/dz rational_part + sum coeff/(z - pole); equals the integrand.
    RationalFunction derivative() const;

    std::vector<std::complex<double>> singular_points() const;
};

ClosedFormIntegral antiderivative(const RationalFunction& r);

double eval_real_part(const ClosedFormIntegral& c, std::complex<double> z,
                      std::complex<double> z0);

struct MetricSample {
    double h1 = 0;     // 4 (Im g1)^2 |f1|^2
    double h2 = 0;
    double h_hat = 0;  // -4 (Im ghat)^2 |fhat|^2_D (indefinite)
    double h_E3 = 0;   // 2 (1 + |ghat|^2_D)^2 |fhat|^2_D
    double h_E3_abs = 0;  // same with |fhat|^2_D replaced by its absolute value
    SplitComplex<double> ghat{};
    SplitComplex<double> fhat{};
};

struct SurfaceOptions {
    std::optional<double> base1;  // per-factor real base point
    std::optional<double> base2;
    bool auto_base = false;  // pick midpoints of the largest pole-free gaps
    double delta = 0.05;     // light-cone exclusion band
};

// The assembled timelike surface Xhat = (X1 + X2)/2 restricted to D.
class SurfaceModel {
public:
    SurfaceModel(const BicomplexWeierstrass& data, const SurfaceOptions& opt = {});

    std::array<double, 3> eval_maximal(int factor, std::complex<double> z) const;
    std::array<double, 3> eval_timelike(double x1, double x4) const;
    MetricSample metrics_at(double x1, double x4) const;

    // Real light-cone offsets: lines {x1+x4 = p} (factor 1) / {x1-x4 = q}.
    const std::vector<double>& lines1() const { return lines1_; }
    const std::vector<double>& lines2() const { return lines2_; }
    double delta() const { return delta_; }
    bool in_exclusion_band(double x1, double x4) const;

    const ClosedFormIntegral& component(int coord, int factor) const {
        return comp_[coord][factor - 1];
    }
    std::optional<double> base(int factor) const { return factor == 1 ? base1_ : base2_; }

    const BicomplexWeierstrass& data() const { return data_; }

private:
    BicomplexWeierstrass data_;
    std::array<std::array<ClosedFormIntegral, 2>, 3> comp_;  // [coord][factor-1]
    std::optional<double> base1_, base2_;
    std::vector<double> lines1_, lines2_;
    double delta_ = 0.05;
};

// Midpoint of the largest gap between consecutive sorted pole locations;
// pole+1 for a single pole, 0 when there are none.
double default_base_point(const std::vector<double>& poles);

} // namespace tml
