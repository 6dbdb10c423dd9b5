#include "tml/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tml/errors.hpp"

namespace tml {

namespace {

// Real light-cone offsets for a factor: real poles of g and of the alpha
// components (F is undefined on the former; the surface domain excludes the
// latter).
std::vector<double> factor_lines(const WeierstrassPair& w) {
    std::vector<double> out;
    for (const auto& [loc, ord] : w.g.poles_numeric())
        if (std::fabs(loc.imag()) < 1e-12) out.push_back(loc.real());
    for (const auto& p : alpha_poles(w))
        if (!p.at_infinity && p.location.is_real()) out.push_back(p.location.re.get_d());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
              out.end());
    return out;
}

bool near_any(double x, const std::vector<double>& lines, double delta) {
    for (double p : lines)
        if (std::fabs(x - p) < delta) return true;
    return false;
}

} // namespace

SingularCurve extract_singular_set(const WeierstrassPair& w1, const WeierstrassPair& w2,
                                   const Box& box, int grid_n, double delta,
                                   double refine_tol) {
    if (!w1.g.is_conjugate_symmetric() || !w2.g.is_conjugate_symmetric())
        throw NotConjugateSymmetric("singular-set extraction needs conjugate-symmetric g");
    auto lines1 = factor_lines(w1);
    auto lines2 = factor_lines(w2);

    auto F = [&](double x1, double x4) {
        return w1.g.eval_real(x1 + x4) - w2.g.eval_real(x1 - x4);
    };
    auto valid = [&](double x1, double x4) {
        return !near_any(x1 + x4, lines1, delta) && !near_any(x1 - x4, lines2, delta);
    };

    int n = std::max(grid_n, 2);
    double hx = (box.x1_max - box.x1_min) / (n - 1);
    double hy = (box.x4_max - box.x4_min) / (n - 1);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) xs[i] = box.x1_min + i * hx;
    for (int j = 0; j < n; ++j) ys[j] = box.x4_min + j * hy;

    std::vector<std::vector<double>> val(n, std::vector<double>(n));
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ok[i][j] = valid(xs[i], ys[j]);
            val[i][j] = ok[i][j] ? F(xs[i], ys[j]) : 0.0;
        }

    // A vertex sits on a grid edge with a sign change; refine by bisection.
    struct EdgeKey {
        int i, j, dir;  // dir 0: (i,j)-(i+1,j), dir 1: (i,j)-(i,j+1)
        bool operator<(const EdgeKey& o) const {
            return std::tie(i, j, dir) < std::tie(o.i, o.j, o.dir);
        }
    };
    std::map<EdgeKey, std::array<double, 2>> verts;
    double residual = 0.0;

    auto vertex_on = [&](EdgeKey e) {
        auto it = verts.find(e);
        if (it != verts.end()) return it->second;
        double ax = xs[e.i], ay = ys[e.j];
        double bx = (e.dir == 0) ? xs[e.i + 1] : xs[e.i];
        double by = (e.dir == 0) ? ys[e.j] : ys[e.j + 1];
        double fa = val[e.i][e.j];
        double fb = (e.dir == 0) ? val[e.i + 1][e.j] : val[e.i][e.j + 1];
        for (int it2 = 0; it2 < 200; ++it2) {
            double mx = 0.5 * (ax + bx), my = 0.5 * (ay + by);
            double fm = F(mx, my);
            if (std::fabs(fm) <= refine_tol * 0.5) {
                ax = bx = mx;
                ay = by = my;
                fa = fm;
                break;
            }
            if ((fa < 0) == (fm < 0)) {
                ax = mx; ay = my; fa = fm;
            } else {
                bx = mx; by = my; fb = fm;
            }
        }
        (void)fb;
        std::array<double, 2> v{0.5 * (ax + bx), 0.5 * (ay + by)};
        residual = std::max(residual, std::fabs(F(v[0], v[1])));
        verts[e] = v;
        return v;
    };

    // Marching squares; corners counterclockwise (i,j),(i+1,j),(i+1,j+1),(i,j+1).
    std::map<EdgeKey, std::vector<EdgeKey>> adj;
    auto link = [&](EdgeKey a, EdgeKey b) {
        vertex_on(a);
        vertex_on(b);
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
            if (!(ok[i][j] && ok[i + 1][j] && ok[i + 1][j + 1] && ok[i][j + 1])) continue;
            bool s00 = val[i][j] >= 0, s10 = val[i + 1][j] >= 0;
            bool s11 = val[i + 1][j + 1] >= 0, s01 = val[i][j + 1] >= 0;
            int code = (s00 ? 1 : 0) | (s10 ? 2 : 0) | (s11 ? 4 : 0) | (s01 ? 8 : 0);
            if (code == 0 || code == 15) continue;
            EdgeKey bottom{i, j, 0}, right{i + 1, j, 1}, top{i, j + 1, 0}, left{i, j, 1};
            switch (code) {
                case 1: case 14: link(bottom, left); break;
                case 2: case 13: link(bottom, right); break;
                case 3: case 12: link(left, right); break;
                case 4: case 11: link(right, top); break;
                case 6: case 9: link(bottom, top); break;
                case 7: case 8: link(left, top); break;
                case 5: case 10: {
                    double center = 0.25 * (val[i][j] + val[i + 1][j] + val[i + 1][j + 1] +
                                            val[i][j + 1]);
                    bool sc = center >= 0;
                    if ((code == 5) == sc) {
                        link(bottom, right);
                        link(left, top);
                    } else {
                        link(bottom, left);
                        link(right, top);
                    }
                    break;
                }
            }
        }

    // Chain edge-vertices into polylines.
    SingularCurve out;
    out.residual = residual;
    std::map<EdgeKey, bool> used;
    for (const auto& [k, nbrs] : adj) {
        if (used[k] || nbrs.size() > 2) continue;
        if (nbrs.size() == 2) continue;  // start from endpoints first
        std::vector<std::array<double, 2>> line;
        EdgeKey cur = k, prev = k;
        used[cur] = true;
        line.push_back(verts[cur]);
        while (true) {
            const auto& nb = adj[cur];
            EdgeKey next = cur;
            bool found = false;
            for (const auto& cand : nb)
                if (!used[cand]) { next = cand; found = true; break; }
            if (!found) break;
            prev = cur;
            cur = next;
            used[cur] = true;
            line.push_back(verts[cur]);
        }
        (void)prev;
        if (line.size() >= 2) out.polylines.push_back(std::move(line));
    }
    // Closed loops: everything of degree 2 not yet used.
    for (const auto& [k, nbrs] : adj) {
        if (used[k]) continue;
        std::vector<std::array<double, 2>> line;
        EdgeKey cur = k;
        used[cur] = true;
        line.push_back(verts[cur]);
        while (true) {
            bool found = false;
            for (const auto& cand : adj[cur])
                if (!used[cand]) { cur = cand; used[cur] = true;
                    line.push_back(verts[cur]); found = true; break; }
            if (!found) break;
        }
        line.push_back(verts[k]);  // close the loop
        if (line.size() >= 3) out.polylines.push_back(std::move(line));
    }

    double margin_x = hx, margin_y = hy;
    for (const auto& line : out.polylines)
        for (const auto& v : line)
            if (v[0] < box.x1_min + margin_x || v[0] > box.x1_max - margin_x ||
                v[1] < box.x4_min + margin_y || v[1] > box.x4_max - margin_y)
                out.bounded_flag = false;
    return out;
}

CompactnessReport check_compactness(const WeierstrassPair& w1, const WeierstrassPair& w2,
                                    const SingularCurve& sing, const Box& box,
                                    const Interval& a1, const Interval& a2, double delta) {
    CompactnessReport rep;
    auto lines1 = factor_lines(w1);
    auto lines2 = factor_lines(w2);

    // Identically-zero test for the whole-domain case of the discreteness
    // dichotomy; grid-based, heuristic.
    int n = 101;
    bool all_zero = true, any_valid = false;
    for (int i = 0; i < n && all_zero; ++i)
        for (int j = 0; j < n; ++j) {
            double x1 = box.x1_min + i * (box.x1_max - box.x1_min) / (n - 1);
            double x4 = box.x4_min + j * (box.x4_max - box.x4_min) / (n - 1);
            if (near_any(x1 + x4, lines1, delta) || near_any(x1 - x4, lines2, delta))
                continue;
            any_valid = true;
            double F = w1.g.eval_real(x1 + x4) - w2.g.eval_real(x1 - x4);
            if (std::fabs(F) > 1e-12) { all_zero = false; break; }
        }

    if (any_valid && all_zero) {
        rep.classification = "whole";
        rep.note = "F identically zero on the sample grid; singular set is the whole domain";
    } else if (!sing.polylines.empty()) {
        rep.classification = "curve";
        rep.note = "F not identically zero and vanishes along curves; neither a discrete "
                   "point set nor the whole domain on this grid (heuristic)";
    } else {
        rep.classification = "empty";
        rep.note = "no zero crossings found on the grid";
    }

    rep.contained = true;
    for (const auto& line : sing.polylines)
        for (const auto& v : line)
            if (!a1.contains(v[0] + v[1]) || !a2.contains(v[0] - v[1]))
                rep.contained = false;
    return rep;
}

std::vector<double> branch_points(const WeierstrassPair& w, const Interval& box) {
    std::vector<double> out;
    const Polynomial& num = w.f.num();
    if (num.degree() <= 0) return out;
    try {
        for (const auto& [loc, mult] : exact_roots(num)) {
            if (!loc.is_real()) continue;
            double x = loc.re.get_d();
            if (box.contains(x)) out.push_back(x);
        }
    } catch (const IrrationalPole&) {
        // Bisection on sign changes of the numerator.
        const int scan = 8192;
        auto p = [&](double x) { return num.eval(std::complex<double>(x, 0.0)).real(); };
        double prev = p(box.lo);
        for (int k = 1; k <= scan; ++k) {
            double x = box.lo + k * (box.hi - box.lo) / scan;
            double cur = p(x);
            if ((prev < 0) != (cur < 0)) {
                double a = box.lo + (k - 1) * (box.hi - box.lo) / scan, b = x;
                for (int it = 0; it < 100; ++it) {
                    double m = 0.5 * (a + b);
                    if ((p(a) < 0) == (p(m) < 0)) a = m; else b = m;
                }
                out.push_back(0.5 * (a + b));
            }
            prev = cur;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

EndDescriptor classify_end(const WeierstrassPair& w1, const WeierstrassPair& w2,
                           int end_index) {
    auto assembled = assemble_bicomplex(w1, w2);
    if (end_index < 0 || end_index >= static_cast<int>(assembled.ends.size()))
        throw Error("end index out of range");
    const PairedEnd& end = assembled.ends[end_index];
    if (!end.p1.is_real() || !end.p2.is_real())
        throw Error("paired end is not real");

    EndDescriptor d;
    d.p1 = end.p1.re;
    d.p2 = end.p2.re;

    const WeierstrassPair* ws[2] = {&w1, &w2};
    const GQ ps[2] = {end.p1, end.p2};
    for (int k = 0; k < 2; ++k) {
        auto alpha = build_alpha(*ws[k]);
        int max_ord = 0;
        for (const auto& comp : alpha) {
            int ord = comp.pole_order_at(ps[k]);
            max_ord = std::max(max_ord, ord);
        }
        if (max_ord != 2) {
            d.simple = false;
            throw NotSimpleEnd("alpha pole order " + std::to_string(max_ord) +
                               " at the end (need exactly 2)");
        }
        GQ a1 = alpha[0].laurent_coeff(ps[k], 2);
        GQ a3 = alpha[2].laurent_coeff(ps[k], 2);
        if (a1 != a3)
            throw UnclassifiableEnd("first/third alpha principal coefficients differ");
        if (!a1.is_real() || a1.is_zero())
            throw UnclassifiableEnd("leading end coefficient not real nonzero");

        // Log pattern: residues of the alpha components at the end.
        GQ L1 = alpha[0].residue_at(ps[k]);
        GQ L2 = alpha[1].residue_at(ps[k]);
        GQ L3 = alpha[2].residue_at(ps[k]);
        if (!L1.is_real() || !L2.is_real() || !L3.is_real())
            throw UnclassifiableEnd("non-real residue at the end");

        FactorEnd fe;
        fe.a = a1.re.get_d();
        if (L1.is_zero() && L3.is_zero()) {
            fe.type = 1;  // log (if any) in the second coordinate
            fe.c = L2.re.get_d();
        } else if (L2.is_zero() && L1 == L3) {
            fe.type = 2;  // log in the first/third coordinates
            fe.c = L1.re.get_d();
        } else {
            throw UnclassifiableEnd("log-term pattern matches neither normal form");
        }
        d.factor[k] = fe;
    }
    d.combined_type = (d.factor[0].type == 1)
                          ? (d.factor[1].type == 1 ? 1 : 2)
                          : (d.factor[1].type == 1 ? 3 : 4);
    return d;
}

AsymptoticTable asymptotic_residual(const SurfaceModel& m, const EndDescriptor& d,
                                    const std::vector<double>& radii) {
    if (!d.simple) throw NotSimpleEnd("asymptotic model needs a simple end");
    double p[2] = {d.p1.get_d(), d.p2.get_d()};

    // Model per factor and coordinate: principal part of the closed-form
    // antiderivative at the end plus its log term; evaluated at offset w.
    struct Term { double coeff; int order; };
    std::vector<Term> principal[2][3];
    double logc[2][3] = {};
    for (int k = 0; k < 2; ++k) {
        GQ pk = (k == 0) ? GQ(d.p1) : GQ(d.p2);
        for (int c = 0; c < 3; ++c) {
            const auto& ci = m.component(c, k + 1);
            int ord = ci.rational_part.pole_order_at(pk);
            for (int mm = 1; mm <= ord; ++mm) {
                GQ coeff = ci.rational_part.laurent_coeff(pk, mm);
                if (!coeff.is_zero()) principal[k][c].push_back({coeff.re.get_d(), mm});
            }
            for (const auto& t : ci.log_terms)
                if (t.pole == pk) logc[k][c] += t.coeff.get_d();
        }
    }

    AsymptoticTable table;
    table.radii = radii;
    for (double r : radii) {
        double worst = 0.0, model_mag = 1.0;
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                double b1 = p[0] + e1 * r, b2 = p[1] + e2 * r;
                auto x1v = m.eval_maximal(1, {b1, 0.0});
                auto x2v = m.eval_maximal(2, {b2, 0.0});
                for (int c = 0; c < 3; ++c) {
                    double model = 0.0;
                    double w[2] = {e1 * r, e2 * r};
                    for (int k = 0; k < 2; ++k) {
                        for (const auto& t : principal[k][c])
                            model += t.coeff / std::pow(w[k], t.order);
                        model += logc[k][c] * std::log(r);
                    }
                    model *= 0.5;
                    double surf = 0.5 * (x1v[c] + x2v[c]);
                    worst = std::max(worst, std::fabs(surf - model));
                    model_mag = std::max(model_mag, std::fabs(model));
                }
            }
        table.residuals.push_back(worst);
        table.ratios.push_back(worst / model_mag);
    }
    return table;
}

} // namespace tml
