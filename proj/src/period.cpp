#include "tml/period.hpp"

#include <algorithm>
#include <map>

#include "tml/errors.hpp"

namespace tml {

WeierstrassPair::WeierstrassPair(RationalFunction g_, RationalFunction f_, GQ base)
    : g(std::move(g_)), f(std::move(f_)), base_point(std::move(base)) {
    if (!g.is_conjugate_symmetric())
        throw NotConjugateSymmetric("g is not conjugate-symmetric");
    if (!f.is_conjugate_symmetric())
        throw NotConjugateSymmetric("f is not conjugate-symmetric");
}

std::array<RationalFunction, 3> build_alpha(const WeierstrassPair& w) {
    RationalFunction one = RationalFunction::constant(gq(1));
    RationalFunction g2 = w.g * w.g;
    return {(one - g2) * w.f, w.g * w.f * gq(2), (one + g2) * w.f};
}

std::vector<Pole> alpha_poles(const WeierstrassPair& w) {
    std::map<std::pair<Rational, Rational>, std::pair<GQ, int>> acc;
    bool inf = false;
    int inf_ord = 0;
    for (const auto& comp : build_alpha(w)) {
        for (const auto& p : comp.poles_with_orders()) {
            if (p.at_infinity) {
                inf = true;
                inf_ord = std::max(inf_ord, p.order);
                continue;
            }
            auto key = std::make_pair(p.location.re, p.location.im);
            auto it = acc.find(key);
            if (it == acc.end())
                acc[key] = {p.location, p.order};
            else
                it->second.second = std::max(it->second.second, p.order);
        }
    }
    std::vector<Pole> out;
    for (const auto& [k, v] : acc) out.push_back({false, v.first, v.second});
    if (inf) out.push_back({true, {}, inf_ord});
    return out;
}

PeriodReport check_period(const WeierstrassPair& w, PeriodMode mode) {
    PeriodReport rep;
    rep.mode = mode;
    auto alpha = build_alpha(w);
    for (int c = 0; c < 3; ++c) {
        for (const auto& p : alpha[c].poles_with_orders()) {
            if (p.at_infinity) continue;
            GQ res = alpha[c].residue_at(p.location);
            bool ok = (mode == PeriodMode::strict) ? res.is_zero() : res.is_real();
            rep.entries.push_back({p.location, c, res, ok});
            rep.pass = rep.pass && ok;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exact nullspace

std::vector<ExactVector> nullspace(const std::vector<ExactVector>& rows, int cols) {
    std::vector<ExactVector> m = rows;
    int nrows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational factor = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<ExactVector> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        ExactVector v(cols, Rational(0));
        v[c] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -m[i][c];
        // Integer-scale: clear denominators, divide by content, make the
        // first nonzero entry positive.
        mpz_class l(1);
        for (const auto& x : v) l = lcm(l, x.get_den());
        mpz_class g(0);
        for (auto& x : v) {
            x *= Rational(l);
            x.canonicalize();
            g = gcd(g, x.get_num());
        }
        if (g != 0)
            for (auto& x : v) { x /= Rational(g); x.canonicalize(); }
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Period system

RationalFunction ansatz_f(const std::vector<Rational>& finite_poles, const ExactVector& v) {
    int na = static_cast<int>(finite_poles.size());
    RationalFunction acc;
    for (int i = 0; i < na; ++i)
        if (v[i] != 0)
            acc = acc + RationalFunction::pole_term(GQ(v[i]), GQ(finite_poles[i]), 2);
    std::vector<GQ> poly(v.size() - na);
    for (size_t j = na; j < v.size(); ++j) poly[j - na] = GQ(v[j]);
    return acc + RationalFunction(Polynomial(std::move(poly)));
}

std::pair<PeriodSystem, std::vector<ExactVector>> solve_period_system(
    const RationalFunction& g, const std::vector<Rational>& finite_poles) {
    if (!g.is_conjugate_symmetric())
        throw NotConjugateSymmetric("period system requires conjugate-symmetric g");
    for (size_t i = 0; i < finite_poles.size(); ++i)
        for (size_t j = i + 1; j < finite_poles.size(); ++j)
            if (finite_poles[i] == finite_poles[j])
                throw Error("finite poles must be distinct");
    for (const auto& p : g.poles_with_orders()) {
        if (p.at_infinity) continue;
        if (!p.location.is_real())
            throw IrrationalPole("g has a non-real pole");
        if (std::find(finite_poles.begin(), finite_poles.end(), p.location.re) ==
            finite_poles.end())
            throw Error("g has a pole outside the declared end set");
    }

    PeriodSystem sys;
    sys.pole_set = finite_poles;
    sys.n = static_cast<int>(finite_poles.size()) + 1;
    sys.num_a = sys.n - 1;
    int cols = 3 * sys.n - 2;
    for (int i = 1; i <= sys.num_a; ++i) sys.unknowns.push_back("a" + std::to_string(i));
    for (int j = 0; j <= 2 * sys.n - 2; ++j) sys.unknowns.push_back("b" + std::to_string(j));

    // Basis functions of the ansatz, in unknown order.
    std::vector<RationalFunction> basis_funcs;
    for (const auto& p : finite_poles)
        basis_funcs.push_back(RationalFunction::pole_term(gq(1), GQ(p), 2));
    for (int j = 0; j <= 2 * sys.n - 2; ++j)
        basis_funcs.push_back(RationalFunction(Polynomial::identity().pow(j)));

    const RationalFunction g2 = g * g;
    for (const auto& p : finite_poles) {
        for (const RationalFunction* w : {&g, &g2}) {
            ExactVector row(cols);
            for (int c = 0; c < cols; ++c) {
                GQ res = (*w * basis_funcs[c]).residue_at(GQ(p));
                if (!res.is_real())
                    throw Error("period system entry has nonzero imaginary part");
                row[c] = res.re;
            }
            sys.matrix.push_back(std::move(row));
        }
    }

    auto basis = nullspace(sys.matrix, cols);
    if (basis.empty()) throw EmptyNullspace("period system has empty nullspace");
    if (static_cast<int>(basis.size()) < sys.n)
        throw Error("nullspace dimension below n; internal consistency failure");
    return {std::move(sys), std::move(basis)};
}

SolutionChoice choose_solution(const std::vector<ExactVector>& basis, int num_a) {
    if (basis.empty()) throw EmptyNullspace("choose_solution: empty basis");
    int dim = static_cast<int>(basis.size());
    int cols = static_cast<int>(basis[0].size());
    // Candidate coefficients, smallest first: 0, 1, -1, 2.
    static const long kVals[4] = {0, 1, -1, 2};

    auto combine = [&](const std::vector<int>& idx) {
        ExactVector v(cols, Rational(0));
        for (int d = 0; d < dim; ++d) {
            if (kVals[idx[d]] == 0) continue;
            for (int c = 0; c < cols; ++c) v[c] += Rational(kVals[idx[d]]) * basis[d][c];
        }
        return v;
    };
    auto count_nonzero_a = [&](const ExactVector& v) {
        int k = 0;
        for (int i = 0; i < num_a && i < cols; ++i)
            if (v[i] != 0) ++k;
        return k;
    };

    auto count_nonzero = [](const ExactVector& v) {
        int k = 0;
        for (const auto& x : v)
            if (x != 0) ++k;
        return k;
    };

    ExactVector best;
    int best_a = -1, best_total = -1;
    // Full lexicographic scan for small bases; otherwise fall back to the
    // sum of all basis vectors (still deterministic).
    if (dim <= 8) {
        std::vector<int> idx(dim, 0);
        while (true) {
            ExactVector v = combine(idx);
            int total = count_nonzero(v);
            if (total > 0) {
                int na = count_nonzero_a(v);
                // Strict improvement keeps the lexicographically first winner.
                if (na > best_a || (na == best_a && total > best_total)) {
                    best_a = na;
                    best_total = total;
                    best = v;
                }
            }
            int d = dim - 1;
            while (d >= 0 && idx[d] == 3) idx[d--] = 0;
            if (d < 0) break;
            ++idx[d];
        }
    } else {
        ExactVector v(cols, Rational(0));
        for (const auto& b : basis)
            for (int c = 0; c < cols; ++c) v[c] += b[c];
        best = (count_nonzero(v) > 0) ? v : basis[0];
        best_a = count_nonzero_a(best);
    }

    SolutionChoice choice;
    choice.vector = std::move(best);
    for (int i = 0; i < num_a; ++i)
        if (choice.vector[i] == 0) choice.a_zero.push_back(i + 1);
    choice.rationale = "maximized nonzero a-entries (" + std::to_string(best_a) + "/" +
                       std::to_string(num_a) + "), then nonzero entries, lexicographically first";
    return choice;
}

RationalFunction augment_weak_complete(const RationalFunction& g, const RationalFunction& f,
                                       const Rational& p, int n) {
    // Constraint poles: every finite end, i.e. the real poles of g plus p.
    std::vector<Rational> ends;
    for (const auto& q : g.poles_with_orders()) {
        if (q.at_infinity) continue;
        if (!q.location.is_real()) throw IrrationalPole("g has a non-real pole");
        ends.push_back(q.location.re);
    }
    if (std::find(ends.begin(), ends.end(), p) == ends.end()) ends.push_back(p);
    std::sort(ends.begin(), ends.end());

    int cols = 2 * n;
    std::vector<RationalFunction> basis_funcs;
    for (int l = 1; l <= cols; ++l)
        basis_funcs.push_back(RationalFunction::pole_term(gq(1), GQ(p), 2 + l));

    const RationalFunction g2 = g * g;
    std::vector<ExactVector> rows;
    for (const auto& q : ends) {
        for (const RationalFunction* w : {&g, &g2}) {
            ExactVector row(cols);
            for (int c = 0; c < cols; ++c) {
                GQ res = (*w * basis_funcs[c]).residue_at(GQ(q));
                if (!res.is_real())
                    throw Error("augmentation system entry has nonzero imaginary part");
                row[c] = res.re;
            }
            rows.push_back(std::move(row));
        }
    }
    auto basis = nullspace(rows, cols);
    if (basis.empty())
        throw EmptyNullspace("weak-complete augmentation system has no nonzero solution");

    RationalFunction correction;
    for (int c = 0; c < cols; ++c)
        if (basis[0][c] != 0)
            correction = correction + basis_funcs[c] * GQ(basis[0][c]);
    // Sanity: adding the correction must not disturb the strict residues of f.
    (void)f;
    return correction;
}

BicomplexWeierstrass assemble_bicomplex(const WeierstrassPair& w1, const WeierstrassPair& w2) {
    for (const WeierstrassPair* w : {&w1, &w2}) {
        auto rep = check_period(*w, PeriodMode::real_residue);
        if (!rep.pass) throw PeriodViolation("factor fails the real-residue period condition");
    }
    auto p1 = alpha_poles(w1);
    auto p2 = alpha_poles(w2);
    auto finite = [](const std::vector<Pole>& ps) {
        std::vector<Pole> out;
        for (const auto& p : ps)
            if (!p.at_infinity) out.push_back(p);
        return out;
    };
    auto f1 = finite(p1), f2 = finite(p2);
    if (f1.size() != f2.size())
        throw OrderMismatch("factors declare different numbers of finite ends");
    BicomplexWeierstrass out{w1, w2, {}};
    for (size_t i = 0; i < f1.size(); ++i) {
        if (f1[i].order != f2[i].order)
            throw OrderMismatch("pole order mismatch at paired end " + std::to_string(i));
        out.ends.push_back({f1[i].location, f2[i].location, f1[i].order, f2[i].order});
    }
    return out;
}

} // namespace tml
