// Per-genus scenario drivers: end-to-end constructions and their
// certificates.
//
// Genera 8 and 9 are handled by direct monad sampling with the 0-regularity
// shortcut.  Genera 10..13 run the blown-up cubic surface construction: a
// nodal plane model, its strict transform C, the auxiliary twisted cubic C0
// (and for 12, 13 the line L over the conic through P1..P5), a surjection
// delta onto omega_C(2) assembled from sections on the surface, and the rank
// checks that the monad and global-generation conditions require.  Genera
// 5..7 use the rank-2 reflexive-sheaf route over a random rational curve.

#ifndef MONADCERT_SCENARIOS_HPP
#define MONADCERT_SCENARIOS_HPP

#include <algorithm>

#include "monadcert/cohomology.hpp"
#include "monadcert/report.hpp"

namespace monadcert {
namespace scenario {

// ---------------------------------------------------------------------------
// Shared helpers.
// ---------------------------------------------------------------------------

inline void two_route(long long a, long long b, const char* what) {
    ++stats().two_route_checks;
    require(a == b, what);
}

inline SheafExpr ideal_expr(const SpaceCurve& c) {
    return SheafExpr{IdealSheafNode{SubschemeData{{c}, {}, {}}}};
}
inline SheafExpr ideal_expr(const std::vector<LineInSpace>& lines,
                            const std::vector<Point3>& points) {
    return SheafExpr{IdealSheafNode{SubschemeData{{}, lines, points}}};
}

// exact division of plane forms, via the linear system it must solve
inline Form exact_divide_plane(const Form& f, const Form& g) {
    require(f.nvars == 3 && g.nvars == 3 && f.degree >= g.degree, "plane division expected");
    FieldMatrix m = mult_matrix(g, f.degree - g.degree);
    auto sol = m.solve(f.c);
    if (!sol) throw CheckFailure("not divisible");
    return form_from_vector(f.F, 3, f.degree - g.degree, *sol);
}

struct SplitLineChoice {
    Form ell;                       // the plane line
    std::vector<P1Point> c_params;  // parameters of C cap L0 on the model of C
    int attempts = 0;
};

// scan random plane lines until one avoids P1..P6, meets the plane model of C
// in deg-many distinct rational points, and (when given) meets gamma in two
// distinct points off the model curve
inline std::optional<SplitLineChoice> find_split_line(const CubicSurfaceModel& X,
                                                      const PlaneModelCurve& Cm,
                                                      const Form* gamma, SplitMix64& rng,
                                                      int max_scan = 4000) {
    Zp F = X.F;
    for (int attempt = 1; attempt <= max_scan; ++attempt) {
        Form ell = Form::random(F, 3, 1, rng);
        if (ell.is_zero()) continue;
        bool misses = true;
        for (int i = 0; i < 6 && misses; ++i)
            if (ell.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) == 0) misses = false;
        if (!misses) continue;
        Form cut = compose(ell, Cm.phi);
        if (cut.is_zero() || !is_squarefree(cut)) continue;
        auto roots = roots_in_Fp(cut);
        if (static_cast<int>(roots.size()) != cut.degree) continue;
        if (gamma) {
            PlaneModelCurve lm = line_model(X, ell);
            Form on_gamma = compose(*gamma, lm.phi);
            Form model_cut = compose(Cm.equation, lm.phi);
            if (!is_squarefree(on_gamma)) continue;
            if (binary_gcd(on_gamma, model_cut).degree != 0) continue;
        }
        return SplitLineChoice{ell, roots, attempt};
    }
    return std::nullopt;
}

// hypotheses on three mutually disjoint lines and a point set: the points see
// no quadric through Y, and removing any one line leaves no quadric through
// the remaining two lines and the points
struct LinesPointsHypotheses {
    bool lines_disjoint_all = false;
    bool points_off_lines = false;
    bool points_not_coplanar = false;
    long long h0_quadrics_through_Y = 0;
    bool points_off_quadric = false;
    bool partial_quadrics_vanish = false;
    bool pass() const {
        return lines_disjoint_all && points_off_lines && points_not_coplanar &&
               h0_quadrics_through_Y == 1 && points_off_quadric && partial_quadrics_vanish;
    }
};

inline LinesPointsHypotheses check_lines_points_hypotheses(Zp F,
                                                           const std::vector<LineInSpace>& Y,
                                                           const std::vector<Point3>& W) {
    require(Y.size() == 3, "three lines expected");
    LinesPointsHypotheses out;
    out.lines_disjoint_all = lines_disjoint(F, Y[0], Y[1]) && lines_disjoint(F, Y[0], Y[2]) &&
                             lines_disjoint(F, Y[1], Y[2]);
    out.points_off_lines = true;
    for (const Point3& p : W)
        for (const LineInSpace& L : Y)
            if (point_on_line(F, p, L)) out.points_off_lines = false;
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j)
            if (points_equal(F, W[i], W[j])) out.points_off_lines = false;
    out.points_not_coplanar = W.size() < 4 || no_four_coplanar(F, W);
    if (!out.lines_disjoint_all || !out.points_off_lines || !out.points_not_coplanar) return out;

    FieldMatrix cond = detail::ideal_condition_matrix(F, {{}, Y, {}}, 2);
    FieldMatrix ker = cond.kernel_basis();
    out.h0_quadrics_through_Y = static_cast<long long>(ker.cols());
    if (ker.cols() == 1) {
        Form q = Form::zero(F, 4, 2);
        for (std::size_t i = 0; i < 10; ++i) q.c[i] = ker.at(i, 0);
        out.points_off_quadric = off_quadric(W, q);
    }
    out.partial_quadrics_vanish = true;
    for (std::size_t drop = 0; drop < 3; ++drop) {
        std::vector<LineInSpace> rest;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != drop) rest.push_back(Y[i]);
        if (h0(F, ideal_expr(rest, W), 2) != 0) out.partial_quadrics_vanish = false;
    }
    return out;
}

// binary form whose roots are the parameters where the curve meets the line
// (gcd of the 3x3 minors of the two spanning points stacked over nu)
inline Form line_meeting_factor(Zp F, const std::vector<Form>& nu, const LineInSpace& L) {
    auto minor2 = [&](int i, int j) {
        return F.sub(F.mul(L.a[static_cast<std::size_t>(i)], L.b[static_cast<std::size_t>(j)]),
                     F.mul(L.a[static_cast<std::size_t>(j)], L.b[static_cast<std::size_t>(i)]));
    };
    std::vector<Form> dets;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                Form det = nu[static_cast<std::size_t>(i)].scaled(minor2(j, k)) -
                           nu[static_cast<std::size_t>(j)].scaled(minor2(i, k)) +
                           nu[static_cast<std::size_t>(k)].scaled(minor2(i, j));
                if (!det.is_zero()) dets.push_back(det);
            }
    require(!dets.empty(), "line_meeting_factor: degenerate data");
    return binary_gcd(dets);
}

// distinct random parameters on P^1 avoiding the rational roots of the given forms
inline std::vector<P1Point> pick_params(Zp F, int count, const std::vector<Form>& avoid,
                                        SplitMix64& rng) {
    std::vector<P1Point> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && ++guard < 10000) {
        P1Point v{1, rng.field_element(F)};
        bool ok = true;
        for (const P1Point& w : out)
            if (w == v) ok = false;
        for (const Form& f : avoid)
            if (!f.is_zero() && eval_p1(f, v) == 0) ok = false;
        if (ok) out.push_back(v);
    }
    if (static_cast<int>(out.size()) != count) throw CheckFailure("parameter sampling exhausted");
    return out;
}

// rank-2 kernel bundle on X at twist l: components O_X(l+1) and
// O_X(l) (x) O_X[extra2], acting by s and by psi
inline SurfaceKernelSections kernel_bundle_at(const CubicSurfaceModel& X, int l,
                                              const DivisorClass& extra2, const Form& s,
                                              const Form& psi_on_C, const PlaneModelCurve& Cm) {
    DivisorClass anti = DivisorClass::hyperplane();
    return surface_kernel_sections(
        X, {surface_system(X, anti.scaled(l + 1)), surface_system(X, anti.scaled(l) + extra2)},
        {s, psi_on_C}, Cm);
}

// rank of multiplication H^0(K(l)) (x) S_1 -> H^0(K(l+1)) for a kernel bundle
// on X; S_1 acts through the four anticanonical cubics
inline MultRank kernel_bundle_mult_rank(const CubicSurfaceModel& X,
                                        const SurfaceKernelSections& Kl,
                                        const SurfaceKernelSections& Kl1) {
    Zp F = X.F;
    auto sections = kernel_section_forms(F, Kl);
    long long target = static_cast<long long>(Kl1.basis.cols());
    if (sections.empty()) return {0, target};
    std::vector<std::size_t> offs{0};
    for (std::size_t i = 0; i < Kl1.systems.size(); ++i)
        offs.push_back(offs.back() + graded_dim(3, Kl1.systems[i].plane_degree));
    FieldMatrix prod(F, offs.back(), 4 * sections.size());
    for (std::size_t j = 0; j < 4; ++j) {
        const Form& aj = X.anticanonical[j];
        for (std::size_t col = 0; col < sections.size(); ++col)
            for (std::size_t i = 0; i < sections[col].size(); ++i) {
                Form p = aj * sections[col][i];
                require(graded_dim(3, p.degree) == offs[i + 1] - offs[i],
                        "kernel bundle product degree mismatch");
                for (std::size_t r = 0; r < p.c.size(); ++r)
                    prod.at(offs[i] + r, j * sections.size() + col) = p.c[r];
            }
    }
    return {static_cast<long long>(prod.rank()), target};
}

// ---------------------------------------------------------------------------
// The surface construction shared by genera 10..13.
// ---------------------------------------------------------------------------

struct SurfaceConstruction {
    Zp F{32003};
    int g = 0;
    CubicSurfaceModel X;
    PlaneModelCurve Cm;  // nodal plane model of C
    SpaceCurve C;        // strict transform: degree g - 5 (g <= 11), g - 7 (g >= 12)
    Form ell0;           // the general plane line under C0
    PlaneModelCurve C0m;
    SpaceCurve C0;
    Form s;                         // ell0 restricted to C: a section of omega_C(1)
    std::vector<P1Point> z_params;  // zero divisor of s on the model of C
    std::vector<Point3> Z;

    bool has_gamma = false;  // present for g = 12, 13
    ConicLineData gammaL;
    std::array<Form, 2> t_line_factors;  // planes through L restricted to C

    std::vector<P1Point> w_params;  // divisor of psi on C0
    std::vector<Point3> W;
    Form psi;       // plane member of the psi system
    Form psi_on_C;  // restriction to C
    DivisorClass psi_cls;

    KernelOfNode K;  // the kernel sheaf of delta
    int line_scan_attempts = 0;
    int w_attempts = 0;

    std::vector<Form> delta_sections() const {
        if (g == 10 || g == 11) return {s, psi_on_C};
        return {s, t_line_factors[0] * psi_on_C, t_line_factors[1] * psi_on_C};
    }
    std::vector<int> delta_twists() const {
        if (g == 10 || g == 11) return {1, 0};
        return {1, -1, -1};
    }
    DivisorClass minus_L() const { return DivisorClass{-2, {-1, -1, -1, -1, -1, 0}}; }
};

namespace detail_sc {

inline bool z_predicates(Zp F, int g, const std::vector<Point3>& Z) {
    switch (g) {
        case 11: return no_three_collinear(F, Z) && no_four_coplanar(F, Z);
        case 13: return !coplanar(F, Z[0], Z[1], Z[2], Z[3]);
        case 12:
        case 10: return !collinear(F, Z[0], Z[1], Z[2]);
        default: throw CheckFailure("z_predicates: unsupported genus");
    }
}

// choose the divisor W on C0 subject to the genus-specific hypotheses and
// solve for psi restricting to it
inline void choose_w_and_psi(SurfaceConstruction& sc, SplitMix64& rng, int max_retries) {
    Zp F = sc.F;
    const int g = sc.g;
    sc.psi_cls = (g == 10 || g == 11) ? DivisorClass{4, {1, 1, 1, 1, 1, 1}}
                                      : DivisorClass{6, {2, 2, 2, 2, 2, 1}};
    SurfaceSystem psi_sys = surface_system(sc.X, sc.psi_cls);
    int w_count = static_cast<int>(sc.psi_cls.dot(DivisorClass{1, {0, 0, 0, 0, 0, 0}}));
    FieldMatrix rest = restriction_matrix(sc.X, psi_sys, sc.C0m);
    require(rest.rank() == rest.rows(), "psi restriction to C0 is not surjective");

    // parameters on C0 must avoid C (and the conic line, when present),
    // and the parameters where auxiliary lines meet C0
    std::vector<Form> avoid{compose(sc.Cm.equation, sc.C0m.phi)};
    if (sc.has_gamma) avoid.push_back(compose(sc.gammaL.gamma, sc.C0m.phi));

    LineInSpace l2 = line_transform(sc.X, 0, 2);  // over the line P1 P3
    LineInSpace l3 = line_transform(sc.X, 0, 1);  // over the line P1 P2
    avoid.push_back(line_meeting_factor(F, sc.C0.nu, l2));
    avoid.push_back(line_meeting_factor(F, sc.C0.nu, l3));
    if (g == 11) avoid.push_back(line_meeting_factor(F, sc.C0.nu, line_transform(sc.X, 1, 2)));

    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        sc.w_attempts = attempt;
        std::vector<P1Point> w;
        std::vector<Point3> W;

        if (g == 12) {
            // two points spanning a 2-secant L1 of C0, skew to L2 and L3 and
            // not inside the quadrics through L_i u C0
            FieldMatrix qc2 = FieldMatrix::vstack(pullback_matrix(l2.param, 2),
                                                  pullback_matrix(sc.C0.nu, 2));
            FieldMatrix qc3 = FieldMatrix::vstack(pullback_matrix(l3.param, 2),
                                                  pullback_matrix(sc.C0.nu, 2));
            FieldMatrix q2k = qc2.kernel_basis(), q3k = qc3.kernel_basis();
            if (q2k.cols() != 1 || q3k.cols() != 1) continue;
            Form q2 = form_from_vector(F, 4, 2, q2k.transpose().row(0));
            Form q3 = form_from_vector(F, 4, 2, q3k.transpose().row(0));

            auto all6 = pick_params(F, 6, avoid, rng);
            Point3 p4 = sc.C0.point_at(all6[0]), p5 = sc.C0.point_at(all6[1]);
            LineInSpace l1 = LineInSpace::through(F, p4, p5);
            if (!lines_disjoint(F, l1, l2) || !lines_disjoint(F, l1, l3)) continue;
            if (compose(q2, l1.param).is_zero() || compose(q3, l1.param).is_zero()) continue;

            std::vector<Point3> W4;
            for (std::size_t i = 2; i < 6; ++i) W4.push_back(sc.C0.point_at(all6[i]));
            if (!check_lines_points_hypotheses(F, {l1, l2, l3}, W4).pass()) continue;
            w = all6;
            W = {p4, p5, W4[0], W4[1], W4[2], W4[3]};
        } else {
            w = pick_params(F, w_count, avoid, rng);
            for (const P1Point& v : w) W.push_back(sc.C0.point_at(v));
            if (g == 11) {
                LineInSpace l1 = line_transform(sc.X, 1, 2);
                if (!check_lines_points_hypotheses(F, {l1, l2, l3}, W).pass()) continue;
            }
            if (g == 10) {
                if (h0(F, ideal_expr({l2, l3}, W), 2) != 0) continue;
            }
        }

        Form w_form = binary_from_roots(F, w);
        auto sol = member_with_restriction(sc.X, psi_sys, sc.C0m, w_form);
        if (!sol) continue;
        Form psi = psi_sys.combination(F, *sol);
        Form psi_on_C;
        try {
            psi_on_C = restrict_to_curve(psi, psi_sys.mults, sc.Cm);
        } catch (const CheckFailure&) {
            continue;
        }

        sc.w_params = w;
        sc.W = W;
        sc.psi = psi;
        sc.psi_on_C = psi_on_C;
        KernelOfNode K{sc.delta_twists(), CurveModuleNode{sc.C, 2}, sc.delta_sections(), false};
        if (!check_epi(K)) continue;  // delta must be an epimorphism
        sc.K = K;
        return;
    }
    throw CheckFailure("choice of W and psi exhausted retries");
}

// one full construction attempt; throws CheckFailure on degenerate data
inline SurfaceConstruction attempt(int g, Zp F, SplitMix64& rng, int max_retries) {
    SurfaceConstruction sc;
    sc.F = F;
    sc.g = g;
    sc.X = build_surface(F, rng, max_retries);
    NodalSystem sys = (g == 11 || g == 13) ? NodalSystem::quartic_three_nodes
                                           : NodalSystem::cubic_one_node;
    sc.Cm = build_nodal_model(sc.X, sys, rng, max_retries);
    sc.C = space_curve_from_plane(sc.X, sc.Cm);

    // maximal-rank gates on the auxiliary curve
    SheafExpr ic = ideal_expr(sc.C);
    if (g == 11 || g == 13) {
        if (h0(F, ic, 3) != 1) throw CheckFailure("h0(I_C(3)) != 1");
    } else {
        if (h0(F, ic, 2) != 0) throw CheckFailure("h0(I_C(2)) != 0");
    }
    if (h1(F, ic, 3) != 0) throw CheckFailure("h1(I_C(3)) != 0");

    if (g == 12 || g == 13) {
        sc.has_gamma = true;
        sc.gammaL = gamma6_transform(sc.X, rng);
    }

    auto line = find_split_line(sc.X, sc.Cm, sc.has_gamma ? &sc.gammaL.gamma : nullptr, rng);
    if (!line) throw CheckFailure("no fully split auxiliary line found");
    sc.line_scan_attempts = line->attempts;
    bool z_ok = false;
    for (int attempt = 0; attempt < 64 && !z_ok; ++attempt) {
        sc.ell0 = line->ell;
        sc.z_params = line->c_params;
        sc.Z.clear();
        for (const P1Point& v : sc.z_params) sc.Z.push_back(sc.C.point_at(v));
        z_ok = z_predicates(F, g, sc.Z);
        if (!z_ok) {
            line = find_split_line(sc.X, sc.Cm, sc.has_gamma ? &sc.gammaL.gamma : nullptr, rng);
            if (!line) throw CheckFailure("no fully split auxiliary line found");
            sc.line_scan_attempts += line->attempts;
        }
    }
    if (!z_ok) throw CheckFailure("zero divisor of s fails its genericity predicates");

    sc.C0m = line_model(sc.X, sc.ell0);
    sc.C0 = space_curve_from_plane(sc.X, sc.C0m);
    sc.s = restrict_to_curve(sc.ell0, {0, 0, 0, 0, 0, 0}, sc.Cm);
    require(sc.s.degree == sc.C.degree - 2, "s does not model a section of omega_C(1)");

    if (sc.has_gamma) {
        // the two planes through L restrict to C through members of |H - E6|
        FieldMatrix pts(F, 2, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            pts.at(0, j) = sc.gammaL.line.a[j];
            pts.at(1, j) = sc.gammaL.line.b[j];
        }
        FieldMatrix planes = pts.kernel_basis();
        require(planes.cols() == 2, "pencil of planes through L is not 2-dimensional");
        for (std::size_t i = 0; i < 2; ++i) {
            Form h = Form::zero(F, 4, 1);
            for (std::size_t c = 0; c < 4; ++c) h.c[c] = planes.at(c, i);
            Form on_plane = compose(h, sc.X.anticanonical);  // cubic with simple base points
            Form b_line = exact_divide_plane(on_plane, sc.gammaL.gamma);
            require(b_line.degree == 1, "plane through L has the wrong surface class");
            // class (H - E6) against the model class: degree e - 2
            sc.t_line_factors[i] = restrict_to_curve(b_line, {0, 0, 0, 0, 0, 1}, sc.Cm);
            require(sc.t_line_factors[i].degree == sc.C.degree - 2,
                    "plane through L restricts with the wrong degree");
        }
    }

    choose_w_and_psi(sc, rng, max_retries);
    return sc;
}

}  // namespace detail_sc

inline SurfaceConstruction build_construction(int g, Zp F, SplitMix64& rng, int max_retries,
                                              int* attempts_out = nullptr) {
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        try {
            SurfaceConstruction sc = detail_sc::attempt(g, F, rng, max_retries);
            if (attempts_out) *attempts_out = attempt;
            return sc;
        } catch (const CheckFailure&) {
            continue;
        }
    }
    throw CheckFailure("construction exhausted retries");
}

// ---------------------------------------------------------------------------
// Certificate assembly for the surface constructions.
// ---------------------------------------------------------------------------

inline void add_common_construction_checks(Certificate& cert, const SurfaceConstruction& sc) {
    Zp F = sc.F;
    const int g = sc.g;
    MonadShape shape = shape_for_genus(g);
    SheafExpr ic = ideal_expr(sc.C);
    SheafExpr K{sc.K};
    DualExtension dual{g <= 11 ? std::vector<int>{0, -1} : std::vector<int>{1, 1, -1},
                       make_expr(ideal_expr(sc.C)), sc.C.degree};

    {
        auto& c = cert.add("strict_transform",
                           "C is a rational space curve of degree " + std::to_string(sc.C.degree),
                           sc.C.degree == (g <= 11 ? g - 5 : g - 7));
        c.dims = {{"degree", sc.C.degree}};
    }
    {
        long long h0v = h0(F, ic, 1), h1v = h1(F, ic, 1);
        auto& c = cert.add("curve_linearly_normal",
                           "h0(I_C(1)) = 0 and h1(I_C(1)) = h0(O_C(1)) - 4",
                           h0v == 0 && h1v == sc.C.degree + 1 - 4);
        c.dims = {{"h0_IC_1", h0v}, {"h1_IC_1", h1v}};
    }
    {
        long long h03 = h0(F, ic, 3), h13 = h1(F, ic, 3);
        bool want = (g == 11 || g == 13) ? h03 == 1 : true;
        long long h02 = h0(F, ic, 2);
        bool rank_ok = (g == 11 || g == 13) ? want : h02 == 0;
        auto& c = cert.add("curve_maximal_rank",
                           (g == 11 || g == 13) ? "h0(I_C(3)) = 1 and h1(I_C(3)) = 0"
                                                : "h0(I_C(2)) = 0 and h1(I_C(3)) = 0",
                           rank_ok && h13 == 0);
        c.dims = {{"h0_IC_2", h02}, {"h0_IC_3", h03}, {"h1_IC_3", h13}};
    }
    {
        auto& c = cert.add("section_zero_divisor",
                           "the zero divisor of s consists of deg(omega_C(1)) simple rational "
                           "points in general position",
                           detail_sc::z_predicates(F, g, sc.Z) &&
                               static_cast<int>(sc.Z.size()) == sc.C.degree - 2);
        c.dims = {{"points", static_cast<long long>(sc.Z.size())}};
        c.samples = sc.line_scan_attempts;
    }
    {
        KernelOfNode probe = sc.K;
        auto& c = cert.add("delta_epimorphism",
                           "the section data of delta has no common zero on the model of C",
                           check_epi(probe));
        c.attempts = sc.w_attempts;
    }

    // monad hypotheses via the transports along the defining extensions
    long long h0K_m1 = h0(F, K, -1);
    long long h0F_m1 = h0_F_via_kernel(F, K, -1);
    long long h0Fd_m1 = h0_F_dual(F, dual, -1);
    long long h1F_m2 = h1_F_via_kernel(F, K, -2);
    long long h1Fd_m2 = h1_F_dual(F, dual, -2);
    long long h1Fd_m3 = h1_F_dual(F, dual, -3);
    long long h1F_m1 = h1_F_via_kernel(F, K, -1);
    long long h1Fd_m1 = h1_F_dual(F, dual, -1);
    long long h0Fd_m1_expected = g <= 11 ? 0 : 2;
    two_route(h1F_m2, h2_F_dual(F, dual, -2), "h1(F(-2)) disagrees with h2(F^v(-2))");
    {
        bool hyp = h0F_m1 == 0 && h1F_m2 == 0 && h1Fd_m2 == 0 &&
                   (g <= 11 ? h0Fd_m1 == 0 : (h0Fd_m1 <= 3 && h1Fd_m3 == 0));
        auto& c = cert.add("monad_hypotheses",
                           g <= 11 ? "H0(F(-1)), H0(F^v(-1)), H1(F(-2)), H1(F^v(-2)) all vanish"
                                   : "H0(F(-1)) = 0, h0(F^v(-1)) <= 3, H1(F(-2)) = 0, "
                                     "H1(F^v(-2)) = 0, H1(F^v(-3)) = 0",
                           hyp && h0Fd_m1 == h0Fd_m1_expected);
        c.dims = {{"h0_F_m1", h0F_m1},   {"h0_K_m1", h0K_m1},   {"h0_Fdual_m1", h0Fd_m1},
                  {"h1_F_m2", h1F_m2},   {"h1_Fdual_m2", h1Fd_m2}, {"h1_Fdual_m3", h1Fd_m3}};
    }
    {
        // predicted term counts against the Riemann-Roch route
        ChernData cf = chern_E(g).twist(-2);
        two_route(h1F_m1, -chi_p3(cf, -1), "h1(F(-1)) disagrees with -chi(F(-1))");
        two_route(h1Fd_m1, -chi_p3(cf.dual(), -1) + h0Fd_m1,
                  "h1(F^v(-1)) disagrees with -chi(F^v(-1)) + h0(F^v(-1))");
        bool shape_ok = false;
        long long middle = 0;
        if (g <= 11) {
            shape_ok = h1Fd_m1 == shape.rho && h1F_m1 == shape.tau;
            middle = shape.r + h1Fd_m1 + h1F_m1;
            shape_ok = shape_ok && middle == shape.sigma;
        } else {
            // minimal monad with two extra O(-1) summands in the middle
            long long a = cf.c1 + cf.r - 2 * chi_p3(cf, -1);
            shape_ok = h1Fd_m1 == shape.rho + 2 && h1F_m1 == shape.tau && a == shape.sigma &&
                       h0Fd_m1 == 2;
            middle = a;
        }
        auto& c = cert.add("monad_shape",
                           g <= 11 ? "the monad of F has shape (rho, sigma, tau)"
                                   : "the minimal monad of F has two extra O(-1) middle summands "
                                     "and cancels to shape (rho, sigma, tau)",
                           shape_ok);
        c.dims = {{"rho", shape.rho},      {"sigma", shape.sigma}, {"tau", shape.tau},
                  {"h1_Fdual_m1", h1Fd_m1}, {"h1_F_m1", h1F_m1},    {"middle", middle}};
    }
    {
        long long h1Fd_1 = h1_F_dual(F, dual, 1);
        two_route(h1Fd_1, h1(F, ic, 3), "h1(F^v(1)) disagrees with h1(I_C(3))");
        auto& c = cert.add("beta_dual_sections_surjective",
                           "H0(beta^v(1)) is surjective since H1(F^v(1)) = H1(I_C(3)) = 0",
                           h1Fd_1 == 0);
        c.dims = {{"h1_Fdual_1", h1Fd_1}};
    }
    {
        long long h1E = h1_F_via_kernel(F, K, 2);
        // second route through the subsheaf chain: h1(I_C(3)) = 0 and the
        // residual surjection force the vanishing
        long long route2 = h1(F, ic, 3);
        if (g <= 11) {
            SheafExpr iz{IdealSheafNode{SubschemeData{{}, {}, sc.Z}}};
            route2 += h1(F, iz, 2);
        } else {
            // tau(2) surjectivity: H0(2 O(1)) -> omega_C(2)|_Z
            FieldMatrix tau_map(F, sc.Z.size(), 8);
            FieldMatrix pull1 = pullback_matrix(sc.C.nu, 1);
            for (std::size_t zi = 0; zi < sc.Z.size(); ++zi)
                for (int copy = 0; copy < 2; ++copy) {
                    const Form& t = sc.K.sections[static_cast<std::size_t>(1 + copy)];
                    for (std::size_t bj = 0; bj < 4; ++bj) {
                        Form lin = Form::zero(F, 4, 1);
                        lin.c[bj] = 1;
                        Form on_c = form_from_vector(F, 2, sc.C.degree, pull1.apply(lin.c));
                        std::uint32_t val = F.mul(eval_p1(on_c, sc.z_params[zi]),
                                                  eval_p1(t, sc.z_params[zi]));
                        tau_map.at(zi, static_cast<std::size_t>(copy) * 4 + bj) = val;
                    }
                }
            route2 += (tau_map.rank() == sc.Z.size() ? 0 : 1);
        }
        two_route(h1E == 0 ? 0 : 1, route2 == 0 ? 0 : 1,
                  "H1(E) vanishing disagrees between the direct and subsheaf routes");
        auto& c = cert.add("h1_E_zero", "H1(E) = 0", h1E == 0);
        c.dims = {{"h1_E", h1E}};
    }
    {
        long long h0E = h0_F_via_kernel(F, K, 2);
        two_route(h0E, h0_expected(g, shape.d), "h0(E) disagrees with 2g - 6d + 58");
        auto& c = cert.add("h0_E_formula", "h0(E) = 2g - 6d + 58", h0E == h0_expected(g, shape.d));
        c.dims = {{"h0_E", h0E}, {"formula", h0_expected(g, shape.d)}};
    }
    cert.add("smoothness_assumption",
             "nonsingularity of the surface and of the strict transform is a generic assumption; "
             "the certified statements are the rank conditions above",
             true, /*mandatory=*/false);
}

// ---------------------------------------------------------------------------
// Genus 8 and 9: sampled monads with the 0-regularity shortcut.
// ---------------------------------------------------------------------------

inline Certificate run_monad_scenario(int g, const ScenarioConfig& cfg, std::uint64_t seed) {
    Zp F{cfg.prime};
    SplitMix64 rng(seed);
    MonadShape shape = shape_for_genus(g);
    MonadEvidence ev;
    MonadInstance m = sample_monad(shape, F, rng, &ev, static_cast<int>(cfg.sample_count));
    Certificate cert = verify_theorem_conditions(m, ev, seed);
    cert.scenario = "g" + std::to_string(g);
    cert.prime = cfg.prime;
    cert.seed = seed;
    if (g == 8) {
        // there is only one bundle with this shape: the canonical instance
        MonadInstance euler{F, shape, {}, {}};
        for (int v = 0; v < 4; ++v) {
            Form xv = Form::zero(F, 4, 1);
            xv.c[static_cast<std::size_t>(v)] = 1;
            euler.alpha.push_back(xv);
        }
        bool same = true;
        for (int l = -4; l <= 2; ++l)
            if (display_cohomology(m, l) != display_cohomology(euler, l)) same = false;
        auto& c = cert.add("cohomology_table_rigid",
                           "the sampled F has the cohomology table of the canonical kernel bundle",
                           same);
        c.dims = {{"h0_E", display_cohomology(m, 2)[0]}};
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Genus 10 and 11.
// ---------------------------------------------------------------------------

inline Certificate run_g10_g11(int g, const ScenarioConfig& cfg, std::uint64_t seed) {
    Zp F{cfg.prime};
    SplitMix64 rng(seed);
    int attempts = 0;
    SurfaceConstruction sc = build_construction(g, F, rng, cfg.max_retries, &attempts);
    Certificate cert;
    cert.scenario = "g" + std::to_string(g);
    cert.prime = cfg.prime;
    cert.seed = seed;
    cert.attempts = attempts;
    add_common_construction_checks(cert, sc);

    SheafExpr K{sc.K};
    LineInSpace l2 = line_transform(sc.X, 0, 2), l3 = line_transform(sc.X, 0, 1);

    if (g == 11) {
        LineInSpace l1 = line_transform(sc.X, 1, 2);
        auto hyp = check_lines_points_hypotheses(F, {l1, l2, l3}, sc.W);
        auto& c = cert.add("three_lines_four_points_hypotheses",
                           "L1, L2, L3 are mutually disjoint, W spans P^3, no quadric through Y "
                           "meets W, and h0(I_{(Y-L_l) u W}(2)) = 0 for each l",
                           hyp.pass());
        c.dims = {{"h0_quadrics_through_Y", hyp.h0_quadrics_through_Y}};
        c.attempts = sc.w_attempts;

        // mu_K on the surface
        SurfaceKernelSections K2 =
            kernel_bundle_at(sc.X, 2, DivisorClass{}, sc.s, sc.psi_on_C, sc.Cm);
        SurfaceKernelSections K3 =
            kernel_bundle_at(sc.X, 3, DivisorClass{}, sc.s, sc.psi_on_C, sc.Cm);
        MultRank mk = kernel_bundle_mult_rank(sc.X, K2, K3);
        auto& ck = cert.add("mu_K_surjective",
                            "H0(K(2)) (x) S_1 -> H0(K(3)) is surjective on the surface", mk.surjective());
        ck.dims = {{"rank", mk.rank}, {"target", mk.target_dim},
                   {"h0_K_2", static_cast<long long>(K2.basis.cols())}};

        // the cubic equation of X lies in the quadrics through C0
        FieldMatrix qk = pullback_matrix(sc.C0.nu, 2).kernel_basis();
        bool decomposed = false;
        if (qk.cols() == 3) {
            FieldMatrix lift(F, 20, 12);
            for (std::size_t qi = 0; qi < 3; ++qi) {
                Form q = form_from_vector(F, 4, 2, qk.transpose().row(qi));
                FieldMatrix mq = mult_matrix(q, 1);
                for (std::size_t r = 0; r < 20; ++r)
                    for (std::size_t cc = 0; cc < 4; ++cc) lift.at(r, qi * 4 + cc) = mq.at(r, cc);
            }
            decomposed = lift.solve(sc.X.cubic_equation.c).has_value();
        }
        auto& cd = cert.add("cubic_in_quadrics_of_C0",
                            "f = q0 h0 + q1 h1 + q2 h2 with q_i the quadrics through C0", decomposed);
        cd.dims = {{"h0_IC0_2", static_cast<long long>(qk.cols())}};
    }

    if (g == 10) {
        SheafExpr i_llw = ideal_expr({l2, l3}, sc.W);
        long long h0v = h0(F, i_llw, 2), h1v = h1(F, i_llw, 2);
        auto& c = cert.add("no_quadric_through_L2_L3_W",
                           "h0(I_{L2 u L3 u W}(2)) = 0, hence h1 = 0 since h0(O(2)) counts to 10",
                           h0v == 0 && h1v == 0);
        c.dims = {{"h0", h0v}, {"h1", h1v}, {"h0_O_LLW_2", 3 + 3 + 4}};
        c.attempts = sc.w_attempts;

        long long h1F1 = h1_F_via_kernel(F, K, 1);
        // second route on the surface: h1(K(1)) = 0 transports down
        SurfaceKernelSections K1 =
            kernel_bundle_at(sc.X, 1, DivisorClass{}, sc.s, sc.psi_on_C, sc.Cm);
        long long h1K1 = static_cast<long long>(K1.map.rows()) - static_cast<long long>(K1.map.rank());
        two_route(h1F1, h1K1, "h1(F(1)) disagrees between P^3 and surface routes");
        auto& cf = cert.add("h1_F1_zero", "H1(F(1)) = 0", h1F1 == 0);
        cf.dims = {{"h1_F_1", h1F1}, {"h1_K_1", h1K1}};
    }

    // multiplication and global generation
    {
        MultRank mr = mult_rank(F, K, 2);
        bool mult_ok = mr.surjective();
        auto& c = cert.add("mu_scrK_surjective",
                           "H0(K(2)) (x) S_1 -> H0(K(3)) is surjective for the kernel of delta",
                           mult_ok);
        c.dims = {{"rank", mr.rank}, {"target", mr.target_dim}};

        long long h2Em1 = h1_F_dual(F,
                                    DualExtension{{0, -1}, make_expr(ideal_expr(sc.C)), sc.C.degree},
                                    -5);
        long long h3Em2 = h0_F_dual(F,
                                    DualExtension{{0, -1}, make_expr(ideal_expr(sc.C)), sc.C.degree},
                                    -4);
        long long h1E = h1_F_via_kernel(F, K, 2);
        if (g == 11) {
            bool one_reg = h1E == 0 && h2Em1 == 0 && h3Em2 == 0;
            auto& cr = cert.add("one_regular", "E is 1-regular", one_reg);
            cr.dims = {{"h1_E", h1E}, {"h2_E_m1", h2Em1}, {"h3_E_m2", h3Em2}};
            bool multE = mult_F_surjective_via_kernel(F, K, 2);
            cert.add("mult_E_surjective", "H0(E) (x) S_1 -> H0(E(1)) is surjective", multE);
            cert.add("globally_generated", "E is globally generated (1-regularity + multiplication)",
                     one_reg && multE);
        } else {
            long long h1F1 = h1_F_via_kernel(F, K, 1);
            bool zero_reg = h1F1 == 0 && h2Em1 == 0 && h3Em2 == 0;
            auto& cr = cert.add("zero_regular", "E is 0-regular", zero_reg);
            cr.dims = {{"h1_E_m1", h1F1}, {"h2_E_m2", h2Em1}, {"h3_E_m3", h3Em2}};
            cert.add("globally_generated", "E is globally generated (0-regularity)", zero_reg);
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Genus 12 and 13.
// ---------------------------------------------------------------------------

inline Certificate run_g12_g13(int g, const ScenarioConfig& cfg, std::uint64_t seed) {
    Zp F{cfg.prime};
    SplitMix64 rng(seed);
    int attempts = 0;
    SurfaceConstruction sc = build_construction(g, F, rng, cfg.max_retries, &attempts);
    Certificate cert;
    cert.scenario = "g" + std::to_string(g);
    cert.prime = cfg.prime;
    cert.seed = seed;
    cert.attempts = attempts;
    add_common_construction_checks(cert, sc);

    SheafExpr K{sc.K};
    const Form& t1 = sc.K.sections[1];
    const Form& t2 = sc.K.sections[2];

    {
        // h0(F(1)) = 0 whenever t1|_Z and t2|_Z are independent
        FieldMatrix tz(F, 2, sc.Z.size());
        for (std::size_t zi = 0; zi < sc.Z.size(); ++zi) {
            tz.at(0, zi) = eval_p1(t1, sc.z_params[zi]);
            tz.at(1, zi) = eval_p1(t2, sc.z_params[zi]);
        }
        bool independent = tz.rank() == 2;
        long long h0F1 = h0_F_via_kernel(F, K, 1);
        // independence of the restricted sections forces the vanishing
        if (independent) two_route(h0F1, 0, "t_i|_Z independent but h0(F(1)) != 0");
        auto& c = cert.add("h0_F1_zero",
                           "t1|_Z and t2|_Z are independent and H0(F(1)) = 0",
                           independent && h0F1 == 0);
        c.dims = {{"h0_F_1", h0F1}, {"t_restriction_rank", independent ? 2 : 1}};
    }

    // the complete intersection C0 u L and the decomposition of the cubic
    FieldMatrix ci_rows = FieldMatrix::vstack(pullback_matrix(sc.C0.nu, 2),
                                              pullback_matrix(sc.gammaL.line.param, 2));
    FieldMatrix ci_ker = ci_rows.kernel_basis();
    std::vector<Form> q;
    for (std::size_t i = 0; i < ci_ker.cols(); ++i)
        q.push_back(form_from_vector(F, 4, 2, ci_ker.transpose().row(i)));
    {
        bool decomposed = false;
        if (q.size() == 2) {
            FieldMatrix lift(F, 20, 8);
            for (std::size_t qi = 0; qi < 2; ++qi) {
                FieldMatrix mq = mult_matrix(q[qi], 1);
                for (std::size_t r = 0; r < 20; ++r)
                    for (std::size_t cc = 0; cc < 4; ++cc) lift.at(r, qi * 4 + cc) = mq.at(r, cc);
            }
            decomposed = lift.solve(sc.X.cubic_equation.c).has_value();
        }
        auto& c = cert.add("ci22_decomposition",
                           "C0 u L is a (2,2) complete intersection and f = q0 h0 + q1 h1",
                           q.size() == 2 && decomposed);
        c.dims = {{"h0_I_C0L_2", static_cast<long long>(q.size())}};
    }

    // sections of the rank-2 kernel bundle K' on the surface at twist 2
    SurfaceKernelSections Kp2 = kernel_bundle_at(sc.X, 2, sc.minus_L(), sc.s, sc.psi_on_C, sc.Cm);
    {
        // lift the q_i to sections of K'(2): the second component is
        // (q_i o A)/gamma and the first solves against the restriction to C
        bool lifted = q.size() == 2;
        Form gamma_on_C = restrict_to_curve(sc.gammaL.gamma, {1, 1, 1, 1, 1, 0}, sc.Cm);
        SurfaceSystem o3 = surface_system(sc.X, DivisorClass::hyperplane().scaled(3));
        FieldMatrix rest3 = restriction_matrix(sc.X, o3, sc.Cm);
        for (std::size_t qi = 0; lifted && qi < q.size(); ++qi) {
            try {
                Form b_model = exact_divide_plane(compose(q[qi], sc.X.anticanonical), sc.gammaL.gamma);
                Form b_on_C = restrict_to_curve(
                    b_model, std::array<int, 6>{1, 1, 1, 1, 1, 2}, sc.Cm);
                Form rhs = exact_divide(b_on_C * sc.psi_on_C, sc.s).scaled(F.neg(1));
                if (!rest3.solve(rhs.c).has_value()) lifted = false;
            } catch (const CheckFailure&) {
                lifted = false;
            }
        }
        auto& c = cert.add("quadric_sections_lift",
                           "the quadrics through C0 u L lift to sections of K'(2)", lifted);
        c.dims = {{"h0_O3_system", static_cast<long long>(o3.basis.cols())},
                  {"rest3_rank", static_cast<long long>(rest3.rank())}};

        // h0 bookkeeping across the P^3 and surface levels:
        // h0(scrK'(2)) = 1 + h0(K'(2))
        FieldMatrix il2 = pullback_matrix(sc.gammaL.line.param, 2).kernel_basis();
        std::size_t rows = static_cast<std::size_t>(sc.C.degree) * 4 - 2 + 1;
        FieldMatrix kp_map(F, rows, 20 + il2.cols());
        FieldMatrix pull3 = pullback_matrix(sc.C.nu, 3);
        FieldMatrix mult_s = mult_matrix(sc.s, 3 * sc.C.degree);
        FieldMatrix blk1 = mult_s * pull3;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t cc = 0; cc < 20; ++cc) kp_map.at(r, cc) = blk1.at(r, cc);
        FieldMatrix pull2 = pullback_matrix(sc.C.nu, 2);
        for (std::size_t j = 0; j < il2.cols(); ++j) {
            Form qv = form_from_vector(F, 4, 2, il2.transpose().row(j));
            Form on_c = form_from_vector(F, 2, 2 * sc.C.degree, pull2.apply(qv.c));
            Form divided = exact_divide(on_c, gamma_on_C);
            Form img = divided * sc.psi_on_C;
            for (std::size_t r = 0; r < rows; ++r) kp_map.at(r, 20 + j) = img.c[r];
        }
        long long h0_scrKp = static_cast<long long>(kp_map.kernel_basis().cols());
        long long h0_Kp = static_cast<long long>(Kp2.basis.cols());
        two_route(h0_scrKp, 1 + h0_Kp, "h0(scrK'(2)) != 1 + h0(K'(2))");
        auto& c2 = cert.add("kernel_bundle_sections",
                            "h0(scrK'(2)) = 1 + h0(K'(2)) across the two levels",
                            h0_scrKp == 1 + h0_Kp);
        c2.dims = {{"h0_scrKp_2", h0_scrKp}, {"h0_Kp_2", h0_Kp}};
    }

    if (g == 12) {
        LineInSpace l2 = line_transform(sc.X, 0, 2), l3 = line_transform(sc.X, 0, 1);
        SheafExpr illw = ideal_expr({l2, l3}, sc.W);
        long long h0v = h0(F, illw, 3), h1v = h1(F, illw, 3);
        MultRank mu = mult_rank(F, illw, 3);
        long long h1v4 = h1(F, illw, 4);
        auto& c = cert.add("cubic_generation_two_lines_six_points",
                           "h0(I_{L2 u L3 u W'}(3)) = 6, h1 = 0, and the multiplication to "
                           "degree 4 is surjective",
                           h0v == 6 && h1v == 0 && mu.surjective() && h1v4 == 0);
        c.dims = {{"h0_3", h0v}, {"h1_3", h1v}, {"mu_rank", mu.rank}, {"mu_target", mu.target_dim}};
        c.attempts = sc.w_attempts;
    }

    if (g == 12) {
        MultRank mr = mult_rank(F, K, 2);
        auto& c = cert.add("mu_scrK_surjective",
                           "H0(K(2)) (x) S_1 -> H0(K(3)) is surjective for the kernel of delta",
                           mr.surjective());
        c.dims = {{"rank", mr.rank}, {"target", mr.target_dim}};
        {
            bool multE = mult_F_surjective_via_kernel(F, K, 2);
            long long h1E = h1_F_via_kernel(F, K, 2);
            DualExtension dual{{1, 1, -1}, make_expr(ideal_expr(sc.C)), sc.C.degree};
            long long h2Em1 = h1_F_dual(F, dual, -5);
            long long h3Em2 = h0_F_dual(F, dual, -4);
            bool one_reg = h1E == 0 && h2Em1 == 0 && h3Em2 == 0;
            cert.add("one_regular", "E is 1-regular", one_reg);
            cert.add("mult_E_surjective", "H0(E) (x) S_1 -> H0(E(1)) is surjective", multE);
            cert.add("globally_generated", "E is globally generated (1-regularity + multiplication)",
                     one_reg && multE);
        }
    }

    if (g == 13) {
        // the structured divisor certificate and the corank samples
        DivisorClass delta_cls =
            DivisorClass::hyperplane().scaled(3) + DivisorClass{1, {0, 0, 0, 0, 0, 0}} -
            DivisorClass{4, {2, 2, 2, 0, 0, 0}};
        DeltaCertificate dc = delta_certificate(sc.X, delta_cls, sc.C0m, sc.w_params);
        auto& c = cert.add("delta_divisor",
                           "a unique member of |O_X(3)[C0 - C]| cuts W on C0, with all six "
                           "points simple on it",
                           dc.pass());
        c.dims = {{"system_dim", dc.system_dim}, {"restriction_rank", dc.restriction_rank}};

        auto sections = kernel_section_forms(F, Kp2);
        require(sections.size() == 3, "h0(K'(2)) != 3");
        long long generic_samples = 0, generic_corank0 = 0;
        long long delta_samples = 0, delta_corank1 = 0;
        long long max_corank = 0;
        SplitMix64 srng(derive_seed(seed, 91));
        auto admissible = [&](const Point2& x) {
            if (sc.Cm.equation.eval({x[0], x[1], x[2]}) == 0) return false;
            if (sc.gammaL.gamma.eval({x[0], x[1], x[2]}) == 0) return false;
            for (int i = 0; i < 6; ++i)
                if (points_equal(F, x, sc.X.P(i))) return false;
            return true;
        };
        while (generic_samples < cfg.sample_count) {
            Point2 x{srng.field_element(F), srng.field_element(F), srng.field_element(F)};
            if (x == Point2{0, 0, 0} || !admissible(x)) continue;
            int cor = ev_corank_from_forms(F, sections, x);
            ++generic_samples;
            if (cor == 0) ++generic_corank0;
            max_corank = std::max<long long>(max_corank, cor);
        }
        // points on the structured divisor: scan random lines against it
        int guard = 0;
        while (delta_samples < 40 && ++guard < 4000) {
            Point2 r1{srng.field_element(F), srng.field_element(F), srng.field_element(F)};
            Point2 r2{srng.field_element(F), srng.field_element(F), srng.field_element(F)};
            if (points_equal(F, r1, r2)) continue;
            std::vector<Form> lam;
            for (int k = 0; k < 3; ++k)
                lam.push_back(Form::binary_linear(F, r1[static_cast<std::size_t>(k)],
                                                  r2[static_cast<std::size_t>(k)]));
            Form cut = compose(dc.delta, lam);
            if (cut.is_zero()) continue;
            for (const P1Point& root : roots_in_Fp(cut)) {
                if (delta_samples >= 40) break;
                Point2 x;
                for (int k = 0; k < 3; ++k)
                    x[static_cast<std::size_t>(k)] = lam[static_cast<std::size_t>(k)].eval({root.u, root.v});
                if (x == Point2{0, 0, 0} || !admissible(x)) continue;
                int cor = ev_corank_from_forms(F, sections, x);
                ++delta_samples;
                if (cor == 1) ++delta_corank1;
                max_corank = std::max<long long>(max_corank, cor);
            }
        }
        // random points may legitimately land on the degeneracy divisor (one
        // corank-1 hit per ~deg/p samples); the certified statement is that
        // the corank never reaches 2 and is 1 exactly along the divisor
        bool corank_ok = max_corank <= 1 && delta_samples > 0 &&
                         delta_corank1 == delta_samples &&
                         10 * generic_corank0 >= 9 * generic_samples;
        auto& cc = cert.add("corank_at_most_one",
                            "the evaluation of K'(2) has corank 0 generically, corank 1 on the "
                            "divisor, and never corank 2",
                            corank_ok);
        cc.samples = generic_samples + delta_samples;
        cc.dims = {{"generic_corank0", generic_corank0},
                   {"delta_corank1", delta_corank1},
                   {"max_corank", max_corank}};
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Genus 5..7: the rank-2 reflexive-sheaf route.
// ---------------------------------------------------------------------------

inline Certificate run_low_genus(int g, const ScenarioConfig& cfg, std::uint64_t seed) {
    Zp F{cfg.prime};
    SplitMix64 rng(seed);
    MonadShape shape = shape_for_genus(g);
    int e = g - 2;
    Certificate cert;
    cert.scenario = "g" + std::to_string(g);
    cert.prime = cfg.prime;
    cert.seed = seed;

    for (int attempt = 1; attempt <= cfg.max_retries; ++attempt) {
        cert.attempts = attempt;
        std::vector<Form> nu;
        for (int i = 0; i < 4; ++i) nu.push_back(Form::random(F, 2, e, rng));
        if (binary_gcd(nu).degree != 0) continue;
        FieldMatrix span(F, 4, static_cast<std::size_t>(e) + 1);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i <= static_cast<std::size_t>(e); ++i) span.at(j, i) = nu[j].c[i];
        if (span.rank() != 4) continue;
        SpaceCurve C{e, nu, nullptr};
        SheafExpr ic = ideal_expr(C);
        if (h0(F, ic, 1) != 0) continue;

        // the extension section: a form of degree g - 4 with distinct rational roots
        auto theta_params = pick_params(F, g - 4, {}, rng);
        Form theta = binary_from_roots(F, theta_params);

        long long h0_ic1 = h0(F, ic, 1);
        long long h1_ic0 = h1(F, ic, 0);
        {
            auto& c = cert.add("sheaf_sections_vanish", "H0(F) = 0 via h0(I_C(1)) = 0", h0_ic1 == 0);
            c.dims = {{"h0_IC_1", h0_ic1}};
        }
        {
            auto& c = cert.add("sheaf_h1_negative_twist", "H1(F(-1)) = 0 via h1(I_C) = 0",
                               h1_ic0 == 0);
            c.dims = {{"h1_IC_0", h1_ic0}};
        }
        {
            auto roots = roots_in_Fp(theta);
            bool ok = is_squarefree(theta) && static_cast<int>(roots.size()) == g - 4;
            auto& c = cert.add("c3_simple_zeros",
                               "the extension section vanishes in c3 = g - 4 distinct points", ok);
            c.dims = {{"distinct_roots", static_cast<long long>(roots.size())},
                      {"c3", g - 4}};
        }
        {
            long long h1_ic1 = h1(F, ic, 1);
            ChernData cf{2, -1, g - 4, g - 4};
            two_route(h1_ic1, -chi_p3(cf), "h1(F) disagrees with -chi(F)");
            bool ok = h1_ic1 == g - 5;
            auto& c = cert.add("monad_shape",
                               "the monad has shape (g-4, 2g-7, g-5) with h1(F) = g - 5",
                               ok && shape.rho == g - 4 && shape.sigma == 2 * g - 7 &&
                                   shape.tau == g - 5);
            c.dims = {{"rho", shape.rho}, {"sigma", shape.sigma}, {"tau", shape.tau},
                      {"h1_F", h1_ic1}};
        }
        {
            long long h1_ic3 = h1(F, ic, 3);
            auto& c = cert.add("h1_F2_zero", "H1(F(2)) = 0 via h1(I_C(3)) = 0", h1_ic3 == 0);
            c.dims = {{"h1_IC_3", h1_ic3}};
        }
        return cert;
    }
    throw CheckFailure("low-genus construction exhausted retries");
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

inline Certificate run_trial(const ScenarioConfig& cfg, std::uint64_t trial_seed) {
    int g = cfg.genus;
    if (g < 5 || g > 13) throw CheckFailure("genus out of range (5..13)");
    std::uint64_t violations_before = stats().violations;
    try {
        if (g >= 5 && g <= 7) return run_low_genus(g, cfg, trial_seed);
        if (g == 8 || g == 9) return run_monad_scenario(g, cfg, trial_seed);
        if (g == 10 || g == 11) return run_g10_g11(g, cfg, trial_seed);
        return run_g12_g13(g, cfg, trial_seed);
    } catch (const CheckFailure& e) {
        // an internal invariant violation must propagate; an exhausted
        // genericity gate becomes a FAIL certificate naming the gate
        if (stats().violations != violations_before) throw;
        Certificate cert;
        cert.scenario = "g" + std::to_string(g);
        cert.prime = cfg.prime;
        cert.seed = trial_seed;
        cert.attempts = cfg.max_retries;
        cert.add("construction_gate", std::string("retries exhausted: ") + e.what(), false);
        return cert;
    }
}

}  // namespace scenario
}  // namespace monadcert

#endif
