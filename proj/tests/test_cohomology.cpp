#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monadcert/cohomology.hpp"

using namespace monadcert;

namespace {
const Zp F{32003};

SpaceCurve twisted_cubic() {
    std::vector<Form> nu;
    for (int i = 0; i < 4; ++i) {
        Form f = Form::zero(F, 2, 3);
        f.c[static_cast<std::size_t>(i)] = 1;
        nu.push_back(f);
    }
    return SpaceCurve{3, nu, nullptr};
}

SheafExpr ideal_of(const SpaceCurve& c) {
    return SheafExpr{IdealSheafNode{SubschemeData{{c}, {}, {}}}};
}
}  // namespace

TEST_CASE("ideal sheaf of a nondegenerate curve: h0(I_C(1)) = 0") {
    SpaceCurve c = twisted_cubic();
    SheafExpr ic = ideal_of(c);
    CHECK(h0(F, ic, 1) == 0);
    CHECK(h1(F, ic, 1) == 0);  // linearly normal
    CHECK(h0(F, ic, 2) == 3);
    CHECK(h1(F, ic, 2) == 0);
    CHECK(h0(F, ic, 3) == 10);
}

TEST_CASE("ideal sheaf of points: structure-sequence regimes") {
    std::vector<Point3> z = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    SheafExpr iz{IdealSheafNode{SubschemeData{{}, {}, z}}};
    CHECK(h1(F, iz, -1) == 4);  // h^0(O_Z(-1)) = #Z below twist 0
    CHECK(h0(F, iz, -1) == 0);
    CHECK(h0(F, iz, 1) == 0);  // no plane through 4 points spanning P^3
    CHECK(h1(F, iz, 1) == 0);
    CHECK(h0(F, iz, 2) == 6);
    CHECK(h1(F, iz, 2) == 0);
}

TEST_CASE("ideal sheaf of skew lines plus points") {
    LineInSpace l1 = LineInSpace::through(F, {1, 0, 0, 0}, {0, 1, 0, 0});
    LineInSpace l2 = LineInSpace::through(F, {0, 0, 1, 0}, {0, 0, 0, 1});
    std::vector<Point3> w = {{1, 2, 3, 4}, {1, 5, 25, 125}};
    SheafExpr expr{IdealSheafNode{SubschemeData{{}, {l1, l2}, w}}};
    long long h0v = h0(F, expr, 2);
    long long h1v = h1(F, expr, 2);
    // chi(I(2)) = 10 - 2*3 - 2 = 2
    CHECK(h0v - h1v == 2);
    SheafExpr bad{IdealSheafNode{
        SubschemeData{{}, {l1, l2}, {Point3{1, 1, 0, 0}}}}};  // point on l1
    CHECK_THROWS_AS(static_cast<void>(h0(F, bad, 2)), CheckFailure);
}

TEST_CASE("check_epi accepts coprime section data and rejects common zeros") {
    SpaceCurve c = twisted_cubic();
    // delta : O(1) (+) O -> omega_C(2); components are sections of
    // omega_C(1) = O(1) and omega_C(2) = O(4) on the P^1 model
    Form s = Form::binary_linear(F, 1, F.neg(1));  // s - t
    SplitMix64 rng(5);
    Form t = Form::random(F, 2, 4, rng);
    KernelOfNode k{{1, 0}, CurveModuleNode{c, 2}, {s, t}, false};
    bool epi = check_epi(k);
    CHECK(epi == (binary_gcd(s, t).degree == 0));

    Form t_shared = s * Form::random(F, 2, 3, rng);
    KernelOfNode k2{{1, 0}, CurveModuleNode{c, 2}, {s, t_shared}, false};
    CHECK(!check_epi(k2));

    KernelOfNode bad{{1, 0}, CurveModuleNode{c, 2}, {t, t}, false};
    CHECK_THROWS_AS(static_cast<void>(check_epi(bad)), CheckFailure);
}

TEST_CASE("check_epi on the degenerate degree-2 test ring with s = 1") {
    // a plane conic in P^3: here omega_C(1) has model degree 0, so s is a unit
    Form u = Form::binary_linear(F, 1, 0);
    Form t = Form::binary_linear(F, 0, 1);
    SpaceCurve conic{2, {u * u, u * t, t * t, Form::zero(F, 2, 2)}, nullptr};
    SplitMix64 rng(6);
    KernelOfNode k{{1, 0}, CurveModuleNode{conic, 2},
                   {Form::constant(F, 2, 1), Form::random(F, 2, 2, rng)}, false};
    CHECK(check_epi(k));
}

TEST_CASE("kernel sheaf cohomology satisfies Euler bookkeeping") {
    SpaceCurve c = twisted_cubic();
    SplitMix64 rng(7);
    Form s, t;
    do {
        s = Form::random(F, 2, 1, rng);
        t = Form::random(F, 2, 4, rng);
    } while (binary_gcd(s, t).degree != 0);
    KernelOfNode k{{1, 0}, CurveModuleNode{c, 2}, {s, t}, false};
    REQUIRE(check_epi(k));
    SheafExpr expr{k};
    for (int l = -1; l <= 3; ++l) {
        HPair h = h01(F, expr, l);
        long long h0A = h_line_bundle(0, l + 1) + h_line_bundle(0, l);
        long long h0M = std::max(0LL, (2LL + l) * 3 - 2 + 1);
        CHECK(h.h0 - h.h1 == h0A - h0M);
        CHECK(h.h0 >= 0);
        CHECK(h.h1 >= 0);
    }
}

TEST_CASE("mult_rank: the polynomial ring is generated in degree 1") {
    SheafExpr o{LineBundleSum{{0}}};
    MultRank mr = mult_rank(F, o, 2);
    CHECK(mr.rank == 20);
    CHECK(mr.target_dim == 20);
    CHECK(mr.surjective());
}

TEST_CASE("mult_rank: the twisted cubic ideal is generated by quadrics") {
    SheafExpr ic = ideal_of(twisted_cubic());
    MultRank mr = mult_rank(F, ic, 2);
    CHECK(mr.target_dim == 10);
    CHECK(mr.surjective());
}

TEST_CASE("mult_rank is monotone in the twist on saturated ideals") {
    SheafExpr ic = ideal_of(twisted_cubic());
    long long prev = -1;
    for (int l = 1; l <= 4; ++l) {
        MultRank mr = mult_rank(F, ic, l);
        CHECK(mr.rank >= prev);
        prev = mr.rank;
    }
}

TEST_CASE("twist and sum nodes evaluate through") {
    SheafExpr ic = ideal_of(twisted_cubic());
    SheafExpr tw{TwistNode{make_expr(ic), 1}};
    CHECK(h0(F, tw, 1) == h0(F, ic, 2));
    SheafExpr sum{SumNode{{make_expr(ic), make_expr(SheafExpr{LineBundleSum{{0}}})}}};
    CHECK(h0(F, sum, 2) == h0(F, ic, 2) + 10);
}

TEST_CASE("coh_table records both rows over the window") {
    SheafExpr ic = ideal_of(twisted_cubic());
    CohTable t = coh_table(F, ic, 0, 3, "stacked condition matrix");
    CHECK(t.entries.size() == 8);
    CHECK(t.entries[0].dim == 0);  // h^0(I_C) = 0
}

TEST_CASE("surface systems and restriction matrices") {
    SplitMix64 rng(101);
    CubicSurfaceModel X = build_surface(F, rng);

    SurfaceSystem anti = surface_system(X, DivisorClass::hyperplane());
    CHECK(anti.basis.cols() == 4);

    // the structured-divisor system 6H - E1 - E2 - E3 - 3E4 - 3E5 - 3E6
    DivisorClass delta_cls{6, {1, 1, 1, 3, 3, 3}};
    SurfaceSystem dsys = surface_system(X, delta_cls);
    CHECK(dsys.basis.cols() == 7);  // 28 - 3 - 18

    Form ell = Form::random(F, 3, 1, rng);
    for (int i = 0; i < 6; ++i) REQUIRE(ell.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) != 0);
    PlaneModelCurve c0 = line_model(X, ell);
    FieldMatrix rest = restriction_matrix(X, dsys, c0);
    CHECK(rest.rows() == 7);  // degree 6 on the twisted cubic
    CHECK(rest.rank() == 7);  // bijective
}

TEST_CASE("delta certificate: unique member through a chosen divisor on C0") {
    SplitMix64 rng(202);
    CubicSurfaceModel X = build_surface(F, rng);
    Form ell = Form::random(F, 3, 1, rng);
    for (int i = 0; i < 6; ++i) REQUIRE(ell.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) != 0);
    PlaneModelCurve c0 = line_model(X, ell);
    std::vector<P1Point> w = {{1, 3}, {1, 7}, {1, 19}, {1, 22}, {1, 91}, {1, 404}};
    DeltaCertificate cert = delta_certificate(X, DivisorClass{6, {1, 1, 1, 3, 3, 3}}, c0, w);
    CHECK(cert.system_dim == 7);
    CHECK(cert.restriction_bijective);
    CHECK(cert.unique_member_matches);
    CHECK(cert.w_points_simple);
    CHECK(cert.pass());
}

TEST_CASE("kernel bundle evaluation rejects points on the target curve") {
    SplitMix64 rng(303);
    CubicSurfaceModel X = build_surface(F, rng);
    PlaneModelCurve Cm = build_nodal_model(X, NodalSystem::quartic_three_nodes, rng);
    Form ell = Form::random(F, 3, 1, rng);
    Form s = restrict_to_curve(ell, {0, 0, 0, 0, 0, 0}, Cm);
    std::vector<PointCondition> conds;
    for (int i = 0; i < 6; ++i) conds.push_back({X.P(i), 1});
    FieldMatrix sys = plane_system(F, 4, conds);
    Form psi = system_member(F, 4, sys, std::vector<std::uint32_t>(sys.cols(), 1));
    Form t = restrict_to_curve(psi, {1, 1, 1, 1, 1, 1}, Cm);
    DivisorClass anti = DivisorClass::hyperplane();
    SurfaceKernelSections K = surface_kernel_sections(
        X, {surface_system(X, anti.scaled(3)), surface_system(X, anti.scaled(2))}, {s, t}, Cm);
    // a point on the plane model of C is not a valid sample point
    auto on_c = smooth_point_scan(F, Cm.equation, {}, rng);
    REQUIRE(on_c.has_value());
    CHECK_THROWS_WITH_AS(static_cast<void>(ev_corank_at(F, K, *on_c)), "invalid sample point",
                         CheckFailure);
}

TEST_CASE("dual-extension transports assert their preconditions") {
    SpaceCurve c = twisted_cubic();
    DualExtension d{{0, -1}, make_expr(ideal_of(c)), 3};
    // h^0(F^v(-1)) = h^0(O(-1)) + h^0(O(-2)) + h^0(I_C(1)) = 0
    CHECK(h0_F_dual(F, d, -1) == 0);
    // h^1(F^v(-1)) = h^1(I_C(1)) = 0 for the twisted cubic
    CHECK(h1_F_dual(F, d, -1) == 0);
    CHECK(h2_F_dual(F, d, -2) == 0);  // h^1(O_C) = 0: the model is rational
}
