#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monadcert/geometry.hpp"

using namespace monadcert;

namespace {
const Zp F{32003};

CubicSurfaceModel fixture_surface(std::uint64_t seed = 101) {
    SplitMix64 rng(seed);
    return build_surface(F, rng);
}
}  // namespace

TEST_CASE("six general points carry a 4-dimensional space of cubics") {
    auto X = fixture_surface();
    CHECK(X.anticanonical.size() == 4);  // 10 - 6 independent point conditions
    for (const Form& a : X.anticanonical)
        for (int i = 0; i < 6; ++i)
            CHECK(a.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) == 0);
    CHECK(!X.cubic_equation.is_zero());
}

TEST_CASE("configurations with a collinear triple are rejected") {
    auto X = fixture_surface();
    std::array<Point2, 6> pts = X.config.pts;
    // overwrite P3 with a point on the line P1 P2
    for (int k = 0; k < 3; ++k)
        pts[2][static_cast<std::size_t>(k)] =
            F.add(pts[0][static_cast<std::size_t>(k)], F.mul(2, pts[1][static_cast<std::size_t>(k)]));
    CHECK(plane_points_general(F, X.config.pts));
    CHECK(!plane_points_general(F, pts));
}

TEST_CASE("strict transforms of the lines P_i P_j are skew lines on the surface") {
    auto X = fixture_surface();
    LineInSpace l1 = line_transform(X, 1, 2);
    LineInSpace l2 = line_transform(X, 0, 2);
    LineInSpace l3 = line_transform(X, 0, 1);
    CHECK(lines_disjoint(F, l1, l2));
    CHECK(lines_disjoint(F, l1, l3));
    CHECK(lines_disjoint(F, l2, l3));
    for (const LineInSpace* l : {&l1, &l2, &l3}) {
        CHECK(compose(X.cubic_equation, l->param).is_zero());
    }
}

TEST_CASE("nodal linear systems have the expected dimensions") {
    auto X = fixture_surface();
    // quartics with three assigned double points: 15 - 3*3
    CHECK(plane_system(F, 4, {{X.P(0), 2}, {X.P(1), 2}, {X.P(2), 2}}).cols() == 6);
    // cubics with one node and two simple base points: 10 - 3 - 2
    CHECK(plane_system(F, 3, {{X.P(0), 2}, {X.P(1), 1}, {X.P(2), 1}}).cols() == 5);
}

TEST_CASE("members through a forbidden point are rejected") {
    auto X = fixture_surface();
    SplitMix64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Form f = nodal_curve(X, NodalSystem::quartic_three_nodes, rng);
        for (int i = 3; i < 6; ++i) CHECK(f.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) != 0);
    }
}

TEST_CASE("three-nodal quartic: parametrization and strict transform of degree 6") {
    auto X = fixture_surface();
    SplitMix64 rng(11);
    PlaneModelCurve C = build_nodal_model(X, NodalSystem::quartic_three_nodes, rng);
    CHECK(C.phi.front().degree == 4);
    CHECK(compose(C.equation, C.phi).is_zero());
    CHECK(binary_gcd(C.phi).degree == 0);
    // two branch parameters per node, six in total
    int total = 0;
    for (const auto& bp : C.base_points) total += bp.param_factor.degree;
    CHECK(total == 6);
    SpaceCurve spc = space_curve_from_plane(X, C);
    CHECK(spc.degree == 6);

    // divisor-class ledger: C ~ C0 + L1 + L2 + L3
    DivisorClass c0{1, {0, 0, 0, 0, 0, 0}};
    DivisorClass lsum = DivisorClass{1, {0, 1, 1, 0, 0, 0}} + DivisorClass{1, {1, 0, 1, 0, 0, 0}} +
                        DivisorClass{1, {1, 1, 0, 0, 0, 0}};
    CHECK((c0 + lsum) == C.cls);
    CHECK(C.cls.degree_in_p3() == 6);
}

TEST_CASE("one-nodal cubic: strict transform of degree 5") {
    auto X = fixture_surface();
    SplitMix64 rng(13);
    PlaneModelCurve C = build_nodal_model(X, NodalSystem::cubic_one_node, rng);
    CHECK(C.phi.front().degree == 3);
    CHECK(compose(C.equation, C.phi).is_zero());
    SpaceCurve spc = space_curve_from_plane(X, C);
    CHECK(spc.degree == 5);
}

TEST_CASE("a general plane line transforms to a twisted cubic") {
    auto X = fixture_surface();
    SplitMix64 rng(17);
    Form ell = Form::random(F, 3, 1, rng);
    for (int i = 0; i < 6; ++i)
        REQUIRE(ell.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) != 0);
    PlaneModelCurve model = line_model(X, ell);
    SpaceCurve c0 = space_curve_from_plane(X, model);
    CHECK(c0.degree == 3);
    // h^0(I_{C0}(2)) = 3 computed two ways: coefficient pullback vs
    // evaluation at sampled curve points
    FieldMatrix pull = pullback_matrix(c0.nu, 2);
    CHECK(pull.kernel_basis().cols() == 3);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::uint32_t t = 0; t < 40; ++t) {
        Point3 pt = c0.point_at({1, t});
        rows.push_back(evaluation_row(F, 4, 2, {pt[0], pt[1], pt[2], pt[3]}));
    }
    CHECK(FieldMatrix::from_rows(F, rows).kernel_basis().cols() == 3);
}

TEST_CASE("the conic through P1..P5 transforms to a line on the surface") {
    auto X = fixture_surface();
    SplitMix64 rng(19);
    ConicLineData L = gamma6_transform(X, rng);
    for (int i = 0; i < 5; ++i)
        CHECK(L.gamma.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) == 0);
    CHECK(compose(X.cubic_equation, L.line.param).is_zero());
}

TEST_CASE("restriction degrees follow the intersection ledger") {
    auto X = fixture_surface();
    SplitMix64 rng(23);
    PlaneModelCurve C = build_nodal_model(X, NodalSystem::quartic_three_nodes, rng);

    // a line off the base points restricts to the sextic with degree 4
    Form ell = Form::random(F, 3, 1, rng);
    Form s = restrict_to_curve(ell, {0, 0, 0, 0, 0, 0}, C);
    CHECK(s.degree == 4);  // the P^1 model of omega_C(1) = O(g - 7), g = 11

    // a quartic through all six points restricts with degree 16 - 6 = 10
    std::vector<PointCondition> conds;
    for (int i = 0; i < 6; ++i) conds.push_back({X.P(i), 1});
    FieldMatrix sys = plane_system(F, 4, conds);
    REQUIRE(sys.cols() == 9);
    std::vector<std::uint32_t> co(sys.cols());
    for (auto& c : co) c = rng.field_element(F);
    Form psi = system_member(F, 4, sys, co);
    Form t = restrict_to_curve(psi, {1, 1, 1, 1, 1, 1}, C);
    CHECK(t.degree == 10);  // the P^1 model of omega_C(2) = O(2*6 - 2)

    // restriction errors when the section misses the base locus
    Form generic_quartic = Form::random(F, 3, 4, rng);
    CHECK_THROWS_WITH_AS(
        static_cast<void>(restrict_to_curve(generic_quartic, {1, 1, 1, 1, 1, 1}, C)),
        "section does not contain required base locus", CheckFailure);
}

TEST_CASE("genericity predicates") {
    LineInSpace l = LineInSpace::through(F, Point3{1, 0, 0, 0}, Point3{0, 1, 0, 0});
    Point3 p1 = {1, 0, 0, 0}, p2 = {0, 1, 0, 0}, p3 = {1, 1, 0, 0};
    CHECK(collinear(F, p1, p2, p3));
    CHECK(point_on_line(F, p3, l));
    Point3 q1 = {1, 0, 0, 0}, q2 = {0, 1, 0, 0}, q3 = {0, 0, 1, 0}, q4 = {0, 0, 0, 1};
    CHECK(!coplanar(F, q1, q2, q3, q4));
    CHECK(no_four_coplanar(F, {q1, q2, q3, q4}));
    CHECK(!no_three_collinear(F, {p1, p2, p3, q4}));

    Form quadric = Form::zero(F, 4, 2);
    quadric.c[0] = 1;  // x0^2
    CHECK(off_quadric({q1}, quadric));
    CHECK(!off_quadric({q2, q3, q4}, quadric));
}

TEST_CASE("points on parametrized curves are recognized") {
    auto X = fixture_surface();
    SplitMix64 rng(29);
    Form ell = Form::random(F, 3, 1, rng);
    PlaneModelCurve model = line_model(X, ell);
    SpaceCurve c0 = space_curve_from_plane(X, model);
    Point3 on = c0.point_at({1, 5});
    CHECK(point_on_parametrized_curve(F, c0.nu, {on.begin(), on.end()}));
    Point3 off = {1, 2, 3, 4};
    if (!point_on_parametrized_curve(F, c0.nu, {off.begin(), off.end()}))
        CHECK(distinct_from_curve(F, {off}, c0.nu));
}

TEST_CASE("smooth point scan finds a nonsingular rational point") {
    auto X = fixture_surface();
    SplitMix64 rng(31);
    Form f = nodal_curve(X, NodalSystem::quartic_three_nodes, rng);
    auto pt = smooth_point_scan(F, f, {X.P(0), X.P(1), X.P(2)}, rng);
    REQUIRE(pt.has_value());
    CHECK(f.eval({(*pt)[0], (*pt)[1], (*pt)[2]}) == 0);
    bool smooth = false;
    for (int v = 0; v < 3; ++v)
        if (f.derivative(v).eval({(*pt)[0], (*pt)[1], (*pt)[2]}) != 0) smooth = true;
    CHECK(smooth);
}
