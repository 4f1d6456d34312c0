// Geometric raw material: general point configurations in P^2, the blown-up
// cubic surface model of P^3, nodal plane curves with rational
// parametrizations, strict transforms as space curves, auxiliary lines, and
// genericity predicates.
//
// All curves are carried by explicit parametrizations; restriction of a
// divisor class to a curve is pullback along the parametrization followed by
// exact division by the parameter factors sitting over assigned base points.

#ifndef MONADCERT_GEOMETRY_HPP
#define MONADCERT_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "monadcert/forms.hpp"

namespace monadcert {

using Point2 = std::array<std::uint32_t, 3>;
using Point3 = std::array<std::uint32_t, 4>;

inline bool proportional(Zp F, const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b) {
    require(a.size() == b.size(), "proportional: size mismatch");
    FieldMatrix m(F, 2, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m.at(0, i) = F.reduce(a[i]);
        m.at(1, i) = F.reduce(b[i]);
    }
    return m.rank() <= 1;
}

inline bool points_equal(Zp F, const Point2& a, const Point2& b) {
    return proportional(F, {a.begin(), a.end()}, {b.begin(), b.end()});
}
inline bool points_equal(Zp F, const Point3& a, const Point3& b) {
    return proportional(F, {a.begin(), a.end()}, {b.begin(), b.end()});
}

inline FieldMatrix stack_points(Zp F, const std::vector<std::vector<std::uint32_t>>& pts) {
    return FieldMatrix::from_rows(F, pts);
}

inline std::uint32_t det3(Zp F, const Point2& a, const Point2& b, const Point2& c) {
    auto m = [&](int i, int j, int k) {
        return F.mul(a[static_cast<std::size_t>(i)],
                     F.sub(F.mul(b[static_cast<std::size_t>(j)], c[static_cast<std::size_t>(k)]),
                           F.mul(b[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(j)])));
    };
    return F.add(F.sub(m(0, 1, 2), m(1, 0, 2)), m(2, 0, 1));
}

// ---------------------------------------------------------------------------
// Genericity predicates (pure rank / evaluation checks).
// ---------------------------------------------------------------------------

inline bool collinear(Zp F, const Point3& a, const Point3& b, const Point3& c) {
    return stack_points(F, {{a.begin(), a.end()}, {b.begin(), b.end()}, {c.begin(), c.end()}})
               .rank() <= 2;
}

inline bool coplanar(Zp F, const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return stack_points(F, {{a.begin(), a.end()},
                            {b.begin(), b.end()},
                            {c.begin(), c.end()},
                            {d.begin(), d.end()}})
               .rank() <= 3;
}

inline bool no_three_collinear(Zp F, const std::vector<Point3>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (collinear(F, pts[i], pts[j], pts[k])) return false;
    return true;
}

inline bool no_four_coplanar(Zp F, const std::vector<Point3>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                for (std::size_t l = k + 1; l < pts.size(); ++l)
                    if (coplanar(F, pts[i], pts[j], pts[k], pts[l])) return false;
    return true;
}

inline bool off_quadric(const std::vector<Point3>& pts, const Form& quadric) {
    for (const Point3& p : pts)
        if (quadric.eval({p[0], p[1], p[2], p[3]}) == 0) return false;
    return true;
}

// x lies on the image of a parametrized curve iff the 2x2 minors of
// (phi(v) | x) have a common zero, i.e. their gcd is nonconstant.
inline bool point_on_parametrized_curve(Zp F, const std::vector<Form>& phi,
                                        const std::vector<std::uint32_t>& x) {
    require(phi.size() == x.size(), "point_on_parametrized_curve: dimension mismatch");
    std::vector<Form> minors;
    for (std::size_t a = 0; a < phi.size(); ++a)
        for (std::size_t b = a + 1; b < phi.size(); ++b) {
            Form m = phi[a].scaled(F.reduce(x[b])) - phi[b].scaled(F.reduce(x[a]));
            if (!m.is_zero()) minors.push_back(m);
        }
    if (minors.empty()) return true;  // x proportional to a constant parametrization
    return binary_gcd(minors).degree >= 1;
}

// gcd of the 2x2 minors of (phi || x): the parameter locus over the point x
inline Form parameter_factor(Zp F, const std::vector<Form>& phi,
                             const std::vector<std::uint32_t>& x) {
    std::vector<Form> minors;
    for (std::size_t a = 0; a < phi.size(); ++a)
        for (std::size_t b = a + 1; b < phi.size(); ++b) {
            Form m = phi[a].scaled(F.reduce(x[b])) - phi[b].scaled(F.reduce(x[a]));
            if (!m.is_zero()) minors.push_back(m);
        }
    require(!minors.empty(), "parameter_factor: degenerate data");
    return binary_gcd(minors);
}

inline bool distinct_from_curve(Zp F, const std::vector<Point3>& pts,
                                const std::vector<Form>& nu) {
    for (const Point3& p : pts)
        if (point_on_parametrized_curve(F, nu, {p.begin(), p.end()})) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Lines in P^3.
// ---------------------------------------------------------------------------

struct LineInSpace {
    std::vector<Form> param;  // 4 binary linear forms
    Point3 a, b;              // spanning points

    static LineInSpace through(Zp F, const Point3& a, const Point3& b) {
        LineInSpace L;
        L.a = a;
        L.b = b;
        for (int j = 0; j < 4; ++j)
            L.param.push_back(Form::binary_linear(F, a[static_cast<std::size_t>(j)],
                                                  b[static_cast<std::size_t>(j)]));
        require(!points_equal(F, a, b), "line through equal points");
        return L;
    }
    static LineInSpace from_param(Zp F, const std::vector<Form>& param) {
        require(param.size() == 4 && param.front().degree == 1, "line parametrization must be linear");
        LineInSpace L;
        L.param = param;
        for (int j = 0; j < 4; ++j) {
            L.a[static_cast<std::size_t>(j)] = param[static_cast<std::size_t>(j)].c[0];
            L.b[static_cast<std::size_t>(j)] = param[static_cast<std::size_t>(j)].c[1];
        }
        FieldMatrix span(F, 2, 4);
        for (int j = 0; j < 4; ++j) {
            span.at(0, static_cast<std::size_t>(j)) = L.a[static_cast<std::size_t>(j)];
            span.at(1, static_cast<std::size_t>(j)) = L.b[static_cast<std::size_t>(j)];
        }
        require(span.rank() == 2, "degenerate line parametrization");
        return L;
    }
};

inline bool lines_disjoint(Zp F, const LineInSpace& l1, const LineInSpace& l2) {
    return stack_points(F, {{l1.a.begin(), l1.a.end()},
                            {l1.b.begin(), l1.b.end()},
                            {l2.a.begin(), l2.a.end()},
                            {l2.b.begin(), l2.b.end()}})
               .rank() == 4;
}

inline bool point_on_line(Zp F, const Point3& p, const LineInSpace& l) {
    return stack_points(F, {{l.a.begin(), l.a.end()},
                            {l.b.begin(), l.b.end()},
                            {p.begin(), p.end()}})
               .rank() <= 2;
}

// ---------------------------------------------------------------------------
// Divisor-class ledger on the blown-up plane: a*H - sum m_i E_i with
// intersection form diag(1, -1, ..., -1).  Integer metadata used only for
// assertions, never as a substitute for explicit form computations.
// ---------------------------------------------------------------------------

struct DivisorClass {
    long h = 0;
    std::array<long, 6> m{0, 0, 0, 0, 0, 0};

    static DivisorClass hyperplane() { return {3, {1, 1, 1, 1, 1, 1}}; }

    DivisorClass operator+(const DivisorClass& o) const {
        DivisorClass r{h + o.h, {}};
        for (int i = 0; i < 6; ++i) r.m[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] + o.m[static_cast<std::size_t>(i)];
        return r;
    }
    DivisorClass operator-(const DivisorClass& o) const {
        DivisorClass r{h - o.h, {}};
        for (int i = 0; i < 6; ++i) r.m[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] - o.m[static_cast<std::size_t>(i)];
        return r;
    }
    DivisorClass scaled(long k) const {
        DivisorClass r{k * h, {}};
        for (int i = 0; i < 6; ++i) r.m[static_cast<std::size_t>(i)] = k * m[static_cast<std::size_t>(i)];
        return r;
    }
    long dot(const DivisorClass& o) const {
        long d = h * o.h;
        for (int i = 0; i < 6; ++i) d -= m[static_cast<std::size_t>(i)] * o.m[static_cast<std::size_t>(i)];
        return d;
    }
    long degree_in_p3() const { return dot(hyperplane()); }
    bool operator==(const DivisorClass&) const = default;
};

// ---------------------------------------------------------------------------
// Plane-model curves.
// ---------------------------------------------------------------------------

// A configuration point lying on a plane-model curve, together with the
// binary factor cutting out the parameter values over it.
struct BasePointOnCurve {
    int config_index;  // 0..5, or -1 for ad-hoc points
    Point2 point;
    int mult;           // multiplicity of the curve at the point (1 or 2)
    Form param_factor;  // degree == mult; roots = parameters over the point
};

struct PlaneModelCurve {
    Form equation;           // plane form of degree d
    std::vector<Form> phi;   // 3 binary forms of degree d, birational onto the curve
    std::vector<BasePointOnCurve> base_points;
    DivisorClass cls;        // class of the strict transform

    int plane_degree() const { return equation.degree; }
};

struct PlaneConfig {
    std::array<Point2, 6> pts;
};

struct CubicSurfaceModel {
    Zp F;
    PlaneConfig config;
    std::vector<Form> anticanonical;  // 4 plane cubics through the six points
    Form cubic_equation;              // the cubic form in S_3(P^3) vanishing on the image

    const Point2& P(int i) const { return config.pts[static_cast<std::size_t>(i)]; }
};

struct SpaceCurve {
    int degree;
    std::vector<Form> nu;  // 4 binary forms of common degree, gcd 1
    // blow-up provenance, when the curve is a strict transform
    std::shared_ptr<const PlaneModelCurve> plane_model;

    Point3 point_at(const P1Point& v) const {
        Point3 p;
        for (int j = 0; j < 4; ++j)
            p[static_cast<std::size_t>(j)] = nu[static_cast<std::size_t>(j)].eval({v.u, v.v});
        return p;
    }
};

// ---------------------------------------------------------------------------
// Linear systems of plane curves with assigned base multiplicities.
// ---------------------------------------------------------------------------

struct PointCondition {
    Point2 point;
    int mult;  // 1, 2 or 3
};

// rows of the condition matrix: all order-(mult-1) partial derivatives vanish
inline FieldMatrix plane_conditions(Zp F, int degree, const std::vector<PointCondition>& conds) {
    MonomialBasis basis = MonomialBasis::make(3, degree);
    std::vector<std::vector<std::uint32_t>> rows;
    for (const PointCondition& pc : conds) {
        require(pc.mult >= 1 && pc.mult <= 4, "plane_conditions: multiplicity out of range");
        MonomialBasis dbasis = MonomialBasis::make(3, pc.mult - 1);
        for (const Exponents& de : dbasis.exps) {
            std::vector<std::uint32_t> row(basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Form mono = Form::zero(F, 3, degree);
                mono.c[j] = 1;
                Form d = mono;
                for (int v = 0; v < 3; ++v)
                    for (int k = 0; k < de[static_cast<std::size_t>(v)]; ++k) d = d.derivative(v);
                row[j] = d.eval({pc.point[0], pc.point[1], pc.point[2]});
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return FieldMatrix(F, 0, basis.size());
    return FieldMatrix::from_rows(F, rows);
}

// basis (as columns) of the plane curves of the given degree satisfying the conditions
inline FieldMatrix plane_system(Zp F, int degree, const std::vector<PointCondition>& conds) {
    return plane_conditions(F, degree, conds).kernel_basis();
}

inline Form system_member(Zp F, int degree, const FieldMatrix& basis,
                          const std::vector<std::uint32_t>& coeffs) {
    require(basis.cols() == coeffs.size(), "system_member: coefficient count mismatch");
    Form f = Form::zero(F, 3, degree);
    for (std::size_t j = 0; j < basis.cols(); ++j)
        for (std::size_t i = 0; i < basis.rows(); ++i)
            f.c[i] = F.add(f.c[i], F.mul(basis.at(i, j), coeffs[j]));
    return f;
}

// ---------------------------------------------------------------------------
// Conic parametrization by the pencil of lines through a point of the conic.
//
// Fix two points R1, R2 spanning a line avoiding the base point Q.  The line
// through Q with pencil parameter v meets the conic residually in
//   psi(v) = q(S_v) * Q - B_q(Q, S_v) * S_v,       S_v := v0 R1 + v1 R2,
// where B_q is the polarization of q.  psi has degree 2 and is the standard
// isomorphism P^1 ~ conic.
// ---------------------------------------------------------------------------

struct ConicParam {
    Zp F;
    Form conic;              // the plane conic q
    Point2 base;             // Q
    std::array<Point2, 2> rspan;
    std::vector<Form> psi;   // 3 binary quadratics

    // linear factor in v whose root is the parameter of P (P on conic, P != Q)
    Form factor_of(const Point2& P) const {
        std::uint32_t c0 = det3(F, base, rspan[0], P);
        std::uint32_t c1 = det3(F, base, rspan[1], P);
        Form f = Form::binary_linear(F, c0, c1);
        require(!f.is_zero(), "conic parameter factor degenerate");
        return f;
    }
    // parameter factor of the base point itself (tangent direction at Q)
    Form tangent_factor() const {
        std::array<std::uint32_t, 3> grad;
        for (int v = 0; v < 3; ++v)
            grad[static_cast<std::size_t>(v)] = conic.derivative(v).eval({base[0], base[1], base[2]});
        std::uint32_t c0 = 0, c1 = 0;
        for (int j = 0; j < 3; ++j) {
            c0 = F.add(c0, F.mul(grad[static_cast<std::size_t>(j)], rspan[0][static_cast<std::size_t>(j)]));
            c1 = F.add(c1, F.mul(grad[static_cast<std::size_t>(j)], rspan[1][static_cast<std::size_t>(j)]));
        }
        Form f = Form::binary_linear(F, c0, c1);
        require(!f.is_zero(), "conic tangent factor degenerate");
        return f;
    }
};

inline bool conic_is_smooth(Zp F, const Form& q) {
    require(q.nvars == 3 && q.degree == 2, "conic_is_smooth: plane conic required");
    // symmetric matrix of the quadratic form; basis order x^2, xy, xz, y^2, yz, z^2
    std::uint32_t two_inv = F.inv(2);
    std::array<std::array<std::uint32_t, 3>, 3> M{};
    M[0][0] = q.c[0];
    M[0][1] = M[1][0] = F.mul(q.c[1], two_inv);
    M[0][2] = M[2][0] = F.mul(q.c[2], two_inv);
    M[1][1] = q.c[3];
    M[1][2] = M[2][1] = F.mul(q.c[4], two_inv);
    M[2][2] = q.c[5];
    Point2 r0{M[0][0], M[0][1], M[0][2]}, r1{M[1][0], M[1][1], M[1][2]},
        r2{M[2][0], M[2][1], M[2][2]};
    return det3(F, r0, r1, r2) != 0;
}

inline std::optional<ConicParam> conic_parametrize(Zp F, const Form& q, const Point2& Q,
                                                   SplitMix64& rng) {
    require(q.eval({Q[0], Q[1], Q[2]}) == 0, "conic_parametrize: base point not on conic");
    if (!conic_is_smooth(F, q)) return std::nullopt;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Point2 R1{rng.field_element(F), rng.field_element(F), rng.field_element(F)};
        Point2 R2{rng.field_element(F), rng.field_element(F), rng.field_element(F)};
        if (det3(F, Q, R1, R2) == 0) continue;
        std::vector<Form> sv;
        for (int j = 0; j < 3; ++j)
            sv.push_back(Form::binary_linear(F, R1[static_cast<std::size_t>(j)], R2[static_cast<std::size_t>(j)]));
        Form q_sv = compose(q, sv);  // quadratic in v
        // polarization B(Q, S_v) = sum_j dq/dx_j(Q) (S_v)_j
        Form b = Form::zero(F, 2, 1);
        for (int j = 0; j < 3; ++j) {
            std::uint32_t g = q.derivative(j).eval({Q[0], Q[1], Q[2]});
            b = b + sv[static_cast<std::size_t>(j)].scaled(g);
        }
        std::vector<Form> psi;
        for (int j = 0; j < 3; ++j) {
            Form comp = Form::zero(F, 2, 2);
            comp = comp + q_sv.scaled(Q[static_cast<std::size_t>(j)]);
            comp = comp - (b * sv[static_cast<std::size_t>(j)]);
            psi.push_back(comp);
        }
        if (binary_gcd(psi).degree != 0) continue;
        require(compose(q, psi).is_zero(), "conic parametrization does not satisfy the conic");
        return ConicParam{F, q, Q, {R1, R2}, psi};
    }
    return std::nullopt;
}

// root of a nonzero linear binary form c0*s + c1*t
inline P1Point root_of_linear(Zp F, const Form& lin) {
    require(lin.degree == 1 && !lin.is_zero(), "root_of_linear: nonzero linear form required");
    return {lin.c[1], F.neg(lin.c[0])};
}

// ---------------------------------------------------------------------------
// The blown-up cubic surface model.
// ---------------------------------------------------------------------------

inline bool plane_points_general(Zp F, const std::array<Point2, 6>& P) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                if (det3(F, P[static_cast<std::size_t>(i)], P[static_cast<std::size_t>(j)],
                         P[static_cast<std::size_t>(k)]) == 0)
                    return false;
    std::vector<std::vector<std::uint32_t>> rows;
    for (const Point2& p : P) rows.push_back(evaluation_row(F, 3, 2, {p[0], p[1], p[2]}));
    return FieldMatrix::from_rows(F, rows).rank() == 6;  // not all six on a conic
}

inline CubicSurfaceModel build_surface(Zp F, SplitMix64& rng, int max_retries = 64,
                                       int* attempts_out = nullptr) {
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        std::array<Point2, 6> P;
        for (auto& p : P) p = {rng.field_element(F), rng.field_element(F), rng.field_element(F)};
        if (!plane_points_general(F, P)) continue;

        std::vector<PointCondition> conds;
        for (const Point2& p : P) conds.push_back({p, 1});
        FieldMatrix cubics = plane_system(F, 3, conds);
        if (cubics.cols() != 4) continue;  // six general points impose independent conditions

        std::vector<Form> A;
        for (std::size_t j = 0; j < 4; ++j) {
            Form a = Form::zero(F, 3, 3);
            for (std::size_t i = 0; i < cubics.rows(); ++i) a.c[i] = cubics.at(i, j);
            A.push_back(a);
        }

        // the image in P^3 lies on a unique cubic surface
        MonomialBasis s3 = MonomialBasis::make(4, 3);
        FieldMatrix pull(F, graded_dim(3, 9), s3.size());
        for (std::size_t j = 0; j < s3.size(); ++j) {
            Form mono = Form::zero(F, 4, 3);
            mono.c[j] = 1;
            Form img = compose(mono, A);
            for (std::size_t i = 0; i < img.c.size(); ++i) pull.at(i, j) = img.c[i];
        }
        FieldMatrix ker = pull.kernel_basis();
        if (ker.cols() != 1) continue;
        Form fx = Form::zero(F, 4, 3);
        for (std::size_t i = 0; i < 20; ++i) fx.c[i] = ker.at(i, 0);

        if (attempts_out) *attempts_out = attempt;
        return CubicSurfaceModel{F, PlaneConfig{P}, A, fx};
    }
    throw CheckFailure("degenerate point configuration");
}

// ---------------------------------------------------------------------------
// Restriction of a plane system member to a curve model: pullback along the
// parametrization, then exact division by the parameter factors over the
// assigned base points.
// ---------------------------------------------------------------------------

inline Form restrict_to_curve(const Form& section, const std::array<int, 6>& mults,
                              const PlaneModelCurve& target) {
    Form pulled = compose(section, target.phi);
    for (const BasePointOnCurve& bp : target.base_points) {
        if (bp.config_index < 0) continue;
        int m = mults[static_cast<std::size_t>(bp.config_index)];
        for (int k = 0; k < m; ++k) {
            try {
                pulled = exact_divide(pulled, bp.param_factor);
            } catch (const CheckFailure&) {
                throw CheckFailure("section does not contain required base locus");
            }
        }
    }
    return pulled;
}

// ---------------------------------------------------------------------------
// Strict transforms.
// ---------------------------------------------------------------------------

// strict transform of the line P_i P_j: a line in P^3
inline LineInSpace line_transform(const CubicSurfaceModel& X, int i, int j) {
    Zp F = X.F;
    std::vector<Form> lambda;
    for (int k = 0; k < 3; ++k)
        lambda.push_back(Form::binary_linear(F, X.P(i)[static_cast<std::size_t>(k)],
                                             X.P(j)[static_cast<std::size_t>(k)]));
    Form fi = Form::binary_linear(F, 0, 1);  // parameter of P_i is [1:0], cut by t
    Form fj = Form::binary_linear(F, 1, 0);  // parameter of P_j is [0:1], cut by s
    std::vector<Form> param;
    for (const Form& a : X.anticanonical)
        param.push_back(exact_divide(exact_divide(compose(a, lambda), fi), fj));
    return LineInSpace::from_param(F, param);
}

// plane model of a general line in the plane (class H): base-point free
inline PlaneModelCurve line_model(const CubicSurfaceModel& X, const Form& ell) {
    require(ell.nvars == 3 && ell.degree == 1, "line_model: plane line required");
    Zp F = X.F;
    FieldMatrix coeff(F, 1, 3);
    for (int k = 0; k < 3; ++k) coeff.at(0, static_cast<std::size_t>(k)) = ell.c[static_cast<std::size_t>(k)];
    FieldMatrix ker = coeff.kernel_basis();
    require(ker.cols() == 2, "line_model: degenerate line");
    std::vector<Form> lambda;
    for (int k = 0; k < 3; ++k)
        lambda.push_back(Form::binary_linear(F, ker.at(static_cast<std::size_t>(k), 0),
                                             ker.at(static_cast<std::size_t>(k), 1)));
    return PlaneModelCurve{ell, lambda, {}, DivisorClass{1, {0, 0, 0, 0, 0, 0}}};
}

// strict transform of a plane-model curve: divide the pulled-back
// anticanonical cubics by the parameter factors over the base points
inline SpaceCurve space_curve_from_plane(const CubicSurfaceModel& X,
                                         const PlaneModelCurve& curve) {
    Zp F = X.F;
    std::array<int, 6> ones{1, 1, 1, 1, 1, 1};
    std::vector<Form> nu;
    for (const Form& a : X.anticanonical) {
        try {
            nu.push_back(restrict_to_curve(a, ones, curve));
        } catch (const CheckFailure&) {
            throw CheckFailure("inconsistent multiplicities");
        }
    }
    require(binary_gcd(nu).degree == 0, "strict transform has a base locus");
    long expected = curve.cls.degree_in_p3();
    require(nu.front().degree == expected, "strict transform degree mismatch");
    SpaceCurve C{static_cast<int>(expected), nu, std::make_shared<const PlaneModelCurve>(curve)};
    if (expected >= 3) {
        FieldMatrix span(F, 4, static_cast<std::size_t>(expected) + 1);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i <= static_cast<std::size_t>(expected); ++i)
                span.at(j, i) = nu[j].c[i];
        require(span.rank() == 4, "strict transform is degenerate");
    }
    require(compose(X.cubic_equation, nu).is_zero(), "strict transform leaves the surface");
    return C;
}

// ---------------------------------------------------------------------------
// Nodal plane curves in the assigned linear systems and their
// parametrizations.
// ---------------------------------------------------------------------------

enum class NodalSystem {
    quartic_three_nodes,  // nodes at P1, P2, P3, avoiding P4, P5, P6
    cubic_one_node        // node at P1, through P2 and P3, avoiding P4, P5, P6
};

inline std::size_t expected_system_dim(NodalSystem s) {
    return s == NodalSystem::quartic_three_nodes ? 6 : 5;
}

inline Form nodal_curve(const CubicSurfaceModel& X, NodalSystem sys, SplitMix64& rng) {
    Zp F = X.F;
    std::vector<PointCondition> conds;
    int degree = 0;
    if (sys == NodalSystem::quartic_three_nodes) {
        degree = 4;
        conds = {{X.P(0), 2}, {X.P(1), 2}, {X.P(2), 2}};
    } else {
        degree = 3;
        conds = {{X.P(0), 2}, {X.P(1), 1}, {X.P(2), 1}};
    }
    FieldMatrix basis = plane_system(F, degree, conds);
    require(basis.cols() == expected_system_dim(sys), "nodal system has unexpected dimension");
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::uint32_t> coeffs(basis.cols());
        for (auto& c : coeffs) c = rng.field_element(F);
        Form f = system_member(F, degree, basis, coeffs);
        if (f.is_zero()) continue;
        bool avoids = true;
        for (int i = 3; i < 6; ++i)
            if (f.eval({X.P(i)[0], X.P(i)[1], X.P(i)[2]}) == 0) avoids = false;
        if (!avoids) continue;
        return f;
    }
    throw CheckFailure("nodal member selection exhausted retries");
}

// scan random lines for a nonsingular F_p-point of the curve, avoiding `exclude`
inline std::optional<Point2> smooth_point_scan(Zp F, const Form& f,
                                               const std::vector<Point2>& exclude,
                                               SplitMix64& rng, int line_attempts = 64) {
    for (int attempt = 0; attempt < line_attempts; ++attempt) {
        Point2 R1{rng.field_element(F), rng.field_element(F), rng.field_element(F)};
        Point2 R2{rng.field_element(F), rng.field_element(F), rng.field_element(F)};
        if (points_equal(F, R1, R2)) continue;  // not a line
        std::vector<Form> lambda;
        for (int k = 0; k < 3; ++k)
            lambda.push_back(Form::binary_linear(F, R1[static_cast<std::size_t>(k)], R2[static_cast<std::size_t>(k)]));
        Form cut = compose(f, lambda);
        if (cut.is_zero()) continue;
        for (const P1Point& r : roots_in_Fp(cut)) {
            Point2 pt;
            for (int k = 0; k < 3; ++k) pt[static_cast<std::size_t>(k)] = lambda[static_cast<std::size_t>(k)].eval({r.u, r.v});
            bool excluded = false;
            for (const Point2& e : exclude)
                if (points_equal(F, pt, e)) excluded = true;
            if (excluded) continue;
            bool smooth = false;
            for (int v = 0; v < 3; ++v)
                if (f.derivative(v).eval({pt[0], pt[1], pt[2]}) != 0) smooth = true;
            if (smooth) return pt;
        }
    }
    return std::nullopt;
}

namespace detail {

// residual parametrization of a one-nodal cubic by the pencil of lines
// through the node:  phi(v) = c(S_v) * N - H_N(S_v) * S_v
inline std::optional<PlaneModelCurve> parametrize_cubic(const CubicSurfaceModel& X,
                                                        const Form& f, SplitMix64& rng) {
    Zp F = X.F;
    const Point2& N = X.P(0);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Point2 R1{rng.field_element(F), rng.field_element(F), rng.field_element(F)};
        Point2 R2{rng.field_element(F), rng.field_element(F), rng.field_element(F)};
        if (det3(F, N, R1, R2) == 0) continue;
        std::vector<Form> sv;
        for (int j = 0; j < 3; ++j)
            sv.push_back(Form::binary_linear(F, R1[static_cast<std::size_t>(j)], R2[static_cast<std::size_t>(j)]));
        // second polar of f at N, a binary quadratic in v
        std::uint32_t half = F.inv(2);
        Form h = Form::zero(F, 2, 2);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                std::uint32_t hab = f.derivative(a).derivative(b).eval({N[0], N[1], N[2]});
                if (!hab) continue;
                h = h + (sv[static_cast<std::size_t>(a)] * sv[static_cast<std::size_t>(b)]).scaled(F.mul(hab, half));
            }
        if (h.is_zero() || !is_squarefree(h)) return std::nullopt;  // not an honest node
        Form f_sv = compose(f, sv);
        std::vector<Form> phi;
        for (int j = 0; j < 3; ++j)
            phi.push_back(f_sv.scaled(N[static_cast<std::size_t>(j)]) - h * sv[static_cast<std::size_t>(j)]);
        if (binary_gcd(phi).degree != 0) return std::nullopt;
        if (!compose(f, phi).is_zero()) return std::nullopt;

        // node factor recomputed from the minors must agree with the polar
        Form node_factor = parameter_factor(F, phi, {N[0], N[1], N[2]});
        if (node_factor.degree != 2 || !is_squarefree(node_factor)) return std::nullopt;
        require(proportional(F, node_factor.c, binary_gcd(h, Form::zero(F, 2, 2)).c),
                "node factor disagrees with the second polar");

        std::vector<BasePointOnCurve> bps;
        bps.push_back({0, N, 2, node_factor});
        for (int i = 1; i <= 2; ++i) {
            Form pf = parameter_factor(F, phi, {X.P(i)[0], X.P(i)[1], X.P(i)[2]});
            if (pf.degree != 1) return std::nullopt;
            bps.push_back({i, X.P(i), 1, pf});
        }
        return PlaneModelCurve{f, phi, bps, DivisorClass{3, {2, 1, 1, 0, 0, 0}}};
    }
    return std::nullopt;
}

// parametrization of a three-nodal quartic by the pencil of conics through
// the nodes and one scanned smooth point, fitted by interpolation
inline std::optional<PlaneModelCurve> parametrize_quartic(const CubicSurfaceModel& X,
                                                          const Form& f, SplitMix64& rng) {
    Zp F = X.F;
    std::array<Point2, 3> nodes{X.P(0), X.P(1), X.P(2)};
    std::vector<Point2> exclude(nodes.begin(), nodes.end());
    auto q_opt = smooth_point_scan(F, f, exclude, rng);
    if (!q_opt) return std::nullopt;
    Point2 Q = *q_opt;

    FieldMatrix pencil = plane_system(
        F, 2, {{nodes[0], 1}, {nodes[1], 1}, {nodes[2], 1}, {Q, 1}});
    if (pencil.cols() != 2) return std::nullopt;

    struct Sample {
        std::uint32_t lam, mu;
        Point2 x;
    };
    std::vector<Sample> samples;
    for (std::uint32_t k = 0; samples.size() < 25 && k < 400; ++k) {
        std::uint32_t lam = 1, mu = k;
        std::vector<std::uint32_t> co{lam, mu};
        Form conic = system_member(F, 2, pencil, co);
        if (conic.is_zero() || !conic_is_smooth(F, conic)) continue;
        auto cp = conic_parametrize(F, conic, Q, rng);
        if (!cp) continue;
        Form cut = compose(f, cp->psi);  // degree 8
        if (cut.is_zero()) continue;
        bool ok = true;
        Form residual = cut;
        try {
            for (const Point2& n : nodes) {
                Form lf = cp->factor_of(n);
                residual = exact_divide(exact_divide(residual, lf), lf);
            }
            residual = exact_divide(residual, cp->tangent_factor());
        } catch (const CheckFailure&) {
            ok = false;  // pencil degeneration; skip the sample
        }
        if (!ok || residual.degree != 1 || residual.is_zero()) continue;
        P1Point vstar = root_of_linear(F, residual);
        Point2 x;
        for (int j = 0; j < 3; ++j) x[static_cast<std::size_t>(j)] = cp->psi[static_cast<std::size_t>(j)].eval({vstar.u, vstar.v});
        if (x == Point2{0, 0, 0}) continue;
        bool degenerate = points_equal(F, x, Q);
        for (const Point2& n : nodes)
            if (points_equal(F, x, n)) degenerate = true;
        if (degenerate) continue;
        samples.push_back({lam, mu, x});
    }
    if (samples.size() < 25) return std::nullopt;

    // fit phi of degree 4 in the pencil parameter from the samples
    std::vector<std::vector<std::uint32_t>> rows;
    for (const Sample& s : samples) {
        std::array<std::uint32_t, 5> mono;
        for (int i = 0; i <= 4; ++i) {
            std::uint32_t v = 1;
            for (int k = 0; k < 4 - i; ++k) v = F.mul(v, s.lam);
            for (int k = 0; k < i; ++k) v = F.mul(v, s.mu);
            mono[static_cast<std::size_t>(i)] = v;
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                std::vector<std::uint32_t> row(15, 0);
                for (int i = 0; i <= 4; ++i) {
                    row[static_cast<std::size_t>(5 * a + i)] =
                        F.mul(mono[static_cast<std::size_t>(i)], s.x[static_cast<std::size_t>(b)]);
                    row[static_cast<std::size_t>(5 * b + i)] =
                        F.neg(F.mul(mono[static_cast<std::size_t>(i)], s.x[static_cast<std::size_t>(a)]));
                }
                rows.push_back(std::move(row));
            }
    }
    FieldMatrix ker = FieldMatrix::from_rows(F, rows).kernel_basis();
    if (ker.cols() != 1) return std::nullopt;
    std::vector<Form> phi;
    for (int j = 0; j < 3; ++j) {
        Form comp = Form::zero(F, 2, 4);
        for (int i = 0; i <= 4; ++i) comp.c[static_cast<std::size_t>(i)] = ker.at(static_cast<std::size_t>(5 * j + i), 0);
        phi.push_back(comp);
    }
    if (binary_gcd(phi).degree != 0) return std::nullopt;
    if (!compose(f, phi).is_zero()) return std::nullopt;

    std::vector<BasePointOnCurve> bps;
    for (int i = 0; i < 3; ++i) {
        Form pf = parameter_factor(F, phi, {X.P(i)[0], X.P(i)[1], X.P(i)[2]});
        if (pf.degree != 2 || !is_squarefree(pf)) return std::nullopt;
        bps.push_back({i, X.P(i), 2, pf});
    }
    // node parameter loci are pairwise disjoint
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (binary_gcd(bps[static_cast<std::size_t>(i)].param_factor,
                           bps[static_cast<std::size_t>(j)].param_factor)
                    .degree != 0)
                return std::nullopt;
    return PlaneModelCurve{f, phi, bps, DivisorClass{4, {2, 2, 2, 0, 0, 0}}};
}

}  // namespace detail

inline std::optional<PlaneModelCurve> parametrize_nodal(const CubicSurfaceModel& X,
                                                        const Form& equation, SplitMix64& rng) {
    if (equation.degree == 3) return detail::parametrize_cubic(X, equation, rng);
    if (equation.degree == 4) return detail::parametrize_quartic(X, equation, rng);
    throw CheckFailure("parametrize_nodal: unsupported degree");
}

// nodal model with parametrization, retried until all a-posteriori checks pass
inline PlaneModelCurve build_nodal_model(const CubicSurfaceModel& X, NodalSystem sys,
                                         SplitMix64& rng, int max_retries = 64,
                                         int* attempts_out = nullptr) {
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        Form f = nodal_curve(X, sys, rng);
        auto curve = parametrize_nodal(X, f, rng);
        if (!curve) continue;
        if (attempts_out) *attempts_out = attempt;
        return *curve;
    }
    throw CheckFailure("nodal model construction exhausted retries");
}

// ---------------------------------------------------------------------------
// The strict transform of the conic through P1..P5: a line on the surface.
// ---------------------------------------------------------------------------

struct ConicLineData {
    Form gamma;            // the conic through P1..P5
    PlaneModelCurve model; // plane model of the line L (phi = conic parametrization)
    LineInSpace line;      // its image in P^3
};

inline ConicLineData gamma6_transform(const CubicSurfaceModel& X, SplitMix64& rng) {
    Zp F = X.F;
    std::vector<PointCondition> conds;
    for (int i = 0; i < 5; ++i) conds.push_back({X.P(i), 1});
    FieldMatrix sys = plane_system(F, 2, conds);
    require(sys.cols() == 1, "conic through five points is not unique");
    Form gamma = system_member(F, 2, sys, {1});
    auto cp = conic_parametrize(F, gamma, X.P(0), rng);
    require(cp.has_value(), "conic through five points is singular");

    std::vector<BasePointOnCurve> bps;
    bps.push_back({0, X.P(0), 1, cp->tangent_factor()});
    for (int i = 1; i < 5; ++i) {
        Form pf = cp->factor_of(X.P(i));
        P1Point r = root_of_linear(F, pf);
        Point2 img;
        for (int j = 0; j < 3; ++j) img[static_cast<std::size_t>(j)] = cp->psi[static_cast<std::size_t>(j)].eval({r.u, r.v});
        require(points_equal(F, img, X.P(i)), "conic parameter factor misses its point");
        bps.push_back({i, X.P(i), 1, pf});
    }
    PlaneModelCurve model{gamma, cp->psi, bps, DivisorClass{2, {1, 1, 1, 1, 1, 0}}};
    SpaceCurve lc = space_curve_from_plane(X, model);
    require(lc.degree == 1, "transform of the conic is not a line");
    return ConicLineData{gamma, model, LineInSpace::from_param(F, lc.nu)};
}

}  // namespace monadcert

#endif
