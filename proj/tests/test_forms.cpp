#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monadcert/forms.hpp"

using namespace monadcert;

namespace {
const Zp F{32003};

std::vector<Form> twisted_cubic(Zp field) {
    // nu = (s^3, s^2 t, s t^2, t^3)
    std::vector<Form> nu;
    for (int i = 0; i < 4; ++i) {
        Form f = Form::zero(field, 2, 3);
        f.c[static_cast<std::size_t>(i)] = 1;
        nu.push_back(f);
    }
    return nu;
}
}  // namespace

TEST_CASE("graded dimensions") {
    CHECK(graded_dim(4, 3) == 20);  // dim S_3 on P^3
    CHECK(graded_dim(4, 1) == 4);
    CHECK(graded_dim(4, 2) == 10);
    CHECK(graded_dim(3, 4) == 15);
    CHECK(graded_dim(2, 7) == 8);
    CHECK(graded_dim(4, -1) == 0);
}

TEST_CASE("monomial basis ordering and index lookup round-trip") {
    MonomialBasis b = MonomialBasis::make(4, 2);
    REQUIRE(b.size() == 10);
    CHECK(b.exps.front() == Exponents{2, 0, 0, 0});
    CHECK(b.exps.back() == Exponents{0, 0, 0, 2});
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.exps[i]) == i);
}

TEST_CASE("multiplication by a degree-0 form is the identity matrix") {
    Form one = Form::constant(F, 4, 1);
    CHECK(mult_matrix(one, 3) == FieldMatrix::identity(F, 20));
}

TEST_CASE("x0 * S_1 has image of dimension 4 inside S_2") {
    Form x0 = Form::zero(F, 4, 1);
    x0.c[0] = 1;
    FieldMatrix m = mult_matrix(x0, 1);
    CHECK(m.rows() == 10);
    CHECK(m.cols() == 4);
    CHECK(m.rank() == 4);  // multiplication by a nonzerodivisor is injective
}

TEST_CASE("form multiplication is commutative and matches evaluation") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Form a = Form::random(F, 3, 2, rng);
        Form b = Form::random(F, 3, 3, rng);
        Form ab = a * b;
        CHECK(ab.c == (b * a).c);
        std::vector<std::uint32_t> pt = {rng.field_element(F), rng.field_element(F),
                                         rng.field_element(F)};
        CHECK(ab.eval(pt) == F.mul(a.eval(pt), b.eval(pt)));
    }
}

TEST_CASE("derivative satisfies the product rule") {
    SplitMix64 rng(4);
    Form a = Form::random(F, 3, 2, rng);
    Form b = Form::random(F, 3, 2, rng);
    for (int v = 0; v < 3; ++v) {
        Form lhs = (a * b).derivative(v);
        Form rhs = a.derivative(v) * b + a * b.derivative(v);
        CHECK(lhs.c == rhs.c);
    }
}

TEST_CASE("pullback along the twisted cubic: l = 2 kernel has dimension 3") {
    FieldMatrix m = pullback_matrix(twisted_cubic(F), 2);
    CHECK(m.rows() == 7);
    CHECK(m.cols() == 10);
    CHECK(m.rank() == 7);                       // image is all of degree-6 binary forms
    CHECK(m.kernel_basis().cols() == 3);        // = h^0(I_C(2)) for the twisted cubic
}

TEST_CASE("pullback at l = 0 is the 1x1 identity") {
    FieldMatrix m = pullback_matrix(twisted_cubic(F), 0);
    CHECK(m == FieldMatrix::identity(F, 1));
}

TEST_CASE("pullback rejects parametrizations with base points") {
    std::vector<Form> nu;
    Form s = Form::binary_linear(F, 1, 0);
    Form t = Form::binary_linear(F, 0, 1);
    nu = {s * s, s * t, s * t, s * s};  // every component divisible by s
    CHECK_THROWS_WITH_AS(static_cast<void>(pullback_matrix(nu, 1)),
                         "parametrization has base points", CheckFailure);
}

TEST_CASE("pullback functoriality: (fg) o nu = (f o nu)(g o nu)") {
    auto nu = twisted_cubic(F);
    SplitMix64 rng(9);
    FieldMatrix p1 = pullback_matrix(nu, 1);
    FieldMatrix p2 = pullback_matrix(nu, 2);
    FieldMatrix p3 = pullback_matrix(nu, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Form f = Form::random(F, 4, 1, rng);
        Form g = Form::random(F, 4, 2, rng);
        Form lhs = form_from_vector(F, 2, 9, p3.apply((f * g).c));
        Form rhs = form_from_vector(F, 2, 3, p1.apply(f.c)) *
                   form_from_vector(F, 2, 6, p2.apply(g.c));
        CHECK(lhs.c == rhs.c);
    }
}

TEST_CASE("pullback is surjective for l >= e - 1 on random space curves") {
    SplitMix64 rng(31);
    for (int e = 3; e <= 6; ++e) {
        std::vector<Form> nu;
        for (int i = 0; i < 4; ++i) nu.push_back(Form::random(F, 2, e, rng));
        if (binary_gcd(nu).degree != 0) continue;
        for (int l = e - 1; l <= e + 1; ++l) {
            FieldMatrix m = pullback_matrix(nu, l);
            CHECK(m.rank() == m.rows());
        }
    }
}

TEST_CASE("binary gcd, exact division, squarefreeness, roots") {
    Form s = Form::binary_linear(F, 1, 0);
    Form t = Form::binary_linear(F, 0, 1);
    Form smt = Form::binary_linear(F, 1, F.neg(1));  // s - t

    Form f = s * t * smt;
    CHECK(is_squarefree(f));
    auto roots = roots_in_Fp(f);
    REQUIRE(roots.size() == 3);  // {0, 1, infinity}
    CHECK(std::count_if(roots.begin(), roots.end(),
                        [](const P1Point& r) { return r.u == 0; }) == 1);

    Form zero2 = Form::zero(F, 2, 3);
    Form g = binary_gcd(f.scaled(17), zero2);
    CHECK(g.degree == 3);
    // monic normalization: f(1,t) = t - t^2 has leading coefficient -1
    CHECK(g.c == f.scaled(F.neg(1)).c);

    CHECK(!is_squarefree(f * t));
    Form q = exact_divide(f * smt, smt);
    CHECK(q.c == f.c);
    CHECK_THROWS_WITH_AS(static_cast<void>(exact_divide(f, Form::binary_linear(F, 1, 5))),
                         "not divisible", CheckFailure);
}

TEST_CASE("division with s-power factors handles the point at infinity") {
    Form s = Form::binary_linear(F, 1, 0);
    Form t = Form::binary_linear(F, 0, 1);
    SplitMix64 rng(12);
    Form g = Form::random(F, 2, 3, rng);
    Form f = s * s * g * t;
    CHECK(exact_divide(f, s * s).c == (g * t).c);
    CHECK(binary_gcd(f, s * s * s).degree == 2);
}

TEST_CASE("binary_from_roots vanishes exactly at the requested points") {
    std::vector<P1Point> pts = {{1, 4}, {1, 100}, {0, 1}};
    Form f = binary_from_roots(F, pts);
    CHECK(f.degree == 3);
    for (const auto& pt : pts) CHECK(eval_p1(f, pt) == 0);
    CHECK(is_squarefree(f));
    auto roots = roots_in_Fp(f);
    CHECK(roots.size() == 3);
}

TEST_CASE("compose with plane cubics mirrors evaluation") {
    SplitMix64 rng(77);
    Form quad = Form::random(F, 4, 2, rng);
    std::vector<Form> args;
    for (int i = 0; i < 4; ++i) args.push_back(Form::random(F, 3, 3, rng));
    Form pulled = compose(quad, args);
    CHECK(pulled.degree == 6);
    std::vector<std::uint32_t> pt = {3, 1, 4};
    std::vector<std::uint32_t> img(4);
    for (int i = 0; i < 4; ++i) img[static_cast<std::size_t>(i)] = args[static_cast<std::size_t>(i)].eval(pt);
    CHECK(pulled.eval(pt) == quad.eval(img));
}
