// Graded pieces of polynomial rings in 2, 3 and 4 variables.
//
// Monomials of a fixed degree are ordered graded-lexicographically (exponent
// vectors descending), fixed once for the whole library so that every matrix
// is reproducible.  For nvars = 2 the basis of degree d is
// s^d, s^(d-1) t, ..., t^d, i.e. index i holds the coefficient of s^(d-i) t^i.

#ifndef MONADCERT_FORMS_HPP
#define MONADCERT_FORMS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monadcert/matrix.hpp"

namespace monadcert {

using Exponents = std::array<int, 4>;  // unused variables stay 0

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// dim of the degree-d graded piece in n variables
inline std::size_t graded_dim(int nvars, int degree) {
    if (degree < 0) return 0;
    return static_cast<std::size_t>(binomial(degree + nvars - 1, nvars - 1));
}

struct MonomialBasis {
    int nvars;
    int degree;
    std::vector<Exponents> exps;  // descending lex order

    static MonomialBasis make(int nvars, int degree) {
        require(nvars >= 2 && nvars <= 4, "monomial basis: nvars out of range");
        MonomialBasis b{nvars, degree, {}};
        if (degree < 0) return b;
        Exponents e{0, 0, 0, 0};
        gen(b, e, 0, degree);
        return b;
    }

    std::size_t size() const { return exps.size(); }

    std::size_t index_of(const Exponents& e) const {
        auto it = std::lower_bound(exps.begin(), exps.end(), e,
                                   [](const Exponents& a, const Exponents& b) { return a > b; });
        require(it != exps.end() && *it == e, "monomial not in basis");
        return static_cast<std::size_t>(it - exps.begin());
    }

private:
    static void gen(MonomialBasis& b, Exponents& e, int var, int rem) {
        if (var == b.nvars - 1) {
            e[var] = rem;
            b.exps.push_back(e);
            e[var] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[var] = k;
            gen(b, e, var + 1, rem - k);
        }
        e[var] = 0;
    }
};

// Dense homogeneous form of fixed degree.  The zero form keeps its nominal
// degree; is_zero() distinguishes it.
struct Form {
    Zp F;
    int nvars;
    int degree;
    std::vector<std::uint32_t> c;

    static Form zero(Zp F, int nvars, int degree) {
        return Form{F, nvars, degree,
                    std::vector<std::uint32_t>(graded_dim(nvars, degree), 0)};
    }
    static Form constant(Zp F, int nvars, std::uint32_t value) {
        Form f = zero(F, nvars, 0);
        f.c[0] = F.reduce(value);
        return f;
    }
    // linear binary form  a*s + b*t
    static Form binary_linear(Zp F, std::uint32_t a, std::uint32_t b) {
        Form f = zero(F, 2, 1);
        f.c[0] = F.reduce(a);
        f.c[1] = F.reduce(b);
        return f;
    }
    // the linear binary form vanishing at the point [u : v] of P^1
    static Form vanishing_at(Zp F, std::uint32_t u, std::uint32_t v) {
        return binary_linear(F, v, F.neg(u));
    }
    static Form random(Zp F, int nvars, int degree, SplitMix64& rng) {
        Form f = zero(F, nvars, degree);
        for (auto& x : f.c) x = rng.field_element(F);
        return f;
    }

    bool is_zero() const {
        for (auto v : c)
            if (v) return false;
        return true;
    }

    Form& check_shape() {
        require(c.size() == graded_dim(nvars, degree), "form: coefficient length mismatch");
        return *this;
    }

    friend Form operator+(const Form& a, const Form& b) {
        require(a.nvars == b.nvars && a.degree == b.degree, "form add: shape mismatch");
        Form out = a;
        for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.F.add(a.c[i], b.c[i]);
        return out;
    }
    friend Form operator-(const Form& a, const Form& b) {
        require(a.nvars == b.nvars && a.degree == b.degree, "form sub: shape mismatch");
        Form out = a;
        for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.F.sub(a.c[i], b.c[i]);
        return out;
    }
    Form scaled(std::uint32_t k) const {
        Form out = *this;
        for (auto& x : out.c) x = F.mul(x, k);
        return out;
    }

    friend Form operator*(const Form& a, const Form& b) {
        require(a.nvars == b.nvars, "form mul: nvars mismatch");
        Form out = zero(a.F, a.nvars, a.degree + b.degree);
        if (a.is_zero() || b.is_zero()) return out;
        MonomialBasis ba = MonomialBasis::make(a.nvars, a.degree);
        MonomialBasis bb = MonomialBasis::make(b.nvars, b.degree);
        MonomialBasis bo = MonomialBasis::make(a.nvars, a.degree + b.degree);
        for (std::size_t i = 0; i < ba.size(); ++i) {
            if (!a.c[i]) continue;
            for (std::size_t j = 0; j < bb.size(); ++j) {
                if (!b.c[j]) continue;
                Exponents e{};
                for (int v = 0; v < a.nvars; ++v) e[v] = ba.exps[i][v] + bb.exps[j][v];
                std::size_t k = bo.index_of(e);
                out.c[k] = a.F.add(out.c[k], a.F.mul(a.c[i], b.c[j]));
            }
        }
        return out;
    }

    std::uint32_t eval(const std::vector<std::uint32_t>& point) const {
        require(static_cast<int>(point.size()) == nvars, "eval: wrong point dimension");
        MonomialBasis b = MonomialBasis::make(nvars, degree);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!c[i]) continue;
            std::uint64_t term = c[i];
            for (int v = 0; v < nvars; ++v)
                for (int k = 0; k < b.exps[i][v]; ++k) term = term * point[v] % F.p;
            acc = (acc + term) % F.p;
        }
        return static_cast<std::uint32_t>(acc);
    }

    Form derivative(int var) const {
        require(var >= 0 && var < nvars, "derivative: bad variable");
        if (degree == 0) return zero(F, nvars, 0);
        Form out = zero(F, nvars, degree - 1);
        MonomialBasis b = MonomialBasis::make(nvars, degree);
        MonomialBasis bo = MonomialBasis::make(nvars, degree - 1);
        for (std::size_t i = 0; i < b.size(); ++i) {
            int e = b.exps[i][var];
            if (!c[i] || e == 0) continue;
            Exponents ex = b.exps[i];
            ex[var] -= 1;
            std::size_t k = bo.index_of(ex);
            out.c[k] = F.add(out.c[k], F.mul(c[i], static_cast<std::uint32_t>(e % F.p)));
        }
        return out;
    }
};

// Substitute forms (all of the same inner shape) for the variables of f.
// Used for pullbacks along parametrizations and along the anticanonical map.
inline Form compose(const Form& f, const std::vector<Form>& args) {
    require(static_cast<int>(args.size()) == f.nvars, "compose: arity mismatch");
    int inner_vars = args.front().nvars;
    int inner_deg = args.front().degree;
    for (const Form& a : args)
        require(a.nvars == inner_vars && a.degree == inner_deg,
                "compose: arguments must share a common shape");
    Form out = Form::zero(f.F, inner_vars, f.degree * inner_deg);
    MonomialBasis b = MonomialBasis::make(f.nvars, f.degree);
    // power tables args[v]^k for k <= degree
    std::vector<std::vector<Form>> pw(args.size());
    for (std::size_t v = 0; v < args.size(); ++v) {
        pw[v].push_back(Form::constant(f.F, inner_vars, 1));
        for (int k = 1; k <= f.degree; ++k) pw[v].push_back(pw[v].back() * args[v]);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!f.c[i]) continue;
        Form term = Form::constant(f.F, inner_vars, f.c[i]);
        for (int v = 0; v < f.nvars; ++v)
            if (b.exps[i][v]) term = term * pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(b.exps[i][v])];
        // pad term degree: powers of mixed degrees already align because all
        // args share one degree and exponents sum to f.degree
        Form lifted = Form::zero(f.F, inner_vars, out.degree);
        require(term.degree == out.degree, "compose: degree bookkeeping failed");
        lifted.c = term.c;
        out = out + lifted;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Univariate toolkit for binary forms (nvars == 2).
//
// A binary form of degree d factors as s^a * (s-adic unit part); the unit
// part corresponds to a univariate polynomial of exact degree d - a in t.
// gcd / division reduce to the univariate case with s-multiplicity tracking.
// ---------------------------------------------------------------------------

namespace detail {

// coefficients of f(1, t); trailing zeros trimmed
inline std::vector<std::uint32_t> dehomogenize(const Form& f) {
    std::vector<std::uint32_t> u = f.c;
    while (!u.empty() && u.back() == 0) u.pop_back();
    return u;
}

inline int s_multiplicity(const Form& f) {
    require(!f.is_zero(), "s_multiplicity of zero form");
    int top = 0;
    for (int i = 0; i <= f.degree; ++i)
        if (f.c[static_cast<std::size_t>(i)]) top = i;
    return f.degree - top;
}

inline std::vector<std::uint32_t> poly_mod(const Zp& F, std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b) {
    while (a.size() >= b.size() && !b.empty()) {
        std::uint32_t q = F.div(a.back(), b.back());
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = F.sub(a[off + i], F.mul(q, b[i]));
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline std::vector<std::uint32_t> poly_gcd(const Zp& F, std::vector<std::uint32_t> a,
                                           std::vector<std::uint32_t> b) {
    while (!b.empty()) {
        auto r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint32_t lead_inv = F.inv(a.back());
        for (auto& x : a) x = F.mul(x, lead_inv);
    }
    return a;
}

inline Form homogenize(const Zp& F, const std::vector<std::uint32_t>& u, int s_mult) {
    int udeg = static_cast<int>(u.size()) - 1;
    Form out = Form::zero(F, 2, udeg + s_mult);
    for (int i = 0; i <= udeg; ++i) out.c[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace detail

// monic gcd of two binary forms; gcd(f, 0) = monic(f)
inline Form binary_gcd(const Form& f, const Form& g) {
    require(f.nvars == 2 && g.nvars == 2, "binary_gcd: binary forms required");
    if (f.is_zero() && g.is_zero()) return Form::zero(f.F, 2, 0);
    if (g.is_zero()) {
        auto u = detail::dehomogenize(f);
        std::uint32_t li = f.F.inv(u.back());
        for (auto& x : u) x = f.F.mul(x, li);
        return detail::homogenize(f.F, u, detail::s_multiplicity(f));
    }
    if (f.is_zero()) return binary_gcd(g, f);
    int sm = std::min(detail::s_multiplicity(f), detail::s_multiplicity(g));
    auto u = detail::poly_gcd(f.F, detail::dehomogenize(f), detail::dehomogenize(g));
    return detail::homogenize(f.F, u, sm);
}

inline Form binary_gcd(const std::vector<Form>& fs) {
    require(!fs.empty(), "binary_gcd: empty list");
    Form g = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) g = binary_gcd(g, fs[i]);
    if (g.is_zero()) return g;
    return g;
}

// exact division of binary forms; throws "not divisible" on nonzero remainder
inline Form exact_divide(const Form& f, const Form& g) {
    require(f.nvars == 2 && g.nvars == 2, "exact_divide: binary forms required");
    require(!g.is_zero(), "exact_divide: division by zero form");
    if (f.is_zero()) return Form::zero(f.F, 2, f.degree - g.degree);
    if (f.degree < g.degree) throw CheckFailure("not divisible");
    const Zp& F = f.F;
    int smf = detail::s_multiplicity(f), smg = detail::s_multiplicity(g);
    if (smf < smg) throw CheckFailure("not divisible");
    auto a = detail::dehomogenize(f);
    auto b = detail::dehomogenize(g);
    std::vector<std::uint32_t> q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint32_t qc = F.div(a.back(), b.back());
        std::size_t off = a.size() - b.size();
        q[off] = qc;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = F.sub(a[off + i], F.mul(qc, b[i]));
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) throw CheckFailure("not divisible");
    return detail::homogenize(F, q, smf - smg);
}

// squarefree <=> no repeated root, including the point at infinity
inline bool is_squarefree(const Form& f) {
    require(f.nvars == 2 && !f.is_zero(), "is_squarefree: nonzero binary form required");
    if (detail::s_multiplicity(f) >= 2) return false;
    auto u = detail::dehomogenize(f);
    if (u.size() <= 1) return true;
    std::vector<std::uint32_t> du(u.size() - 1);
    for (std::size_t i = 1; i < u.size(); ++i)
        du[i - 1] = f.F.mul(u[i], static_cast<std::uint32_t>(i % f.F.p));
    while (!du.empty() && du.back() == 0) du.pop_back();
    if (du.empty()) return false;  // cannot happen for squarefree f when p > deg f
    return detail::poly_gcd(f.F, u, du).size() == 1;
}

struct P1Point {
    std::uint32_t u, v;  // homogeneous [u : v]
    bool operator==(const P1Point&) const = default;
};

inline std::uint32_t eval_p1(const Form& f, const P1Point& pt) {
    return f.eval({pt.u, pt.v});
}

// All F_p-rational roots of a binary form, by exhaustive scan of the p + 1
// points of P^1(F_p).  Microseconds at p ~ 3e4; no factorization needed.
inline std::vector<P1Point> roots_in_Fp(const Form& f) {
    require(f.nvars == 2 && !f.is_zero(), "roots_in_Fp: nonzero binary form required");
    const Zp& F = f.F;
    std::vector<P1Point> roots;
    auto u = detail::dehomogenize(f);
    for (std::uint32_t t = 0; t < F.p; ++t) {
        std::uint64_t acc = 0;  // Horner on f(1, t)
        for (std::size_t i = u.size(); i-- > 0;) acc = (acc * t + u[i]) % F.p;
        if (acc == 0) roots.push_back({1, t});
    }
    if (f.c[static_cast<std::size_t>(f.degree)] == 0) roots.push_back({0, 1});
    return roots;
}

// ---------------------------------------------------------------------------
// Matrices of graded maps.
// ---------------------------------------------------------------------------

// Matrix of multiplication by g from the degree-a piece to degree a + deg g.
inline FieldMatrix mult_matrix(const Form& g, int a) {
    MonomialBasis src = MonomialBasis::make(g.nvars, a);
    MonomialBasis gb = MonomialBasis::make(g.nvars, g.degree);
    MonomialBasis dst = MonomialBasis::make(g.nvars, a + g.degree);
    FieldMatrix m(g.F, dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
        for (std::size_t i = 0; i < gb.size(); ++i) {
            if (!g.c[i]) continue;
            Exponents e{};
            for (int v = 0; v < g.nvars; ++v) e[v] = src.exps[j][v] + gb.exps[i][v];
            std::size_t r = dst.index_of(e);
            m.at(r, j) = g.F.add(m.at(r, j), g.c[i]);
        }
    return m;
}

// Row of evaluation at a point: entries are the monomial values.
inline std::vector<std::uint32_t> evaluation_row(Zp F, int nvars, int degree,
                                                 const std::vector<std::uint32_t>& point) {
    MonomialBasis b = MonomialBasis::make(nvars, degree);
    std::vector<std::uint32_t> row(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t term = 1;
        for (int v = 0; v < nvars; ++v)
            for (int k = 0; k < b.exps[i][v]; ++k) term = term * point[static_cast<std::size_t>(v)] % F.p;
        row[i] = static_cast<std::uint32_t>(term);
    }
    return row;
}

// Matrix of f |-> f o nu from the degree-l piece in n + 1 variables to binary
// forms of degree e*l, for a base-point-free parametrization nu : P^1 -> P^n.
inline FieldMatrix pullback_matrix(const std::vector<Form>& nu, int l) {
    require(!nu.empty(), "pullback_matrix: empty parametrization");
    const Zp F = nu.front().F;
    int e = nu.front().degree;
    for (const Form& comp : nu)
        require(comp.nvars == 2 && comp.degree == e, "pullback_matrix: components must be binary of one degree");
    if (binary_gcd(nu).degree != 0)
        throw CheckFailure("parametrization has base points");
    int nvars = static_cast<int>(nu.size());
    MonomialBasis src = MonomialBasis::make(nvars, l);
    FieldMatrix m(F, graded_dim(2, e * l), src.size());
    // power tables
    std::vector<std::vector<Form>> pw(nu.size());
    for (std::size_t v = 0; v < nu.size(); ++v) {
        pw[v].push_back(Form::constant(F, 2, 1));
        for (int k = 1; k <= l; ++k) pw[v].push_back(pw[v].back() * nu[v]);
    }
    for (std::size_t j = 0; j < src.size(); ++j) {
        Form col = Form::constant(F, 2, 1);
        for (int v = 0; v < nvars; ++v)
            if (src.exps[j][v]) col = col * pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(src.exps[j][v])];
        require(col.degree == e * l, "pullback_matrix: degree bookkeeping failed");
        for (std::size_t i = 0; i < col.c.size(); ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

// Reinterpret a coefficient vector as a form.
inline Form form_from_vector(Zp F, int nvars, int degree, const std::vector<std::uint32_t>& v) {
    Form f = Form::zero(F, nvars, degree);
    require(v.size() == f.c.size(), "form_from_vector: size mismatch");
    f.c = v;
    return f;
}

// product of the linear factors vanishing at the given points of P^1
inline Form binary_from_roots(Zp F, const std::vector<P1Point>& pts) {
    Form f = Form::constant(F, 2, 1);
    for (const P1Point& pt : pts) f = f * Form::vanishing_at(F, pt.u, pt.v);
    return f;
}

}  // namespace monadcert

#endif
