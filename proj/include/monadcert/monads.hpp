// Monad shape arithmetic, Riemann-Roch on P^3, random monad sampling, and
// display-calculus cohomology of monad cohomology sheaves.
//
// A monad here is a complex  rho O(-1) --beta--> sigma O --alpha--> tau O(1)
// with alpha surjective, beta fiberwise injective and alpha o beta = 0; its
// middle cohomology F is the object of interest, with E = F(2).  Cohomology
// of F is computed from the display: h^0/h^1 come from the section maps of
// alpha, h^2/h^3 from the dual monad via Serre duality.

#ifndef MONADCERT_MONADS_HPP
#define MONADCERT_MONADS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monadcert/certificate.hpp"
#include "monadcert/forms.hpp"

namespace monadcert {

// ---------------------------------------------------------------------------
// Shape arithmetic.
// ---------------------------------------------------------------------------

struct MonadShape {
    int g, d, r, rho, sigma, tau;
    bool operator==(const MonadShape&) const = default;
};

// d is the least degree with non-negative Brill-Noether number 4d - 3g - 12;
// the remaining counts follow from Riemann-Roch on the monad terms.
inline MonadShape shape_for_genus(int g) {
    if (g < 5 || g > 13) throw CheckFailure("genus out of range (5..13)");
    int d = static_cast<int>((3 * g + 12 + 3) / 4);  // ceil((3g+12)/4)
    MonadShape s;
    s.g = g;
    s.d = d;
    s.r = g - d + 4;
    s.rho = 4 * d - 3 * g - 12;
    s.sigma = 5 * d - 3 * g - 17;
    s.tau = 2 * d - g - 9;
    require(s.rho >= 0 && s.sigma > 0 && s.tau >= 0, "malformed shape");
    require(s.r == s.sigma - s.rho - s.tau, "shape identity r = sigma - rho - tau violated");
    require(s.rho < 4 || 4 * (d - 1) - 3 * g - 12 < 0, "d is not minimal");
    return s;
}

inline long long h0_expected(int g, int d) { return 2LL * g - 6LL * d + 58; }

// ---------------------------------------------------------------------------
// Chern data and Riemann-Roch on P^3:
//   chi = (c1^3 - 3 c1 c2 + 3 c3)/6 + (c1^2 - 2 c2) + (11/6) c1 + r
// ---------------------------------------------------------------------------

struct ChernData {
    long long r, c1, c2, c3;

    ChernData twist(long long t) const {
        ChernData o;
        o.r = r;
        o.c1 = c1 + r * t;
        o.c2 = c2 + (r - 1) * t * c1 + binomial(r, 2) * t * t;
        o.c3 = c3 + (r - 2) * t * c2 + binomial(r - 1, 2) * t * t * c1 + binomial(r, 3) * t * t * t;
        return o;
    }
    ChernData dual() const { return {r, -c1, c2, -c3}; }
    bool operator==(const ChernData&) const = default;
};

inline long long chi_p3(const ChernData& c, long long t = 0) {
    ChernData e = c.twist(t);
    long long num = (e.c1 * e.c1 * e.c1 - 3 * e.c1 * e.c2 + 3 * e.c3) + 11 * e.c1 +
                    6 * (e.c1 * e.c1 - 2 * e.c2) + 6 * e.r;
    require(num % 6 == 0, "Riemann-Roch value is not an integer: invalid Chern data");
    return num / 6;
}

// Chern data of E for the genus-g family: rank g - d + 4, c1 = 5, c2 = d,
// c3 = 2g - 2 - d.
inline ChernData chern_E(int g) {
    MonadShape s = shape_for_genus(g);
    return {s.r, 5, s.d, 2LL * g - 2 - s.d};
}

// Chern data of the middle cohomology of a monad with the given shape,
// from the total Chern class identity c(sigma O) = c(rho O(-1)) c(F) c(tau O(1)).
inline ChernData chern_of_shape(const MonadShape& s) {
    long long rho = s.rho, tau = s.tau;
    ChernData c;
    c.r = s.sigma - rho - tau;
    c.c1 = rho - tau;
    c.c2 = binomial(rho + 1, 2) + binomial(tau + 1, 2) - rho * tau;
    c.c3 = binomial(rho + 2, 3) - binomial(rho + 1, 2) * tau + rho * binomial(tau + 1, 2) -
           binomial(tau + 2, 3);
    return c;
}

// line-bundle cohomology on P^3 (used to assert transport preconditions)
inline long long h_line_bundle(int i, long long k) {
    switch (i) {
        case 0: return k >= 0 ? binomial(k + 3, 3) : 0;
        case 1:
        case 2: return 0;
        case 3: return k <= -4 ? binomial(-k - 1, 3) : 0;
        default: throw CheckFailure("h_line_bundle: bad index");
    }
}

// ---------------------------------------------------------------------------
// Monad instances and section maps.
// ---------------------------------------------------------------------------

struct MonadInstance {
    Zp F;
    MonadShape shape;
    std::vector<Form> alpha;  // tau x sigma, row-major, linear forms
    std::vector<Form> beta;   // sigma x rho, row-major, linear forms

    const Form& a(int j, int k) const {
        return alpha[static_cast<std::size_t>(j * shape.sigma + k)];
    }
    const Form& b(int k, int i) const {
        return beta[static_cast<std::size_t>(k * shape.rho + i)];
    }
};

namespace detail {

// block matrix of a graded map (c_out x c_in blocks of linear-form entries):
// S_l^{c_in} -> S_{l+1}^{c_out}
inline FieldMatrix linear_block_map(Zp F, int c_out, int c_in,
                                    const std::vector<const Form*>& entries, int l) {
    std::size_t in_dim = graded_dim(4, l), out_dim = graded_dim(4, l + 1);
    FieldMatrix m(F, static_cast<std::size_t>(c_out) * out_dim,
                  static_cast<std::size_t>(c_in) * in_dim);
    if (in_dim == 0 || out_dim == 0) return m;
    for (int j = 0; j < c_out; ++j)
        for (int k = 0; k < c_in; ++k) {
            const Form* e = entries[static_cast<std::size_t>(j * c_in + k)];
            if (!e || e->is_zero()) continue;
            FieldMatrix blk = mult_matrix(*e, l);
            for (std::size_t r = 0; r < out_dim; ++r)
                for (std::size_t c = 0; c < in_dim; ++c)
                    m.at(static_cast<std::size_t>(j) * out_dim + r,
                         static_cast<std::size_t>(k) * in_dim + c) =
                        F.add(m.at(static_cast<std::size_t>(j) * out_dim + r,
                                   static_cast<std::size_t>(k) * in_dim + c),
                              blk.at(r, c));
        }
    return m;
}

}  // namespace detail

// H^0(alpha(l)) : S_l^sigma -> S_{l+1}^tau
inline FieldMatrix alpha_section_map(const MonadInstance& m, int l) {
    std::vector<const Form*> e;
    for (const Form& f : m.alpha) e.push_back(&f);
    return detail::linear_block_map(m.F, m.shape.tau, m.shape.sigma, e, l);
}

// H^0(beta(l)) : S_{l-1}^rho -> S_l^sigma
inline FieldMatrix beta_section_map(const MonadInstance& m, int l) {
    std::vector<const Form*> e;
    for (const Form& f : m.beta) e.push_back(&f);
    return detail::linear_block_map(m.F, m.shape.sigma, m.shape.rho, e, l - 1);
}

// H^0(beta^v(l)) : S_l^sigma -> S_{l+1}^rho  (transposed entries)
inline FieldMatrix beta_dual_section_map(const MonadInstance& m, int l) {
    std::vector<const Form*> e(static_cast<std::size_t>(m.shape.rho * m.shape.sigma), nullptr);
    for (int k = 0; k < m.shape.sigma; ++k)
        for (int i = 0; i < m.shape.rho; ++i)
            e[static_cast<std::size_t>(i * m.shape.sigma + k)] = &m.b(k, i);
    return detail::linear_block_map(m.F, m.shape.rho, m.shape.sigma, e, l);
}

// H^0(alpha^v(l)) : S_l^tau -> S_{l+1}^sigma
inline FieldMatrix alpha_dual_section_map(const MonadInstance& m, int l) {
    std::vector<const Form*> e(static_cast<std::size_t>(m.shape.sigma * m.shape.tau), nullptr);
    for (int j = 0; j < m.shape.tau; ++j)
        for (int k = 0; k < m.shape.sigma; ++k)
            e[static_cast<std::size_t>(k * m.shape.tau + j)] = &m.a(j, k);
    return detail::linear_block_map(m.F, m.shape.sigma, m.shape.tau, e, l);
}

// (h^0, h^1, h^2, h^3) of F(l) for the cohomology sheaf F of the monad.
//   h^0 = dim ker H^0(alpha(l)) - rho dim S_{l-1}   (beta section map injective)
//   h^1 = dim coker H^0(alpha(l))
//   h^i = h^{3-i} of the dual monad at -l-4 (Serre duality), i = 2, 3
inline std::array<long long, 4> display_cohomology(const MonadInstance& m, int l) {
    std::array<long long, 4> h{0, 0, 0, 0};
    {
        FieldMatrix a = alpha_section_map(m, l);
        std::size_t rank = a.rank();
        long long ker = static_cast<long long>(a.cols()) - static_cast<long long>(rank);
        long long sub = m.shape.rho * static_cast<long long>(graded_dim(4, l - 1));
        if (sub > 0) {
            FieldMatrix b = beta_section_map(m, l);
            require(static_cast<long long>(b.rank()) == sub,
                    "beta section map is not injective (non-minimal monad)");
        }
        h[0] = ker - sub;
        h[1] = static_cast<long long>(a.rows()) - static_cast<long long>(rank);
    }
    {
        int md = -l - 4;  // dual twist
        FieldMatrix a = beta_dual_section_map(m, md);
        std::size_t rank = a.rank();
        long long ker = static_cast<long long>(a.cols()) - static_cast<long long>(rank);
        long long sub = m.shape.tau * static_cast<long long>(graded_dim(4, md - 1));
        if (sub > 0) {
            FieldMatrix b = alpha_dual_section_map(m, md - 1);
            require(static_cast<long long>(b.rank()) == sub,
                    "alpha dual section map is not injective (non-minimal monad)");
        }
        h[3] = ker - sub;                                                   // h^0(F^v(-l-4))
        h[2] = static_cast<long long>(a.rows()) - static_cast<long long>(rank);  // h^1(F^v(-l-4))
    }
    require(h[0] >= 0 && h[3] >= 0, "display cohomology produced a negative dimension");

    // Euler consistency against Riemann-Roch, on every call
    ChernData cf = chern_of_shape(m.shape);
    ++stats().euler_checks;
    require(h[0] - h[1] + h[2] - h[3] == chi_p3(cf, l),
            "display cohomology disagrees with Riemann-Roch");
    return h;
}

// ---------------------------------------------------------------------------
// Sampling.
// ---------------------------------------------------------------------------

// evaluate the alpha matrix at a point
inline FieldMatrix alpha_at_point(const MonadInstance& m, const std::vector<std::uint32_t>& x) {
    FieldMatrix a(m.F, static_cast<std::size_t>(m.shape.tau), static_cast<std::size_t>(m.shape.sigma));
    for (int j = 0; j < m.shape.tau; ++j)
        for (int k = 0; k < m.shape.sigma; ++k)
            a.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = m.a(j, k).eval(x);
    return a;
}
inline FieldMatrix beta_at_point(const MonadInstance& m, const std::vector<std::uint32_t>& x) {
    FieldMatrix b(m.F, static_cast<std::size_t>(m.shape.sigma), static_cast<std::size_t>(m.shape.rho));
    for (int k = 0; k < m.shape.sigma; ++k)
        for (int i = 0; i < m.shape.rho; ++i)
            b.at(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = m.b(k, i).eval(x);
    return b;
}

// beta is fiberwise injective for rho = 1 iff its sigma linear entries span a
// 4-dimensional space of linear forms (a common zero exists iff rank <= 3)
inline bool beta_entries_span_rank4(const MonadInstance& m) {
    if (m.shape.rho == 0) return true;
    FieldMatrix coeff(m.F, static_cast<std::size_t>(m.shape.sigma * m.shape.rho), 4);
    for (std::size_t i = 0; i < m.beta.size(); ++i)
        for (std::size_t c = 0; c < 4; ++c) coeff.at(i, c) = m.beta[i].c[c];
    return coeff.rank() == 4;
}

struct MonadEvidence {
    long long alpha_corank0_samples = 0;
    long long beta_fullrank_samples = 0;
    bool beta_exact_rank4 = false;       // exact certificate, meaningful for rho <= 1
    bool beta_line_gcd_trivial = false;  // minor gcd 1 on random lines, for rho >= 2
};

inline MonadInstance sample_monad(const MonadShape& shape, Zp F, SplitMix64& rng,
                                  MonadEvidence* evidence = nullptr, int point_samples = 256) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        MonadInstance m{F, shape, {}, {}};
        for (int i = 0; i < shape.sigma * shape.rho; ++i)
            m.beta.push_back(Form::random(F, 4, 1, rng));

        // rows of alpha live in the kernel of pairing with beta
        FieldMatrix pairing = beta_dual_section_map(m, 1);  // S_1^sigma -> S_2^rho
        FieldMatrix ker = pairing.kernel_basis();
        if (shape.rho > 0 && pairing.rank() != static_cast<std::size_t>(10 * shape.rho))
            continue;  // degenerate beta
        std::size_t s1 = graded_dim(4, 1);
        m.alpha.assign(static_cast<std::size_t>(shape.tau * shape.sigma),
                       Form::zero(F, 4, 1));
        for (int j = 0; j < shape.tau; ++j) {
            std::vector<std::uint32_t> row(static_cast<std::size_t>(shape.sigma) * s1, 0);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                std::uint32_t w = rng.field_element(F);
                for (std::size_t rix = 0; rix < ker.rows(); ++rix)
                    row[rix] = F.add(row[rix], F.mul(w, ker.at(rix, c)));
            }
            for (int k = 0; k < shape.sigma; ++k) {
                Form e = Form::zero(F, 4, 1);
                for (std::size_t c = 0; c < s1; ++c)
                    e.c[c] = row[static_cast<std::size_t>(k) * s1 + c];
                m.alpha[static_cast<std::size_t>(j * shape.sigma + k)] = e;
            }
        }

        // alpha o beta = 0, entry-wise zero quadrics
        bool composite_zero = true;
        for (int j = 0; j < shape.tau && composite_zero; ++j)
            for (int i = 0; i < shape.rho && composite_zero; ++i) {
                Form q = Form::zero(F, 4, 2);
                for (int k = 0; k < shape.sigma; ++k) q = q + m.a(j, k) * m.b(k, i);
                if (!q.is_zero()) composite_zero = false;
            }
        require(composite_zero, "alpha o beta != 0 after kernel sampling");

        MonadEvidence ev;
        bool ok = true;
        SplitMix64 sample_rng(derive_seed(rng.next(), 17));
        for (int t = 0; t < point_samples && ok; ++t) {
            std::vector<std::uint32_t> x = {sample_rng.field_element(F), sample_rng.field_element(F),
                                            sample_rng.field_element(F), sample_rng.field_element(F)};
            if (x == std::vector<std::uint32_t>{0, 0, 0, 0}) x[0] = 1;
            if (alpha_at_point(m, x).rank() != static_cast<std::size_t>(shape.tau)) ok = false;
            ++ev.alpha_corank0_samples;
            if (shape.rho > 0) {
                if (beta_at_point(m, x).rank() != static_cast<std::size_t>(shape.rho)) ok = false;
                ++ev.beta_fullrank_samples;
            }
        }
        if (!ok) continue;
        if (shape.rho == 1) {
            ev.beta_exact_rank4 = beta_entries_span_rank4(m);
            if (!ev.beta_exact_rank4) continue;
        }
        if (shape.rho >= 2) {
            // restrict beta to random lines; the rho x rho minor gcd must be 1
            bool all_lines_ok = true;
            for (int line = 0; line < 8 && all_lines_ok; ++line) {
                std::vector<Form> lam;
                for (int c = 0; c < 4; ++c)
                    lam.push_back(Form::binary_linear(F, sample_rng.field_element(F),
                                                      sample_rng.field_element(F)));
                std::vector<std::vector<Form>> restricted(
                    static_cast<std::size_t>(shape.sigma));
                for (int k = 0; k < shape.sigma; ++k)
                    for (int i = 0; i < shape.rho; ++i)
                        restricted[static_cast<std::size_t>(k)].push_back(compose(m.b(k, i), lam));
                // take gcd over determinants of rho-row subsets until it is 1
                Form g = Form::zero(F, 2, 0);
                bool first = true;
                for (int k1 = 0; k1 < shape.sigma && (first || g.degree > 0); ++k1)
                    for (int k2 = k1 + 1; k2 < shape.sigma && (first || g.degree > 0); ++k2) {
                        Form det = Form::zero(F, 2, 2 * 1);
                        if (shape.rho == 2) {
                            det = restricted[static_cast<std::size_t>(k1)][0] * restricted[static_cast<std::size_t>(k2)][1] -
                                  restricted[static_cast<std::size_t>(k1)][1] * restricted[static_cast<std::size_t>(k2)][0];
                        } else {
                            for (int k3 = k2 + 1; k3 < shape.sigma; ++k3) {
                                auto& r1 = restricted[static_cast<std::size_t>(k1)];
                                auto& r2 = restricted[static_cast<std::size_t>(k2)];
                                auto& r3 = restricted[static_cast<std::size_t>(k3)];
                                det = r1[0] * (r2[1] * r3[2] - r2[2] * r3[1]) -
                                      r1[1] * (r2[0] * r3[2] - r2[2] * r3[0]) +
                                      r1[2] * (r2[0] * r3[1] - r2[1] * r3[0]);
                                if (!det.is_zero()) break;
                            }
                        }
                        if (det.is_zero()) continue;
                        g = first ? binary_gcd(det, Form::zero(F, 2, det.degree)) : binary_gcd(g, det);
                        first = false;
                    }
                if (first || g.degree != 0) all_lines_ok = false;
            }
            ev.beta_line_gcd_trivial = all_lines_ok;
            if (!all_lines_ok) continue;
        }
        if (evidence) *evidence = ev;
        return m;
    }
    throw CheckFailure("monad sampling exhausted retries (degenerate samples)");
}

// ---------------------------------------------------------------------------
// Surjectivity of H^0(phi(1)) for an epimorphism phi : m O -> k O(1) given by
// its section matrix S_1^m -> S_2^k.  Checked directly whenever such a map is
// encountered; for k <= 2 it is also a guaranteed property, which makes the
// check a tested invariant.
// ---------------------------------------------------------------------------

inline bool check_h0_twist_surjective(const FieldMatrix& section_map_l1, int copies_out) {
    ++stats().epi_section_checks;
    return section_map_l1.rank() == static_cast<std::size_t>(10 * copies_out);
}

// ---------------------------------------------------------------------------
// Theorem-condition verification for sampled monads.
// ---------------------------------------------------------------------------

inline Certificate verify_theorem_conditions(const MonadInstance& m, const MonadEvidence& ev,
                                             std::uint64_t seed) {
    const MonadShape& s = m.shape;
    Certificate cert;
    cert.scenario = "monad-sample-g" + std::to_string(s.g);
    cert.prime = m.F.p;
    cert.seed = seed;

    {
        auto& c = cert.add("monad_shape",
                           "(rho,sigma,tau,r) matches the genus-" + std::to_string(s.g) + " family",
                           s == shape_for_genus(s.g));
        c.dims = {{"rho", s.rho}, {"sigma", s.sigma}, {"tau", s.tau}, {"r", s.r}};
    }
    {
        auto& c = cert.add("alpha_surjective_evidence",
                           "corank of alpha is 0 at every sampled point", ev.alpha_corank0_samples > 0);
        c.samples = ev.alpha_corank0_samples;
    }
    if (s.rho > 0) {
        bool passed = s.rho == 1 ? ev.beta_exact_rank4
                                 : (ev.beta_fullrank_samples > 0 && ev.beta_line_gcd_trivial);
        auto& c = cert.add("beta_fiberwise_injective",
                           s.rho == 1 ? "the sigma linear entries of beta span a rank-4 space"
                                      : "beta has full rank at sampled points and on random lines",
                           passed);
        c.samples = ev.beta_fullrank_samples;
    }
    {
        // condition (a): H^0(beta^v(1)) surjective, i.e. S_1^sigma -> S_2^rho has rank 10 rho
        bool passed = s.rho == 0 ||
                      beta_dual_section_map(m, 1).rank() == static_cast<std::size_t>(10 * s.rho);
        if (s.rho > 0 && s.rho <= 2) {
            // guaranteed for <= 2 copies of O(1); recorded as a tested invariant
            ++stats().epi_section_checks;
            require(passed, "H0(beta^v(1)) surjectivity failed where it is guaranteed");
        }
        auto& c = cert.add("h0_beta_dual_twist_surjective",
                           "H0(sigma O(1)) -> H0(rho O(2)) is surjective", passed);
        c.dims = {{"target", 10LL * s.rho}};
    }

    if (s.tau == 2) {
        // alpha is an epimorphism onto two copies of O(1); the surjectivity
        // of its twisted section map is guaranteed and checked anyway
        bool surj = check_h0_twist_surjective(alpha_section_map(m, 1), 2);
        require(surj, "H0(alpha(1)) surjectivity failed where it is guaranteed");
        auto& c = cert.add("h0_alpha_twist_surjective",
                           "H0(sigma O(1)) -> H0(2 O(2)) is surjective", surj);
        c.dims = {{"target", 20}};
    }

    auto hF2 = display_cohomology(m, 2);
    {
        auto& c = cert.add("h1_E_zero", "H1(E) = 0", hF2[1] == 0);
        c.dims = {{"h1_E", hF2[1]}};
    }
    {
        long long expect = h0_expected(s.g, s.d);
        auto& c = cert.add("h0_E_formula",
                           "h0(E) = 2g - 6d + 58 = " + std::to_string(expect),
                           hF2[0] == expect);
        c.dims = {{"h0_E_display", hF2[0]}, {"h0_E_formula", expect}};
    }
    {
        // these vanishings hold for the cohomology sheaf of any such monad;
        // checked as a property
        auto hFm1 = display_cohomology(m, -1);
        auto hFm2 = display_cohomology(m, -2);
        bool passed = hFm1[0] == 0 && hFm2[1] == 0 && hFm2[0] == 0;
        auto& c = cert.add("monad_window_vanishing", "H0(F(-1)) = 0 and H0/H1(F(-2)) = 0", passed);
        c.dims = {{"h0_F_m1", hFm1[0]}, {"h0_F_m2", hFm2[0]}, {"h1_F_m2", hFm2[1]}};
    }

    if (s.g <= 12) {
        // global generation of E via regularity; for g <= 9 the stronger
        // 0-regularity already holds
        auto hF1 = display_cohomology(m, 1);
        auto hF0 = display_cohomology(m, 0);
        auto hFm1 = display_cohomology(m, -1);
        if (s.g <= 9) {
            bool zero_reg = hF1[1] == 0 && hF0[2] == 0 && hFm1[3] == 0;
            auto& c = cert.add("zero_regular", "E is 0-regular", zero_reg);
            c.dims = {{"h1_E_m1", hF1[1]}, {"h2_E_m2", hF0[2]}, {"h3_E_m3", hFm1[3]}};
            cert.add("globally_generated", "E is globally generated (0-regularity)", zero_reg);
        } else {
            bool one_reg = hF2[1] == 0 && hF1[2] == 0 && hF0[3] == 0;
            auto& c = cert.add("one_regular", "E is 1-regular", one_reg);
            c.dims = {{"h1_E", hF2[1]}, {"h2_E_m1", hF1[2]}, {"h3_E_m2", hF0[3]}};

            // multiplication H0(E) (x) S_1 -> H0(E(1)) surjective, computed on
            // kernel bases of the alpha section maps
            FieldMatrix k2 = alpha_section_map(m, 2).kernel_basis();
            FieldMatrix a3_ker = alpha_section_map(m, 3).kernel_basis();
            std::size_t s2dim = graded_dim(4, 2);
            FieldMatrix prod(m.F, static_cast<std::size_t>(s.sigma) * graded_dim(4, 3),
                             4 * k2.cols() + static_cast<std::size_t>(s.rho) * s2dim);
            for (int v = 0; v < 4; ++v) {
                Form xv = Form::zero(m.F, 4, 1);
                xv.c[static_cast<std::size_t>(v)] = 1;
                FieldMatrix mv = mult_matrix(xv, 2);
                for (std::size_t col = 0; col < k2.cols(); ++col)
                    for (int k = 0; k < s.sigma; ++k)
                        for (std::size_t r2 = 0; r2 < s2dim; ++r2) {
                            if (!k2.at(static_cast<std::size_t>(k) * s2dim + r2, col)) continue;
                            std::uint32_t w = k2.at(static_cast<std::size_t>(k) * s2dim + r2, col);
                            for (std::size_t r3 = 0; r3 < graded_dim(4, 3); ++r3) {
                                std::size_t rr = static_cast<std::size_t>(k) * graded_dim(4, 3) + r3;
                                std::size_t cc = static_cast<std::size_t>(v) * k2.cols() + col;
                                prod.at(rr, cc) =
                                    m.F.add(prod.at(rr, cc), m.F.mul(w, mv.at(r3, r2)));
                            }
                        }
            }
            FieldMatrix b3 = beta_section_map(m, 3);
            for (std::size_t col = 0; col < b3.cols(); ++col)
                for (std::size_t r = 0; r < b3.rows(); ++r)
                    prod.at(r, 4 * k2.cols() + col) = b3.at(r, col);
            bool surj = prod.rank() == a3_ker.cols();
            auto& cm = cert.add("mult_E_surjective", "H0(E) (x) S_1 -> H0(E(1)) is surjective", surj);
            cm.dims = {{"target_dim", static_cast<long long>(a3_ker.cols()) -
                                          static_cast<long long>(b3.cols())}};
            cert.add("globally_generated", "E is globally generated (1-regularity + multiplication)",
                     one_reg && surj);
        }
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Mixed-shape monads (extra O(-1) summands in the middle term), as produced
// by the rank-4 constructions; a general such monad cancels down to the pure
// shape because the scalar block of beta' is surjective.
// ---------------------------------------------------------------------------

struct MixedMonadInstance {
    Zp F;
    MonadShape shape;                 // the underlying pure shape
    std::vector<Form> alpha_lin;      // tau x sigma linear entries
    std::vector<Form> alpha_quad;     // tau x 2 quadratic entries
    std::vector<Form> beta_lin;       // sigma x (rho + 2) linear entries
    FieldMatrix beta_scalar;          // 2 x (rho + 2) scalar block
};

inline MixedMonadInstance sample_mixed_monad(const MonadShape& shape, Zp F, SplitMix64& rng) {
    require(shape.rho + 2 <= 4, "mixed sampling intended for the rank-4 shapes");
    const int cols_b = shape.rho + 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        MixedMonadInstance m{F, shape, {}, {}, {}, FieldMatrix(F, 2, static_cast<std::size_t>(cols_b))};
        for (int i = 0; i < shape.sigma * cols_b; ++i) m.beta_lin.push_back(Form::random(F, 4, 1, rng));
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < static_cast<std::size_t>(cols_b); ++c)
                m.beta_scalar.at(r, c) = rng.field_element(F);
        if (m.beta_scalar.rank() != 2) continue;

        // alpha rows (a_1..a_sigma; b_1, b_2) satisfy, for each column i,
        //   sum_k a_k beta_lin[k][i] + sum_m b_m beta_scalar[m][i] = 0 in S_2
        std::size_t s1 = graded_dim(4, 1), s2 = graded_dim(4, 2);
        FieldMatrix constraint(F, static_cast<std::size_t>(cols_b) * s2,
                               static_cast<std::size_t>(shape.sigma) * s1 + 2 * s2);
        for (int i = 0; i < cols_b; ++i) {
            for (int k = 0; k < shape.sigma; ++k) {
                FieldMatrix blk = mult_matrix(m.beta_lin[static_cast<std::size_t>(k * cols_b + i)], 1);
                for (std::size_t r = 0; r < s2; ++r)
                    for (std::size_t c = 0; c < s1; ++c)
                        constraint.at(static_cast<std::size_t>(i) * s2 + r,
                                      static_cast<std::size_t>(k) * s1 + c) = blk.at(r, c);
            }
            for (int mdx = 0; mdx < 2; ++mdx) {
                std::uint32_t w = m.beta_scalar.at(static_cast<std::size_t>(mdx), static_cast<std::size_t>(i));
                for (std::size_t r = 0; r < s2; ++r)
                    constraint.at(static_cast<std::size_t>(i) * s2 + r,
                                  static_cast<std::size_t>(shape.sigma) * s1 +
                                      static_cast<std::size_t>(mdx) * s2 + r) = w;
            }
        }
        FieldMatrix ker = constraint.kernel_basis();
        if (ker.cols() == 0) continue;
        m.alpha_lin.assign(static_cast<std::size_t>(shape.tau * shape.sigma), Form::zero(F, 4, 1));
        m.alpha_quad.assign(static_cast<std::size_t>(shape.tau * 2), Form::zero(F, 4, 2));
        for (int j = 0; j < shape.tau; ++j) {
            std::vector<std::uint32_t> row(ker.rows(), 0);
            for (std::size_t c = 0; c < ker.cols(); ++c) {
                std::uint32_t w = rng.field_element(F);
                for (std::size_t r = 0; r < ker.rows(); ++r)
                    row[r] = F.add(row[r], F.mul(w, ker.at(r, c)));
            }
            for (int k = 0; k < shape.sigma; ++k)
                for (std::size_t c = 0; c < s1; ++c)
                    m.alpha_lin[static_cast<std::size_t>(j * shape.sigma + k)].c[c] =
                        row[static_cast<std::size_t>(k) * s1 + c];
            for (int mdx = 0; mdx < 2; ++mdx)
                for (std::size_t c = 0; c < s2; ++c)
                    m.alpha_quad[static_cast<std::size_t>(j * 2 + mdx)].c[c] =
                        row[static_cast<std::size_t>(shape.sigma) * s1 +
                            static_cast<std::size_t>(mdx) * s2 + c];
        }
        return m;
    }
    throw CheckFailure("mixed monad sampling exhausted retries");
}

// the cancellation condition: the scalar block (rho+2)O(-1) -> 2O(-1) of
// beta' is surjective, so the monad reduces to the pure shape
inline bool mixed_monad_cancels(const MixedMonadInstance& m) {
    return m.beta_scalar.rank() == 2;
}

// H0(beta'^v(1)) surjectivity for the mixed shape:
// H0(sigma O(1) + 2 O(2)) -> H0((rho+2) O(2))
inline bool mixed_beta_dual_surjective(const MixedMonadInstance& m) {
    Zp F = m.F;
    const int cols_b = m.shape.rho + 2;
    std::size_t s1 = graded_dim(4, 1), s2 = graded_dim(4, 2);
    FieldMatrix mat(F, static_cast<std::size_t>(cols_b) * s2,
                    static_cast<std::size_t>(m.shape.sigma) * s1 + 2 * s2);
    for (int i = 0; i < cols_b; ++i) {
        for (int k = 0; k < m.shape.sigma; ++k) {
            FieldMatrix blk = mult_matrix(m.beta_lin[static_cast<std::size_t>(k * cols_b + i)], 1);
            for (std::size_t r = 0; r < s2; ++r)
                for (std::size_t c = 0; c < s1; ++c)
                    mat.at(static_cast<std::size_t>(i) * s2 + r, static_cast<std::size_t>(k) * s1 + c) =
                        blk.at(r, c);
        }
        for (int mdx = 0; mdx < 2; ++mdx) {
            std::uint32_t w = m.beta_scalar.at(static_cast<std::size_t>(mdx), static_cast<std::size_t>(i));
            for (std::size_t r = 0; r < s2; ++r)
                mat.at(static_cast<std::size_t>(i) * s2 + r,
                       static_cast<std::size_t>(m.shape.sigma) * s1 + static_cast<std::size_t>(mdx) * s2 + r) = w;
        }
    }
    return mat.rank() == static_cast<std::size_t>(cols_b) * s2;
}

}  // namespace monadcert

#endif
