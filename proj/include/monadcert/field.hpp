// Prime field arithmetic and seeded randomness for the monadcert library.
//
// Everything downstream (matrices, forms, cohomology tables) computes over a
// single prime field F_p.  The default modulus 32003 is large enough that
// random genericity choices succeed with overwhelming probability and small
// enough that products fit comfortably in 64-bit intermediates.

#ifndef MONADCERT_FIELD_HPP
#define MONADCERT_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monadcert {

class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

// Counters for the always-on internal consistency checks.  A full run must
// finish with zero violations; violations also throw immediately so nothing
// can be silently wrong.
struct ValidationStats {
    std::uint64_t rank_nullity_checks = 0;
    std::uint64_t euler_checks = 0;
    std::uint64_t two_route_checks = 0;
    std::uint64_t epi_section_checks = 0;  // surjectivity of H0(phi(1)) for epis mO -> kO(1)
    std::uint64_t violations = 0;

    void reset() { *this = ValidationStats{}; }
};

inline ValidationStats& stats() {
    static ValidationStats s;
    return s;
}

inline void require(bool cond, const char* what) {
    if (!cond) {
        ++stats().violations;
        throw CheckFailure(what);
    }
}

// Arithmetic in F_p.  Elements are canonical representatives in [0, p).
struct Zp {
    std::uint32_t p;

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t base = a % p, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }
    std::uint32_t inv(std::uint32_t a) const {
        require(a % p != 0, "division by zero in F_p");
        return pow(a, p - 2);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const Zp&) const = default;
};

// Montgomery batch inversion: one field inversion for n elements.  An
// optimization for evaluation-heavy loops, not a semantic contract.
inline std::vector<std::uint32_t> batch_inverse(const Zp& F,
                                                const std::vector<std::uint32_t>& xs) {
    std::vector<std::uint32_t> prefix(xs.size());
    std::uint32_t acc = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        require(xs[i] % F.p != 0, "batch_inverse: zero element");
        prefix[i] = acc;
        acc = F.mul(acc, xs[i]);
    }
    std::uint32_t inv_all = F.inv(acc);
    std::vector<std::uint32_t> out(xs.size());
    for (std::size_t i = xs.size(); i-- > 0;) {
        out[i] = F.mul(inv_all, prefix[i]);
        inv_all = F.mul(inv_all, xs[i]);
    }
    return out;
}

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Deterministic splittable RNG (splitmix64).  Every random choice in the
// library flows through one of these, seeded explicitly, so identical
// (prime, seed) runs are bit-for-bit reproducible.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    std::uint32_t field_element(const Zp& F) {
        return static_cast<std::uint32_t>(below(F.p));
    }
    std::uint32_t nonzero(const Zp& F) {
        return static_cast<std::uint32_t>(1 + below(F.p - 1));
    }
};

// Derive an independent stream for worker `index` of a run seeded by `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
    mix.next();
    return mix.next();
}

// Shared run context: the prime and the master seed.
struct FieldCtx {
    std::uint32_t p = 32003;
    std::uint64_t rng_seed = 0;

    Zp field() const { return Zp{p}; }

    void validate() const {
        if (!is_prime_u32(p)) throw CheckFailure("modulus is not prime");
        // degrees handled at desk scale stay below ~20; keep characteristic
        // artifacts (vanishing binomials, inseparability) out of reach
        if (p <= 41) throw CheckFailure("modulus too small for the degrees in use");
    }
};

}  // namespace monadcert

#endif
