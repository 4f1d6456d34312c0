// Dense exact linear algebra over F_p: the sole numeric substrate of the
// library.  Row reduction uses deterministic first-nonzero pivoting, so every
// rank, kernel and solution is reproducible bit for bit.

#ifndef MONADCERT_MATRIX_HPP
#define MONADCERT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "monadcert/field.hpp"

namespace monadcert {

class FieldMatrix {
public:
    FieldMatrix() : F_{32003}, rows_(0), cols_(0) {}
    FieldMatrix(Zp F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FieldMatrix identity(Zp F, std::size_t n) {
        FieldMatrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static FieldMatrix random(Zp F, std::size_t rows, std::size_t cols, SplitMix64& rng) {
        FieldMatrix m(F, rows, cols);
        for (auto& x : m.a_) x = rng.field_element(F);
        return m;
    }
    static FieldMatrix from_rows(Zp F, const std::vector<std::vector<std::uint32_t>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        FieldMatrix m(F, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == c, "from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = F.reduce(rows[i][j]);
        }
        return m;
    }

    Zp field() const { return F_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<std::uint32_t> row(std::size_t r) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    FieldMatrix transpose() const {
        FieldMatrix t(F_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    FieldMatrix operator*(const FieldMatrix& o) const {
        require(cols_ == o.rows_, "matrix product: inner dimensions differ");
        FieldMatrix out(F_, rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t ark = at(r, k);
                if (!ark) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    std::uint64_t v = out.at(r, c) + ark * o.at(k, c) % F_.p;
                    out.at(r, c) = static_cast<std::uint32_t>(v >= F_.p ? v - F_.p : v);
                }
            }
        return out;
    }

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
        require(v.size() == cols_, "apply: size mismatch");
        std::vector<std::uint32_t> out(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < cols_; ++c)
                acc = (acc + static_cast<std::uint64_t>(at(r, c)) * v[c]) % F_.p;
            out[r] = static_cast<std::uint32_t>(acc);
        }
        return out;
    }

    static FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
        if (a.rows_ == 0 && a.cols_ == 0) return b;
        if (b.rows_ == 0 && b.cols_ == 0) return a;
        require(a.cols_ == b.cols_ && a.F_ == b.F_, "vstack: shape mismatch");
        FieldMatrix out(a.F_, a.rows_ + b.rows_, a.cols_);
        out.a_ = a.a_;
        out.a_.insert(out.a_.end(), b.a_.begin(), b.a_.end());
        return out;
    }
    static FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b) {
        require(a.rows_ == b.rows_ && a.F_ == b.F_, "hstack: shape mismatch");
        FieldMatrix out(a.F_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
        }
        return out;
    }

    struct Rref;

    // Reduced row echelon form via Gauss-Jordan.  Pivot = first row with a
    // nonzero entry in the current column; ties broken by lowest row index.
    Rref rref() const;

    std::size_t rank() const;

    // Basis of the right kernel, one column per free variable.  Rank-nullity
    // is asserted on every call.
    FieldMatrix kernel_basis() const;

    // One solution of m x = b when the system is consistent.
    std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& b) const;

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

    bool operator==(const FieldMatrix& o) const {
        return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    Zp F_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

struct FieldMatrix::Rref {
    FieldMatrix matrix;
    std::vector<std::size_t> pivots;
};

inline FieldMatrix::Rref FieldMatrix::rref() const {
    FieldMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t sel = lead;
        while (sel < rows_ && m.at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != lead)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(lead, c));
        std::uint32_t piv_inv = F_.inv(m.at(lead, col));
        for (std::size_t c = col; c < cols_; ++c)
            m.at(lead, c) = F_.mul(m.at(lead, c), piv_inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            std::uint32_t f = m.at(r, col);
            if (!f) continue;
            for (std::size_t c = col; c < cols_; ++c)
                m.at(r, c) = F_.sub(m.at(r, c), F_.mul(f, m.at(lead, c)));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t FieldMatrix::rank() const { return rref().pivots.size(); }

inline FieldMatrix FieldMatrix::kernel_basis() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::size_t nfree = cols_ - r.pivots.size();
    FieldMatrix ker(F_, cols_, nfree);
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        ker.at(c, k) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            ker.at(r.pivots[i], k) = F_.neg(r.matrix.at(i, c));
        ++k;
    }
    ++stats().rank_nullity_checks;
    require(cols_ == r.pivots.size() + ker.cols(), "rank-nullity violated");
    return ker;
}

inline std::optional<std::vector<std::uint32_t>> FieldMatrix::solve(
    const std::vector<std::uint32_t>& b) const {
    require(b.size() == rows_, "solve: rhs length mismatch");
    FieldMatrix aug(F_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = F_.reduce(b[r]);
    }
    Rref r = aug.rref();
    if (!r.pivots.empty() && r.pivots.back() == cols_) return std::nullopt;
    std::vector<std::uint32_t> x(cols_, 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.matrix.at(i, cols_);
    return x;
}

}  // namespace monadcert

#endif
