#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rigor {

/// Element of the prime field F_q with q = 2^61 - 1 (Mersenne).
///
/// Values are kept canonical in [0, q) at all times. The Mersenne shape
/// allows reduction by two shift-add folds instead of a division, which is
/// what keeps the elimination kernels in RowBasis fast.
class Fp61 {
public:
    static constexpr std::uint64_t MODULUS = (1ULL << 61) - 1;

    constexpr Fp61() : v_(0) {}
    constexpr explicit Fp61(std::uint64_t v) : v_(v % MODULUS) {}

    static constexpr Fp61 zero() { return Fp61(); }
    static constexpr Fp61 one() { return from_canonical(1); }

    /// Wraps a value already known to lie in [0, MODULUS); skips reduction.
    static constexpr Fp61 from_canonical(std::uint64_t v) {
        Fp61 x;
        x.v_ = v;
        return x;
    }

    constexpr std::uint64_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Fp61 operator+(Fp61 a, Fp61 b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= MODULUS) s -= MODULUS;
        return from_canonical(s);
    }
    friend constexpr Fp61 operator-(Fp61 a, Fp61 b) {
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + MODULUS - b.v_;
        return from_canonical(s);
    }
    friend constexpr Fp61 operator*(Fp61 a, Fp61 b) {
        return from_canonical(mul_reduce(a.v_, b.v_));
    }
    constexpr Fp61 operator-() const {
        return from_canonical(v_ == 0 ? 0 : MODULUS - v_);
    }
    Fp61& operator+=(Fp61 b) { return *this = *this + b; }
    Fp61& operator-=(Fp61 b) { return *this = *this - b; }
    Fp61& operator*=(Fp61 b) { return *this = *this * b; }

    friend constexpr bool operator==(Fp61 a, Fp61 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Fp61 a, Fp61 b) { return a.v_ != b.v_; }

    /// a^e by square-and-multiply.
    Fp61 pow(std::uint64_t e) const {
        Fp61 base = *this, acc = one();
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Multiplicative inverse via Fermat (q prime). Throws on zero.
    Fp61 inv() const {
        if (v_ == 0) throw std::domain_error("Fp61::inv: inverse of zero");
        return pow(MODULUS - 2);
    }

    /// Folds a 122-bit product into [0, MODULUS).
    static constexpr std::uint64_t mul_reduce(std::uint64_t a, std::uint64_t b) {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        std::uint64_t lo = static_cast<std::uint64_t>(t) & MODULUS;
        std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
        std::uint64_t s = lo + hi;                      // < 2^62
        s = (s & MODULUS) + (s >> 61);                  // <= MODULUS + 1
        if (s >= MODULUS) s -= MODULUS;
        return s;
    }

private:
    std::uint64_t v_;
};

/// Dense row of field elements; the vector length is the ambient dimension.
using RowVector = std::vector<Fp61>;

inline bool is_zero_row(const RowVector& r) {
    for (Fp61 x : r)
        if (!x.is_zero()) return false;
    return true;
}

/// Incremental row-echelon basis of a subspace of F_q^ambient.
///
/// Stored rows have pairwise distinct pivot columns with the pivot entry
/// normalized to 1, and each stored row is fully reduced against every row
/// inserted before it. Reduction therefore proceeds in insertion order and
/// never reintroduces a previously cleared pivot. Rank grows by exactly 0
/// or 1 per insert and all queries are deterministic.
class RowBasis {
public:
    explicit RowBasis(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces `row` against the basis; if a nonzero residual remains it is
    /// normalized and adopted as a new echelon row. Returns true exactly
    /// when the row was independent of the current span.
    bool insert(RowVector row);

    /// Residual of `row` after elimination against all pivots. Zero iff the
    /// row lies in the current span. The basis itself is unchanged.
    RowVector reduce(RowVector row) const;

    /// True iff `row` lies in the span (residual of reduce() is zero).
    bool contains(RowVector row) const;

    /// Basis of the right null space { z : r . z = 0 for every basis row r }.
    /// Because the dot form is non-degenerate, a vector v lies in the row
    /// span iff v . z = 0 for every returned z; closure queries use this as
    /// a batch membership test. Converts the stored rows to fully reduced
    /// echelon form first (an equivalent basis, hence not const-qualified
    /// in effect but observationally idempotent).
    std::vector<RowVector> kernel();

    /// Pivot columns in insertion order (test/diagnostic use).
    const std::vector<std::uint32_t>& pivots() const { return pivot_; }

private:
    void check_len(const RowVector& row) const;
    void reduce_in_place(RowVector& row) const;
    void make_fully_reduced();

    std::size_t ambient_;
    std::vector<RowVector> rows_;
    std::vector<std::uint32_t> pivot_;  // pivot_[i] = pivot column of rows_[i]
    bool fully_reduced_ = true;
};

}  // namespace rigor
