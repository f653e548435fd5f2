#pragma once

// Finite fields GF(q) and GF(q^m) plus dense Gaussian elimination over them.
//
// Elements are encoded as unsigned integers: an element of an extension
// field is the integer whose base-|subfield| digits are its coordinates in
// the polynomial basis 1, a, a^2, ... (little-endian). Because GF(q) itself
// is encoded the same way over GF(p), every element is ultimately a vector
// of base-p digits and addition is digit-wise modulo p.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <type_traits>
#include <string>
#include <vector>

#include "sumrank/error.hpp"

namespace sumrank {

using Elem = std::uint64_t;
using ElemVector = std::vector<Elem>;

class FiniteField {
public:
    static std::shared_ptr<const FiniteField> prime(std::uint64_t p);
    // Extension of `sub` by a monic irreducible modulus given as coefficient
    // list (constant term first, leading 1 last).
    static std::shared_ptr<const FiniteField> extension(std::shared_ptr<const FiniteField> sub,
                                                        ElemVector modulus);

    std::uint64_t order() const noexcept { return order_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    // Degree over the immediate subfield (1 for a prime field).
    unsigned degree() const noexcept { return degree_; }
    const FiniteField* subfield() const noexcept { return sub_.get(); }
    const ElemVector& modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return sub_ == nullptr; }

    bool contains(Elem a) const noexcept { return a < order_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    // Multiplies by an integer scalar (repeated addition mod p).
    Elem scale_int(Elem a, std::uint64_t k) const noexcept;

    // Coordinates over the immediate subfield, `degree()` digits.
    ElemVector coords(Elem a) const;
    Elem from_coords(std::span<const Elem> c) const;

    std::string describe() const;

private:
    FiniteField() = default;
    Elem poly_mul(Elem a, Elem b) const noexcept;
    void build_tables();

    std::uint64_t p_ = 2;
    std::uint64_t order_ = 2;
    unsigned degree_ = 1;
    unsigned p_digits_ = 1; // number of base-p digits per element
    std::shared_ptr<const FiniteField> sub_;
    ElemVector modulus_;
    Elem binary_reduction_ = 0; // modulus without the leading term, q = 2 fast path
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
};

// Polynomials over a field, coefficient vectors with the constant term first.
namespace poly {
ElemVector trim(ElemVector a);
ElemVector mul(const FiniteField& f, const ElemVector& a, const ElemVector& b);
ElemVector mod(const FiniteField& f, ElemVector a, const ElemVector& m);
ElemVector gcd(const FiniteField& f, ElemVector a, ElemVector b);
bool is_irreducible(const FiniteField& f, const ElemVector& monic);
// Lexicographically smallest monic irreducible of the given degree, comparing
// coefficients from the constant term upward.
ElemVector smallest_irreducible(const FiniteField& f, unsigned degree);
} // namespace poly

struct BaseTag {};
struct ExtTag {};

// Dense row-major matrix. The tag records which field of a FieldContext the
// entries belong to so GF(q) and GF(q^m) matrices cannot be mixed silently.
template <class Tag>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, ElemVector data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix data size does not match shape");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const ElemVector& data() const noexcept { return data_; }

    ElemVector column(std::size_t c) const
    {
        ElemVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    // Rows [r0, r0+nr) x columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const
    {
        Matrix b(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    void append_row(std::span<const Elem> values)
    {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        if (values.size() != cols_)
            throw Error(ErrorCode::DimensionMismatch, "appended row has wrong length");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ElemVector data_;
};

using FqMatrix = Matrix<BaseTag>;
using FqmMatrix = Matrix<ExtTag>;

// GF(q) together with GF(q^m) and the fixed polynomial basis of the extension.
class FieldContext {
public:
    FieldContext(std::shared_ptr<const FiniteField> base, std::shared_ptr<const FiniteField> ext,
                 std::uint64_t q, unsigned m);

    std::uint64_t q() const noexcept { return q_; }
    unsigned m() const noexcept { return m_; }
    const FiniteField& base() const noexcept { return *base_; }
    const FiniteField& ext() const noexcept { return *ext_; }
    const ElemVector& modulus() const noexcept { return ext_->modulus(); }

    template <class Tag>
    const FiniteField& field() const noexcept
    {
        if constexpr (std::is_same_v<Tag, BaseTag>)
            return *base_;
        else
            return *ext_;
    }

    // GF(q) sits inside GF(q^m) as the constant polynomials, which share the
    // integer encoding.
    Elem embed(Elem base_elem) const noexcept { return base_elem; }

    // Coordinates of one element in the basis 1, a, ..., a^(m-1).
    ElemVector coordinates(Elem x) const { return ext_->coords(x); }
    Elem from_coordinates(std::span<const Elem> c) const { return ext_->from_coords(c); }

    // The i-th basis element a^i.
    Elem basis_element(unsigned i) const;

    FqmMatrix embed(const FqMatrix& m) const { return FqmMatrix(m.rows(), m.cols(), m.data()); }

private:
    std::shared_ptr<const FiniteField> base_;
    std::shared_ptr<const FiniteField> ext_;
    std::uint64_t q_;
    unsigned m_;
};

// Builds GF(q) and GF(q^m). Throws NotAPrimePower when q is not p^e, and
// InvalidParams when q^m does not fit the 63-bit element encoding.
FieldContext make_field(std::uint64_t q, unsigned m);

// Returns (p, e) with q = p^e, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

// m x r matrix whose column i holds the coordinates of x_i.
FqMatrix expand(const FieldContext& ctx, std::span<const Elem> x);

// Row-reduces in place to reduced row-echelon form; returns pivot columns.
template <class Tag>
std::vector<std::size_t> rref_in_place(const FiniteField& f, Matrix<Tag>& a);

template <class Tag>
std::size_t rank(const FiniteField& f, Matrix<Tag> a)
{
    return rref_in_place(f, a).size();
}

template <class Tag>
std::size_t rank(const FieldContext& ctx, const Matrix<Tag>& a)
{
    return rank(ctx.field<Tag>(), a);
}

// RREF with zero rows removed: the canonical basis of the row space.
template <class Tag>
Matrix<Tag> row_space_basis(const FiniteField& f, Matrix<Tag> a);

// Basis (as rows) of {x : a x^T = 0}.
template <class Tag>
Matrix<Tag> right_kernel(const FiniteField& f, const Matrix<Tag>& a);

template <class Tag>
Matrix<Tag> multiply(const FiniteField& f, const Matrix<Tag>& a, const Matrix<Tag>& b);

template <class Tag>
ElemVector multiply(const FiniteField& f, const Matrix<Tag>& a, std::span<const Elem> x);

struct SolveResult {
    enum class Status { Unique, NonUnique, NoSolution };
    Status status = Status::NoSolution;
    // A particular solution whenever the system is consistent (free variables 0).
    ElemVector x;

    bool consistent() const noexcept { return status != Status::NoSolution; }
};

// Solves a x = b. Throws DimensionMismatch when b.size() != a.rows().
template <class Tag>
SolveResult solve_linear(const FiniteField& f, const Matrix<Tag>& a, std::span<const Elem> b);

} // namespace sumrank
