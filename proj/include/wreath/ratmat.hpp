/**
 * Exact dense linear algebra over a field scalar type.
 *
 * Every routine here is a template over the Eigen scalar `T`; the library
 * instantiates them with `Scalar` (elements of Q(zeta_m)), the tests also
 * with plain rationals. Only row reduction is used: kernels, spans and
 * ranks are all read off the reduced row-echelon form.
 */
#ifndef WREATH_RATMAT_HPP
#define WREATH_RATMAT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "wreath/scalar.hpp"

namespace wreath {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/** A vector (or block of vectors) fell outside the span it was expected to lie in. */
struct NotInSpan : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

template <typename T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
struct RrefResult
{
    DenseMatrix<T> reduced;
    std::vector<Eigen::Index> pivots;
};

/** Reduced row-echelon form with strictly increasing pivot columns. */
template <typename T>
RrefResult<T> rref(DenseMatrix<T> a)
{
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c)
    {
        Eigen::Index found = -1;
        for (Eigen::Index k = r; k < rows; ++k)
        {
            if (a(k, c) != T(0))
            {
                found = k;
                break;
            }
        }
        if (found < 0)
            continue;
        if (found != r)
            a.row(found).swap(a.row(r));
        const T inv = T(1) / a(r, c);
        a(r, c) = T(1);
        for (Eigen::Index k = c + 1; k < cols; ++k)
        {
            if (a(r, k) != T(0))
                a(r, k) *= inv;
        }
        for (Eigen::Index k = 0; k < rows; ++k)
        {
            if (k == r || a(k, c) == T(0))
                continue;
            const T factor = a(k, c);
            a(k, c) = T(0);
            for (Eigen::Index t = c + 1; t < cols; ++t)
            {
                if (a(r, t) != T(0))
                    a(k, t) -= factor * a(r, t);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

template <typename T>
Eigen::Index rank(const DenseMatrix<T>& a)
{
    return static_cast<Eigen::Index>(rref<T>(a).pivots.size());
}

/**
 * Columns form a basis of {v : a v = 0}: one column per free variable of
 * the rref, free variables in ascending column order.
 */
template <typename T>
DenseMatrix<T> kernel_basis(const DenseMatrix<T>& a)
{
    const Eigen::Index cols = a.cols();
    auto [reduced, pivots] = rref<T>(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    const Eigen::Index nullity = cols - static_cast<Eigen::Index>(pivots.size());
    DenseMatrix<T> basis = DenseMatrix<T>::Zero(cols, nullity);
    Eigen::Index out = 0;
    for (Eigen::Index f = 0; f < cols; ++f)
    {
        if (is_pivot[f])
            continue;
        basis(f, out) = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
        {
            if (reduced(r, f) != T(0))
                basis(pivots[r], out) = -reduced(r, f);
        }
        ++out;
    }
    return basis;
}

/**
 * Coordinates x with basis * x = v, column by column. The columns of
 * `basis` must be independent.
 */
template <typename T>
DenseMatrix<T> solve_in_span(const DenseMatrix<T>& basis, const DenseMatrix<T>& v)
{
    if (basis.rows() != v.rows())
        throw std::invalid_argument("solve_in_span: row count mismatch");
    const Eigen::Index k = basis.cols();
    if (v.cols() == 0)
        return DenseMatrix<T>::Zero(k, 0);
    DenseMatrix<T> system(basis.rows(), k + v.cols());
    system << basis, v;
    auto [reduced, pivots] = rref<T>(std::move(system));
    for (std::size_t r = 0; r < pivots.size(); ++r)
    {
        if (pivots[r] >= k)
            throw NotInSpan("vector is not in the span of the given basis");
        if (pivots[r] != static_cast<Eigen::Index>(r))
            throw std::invalid_argument("solve_in_span: basis columns are dependent");
    }
    if (static_cast<Eigen::Index>(pivots.size()) != k)
        throw std::invalid_argument("solve_in_span: basis columns are dependent");
    return reduced.block(0, k, k, v.cols());
}

/** Basis of the common kernel of maps sharing the domain dimension `ambient`. */
template <typename T>
DenseMatrix<T> intersect_kernels(const std::vector<DenseMatrix<T>>& maps, Eigen::Index ambient)
{
    if (maps.empty())
        return DenseMatrix<T>::Identity(ambient, ambient);
    Eigen::Index rows = 0;
    for (const auto& m : maps)
    {
        if (m.cols() != ambient)
            throw std::invalid_argument("intersect_kernels: domain dimension mismatch");
        rows += m.rows();
    }
    DenseMatrix<T> stacked(rows, ambient);
    Eigen::Index at = 0;
    for (const auto& m : maps)
    {
        stacked.middleRows(at, m.rows()) = m;
        at += m.rows();
    }
    return kernel_basis<T>(stacked);
}

template <typename T>
bool is_zero(const DenseMatrix<T>& a)
{
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            if (a(r, c) != T(0))
                return false;
    return true;
}

/** Exact product; avoids Eigen's blocked kernels, which assume cheap scalars. */
template <typename T>
DenseMatrix<T> mul(const DenseMatrix<T>& a, const DenseMatrix<T>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("mul: inner dimension mismatch");
    DenseMatrix<T> out = DenseMatrix<T>::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
        {
            const T& x = a(i, k);
            if (x == T(0))
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
            {
                if (b(k, j) != T(0))
                    out(i, j) += x * b(k, j);
            }
        }
    return out;
}

template <typename T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b)
{
    DenseMatrix<T> out = DenseMatrix<T>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
        {
            if (a(i, j) != T(0))
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = b * a(i, j);
        }
    return out;
}

template <typename T>
T trace(const DenseMatrix<T>& a)
{
    T out = 0;
    for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i)
        out += a(i, i);
    return out;
}

}   // namespace wreath

#endif
