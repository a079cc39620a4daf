#include "sl2cx/sl2.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sl2cx {

namespace {

// 1/(2k)! and 1/(2k+1)! for the even power series of C~ and S~ near q = 0.
struct SeriesCoeffs {
    double c[11];
    double s[11];
    SeriesCoeffs()
    {
        double f = 1.0; // (2k)! running value
        for (int k = 0; k <= 10; ++k) {
            if (k > 0)
                f *= double(2 * k - 1) * double(2 * k);
            c[k] = 1.0 / f;
            s[k] = 1.0 / (f * double(2 * k + 1));
        }
    }
};
const SeriesCoeffs kCoeffs;

constexpr double kEntireSeriesThreshold = 1e-3;

cplx horner(cplx q, const double (&coeff)[11])
{
    cplx acc = coeff[10];
    for (int k = 9; k >= 0; --k)
        acc = acc * q + coeff[k];
    return acc;
}

} // namespace

// --------------------------------------------------------------------------
// Algebra
// --------------------------------------------------------------------------

bool AlgebraVector::is_real(double tol) const
{
    return std::fabs(u.imag()) <= tol && std::fabs(h.imag()) <= tol &&
           std::fabs(w.imag()) <= tol;
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& o)
{
    u += o.u;
    h += o.h;
    w += o.w;
    return *this;
}

AlgebraVector operator*(cplx s, const AlgebraVector& X)
{
    return {s * X.u, s * X.h, s * X.w};
}

double max_abs(const AlgebraVector& X)
{
    return std::max({std::abs(X.u), std::abs(X.h), std::abs(X.w)});
}

AlgebraVector bracket(const AlgebraVector& X, const AlgebraVector& Y)
{
    // [U,H] = 2W, [U,W] = -2H, [H,W] = -2U
    return {-2.0 * (X.h * Y.w - X.w * Y.h),
            -2.0 * (X.u * Y.w - X.w * Y.u),
            2.0 * (X.u * Y.h - X.h * Y.u)};
}

namespace {

// ad_X in the basis {U, H, W}: columns are [X,U], [X,H], [X,W].
void ad_matrix(const AlgebraVector& X, double M[3][3])
{
    const double u = X.u.real(), h = X.h.real(), w = X.w.real();
    M[0][0] = 0.0;      M[0][1] = 2.0 * w;  M[0][2] = -2.0 * h;
    M[1][0] = 2.0 * w;  M[1][1] = 0.0;      M[1][2] = -2.0 * u;
    M[2][0] = -2.0 * h; M[2][1] = 2.0 * u;  M[2][2] = 0.0;
}

} // namespace

double killing_form(const AlgebraVector& X, const AlgebraVector& Y)
{
    if (!X.is_real() || !Y.is_real())
        throw std::domain_error("killing_form: real arguments required");
    double A[3][3], B[3][3];
    ad_matrix(X, A);
    ad_matrix(Y, B);
    double tr = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            tr += A[i][k] * B[k][i];
    return tr;
}

// --------------------------------------------------------------------------
// Group
// --------------------------------------------------------------------------

Mat2c Mat2c::operator*(const Mat2c& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2c Mat2c::operator+(const Mat2c& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
Mat2c Mat2c::operator-(const Mat2c& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

Mat2c operator*(cplx s, const Mat2c& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

Mat2c matrix_of(const AlgebraVector& X)
{
    return {X.h, -X.u + X.w, X.u + X.w, -X.h};
}

AlgebraVector vector_of(const Mat2c& m)
{
    return {0.5 * (m.c - m.b), 0.5 * (m.a - m.d), 0.5 * (m.c + m.b)};
}

GroupElement::GroupElement(const Mat2c& m) : m_(m)
{
    // det = ad - bc cancels catastrophically for large entries, so the check
    // carries a machine allowance of 8 eps scale^2 on top of the 1e-10 bound
    // (the determinant of a product of unit-determinant matrices cannot be
    // evaluated more tightly than ~scale^2 eps in double precision).
    const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c),
                                   std::abs(m.d), 1.0});
    const double allowance =
        8.0 * std::numeric_limits<double>::epsilon() * scale * scale;
    if (std::abs(m.det() - 1.0) > kDetTolerance + allowance)
        throw std::domain_error("GroupElement: determinant is not 1");
}

GroupElement GroupElement::inverse() const
{
    return GroupElement{Mat2c{m_.d, -m_.b, -m_.c, m_.a}};
}

GroupElement GroupElement::operator*(const GroupElement& o) const
{
    return GroupElement{m_ * o.m_};
}

bool GroupElement::is_real(double tol) const
{
    return std::fabs(m_.a.imag()) <= tol && std::fabs(m_.b.imag()) <= tol &&
           std::fabs(m_.c.imag()) <= tol && std::fabs(m_.d.imag()) <= tol;
}

cplx eval_C_entire(cplx q)
{
    if (std::abs(q) < kEntireSeriesThreshold)
        return horner(q, kCoeffs.c);
    return std::cosh(std::sqrt(q));
}

cplx eval_S_entire(cplx q)
{
    if (std::abs(q) < kEntireSeriesThreshold)
        return horner(q, kCoeffs.s);
    const cplx r = std::sqrt(q);
    return std::sinh(r) / r;
}

GroupElement exp_group(const AlgebraVector& Z)
{
    // q = -det(matrix of Z) for trace-zero Z, so Z^2 = q I.
    const cplx q = Z.h * Z.h + Z.w * Z.w - Z.u * Z.u;
    const cplx cq = eval_C_entire(q);
    const cplx sq = eval_S_entire(q);
    const Mat2c m = matrix_of(Z);
    return GroupElement{Mat2c{cq + sq * m.a, sq * m.b, sq * m.c, cq + sq * m.d}};
}

AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& X)
{
    return vector_of(g.mat() * matrix_of(X) * g.inverse().mat());
}

AlgebraVector ad_series(const AlgebraVector& X, const AlgebraVector& Y, int N)
{
    if (N < 0 || N > 60)
        throw std::invalid_argument("ad_series: N must be in [0, 60]");
    AlgebraVector term = Y;
    AlgebraVector acc = Y;
    for (int l = 1; l <= N; ++l) {
        term = (1.0 / double(l)) * bracket(X, term);
        acc += term;
    }
    return acc;
}

AlgebraVector d_exp(const AlgebraVector& X, const AlgebraVector& Y, int N)
{
    if (N < 0 || N > 60)
        throw std::invalid_argument("d_exp: N must be in [0, 60]");
    AlgebraVector term = Y;
    AlgebraVector acc = Y;
    for (int l = 1; l <= N; ++l) {
        term = (-1.0 / double(l + 1)) * bracket(X, term);
        acc += term;
    }
    return acc;
}

GroupElement sigma_G(const GroupElement& g)
{
    const Mat2c& m = g.mat();
    return GroupElement{Mat2c{std::conj(m.a), std::conj(m.b), std::conj(m.c), std::conj(m.d)}};
}

GroupElement sigma_SU11(const GroupElement& g)
{
    // J (conj(g)^T)^{-1} J written out entrywise for det g = 1.
    const Mat2c& m = g.mat();
    return GroupElement{Mat2c{std::conj(m.d), std::conj(m.c), std::conj(m.b), std::conj(m.a)}};
}

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

GroupElement make_conjugator()
{
    const cplx i(0.0, 1.0);
    GroupElement T{Mat2c{kInvSqrt2, kInvSqrt2 * i, kInvSqrt2 * i, kInvSqrt2}};
    // Startup self-check: conjugation by T must realize U -> iH, H -> iU,
    // W -> W on the algebra.
    const cplx I(0.0, 1.0);
    const AlgebraVector images[3] = {{0.0, I, 0.0}, {I, 0.0, 0.0}, {0.0, 0.0, 1.0}};
    const AlgebraVector basis[3] = {basis_U(), basis_H(), basis_W()};
    for (int k = 0; k < 3; ++k) {
        const AlgebraVector got = vector_of(T.mat() * matrix_of(basis[k]) * T.inverse().mat());
        if (max_abs(got - images[k]) > 1e-14)
            throw std::logic_error("cayley conjugator does not realize the basis map");
    }
    return T;
}

} // namespace

const GroupElement& cayley_conjugator()
{
    static const GroupElement T = make_conjugator();
    return T;
}

GroupElement cayley_A(const GroupElement& g)
{
    const GroupElement& T = cayley_conjugator();
    return GroupElement{T.mat() * g.mat() * T.inverse().mat()};
}

AlgebraVector cayley_A_alg(const AlgebraVector& X)
{
    const cplx i(0.0, 1.0);
    // U -> iH, H -> iU, W -> W, extended complex-linearly.
    return {i * X.h, i * X.u, X.w};
}

} // namespace sl2cx
