#pragma once

#include <array>
#include <complex>

namespace sl2cx {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Lie algebra sl2 over R or C in the fixed basis
//
//   U = [[0,-1],[1,0]],  H = [[1,0],[0,-1]],  W = [[0,1],[1,0]],
//
// with k = span{U}, p = span{H, W} and bracket table
// [U,H] = 2W, [U,W] = -2H, [H,W] = -2U.
// ---------------------------------------------------------------------------

struct AlgebraVector {
    cplx u{0.0};
    cplx h{0.0};
    cplx w{0.0};

    AlgebraVector() = default;
    AlgebraVector(cplx cu, cplx ch, cplx cw) : u(cu), h(ch), w(cw) {}

    static AlgebraVector real(double cu, double ch, double cw)
    {
        return {cplx(cu), cplx(ch), cplx(cw)};
    }

    [[nodiscard]] AlgebraVector k_part() const { return {u, 0.0, 0.0}; }
    [[nodiscard]] AlgebraVector p_part() const { return {0.0, h, w}; }
    [[nodiscard]] bool is_real(double tol = 1e-12) const;

    AlgebraVector operator+(const AlgebraVector& o) const { return {u + o.u, h + o.h, w + o.w}; }
    AlgebraVector operator-(const AlgebraVector& o) const { return {u - o.u, h - o.h, w - o.w}; }
    AlgebraVector operator-() const { return {-u, -h, -w}; }
    AlgebraVector& operator+=(const AlgebraVector& o);
};

AlgebraVector operator*(cplx s, const AlgebraVector& X);

inline AlgebraVector basis_U() { return AlgebraVector::real(1, 0, 0); }
inline AlgebraVector basis_H() { return AlgebraVector::real(0, 1, 0); }
inline AlgebraVector basis_W() { return AlgebraVector::real(0, 0, 1); }

/// Largest entrywise modulus, used for tolerances all over the tests.
[[nodiscard]] double max_abs(const AlgebraVector& X);

/// Lie bracket from the structure constants of the basis above.
[[nodiscard]] AlgebraVector bracket(const AlgebraVector& X, const AlgebraVector& Y);

/// Killing form B(X,Y) = tr(ad X ad Y), assembled from the 3x3 adjoint
/// matrices. Real arguments required. B(U,U) = -8, B(H,H) = B(W,W) = 8.
[[nodiscard]] double killing_form(const AlgebraVector& X, const AlgebraVector& Y);

// ---------------------------------------------------------------------------
// SL2(C)
// ---------------------------------------------------------------------------

struct Mat2c {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0}; // [[a, b], [c, d]]

    [[nodiscard]] cplx det() const { return a * d - b * c; }
    [[nodiscard]] Mat2c operator*(const Mat2c& o) const;
    [[nodiscard]] Mat2c operator+(const Mat2c& o) const;
    [[nodiscard]] Mat2c operator-(const Mat2c& o) const;
};

Mat2c operator*(cplx s, const Mat2c& m);

/// Matrix of an algebra vector: cu*U + ch*H + cw*W.
[[nodiscard]] Mat2c matrix_of(const AlgebraVector& X);

/// Basis coefficients of a (numerically) trace-zero matrix.
[[nodiscard]] AlgebraVector vector_of(const Mat2c& m);

/// Element of SL2(C); |det - 1| <= 1e-10 is enforced on construction (plus
/// a machine allowance of 8 eps max_entry^2, the evaluation floor of
/// ad - bc for large entries).
class GroupElement {
public:
    GroupElement() = default; // identity
    explicit GroupElement(const Mat2c& m);

    static GroupElement identity() { return GroupElement{}; }

    [[nodiscard]] const Mat2c& mat() const { return m_; }
    [[nodiscard]] GroupElement inverse() const;
    [[nodiscard]] GroupElement operator*(const GroupElement& o) const;
    [[nodiscard]] bool is_real(double tol = 1e-10) const;

private:
    Mat2c m_{};
};

inline constexpr double kDetTolerance = 1e-10;

/// exp of a trace-zero 2x2 matrix in closed form: with q = -det Z one has
/// Z^2 = q I, hence exp Z = C~(q) I + S~(q) Z where C~ and S~ are the entire
/// extensions of C and S. The result lies in SL2(C).
[[nodiscard]] GroupElement exp_group(const AlgebraVector& Z);

/// Entire extensions of C and S at a complex argument; both are even in
/// sqrt(q), so the branch of the square root is immaterial.
[[nodiscard]] cplx eval_C_entire(cplx q);
[[nodiscard]] cplx eval_S_entire(cplx q);

/// Ad_g X = g X g^{-1}, read back in basis coefficients.
[[nodiscard]] AlgebraVector adjoint(const GroupElement& g, const AlgebraVector& X);

/// Truncated exponential-adjoint series sum_{l=0}^{N} ad^l(X) Y / l!.
/// Used as an oracle against the closed forms (N <= 60).
[[nodiscard]] AlgebraVector ad_series(const AlgebraVector& X, const AlgebraVector& Y, int N);

/// Truncated series for the differential of exp in left trivialization:
/// sum_{l=0}^{N} (-1)^l / (l+1)! ad^l(X) Y   (N <= 60).
[[nodiscard]] AlgebraVector d_exp(const AlgebraVector& X, const AlgebraVector& Y, int N);

/// Conjugation of SL2(C) fixing SL2(R): entrywise complex conjugation.
[[nodiscard]] GroupElement sigma_G(const GroupElement& g);

/// Involution fixing SU(1,1): g -> J (conj(g)^T)^{-1} J with J = diag(1,-1).
[[nodiscard]] GroupElement sigma_SU11(const GroupElement& g);

/// The automorphism A of SL2(C) carrying SL2(R) onto SU(1,1), realized as
/// conjugation by T = (1/sqrt 2) [[1, i], [i, 1]]. On the algebra it maps
/// U -> iH, H -> iU, W -> W; this is validated once at startup.
[[nodiscard]] GroupElement cayley_A(const GroupElement& g);
[[nodiscard]] AlgebraVector cayley_A_alg(const AlgebraVector& X);
[[nodiscard]] const GroupElement& cayley_conjugator();

} // namespace sl2cx
