#ifndef RSQ_TENSORS_HPP
#define RSQ_TENSORS_HPP

// Supersymmetric Cartesian tensors held in reduced (monomial) form.
//
// An order-n supersymmetric tensor A has only (n+1)(n+2)/2 distinct entries
// A[n1,n2,n3], n1+n2+n3 = n, one per exponent triple. It corresponds to the
// homogeneous polynomial a(r) = r^(n) . A = sum multinomial(n; n1,n2,n3)
// rx^n1 ry^n2 rz^n3 A[n1,n2,n3]; products, contractions and the de-tracer
// all act on that polynomial, so no 3^n index array is ever formed.

#include <span>
#include <vector>

#include "rsq/expansion.hpp"
#include "rsq/quadrature.hpp"
#include "rsq/vec3.hpp"

namespace rsq {

/// Maximum polytensor order p (orders 0..p-1); keeps factorial tables exact enough.
inline constexpr int kMaxTensorOrder = 16;

class TensorSlice {
public:
    explicit TensorSlice(int degree = 0);

    /// v^(n): entries vx^n1 vy^n2 vz^n3.
    static TensorSlice outer_power(const Vec3& v, int degree);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::span<double> coeffs() noexcept { return coeffs_; }

    /// Storage slot of the triple (n1, n2, n3): k(k+1)/2 + n3 with k = n2 + n3.
    static constexpr std::size_t index(int n2, int n3) noexcept
    {
        const auto k = static_cast<std::size_t>(n2 + n3);
        return k * (k + 1) / 2 + static_cast<std::size_t>(n3);
    }
    static constexpr std::size_t count(int degree) noexcept
    {
        return static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2;
    }

    double operator()(int n1, int n2, int n3) const;
    double& operator()(int n1, int n2, int n3);

    TensorSlice& operator+=(const TensorSlice& other);
    TensorSlice& operator*=(double s) noexcept;

    /// Calls f(n1, n2, n3, slot) for every exponent triple.
    template <typename F>
    static void for_each_exponent(int degree, F&& f)
    {
        for (int k = 0; k <= degree; ++k)
            for (int n3 = 0; n3 <= k; ++n3)
                f(degree - k, k - n3, n3, index(k - n3, n3));
    }

private:
    int degree_;
    std::vector<double> coeffs_;
};

/// Slices of orders 0..p-1.
class Polytensor {
public:
    explicit Polytensor(int order);

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] const TensorSlice& slice(int n) const;
    [[nodiscard]] TensorSlice& slice(int n);

    Polytensor& operator+=(const Polytensor& other);

private:
    int order_;
    std::vector<TensorSlice> slices_;
};

double factorial(int n);
/// n!! with (-1)!! = 0!! = 1.
double double_factorial(int n);
double multinomial(int n1, int n2, int n3);

/// M[n1,n2,n3] = sum_y q_y x^n1 y^n2 z^n3 for every order below p.
Polytensor moments_from_charges(const PointCharges& sources, int p);

/// r^(n) . A = sum multinomial(n; k) r^k A[k].
double directional_moment(const TensorSlice& slice, const Vec3& r);
double directional_moment(const Polytensor& pt, const Vec3& r, int n);

/// S[A (x) B]: coefficients of the product polynomial a(r) b(r).
TensorSlice symmetric_product(const TensorSlice& a, const TensorSlice& b);

/// Full contraction A . B of equal-order tensors.
double contract(const TensorSlice& a, const TensorSlice& b);

/// Contraction of all n indices of `a` against the first n of `b`,
/// leaving an order (m - n) tensor; equals m!/(n+m)! a(d_r) b(r) as polynomials.
TensorSlice partial_contract(const TensorSlice& a, const TensorSlice& b);

/// Trace-free projection D_n A; its polynomial is the harmonic part of a(r),
/// so that x^(n) . D_n y^(n) = n!/(2n-1)!! |x|^n |y|^n P_n(x.y / |x||y|).
TensorSlice detrace(const TensorSlice& slice);

/// r^(n) . D_n M^(n) for a unit direction r.
double detrace_directional(const Polytensor& pt, const Vec3& r_hat, int n);

/// Trace-free moments sum_i w_i (R r_i)^(n), n < p, of an outer expansion.
/// They coincide with the de-traced moments of the sources that were fitted.
Polytensor polytensor_from_expansion(const SurfaceExpansion& outer);

/// Outer expansion whose surface density is
/// sigma(R r_i) = sum_n (2n+1)/(4 pi) (2n-1)!!/n! r_i^(n) . D_n M^(n) R^-n.
SurfaceExpansion expansion_from_polytensor(const Polytensor& pt, double radius, RulePtr rule,
                                           const Vec3& center = {});

/// Row-major N x N matrix [P_n(r_i . r_j)] over the nodes of a rule.
std::vector<double> legendre_gram_matrix(const QuadratureRule& rule, int n);

} // namespace rsq

#endif // RSQ_TENSORS_HPP
