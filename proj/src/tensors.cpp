#include "rsq/tensors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rsq/error.hpp"
#include "rsq/legendre.hpp"

namespace rsq {

namespace {

constexpr int kMaxFactorial = 170;

const std::array<double, kMaxFactorial + 1>& factorial_table()
{
    static const auto table = [] {
        std::array<double, kMaxFactorial + 1> t{};
        t[0] = 1.0;
        for (int i = 1; i <= kMaxFactorial; ++i)
            t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

void check_order(int p)
{
    if (p < 1)
        throw DomainError("polytensor order must be >= 1, got " + std::to_string(p));
    if (p > kMaxTensorOrder)
        throw CapacityError("polytensor order " + std::to_string(p) + " exceeds the supported maximum " +
                            std::to_string(kMaxTensorOrder));
}

// Coefficients of the homogeneous polynomial a(r) in the same monomial layout.
TensorSlice to_polynomial(const TensorSlice& t)
{
    TensorSlice poly(t.degree());
    TensorSlice::for_each_exponent(t.degree(), [&](int a, int b, int c, std::size_t k) {
        poly.coeffs()[k] = multinomial(a, b, c) * t.coeffs()[k];
    });
    return poly;
}

TensorSlice from_polynomial(const TensorSlice& poly)
{
    TensorSlice t(poly.degree());
    TensorSlice::for_each_exponent(poly.degree(), [&](int a, int b, int c, std::size_t k) {
        t.coeffs()[k] = poly.coeffs()[k] / multinomial(a, b, c);
    });
    return t;
}

TensorSlice laplacian(const TensorSlice& poly)
{
    TensorSlice out(poly.degree() - 2);
    TensorSlice::for_each_exponent(poly.degree(), [&](int a, int b, int c, std::size_t k) {
        const double f = poly.coeffs()[k];
        if (a >= 2)
            out(a - 2, b, c) += a * (a - 1) * f;
        if (b >= 2)
            out(a, b - 2, c) += b * (b - 1) * f;
        if (c >= 2)
            out(a, b, c - 2) += c * (c - 1) * f;
    });
    return out;
}

TensorSlice times_r2(const TensorSlice& poly)
{
    TensorSlice out(poly.degree() + 2);
    TensorSlice::for_each_exponent(poly.degree(), [&](int a, int b, int c, std::size_t k) {
        const double f = poly.coeffs()[k];
        out(a + 2, b, c) += f;
        out(a, b + 2, c) += f;
        out(a, b, c + 2) += f;
    });
    return out;
}

} // namespace

TensorSlice::TensorSlice(int degree) : degree_(degree)
{
    if (degree < 0)
        throw DomainError("tensor degree must be non-negative, got " + std::to_string(degree));
    coeffs_.assign(count(degree), 0.0);
}

TensorSlice TensorSlice::outer_power(const Vec3& v, int degree)
{
    TensorSlice t(degree);
    std::vector<double> px(degree + 1), py(degree + 1), pz(degree + 1);
    px[0] = py[0] = pz[0] = 1.0;
    for (int i = 1; i <= degree; ++i) {
        px[i] = px[i - 1] * v.x;
        py[i] = py[i - 1] * v.y;
        pz[i] = pz[i - 1] * v.z;
    }
    for_each_exponent(degree, [&](int a, int b, int c, std::size_t k) { t.coeffs_[k] = px[a] * py[b] * pz[c]; });
    return t;
}

double TensorSlice::operator()(int n1, int n2, int n3) const
{
    if (n1 < 0 || n2 < 0 || n3 < 0 || n1 + n2 + n3 != degree_)
        throw DomainError("exponents do not match tensor degree " + std::to_string(degree_));
    return coeffs_[index(n2, n3)];
}

double& TensorSlice::operator()(int n1, int n2, int n3)
{
    if (n1 < 0 || n2 < 0 || n3 < 0 || n1 + n2 + n3 != degree_)
        throw DomainError("exponents do not match tensor degree " + std::to_string(degree_));
    return coeffs_[index(n2, n3)];
}

TensorSlice& TensorSlice::operator+=(const TensorSlice& other)
{
    if (other.degree_ != degree_)
        throw ContractError("cannot add tensors of different degree");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

TensorSlice& TensorSlice::operator*=(double s) noexcept
{
    for (double& c : coeffs_)
        c *= s;
    return *this;
}

Polytensor::Polytensor(int order) : order_(order)
{
    check_order(order);
    slices_.reserve(order);
    for (int n = 0; n < order; ++n)
        slices_.emplace_back(n);
}

const TensorSlice& Polytensor::slice(int n) const
{
    if (n < 0 || n >= order_)
        throw DomainError("slice " + std::to_string(n) + " outside polytensor of order " + std::to_string(order_));
    return slices_[n];
}

TensorSlice& Polytensor::slice(int n)
{
    if (n < 0 || n >= order_)
        throw DomainError("slice " + std::to_string(n) + " outside polytensor of order " + std::to_string(order_));
    return slices_[n];
}

Polytensor& Polytensor::operator+=(const Polytensor& other)
{
    if (other.order_ != order_)
        throw ContractError("cannot add polytensors of different order");
    for (int n = 0; n < order_; ++n)
        slices_[n] += other.slices_[n];
    return *this;
}

double factorial(int n)
{
    if (n < 0 || n > kMaxFactorial)
        throw DomainError("factorial argument out of range: " + std::to_string(n));
    return factorial_table()[n];
}

double double_factorial(int n)
{
    if (n < -1)
        throw DomainError("double factorial argument out of range: " + std::to_string(n));
    double r = 1.0;
    for (int k = n; k > 1; k -= 2)
        r *= k;
    return r;
}

double multinomial(int n1, int n2, int n3)
{
    return factorial(n1 + n2 + n3) / (factorial(n1) * factorial(n2) * factorial(n3));
}

Polytensor moments_from_charges(const PointCharges& sources, int p)
{
    sources.validate();
    Polytensor pt(p);
    for (std::size_t s = 0; s < sources.size(); ++s)
        for (int n = 0; n < p; ++n) {
            auto term = TensorSlice::outer_power(sources.positions[s], n);
            term *= sources.charges[s];
            pt.slice(n) += term;
        }
    return pt;
}

double directional_moment(const TensorSlice& slice, const Vec3& r)
{
    const auto pw = TensorSlice::outer_power(r, slice.degree());
    double sum = 0.0;
    TensorSlice::for_each_exponent(slice.degree(), [&](int a, int b, int c, std::size_t k) {
        sum += multinomial(a, b, c) * pw.coeffs()[k] * slice.coeffs()[k];
    });
    return sum;
}

double directional_moment(const Polytensor& pt, const Vec3& r, int n)
{
    return directional_moment(pt.slice(n), r);
}

TensorSlice symmetric_product(const TensorSlice& a, const TensorSlice& b)
{
    const auto pa = to_polynomial(a);
    const auto pb = to_polynomial(b);
    TensorSlice prod(a.degree() + b.degree());
    TensorSlice::for_each_exponent(a.degree(), [&](int a1, int a2, int a3, std::size_t i) {
        TensorSlice::for_each_exponent(b.degree(), [&](int b1, int b2, int b3, std::size_t j) {
            prod(a1 + b1, a2 + b2, a3 + b3) += pa.coeffs()[i] * pb.coeffs()[j];
        });
    });
    return from_polynomial(prod);
}

double contract(const TensorSlice& a, const TensorSlice& b)
{
    if (a.degree() != b.degree())
        throw ContractError("full contraction needs equal orders, got " + std::to_string(a.degree()) + " and " +
                            std::to_string(b.degree()));
    double sum = 0.0;
    TensorSlice::for_each_exponent(a.degree(), [&](int n1, int n2, int n3, std::size_t k) {
        sum += multinomial(n1, n2, n3) * a.coeffs()[k] * b.coeffs()[k];
    });
    return sum;
}

TensorSlice partial_contract(const TensorSlice& a, const TensorSlice& b)
{
    if (a.degree() > b.degree())
        throw ContractError("partial contraction needs order(a) <= order(b)");
    TensorSlice out(b.degree() - a.degree());
    TensorSlice::for_each_exponent(out.degree(), [&](int l1, int l2, int l3, std::size_t l) {
        double sum = 0.0;
        TensorSlice::for_each_exponent(a.degree(), [&](int k1, int k2, int k3, std::size_t k) {
            sum += multinomial(k1, k2, k3) * a.coeffs()[k] * b(k1 + l1, k2 + l2, k3 + l3);
        });
        out.coeffs()[l] = sum;
    });
    return out;
}

TensorSlice detrace(const TensorSlice& slice)
{
    const int n = slice.degree();
    const double norm = double_factorial(2 * n - 1);
    auto lap = to_polynomial(slice);
    TensorSlice harmonic = lap;
    for (int k = 1; 2 * k <= n; ++k) {
        lap = laplacian(lap);
        auto term = lap;
        for (int j = 0; j < k; ++j)
            term = times_r2(term);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        term *= sign * double_factorial(2 * n - 2 * k - 1) / (norm * double_factorial(2 * k));
        harmonic += term;
    }
    return from_polynomial(harmonic);
}

double detrace_directional(const Polytensor& pt, const Vec3& r_hat, int n)
{
    if (std::abs(norm(r_hat) - 1.0) > 1e-9)
        throw DomainError("detrace_directional needs a unit direction");
    return directional_moment(detrace(pt.slice(n)), r_hat);
}

Polytensor polytensor_from_expansion(const SurfaceExpansion& outer)
{
    if (outer.kind() != ExpansionKind::Outer)
        throw ContractError("polytensor conversion needs an outer expansion");
    check_order(outer.order());
    PointCharges nodes;
    for (std::size_t i = 0; i < outer.rule().size(); ++i)
        nodes.add(outer.radius() * outer.rule().point(i), outer.weight(i));
    Polytensor raw = moments_from_charges(nodes, outer.order());
    Polytensor pt(outer.order());
    for (int n = 0; n < outer.order(); ++n)
        pt.slice(n) = detrace(raw.slice(n));
    return pt;
}

SurfaceExpansion expansion_from_polytensor(const Polytensor& pt, double radius, RulePtr rule, const Vec3& center)
{
    const int p = pt.order();
    check_order(p);
    if (!rule)
        throw ContractError("expansion_from_polytensor needs a quadrature rule");
    if (rule->exactness_degree() < 2 * p - 2)
        throw ContractError("rule of degree " + std::to_string(rule->exactness_degree()) +
                            " is inadequate for order " + std::to_string(p));
    if (!(radius > 0.0))
        throw DomainError("expansion radius must be positive");

    std::vector<TensorSlice> traceless;
    std::vector<double> scale;
    for (int n = 0; n < p; ++n) {
        traceless.push_back(detrace(pt.slice(n)));
        scale.push_back((2 * n + 1) / (4.0 * std::numbers::pi) * double_factorial(2 * n - 1) / factorial(n) *
                        std::pow(radius, -n));
    }
    std::vector<double> w(rule->size());
    for (std::size_t i = 0; i < rule->size(); ++i) {
        double sigma = 0.0;
        for (int n = 0; n < p; ++n)
            sigma += scale[n] * directional_moment(traceless[n], rule->point(i));
        w[i] = rule->weight(i) * sigma;
    }
    return SurfaceExpansion(ExpansionKind::Outer, center, radius, std::move(rule), p, std::move(w));
}

std::vector<double> legendre_gram_matrix(const QuadratureRule& rule, int n)
{
    const std::size_t N = rule.size();
    std::vector<double> g(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            g[i * N + j] = legendre_poly(n, dot(rule.point(i), rule.point(j)));
    return g;
}

} // namespace rsq
