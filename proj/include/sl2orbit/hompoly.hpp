#pragma once

#include <sl2orbit/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace sl2orbit {

// Homogeneous polynomial in a, b with exact rational coefficients:
// sum_{i=0..n} z_i a^i b^{n-i}. The zero polynomial is explicit (no degree).
class HomPoly2 {
public:
    HomPoly2() = default;  // zero

    HomPoly2(int degree, std::vector<Rational> z) : zero_(false), degree_(degree), z_(std::move(z)) {
        if (degree < 0 || z_.size() != static_cast<std::size_t>(degree) + 1)
            throw std::invalid_argument("coefficient list must have length degree + 1");
        bool any = false;
        for (const auto& c : z_) any = any || (c != 0);
        if (!any) *this = HomPoly2();
    }

    static HomPoly2 monomial(int i, int j, Rational coeff = 1) {
        if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
        if (coeff == 0) return HomPoly2();
        std::vector<Rational> z(i + j + 1, Rational(0));
        z[i] = std::move(coeff);
        return HomPoly2(i + j, std::move(z));
    }

    bool is_zero() const { return zero_; }

    int degree() const {
        if (zero_) throw std::domain_error("zero polynomial has no degree");
        return degree_;
    }

    // Coefficient of a^i b^{n-i}; zero for out-of-range i or the zero polynomial.
    Rational coeff(int i) const {
        if (zero_ || i < 0 || i > degree_) return 0;
        return z_[i];
    }

    const std::vector<Rational>& coefficients() const {
        if (zero_) throw std::domain_error("zero polynomial has no coefficients");
        return z_;
    }

    // Largest i with z_i != 0 (the symbol m).
    int top_index() const {
        for (int i = degree(); i >= 0; --i)
            if (z_[i] != 0) return i;
        throw std::logic_error("unreachable");
    }

    bool is_monomial() const {
        if (zero_) return false;
        int count = 0;
        for (const auto& c : z_) count += (c != 0);
        return count == 1;
    }

    friend HomPoly2 operator+(const HomPoly2& x, const HomPoly2& y) {
        if (x.zero_) return y;
        if (y.zero_) return x;
        if (x.degree_ != y.degree_)
            throw std::invalid_argument("cannot add homogeneous polynomials of different degrees");
        std::vector<Rational> z(x.z_);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += y.z_[i];
        return HomPoly2(x.degree_, std::move(z));
    }

    friend HomPoly2 operator-(const HomPoly2& x, const HomPoly2& y) { return x + (-y); }

    HomPoly2 operator-() const {
        if (zero_) return *this;
        std::vector<Rational> z(z_);
        for (auto& c : z) c = -c;
        return HomPoly2(degree_, std::move(z));
    }

    friend HomPoly2 operator*(const Rational& s, const HomPoly2& p) {
        if (p.zero_ || s == 0) return HomPoly2();
        std::vector<Rational> z(p.z_);
        for (auto& c : z) c *= s;
        return HomPoly2(p.degree_, std::move(z));
    }

    friend HomPoly2 operator*(const HomPoly2& x, const HomPoly2& y) {
        if (x.zero_ || y.zero_) return HomPoly2();
        std::vector<Rational> z(x.degree_ + y.degree_ + 1, Rational(0));
        for (int i = 0; i <= x.degree_; ++i) {
            if (x.z_[i] == 0) continue;
            for (int t = 0; t <= y.degree_; ++t) z[i + t] += x.z_[i] * y.z_[t];
        }
        return HomPoly2(x.degree_ + y.degree_, std::move(z));
    }

    friend bool operator==(const HomPoly2& x, const HomPoly2& y) {
        if (x.zero_ || y.zero_) return x.zero_ == y.zero_;
        return x.degree_ == y.degree_ && x.z_ == y.z_;
    }
    friend bool operator!=(const HomPoly2& x, const HomPoly2& y) { return !(x == y); }

    // Scale so the top nonzero coefficient is 1.
    HomPoly2 monic() const {
        Rational top = coeff(top_index());
        return (Rational(1) / top) * *this;
    }

    Rational evaluate(const Rational& a, const Rational& b) const {
        if (zero_) return 0;
        Rational result = 0;
        for (int i = 0; i <= degree_; ++i) {
            if (z_[i] == 0) continue;
            Rational term = z_[i];
            for (int t = 0; t < i; ++t) term *= a;
            for (int t = 0; t < degree_ - i; ++t) term *= b;
            result += term;
        }
        return result;
    }

    // Partial derivatives, used by the Jacobian-rank dimension probe.
    HomPoly2 d_da() const {
        if (zero_ || degree_ == 0) return HomPoly2();
        std::vector<Rational> z(degree_, Rational(0));
        for (int i = 1; i <= degree_; ++i) z[i - 1] = Rational(i) * z_[i];
        return z_any_nonzero(z) ? HomPoly2(degree_ - 1, std::move(z)) : HomPoly2();
    }

    HomPoly2 d_db() const {
        if (zero_ || degree_ == 0) return HomPoly2();
        std::vector<Rational> z(degree_, Rational(0));
        for (int i = 0; i < degree_; ++i) z[i] = Rational(degree_ - i) * z_[i];
        return z_any_nonzero(z) ? HomPoly2(degree_ - 1, std::move(z)) : HomPoly2();
    }

private:
    static bool z_any_nonzero(const std::vector<Rational>& z) {
        for (const auto& c : z)
            if (c != 0) return true;
        return false;
    }

    bool zero_ = true;
    int degree_ = 0;
    std::vector<Rational> z_;
};

// Support {(i, n-i) : z_i != 0}, top index first.
inline std::vector<std::pair<int, int>> newton_points(const HomPoly2& p) {
    if (p.is_zero()) throw std::invalid_argument("empty support");
    std::vector<std::pair<int, int>> points;
    for (int i = p.degree(); i >= 0; --i)
        if (p.coeff(i) != 0) points.emplace_back(i, p.degree() - i);
    return points;
}

}  // namespace sl2orbit
