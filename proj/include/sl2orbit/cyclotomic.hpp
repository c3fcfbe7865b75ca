#pragma once

#include <sl2orbit/binomial.hpp>
#include <sl2orbit/rational.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace sl2orbit {

namespace detail {

// Integer polynomial division, exact (divisor monic). Coefficients low-to-high.
inline std::vector<Integer> exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (long k = static_cast<long>(quot.size()) - 1; k >= 0; --k) {
        Integer c = num[k + den.size() - 1];  // den is monic
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t < den.size(); ++t) num[k + t] -= c * den[t];
    }
    return quot;
}

// Cyclotomic polynomial Phi_n, low-to-high integer coefficients.
inline const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by product of Phi_d over proper divisors d of n.
    std::vector<Integer> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = exact_div(std::move(poly), cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

inline long phi_degree(long n) {
    return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
}

}  // namespace detail

// Element of Q(zeta_n), stored reduced modulo the n-th cyclotomic polynomial
// on the power basis 1, zeta, ..., zeta^{deg-1}.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

    explicit Cyclotomic(const Rational& r, long conductor = 1) : conductor_(conductor) {
        check_conductor(conductor);
        coeffs_.assign(detail::phi_degree(conductor), Rational(0));
        coeffs_[0] = r;
    }

    // zeta_n^e
    static Cyclotomic root_power(long n, long e) {
        check_conductor(n);
        e %= n;
        if (e < 0) e += n;
        std::vector<Rational> raw(e + 1, Rational(0));
        raw[e] = 1;
        return Cyclotomic(n, reduce(std::move(raw), n));
    }

    static Cyclotomic root(long n) { return root_power(n, 1); }

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t e = 1; e < coeffs_.size(); ++e)
            if (coeffs_[e] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("not a rational cyclotomic value");
        return coeffs_[0];
    }

    // Re-express in Q(zeta_m) for n | m.
    Cyclotomic promoted(long m) const {
        if (m == conductor_) return *this;
        if (m % conductor_ != 0) throw std::invalid_argument("conductor must divide target");
        long step = m / conductor_;
        std::vector<Rational> raw(step * (coeffs_.size() - 1) + 1, Rational(0));
        for (std::size_t e = 0; e < coeffs_.size(); ++e) raw[step * e] = coeffs_[e];
        return Cyclotomic(m, reduce(std::move(raw), m));
    }

    friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
        auto [a, b] = to_common(x, y);
        for (std::size_t e = 0; e < a.coeffs_.size(); ++e) a.coeffs_[e] += b.coeffs_[e];
        return a;
    }

    friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) {
        auto [a, b] = to_common(x, y);
        for (std::size_t e = 0; e < a.coeffs_.size(); ++e) a.coeffs_[e] -= b.coeffs_[e];
        return a;
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
        auto [a, b] = to_common(x, y);
        std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t e = 0; e < a.coeffs_.size(); ++e) {
            if (a.coeffs_[e] == 0) continue;
            for (std::size_t t = 0; t < b.coeffs_.size(); ++t)
                raw[e + t] += a.coeffs_[e] * b.coeffs_[t];
        }
        return Cyclotomic(a.conductor_, reduce(std::move(raw), a.conductor_));
    }

    // Phi_n is irreducible over Q, so every nonzero element is invertible:
    // extended Euclid on (value, Phi_n).
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        std::vector<Rational> r0 = phi_rational(conductor_);
        std::vector<Rational> r1 = coeffs_;
        trim(r1);
        std::vector<Rational> s0(1, Rational(0)), s1(1, Rational(1));  // Bezout coeffs of the value
        while (true) {
            // r0 = q*r1 + r2
            std::vector<Rational> rem = r0;
            std::vector<Rational> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0,
                                    Rational(0));
            for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
                Rational c = rem[k + r1.size() - 1] / r1.back();
                q[k] = c;
                if (c == 0) continue;
                for (std::size_t t = 0; t < r1.size(); ++t) rem[k + t] -= c * r1[t];
            }
            trim(rem);
            std::vector<Rational> s2 = s0;  // s2 = s0 - q*s1
            s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), Rational(0));
            for (std::size_t e = 0; e < q.size(); ++e) {
                if (q[e] == 0) continue;
                for (std::size_t t = 0; t < s1.size(); ++t) s2[e + t] -= q[e] * s1[t];
            }
            trim(s2);
            if (rem.size() == 1 && rem[0] == 0) {
                // r1 is the gcd, a nonzero constant since Phi_n is irreducible.
                if (r1.size() != 1) throw std::logic_error("unexpected nontrivial gcd");
                for (auto& c : s1) c /= r1[0];
                return Cyclotomic(conductor_, reduce(std::move(s1), conductor_));
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    Cyclotomic pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        Cyclotomic result(Rational(1), conductor_);
        Cyclotomic base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
        auto [a, b] = to_common(x, y);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

    // Total order on a fixed conductor; used for set/map keys during closure
    // enumeration (operands are promoted to the group conductor up front).
    friend bool operator<(const Cyclotomic& x, const Cyclotomic& y) {
        if (x.conductor_ != y.conductor_) return x.conductor_ < y.conductor_;
        for (std::size_t e = 0; e < x.coeffs_.size(); ++e) {
            int c = cmp(x.coeffs_[e], y.coeffs_[e]);
            if (c != 0) return c < 0;
        }
        return false;
    }

private:
    Cyclotomic(long conductor, std::vector<Rational> reduced)
        : conductor_(conductor), coeffs_(std::move(reduced)) {}

    static void check_conductor(long n) {
        if (n < 1) throw std::invalid_argument("conductor must be positive");
    }

    static void trim(std::vector<Rational>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    }

    static std::vector<Rational> phi_rational(long n) {
        const auto& phi = detail::cyclotomic_polynomial(n);
        std::vector<Rational> r(phi.size());
        for (std::size_t e = 0; e < phi.size(); ++e) r[e] = Rational(phi[e]);
        return r;
    }

    static std::vector<Rational> reduce(std::vector<Rational> raw, long n) {
        const auto& phi = detail::cyclotomic_polynomial(n);
        std::size_t deg = phi.size() - 1;
        if (raw.size() < deg) raw.resize(deg, Rational(0));
        for (long k = static_cast<long>(raw.size()) - 1; k >= static_cast<long>(deg); --k) {
            Rational c = raw[k];  // phi is monic
            if (c == 0) continue;
            for (std::size_t t = 0; t < phi.size(); ++t)
                raw[k - deg + t] -= c * Rational(phi[t]);
        }
        raw.resize(deg);
        return raw;
    }

    static std::pair<Cyclotomic, Cyclotomic> to_common(const Cyclotomic& x, const Cyclotomic& y) {
        if (x.conductor_ == y.conductor_) return {x, y};
        long m = lcm_long(x.conductor_, y.conductor_);
        return {x.promoted(m), y.promoted(m)};
    }

    long conductor_;
    std::vector<Rational> coeffs_;
};

}  // namespace sl2orbit
