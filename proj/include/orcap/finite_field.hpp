#ifndef ORCAP_FINITE_FIELD_HPP
#define ORCAP_FINITE_FIELD_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orcap/graph.hpp"

namespace orcap {

inline constexpr int kMaxFieldOrder = 1 << 16;

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// GF(p^k) with elements indexed 0..q-1 by their coefficient vector in
/// base p, little-endian (index = c0 + c1*p + ... + c_{k-1}*p^{k-1}).
/// The modulus is the lexicographically smallest monic irreducible
/// polynomial (coefficients compared constant term first) and the
/// primitive element is the first element, in index order, of full
/// multiplicative order. Both choices make every derived graph
/// reproducible bit for bit.
class FiniteField {
  public:
    static FiniteField build(int p, int k) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
        double q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        if (q > kMaxFieldOrder) throw SizeBudgetError("field order exceeds budget");
        FiniteField f;
        f.p_ = p;
        f.k_ = k;
        f.q_ = static_cast<int>(q);
        f.modulus_ = find_modulus(p, k);
        f.build_tables();
        return f;
    }

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const {
        int r = 0, mul = 1;
        for (int i = 0; i < k_; ++i) {
            r += ((a % p_ + b % p_) % p_) * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }

    int neg(int a) const {
        int r = 0, mul = 1;
        for (int i = 0; i < k_; ++i) {
            r += ((p_ - a % p_) % p_) * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    int inv(int a) const {
        if (a == 0) throw std::invalid_argument("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    int pow(int a, long long e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        long long m = log_[a] * (e % (q_ - 1)) % (q_ - 1);
        return exp_[(m + (q_ - 1)) % (q_ - 1)];
    }

    int exp(int i) const { return exp_[((i % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }
    int log(int a) const {
        if (a == 0) throw std::invalid_argument("log of zero");
        return log_[a];
    }
    int primitive_element() const { return exp_[1]; }

    /// Nonzero element with even discrete log.
    bool is_square(int a) const {
        if (a == 0) return false;
        return log_[a] % 2 == 0;
    }

    /// Ascending list of the (q-1)/2 nonzero squares; q must be odd.
    std::vector<int> nonzero_squares() const {
        if (q_ % 2 == 0) throw std::invalid_argument("nonzero_squares: field order must be odd");
        std::vector<int> s;
        for (int a = 1; a < q_; ++a)
            if (is_square(a)) s.push_back(a);
        return s;
    }

  private:
    FiniteField() = default;

    // Polynomials over GF(p) as coefficient vectors, constant term first.
    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
        while (a.size() >= m.size()) {
            int lead = a.back();
            if (lead != 0) {
                const std::size_t shift = a.size() - m.size();
                for (std::size_t i = 0; i < m.size(); ++i) {
                    a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
                }
            }
            a.pop_back();
        }
        return a;
    }

    static std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
        std::vector<int> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return r;
    }

    static bool divides(const std::vector<int>& d, std::vector<int> a, int p) {
        // monic divisor d; true iff remainder of a by d is zero
        while (a.size() >= d.size()) {
            int lead = a.back();
            if (lead != 0) {
                const std::size_t shift = a.size() - d.size();
                for (std::size_t i = 0; i < d.size(); ++i)
                    a[shift + i] = ((a[shift + i] - lead * d[i]) % p + p) % p;
            }
            a.pop_back();
        }
        for (int c : a)
            if (c != 0) return false;
        return true;
    }

    static bool is_irreducible(const std::vector<int>& f, int p) {
        const int k = static_cast<int>(f.size()) - 1;
        // no roots in GF(p)
        for (int x = 0; x < p; ++x) {
            long long v = 0, xp = 1;
            for (int c : f) {
                v = (v + c * xp) % p;
                xp = xp * x % p;
            }
            if (v == 0) return false;
        }
        if (k <= 3) return true;  // no root => irreducible for deg 2,3
        // trial division by all monic polynomials of degree 2..k/2
        for (int d = 2; 2 * d <= k; ++d) {
            std::vector<int> g(d + 1, 0);
            g[d] = 1;
            int total = 1;
            for (int i = 0; i < d; ++i) total *= p;
            for (int code = 0; code < total; ++code) {
                int c = code;
                for (int i = 0; i < d; ++i) {
                    g[i] = c % p;
                    c /= p;
                }
                if (divides(g, f, p)) return false;
            }
        }
        return true;
    }

    static std::vector<int> find_modulus(int p, int k) {
        if (k == 1) return {0, 1};  // x; degenerate, arithmetic is plain mod p
        std::vector<int> f(k + 1, 0);
        f[k] = 1;
        int total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        // enumerate lower coefficients in lex order, constant term most significant
        std::vector<int> digits(k, 0);
        for (int code = 0; code < total; ++code) {
            int rem = code;
            for (int i = k - 1; i >= 0; --i) {  // digits[0] (constant) varies slowest
                digits[i] = rem % p;
                rem /= p;
            }
            for (int i = 0; i < k; ++i) f[i] = digits[i];
            if (is_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

    int index_of(const std::vector<int>& poly) const {
        int idx = 0, mul = 1;
        for (int i = 0; i < k_; ++i) {
            idx += (i < static_cast<int>(poly.size()) ? poly[i] : 0) * mul;
            mul *= p_;
        }
        return idx;
    }

    std::vector<int> poly_of(int idx) const {
        std::vector<int> c(k_, 0);
        for (int i = 0; i < k_; ++i) {
            c[i] = idx % p_;
            idx /= p_;
        }
        return c;
    }

    int mul_slow(int a, int b) const {
        if (k_ == 1) return a * b % p_;
        auto r = poly_mod(poly_mul(poly_of(a), poly_of(b), p_), modulus_, p_);
        return index_of(r);
    }

    int order_of(int a) const {
        int x = a, ord = 1;
        while (x != 1) {
            x = mul_slow(x, a);
            ++ord;
            if (ord > q_) throw std::logic_error("element order overflow");
        }
        return ord;
    }

    void build_tables() {
        int g = -1;
        for (int a = 1; a < q_; ++a) {
            if (order_of(a) == q_ - 1) {
                g = a;
                break;
            }
        }
        if (g < 0) throw std::logic_error("no primitive element found");
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, -1);
        int x = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_slow(x, g);
        }
        // exp must be a bijection onto the nonzero elements
        for (int a = 1; a < q_; ++a)
            if (log_[a] < 0) throw std::logic_error("exp table is not a bijection");
    }

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_;
    std::vector<int> log_;
};

}  // namespace orcap

#endif  // ORCAP_FINITE_FIELD_HPP
