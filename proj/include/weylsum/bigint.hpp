#ifndef WEYLSUM_BIGINT_HPP
#define WEYLSUM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <vector>

namespace weylsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt isqrt_floor(const BigInt& n) {
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt r = isqrt_floor(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

// floor(a/b) for exact integers, any signs
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rat(const BigRat& x) {
    return floor_div(numerator(x), denominator(x));
}

// nearest integer, ties toward +infinity
inline BigInt round_rat(const BigRat& x) {
    return floor_rat(x + BigRat(1, 2));
}

inline double to_double(const BigRat& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

// log of a positive BigInt without overflowing double
inline double log_big(const BigInt& n) {
    if (n <= 0) return -std::numeric_limits<double>::infinity();
    const unsigned bits = static_cast<unsigned>(msb(n));
    if (bits < 500) return std::log(n.convert_to<double>());
    BigInt top = n >> (bits - 52);
    return std::log(top.convert_to<double>()) + (bits - 52) * std::log(2.0);
}

inline double log_rat(const BigRat& x) {
    return log_big(numerator(x)) - log_big(denominator(x));
}

// trial-division factorization; fine for the 32/64-bit inputs used here
inline std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> fac;
    if (n < 0) n = -n;
    for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    return fac;
}

inline bool is_squarefree_int(const BigInt& n) {
    if (n == 0) return false;
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

// fundamental discriminant test over Q
inline bool is_fundamental_disc(const BigInt& D) {
    if (D == 0 || D == 1) return false;
    BigInt m = D % 4;
    if (m < 0) m += 4;
    if (m == 1) return is_squarefree_int(D);
    if (m == 0) {
        BigInt q = D / 4;
        BigInt r = q % 4;
        if (r < 0) r += 4;
        return (r == 2 || r == 3) && is_squarefree_int(q);
    }
    return false;
}

} // namespace weylsum

#endif
