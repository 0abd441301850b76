#ifndef NORMSUM_TYPES_HPP
#define NORMSUM_TYPES_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace normsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;
using IntVector = DenseVector<BigInt>;
using Index = Eigen::Index;

inline double to_double(const BigRat& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline std::string to_string(const BigInt& n) { return n.str(); }
inline std::string to_string(const BigRat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline std::int64_t pow_ll(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline BigInt pow_big(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    using u128 = unsigned __int128;
    std::int64_t r = 1 % m;
    std::int64_t b = ((base % m) + m) % m;
    while (exp > 0) {
        if (exp & 1) r = static_cast<std::int64_t>((u128(r) * u128(b)) % u128(m));
        b = static_cast<std::int64_t>((u128(b) * u128(b)) % u128(m));
        exp >>= 1;
    }
    return r;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    using u128 = unsigned __int128;
    a = ((a % m) + m) % m;
    b = ((b % m) + m) % m;
    return static_cast<std::int64_t>((u128(a) * u128(b)) % u128(m));
}

// Inverse of a mod m for gcd(a, m) = 1.
inline std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) return 0;
    return ((t % m) + m) % m;
}

inline bool is_prime_ll(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> primes_below(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound <= 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound), true);
    for (std::int64_t p = 2; p < bound; ++p) {
        if (!sieve[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (std::int64_t q = p * p; q < bound; q += p) sieve[static_cast<std::size_t>(q)] = false;
    }
    return out;
}

// (prime, exponent) pairs, ascending primes.
inline std::vector<std::pair<std::int64_t, int>> factorize_ll(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline int valuation_ll(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n != 0 && n % p == 0) n /= p, ++v;
    return v;
}

inline int valuation_big(BigInt n, const BigInt& p) {
    if (n == 0) return -1;
    int v = 0;
    while (n % p == 0) n /= p, ++v;
    return v;
}

// Enumeration / modulus budgets for exhaustive paths.
struct Budget {
    std::int64_t max_tuples = 10'000'000;
    std::int64_t max_modulus = 1'000'000;
};

}  // namespace normsum

#endif
