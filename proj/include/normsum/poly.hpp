#ifndef NORMSUM_POLY_HPP
#define NORMSUM_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "normsum/errors.hpp"
#include "normsum/types.hpp"

namespace normsum {

// Sparse multivariate polynomial over Z. Monomials keyed by exponent vector;
// the map ordering keeps every traversal deterministic.
class MultiPoly {
  public:
    using Exponents = std::vector<int>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, BigInt c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = std::move(c);
        return p;
    }
    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(e1);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    MultiPoly operator*(const BigInt& s) const {
        MultiPoly r(nvars_);
        if (s == 0) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exponents d(e);
            d[static_cast<std::size_t>(var)] -= 1;
            r.add_term(d, c * k);
        }
        return r;
    }

    BigInt eval(const IntVector& x) const {
        BigInt sum = 0;
        for (const auto& [e, c] : terms_) {
            BigInt t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int j = 0; j < e[i]; ++j) t *= x(static_cast<Index>(i));
            sum += t;
        }
        return sum;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            if (s > d) d = s;
        }
        return d;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            if (s != degree) return false;
        }
        return true;
    }

    std::size_t term_count() const { return terms_.size(); }

  private:
    int nvars_;
    std::map<Exponents, BigInt> terms_;
};

// Reduction of a polynomial mod m for fast repeated evaluation on int64
// points. Valid while m fits comfortably: intermediate products go through
// 128-bit.
class CompiledPoly {
  public:
    CompiledPoly() : nvars_(0), modulus_(1) {}
    CompiledPoly(const MultiPoly& p, std::int64_t m) : nvars_(p.nvars()), modulus_(m) {
        for (const auto& [e, c] : p.terms()) {
            BigInt r = c % m;
            if (r < 0) r += m;
            std::int64_t cc = r.convert_to<std::int64_t>();
            if (cc == 0) continue;
            terms_.push_back({cc, e});
        }
    }

    std::int64_t modulus() const { return modulus_; }
    int nvars() const { return nvars_; }

    // x entries must already lie in [0, modulus).
    std::int64_t eval(std::span<const std::int64_t> x) const {
        std::int64_t sum = 0;
        for (const auto& t : terms_) {
            std::int64_t v = t.coeff;
            for (std::size_t i = 0; i < t.exps.size(); ++i)
                for (int j = 0; j < t.exps[i]; ++j) v = mod_mul(v, x[i], modulus_);
            sum += v;
            if (sum >= modulus_) sum -= modulus_;
        }
        return sum;
    }

  private:
    struct Term {
        std::int64_t coeff;
        std::vector<int> exps;
    };
    int nvars_;
    std::int64_t modulus_;
    std::vector<Term> terms_;
};

}  // namespace normsum

#endif
