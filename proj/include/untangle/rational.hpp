#pragma once

// Exact rational scalar type and helpers, plus sign-exact sums of square roots
// (needed for comparing polygonal arc lengths).

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace untangle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& x) { return x.sign(); }
inline int sign(const Int& x) { return x.sign(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline std::string to_string(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

// n = core * square^2 with core squarefree. Trial division up to cbrt(n), then
// the remainder has at most two prime factors: a perfect square or squarefree.
inline void squarefree_split(Int n, Int& core, Int& square) {
    core = 1;
    square = 1;
    if (n <= 0) throw std::invalid_argument("squarefree_split wants n > 0");
    for (Int d = 2; d * d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        for (int i = 0; i + 1 < e; i += 2) square *= d;
        if (e % 2) core *= d;
    }
    Int r = sqrt(n);
    if (r * r == n) square *= r;
    else core *= n;
}

} // namespace detail

// Exact sum of terms c_i * sqrt(s_i); s_i positive squarefree integers. Signs are
// decided exactly: sqrt of distinct squarefree integers are linearly independent
// over Q, so a nonempty reduced sum is nonzero and interval refinement terminates.
class SqrtSum {
  public:
    SqrtSum() = default;

    // adds c * sqrt(r), r >= 0 rational
    SqrtSum& add(const Rat& c, const Rat& r) {
        if (sign(r) < 0) throw std::invalid_argument("sqrt of negative");
        if (sign(c) == 0 || sign(r) == 0) return *this;
        // sqrt(p/q) = sqrt(p*q)/q
        Int p = numerator(r), q = denominator(r);
        Int core, square;
        detail::squarefree_split(p * q, core, square);
        Rat coef = c * Rat(square, q);
        auto [it, fresh] = terms_.emplace(core, coef);
        if (!fresh) {
            it->second += coef;
            if (sign(it->second) == 0) terms_.erase(it);
        }
        return *this;
    }

    SqrtSum& add(const SqrtSum& other, int scale = 1) {
        for (const auto& [core, coef] : other.terms_) {
            auto [it, fresh] = terms_.emplace(core, coef * scale);
            if (!fresh) {
                it->second += coef * scale;
                if (sign(it->second) == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    bool zero() const { return terms_.empty(); }

    int sgn() const {
        if (terms_.empty()) return 0;
        bool pos = true, neg = true;
        for (const auto& [core, coef] : terms_) {
            (sign(coef) > 0 ? neg : pos) = false;
        }
        if (pos) return 1;
        if (neg) return -1;
        // Mixed signs: rational interval enclosure, refined until it excludes 0.
        for (unsigned prec = 32;; prec *= 2) {
            Rat lo = 0, hi = 0;
            Int scale = Int(1) << prec;
            for (const auto& [core, coef] : terms_) {
                Int root = sqrt(Int(core * scale * scale)); // floor(sqrt(core)*2^prec)
                Rat rlo(root, scale), rhi(root + 1, scale);
                if (sign(coef) > 0) {
                    lo += coef * rlo;
                    hi += coef * rhi;
                } else {
                    lo += coef * rhi;
                    hi += coef * rlo;
                }
            }
            if (sign(lo) > 0) return 1;
            if (sign(hi) < 0) return -1;
            if (prec > 1u << 20) throw std::runtime_error("SqrtSum::sgn did not separate");
        }
    }

    int compare(const SqrtSum& other) const {
        SqrtSum diff = *this;
        diff.add(other, -1);
        return diff.sgn();
    }

  private:
    std::map<Int, Rat> terms_; // squarefree core -> rational coefficient
};

} // namespace untangle
