#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sbalg {

// Rationals over gmp. Printed as "p/q", integers as "p".
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long p, long q) : v_(p, q) { v_.canonicalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0 || q.get_den() == 0)
            throw std::invalid_argument("bad rational: " + s);
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::string str() const { return v_.get_str(); }
    static std::string name() { return "rational"; }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// Prime field F_p with a runtime modulus shared per thread (set once by the CLI).
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long n) {
        long m = static_cast<long>(modulus());
        long r = n % m;
        v_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }

    static std::uint64_t& modulus() {
        static thread_local std::uint64_t p = 1000003;
        return p;
    }

    static Fp parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Fp(std::stol(s));
        return Fp(std::stol(s.substr(0, slash))) / Fp(std::stol(s.substr(slash + 1)));
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const {
        std::uint64_t s = v_ + o.v_, m = modulus();
        return raw(s >= m ? s - m : s);
    }
    Fp operator-(const Fp& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_); }
    // the modulus stays below 2^32, so the product fits in 64 bits
    Fp operator*(const Fp& o) const { return raw(v_ * o.v_ % modulus()); }
    Fp operator/(const Fp& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return *this * o.pow(modulus() - 2);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }
    static std::string name() { return "fp:" + std::to_string(modulus()); }

private:
    static Fp raw(std::uint64_t v) { Fp f; f.v_ = v; return f; }
    Fp pow(std::uint64_t e) const {
        Fp r = raw(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    std::uint64_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& r) { return os << r.str(); }

} // namespace sbalg
