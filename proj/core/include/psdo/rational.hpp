#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psdo {

// Thrown on violated mathematical preconditions (non-unit inverses, wrong
// leading terms, non-commuting inputs, ...). The CLI maps it to exit code 1.
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational scalar over GMP, always canonical: lowest terms, positive
// denominator, zero stored as 0/1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw math_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rat parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw math_error("bad rational literal: " + s);
        v.canonicalize();
        return Rat(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Valid only when the value fits; used for small structural constants.
    long num_long() const { return v_.get_num().get_si(); }
    long den_long() const { return v_.get_den().get_si(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_str();
    }

    const mpq_class& raw() const { return v_; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw math_error("rational division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) {
        v_ += o.v_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        v_ *= o.v_;
        return *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

// Binomial C(n, k) for arbitrary integer n and k >= 0 via the falling
// factorial n(n-1)...(n-k+1)/k!; exact for negative n as well.
inline Rat binomial(long n, long k) {
    if (k < 0) return Rat(0);
    mpq_class r(1);
    for (long t = 0; t < k; ++t) {
        r *= mpq_class(n - t);
        r /= mpq_class(t + 1);
    }
    r.canonicalize();
    return Rat(std::move(r));
}

inline Rat factorial(long n) {
    mpz_class r(1);
    for (long t = 2; t <= n; ++t) r *= t;
    return Rat(mpq_class(r));
}

// Ceiling of a rational, as an integer.
inline long ceil_to_long(const Rat& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.raw().get_num().get_mpz_t(), q.raw().get_den().get_mpz_t());
    return c.get_si();
}

} // namespace psdo
