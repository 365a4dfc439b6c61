#ifndef BRAUERDET_GAUSSIAN_HPP
#define BRAUERDET_GAUSSIAN_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

namespace brauerdet {

// Element of Z[I]: re + im*I with arbitrary-precision integer parts.
// All coefficient arithmetic in the library happens in this ring, so
// polynomial identities can be checked by exact equality.
class GaussianInt {
public:
    GaussianInt() : re_(0), im_(0) {}
    GaussianInt(long re) : re_(re), im_(0) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}
    GaussianInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianInt unit_i() { return GaussianInt(0, 1); }

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianInt operator-() const { return GaussianInt(-re_, -im_); }

    GaussianInt& operator+=(const GaussianInt& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }

    GaussianInt& operator-=(const GaussianInt& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

    GaussianInt& operator*=(const GaussianInt& o) {
        // (a+bI)(c+dI) = (ac - bd) + (ad + bc)I
        mpz_class re = re_ * o.re_ - im_ * o.im_;
        mpz_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    // Standalone text form: "0", "3", "-2", "I", "-I", "2*I", "1+I", "2-3*I".
    std::string to_string() const;

private:
    mpz_class re_;
    mpz_class im_;
};

GaussianInt gauss_mul(const GaussianInt& x, const GaussianInt& y);

}  // namespace brauerdet

#endif
