#pragma once
// Exact Gaussian-rational scalar: a + b*i with a, b arbitrary-precision
// rationals kept in lowest terms with positive denominators (mpq invariant).
// This is the single coefficient field used throughout the library.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

namespace epwv::exact {

class Gq {
public:
    Gq() : re_(0), im_(0) {}
    Gq(int n) : re_(n), im_(0) {}
    Gq(long n) : re_(n), im_(0) {}
    Gq(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
    Gq(mpz_class n) : re_(std::move(n)), im_(0) {}
    Gq(mpq_class re) : re_(std::move(re)), im_(0) {}
    Gq(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gq i() { return Gq(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_integer() const {
        return im_ == 0 && re_.get_den() == 1;
    }

    Gq conj() const { return Gq(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Gq operator-() const { return Gq(-re_, -im_); }

    Gq& operator+=(const Gq& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gq& operator-=(const Gq& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gq& operator*=(const Gq& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Gq& operator/=(const Gq& o) {
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend Gq operator+(Gq a, const Gq& b) { return a += b; }
    friend Gq operator-(Gq a, const Gq& b) { return a -= b; }
    friend Gq operator*(Gq a, const Gq& b) { return a *= b; }
    friend Gq operator/(Gq a, const Gq& b) { return a /= b; }

    friend bool operator==(const Gq& a, const Gq& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gq& a, const Gq& b) { return !(a == b); }
    // Lexicographic (re, im) order; used only for canonical sorting, not as a
    // field order.
    friend bool operator<(const Gq& a, const Gq& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    Gq inverse() const { return Gq(1) / *this; }

    // Canonical text form: "a/b" when real, otherwise "a/b+c/d*i" (the sign of
    // c absorbs the '+' when negative: "a/b-c/d*i").
    std::string str() const {
        std::string r = re_.get_num().get_str() + "/" + re_.get_den().get_str();
        if (im_ == 0) return r;
        mpq_class a = abs(im_);
        std::string s = (im_ < 0) ? "-" : "+";
        return r + s + a.get_num().get_str() + "/" + a.get_den().get_str() + "*i";
    }

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(re_.get_num().get_str()) * 1000003u ^
               h(re_.get_den().get_str()) * 10007u ^
               h(im_.get_num().get_str()) * 101u ^ h(im_.get_den().get_str());
    }

private:
    mpq_class re_, im_;
};

}  // namespace epwv::exact
