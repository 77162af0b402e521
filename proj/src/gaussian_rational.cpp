/*
   Copyright 2026 The projconn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "projconn/gaussian_rational.hpp"

#include <ostream>

#include "projconn/errors.hpp"

namespace projconn {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

std::string imaginary_text(const mpq_class& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return imaginary_text(im_);
    std::string im = imaginary_text(im_);
    return "(" + re_.get_str() + (im.front() == '-' ? "" : "+") + im + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << c.to_string(); }

}  // namespace projconn
