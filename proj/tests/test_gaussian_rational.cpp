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

#include <doctest.h>

#include "projconn/errors.hpp"
#include "projconn/gaussian_rational.hpp"
#include "support/generators.hpp"

using projconn::DivisionByZero;
using projconn::GaussianRational;

TEST_SUITE("polycore.gaussian_rational") {
    TEST_CASE("fractions are stored reduced with positive denominator") {
        GaussianRational a = GaussianRational::fraction(6, -8);
        CHECK(a.real().get_num() == -3);
        CHECK(a.real().get_den() == 4);
        CHECK(a.is_real());
        CHECK(GaussianRational(mpq_class(10, 4), mpq_class(-9, 6)).imag() == mpq_class(-3, 2));
    }

    TEST_CASE("zero has one representation") {
        GaussianRational z = GaussianRational::fraction(0, 7);
        CHECK(z.is_zero());
        CHECK(z == GaussianRational());
        CHECK(z.real().get_den() == 1);
        CHECK((GaussianRational::imaginary_unit() - GaussianRational::imaginary_unit()).is_zero());
    }

    TEST_CASE("i squared is -1") {
        GaussianRational i = GaussianRational::imaginary_unit();
        CHECK(i * i == GaussianRational(-1));
        CHECK(i.conjugate() == -i);
    }

    TEST_CASE("complex product and quotient") {
        // (1+2i)(3-i) = 3 - i + 6i + 2 = 5 + 5i
        GaussianRational a(1, 2), b(3, -1);
        CHECK(a * b == GaussianRational(5, 5));
        CHECK((a * b) / b == a);
        // 1/(1+i) = (1-i)/2
        CHECK(GaussianRational(1, 1).inverse() == GaussianRational(mpq_class(1, 2), mpq_class(-1, 2)));
    }

    TEST_CASE("division by zero throws") {
        CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
        CHECK_THROWS_AS(GaussianRational(3) / GaussianRational(0), DivisionByZero);
        CHECK_THROWS_AS(GaussianRational::fraction(1, 0), DivisionByZero);
    }

    TEST_CASE("text forms") {
        CHECK(GaussianRational(7).to_string() == "7");
        CHECK(GaussianRational::fraction(-3, 4).to_string() == "-3/4");
        CHECK(GaussianRational::imaginary_unit().to_string() == "i");
        CHECK((-GaussianRational::imaginary_unit()).to_string() == "-i");
        CHECK(GaussianRational(0, mpq_class(1, 2)).to_string() == "1/2*i");
        CHECK(GaussianRational(mpq_class(1, 2), mpq_class(-3, 4)).to_string() == "(1/2-3/4*i)");
        CHECK(GaussianRational(2, 1).to_string() == "(2+i)");
    }

    TEST_CASE("field axioms on random values") {
        projconn::testing::Rng rng(11);
        for (int k = 0; k < projconn::testing::kCases; ++k) {
            GaussianRational a = rng.coefficient(), b = rng.coefficient(), c = rng.coefficient();
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}
