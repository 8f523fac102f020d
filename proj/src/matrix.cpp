#include "critgrp/matrix.hpp"

namespace critgrp {

RationalMatrix to_rational(const IntegerMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = Rational(a(i, j));
        }
    }
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& z) {
    return z.get_str();
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace critgrp
