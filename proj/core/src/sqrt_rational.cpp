#include "singlet/sqrt_rational.hpp"

namespace singlet {

std::string SqrtRational::pretty() const {
    if (sign_ == 0) return "0";
    Rational root, sf;
    square_decompose(radicand_, root, sf);
    std::string out = sign_ < 0 ? "-" : "";
    if (sf == 1) {
        out += root.get_str();
        return out;
    }
    if (root != 1) out += root.get_str() + "*";
    out += "sqrt(" + sf.get_str() + ")";
    return out;
}

}  // namespace singlet
