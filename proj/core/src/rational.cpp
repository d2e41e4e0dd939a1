#include "singlet/rational.hpp"

namespace singlet {

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational q{Integer(s)};
            return q;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);  // already coprime
    return true;
}

namespace {

// n = s^2 * f with f square-free, by trial division (the integers seen here
// are products of small factors).
void square_decompose_int(Integer n, Integer& s, Integer& f) {
    s = 1;
    f = 1;
    if (n == 0) return;
    for (Integer d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            ++e;
        }
        for (unsigned k = 0; k + 1 < e; k += 2) s *= d;
        if (e % 2) f *= d;
    }
    if (n > 1) f *= n;  // leftover prime
}

}  // namespace

void square_decompose(const Rational& q, Rational& square_root, Rational& square_free) {
    if (q == 0) {
        square_root = 0;
        square_free = 0;
        return;
    }
    if (q < 0) throw std::domain_error("square_decompose: negative radicand");
    Integer sn, fn, sd, fd;
    square_decompose_int(q.get_num(), sn, fn);
    square_decompose_int(q.get_den(), sd, fd);
    // q = (sn/sd)^2 * fn/fd; rescale so the square-free part is an integer.
    square_root = Rational(sn, sd * fd);
    square_root.canonicalize();
    square_free = Rational(fn * fd);
}

}  // namespace singlet
