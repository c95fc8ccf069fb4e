#include "slocc2mn/rational.hpp"

#include <cctype>

namespace slocc {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rational(0);
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational(0);
    if (z.is_real()) {
        if (sgn(z.re) > 0) {
            if (auto r = rational_sqrt(z.re)) return GaussianRational(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-z.re)) return GaussianRational(Rational(0), *r);
        return std::nullopt;
    }
    // (x + yi)^2 = z needs x^2 = (|z| + re)/2 and y^2 = (|z| - re)/2 with
    // rational |z| = sqrt(norm), and sign(y) fixed by 2xy = im.
    auto mod = rational_sqrt(z.norm());
    if (!mod) return std::nullopt;
    Rational x2 = (*mod + z.re) / 2;
    Rational y2 = (*mod - z.re) / 2;
    auto x = rational_sqrt(x2);
    auto y = rational_sqrt(y2);
    if (!x || !y) return std::nullopt;
    GaussianRational root(*x, sgn(z.im) >= 0 ? *y : Rational(-*y));
    if (root * root == z) return root;
    return std::nullopt;
}

bool scalar_less(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

namespace {

std::string rat_str(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

// Parses [sign] digits [/ digits] starting at pos; throws on malformed input.
Rational parse_rat(const std::string& s, size_t& pos, bool sign_required) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    } else if (sign_required) {
        throw ParseError("expected sign in scalar literal: " + s);
    }
    size_t dig = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dig) throw ParseError("expected digits in scalar literal: " + s.substr(start));
    Integer num(s.substr(dig, pos - dig));
    Integer den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t d2 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d2) throw ParseError("expected denominator digits: " + s);
        den = Integer(s.substr(d2, pos - d2));
        if (den == 0) throw ParseError("zero denominator: " + s);
    }
    Rational q(neg ? -num : num, den);
    q.canonicalize();
    return q;
}

} // namespace

std::string GaussianRational::str() const {
    if (sgn(im) == 0) return rat_str(re);
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = rat_str(im) + "i";
    if (sgn(re) == 0) return imag;
    if (sgn(im) > 0) return rat_str(re) + "+" + imag;
    return rat_str(re) + imag;
}

GaussianRational parse_scalar(const std::string& text) {
    // Strip surrounding whitespace; the grammar itself has none.
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty scalar literal");
    std::string s = text.substr(b, e - b + 1);
    for (char c : s)
        if (c == '.' || c == 'e' || c == 'E') throw ParseError("float literals are not accepted: " + s);

    size_t pos = 0;
    Rational re(0), im(0);
    bool have_re = false, have_im = false;

    auto read_term = [&](bool sign_required) {
        // bare "i" / "+i" / "-i"
        size_t save = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        } else if (sign_required) {
            throw ParseError("malformed scalar literal: " + s);
        }
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            if (have_im) throw ParseError("duplicate imaginary part: " + s);
            im = neg ? -1 : 1;
            have_im = true;
            return;
        }
        pos = save;
        Rational q = parse_rat(s, pos, sign_required);
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            if (have_im) throw ParseError("duplicate imaginary part: " + s);
            im = q;
            have_im = true;
        } else {
            if (have_re || have_im) throw ParseError("malformed scalar literal: " + s);
            re = q;
            have_re = true;
        }
    };

    read_term(false);
    if (pos < s.size()) read_term(true);
    if (pos != s.size()) throw ParseError("trailing characters in scalar literal: " + s);
    return {re, im};
}

} // namespace slocc
