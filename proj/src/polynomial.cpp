#include "slocc2mn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>

#include "slocc2mn/gaussian_int.hpp"

namespace slocc {

GaussianRational ExactPolynomial::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<GaussianRational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    return ExactPolynomial(std::move(d));
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    std::vector<GaussianRational> r(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < c_.size()) r[k] += c_[k];
        if (k < o.c_.size()) r[k] += o.c_[k];
    }
    return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
    return *this + o.scaled(GaussianRational(-1));
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::scaled(const GaussianRational& c) const {
    std::vector<GaussianRational> r(c_);
    for (auto& v : r) v *= c;
    return ExactPolynomial(std::move(r));
}

std::pair<ExactPolynomial, ExactPolynomial> ExactPolynomial::divmod(const ExactPolynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<GaussianRational> rem(c_);
    int dd = d.degree();
    if (degree() < dd) return {ExactPolynomial{}, *this};
    std::vector<GaussianRational> quo(degree() - dd + 1);
    GaussianRational lead_inv = d.leading().inverse();
    for (int k = degree() - dd; k >= 0; --k) {
        GaussianRational f = rem[k + dd] * lead_inv;
        quo[k] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= f * d.c_[j];
    }
    return {ExactPolynomial(std::move(quo)), ExactPolynomial(std::move(rem))};
}

ExactPolynomial ExactPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

std::string ExactPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")";
        if (k > 0) os << "*x";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b) {
    while (!b.is_zero()) {
        ExactPolynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic(); // keeps coefficient growth down
    }
    return a.monic();
}

namespace {

// Primitive Gaussian-integer form: multiplies out denominators and divides
// by the Z[i]-content. Roots are unchanged.
std::vector<GaussianInt> primitive_integer_form(const ExactPolynomial& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) {
        l = lcm(l, c.re.get_den());
        l = lcm(l, c.im.get_den());
    }
    std::vector<GaussianInt> g;
    g.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        g.emplace_back(c.re.get_num() * (l / c.re.get_den()), c.im.get_num() * (l / c.im.get_den()));
    GaussianInt content(0);
    for (const auto& c : g)
        if (!c.is_zero()) content = content.is_zero() ? gi_normalize_associate(c) : gi_gcd(content, c);
    if (!content.is_unit())
        for (auto& c : g) c = gi_div_exact(c, content);
    return g;
}

struct ScalarLess {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const { return scalar_less(a, b); }
};

// One Gaussian-rational root of the primitive polynomial, found by the
// rational-root theorem over Z[i]: p/q with p | g0, q | g_deg. Complete, so a
// miss proves there is no representable root.
std::optional<GaussianRational> search_root(const ExactPolynomial& p) {
    auto g = primitive_integer_form(p);
    const GaussianInt& lead = g.back();
    const GaussianInt& cons = g.front(); // nonzero: zero roots are stripped by the caller
    std::vector<GaussianInt> nums = gi_divisors(cons);
    std::vector<GaussianInt> dens = gi_divisors(lead);
    static const GaussianInt units[4] = {GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1),
                                         GaussianInt(Integer(0), Integer(-1))};
    // p/q is a root iff (q*x - p) divides the primitive form, so q - p must
    // divide g(1) and q + p divide g(-1); both tests are cheap.
    GaussianInt at_one(0), at_minus_one(0);
    {
        GaussianInt x(1);
        for (auto it = g.rbegin(); it != g.rend(); ++it) at_one = at_one * x + *it;
        GaussianInt y(-1);
        for (auto it = g.rbegin(); it != g.rend(); ++it) at_minus_one = at_minus_one * y + *it;
    }
    std::set<GaussianRational, ScalarLess> seen;
    // Small candidates first: roots of pencil polynomials tend to be small.
    std::sort(nums.begin(), nums.end(),
              [](const GaussianInt& a, const GaussianInt& b) { return a.norm() < b.norm(); });
    std::sort(dens.begin(), dens.end(),
              [](const GaussianInt& a, const GaussianInt& b) { return a.norm() < b.norm(); });
    for (const auto& den : dens) {
        GaussianRational d = den.to_rational();
        for (const auto& num : nums) {
            for (const auto& u : units) {
                GaussianInt pu = num * u;
                if (!at_one.is_zero() && !gi_divides(den - pu, at_one)) continue;
                if (!at_minus_one.is_zero() && !gi_divides(den + pu, at_minus_one)) continue;
                GaussianRational cand = pu.to_rational() / d;
                if (!seen.insert(cand).second) continue;
                if (p.eval(cand).is_zero()) return cand;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Numeric-guided fast path: Durand-Kerner guesses on the squarefree part,
// rationalized by continued fractions and verified exactly. Only verified
// roots are ever used, so this is purely an accelerator; completeness still
// comes from search_root on whatever remains.

using NumComplex = std::complex<long double>;

std::vector<NumComplex> durand_kerner(const std::vector<NumComplex>& monic) {
    const int deg = static_cast<int>(monic.size()) - 1;
    auto eval = [&](NumComplex z) {
        NumComplex acc = 0;
        for (int k = deg; k >= 0; --k) acc = acc * z + monic[k];
        return acc;
    };
    auto eval_deriv = [&](NumComplex z) {
        NumComplex acc = 0;
        for (int k = deg; k >= 1; --k) acc = acc * z + monic[k] * static_cast<long double>(k);
        return acc;
    };
    long double radius = 0;
    for (int k = 0; k < deg; ++k)
        radius = std::max(radius, std::pow(std::abs(monic[k]), 1.0L / (deg - k)));
    radius = std::max(radius, 0.5L) * 1.2L;
    std::vector<NumComplex> z(deg);
    for (int k = 0; k < deg; ++k)
        z[k] = radius * std::polar(1.0L, 2.0L * static_cast<long double>(M_PI) * k / deg + 0.42L);
    for (int iter = 0; iter < 2000; ++iter) {
        long double shift = 0;
        for (int i = 0; i < deg; ++i) {
            NumComplex denom = 1;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (std::abs(denom) < 1e-4000L) continue;
            NumComplex delta = eval(z[i]) / denom;
            z[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-17L) break;
    }
    // Newton polish; clustered roots leave Durand-Kerner slowly converging,
    // a few quadratic steps fix the last digits
    for (auto& root : z)
        for (int step = 0; step < 8; ++step) {
            NumComplex d = eval_deriv(root);
            if (std::abs(d) < 1e-4000L) break;
            root -= eval(root) / d;
        }
    return z;
}

// Best rational approximations of x via continued-fraction convergents.
std::vector<Rational> rational_candidates(long double x) {
    std::vector<Rational> out;
    if (!std::isfinite(static_cast<double>(x))) return out;
    if (std::abs(x) > 1e15L) return out;
    Integer p0(1), q0(0), p1, q1(1);
    p1 = Integer(static_cast<long>(std::floor(static_cast<double>(x))));
    long double frac = x - std::floor(x);
    out.emplace_back(p1, q1);
    for (int step = 0; step < 60 && frac > 1e-16L; ++step) {
        long double inv = 1.0L / frac;
        if (inv > 1e15L) break;
        long a = static_cast<long>(std::floor(static_cast<double>(inv)));
        frac = inv - std::floor(inv);
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational r(p1, q1);
        r.canonicalize();
        out.push_back(r);
        if (q1 > Integer("1000000000000000")) break;
    }
    return out;
}

struct NumericPass {
    std::vector<GaussianRational> verified;
    std::vector<NumComplex> raw; // squarefree-part root estimates
};

NumericPass numeric_root_pass(const ExactPolynomial& p) {
    NumericPass out;
    ExactPolynomial sf = p.divmod(poly_gcd(p, p.derivative())).first; // squarefree part
    if (sf.degree() < 1 || sf.degree() > 40) return out;
    std::vector<NumComplex> monic(sf.degree() + 1);
    GaussianRational lead_inv = sf.leading().inverse();
    for (int k = 0; k <= sf.degree(); ++k) {
        GaussianRational c = sf.coeff(k) * lead_inv;
        monic[k] = {static_cast<long double>(c.re.get_d()), static_cast<long double>(c.im.get_d())};
        if (!std::isfinite(c.re.get_d()) || !std::isfinite(c.im.get_d())) return out;
    }
    out.raw = durand_kerner(monic);
    for (const auto& z : out.raw) {
        // try convergents of the real (and imaginary) parts until one
        // verifies exactly; closeness is only a heuristic filter here
        for (const Rational& re : rational_candidates(z.real())) {
            if (std::abs(z.real() - static_cast<long double>(re.get_d())) > 1e-5L) continue;
            bool found = false;
            if (std::abs(z.imag()) < 1e-12L) {
                GaussianRational cand(re);
                if (p.eval(cand).is_zero()) {
                    out.verified.push_back(cand);
                    found = true;
                }
            } else {
                for (const Rational& im : rational_candidates(z.imag())) {
                    if (std::abs(z.imag() - static_cast<long double>(im.get_d())) > 1e-5L) continue;
                    GaussianRational cand(re, im);
                    if (p.eval(cand).is_zero()) {
                        out.verified.push_back(cand);
                        found = true;
                        break;
                    }
                }
            }
            if (found) break;
        }
    }
    return out;
}

// Hardware precision cannot separate roots packed tighter than roughly the
// evaluation noise floor; such clusters are the one case worth a 384-bit pass.
bool has_tight_cluster(const std::vector<NumComplex>& roots) {
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t k = i + 1; k < roots.size(); ++k)
            if (std::abs(roots[i] - roots[k]) < 1e-4L) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Second numeric tier: the same scheme at 384-bit float precision, for root
// clusters too tight for long double (catastrophic cancellation makes the
// polynomial unevaluable near such clusters in hardware floats).

constexpr int kMpfBits = 384;

struct MpComplex {
    mpf_class re{0, kMpfBits};
    mpf_class im{0, kMpfBits};

    MpComplex() = default;
    MpComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    MpComplex operator+(const MpComplex& o) const { return {re + o.re, im + o.im}; }
    MpComplex operator-(const MpComplex& o) const { return {re - o.re, im - o.im}; }
    MpComplex operator*(const MpComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    MpComplex operator/(const MpComplex& o) const {
        mpf_class n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    mpf_class norm2() const { return re * re + im * im; }
};

std::vector<Rational> rational_candidates_mpf(mpf_class x) {
    std::vector<Rational> out;
    if (abs(x) > 1e15) return out;
    Integer p0(1), q0(0), p1, q1(1);
    mpf_class fl(0, kMpfBits);
    mpf_floor(fl.get_mpf_t(), x.get_mpf_t());
    mpz_set_f(p1.get_mpz_t(), fl.get_mpf_t());
    mpf_class frac = x - fl;
    out.emplace_back(p1, q1);
    const mpf_class tiny(1e-60, kMpfBits);
    for (int step = 0; step < 200 && frac > tiny; ++step) {
        mpf_class inv = 1 / frac;
        if (inv > 1e30) break;
        mpf_floor(fl.get_mpf_t(), inv.get_mpf_t());
        Integer a;
        mpz_set_f(a.get_mpz_t(), fl.get_mpf_t());
        frac = inv - fl;
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational r(p1, q1);
        r.canonicalize();
        out.push_back(r);
        if (q1 > Integer("1000000000000000000000000000000")) break;
    }
    return out;
}

std::vector<GaussianRational> numeric_root_guesses_highprec(const ExactPolynomial& p,
                                                            const std::vector<NumComplex>& seeds) {
    std::vector<GaussianRational> verified;
    ExactPolynomial sf = p.divmod(poly_gcd(p, p.derivative())).first;
    const int deg = sf.degree();
    if (deg < 1 || deg > 40 || static_cast<int>(seeds.size()) != deg) return verified;
    std::vector<MpComplex> monic(deg + 1);
    GaussianRational lead_inv = sf.leading().inverse();
    double max_mag = 0;
    for (int k = 0; k <= deg; ++k) {
        GaussianRational c = sf.coeff(k) * lead_inv;
        monic[k] = {mpf_class(c.re, kMpfBits), mpf_class(c.im, kMpfBits)};
        max_mag = std::max(max_mag, std::abs(c.re.get_d()) + std::abs(c.im.get_d()));
    }
    if (!(max_mag < 1e30)) return verified; // wildly scaled input: leave it to the exact search

    auto eval = [&](const MpComplex& z) {
        MpComplex acc;
        for (int k = deg; k >= 0; --k) acc = acc * z + monic[k];
        return acc;
    };
    // seeded by the hardware-precision estimates, so convergence is quick
    std::vector<MpComplex> z(deg);
    for (int k = 0; k < deg; ++k)
        z[k] = {mpf_class(static_cast<double>(seeds[k].real()), kMpfBits),
                mpf_class(static_cast<double>(seeds[k].imag()), kMpfBits)};
    const mpf_class stop(1e-90, kMpfBits);
    for (int iter = 0; iter < 400; ++iter) {
        mpf_class shift(0, kMpfBits);
        for (int i = 0; i < deg; ++i) {
            MpComplex denom{mpf_class(1, kMpfBits), mpf_class(0, kMpfBits)};
            for (int j = 0; j < deg; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            if (denom.norm2() == 0) continue;
            MpComplex delta = eval(z[i]) / denom;
            z[i] = z[i] - delta;
            mpf_class d2 = delta.norm2();
            if (d2 > shift) shift = d2;
        }
        if (shift < stop) break;
    }
    const mpf_class imag_tiny(1e-40, kMpfBits);
    for (const auto& root : z) {
        for (const Rational& re : rational_candidates_mpf(root.re)) {
            mpf_class diff = root.re - mpf_class(re, kMpfBits);
            if (abs(diff) > 1e-20) continue;
            bool found = false;
            if (abs(root.im) < imag_tiny) {
                GaussianRational cand(re);
                if (p.eval(cand).is_zero()) {
                    verified.push_back(cand);
                    found = true;
                }
            } else {
                for (const Rational& im : rational_candidates_mpf(root.im)) {
                    mpf_class idiff = root.im - mpf_class(im, kMpfBits);
                    if (abs(idiff) > 1e-20) continue;
                    GaussianRational cand(re, im);
                    if (p.eval(cand).is_zero()) {
                        verified.push_back(cand);
                        found = true;
                        break;
                    }
                }
            }
            if (found) break;
        }
    }
    return verified;
}

// Roots of a monic-izable quadratic, if the discriminant has an exact
// Gaussian-rational square root.
std::optional<std::pair<GaussianRational, GaussianRational>> quadratic_roots(const ExactPolynomial& p) {
    GaussianRational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    GaussianRational disc = b * b - GaussianRational(4) * a * c;
    auto s = gaussian_sqrt(disc);
    if (!s) return std::nullopt;
    GaussianRational inv2a = (GaussianRational(2) * a).inverse();
    return std::make_pair((-b + *s) * inv2a, (-b - *s) * inv2a);
}

} // namespace

RootResult find_roots(const ExactPolynomial& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    RootResult res;
    ExactPolynomial cur = p;

    auto deflate = [&](const GaussianRational& r) {
        ExactPolynomial lin = ExactPolynomial::linear_root(r);
        int mult = 0;
        while (true) {
            auto [q, rem] = cur.divmod(lin);
            if (!rem.is_zero()) break;
            cur = q;
            ++mult;
        }
        if (mult > 0) res.roots.emplace_back(r, mult);
    };

    // Strip roots at zero first so the constant coefficient becomes nonzero.
    {
        int k = 0;
        while (k <= cur.degree() && cur.coeff(k).is_zero()) ++k;
        if (k > 0 && cur.degree() >= 0) {
            std::vector<GaussianRational> shifted(cur.coeffs().begin() + k, cur.coeffs().end());
            cur = ExactPolynomial(std::move(shifted));
            res.roots.emplace_back(GaussianRational(0), k);
        }
    }

    while (cur.degree() >= 1) {
        if (cur.degree() == 1) {
            deflate(-cur.coeff(0) / cur.coeff(1));
            continue;
        }
        if (cur.degree() == 2) {
            auto qr = quadratic_roots(cur);
            if (!qr) break;
            deflate(qr->first);
            if (cur.degree() >= 1 && qr->second != qr->first) deflate(qr->second);
            continue;
        }
        // Numerically guided, exactly verified roots first. Re-running after
        // each deflation round keeps clustered spectra tractable: every exact
        // deflation improves the conditioning of what is left.
        bool progressed = false;
        NumericPass pass = numeric_root_pass(cur);
        for (const auto& r : pass.verified) {
            int before = cur.degree();
            deflate(r);
            progressed = progressed || cur.degree() < before;
            if (cur.degree() < 3) break;
        }
        if (progressed) continue;
        // Root clusters below hardware precision: retry at 384 bits.
        if (has_tight_cluster(pass.raw)) {
            for (const auto& r : numeric_root_guesses_highprec(cur, pass.raw)) {
                int before = cur.degree();
                deflate(r);
                progressed = progressed || cur.degree() < before;
                if (cur.degree() < 3) break;
            }
            if (progressed) continue;
        }
        // Complete rational-root search; a miss proves no root remains.
        auto r = search_root(cur);
        if (!r) break;
        deflate(*r);
    }
    res.remainder = cur;
    std::sort(res.roots.begin(), res.roots.end(),
              [](const auto& a, const auto& b) { return scalar_less(a.first, b.first); });
    return res;
}

std::vector<std::pair<GaussianRational, int>> poly_roots_exact(const ExactPolynomial& p) {
    RootResult r = find_roots(p);
    if (r.remainder.degree() >= 1) throw IrreducibleRemainder(r.remainder.degree());
    return r.roots;
}

} // namespace slocc
