#include "rankin/exact.hpp"

#include "rankin/errors.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace rankin {

namespace {

constexpr unsigned long kMaxExponent = 1UL << 22;

bool exact_root(BigInt const& x, std::uint64_t k, BigInt& out)
{
    if (sgn(x) < 0)
        return false;
    return mpz_root(out.get_mpz_t(), x.get_mpz_t(), k) != 0;
}

BigInt floor_root(BigInt const& x, std::uint64_t k)
{
    BigInt r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

double log_abs(BigInt const& z)
{
    long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}


BigRational pow10_rat(long e)
{
    BigRational r;
    if (e >= 0)
        r = BigRational(pow_int(10, static_cast<unsigned long>(e)));
    else
        r = BigRational(BigInt(1), pow_int(10, static_cast<unsigned long>(-e)));
    return r;
}

}  // namespace

BigInt pow_int(BigInt const& base, unsigned long e)
{
    if (e > kMaxExponent)
        throw Overflow("exponent too large: " + std::to_string(e));
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRational pow_rat(BigRational const& base, unsigned long e)
{
    BigRational r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
    r.canonicalize();
    return r;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a / g, b, &out))
        throw Overflow("radical root overflow");
    return out;
}

ExactRadical::ExactRadical() : radicand_(0), root_(1) {}

ExactRadical::ExactRadical(BigRational radicand, std::uint64_t root)
    : radicand_(std::move(radicand)), root_(root)
{
    radicand_.canonicalize();
    if (root_ == 0)
        throw InvalidArgument("radical root must be positive");
    if (sgn(radicand_) < 0)
        throw InvalidArgument("negative radicand " + radicand_.get_str());
    canonicalize();
}

ExactRadical ExactRadical::make(BigInt const& num, BigInt const& den, std::uint64_t root)
{
    if (sgn(den) == 0)
        throw InvalidArgument("zero denominator");
    return ExactRadical(BigRational(num, den), root);
}

void ExactRadical::canonicalize()
{
    if (sgn(radicand_) == 0 || radicand_ == 1) {
        root_ = 1;
        return;
    }
    std::uint64_t rest = root_;
    std::uint64_t p = 2;
    BigInt num = radicand_.get_num(), den = radicand_.get_den();
    while (rest > 1) {
        if (p * p > rest)
            p = rest;
        if (rest % p != 0) {
            ++p;
            continue;
        }
        BigInt rn, rd;
        if (exact_root(num, p, rn) && exact_root(den, p, rd)) {
            num = rn;
            den = rd;
            root_ /= p;
            rest /= p;
            continue;
        }
        /* a failed p-th root means no higher power of p can succeed either */
        while (rest % p == 0)
            rest /= p;
        ++p;
    }
    radicand_ = BigRational(num, den);
    radicand_.canonicalize();
}

std::string ExactRadical::to_string() const
{
    std::string base = radicand_.get_str();
    if (root_ == 1)
        return base;
    return "(" + base + ")^(1/" + std::to_string(root_) + ")";
}

double radical_log(ExactRadical const& a)
{
    return (log_abs(a.radicand().get_num()) - log_abs(a.radicand().get_den())) /
           static_cast<double>(a.root());
}

double ExactRadical::to_double() const
{
    if (is_zero())
        return 0.0;
    return std::exp(radical_log(*this));
}

std::strong_ordering radical_compare(ExactRadical const& a, ExactRadical const& b)
{
    if (a.is_zero() || b.is_zero())
        return static_cast<int>(!a.is_zero()) <=> static_cast<int>(!b.is_zero());
    if (a == b)
        return std::strong_ordering::equal;

    double la = radical_log(a), lb = radical_log(b);
    double scale = std::max({1.0, std::fabs(la), std::fabs(lb)});
    if (std::fabs(la - lb) > 1e-9 * scale)
        return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;

    std::uint64_t l = checked_lcm(a.root(), b.root());
    unsigned long ea = l / a.root(), eb = l / b.root();
    BigInt lhs = pow_int(a.radicand().get_num(), ea) * pow_int(b.radicand().get_den(), eb);
    BigInt rhs = pow_int(b.radicand().get_num(), eb) * pow_int(a.radicand().get_den(), ea);
    int c = cmp(lhs, rhs);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(ExactRadical const& a, ExactRadical const& b)
{
    return radical_compare(a, b);
}

ExactRadical radical_mul(ExactRadical const& a, ExactRadical const& b)
{
    if (a.is_zero() || b.is_zero())
        return ExactRadical();
    std::uint64_t l = checked_lcm(a.root(), b.root());
    BigRational r = pow_rat(a.radicand(), l / a.root()) * pow_rat(b.radicand(), l / b.root());
    return ExactRadical(r, l);
}

ExactRadical radical_div(ExactRadical const& a, ExactRadical const& b)
{
    if (b.is_zero())
        throw InvalidArgument("division by zero radical");
    return radical_mul(a, radical_pow(b, -1));
}

ExactRadical radical_pow(ExactRadical const& a, BigRational const& exponent)
{
    BigRational e = exponent;
    e.canonicalize();
    if (a.is_zero()) {
        if (sgn(e) < 0)
            throw InvalidArgument("zero raised to a negative exponent");
        return sgn(e) == 0 ? ExactRadical(1) : ExactRadical();
    }
    if (sgn(e) == 0)
        return ExactRadical(1);
    if (!e.get_den().fits_ulong_p() || !e.get_num().fits_slong_p())
        throw Overflow("exponent too large");
    long u = e.get_num().get_si();
    unsigned long v = e.get_den().get_ui();
    BigRational base = a.radicand();
    if (u < 0) {
        base = 1 / base;
        u = -u;
    }
    std::uint64_t root = 0;
    if (__builtin_mul_overflow(a.root(), static_cast<std::uint64_t>(v), &root))
        throw Overflow("radical root overflow");
    return ExactRadical(pow_rat(base, static_cast<unsigned long>(u)), root);
}

ExactRadical radical_pow(ExactRadical const& a, long num, long den)
{
    if (den == 0)
        throw InvalidArgument("exponent with zero denominator");
    return radical_pow(a, BigRational(num, den));
}

BigInt radical_floor_scaled(ExactRadical const& a, long scale)
{
    BigRational y = a.radicand() * pow_rat(pow10_rat(scale), a.root());
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    return floor_root(fl, a.root());
}

namespace {

/* Largest E with 10^E <= a (a > 0). */
long decimal_exponent(ExactRadical const& a)
{
    long e = static_cast<long>(std::floor(radical_log(a) / std::log(10.0)));
    auto below = [&](long k) {
        /* 10^k <= a  <=>  10^(k*root) <= radicand */
        return pow_rat(pow10_rat(k), a.root()) <= a.radicand();
    };
    while (!below(e))
        --e;
    while (below(e + 1))
        ++e;
    return e;
}

std::string place_point(std::string digits, long scale)
{
    if (scale <= 0)
        return digits + std::string(static_cast<std::size_t>(-scale), '0');
    auto s = static_cast<std::size_t>(scale);
    if (digits.size() > s)
        return digits.substr(0, digits.size() - s) + "." + digits.substr(digits.size() - s);
    return "0." + std::string(s - digits.size(), '0') + digits;
}

}  // namespace

std::string radical_to_decimal(ExactRadical const& a, int digits)
{
    if (digits < 1)
        throw InvalidArgument("digits must be positive");
    if (a.is_zero())
        return place_point(std::string(static_cast<std::size_t>(digits), '0'), digits - 1);

    long e = decimal_exponent(a);
    long scale = digits - 1 - e;
    /* round half up: floor(x + 1/2) = floor((floor(2x) + 1) / 2) */
    BigRational twice = a.radicand() * pow_rat(BigRational(2), a.root());
    ExactRadical doubled(twice, a.root());
    BigInt n = (radical_floor_scaled(doubled, scale) + 1) / 2;
    if (n == pow_int(10, static_cast<unsigned long>(digits))) {
        n /= 10;
        --scale;
    }
    return place_point(n.get_str(), scale);
}

BigRational radical_round_down(ExactRadical const& a, int digits)
{
    if (a.is_zero())
        return BigRational(0);
    long scale = digits - 1 - decimal_exponent(a);
    BigRational r = BigRational(radical_floor_scaled(a, scale)) * pow10_rat(-scale);
    r.canonicalize();
    return r;
}

BigRational radical_round_up(ExactRadical const& a, int digits)
{
    if (a.is_zero())
        return BigRational(0);
    long scale = digits - 1 - decimal_exponent(a);
    BigInt fl = radical_floor_scaled(a, scale);
    BigRational r = BigRational(fl) * pow10_rat(-scale);
    r.canonicalize();
    if (ExactRadical(r) < a)
        r += pow10_rat(-scale);
    r.canonicalize();
    return r;
}

}  // namespace rankin
