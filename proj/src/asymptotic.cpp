#include "rankin/asymptotic.hpp"

#include "rankin/errors.hpp"

#include <mpfr.h>

namespace rankin {

namespace {

constexpr mpfr_prec_t kPrecision = 256;

/* RAII wrapper; every operation takes an explicit rounding direction. */
class Real {
public:
    Real() { mpfr_init2(v_, kPrecision); }
    explicit Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(Real const& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(Real const& o)
    {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

Real pi(mpfr_rnd_t rnd)
{
    Real r;
    mpfr_const_pi(r.get(), rnd);
    return r;
}

Real ln2(mpfr_rnd_t rnd)
{
    Real r;
    mpfr_const_log2(r.get(), rnd);
    return r;
}

Real ratio(long a, long b, mpfr_rnd_t rnd)
{
    Real r(a);
    mpfr_div_si(r.get(), r.get(), b, rnd);
    return r;
}

Real exp_of(Real const& x, mpfr_rnd_t rnd)
{
    Real r;
    mpfr_exp(r.get(), x.get(), rnd);
    return r;
}

Real mul(Real const& a, Real const& b, mpfr_rnd_t rnd)
{
    Real r;
    mpfr_mul(r.get(), a.get(), b.get(), rnd);
    return r;
}

Real div(Real const& a, Real const& b, mpfr_rnd_t rnd)
{
    Real r;
    mpfr_div(r.get(), a.get(), b.get(), rnd);
    return r;
}

/* base^e for base > 0 with e in [e_lo, e_hi]; the exponent end is chosen so
 * that the result is rounded in direction rnd. */
Real power(Real const& base, Real const& e_lo, Real const& e_hi, mpfr_rnd_t rnd)
{
    bool up = rnd == MPFR_RNDU;
    bool grows = mpfr_cmp_ui(base.get(), 1) >= 0;
    Real const& e = (up == grows) ? e_hi : e_lo;
    Real r;
    mpfr_pow(r.get(), base.get(), e.get(), rnd);
    return r;
}

Real power(Real const& base, Real const& e, mpfr_rnd_t rnd)
{
    return power(base, e, e, rnd);
}

/* (k/12)^(k/2) */
Real classic_lower(long k)
{
    return power(ratio(k, 12, MPFR_RNDD), ratio(k, 2, MPFR_RNDN), MPFR_RNDD);
}

/* (1 + k/2)^(k ln 2 + 1/2) */
Real classic_upper(long k)
{
    Real base = ratio(k + 2, 2, MPFR_RNDU);
    Real e_lo = ln2(MPFR_RNDD), e_hi = ln2(MPFR_RNDU);
    mpfr_mul_si(e_lo.get(), e_lo.get(), k, MPFR_RNDD);
    mpfr_mul_si(e_hi.get(), e_hi.get(), k, MPFR_RNDU);
    Real half = ratio(1, 2, MPFR_RNDN);
    mpfr_add(e_lo.get(), e_lo.get(), half.get(), MPFR_RNDD);
    mpfr_add(e_hi.get(), e_hi.get(), half.get(), MPFR_RNDU);
    return power(base, e_lo, e_hi, MPFR_RNDU);
}

/* 4/(pi^2 sqrt k) (2k/(pi e^(3/2)))^(k/2) */
Real improved_lower(long k)
{
    Real pi_hi = pi(MPFR_RNDU);
    Real sqrt_k;
    mpfr_sqrt_ui(sqrt_k.get(), static_cast<unsigned long>(k), MPFR_RNDU);
    Real den = mul(mul(pi_hi, pi_hi, MPFR_RNDU), sqrt_k, MPFR_RNDU);
    Real first = div(Real(4), den, MPFR_RNDD);

    Real e32 = exp_of(ratio(3, 2, MPFR_RNDN), MPFR_RNDU);
    Real inner = div(Real(2 * k), mul(pi_hi, e32, MPFR_RNDU), MPFR_RNDD);
    Real second = power(inner, ratio(k, 2, MPFR_RNDN), MPFR_RNDD);
    return mul(first, second, MPFR_RNDD);
}

/* e^9 0.0833^(k/2) ((4k-1)/17)^(k/(4k-2)) (k-1/2)^(k ln 2) */
Real improved_upper(long k)
{
    Real e9 = exp_of(Real(9), MPFR_RNDU);
    Real c = ratio(833, 10000, MPFR_RNDU);
    Real t1 = power(c, ratio(k, 2, MPFR_RNDN), MPFR_RNDU);
    Real b2 = ratio(4 * k - 1, 17, MPFR_RNDU);
    Real t2 = power(b2, ratio(k, 4 * k - 2, MPFR_RNDD), ratio(k, 4 * k - 2, MPFR_RNDU), MPFR_RNDU);
    Real b3 = ratio(2 * k - 1, 2, MPFR_RNDU);
    Real e_lo = ln2(MPFR_RNDD), e_hi = ln2(MPFR_RNDU);
    mpfr_mul_si(e_lo.get(), e_lo.get(), k, MPFR_RNDD);
    mpfr_mul_si(e_hi.get(), e_hi.get(), k, MPFR_RNDU);
    Real t3 = power(b3, e_lo, e_hi, MPFR_RNDU);
    return mul(mul(mul(e9, t1, MPFR_RNDU), t2, MPFR_RNDU), t3, MPFR_RNDU);
}

std::string render(BigInt const& mantissa, long exp10)
{
    std::string digits = mantissa.get_str();
    if (exp10 >= 0)
        return digits + std::string(static_cast<std::size_t>(exp10), '0');
    auto s = static_cast<std::size_t>(-exp10);
    if (digits.size() > s)
        return digits.substr(0, digits.size() - s) + "." + digits.substr(digits.size() - s);
    return "0." + std::string(s - digits.size(), '0') + digits;
}

/* x rounded to `digits` significant decimal digits in direction rnd. */
RoundedBound round_out(std::string label, Real const& x, int digits, mpfr_rnd_t rnd)
{
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x.get(), rnd);
    BigInt mantissa(s);
    mpfr_free_str(s);
    long exp10 = static_cast<long>(e) - digits;
    RoundedBound out;
    out.label = std::move(label);
    if (exp10 >= 0)
        out.value = BigRational(mantissa * pow_int(10, static_cast<unsigned long>(exp10)));
    else
        out.value = BigRational(mantissa, pow_int(10, static_cast<unsigned long>(-exp10)));
    out.value.canonicalize();
    out.decimal = render(mantissa, exp10);
    return out;
}

}  // namespace

AsymptoticInterval asymptotic_gamma_2k_k(long k, int digits)
{
    if (k < 2)
        throw InvalidArgument("bounds on gamma_{2k,k} need k >= 2, got k = " + std::to_string(k));
    if (digits < 1 || digits > 70)
        throw InvalidArgument("digits must lie in [1, 70]");
    AsymptoticInterval out;
    out.k = k;
    out.digits = digits;
    out.classic_lower = round_out("(k/12)^(k/2)", classic_lower(k), digits, MPFR_RNDD);
    out.classic_upper = round_out("(1+k/2)^(k ln2 + 1/2)", classic_upper(k), digits, MPFR_RNDU);
    out.lower = out.classic_lower;
    out.upper = out.classic_upper;
    if (k >= 5) {
        out.improved_lower =
            round_out("4/(pi^2 sqrt(k)) (2k/(pi e^(3/2)))^(k/2)", improved_lower(k), digits, MPFR_RNDD);
        out.improved_upper = round_out("e^9 0.0833^(k/2) ((4k-1)/17)^(k/(4k-2)) (k-1/2)^(k ln2)",
                                       improved_upper(k), digits, MPFR_RNDU);
        if (out.improved_lower->value > out.lower.value)
            out.lower = *out.improved_lower;
        if (out.improved_upper->value < out.upper.value)
            out.upper = *out.improved_upper;
    } else {
        out.notes.push_back("improved bounds need k >= 5; skipped");
    }
    return out;
}

bool contains(AsymptoticInterval const& iv, ExactRadical const& value)
{
    return !(value < ExactRadical(iv.lower.value)) && !(ExactRadical(iv.upper.value) < value);
}

}  // namespace rankin
