#ifndef RANKIN_EXACT_HPP_
#define RANKIN_EXACT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace rankin {

using BigInt = mpz_class;
using BigRational = mpq_class;

/* A non-negative real of the form radicand^(1/root), radicand rational.
 *
 * Values are kept canonical: the root is the smallest positive integer t
 * such that value^t is rational. Two radicals are therefore equal iff their
 * (radicand, root) pairs are equal. Zero and one are stored with root 1.
 */
class ExactRadical {
public:
    ExactRadical();  // zero
    ExactRadical(BigRational radicand, std::uint64_t root = 1);
    ExactRadical(long value) : ExactRadical(BigRational(value)) {}

    /// Builds numerator/denominator with the given root, e.g. (243, 16, 5).
    static ExactRadical make(BigInt const& num, BigInt const& den, std::uint64_t root = 1);

    BigRational const& radicand() const { return radicand_; }
    std::uint64_t root() const { return root_; }

    bool is_zero() const { return sgn(radicand_) == 0; }
    bool is_rational() const { return root_ == 1; }

    /* "2", "3/2", "(243/16)^(1/5)" */
    std::string to_string() const;
    double to_double() const;

    friend bool operator==(ExactRadical const& a, ExactRadical const& b) {
        return a.root_ == b.root_ && a.radicand_ == b.radicand_;
    }
    friend std::strong_ordering operator<=>(ExactRadical const& a, ExactRadical const& b);

private:
    void canonicalize();

    BigRational radicand_;
    std::uint64_t root_;
};

/* Total order on non-negative radicals; exact, with a floating-point filter
 * that only decides when the logarithms are clearly apart. */
std::strong_ordering radical_compare(ExactRadical const& a, ExactRadical const& b);

/* Natural log in double precision; a must be nonzero. */
double radical_log(ExactRadical const& a);

ExactRadical radical_mul(ExactRadical const& a, ExactRadical const& b);
ExactRadical radical_div(ExactRadical const& a, ExactRadical const& b);

/* a^e for a rational exponent e. Throws InvalidArgument for 0^(negative). */
ExactRadical radical_pow(ExactRadical const& a, BigRational const& e);
ExactRadical radical_pow(ExactRadical const& a, long num, long den = 1);

inline ExactRadical operator*(ExactRadical const& a, ExactRadical const& b) { return radical_mul(a, b); }
inline ExactRadical operator/(ExactRadical const& a, ExactRadical const& b) { return radical_div(a, b); }

/* Correctly rounded (half up) decimal rendering with `digits` significant
 * digits, computed with integer root extraction only. */
std::string radical_to_decimal(ExactRadical const& a, int digits);

/* floor(a * 10^scale), scale may be negative. */
BigInt radical_floor_scaled(ExactRadical const& a, long scale);

/* Rational bounds lo <= a <= hi with `digits` significant digits. */
BigRational radical_round_down(ExactRadical const& a, int digits);
BigRational radical_round_up(ExactRadical const& a, int digits);

/* Integer helpers shared by other modules. */
BigInt pow_int(BigInt const& base, unsigned long e);
BigRational pow_rat(BigRational const& base, unsigned long e);
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace rankin

#endif  /* RANKIN_EXACT_HPP_ */
