#ifndef RANKIN_TESTS_ORACLES_HPP_
#define RANKIN_TESTS_ORACLES_HPP_

/* Brute-force references that share no code with the library. */

#include "rankin/codes.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<std::int64_t>;

inline Word reduce(Word w, long q)
{
    for (auto& x : w)
        x = ((x % q) + q) % q;
    return w;
}

/* Span of the generators by closure under addition. */
inline std::set<Word> codewords(long q, long n, rankin::IntMatrix const& generators)
{
    std::set<Word> words{Word(n, 0)};
    std::vector<Word> frontier{Word(n, 0)};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (auto const& w : frontier) {
            for (auto const& g : generators) {
                Word s(n);
                for (long i = 0; i < n; ++i)
                    s[i] = w[i] + g[i];
                s = reduce(s, q);
                if (words.insert(s).second)
                    next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    return words;
}

inline std::vector<Word> all_words(long q, long n)
{
    std::vector<Word> out;
    Word w(n, 0);
    while (true) {
        out.push_back(w);
        long i = n - 1;
        while (i >= 0 && w[i] == q - 1)
            w[i--] = 0;
        if (i < 0)
            break;
        ++w[i];
    }
    return out;
}

/* Every word of Z_q^n orthogonal mod q to all codewords. */
inline std::set<Word> dual_words(long q, long n, std::set<Word> const& code)
{
    std::set<Word> out;
    for (auto const& w : all_words(q, n)) {
        bool ok = true;
        for (auto const& c : code) {
            std::int64_t s = 0;
            for (long i = 0; i < n; ++i)
                s += w[i] * c[i];
            if (s % q != 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.insert(w);
    }
    return out;
}

inline std::int64_t euclidean_weight(Word const& w, long q)
{
    std::int64_t s = 0;
    for (auto a : w)
        s += std::min(a * a, (q - a) * (q - a));
    return s;
}

inline long hamming_weight(Word const& w)
{
    return static_cast<long>(std::count_if(w.begin(), w.end(), [](auto a) { return a != 0; }));
}

/* Minimum Euclidean weight over nonzero codewords; 0 for the zero code. */
inline std::int64_t min_euclidean(std::set<Word> const& code, long q)
{
    std::int64_t best = 0;
    for (auto const& w : code) {
        std::int64_t e = euclidean_weight(w, q);
        if (e > 0 && (best == 0 || e < best))
            best = e;
    }
    return best;
}

inline std::int64_t norm(Word const& v)
{
    std::int64_t s = 0;
    for (auto x : v)
        s += x * x;
    return s;
}

inline std::int64_t inner(Word const& a, Word const& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/* Integer vectors of norm <= bound in Lambda_C, from a box scan. */
inline std::vector<Word> code_lattice_vectors(long q, long n, std::set<Word> const& code, std::int64_t bound)
{
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= bound)
        ++r;
    std::vector<Word> out;
    Word v(n, -r);
    while (true) {
        std::int64_t nv = norm(v);
        if (nv > 0 && nv <= bound && code.count(reduce(v, q)))
            out.push_back(v);
        long i = n - 1;
        while (i >= 0 && v[i] == r)
            v[i--] = -r;
        if (i < 0)
            break;
        ++v[i];
    }
    return out;
}

/* d_2 of Lambda_C given any upper bound U on it. A Lagrange-reduced basis
 * (u, v) of a rank-2 sublattice has N(u) N(v) <= (4/3) det, so both vectors
 * have norm <= (4/3) U / lambda_1^2. */
inline std::int64_t d2(long q, long n, std::set<Word> const& code, std::int64_t upper)
{
    std::int64_t lambda1 = q * q;
    for (auto e = min_euclidean(code, q); e > 0 && e < lambda1;)
        lambda1 = e;
    std::int64_t bound = (4 * upper) / (3 * lambda1);
    auto vecs = code_lattice_vectors(q, n, code, bound);
    std::int64_t best = upper;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            std::int64_t det = norm(vecs[i]) * norm(vecs[j]) - inner(vecs[i], vecs[j]) * inner(vecs[i], vecs[j]);
            if (det > 0 && det < best)
                best = det;
        }
    return best;
}

/* Random generator matrix over Z_q: 1..n rows with entries in [0, q). */
inline rankin::IntMatrix random_generators(std::mt19937_64& rng, long q, long n)
{
    std::uniform_int_distribution<long> rows(1, n), entry(0, q - 1);
    rankin::IntMatrix g(rows(rng), rankin::IntVector(n));
    for (auto& row : g)
        for (auto& x : row)
            x = entry(rng);
    return g;
}

}  // namespace oracle

#endif  /* RANKIN_TESTS_ORACLES_HPP_ */
