#ifndef RANKIN_ERRORS_HPP_
#define RANKIN_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankin {

/* Base of every failure raised by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/* Input rows do not span a lattice of the required rank. */
class RankDeficient : public Error {
public:
    RankDeficient(std::size_t rank, std::size_t required)
        : Error("rank deficient: rows have rank " + std::to_string(rank) +
                ", required " + std::to_string(required)),
          rank_(rank), required_(required) {}
    std::size_t rank() const { return rank_; }
    std::size_t required() const { return required_; }

private:
    std::size_t rank_;
    std::size_t required_;
};

class NotAMember : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/* An enumeration (codewords, short vectors, candidates) outgrew its cap. */
class CapExceeded : public Error {
public:
    CapExceeded(std::string const& what, std::uint64_t reached, std::uint64_t cap)
        : Error(what + ": count reached " + std::to_string(reached) +
                " exceeds cap " + std::to_string(cap)),
          reached_(reached), cap_(cap) {}
    std::uint64_t reached() const { return reached_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t reached_;
    std::uint64_t cap_;
};

class NoNonzeroCodeword : public Error {
public:
    NoNonzeroCodeword() : Error("no nonzero codeword") {}
};

class MismatchedCertificate : public Error {
public:
    using Error::Error;
};

class InconsistentBounds : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class Overflow : public Error {
public:
    using Error::Error;
};

}  // namespace rankin

#endif  /* RANKIN_ERRORS_HPP_ */
