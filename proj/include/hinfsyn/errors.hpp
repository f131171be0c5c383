#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hinfsyn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation landed on (or numerically indistinguishable from) a pole.
class PoleHit : public Error {
public:
    explicit PoleHit(std::complex<double> s)
        : Error("denominator vanishes at s = (" + std::to_string(s.real()) + ", " +
                std::to_string(s.imag()) + "j)"),
          at(s) {}
    std::complex<double> at;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

// gamma outside the interval where all three radicands are positive.
class OutOfInterval : public Error {
public:
    using Error::Error;
};

class NoSingularGamma : public Error {
public:
    using Error::Error;
};

class RepeatedZeros : public Error {
public:
    using Error::Error;
};

class DegenerateM : public Error {
public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class DegenerateL : public Error {
public:
    using Error::Error;
};

class RepeatedDenominatorRoots : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace hinfsyn
