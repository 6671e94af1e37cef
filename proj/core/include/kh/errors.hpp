#pragma once

#include <stdexcept>
#include <string>

namespace kh {

// Bad braid-word input (zero letter, index out of range, unparsable token).
class malformed_word_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter outside an operation's domain (w_word with i == j, non-prime
// modulus, strand mismatch in concat, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Memory budget exhausted. Carries the bigrading whose allocation failed
// when that is known.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, int a, int b, bool has_grading)
        : std::runtime_error(what), a_(a), b_(b), has_grading_(has_grading) {}
    explicit budget_error(const std::string& what) : budget_error(what, 0, 0, false) {}

    bool has_grading() const { return has_grading_; }
    int grading_a() const { return a_; }
    int grading_b() const { return b_; }

private:
    int a_ = 0;
    int b_ = 0;
    bool has_grading_ = false;
};

// A structural invariant failed (d^2 != 0, grading parity violation).
// Signals a construction bug, not bad user input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kh
