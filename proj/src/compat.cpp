#include "subnum/compat.hpp"

#include "subnum/error.hpp"

namespace subnum {

const Position& FibSequence::at(std::size_t i) {
    while (memo_.size() <= i) memo_.push_back(memo_[memo_.size() - 1] + memo_[memo_.size() - 2]);
    return memo_[i];
}

namespace {

void check_binary(const DigitWord& w) {
    if (w.empty()) throw Error("empty word");
    for (std::uint32_t d : w)
        if (d > 1) throw Error("digit " + std::to_string(d) + " is not binary");
}

// Greedy Zeckendorf digits of t >= 0 over F_0=1, F_1=2, ..., highest
// weight first; empty for t = 0. Greedy leaves no two adjacent 1s.
std::vector<std::uint32_t> zeckendorf_digits(Position t, FibSequence& fib) {
    if (t == 0) return {};
    std::size_t top = 0;
    while (fib.at(top + 1) <= t) ++top;
    std::vector<std::uint32_t> out(top + 1, 0);
    for (std::size_t i = top + 1; i-- > 0;) {
        if (fib.at(i) <= t) {
            out[top - i] = 1;
            t -= fib.at(i);
        }
    }
    return out;
}

}  // namespace

Position val_twos_complement(const DigitWord& w) {
    check_binary(w);
    Position acc = 0;
    for (std::uint32_t d : w) {
        acc <<= 1;
        acc += d;
    }
    if (w[0] == 1) {
        Position top = 1;
        top <<= static_cast<unsigned long>(w.size());
        acc -= top;
    }
    return acc;
}

DigitWord rep_twos_complement(const Position& n) {
    if (n == 0) return DigitWord{0};
    if (n == -1) return DigitWord{1};
    DigitWord out;
    if (n > 0) {
        out.push_back(0);
        const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;)
            out.push_back(mpz_tstbit(n.get_mpz_t(), i));
        return out;
    }
    // least k with 2^{k-2} < -n <= 2^{k-1}; then n + 2^{k-1} fits k-1 digits
    // and the sign digit is not repeated
    Position m1 = -n - 1;  // >= 1 here
    const std::size_t k = mpz_sizeinbase(m1.get_mpz_t(), 2) + 1;
    Position rest = n;
    Position top = 1;
    top <<= static_cast<unsigned long>(k - 1);
    rest += top;
    out.push_back(1);
    for (std::size_t i = k - 1; i-- > 0;)
        out.push_back(mpz_tstbit(rest.get_mpz_t(), i));
    return out;
}

Position val_fib_complement(const DigitWord& w) {
    check_binary(w);
    FibSequence fib;
    Position acc = 0;
    const std::size_t k = w.size();
    for (std::size_t i = 0; i < k; ++i)
        if (w[k - 1 - i] == 1) acc += fib.at(i);
    if (w[0] == 1) acc -= fib.at(k);
    return acc;
}

DigitWord rep_fib_complement(const Position& n) {
    if (n == 0) return DigitWord{0};
    if (n == -1) return DigitWord{1};
    FibSequence fib;
    if (n > 0) {
        std::vector<std::uint32_t> z = zeckendorf_digits(n, fib);
        DigitWord out{0};
        if (z.size() % 2 != 0) out.push_back(0);  // digit block length must be even
        for (std::uint32_t d : z) out.push_back(d);
        return out;
    }
    // least even k with -n <= F_{k-1}; minimality keeps the digit block
    // below the forbidden prefixes (it then starts 00)
    std::size_t k = 2;
    while (fib.at(k - 1) < -n) k += 2;
    Position t = n + fib.at(k - 1);
    std::vector<std::uint32_t> z = zeckendorf_digits(t, fib);
    DigitWord out{1};
    for (std::size_t i = z.size(); i < k; ++i) out.push_back(0);
    for (std::uint32_t d : z) out.push_back(d);
    return out;
}

}  // namespace subnum
