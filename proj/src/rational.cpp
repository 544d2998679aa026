#include "qhelly/rational.hpp"

#include <stdexcept>

namespace qhelly {

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        if (text.find('/') != std::string::npos) {
            throw std::invalid_argument("rational literal mixes '.' and '/': " + text);
        }
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || digits.empty()) {
            throw std::invalid_argument("malformed decimal literal: " + text);
        }
        Integer num;
        if (num.set_str(digits, 10) != 0) {
            throw std::invalid_argument("malformed decimal literal: " + text);
        }
        Integer den(1);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

double to_double(const Rational& q) {
    return q.get_d();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Integer floor_int(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

Integer ceil_int(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

}  // namespace qhelly
