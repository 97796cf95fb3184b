#include "gstar/rational.hpp"

#include <cctype>

namespace gstar {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);

    std::size_t start = (num[0] == '-' || num[0] == '+') ? 1 : 0;
    if (!all_digits(num, start, num.size())) return std::nullopt;
    if (!all_digits(den, 0, den.size())) return std::nullopt;

    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    Rational q;
    q = Rational(n, d);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t hash_rational(const Rational& q, std::size_t seed) {
    auto mix = [&seed](std::size_t v) {
        seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    };
    const mpz_srcptr n = q.get_num().get_mpz_t();
    const mpz_srcptr d = q.get_den().get_mpz_t();
    mix(static_cast<std::size_t>(mpz_sgn(n)) + 3);
    mix(mpz_size(n));
    if (mpz_size(n) > 0) mix(static_cast<std::size_t>(mpz_getlimbn(n, 0)));
    mix(mpz_size(d));
    if (mpz_size(d) > 0) mix(static_cast<std::size_t>(mpz_getlimbn(d, 0)));
    return seed;
}

} // namespace gstar
