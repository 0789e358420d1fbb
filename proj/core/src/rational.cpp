#include "udgsep/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace udgsep {

Rat rat_from_decimal(std::string_view text) {
    // [sign] digits [. digits] [ (e|E) [sign] digits ]
    std::size_t i = 0;
    auto fail = [&]() -> Rat {
        throw std::invalid_argument("not a decimal literal: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();

    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }

    std::string digits;
    long frac_digits = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits.push_back(text[i]);
        ++i;
        any = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits.push_back(text[i]);
            ++frac_digits;
            ++i;
            any = true;
        }
    }
    if (!any) return fail();

    long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) return fail();
        long e = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            e = e * 10 + (text[i] - '0');
            if (e > 1000000) return fail();
            ++i;
        }
        exp10 = eneg ? -e : e;
    }
    if (i != text.size()) return fail();

    mpz_class mant(digits.empty() ? "0" : digits, 10);
    if (neg) mant = -mant;

    long shift = exp10 - frac_digits;
    mpz_class num = mant, den = 1;
    if (shift > 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= p;
    } else if (shift < 0) {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_canonical(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r) {
    mpz_class den = r.get_den();
    // strip factors of 2 and 5; exact decimal iff nothing remains
    mpz_class d = den;
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
        ++fives;
    }
    if (d != 1) return rat_canonical(r);

    unsigned long k = twos > fives ? twos : fives;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    mpz_class scaled = r.get_num() * (scale / den);

    std::string s = scaled.get_str();
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s.erase(s.begin());
    }
    if (k == 0) return (neg ? "-" : "") + s;
    if (s.size() <= k) s.insert(0, k + 1 - s.size(), '0');
    s.insert(s.size() - k, ".");
    // trim trailing zeros of the fraction part, keep at least one digit
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return (neg ? "-" : "") + s;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Rat rat_sqrt_lower(const Rat& r) {
    if (sgn(r) < 0) throw std::invalid_argument("rat_sqrt_lower of negative value");
    if (sgn(r) == 0) return Rat(0);
    // floor(sqrt(r * 4^30)) / 2^30
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class scaled = num;
    mpz_class four30;
    mpz_ui_pow_ui(four30.get_mpz_t(), 4, 30);
    scaled *= four30;
    scaled /= den;  // floor division keeps the bound a lower bound
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class two30;
    mpz_ui_pow_ui(two30.get_mpz_t(), 2, 30);
    Rat out(root, two30);
    out.canonicalize();
    return out;
}

}  // namespace udgsep
