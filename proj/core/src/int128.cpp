#include "rleacs/int128.hpp"

#include <algorithm>

namespace rleacs {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 gcd(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational Rational::reduced() const {
    if (num == 0) return {0, 1};
    const u128 g = gcd(num, den);
    return {num / g, den / g};
}

double Rational::to_double() const {
    const auto r = reduced();
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

std::string Rational::str() const { return to_string(num) + "/" + to_string(den); }

}  // namespace rleacs
