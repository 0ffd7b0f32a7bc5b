#include "torsion/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace torsion {

std::string rat_str(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += '/';
        s += std::to_string(r.denominator());
    }
    return s;
}

namespace {

long long parse_ll(std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer in rational: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rat parse_rat(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_ll(s));
    long long num = parse_ll(s.substr(0, slash));
    long long den = parse_ll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(s) + "'");
    return Rat(num, den);
}

}  // namespace torsion
