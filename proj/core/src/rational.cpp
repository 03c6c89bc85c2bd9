#include "floercx/rational.hpp"

#include <cctype>

namespace floercx {

namespace {

bool parse_int(std::string_view s, Int& out) {
    if (s.empty()) return false;
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) return false;
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        Int num, den;
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    }
    size_t dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) return std::nullopt;
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        Int ip = 0;
        if (!head.empty() && !parse_int(head, ip)) return std::nullopt;
        Int fp = 0, scale = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            fp = fp * 10 + (c - '0');
            scale *= 10;
        }
        Rat r = Rat(ip) + Rat(fp, scale);
        return neg ? -r : r;
    }
    Int v;
    if (!parse_int(text, v)) return std::nullopt;
    return Rat(v);
}

std::string rat_str(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string rat_decimal(const Rat& r, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int v = numerator(r) * scale / denominator(r);  // truncates toward zero
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s = v.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

Rat rat_sqrt_lower(const Rat& x) {
    if (x < 0) throw std::domain_error("rat_sqrt_lower: negative argument");
    if (x == 0) return Rat(0);
    const int k = 16;  // extra 2^-32 resolution
    Int num = numerator(x), den = denominator(x);
    Int shifted = num * den << (4 * k);
    Int root = sqrt(shifted);
    return Rat(root, den << (2 * k));
}

}  // namespace floercx
