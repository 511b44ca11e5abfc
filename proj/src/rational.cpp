#include "ctl/rational.hpp"

#include <cctype>

namespace ctl {

std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto digits_ok = [](const std::string& part, bool sign_ok) {
        if (part.empty()) return false;
        size_t i = 0;
        if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ctl
