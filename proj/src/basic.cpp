#include "gradus/basic.hpp"

#include <sstream>

namespace gradus {

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in rational: " + text);
        return Rat(num) / Rat(den);
    } catch (const std::runtime_error& e) {
        throw InputError("cannot parse rational '" + text + "': " + e.what());
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Int rat_floor(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = num / den;  // truncation toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

}  // namespace gradus
