#include "gcurv/rational.hpp"

#include "gcurv/errors.hpp"

namespace gcurv {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            Rat num(text.substr(0, slash));
            Rat den(text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
            return num / den;
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            int frac_len = static_cast<int>(text.size() - dot - 1);
            Rat scale = 1;
            for (int i = 0; i < frac_len; ++i) scale *= 10;
            return Rat(digits) / scale;
        }
        return Rat(text);
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("cannot parse rational \"" + text + "\"");
    }
}

}  // namespace gcurv
