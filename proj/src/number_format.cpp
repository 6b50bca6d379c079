#include "citenorm/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace citenorm {

std::string format_roundtrip(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("format_roundtrip: to_chars failed");
    return std::string(buf.data(), end);
}

std::string format_fixed(double value, int digits) {
    if (digits < 0) throw std::invalid_argument("format_fixed: negative digit count");
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";

    std::array<char, 400> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(value), std::chars_format::fixed);
    if (ec != std::errc{}) throw std::runtime_error("format_fixed: to_chars failed");
    std::string text(buf.data(), end);

    auto dot = text.find('.');
    std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac = dot == std::string::npos ? std::string() : text.substr(dot + 1);

    bool round_up = false;
    if (static_cast<int>(frac.size()) > digits) {
        round_up = frac[static_cast<std::size_t>(digits)] >= '5';
        frac.resize(static_cast<std::size_t>(digits));
    }
    frac.append(static_cast<std::size_t>(digits) - frac.size(), '0');

    std::string all = whole + frac;
    if (round_up) {
        int i = static_cast<int>(all.size()) - 1;
        for (; i >= 0; --i) {
            if (all[static_cast<std::size_t>(i)] == '9') {
                all[static_cast<std::size_t>(i)] = '0';
            } else {
                ++all[static_cast<std::size_t>(i)];
                break;
            }
        }
        if (i < 0) all.insert(all.begin(), '1');
    }

    std::string out = all.substr(0, all.size() - static_cast<std::size_t>(digits));
    if (digits > 0) out += "." + all.substr(all.size() - static_cast<std::size_t>(digits));

    bool zero = out.find_first_not_of("0.") == std::string::npos;
    if (std::signbit(value) && !zero) out.insert(out.begin(), '-');
    return out;
}

double round_half_away(double value, int digits) {
    if (!std::isfinite(value)) return value;
    std::string text = format_fixed(value, digits);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

}  // namespace citenorm
