#include "altsum/half_int.hpp"

#include <stdexcept>

namespace altsum {

std::optional<HalfInt> HalfInt::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = ExactInt::parse(text);
        if (!n) return std::nullopt;
        return from_integer(*n);
    }
    auto n = ExactInt::parse(text.substr(0, slash));
    auto d = ExactInt::parse(text.substr(slash + 1));
    if (!n || !d || *d != ExactInt(2)) return std::nullopt;
    return from_twice(*n);
}

ExactInt HalfInt::as_integer() const {
    if (!is_integer()) throw std::domain_error("HalfInt::as_integer: " + to_string() + " is a proper half");
    return ExactInt::div_exact(twice_, ExactInt(2));
}

std::string HalfInt::to_string() const {
    if (is_integer()) return as_integer().to_decimal();
    return twice_.to_decimal() + "/2";
}

} // namespace altsum
