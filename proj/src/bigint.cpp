#include "kron/bigint.hpp"

#include <stdexcept>

namespace kron {

std::string sci_string_ceil(const BigInt& value, int digits) {
    if (digits < 1) digits = 1;
    if (value == 0) return "0";
    const bool neg = value < 0;
    BigInt v = abs(value);
    std::string dec = v.get_str();
    const int exp10 = static_cast<int>(dec.size()) - 1;
    if (static_cast<int>(dec.size()) <= digits) {
        std::string mant = dec;
        mant.insert(1, ".");
        while (static_cast<int>(mant.size()) < digits + 1) mant += "0";
        if (mant.back() == '.') mant.pop_back();
        return (neg ? "-" : "") + mant + "e" + std::to_string(exp10);
    }
    // Round the leading `digits` digits up if any dropped digit is nonzero.
    std::string head = dec.substr(0, static_cast<std::size_t>(digits));
    bool dropped_nonzero = dec.find_first_not_of('0', static_cast<std::size_t>(digits)) != std::string::npos;
    BigInt mant(head, 10);
    if (dropped_nonzero && !neg) mant += 1;  // ceiling for positive values
    int e = exp10;
    std::string mstr = mant.get_str();
    if (static_cast<int>(mstr.size()) > digits) {  // 999 -> 1000 carry
        mstr = mstr.substr(0, static_cast<std::size_t>(digits));
        ++e;
    }
    std::string out = mstr.substr(0, 1);
    if (digits > 1) out += "." + mstr.substr(1);
    return (neg ? "-" : "") + out + "e" + std::to_string(e);
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(text, 10);
}

}  // namespace kron
