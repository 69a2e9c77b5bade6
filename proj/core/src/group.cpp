#include "weylwalk/group.hpp"

#include "weylwalk/errors.hpp"

namespace weylwalk {

std::string GroupSpec::name() const {
    if (family == Family::A) return "SL(" + std::to_string(rank) + ")";
    return "Sp(" + std::to_string(2 * rank) + ")";
}

GroupSpec parse_group(const std::string& text) {
    auto parse_arg = [&](std::size_t prefix_len) -> unsigned long {
        if (text.back() != ')') throw config_error("bad group spec: " + text);
        const std::string num = text.substr(prefix_len, text.size() - prefix_len - 1);
        try {
            return std::stoul(num);
        } catch (const std::exception&) {
            throw config_error("bad group spec: " + text);
        }
    };
    if (text.rfind("SL(", 0) == 0) {
        const unsigned long m = parse_arg(3);
        require(m >= 2 && m <= 64, "SL(m) requires 2 <= m <= 64");
        return GroupSpec{Family::A, static_cast<unsigned>(m)};
    }
    if (text.rfind("Sp(", 0) == 0) {
        const unsigned long d = parse_arg(3);
        require(d >= 2 && d % 2 == 0 && d <= 128, "Sp(2g) requires even dimension 2 <= 2g <= 128");
        return GroupSpec{Family::C, static_cast<unsigned>(d / 2)};
    }
    throw config_error("unknown group spec: " + text + " (expected SL(m) or Sp(2g))");
}

} // namespace weylwalk
