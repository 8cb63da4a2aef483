#include "isocover/vertex_label.hpp"

#include <charconv>

#include "isocover/errors.hpp"

namespace isocover {

std::string VertexLabel::str() const {
    switch (kind_) {
    case Kind::Original:
        return "v" + std::to_string(a_);
    case Kind::Subdiv:
        return "s" + std::to_string(a_) + "_" + std::to_string(b_) + "." + std::to_string(c_);
    case Kind::Apex:
        return "a" + std::to_string(a_);
    }
    return {};
}

namespace {

// Parses a signed integer occupying all of `text`.
std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw InputError("malformed vertex label '" + std::string(whole) + "'");
    return value;
}

} // namespace

VertexLabel VertexLabel::parse(std::string_view text) {
    if (text.size() < 2)
        throw InputError("malformed vertex label '" + std::string(text) + "'");
    std::string_view body = text.substr(1);
    switch (text.front()) {
    case 'v':
        return original(parse_int(body, text));
    case 'a':
        return apex(parse_int(body, text));
    case 's': {
        auto us = body.find('_');
        auto dot = body.find('.', us == std::string_view::npos ? 0 : us);
        if (us == std::string_view::npos || dot == std::string_view::npos)
            throw InputError("malformed vertex label '" + std::string(text) + "'");
        auto u = parse_int(body.substr(0, us), text);
        auto v = parse_int(body.substr(us + 1, dot - us - 1), text);
        auto k = parse_int(body.substr(dot + 1), text);
        if (k < 1)
            throw InputError("subdivision index must be positive in '" + std::string(text) + "'");
        return subdiv(u, v, k);
    }
    default:
        throw InputError("malformed vertex label '" + std::string(text) + "'");
    }
}

} // namespace isocover
