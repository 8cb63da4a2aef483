#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace isocover {

/// Structured vertex name recording construction provenance.
///
///   Original(id)          a vertex of the source graph ("v<id>")
///   Subdiv(u, v, index)   the index-th internal vertex on the path replacing
///                         source edge uv, counted from u ("s<u>_<v>.<index>")
///   Apex(i)               an added apex vertex ("a<i>")
///
/// The defaulted ordering (kind, then fields) is the canonical vertex order
/// used for graph6 output and for every serialized certificate.
class VertexLabel {
public:
    enum class Kind : std::uint8_t { Original = 0, Subdiv = 1, Apex = 2 };

    constexpr VertexLabel() = default;

    static constexpr VertexLabel original(std::int64_t id) { return {Kind::Original, id, 0, 0}; }
    static constexpr VertexLabel subdiv(std::int64_t u, std::int64_t v, std::int64_t index) {
        return {Kind::Subdiv, u, v, index};
    }
    static constexpr VertexLabel apex(std::int64_t i) { return {Kind::Apex, i, 0, 0}; }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_original() const { return kind_ == Kind::Original; }
    constexpr bool is_subdiv() const { return kind_ == Kind::Subdiv; }
    constexpr bool is_apex() const { return kind_ == Kind::Apex; }

    /// Original id, or apex index.
    constexpr std::int64_t id() const { return a_; }
    /// Source edge endpoints and position of a subdivision vertex.
    constexpr std::int64_t edge_u() const { return a_; }
    constexpr std::int64_t edge_v() const { return b_; }
    constexpr std::int64_t index() const { return c_; }

    std::string str() const;
    /// Inverse of str(); throws InputError on malformed text.
    static VertexLabel parse(std::string_view text);

    friend constexpr auto operator<=>(const VertexLabel&, const VertexLabel&) = default;

private:
    constexpr VertexLabel(Kind k, std::int64_t a, std::int64_t b, std::int64_t c)
        : kind_(k), a_(a), b_(b), c_(c) {}

    Kind kind_ = Kind::Original;
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    std::int64_t c_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const VertexLabel& v) { return os << v.str(); }

} // namespace isocover

template <>
struct std::hash<isocover::VertexLabel> {
    std::size_t operator()(const isocover::VertexLabel& v) const noexcept {
        std::size_t h = static_cast<std::size_t>(v.kind());
        for (std::int64_t x : {v.edge_u(), v.edge_v(), v.index()})
            h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
        return h;
    }
};
