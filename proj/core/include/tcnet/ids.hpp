#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace tcnet {

/// Stable vertex identifier. Ids are allocated monotonically per graph and
/// are never reused after deletion, so reduction traces stay auditable.
struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const VertexId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << v.value;
}

inline std::string to_string(VertexId v) { return std::to_string(v.value); }

/// Undirected edge in canonical form (a <= b).
struct Edge {
  VertexId a;
  VertexId b;

  constexpr Edge() = default;
  constexpr Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}

  constexpr bool has(VertexId v) const { return a == v || b == v; }
  constexpr VertexId other(VertexId v) const { return v == a ? b : a; }

  constexpr auto operator<=>(const Edge&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.a << ',' << e.b << '}';
}

/// Directed arc tail -> head.
struct Arc {
  VertexId tail;
  VertexId head;

  constexpr auto operator<=>(const Arc&) const = default;
  constexpr Edge edge() const { return Edge(tail, head); }
};

inline std::ostream& operator<<(std::ostream& os, const Arc& a) {
  return os << '(' << a.tail << ',' << a.head << ')';
}

}  // namespace tcnet

template <>
struct std::hash<tcnet::VertexId> {
  std::size_t operator()(tcnet::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

template <>
struct std::hash<tcnet::Edge> {
  std::size_t operator()(const tcnet::Edge& e) const noexcept {
    return (static_cast<std::size_t>(e.a.value) << 32) ^ e.b.value;
  }
};
