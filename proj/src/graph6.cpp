#include "spectra/graph6.hpp"

#include <cstdint>
#include <vector>

namespace spectra {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Graph6Error("unexpected end of input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kMaxByte) {
    throw Graph6Error("character " + std::to_string(c) + " outside [63,126]", pos);
  }
  return c - kBias;
}

void append_size(std::string& out, std::uint64_t n) {
  auto push_bits = [&](int groups) {
    for (int k = groups - 1; k >= 0; --k) {
      out.push_back(static_cast<char>(((n >> (6 * k)) & 0x3f) + kBias));
    }
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    push_bits(3);
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(kMaxByte));
    push_bits(6);
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  std::uint64_t n = 0;
  const int first = sextet(text, 0);
  if (first != 63) {
    n = static_cast<std::uint64_t>(first);
    pos = 1;
  } else {
    // 126 126 prefix selects the 36-bit size form, a single 126 the 18-bit form.
    const bool wide = text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxByte;
    pos = wide ? 2 : 1;
    const int groups = wide ? 6 : 3;
    for (int k = 0; k < groups; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
  }

  const std::size_t body_start = pos;
  const std::size_t body_len = text.size() - body_start;
  if (n >= (std::uint64_t{1} << 32)) {
    throw Graph6Error("wrong body length for n=" + std::to_string(n), text.size());
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (body_len != expected) {
    throw Graph6Error("wrong body length for n=" + std::to_string(n) + ": expected " +
                          std::to_string(expected) + " bytes, found " +
                          std::to_string(body_len),
                      body_len < expected ? text.size() : body_start + expected);
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  // Column-major upper triangle: column col holds rows 0..col-1.
  std::uint64_t bit = 0;
  std::uint64_t row = 0;
  std::uint64_t col = 1;
  for (std::size_t i = 0; i < body_len; ++i) {
    const int value = sextet(text, body_start + i);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = ((value >> k) & 1) != 0;
      if (bit >= bits) {
        if (set) throw Graph6Error("nonzero padding bits", body_start + i);
        continue;
      }
      if (set) pairs.emplace_back(static_cast<Vertex>(row), static_cast<Vertex>(col));
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  append_size(out, n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> body((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::uint64_t j = e.v;
    const std::uint64_t bit = j * (j - 1) / 2 + e.u;
    body[bit / 6] |= static_cast<std::uint8_t>(1u << (5 - bit % 6));
  }
  for (std::uint8_t b : body) out.push_back(static_cast<char>(b + kBias));
  return out;
}

}  // namespace spectra
