#include <bit>

#include "sti/graph.hpp"

namespace sti {
namespace {

constexpr char kBias = 63;

[[noreturn]] void fail(Graph6Error::Kind kind, const std::string& what) {
  throw Graph6Error(kind, "graph6: " + what);
}

int sextet(char c) {
  if (c < 63 || c > 126) {
    fail(Graph6Error::Kind::kCharOutOfRange,
         "character code " + std::to_string(static_cast<unsigned char>(c)) +
             " outside 63..126");
  }
  return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.starts_with(">>sparse6<<") || text.starts_with(":") || text.starts_with(";")) {
    fail(Graph6Error::Kind::kSparse6, "sparse6/incremental input is not supported");
  }
  if (text.empty()) fail(Graph6Error::Kind::kMalformedHeader, "empty line");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 4 && text[1] != '~') {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else if (text.size() >= 8 && text[1] == '~') {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  } else {
    fail(Graph6Error::Kind::kMalformedHeader, "truncated order header");
  }
  if (n < 1 || n > Graph::kMaxOrder) {
    fail(Graph6Error::Kind::kMalformedHeader,
         "order " + std::to_string(n) + " outside [1, 64]");
  }

  const long pairs = n * (n - 1) / 2;
  const auto expected = static_cast<std::size_t>((pairs + 5) / 6);
  const std::string_view body = text.substr(pos);
  if (body.size() != expected) {
    fail(Graph6Error::Kind::kLength, "expected " + std::to_string(expected) +
                                         " data characters, found " +
                                         std::to_string(body.size()));
  }

  std::vector<Row> rows(static_cast<std::size_t>(n), 0);
  long k = 0;
  for (std::size_t c = 0; c < body.size(); ++c) {
    const int bits = sextet(body[c]);
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (bits >> b) & 1;
      if (k >= pairs) {
        if (set) fail(Graph6Error::Kind::kTrailingBits, "nonzero padding bits");
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: k enumerates (0,1),(0,2),(1,2),(0,3),...
      int j = 1;
      while (static_cast<long>(j) * (j + 1) / 2 <= k) ++j;
      const int i = static_cast<int>(k - static_cast<long>(j) * (j - 1) / 2);
      rows[static_cast<std::size_t>(i)] |= bit(j);
      rows[static_cast<std::size_t>(j)] |= bit(i);
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace sti
