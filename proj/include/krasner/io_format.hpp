#ifndef KRASNER_IO_FORMAT_HPP
#define KRASNER_IO_FORMAT_HPP

// Hyperfield documents (versioned JSON) and grid rendering.
//
// Document schema, keys in this order:
//   version   int, currently 1
//   order     int n
//   labels    optional array of n strings
//   mul       n arrays of n ints
//   hyperadd  n arrays of n arrays of ints (sorted, nonempty)
//   metadata  optional string

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "krasner/core.hpp"
#include "krasner/element_set.hpp"
#include "krasner/error.hpp"

namespace krasner {

inline constexpr int kDocumentVersion = 1;

struct HyperfieldDocument {
  int version = kDocumentVersion;
  int order = 0;
  std::optional<std::vector<std::string>> labels;
  std::vector<std::vector<int>> mul;
  std::vector<std::vector<std::vector<int>>> hyperadd;
  std::optional<std::string> metadata;

  friend bool operator==(const HyperfieldDocument&, const HyperfieldDocument&) = default;
};

/// Malformed text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail)
      : Error(ErrorKind::parse, "parse error at line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + detail),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class ValidationCode {
  schema,         // missing key, wrong type, unknown key, bad version
  dimensions,     // order out of range or arrays not n / n x n
  index_range,    // entry outside 0..n-1
  empty_cell,     // hyperadd cell []
  unsorted_cell,  // hyperadd cell not strictly ascending
  zero_one,       // identities present at the wrong index
};

constexpr std::string_view to_string(ValidationCode code) noexcept {
  switch (code) {
    case ValidationCode::schema: return "schema";
    case ValidationCode::dimensions: return "dimensions";
    case ValidationCode::index_range: return "index-range";
    case ValidationCode::empty_cell: return "empty-cell";
    case ValidationCode::unsorted_cell: return "unsorted-cell";
    case ValidationCode::zero_one: return "zero-one";
  }
  return "unknown";
}

class ValidationError : public Error {
 public:
  ValidationError(ValidationCode code, const std::string& detail)
      : Error(ErrorKind::validation, std::string(to_string(code)) + ": " + detail), code_(code) {}

  ValidationCode code() const noexcept { return code_; }

 private:
  ValidationCode code_;
};

/// 0, 1, a, b, c, ... up to 27 elements; beyond that 0, 1, e2, e3, ...
inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    if (i < 2) {
      out.push_back(std::to_string(i));
    } else if (n <= 27) {
      out.emplace_back(1, static_cast<char>('a' + (i - 2)));
    } else {
      out.push_back("e" + std::to_string(i));
    }
  }
  return out;
}

inline HyperfieldDocument to_document(const HyperfieldCandidate& c,
                                      std::optional<std::vector<std::string>> labels = std::nullopt,
                                      std::optional<std::string> metadata = std::nullopt) {
  const int n = c.order();
  if (labels && static_cast<int>(labels->size()) != n) {
    throw Error(ErrorKind::domain, "label count does not match order");
  }
  HyperfieldDocument doc;
  doc.order = n;
  doc.labels = std::move(labels);
  doc.metadata = std::move(metadata);
  doc.mul.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  doc.hyperadd.assign(static_cast<std::size_t>(n),
                      std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      doc.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c.product(a, b);
      doc.hyperadd[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c.sum(a, b).members();
    }
  }
  return doc;
}

/// The candidate a validated document describes.
inline HyperfieldCandidate to_candidate(const HyperfieldDocument& doc) {
  const int n = doc.order;
  HyperfieldCandidate c(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ElementSet cell;
      for (int m : doc.hyperadd[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) cell.insert(m);
      c.set_sum(a, b, cell);
      c.set_product(a, b, doc.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    }
  }
  return c;
}

/// Byte-stable rendering: one mul row and one hyperadd row per line.
inline std::string render_document(const HyperfieldDocument& doc) {
  auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
  auto ints = [](const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) out += ", ";
      out += std::to_string(v[i]);
    }
    return out + "]";
  };

  std::string out = "{\n";
  out += "  \"version\": " + std::to_string(doc.version) + ",\n";
  out += "  \"order\": " + std::to_string(doc.order) + ",\n";
  if (doc.labels) {
    out += "  \"labels\": [";
    for (std::size_t i = 0; i < doc.labels->size(); ++i) {
      if (i != 0) out += ", ";
      out += quote((*doc.labels)[i]);
    }
    out += "],\n";
  }
  out += "  \"mul\": [\n";
  for (std::size_t r = 0; r < doc.mul.size(); ++r) {
    out += "    " + ints(doc.mul[r]) + (r + 1 < doc.mul.size() ? ",\n" : "\n");
  }
  out += "  ],\n";
  out += "  \"hyperadd\": [\n";
  for (std::size_t r = 0; r < doc.hyperadd.size(); ++r) {
    out += "    [";
    for (std::size_t c = 0; c < doc.hyperadd[r].size(); ++c) {
      if (c != 0) out += ", ";
      out += ints(doc.hyperadd[r][c]);
    }
    out += r + 1 < doc.hyperadd.size() ? "],\n" : "]\n";
  }
  out += "  ]";
  if (doc.metadata) out += ",\n  \"metadata\": " + quote(*doc.metadata);
  out += "\n}\n";
  return out;
}

inline std::string render_document(const HyperfieldCandidate& c,
                                   std::optional<std::vector<std::string>> labels = std::nullopt,
                                   std::optional<std::string> metadata = std::nullopt) {
  return render_document(to_document(c, std::move(labels), std::move(metadata)));
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline std::string cell_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

inline int as_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ValidationError(ValidationCode::schema, where + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) throw ValidationError(ValidationCode::index_range, where + " out of range");
  return static_cast<int>(v);
}

inline const nlohmann::json& as_array(const nlohmann::json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw ValidationError(ValidationCode::schema, where + " must be an array");
  if (j.size() != size) {
    throw ValidationError(ValidationCode::dimensions,
                          where + " must have " + std::to_string(size) + " entries");
  }
  return j;
}

}  // namespace detail

/// Parses and structurally validates a document. Axioms are not checked.
inline HyperfieldDocument parse_document(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // The reported byte is one past the offending character.
    const auto [line, column] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, e.what());
  }
  if (!root.is_object()) throw ValidationError(ValidationCode::schema, "document must be an object");
  for (const auto& [key, value] : root.items()) {
    static const std::vector<std::string> known = {"version", "order", "labels", "mul", "hyperadd", "metadata"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ValidationError(ValidationCode::schema, "unknown key \"" + key + "\"");
    }
  }
  for (const char* key : {"version", "order", "mul", "hyperadd"}) {
    if (!root.contains(key)) throw ValidationError(ValidationCode::schema, std::string("missing key \"") + key + "\"");
  }

  HyperfieldDocument doc;
  doc.version = detail::as_int(root["version"], "version");
  if (doc.version != kDocumentVersion) {
    throw ValidationError(ValidationCode::schema, "unsupported version " + std::to_string(doc.version));
  }
  doc.order = detail::as_int(root["order"], "order");
  if (doc.order < 2 || doc.order > kMaxOrder) {
    throw ValidationError(ValidationCode::dimensions, "order must be in 2.." + std::to_string(kMaxOrder));
  }
  const auto n = static_cast<std::size_t>(doc.order);

  if (root.contains("labels")) {
    const auto& labels = detail::as_array(root["labels"], n, "labels");
    doc.labels.emplace();
    for (const auto& l : labels) {
      if (!l.is_string()) throw ValidationError(ValidationCode::schema, "labels must be strings");
      doc.labels->push_back(l.get<std::string>());
    }
  }
  if (root.contains("metadata")) {
    if (!root["metadata"].is_string()) throw ValidationError(ValidationCode::schema, "metadata must be a string");
    doc.metadata = root["metadata"].get<std::string>();
  }

  const auto& mul = detail::as_array(root["mul"], n, "mul");
  const auto& hyperadd = detail::as_array(root["hyperadd"], n, "hyperadd");
  doc.mul.resize(n);
  doc.hyperadd.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& mrow = detail::as_array(mul[a], n, "mul row " + std::to_string(a));
    const auto& hrow = detail::as_array(hyperadd[a], n, "hyperadd row " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      const auto at = detail::cell_name(a, b);
      const int p = detail::as_int(mrow[b], "mul" + at);
      if (p < 0 || p >= doc.order) throw ValidationError(ValidationCode::index_range, "mul entry out of range at " + at);
      doc.mul[a].push_back(p);

      const auto& cell = hrow[b];
      if (!cell.is_array()) throw ValidationError(ValidationCode::schema, "hyperadd cell at " + at + " must be an array");
      std::vector<int> members;
      for (const auto& m : cell) {
        const int v = detail::as_int(m, "hyperadd" + at);
        if (v < 0 || v >= doc.order) {
          throw ValidationError(ValidationCode::index_range, "hyperadd entry out of range at " + at);
        }
        members.push_back(v);
      }
      if (members.empty()) throw ValidationError(ValidationCode::empty_cell, "empty cell at " + at);
      if (std::adjacent_find(members.begin(), members.end(), std::greater_equal<>()) != members.end()) {
        throw ValidationError(ValidationCode::unsorted_cell, "cell at " + at + " is not strictly ascending");
      }
      doc.hyperadd[a].push_back(std::move(members));
    }
  }

  // Zero must sit at index 0 and one at index 1; the file is rejected, not
  // relabeled, when the identities live elsewhere.
  auto zero_like = [&](std::size_t i) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::vector<int> single{static_cast<int>(x)};
      if (doc.hyperadd[i][x] != single || doc.hyperadd[x][i] != single) return false;
    }
    return true;
  };
  auto one_like = [&](std::size_t i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (doc.mul[i][x] != static_cast<int>(x) || doc.mul[x][i] != static_cast<int>(x)) return false;
    }
    return true;
  };
  if (!zero_like(0)) {
    for (std::size_t i = 1; i < n; ++i) {
      if (zero_like(i)) throw ValidationError(ValidationCode::zero_one, "zero found at index " + std::to_string(i));
    }
  }
  if (!one_like(1)) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != 1 && one_like(i)) throw ValidationError(ValidationCode::zero_one, "one found at index " + std::to_string(i));
    }
  }
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::domain, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::domain, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::domain, "cannot write " + path);
}

namespace detail {

// Display width in code points; labels may be UTF-8.
inline std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
}

inline std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

inline std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

inline std::string grid(const std::string& op, const std::vector<std::string>& labels,
                        const std::vector<std::vector<std::string>>& cells) {
  std::size_t head = display_width(op);
  for (const auto& l : labels) head = std::max(head, display_width(l));
  std::size_t width = 0;
  for (const auto& l : labels) width = std::max(width, display_width(l));
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, display_width(c));

  std::string out;
  std::string line = pad(op, head);
  for (const auto& l : labels) line += " | " + pad(l, width);
  out += rstrip(line) + "\n";
  line = std::string(head, '-');
  for (std::size_t i = 0; i < labels.size(); ++i) line += "-+-" + std::string(width, '-');
  out += line + "\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    line = pad(labels[r], head);
    for (const auto& c : cells[r]) line += " | " + pad(c, width);
    out += rstrip(line) + "\n";
  }
  return out;
}

}  // namespace detail

/// The hyperaddition grid, a blank line, then the multiplication grid.
inline std::string pretty_table(const HyperfieldCandidate& c,
                                std::optional<std::vector<std::string>> labels = std::nullopt) {
  const int n = c.order();
  if (!labels) labels = default_labels(n);
  if (static_cast<int>(labels->size()) != n) throw Error(ErrorKind::domain, "label count does not match order");
  const auto& names = *labels;

  std::vector<std::vector<std::string>> sums(static_cast<std::size_t>(n));
  std::vector<std::vector<std::string>> products(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::string cell = "{";
      bool first = true;
      c.sum(a, b).for_each([&](int m) {
        if (!first) cell += ',';
        cell += names[static_cast<std::size_t>(m)];
        first = false;
      });
      sums[static_cast<std::size_t>(a)].push_back(cell + "}");
      products[static_cast<std::size_t>(a)].push_back(names[static_cast<std::size_t>(c.product(a, b))]);
    }
  }
  return detail::grid("⊕", names, sums) + "\n" + detail::grid("·", names, products);
}

}  // namespace krasner

#endif  // KRASNER_IO_FORMAT_HPP
