#include "finsemi/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "finsemi/errors.hpp"

namespace finsemi {

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') {
      return true;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;  // blank
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) {
    out.push_back(tok);
  }
  return out;
}

element parse_entry(const std::string& tok) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer table entry, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError("expected an integer table entry, got '" + tok + "'");
  }
  return static_cast<element>(value);
}

}  // namespace

FiniteSemigroup parse_table_text(std::istream& in) {
  std::string line;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      if (!is_comment_or_blank(line)) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  if (!next_content_line(header)) {
    throw ParseError("empty input: expected the order on the first line");
  }
  const std::vector<std::string> head_toks = tokens_of(header);
  if (head_toks.size() != 1) {
    throw ParseError("expected a single integer (the order) on the first line");
  }
  const unsigned n = parse_entry(head_toks[0]);
  if (n == 0) {
    throw ParseError("order must be at least 1");
  }

  std::vector<std::vector<element>> rows;
  rows.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    std::string row_line;
    if (!next_content_line(row_line)) {
      throw ParseError("expected " + std::to_string(n) + " table rows, got "
                       + std::to_string(i));
    }
    const std::vector<std::string> toks = tokens_of(row_line);
    std::vector<element> row;
    row.reserve(toks.size());
    for (const std::string& tok : toks) {
      row.push_back(parse_entry(tok));
    }
    rows.push_back(std::move(row));
  }

  std::optional<std::vector<std::string>> names;
  std::string tail;
  while (next_content_line(tail)) {
    std::vector<std::string> toks = tokens_of(tail);
    if (toks.empty()) {
      continue;
    }
    if (toks[0] == "names:") {
      toks.erase(toks.begin());
      names = std::move(toks);
    } else {
      throw ParseError("unexpected trailing line: '" + tail + "'");
    }
  }
  return FiniteSemigroup::from_table(rows, std::move(names));
}

FiniteSemigroup parse_table_text(const std::string& text) {
  std::istringstream is(text);
  return parse_table_text(is);
}

FiniteSemigroup parse_table_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
    throw ParseError("JSON table must be an object with 'order' and 'table'");
  }
  std::vector<std::vector<element>> rows;
  std::optional<std::vector<std::string>> names;
  try {
    rows = j.at("table").get<std::vector<std::vector<element>>>();
    if (j.contains("names") && !j.at("names").is_null()) {
      names = j.at("names").get<std::vector<std::string>>();
    }
    if (j.at("order").get<std::size_t>() != rows.size()) {
      throw ParseError("'order' does not match the number of table rows");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON table: ") + e.what());
  }
  return FiniteSemigroup::from_table(rows, std::move(names));
}

FiniteSemigroup parse_table_json(const std::string& text) {
  std::istringstream is(text);
  return parse_table_json(is);
}

FiniteSemigroup parse_table_auto(std::istream& in) {
  // Peek past leading whitespace to decide the format.
  int c = in.peek();
  while (c != std::char_traits<char>::eof()
         && std::isspace(static_cast<unsigned char>(c))) {
    in.get();
    c = in.peek();
  }
  if (c == '{') {
    return parse_table_json(in);
  }
  return parse_table_text(in);
}

std::string to_table_text(const FiniteSemigroup& S) {
  std::ostringstream os;
  const unsigned n = S.order();
  os << n << "\n";
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (j > 0) {
        os << ' ';
      }
      os << S.product(i, j);
    }
    os << "\n";
  }
  if (S.has_names()) {
    os << "names:";
    for (const std::string& name : *S.names()) {
      os << ' ' << name;
    }
    os << "\n";
  }
  return os.str();
}

std::string to_table_json(const FiniteSemigroup& S) {
  nlohmann::ordered_json j;
  j["order"] = S.order();
  j["table"] = S.table_rows();
  if (S.has_names()) {
    j["names"] = *S.names();
  }
  return j.dump(2) + "\n";
}

}  // namespace finsemi
