#include "coxlen/parse.hpp"

#include <cctype>
#include <string>

#include "coxlen/errors.hpp"

namespace coxlen {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string_view strip_brackets(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']'))) {
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

long parse_long(std::string_view s) {
  Rational q = parse_rational(trim(s));
  if (!is_integer(q)) throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return to_long(q);
}

}  // namespace

Vector parse_vector(std::string_view text) {
  std::string_view body = strip_brackets(text);
  if (body.empty()) throw ParseError("empty vector");
  Vector v;
  for (auto part : split(body, ',')) {
    if (part.empty()) throw ParseError("empty entry in vector '" + std::string(text) + "'");
    v.push_back(parse_rational(part));
  }
  return v;
}

IntVector parse_int_vector(std::string_view text) {
  IntVector out;
  for (const auto& q : parse_vector(text)) {
    if (!is_integer(q)) throw ParseError("expected integer entries in '" + std::string(text) + "'");
    out.push_back(to_long(q));
  }
  return out;
}

Window parse_window(std::string_view text) {
  Window w{parse_int_vector(text)};
  validate_window(w);
  return w;
}

std::vector<int> parse_word(const RootSystem& rs, std::string_view text) {
  std::vector<int> word;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::string t;
    for (char c : token) {
      if (c != 's' && c != 'S' && c != '_' && c != '{' && c != '}') t += c;
    }
    if (t.empty()) throw ParseError("bad generator '" + token + "'");
    long i = parse_long(t);
    if (i < 1 || i > rs.rank()) {
      throw ParseError("generator s" + std::to_string(i) + " outside 1.." + std::to_string(rs.rank()));
    }
    word.push_back(static_cast<int>(i));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
      flush();
    } else if ((c == 's' || c == 'S') && !token.empty() && token.back() != '_') {
      flush();
      token += c;
    } else {
      token += c;
    }
  }
  flush();
  return word;
}

AffineElement parse_element(const RootSystem& rs, std::string_view text) {
  const std::size_t n = rs.ambient_dim();
  AffineElement result = AffineElement::identity(n);
  for (auto item : split(text, ';')) {
    if (item.empty() || item == "identity" || item == "id") continue;
    AffineElement factor = AffineElement::identity(n);
    auto eq = item.find('=');
    if (eq != std::string_view::npos) {
      std::string_view name = trim(item.substr(0, eq));
      std::string_view value = trim(item.substr(eq + 1));
      if (name == "lambda") {
        Vector v = parse_vector(value);
        if (v.size() != n) {
          throw ParseError("lambda needs " + std::to_string(n) + " coordinates for " + rs.name());
        }
        factor = AffineElement::translation_by(v);
      } else if (name == "coroot") {
        IntVector c = parse_int_vector(value);
        if (c.size() != static_cast<std::size_t>(rs.rank())) {
          throw ParseError("coroot needs " + std::to_string(rs.rank()) + " coordinates for " + rs.name());
        }
        factor = AffineElement::translation_by(rs.from_coroot_coordinates(c));
      } else if (name == "word") {
        factor = AffineElement::linear_only(word_matrix(rs, parse_word(rs, value)));
      } else {
        throw ParseError("unknown element item '" + std::string(name) + "'");
      }
    } else if (item.substr(0, 5) == "refl(" && item.back() == ')') {
      auto args = split(item.substr(5, item.size() - 6), ',');
      if (args.size() != 2) throw ParseError("refl expects two arguments");
      long i = parse_long(args[0]);
      const auto& pos = rs.positive_roots();
      if (i < 1 || static_cast<std::size_t>(i) > pos.size()) {
        throw ParseError("refl index " + std::to_string(i) + " outside 1.." + std::to_string(pos.size()));
      }
      factor = reflection_to_element({rs.root(pos[static_cast<std::size_t>(i - 1)]), parse_long(args[1])});
    } else {
      throw ParseError("cannot parse element item '" + std::string(item) + "'");
    }
    result = result * factor;
  }
  validate_element(rs, result);
  return result;
}

}  // namespace coxlen
