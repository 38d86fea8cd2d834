#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pemark/error.hpp"

namespace pemark {

enum class ValueKind { String, Number, Boolean, Null, Object, Array };

/// A JSON value that keeps every scalar as its verbatim source token.
/// Numbers and strings never pass through binary conversion, so
/// re-serializing reproduces the exact bytes: "0.10" stays "0.10".
/// Objects and arrays keep their children in source order.
class RawValue {
public:
  RawValue() : kind_(ValueKind::Null), lexeme_("null") {}

  static RawValue from_token(ValueKind kind, std::string lexeme) {
    RawValue v;
    v.kind_ = kind;
    v.lexeme_ = std::move(lexeme);
    return v;
  }

  static RawValue string(std::string_view text) {
    return from_token(ValueKind::String, encode_string_token(text));
  }

  static RawValue number_token(std::string token);  // validates grammar

  static RawValue number(std::int64_t v) {
    return from_token(ValueKind::Number, std::to_string(v));
  }

  static RawValue boolean(bool v) {
    return from_token(ValueKind::Boolean, v ? "true" : "false");
  }

  static RawValue null() { return from_token(ValueKind::Null, "null"); }

  static RawValue array(std::vector<RawValue> elements) {
    RawValue v;
    v.kind_ = ValueKind::Array;
    v.lexeme_.clear();
    v.children_ = std::move(elements);
    return v;
  }

  static RawValue object() {
    RawValue v;
    v.kind_ = ValueKind::Object;
    v.lexeme_.clear();
    return v;
  }

  ValueKind kind() const { return kind_; }

  /// Verbatim source token. Scalar kinds only.
  const std::string& lexeme() const { return lexeme_; }

  std::size_t size() const { return children_.size(); }

  const RawValue& element(std::size_t i) const { return children_[i]; }

  /// Decoded member key (object kind).
  const std::string& key(std::size_t i) const { return keys_[i]; }

  /// Verbatim member key token including quotes (object kind).
  const std::string& key_lexeme(std::size_t i) const { return key_lexemes_[i]; }

  const RawValue& member(std::size_t i) const { return children_[i]; }

  void add_member(std::string_view key, RawValue value) {
    add_member_raw(std::string(key), encode_string_token(key), std::move(value));
  }

  void add_member_raw(std::string key, std::string key_lexeme, RawValue value) {
    keys_.push_back(std::move(key));
    key_lexemes_.push_back(std::move(key_lexeme));
    children_.push_back(std::move(value));
  }

  void add_element(RawValue value) { children_.push_back(std::move(value)); }

  void serialize_to(std::string& out) const {
    switch (kind_) {
      case ValueKind::Object: {
        out.push_back('{');
        for (std::size_t i = 0; i < children_.size(); ++i) {
          if (i != 0) out.push_back(',');
          out += key_lexemes_[i];
          out.push_back(':');
          children_[i].serialize_to(out);
        }
        out.push_back('}');
        break;
      }
      case ValueKind::Array: {
        out.push_back('[');
        for (std::size_t i = 0; i < children_.size(); ++i) {
          if (i != 0) out.push_back(',');
          children_[i].serialize_to(out);
        }
        out.push_back(']');
        break;
      }
      default:
        out += lexeme_;
    }
  }

  std::string serialized() const {
    std::string out;
    serialize_to(out);
    return out;
  }

  bool operator==(const RawValue& other) const = default;

  /// JSON string token (with quotes) for arbitrary UTF-8 text.
  static std::string encode_string_token(std::string_view text) {
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back('"');
    for (unsigned char c : text) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (c < 0x20) {
            out += "\\u00";
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
          } else {
            out.push_back(static_cast<char>(c));
          }
      }
    }
    out.push_back('"');
    return out;
  }

private:
  ValueKind kind_;
  std::string lexeme_;
  std::vector<std::string> keys_;         // object: decoded keys
  std::vector<std::string> key_lexemes_;  // object: verbatim key tokens
  std::vector<RawValue> children_;        // object members / array elements
};

/// One top-level key-value pair. `key` is the decoded UTF-8 string used
/// for every ordering comparison; `key_lexeme` is the verbatim source
/// token emitted on serialization.
struct Entry {
  std::string key;
  std::string key_lexeme;
  RawValue value;

  static Entry make(std::string_view key, RawValue value) {
    return Entry{std::string(key), RawValue::encode_string_token(key),
                 std::move(value)};
  }

  bool operator==(const Entry& other) const = default;
};

/// A JSON object as an ordered sequence of top-level key-value pairs.
/// Immutable after construction. Top-level keys are unique.
class OrderedDocument {
public:
  OrderedDocument() = default;

  explicit OrderedDocument(std::vector<Entry> entries)
      : entries_(std::move(entries)) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(entries_.size());
    for (const Entry& e : entries_) {
      if (!seen.insert(e.key).second) {
        raise(Errc::DuplicateTopLevelKey, "duplicate top-level key: " + e.key);
      }
    }
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Entry& entry(std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.key);
    return out;
  }

  bool operator==(const OrderedDocument& other) const = default;

private:
  std::vector<Entry> entries_;
};

namespace detail {

inline constexpr std::size_t kMaxParseDepth = 256;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<Entry> parse_top_level() {
    skip_ws();
    if (eof()) fail("empty input");
    if (peek() != '{') {
      // Parse whatever is there; valid non-object JSON gets the
      // dedicated error, anything else a syntax error.
      parse_value(0);
      require_end();
      raise(Errc::TopLevelNotObject, "top-level JSON value is not an object");
    }
    ++pos_;
    std::vector<Entry> entries;
    std::unordered_set<std::string_view> seen;
    skip_ws();
    if (!eof() && peek() == '}') {
      ++pos_;
      require_end();
      return entries;
    }
    for (;;) {
      skip_ws();
      if (eof() || peek() != '"') fail("expected object key");
      auto [key, lexeme] = parse_string_token();
      skip_ws();
      if (eof() || peek() != ':') fail("expected ':' after object key");
      ++pos_;
      skip_ws();
      RawValue value = parse_value(1);
      entries.push_back(Entry{std::move(key), std::move(lexeme), std::move(value)});
      if (!seen.insert(entries.back().key).second) {
        raise(Errc::DuplicateTopLevelKey,
              "duplicate top-level key: " + entries.back().key);
      }
      skip_ws();
      if (eof()) fail("unterminated object");
      char c = peek();
      ++pos_;
      if (c == '}') break;
      if (c != ',') fail("expected ',' or '}' in object");
    }
    require_end();
    return entries;
  }

  std::string parse_number_only() {
    skip_ws();
    std::string tok = parse_number_token();
    require_end();
    return tok;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const char* what) const {
    raise(Errc::MalformedJson,
          "malformed JSON at byte " + std::to_string(pos_) + ": " + what);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void require_end() {
    skip_ws();
    if (!eof()) fail("trailing content after JSON value");
  }

  RawValue parse_value(std::size_t depth) {
    if (depth > kMaxParseDepth) fail("nesting too deep");
    if (eof()) fail("unexpected end of input");
    switch (peek()) {
      case '{': return parse_object(depth);
      case '[': return parse_array(depth);
      case '"': {
        auto [decoded, lexeme] = parse_string_token();
        (void)decoded;
        return RawValue::from_token(ValueKind::String, std::move(lexeme));
      }
      case 't':
        expect_literal("true");
        return RawValue::from_token(ValueKind::Boolean, "true");
      case 'f':
        expect_literal("false");
        return RawValue::from_token(ValueKind::Boolean, "false");
      case 'n':
        expect_literal("null");
        return RawValue::from_token(ValueKind::Null, "null");
      default:
        return RawValue::from_token(ValueKind::Number, parse_number_token());
    }
  }

  RawValue parse_object(std::size_t depth) {
    ++pos_;  // '{'
    RawValue obj = RawValue::object();
    skip_ws();
    if (eof()) fail("unterminated object");
    if (peek() == '}') {
      ++pos_;
      return obj;
    }
    for (;;) {
      skip_ws();
      if (eof() || peek() != '"') fail("expected object key");
      auto [key, lexeme] = parse_string_token();
      skip_ws();
      if (eof() || peek() != ':') fail("expected ':' after object key");
      ++pos_;
      skip_ws();
      RawValue value = parse_value(depth + 1);
      // Nested objects are opaque subtrees: duplicates pass through.
      obj.add_member_raw(std::move(key), std::move(lexeme), std::move(value));
      skip_ws();
      if (eof()) fail("unterminated object");
      char c = peek();
      ++pos_;
      if (c == '}') return obj;
      if (c != ',') fail("expected ',' or '}' in object");
    }
  }

  RawValue parse_array(std::size_t depth) {
    ++pos_;  // '['
    RawValue arr = RawValue::array({});
    skip_ws();
    if (eof()) fail("unterminated array");
    if (peek() == ']') {
      ++pos_;
      return arr;
    }
    for (;;) {
      skip_ws();
      arr.add_element(parse_value(depth + 1));
      skip_ws();
      if (eof()) fail("unterminated array");
      char c = peek();
      ++pos_;
      if (c == ']') return arr;
      if (c != ',') fail("expected ',' or ']' in array");
    }
  }

  // Returns (decoded text, verbatim token including quotes).
  std::pair<std::string, std::string> parse_string_token() {
    std::size_t start = pos_;
    ++pos_;  // opening quote
    std::string decoded;
    for (;;) {
      if (eof()) fail("unterminated string");
      unsigned char c = static_cast<unsigned char>(peek());
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c < 0x20) fail("unescaped control character in string");
      if (c == '\\') {
        ++pos_;
        if (eof()) fail("unterminated escape sequence");
        char esc = peek();
        ++pos_;
        switch (esc) {
          case '"': decoded.push_back('"'); break;
          case '\\': decoded.push_back('\\'); break;
          case '/': decoded.push_back('/'); break;
          case 'b': decoded.push_back('\b'); break;
          case 'f': decoded.push_back('\f'); break;
          case 'n': decoded.push_back('\n'); break;
          case 'r': decoded.push_back('\r'); break;
          case 't': decoded.push_back('\t'); break;
          case 'u': {
            std::uint32_t cp = parse_hex4();
            if (cp >= 0xD800 && cp <= 0xDBFF) {
              if (pos_ + 1 >= text_.size() || text_[pos_] != '\\' ||
                  text_[pos_ + 1] != 'u') {
                fail("lone high surrogate in string");
              }
              pos_ += 2;
              std::uint32_t low = parse_hex4();
              if (low < 0xDC00 || low > 0xDFFF) {
                fail("invalid low surrogate in string");
              }
              cp = 0x10000 + ((cp - 0xD800) << 10) + (low - 0xDC00);
            } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
              fail("lone low surrogate in string");
            }
            append_utf8(decoded, cp);
            break;
          }
          default:
            fail("invalid escape sequence");
        }
      } else {
        decoded.push_back(static_cast<char>(c));
        ++pos_;
      }
    }
    return {std::move(decoded), std::string(text_.substr(start, pos_ - start))};
  }

  std::uint32_t parse_hex4() {
    if (pos_ + 4 > text_.size()) fail("truncated \\u escape");
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) {
      char c = text_[pos_++];
      value <<= 4;
      if (c >= '0' && c <= '9') {
        value |= static_cast<std::uint32_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        value |= static_cast<std::uint32_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        value |= static_cast<std::uint32_t>(c - 'A' + 10);
      } else {
        fail("invalid hex digit in \\u escape");
      }
    }
    return value;
  }

  static void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  // RFC 8259 number grammar: -? int frac? exp?
  std::string parse_number_token() {
    std::size_t start = pos_;
    if (!eof() && peek() == '-') ++pos_;
    if (eof() || !is_digit(peek())) fail("invalid number");
    if (peek() == '0') {
      ++pos_;
    } else {
      while (!eof() && is_digit(peek())) ++pos_;
    }
    if (!eof() && peek() == '.') {
      ++pos_;
      if (eof() || !is_digit(peek())) fail("digits required after decimal point");
      while (!eof() && is_digit(peek())) ++pos_;
    }
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      ++pos_;
      if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
      if (eof() || !is_digit(peek())) fail("digits required in exponent");
      while (!eof() && is_digit(peek())) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  void expect_literal(const char* lit) {
    for (const char* p = lit; *p; ++p) {
      if (eof() || peek() != *p) fail("invalid literal");
      ++pos_;
    }
  }
};

}  // namespace detail

inline RawValue RawValue::number_token(std::string token) {
  detail::Parser p(token);
  std::string validated = p.parse_number_only();
  return from_token(ValueKind::Number, std::move(validated));
}

/// Parses UTF-8 JSON text whose top level is an object. Entries come back
/// in source order with every scalar token preserved verbatim.
inline OrderedDocument parse(std::string_view text) {
  detail::Parser parser(text);
  return OrderedDocument(parser.parse_top_level());
}

/// Emits the document with entries in stored order, scalar tokens
/// byte-identical to the parse input, and no whitespace between tokens.
inline std::string serialize(const OrderedDocument& doc) {
  std::string out;
  out.push_back('{');
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (i != 0) out.push_back(',');
    const Entry& e = doc.entry(i);
    out += e.key_lexeme;
    out.push_back(':');
    e.value.serialize_to(out);
  }
  out.push_back('}');
  return out;
}

/// Rearranges entries: result position i holds entry new_order[i].
inline OrderedDocument reorder(const OrderedDocument& doc,
                               std::span<const std::size_t> new_order) {
  const std::size_t n = doc.size();
  if (new_order.size() != n) {
    raise(Errc::InvalidPermutation, "permutation size does not match entry count");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t idx : new_order) {
    if (idx >= n || seen[idx]) {
      raise(Errc::InvalidPermutation, "indices are not a permutation of 0..N-1");
    }
    seen[idx] = true;
  }
  std::vector<Entry> entries;
  entries.reserve(n);
  for (std::size_t idx : new_order) entries.push_back(doc.entry(idx));
  return OrderedDocument(std::move(entries));
}

}  // namespace pemark
