#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scx/error.hpp"

namespace scx {
namespace json {

/// Parsed node of the document syntax: objects, arrays, strings and
/// arbitrary-precision integers. No floats, booleans or nulls — every number
/// in a complex document is a rational literal, written either as an integer
/// token or as a "p/q" string. Each node remembers where it started.
struct Value {
    enum class Kind { Object, Array, String, Integer };
    Kind kind = Kind::Object;
    std::size_t line = 1;
    std::size_t column = 1;
    std::string text;  // String contents or Integer lexeme
    std::vector<std::pair<std::string, Value>> members;  // objects, insertion order
    std::vector<Value> elements;                         // arrays

    const Value* find(std::string_view key) const {
        for (const auto& [k, v] : members)
            if (k == key) return &v;
        return nullptr;
    }
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Value parse() {
        skip_ws();
        Value v = parse_value();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing content after document");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ScxParseError(line_, col_, msg); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            advance();
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    Value parse_value() {
        if (eof()) fail("unexpected end of input");
        std::size_t line = line_, col = col_;
        char c = peek();
        Value v;
        if (c == '{')
            v = parse_object();
        else if (c == '[')
            v = parse_array();
        else if (c == '"')
            v = parse_string();
        else if (c == '-' || (c >= '0' && c <= '9'))
            v = parse_integer();
        else
            fail("unexpected character");
        v.line = line;
        v.column = col;
        return v;
    }

    Value parse_object() {
        Value v;
        v.kind = Value::Kind::Object;
        expect('{');
        skip_ws();
        if (!eof() && peek() == '}') {
            advance();
            return v;
        }
        while (true) {
            skip_ws();
            if (eof() || peek() != '"') fail("expected object key");
            std::size_t kline = line_, kcol = col_;
            Value key = parse_string();
            for (const auto& [k, ignored] : v.members)
                if (k == key.text) throw ScxParseError(kline, kcol, "duplicate key '" + key.text + "'");
            skip_ws();
            expect(':');
            skip_ws();
            v.members.emplace_back(key.text, parse_value());
            skip_ws();
            if (eof()) fail("unterminated object");
            if (peek() == ',') {
                advance();
                continue;
            }
            expect('}');
            return v;
        }
    }

    Value parse_array() {
        Value v;
        v.kind = Value::Kind::Array;
        expect('[');
        skip_ws();
        if (!eof() && peek() == ']') {
            advance();
            return v;
        }
        while (true) {
            skip_ws();
            v.elements.push_back(parse_value());
            skip_ws();
            if (eof()) fail("unterminated array");
            if (peek() == ',') {
                advance();
                continue;
            }
            expect(']');
            return v;
        }
    }

    Value parse_string() {
        Value v;
        v.kind = Value::Kind::String;
        expect('"');
        while (true) {
            if (eof()) fail("unterminated string");
            char c = advance();
            if (c == '"') return v;
            if (c == '\n') fail("newline inside string");
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = advance();
                switch (e) {
                    case '"': v.text += '"'; break;
                    case '\\': v.text += '\\'; break;
                    case '/': v.text += '/'; break;
                    case 'n': v.text += '\n'; break;
                    case 't': v.text += '\t'; break;
                    case 'r': v.text += '\r'; break;
                    case 'b': v.text += '\b'; break;
                    case 'f': v.text += '\f'; break;
                    default: fail("unsupported escape sequence");
                }
            } else {
                v.text += c;
            }
        }
    }

    Value parse_integer() {
        Value v;
        v.kind = Value::Kind::Integer;
        if (peek() == '-') v.text += advance();
        if (eof() || peek() < '0' || peek() > '9') fail("malformed number");
        while (!eof() && peek() >= '0' && peek() <= '9') v.text += advance();
        if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E'))
            fail("only integers and rational strings are accepted");
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

inline Value parse(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace json
}  // namespace scx
