#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hgr/errors.hpp"
#include "hgr/rational.hpp"

namespace hgr {

// Minimal JSON value tree that keeps number tokens as their source text, so
// finite decimal literals convert to rationals exactly instead of via double.
// Built through nlohmann's SAX interface, which hands over the raw token for
// floating literals.
struct JValue {
    enum class Kind { Null, Bool, String, Number, Array, Object } kind = Kind::Null;
    bool boolean = false;
    std::string text;  // string payload or raw number token
    std::vector<JValue> items;
    std::vector<std::pair<std::string, JValue>> fields;

    bool is_object() const { return kind == Kind::Object; }
    bool is_array() const { return kind == Kind::Array; }
    bool is_string() const { return kind == Kind::String; }
    bool is_number() const { return kind == Kind::Number; }

    const JValue* get(std::string_view key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    }
};

namespace detail {

struct ExactSax {
    using number_integer_t = nlohmann::json::number_integer_t;
    using number_unsigned_t = nlohmann::json::number_unsigned_t;
    using number_float_t = nlohmann::json::number_float_t;
    using string_t = nlohmann::json::string_t;
    using binary_t = nlohmann::json::binary_t;

    JValue root;
    std::vector<JValue*> stack;  // open containers
    std::string pending_key;
    bool have_key = false;
    std::string error;
    std::size_t error_pos = 0;

    JValue* place() {
        if (stack.empty()) return &root;
        JValue* top = stack.back();
        if (top->kind == JValue::Kind::Object) {
            top->fields.emplace_back(std::move(pending_key), JValue{});
            have_key = false;
            return &top->fields.back().second;
        }
        top->items.emplace_back();
        return &top->items.back();
    }

    bool null() {
        place()->kind = JValue::Kind::Null;
        return true;
    }
    bool boolean(bool v) {
        JValue* x = place();
        x->kind = JValue::Kind::Bool;
        x->boolean = v;
        return true;
    }
    bool number_integer(number_integer_t v) {
        JValue* x = place();
        x->kind = JValue::Kind::Number;
        x->text = std::to_string(v);
        return true;
    }
    bool number_unsigned(number_unsigned_t v) {
        JValue* x = place();
        x->kind = JValue::Kind::Number;
        x->text = std::to_string(v);
        return true;
    }
    bool number_float(number_float_t, const string_t& raw) {
        JValue* x = place();
        x->kind = JValue::Kind::Number;
        x->text = raw;
        return true;
    }
    bool string(string_t& v) {
        JValue* x = place();
        x->kind = JValue::Kind::String;
        x->text = v;
        return true;
    }
    bool binary(binary_t&) {
        error = "binary values are not part of the format";
        return false;
    }
    bool start_object(std::size_t) {
        JValue* x = place();
        x->kind = JValue::Kind::Object;
        stack.push_back(x);
        return true;
    }
    bool key(string_t& k) {
        pending_key = k;
        have_key = true;
        return true;
    }
    bool end_object() {
        stack.pop_back();
        return true;
    }
    bool start_array(std::size_t) {
        JValue* x = place();
        x->kind = JValue::Kind::Array;
        stack.push_back(x);
        return true;
    }
    bool end_array() {
        stack.pop_back();
        return true;
    }
    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) {
        error = ex.what();
        error_pos = position;
        return false;
    }
};

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

inline JValue parse_exact_json(std::string_view text) {
    detail::ExactSax sax;
    bool ok = nlohmann::json::sax_parse(text, &sax);
    if (!ok) {
        auto [line, col] = detail::line_col(text, sax.error_pos);
        throw ParseError("JSON parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + sax.error);
    }
    return sax.root;
}

// Field access helpers with path-aware error messages.

inline const JValue& expect_field(const JValue& obj, std::string_view key, const std::string& at) {
    if (!obj.is_object()) throw ParseError(at + ": expected an object");
    const JValue* v = obj.get(key);
    if (!v) throw ParseError(at + ": missing field \"" + std::string(key) + "\"");
    return *v;
}

inline Rational expect_rational(const JValue& v, const std::string& at) {
    if (v.is_number() || v.is_string()) {
        try {
            return Rational::parse(v.text);
        } catch (const std::exception& e) {
            throw ParseError(at + ": " + e.what());
        }
    }
    throw ParseError(at + ": expected a number or a \"p/q\" string");
}

inline long long expect_int(const JValue& v, const std::string& at) {
    Rational r = expect_rational(v, at);
    if (!r.is_integer() || !r.num().fits_int64()) throw ParseError(at + ": expected an integer");
    return r.num().to_int64();
}

inline const std::string& expect_string(const JValue& v, const std::string& at) {
    if (!v.is_string()) throw ParseError(at + ": expected a string");
    return v.text;
}

inline const std::vector<JValue>& expect_array(const JValue& v, const std::string& at) {
    if (!v.is_array()) throw ParseError(at + ": expected an array");
    return v.items;
}

}  // namespace hgr
