#include "dirichlet/jsonio.hpp"

#include <cmath>
#include <cstdio>

#include "dirichlet/errors.hpp"

namespace dirichlet::jsonio {

std::string format_double(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void newline_indent(std::string& out, int indent, int depth) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

Value Value::boolean(bool b) {
    Value v;
    v.kind_ = Kind::Bool;
    v.bool_ = b;
    return v;
}

Value Value::number(double d) {
    Value v;
    v.kind_ = Kind::Number;
    v.number_ = d;
    return v;
}

Value Value::integer(long long i) {
    Value v;
    v.kind_ = Kind::Integer;
    v.integer_ = i;
    return v;
}

Value Value::string(std::string s) {
    Value v;
    v.kind_ = Kind::String;
    v.string_ = std::move(s);
    return v;
}

Value Value::array() {
    Value v;
    v.kind_ = Kind::Array;
    return v;
}

Value Value::object() {
    Value v;
    v.kind_ = Kind::Object;
    return v;
}

Value& Value::push(Value v) {
    if (kind_ != Kind::Array) throw Error("jsonio: push on a non-array value");
    items_.push_back(std::move(v));
    return *this;
}

Value& Value::set(const std::string& key, Value v) {
    if (kind_ != Kind::Object) throw Error("jsonio: set on a non-object value");
    fields_.emplace_back(key, std::move(v));
    return *this;
}

void Value::write(std::string& out, int indent, int depth) const {
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::Number: out += format_double(number_); break;
        case Kind::Integer: out += std::to_string(integer_); break;
        case Kind::String: write_escaped(out, string_); break;
        case Kind::Array: {
            out += '[';
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i) out += ',';
                newline_indent(out, indent, depth + 1);
                items_[i].write(out, indent, depth + 1);
            }
            if (!items_.empty()) newline_indent(out, indent, depth);
            out += ']';
            break;
        }
        case Kind::Object: {
            out += '{';
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                if (i) out += ',';
                newline_indent(out, indent, depth + 1);
                write_escaped(out, fields_[i].first);
                out += indent < 0 ? ":" : ": ";
                fields_[i].second.write(out, indent, depth + 1);
            }
            if (!fields_.empty()) newline_indent(out, indent, depth);
            out += '}';
            break;
        }
    }
}

std::string Value::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

}  // namespace dirichlet::jsonio
