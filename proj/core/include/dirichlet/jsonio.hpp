#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dirichlet::jsonio {

/// Minimal write-only JSON document with insertion-ordered objects and a
/// fixed float policy: every double is emitted with 17 significant digits so
/// reports round-trip bit-exactly and repeated runs are byte-identical.
/// Non-finite doubles are emitted as the strings "inf", "-inf", "nan".
class Value {
public:
    Value() : kind_(Kind::Null) {}

    static Value null() { return Value(); }
    static Value boolean(bool b);
    static Value number(double v);
    static Value integer(long long v);
    static Value string(std::string s);
    static Value array();
    static Value object();

    /// Appends to an array value.
    Value& push(Value v);
    /// Inserts into an object value, preserving insertion order.
    Value& set(const std::string& key, Value v);

    /// Serializes; indent < 0 means compact single-line output.
    std::string dump(int indent = -1) const;

private:
    enum class Kind { Null, Bool, Number, Integer, String, Array, Object };

    void write(std::string& out, int indent, int depth) const;

    Kind kind_;
    bool bool_ = false;
    double number_ = 0.0;
    long long integer_ = 0;
    std::string string_;
    std::vector<Value> items_;
    std::vector<std::pair<std::string, Value>> fields_;
};

/// %.17g with a stable representation for non-finite values.
std::string format_double(double v);

}  // namespace dirichlet::jsonio
