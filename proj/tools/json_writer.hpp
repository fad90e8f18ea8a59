#ifndef BCMC_TOOLS_JSON_WRITER_HPP
#define BCMC_TOOLS_JSON_WRITER_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace bcmc::tools {

/// Streaming JSON writer for the run reports. Output is deterministic: keys
/// appear exactly in insertion order and every floating-point number is
/// rendered with 17 significant digits, so equal reports are byte-equal and
/// all values round-trip.
class JsonWriter {
public:
    JsonWriter& begin_object() {
        separator();
        out_ += '{';
        stack_.push_back(false);
        return *this;
    }
    JsonWriter& end_object() {
        stack_.pop_back();
        out_ += '}';
        return *this;
    }
    JsonWriter& begin_array() {
        separator();
        out_ += '[';
        stack_.push_back(false);
        return *this;
    }
    JsonWriter& end_array() {
        stack_.pop_back();
        out_ += ']';
        return *this;
    }

    JsonWriter& key(std::string_view name) {
        separator();
        append_string(name);
        out_ += ':';
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(std::string_view text) {
        separator();
        append_string(text);
        return *this;
    }
    JsonWriter& value(const char* text) { return value(std::string_view(text)); }
    JsonWriter& value(bool flag) {
        separator();
        out_ += flag ? "true" : "false";
        return *this;
    }
    JsonWriter& value(double number) {
        separator();
        if (!std::isfinite(number)) {
            out_ += "null";
            return *this;
        }
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", number);
        out_ += buf;
        return *this;
    }
    JsonWriter& value(std::uint64_t number) {
        separator();
        out_ += std::to_string(number);
        return *this;
    }
    JsonWriter& value(std::int64_t number) {
        separator();
        out_ += std::to_string(number);
        return *this;
    }
    JsonWriter& value_null() {
        separator();
        out_ += "null";
        return *this;
    }

    template <typename T>
    JsonWriter& kv(std::string_view name, T&& v) {
        key(name);
        return value(std::forward<T>(v));
    }
    JsonWriter& kv_null(std::string_view name) {
        key(name);
        return value_null();
    }

    const std::string& str() const { return out_; }

private:
    void separator() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (stack_.back()) out_ += ',';
            stack_.back() = true;
        }
    }

    void append_string(std::string_view text) {
        out_ += '"';
        for (unsigned char c : text) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\r': out_ += "\\r"; break;
                case '\t': out_ += "\\t"; break;
                case '\b': out_ += "\\b"; break;
                case '\f': out_ += "\\f"; break;
                default:
                    if (c < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ += buf;
                    } else {
                        out_ += static_cast<char>(c);
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> stack_;  // per nesting level: has the container emitted an item yet
    bool pending_value_ = false;
};

}  // namespace bcmc::tools

#endif  // BCMC_TOOLS_JSON_WRITER_HPP
