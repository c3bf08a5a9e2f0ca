#ifndef HYPERSTATE_CLI_JSON_OUT_HPP
#define HYPERSTATE_CLI_JSON_OUT_HPP

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

// Minimal ordered JSON emitter: flat objects, snake_case keys, numbers with 15
// significant digits, complex values as {"re":...,"im":...}. Field order is
// insertion order, so identical inputs give byte-identical output.
class JsonOut {
  public:
    JsonOut& field(const std::string& key, const std::string& value) {
        begin(key);
        os_ << '"' << escape(value) << '"';
        return *this;
    }
    JsonOut& field(const std::string& key, const char* value) {
        return field(key, std::string(value));
    }
    JsonOut& field(const std::string& key, double value) {
        begin(key);
        os_ << num(value);
        return *this;
    }
    JsonOut& field(const std::string& key, long value) {
        begin(key);
        os_ << value;
        return *this;
    }
    JsonOut& field(const std::string& key, int value) { return field(key, long(value)); }
    JsonOut& field(const std::string& key, bool value) {
        begin(key);
        os_ << (value ? "true" : "false");
        return *this;
    }
    JsonOut& field_complex(const std::string& key, double re, double im) {
        begin(key);
        os_ << complex(re, im);
        return *this;
    }
    JsonOut& field_int_array(const std::string& key, const std::vector<int>& values) {
        begin(key);
        os_ << '[';
        for (size_t i = 0; i < values.size(); ++i) os_ << (i ? "," : "") << values[i];
        os_ << ']';
        return *this;
    }
    JsonOut& field_double_array(const std::string& key, const std::vector<double>& values) {
        begin(key);
        os_ << '[';
        for (size_t i = 0; i < values.size(); ++i) os_ << (i ? "," : "") << num(values[i]);
        os_ << ']';
        return *this;
    }
    JsonOut& field_complex_array(const std::string& key, const std::vector<double>& re,
                                 const std::vector<double>& im) {
        begin(key);
        os_ << '[';
        for (size_t i = 0; i < re.size(); ++i) os_ << (i ? "," : "") << complex(re[i], im[i]);
        os_ << ']';
        return *this;
    }

    std::string str() const { return "{" + os_.str() + "}"; }

    static std::string num(double v) {
        if (std::isnan(v)) return "null";
        if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.15g", v);
        return buf;
    }

  private:
    static std::string complex(double re, double im) {
        return "{\"re\":" + num(re) + ",\"im\":" + num(im) + "}";
    }
    static std::string escape(const std::string& s) {
        std::string out;
        for (unsigned char c : s) {
            if (c == '"' || c == '\\') {
                out.push_back('\\');
                out.push_back(char(c));
            } else if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out.push_back(char(c));
            }
        }
        return out;
    }
    void begin(const std::string& key) {
        if (!first_) os_ << ',';
        first_ = false;
        os_ << '"' << key << "\":";
    }
    std::ostringstream os_;
    bool first_ = true;
};

#endif
