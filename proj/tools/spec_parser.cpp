#include "spec_parser.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <map>
#include <sstream>

namespace qiet::cli {

namespace {

// Recursive descent over a single expression; positions are tracked in
// (line, col) so spec-file diagnostics point into the file.
class ExpressionParser {
public:
    ExpressionParser(const std::string& text, int d, int base_line, int base_col)
        : text_(text), d_(d), line_(base_line), col_(base_col) {}

    QuadNum parse() {
        QuadNum value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            advance();
        }
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BigInt integer_literal() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected an integer");
        }
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            advance();
        }
        return BigInt(digits);
    }

    QuadNum factor() {
        skip_space();
        if (eat('(')) {
            QuadNum inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return QuadNum::integer(integer_literal(), d_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                word.push_back(text_[pos_]);
                advance();
            }
            if (word != "sqrt") fail("unknown identifier '" + word + "'");
            if (!eat('(')) fail("expected '(' after sqrt");
            int at_line = line_, at_col = col_;
            BigInt radicand = integer_literal();
            if (!eat(')')) fail("expected ')'");
            if (radicand != d_) {
                throw DiscriminantMismatch("sqrt(" + radicand.str() + ") at " +
                                           std::to_string(at_line) + ":" +
                                           std::to_string(at_col) +
                                           " does not match the declared d = " +
                                           std::to_string(d_));
            }
            return QuadNum::sqrt_d(d_);
        }
        fail("expected a number, sqrt(...) or '('");
    }

    QuadNum term() {
        QuadNum value = factor();
        for (;;) {
            if (eat('*')) {
                value = value * factor();
            } else if (eat('/')) {
                QuadNum divisor = factor();
                if (divisor.is_zero()) fail("division by zero");
                value = value / divisor;
            } else {
                return value;
            }
        }
    }

    QuadNum expression() {
        bool negate = eat('-');
        QuadNum value = term();
        if (negate) value = -value;
        for (;;) {
            if (eat('+')) {
                value = value + term();
            } else if (eat('-')) {
                value = value - term();
            } else {
                return value;
            }
        }
    }

    const std::string& text_;
    int d_;
    std::size_t pos_ = 0;
    int line_;
    int col_;
};

struct RawValue {
    std::string text;
    int line;
    int col;
};

std::vector<std::string> split_top_level_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

IetSpec parse_text_spec(const std::string& text) {
    std::map<std::string, RawValue> fields;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", line_no, static_cast<int>(start) + 1);
        }
        std::string key = line.substr(start, eq - start);
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key != "d" && key != "perm" && key != "lengths" && key != "left") {
            throw ParseError("unknown key '" + key + "'", line_no, static_cast<int>(start) + 1);
        }
        if (fields.count(key)) {
            throw ParseError("duplicate key '" + key + "'", line_no, static_cast<int>(start) + 1);
        }
        fields[key] = RawValue{line.substr(eq + 1), line_no, static_cast<int>(eq) + 2};
    }
    for (const char* required : {"d", "perm", "lengths"}) {
        if (!fields.count(required)) {
            throw ParseError(std::string("missing required key '") + required + "'", line_no, 1);
        }
    }

    IetSpec spec{0, {}, {}, QuadNum::zero(2)};
    {
        const RawValue& raw = fields.at("d");
        try {
            std::size_t used = 0;
            spec.d = std::stoi(raw.text, &used);
            if (raw.text.find_first_not_of(" \t\r", used) != std::string::npos) {
                throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw ParseError("d must be an integer", raw.line, raw.col);
        }
    }
    {
        const RawValue& raw = fields.at("perm");
        std::istringstream ps(raw.text);
        int image;
        while (ps >> image) spec.perm.push_back(image - 1);  // 1-based on the wire
        if (!ps.eof()) throw ParseError("perm must list 1-based image positions", raw.line,
                                        raw.col);
        if (spec.perm.empty()) throw ParseError("perm is empty", raw.line, raw.col);
    }
    {
        const RawValue& raw = fields.at("lengths");
        for (const std::string& piece : split_top_level_commas(raw.text)) {
            spec.lengths.push_back(parse_expression(piece, spec.d, raw.line, raw.col));
        }
    }
    if (fields.count("left")) {
        const RawValue& raw = fields.at("left");
        spec.left = parse_expression(raw.text, spec.d, raw.line, raw.col);
    } else {
        spec.left = QuadNum::zero(spec.d);
    }
    return spec;
}

IetSpec parse_json_spec(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what(), 1,
                         static_cast<int>(err.byte));
    }
    auto expr = [&](const nlohmann::json& node, int d) {
        if (node.is_number_integer()) {
            return QuadNum::integer(node.get<long long>(), d);
        }
        if (node.is_string()) return parse_expression(node.get<std::string>(), d);
        throw ParseError("expected an expression string or integer", 1, 1);
    };
    try {
        IetSpec spec{doc.at("d").get<int>(), {}, {}, QuadNum::zero(2)};
        for (int image : doc.at("perm").get<std::vector<int>>()) spec.perm.push_back(image - 1);
        for (const auto& node : doc.at("lengths")) spec.lengths.push_back(expr(node, spec.d));
        spec.left = doc.contains("left") ? expr(doc.at("left"), spec.d)
                                         : QuadNum::zero(spec.d);
        return spec;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("invalid spec JSON: ") + err.what(), 1, 1);
    }
}

}  // namespace

QuadNum parse_expression(const std::string& text, int d, int base_line, int base_col) {
    return ExpressionParser(text, d, base_line, base_col).parse();
}

IetSpec parse_spec(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_spec(text);
    return parse_text_spec(text);
}

Iet build_iet(const IetSpec& spec) { return Iet(spec.perm, spec.lengths, spec.left); }

}  // namespace qiet::cli
