#include "semistar/config.hpp"

#include <cctype>
#include <cstdlib>

#include "semistar/errors.hpp"

namespace semistar {

const std::string& ConfigValue::scalar() const
{
    if (kind == Kind::List) throw ParseError("expected a scalar value, got a list", pos);
    return text;
}

std::vector<ConfigValue> ConfigValue::list() const
{
    if (kind == Kind::List) return items;
    return {*this};
}

bool ConfigValue::as_bool() const
{
    const std::string& t = scalar();
    if (t == "true") return true;
    if (t == "false") return false;
    throw ParseError("expected true or false, got '" + t + "'", pos);
}

long ConfigValue::as_int() const
{
    const std::string& t = scalar();
    char* end = nullptr;
    long const v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || *end != '\0') throw ParseError("expected an integer, got '" + t + "'", pos);
    return v;
}

const ConfigValue* ConfigBlock::find(std::string_view key) const
{
    for (const auto& e : entries)
        if (e.key == key) return &e.value;
    return nullptr;
}

const ConfigValue& ConfigBlock::require(std::string_view key) const
{
    if (const ConfigValue* v = find(key)) return *v;
    std::string const who = name.empty() ? kind : kind + " " + name;
    throw ParseError(who + ": missing key '" + std::string(key) + "'", pos);
}

namespace {

bool atom_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '+';
}

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    ConfigDoc doc()
    {
        ConfigDoc d;
        skip();
        if (i_ >= s_.size()) throw ParseError("empty configuration", i_);
        while (i_ < s_.size()) {
            d.blocks.push_back(block());
            skip();
        }
        return d;
    }

  private:
    std::string_view s_;
    std::size_t i_ = 0;

    void skip()
    {
        while (i_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
                ++i_;
            } else if (s_[i_] == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
            } else {
                break;
            }
        }
    }

    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    void expect(char c)
    {
        if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", i_);
        ++i_;
    }

    std::string atom()
    {
        skip();
        std::size_t const start = i_;
        while (i_ < s_.size() && atom_char(s_[i_])) ++i_;
        if (i_ == start) throw ParseError("expected a name", i_);
        return std::string(s_.substr(start, i_ - start));
    }

    ConfigBlock block()
    {
        ConfigBlock b;
        b.pos = i_;
        b.kind = atom();
        if (!peek('{')) b.name = atom();
        expect('{');
        while (!peek('}')) {
            if (i_ >= s_.size()) throw ParseError("unterminated block '" + b.kind + "'", b.pos);
            ConfigEntry e;
            e.pos = i_;
            e.key = atom();
            expect('=');
            e.value = value();
            b.entries.push_back(std::move(e));
            if (peek(';')) {
                ++i_;
            } else if (!peek('}')) {
                throw ParseError("expected ';' or '}'", i_);
            }
        }
        ++i_;
        return b;
    }

    ConfigValue value()
    {
        skip();
        ConfigValue v;
        v.pos = i_;
        if (i_ >= s_.size()) throw ParseError("expected a value", i_);
        if (s_[i_] == '"') {
            v.kind = ConfigValue::Kind::String;
            ++i_;
            while (i_ < s_.size() && s_[i_] != '"') {
                if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
                v.text += s_[i_++];
            }
            if (i_ >= s_.size()) throw ParseError("unterminated string", v.pos);
            ++i_;
        } else if (s_[i_] == '[') {
            v.kind = ConfigValue::Kind::List;
            ++i_;
            while (!peek(']')) {
                v.items.push_back(value());
                if (peek(',')) {
                    ++i_;
                } else if (!peek(']')) {
                    throw ParseError("expected ',' or ']'", i_);
                }
            }
            ++i_;
        } else {
            v.kind = ConfigValue::Kind::Atom;
            v.text = atom();
        }
        return v;
    }
};

void print_value(const ConfigValue& v, std::string& out)
{
    switch (v.kind) {
    case ConfigValue::Kind::Atom:
        out += v.text;
        break;
    case ConfigValue::Kind::String:
        out += '"';
        for (char c : v.text) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        out += '"';
        break;
    case ConfigValue::Kind::List:
        out += '[';
        for (std::size_t k = 0; k < v.items.size(); ++k) {
            if (k) out += ", ";
            print_value(v.items[k], out);
        }
        out += ']';
        break;
    }
}

}  // namespace

ConfigDoc parse_config_text(std::string_view text) { return Parser(text).doc(); }

std::string print_config(const ConfigDoc& doc)
{
    std::string out;
    for (std::size_t b = 0; b < doc.blocks.size(); ++b) {
        const auto& blk = doc.blocks[b];
        if (b) out += '\n';
        out += blk.kind;
        if (!blk.name.empty()) out += " " + blk.name;
        out += " {\n";
        for (const auto& e : blk.entries) {
            out += "  " + e.key + " = ";
            print_value(e.value, out);
            out += ";\n";
        }
        out += "}\n";
    }
    return out;
}

}  // namespace semistar
