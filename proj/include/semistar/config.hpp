#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace semistar {

/// Block-structured configuration text:
///
///     kind name? { key = value; ... }
///
/// Values are quoted strings, bare atoms (identifiers, numbers) or
/// bracketed lists of values.  `#` starts a comment.
struct ConfigValue {
    enum class Kind { String, Atom, List };

    Kind kind = Kind::Atom;
    std::string text;
    std::vector<ConfigValue> items;
    std::size_t pos = 0;

    /// The text of a string or atom; throws ParseError on a list.
    const std::string& scalar() const;
    /// Items of a list; a scalar is treated as a one-element list.
    std::vector<ConfigValue> list() const;
    bool as_bool() const;
    long as_int() const;
};

struct ConfigEntry {
    std::string key;
    ConfigValue value;
    std::size_t pos = 0;
};

struct ConfigBlock {
    std::string kind;
    std::string name;
    std::vector<ConfigEntry> entries;
    std::size_t pos = 0;

    const ConfigValue* find(std::string_view key) const;
    /// Throws ParseError naming the block when missing.
    const ConfigValue& require(std::string_view key) const;
};

struct ConfigDoc {
    std::vector<ConfigBlock> blocks;
};

ConfigDoc parse_config_text(std::string_view text);

/// Canonical text; parse_config_text(print_config(d)) prints back identically.
std::string print_config(const ConfigDoc& doc);

}  // namespace semistar
