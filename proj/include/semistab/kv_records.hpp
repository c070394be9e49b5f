#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace semistab {

/// One block of `key = value` lines. Key order is preserved.
struct KvRecord {
    int first_line = 0;
    std::vector<std::pair<std::string, std::string>> fields;

    /// Value of the first occurrence of key, or nullptr.
    const std::string* find(const std::string& key) const;
    /// Like find() but throws ParseError naming the record's line.
    const std::string& require(const std::string& key) const;
};

/// Line-oriented key-value text: records are separated by blank lines,
/// `#` starts a comment line, keys and values are whitespace-trimmed.
/// Throws ParseError (with line number) on a line without '='.
std::vector<KvRecord> parse_kv_records(std::istream& in);

void write_kv_record(std::ostream& out, const KvRecord& record);

} // namespace semistab
