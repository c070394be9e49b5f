#include "semistab/kv_records.hpp"

#include <istream>
#include <ostream>

#include "semistab/errors.hpp"

namespace semistab {

namespace {

std::string trim(const std::string& s)
{
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

const std::string* KvRecord::find(const std::string& key) const
{
    for (const auto& [k, v] : fields)
        if (k == key)
            return &v;
    return nullptr;
}

const std::string& KvRecord::require(const std::string& key) const
{
    if (const auto* v = find(key))
        return *v;
    throw ParseError("record is missing key '" + key + "'", first_line);
}

std::vector<KvRecord> parse_kv_records(std::istream& in)
{
    std::vector<KvRecord> records;
    KvRecord current;
    std::string line;
    int lineno = 0;

    auto flush = [&] {
        if (!current.fields.empty())
            records.push_back(std::move(current));
        current = KvRecord{};
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty()) {
            flush();
            continue;
        }
        if (body.front() == '#')
            continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value', got '" + body + "'", lineno);
        std::string key = trim(body.substr(0, eq));
        if (key.empty())
            throw ParseError("empty key", lineno);
        if (current.fields.empty())
            current.first_line = lineno;
        current.fields.emplace_back(std::move(key), trim(body.substr(eq + 1)));
    }
    flush();
    return records;
}

void write_kv_record(std::ostream& out, const KvRecord& record)
{
    for (const auto& [k, v] : record.fields)
        out << k << " = " << v << '\n';
}

} // namespace semistab
