#include "jobgap/pdf_text.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <zlib.h>

#include "jobgap/errors.hpp"

namespace jobgap {

namespace {

std::string inflate_stream(const std::string& data, const std::string& name) {
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) throw DataError(name + ": zlib init failed");

    std::string out;
    std::vector<char> buf(1 << 16);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    int rc = Z_OK;
    while (rc == Z_OK) {
        zs.next_out = reinterpret_cast<Bytef*>(buf.data());
        zs.avail_out = static_cast<uInt>(buf.size());
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&zs);
            throw DataError(name + ": corrupt FlateDecode stream");
        }
        out.append(buf.data(), buf.size() - zs.avail_out);
    }
    inflateEnd(&zs);
    return out;
}

// Decodes a PDF literal string starting at pos (which points at '(').
// Returns the text and advances pos past the closing ')'.
std::string read_literal_string(const std::string& s, std::size_t& pos) {
    std::string out;
    int depth = 1;
    ++pos;
    while (pos < s.size() && depth > 0) {
        char c = s[pos++];
        if (c == '\\' && pos < s.size()) {
            char e = s[pos++];
            switch (e) {
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case 't': out += '\t'; break;
                case 'b': out += '\b'; break;
                case 'f': out += '\f'; break;
                case '(': out += '('; break;
                case ')': out += ')'; break;
                case '\\': out += '\\'; break;
                case '\r':
                    if (pos < s.size() && s[pos] == '\n') ++pos; // line continuation
                    break;
                case '\n': break;
                default:
                    if (e >= '0' && e <= '7') {
                        int v = e - '0';
                        for (int k = 0; k < 2 && pos < s.size() && s[pos] >= '0' &&
                                        s[pos] <= '7';
                             ++k) {
                            v = v * 8 + (s[pos++] - '0');
                        }
                        out += static_cast<char>(v & 0xff);
                    } else {
                        out += e;
                    }
            }
        } else if (c == '(') {
            ++depth;
            out += c;
        } else if (c == ')') {
            --depth;
            if (depth > 0) out += c;
        } else {
            out += c;
        }
    }
    return out;
}

std::string read_hex_string(const std::string& s, std::size_t& pos) {
    std::string out;
    ++pos; // '<'
    int hi = -1;
    while (pos < s.size() && s[pos] != '>') {
        char c = s[pos++];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else continue;
        if (hi < 0) {
            hi = v;
        } else {
            out += static_cast<char>(hi * 16 + v);
            hi = -1;
        }
    }
    if (hi >= 0) out += static_cast<char>(hi * 16);
    if (pos < s.size()) ++pos; // '>'
    return out;
}

// Pulls the string arguments of text-show operators out of one decoded
// content stream. Text outside BT..ET is ignored.
void scan_content_stream(const std::string& s, std::string& text) {
    std::size_t pos = 0;
    bool in_text = false;
    std::vector<std::string> pending; // operands seen since the last operator
    while (pos < s.size()) {
        const char c = s[pos];
        if (c == '(') {
            pending.push_back(read_literal_string(s, pos));
            continue;
        }
        if (c == '<' && pos + 1 < s.size() && s[pos + 1] != '<') {
            pending.push_back(read_hex_string(s, pos));
            continue;
        }
        if (c == '[' || c == ']') {
            ++pos;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '\'' || c == '"') {
            std::size_t end = pos;
            while (end < s.size() &&
                   (std::isalpha(static_cast<unsigned char>(s[end])) || s[end] == '*' ||
                    s[end] == '\'' || s[end] == '"')) {
                ++end;
            }
            const std::string op = s.substr(pos, end - pos);
            pos = end;
            if (op == "BT") {
                in_text = true;
            } else if (op == "ET") {
                in_text = false;
            } else if (in_text && (op == "Tj" || op == "TJ" || op == "'" || op == "\"")) {
                for (const auto& run : pending) text += run;
                text += ' ';
            } else if (in_text && (op == "Td" || op == "TD" || op == "T*")) {
                text += ' ';
            }
            pending.clear();
            continue;
        }
        ++pos;
    }
}

// Direct integer value of /Length, or -1 when absent or an indirect
// reference ("N 0 R").
long direct_stream_length(const std::string& dict) {
    std::size_t p = dict.find("/Length");
    if (p == std::string::npos) return -1;
    p += 7;
    while (p < dict.size() && std::isspace(static_cast<unsigned char>(dict[p]))) ++p;
    long value = 0;
    bool any = false;
    while (p < dict.size() && std::isdigit(static_cast<unsigned char>(dict[p]))) {
        value = value * 10 + (dict[p++] - '0');
        any = true;
    }
    if (!any) return -1;
    std::size_t q = p;
    while (q < dict.size() && std::isspace(static_cast<unsigned char>(dict[q]))) ++q;
    std::size_t r = q;
    while (r < dict.size() && std::isdigit(static_cast<unsigned char>(dict[r]))) ++r;
    if (r > q) {
        while (r < dict.size() && std::isspace(static_cast<unsigned char>(dict[r]))) ++r;
        if (r < dict.size() && dict[r] == 'R') return -1; // indirect
    }
    return value;
}

} // namespace

std::string extract_pdf_text_from_bytes(const std::string& bytes, const std::string& name) {
    if (bytes.rfind("%PDF-", 0) != 0) {
        throw DataError(name + ": not a PDF (missing %PDF header)");
    }

    std::string text;
    std::size_t pos = 0;
    while ((pos = bytes.find("stream", pos)) != std::string::npos) {
        // "endstream" also contains "stream"; require a delimiter before it.
        if (pos > 0 && std::isalpha(static_cast<unsigned char>(bytes[pos - 1]))) {
            pos += 6;
            continue;
        }
        const std::size_t dict_start = bytes.rfind("<<", pos);
        const std::string dict = dict_start == std::string::npos
                                     ? std::string{}
                                     : bytes.substr(dict_start, pos - dict_start);
        std::size_t data_start = pos + 6;
        if (data_start < bytes.size() && bytes[data_start] == '\r') ++data_start;
        if (data_start < bytes.size() && bytes[data_start] == '\n') ++data_start;

        const bool flate = dict.find("/FlateDecode") != std::string::npos;
        const bool other_filter = !flate && dict.find("/Filter") != std::string::npos;

        const long length = direct_stream_length(dict);
        std::string raw;
        std::size_t resume;
        if (length >= 0 && data_start + static_cast<std::size_t>(length) <= bytes.size()) {
            raw = bytes.substr(data_start, static_cast<std::size_t>(length));
            resume = data_start + static_cast<std::size_t>(length);
        } else {
            const std::size_t data_end = bytes.find("endstream", data_start);
            if (data_end == std::string::npos) break;
            raw = bytes.substr(data_start, data_end - data_start);
            // At most one EOL belongs to the endstream delimiter. An inflate
            // stream self-terminates and ignores trailing bytes, so only
            // plain data needs the trim (and must not lose checksum bytes).
            if (!flate) {
                if (!raw.empty() && raw.back() == '\n') raw.pop_back();
                if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            }
            resume = data_end;
        }
        if (!other_filter) {
            const std::string decoded = flate ? inflate_stream(raw, name) : raw;
            scan_content_stream(decoded, text);
        }
        const std::size_t data_end = bytes.find("endstream", resume);
        if (data_end == std::string::npos) break;
        pos = data_end + 9;
    }

    // drop trailing separator noise; whitespace runs are the caller's problem
    while (!text.empty() && text.back() == ' ') text.pop_back();
    if (text.empty()) {
        throw DataError(name + ": no extractable text (scanned or image-only PDF?)");
    }
    return text;
}

std::string extract_pdf_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return extract_pdf_text_from_bytes(ss.str(), path.string());
}

} // namespace jobgap
