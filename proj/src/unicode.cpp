#include "strsolve/unicode.hpp"

#include <cstdio>

namespace strsolve {

Word utf8_decode(std::string_view text) {
    Word out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        auto b0 = static_cast<unsigned char>(text[i]);
        std::size_t extra = 0;
        char32_t cp = b0;
        if ((b0 & 0xE0) == 0xC0) {
            extra = 1;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            extra = 2;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            extra = 3;
            cp = b0 & 0x07;
        }
        bool ok = b0 < 0x80 || extra > 0;
        if (ok && i + extra >= text.size() && extra > 0) ok = false;
        for (std::size_t k = 1; ok && k <= extra; ++k) {
            auto b = static_cast<unsigned char>(text[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
            } else {
                cp = (cp << 6) | (b & 0x3F);
            }
        }
        if (!ok) {
            out.push_back(b0);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string utf8_encode(CodePoint c) {
    std::string out;
    auto v = static_cast<std::uint32_t>(c);
    if (v < 0x80) {
        out.push_back(static_cast<char>(v));
    } else if (v < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (v >> 6)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else if (v < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (v >> 12)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (v >> 18)));
        out.push_back(static_cast<char>(0x80 | ((v >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    }
    return out;
}

std::string utf8_encode(const Word& word) {
    std::string out;
    for (CodePoint c : word) out += utf8_encode(c);
    return out;
}

std::string to_smtlib_literal(const Word& word) {
    std::string out = "\"";
    for (CodePoint c : word) {
        if (c == U'"') {
            out += "\"\"";
        } else if (c >= 0x20 && c <= 0x7E && c != U'\\') {
            out.push_back(static_cast<char>(c));
        } else {
            char buf[16];
            std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(c));
            out += buf;
        }
    }
    out += "\"";
    return out;
}

std::string to_display(const Word& word) {
    std::string out;
    for (CodePoint c : word) {
        if (c >= 0x20 && c <= 0x7E && c != U'\\') {
            out.push_back(static_cast<char>(c));
        } else {
            char buf[16];
            std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(c));
            out += buf;
        }
    }
    return out;
}

}  // namespace strsolve
