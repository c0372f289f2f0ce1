#include "combibench/lean_text.hpp"

#include <algorithm>
#include <cstdint>

namespace combibench::lean_text {

namespace {

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_hex_digit(char c) {
    return is_ascii_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// Decodes the UTF-8 scalar starting at `pos`. Malformed bytes decode as a
// single-byte scalar so the lexer stays total on arbitrary input.
std::uint32_t decode_scalar(std::string_view s, std::size_t pos, std::size_t& len) {
    unsigned char b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) {
        len = 1;
        return b0;
    }
    std::size_t expect = 0;
    std::uint32_t value = 0;
    if ((b0 & 0xE0) == 0xC0) {
        expect = 1;
        value = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        expect = 2;
        value = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        expect = 3;
        value = b0 & 0x07;
    } else {
        len = 1;
        return b0;
    }
    if (pos + expect >= s.size() + 0 && pos + expect > s.size() - 1) {
        // Truncated sequence at end of input.
        if (pos + expect >= s.size()) {
            len = 1;
            return b0;
        }
    }
    for (std::size_t i = 1; i <= expect; ++i) {
        unsigned char b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) {
            len = 1;
            return b0;
        }
        value = (value << 6) | (b & 0x3F);
    }
    len = expect + 1;
    return value;
}

// Follows Lean's notion of letter-like scalars closely enough for token
// boundary stability: Greek letters (minus the binder letters), letterlike
// symbols (ℕ, ℝ, ...), and the mathematical alphanumeric block.
bool is_letter_like(std::uint32_t c) {
    if (c >= 0x3B1 && c <= 0x3C9 && c != 0x3BB) return true;   // lower Greek, not λ
    if (c >= 0x391 && c <= 0x3A9 && c != 0x3A0 && c != 0x3A3) return true;  // upper Greek, not Π Σ
    if (c >= 0x3CA && c <= 0x3FB) return true;
    if (c >= 0x1F00 && c <= 0x1FFE) return true;               // polytonic Greek
    if (c >= 0x2100 && c <= 0x214F) return true;               // letterlike symbols
    if (c >= 0x1D49C && c <= 0x1D59F) return true;             // script/fraktur letters
    return false;
}

bool is_subscript_alnum(std::uint32_t c) {
    return (c >= 0x2080 && c <= 0x209C) || (c >= 0x1D62 && c <= 0x1D6A);
}

bool is_id_first(std::uint32_t c) {
    if (c < 0x80) return is_ascii_alpha(static_cast<char>(c)) || c == '_';
    return is_letter_like(c);
}

bool is_id_rest(std::uint32_t c) {
    if (c < 0x80) {
        char a = static_cast<char>(c);
        return is_ascii_alpha(a) || is_ascii_digit(a) || a == '_' || a == '\'' || a == '!' ||
               a == '?';
    }
    return is_letter_like(c) || is_subscript_alnum(c);
}

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

constexpr std::uint32_t kGuillemetOpen = 0xAB;   // «
constexpr std::uint32_t kGuillemetClose = 0xBB;  // »

}  // namespace

bool is_insignificant_char(char c) { return is_ws(c); }

StripResult strip_comments_ex(std::string_view raw) {
    StripResult out;
    out.text.reserve(raw.size());
    std::size_t i = 0;
    const std::size_t n = raw.size();
    while (i < n) {
        char c = raw[i];
        if (c == '"') {
            // String literal: copy verbatim through the closing quote.
            std::size_t start = i;
            out.text.push_back(c);
            ++i;
            bool closed = false;
            while (i < n) {
                char s = raw[i];
                out.text.push_back(s);
                if (s == '\\') {
                    if (i + 1 < n) {
                        out.text.push_back(raw[i + 1]);
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                ++i;
                if (s == '"') {
                    closed = true;
                    break;
                }
            }
            if (!closed) {
                throw LexError(LexErrorKind::UnterminatedStringLiteral, start,
                               "unterminated string literal");
            }
            continue;
        }
        if (c == '-' && i + 1 < n && raw[i + 1] == '-') {
            // Line comment up to (not including) the newline.
            std::size_t start = i;
            while (i < n && raw[i] != '\n') ++i;
            out.comments.push_back({start, i, out.text.size(), false, {}});
            out.text.push_back(' ');
            continue;
        }
        if (c == '/' && i + 1 < n && raw[i + 1] == '-') {
            std::size_t start = i;
            bool is_doc = i + 2 < n && raw[i + 2] == '-' && !(i + 3 < n && raw[i + 3] == '-');
            std::size_t depth = 1;
            std::size_t j = i + 2;
            while (j < n && depth > 0) {
                if (raw[j] == '/' && j + 1 < n && raw[j + 1] == '-') {
                    ++depth;
                    j += 2;
                } else if (raw[j] == '-' && j + 1 < n && raw[j + 1] == '/') {
                    --depth;
                    j += 2;
                } else {
                    ++j;
                }
            }
            if (depth != 0) {
                throw LexError(LexErrorKind::UnterminatedBlockComment, start,
                               "unterminated block comment");
            }
            CommentSpan span{start, j, out.text.size(), is_doc, {}};
            if (is_doc) {
                // Contents between `/--` and `-/`.
                std::size_t body_begin = start + 3;
                std::size_t body_end = j >= 2 ? j - 2 : body_begin;
                if (body_end > body_begin)
                    span.doc_text.assign(raw.substr(body_begin, body_end - body_begin));
            }
            out.comments.push_back(std::move(span));
            out.text.push_back(' ');
            i = j;
            continue;
        }
        out.text.push_back(c);
        ++i;
    }
    return out;
}

SourceText strip_comments(const SourceText& src) {
    return SourceText{strip_comments_ex(src.raw).text, src.origin};
}

std::size_t to_raw_offset(const StripResult& strip, std::size_t sanitized_offset) {
    std::size_t delta = 0;
    for (const CommentSpan& c : strip.comments) {
        if (c.sanitized_offset < sanitized_offset)
            delta += (c.raw_end - c.raw_begin) - 1;
        else
            break;
    }
    return sanitized_offset + delta;
}

std::vector<Token> tokenize_text(std::string_view s) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
        tokens.push_back(Token{kind, std::string(s.substr(begin, end - begin)), begin, end});
    };
    while (i < n) {
        if (static_cast<unsigned char>(s[i]) < 0x80 && is_ws(s[i])) {
            ++i;
            continue;
        }
        std::size_t len = 0;
        std::uint32_t c = decode_scalar(s, i, len);
        std::size_t start = i;

        if (c == kGuillemetOpen) {
            // «...» quoted identifier: one token including the delimiters.
            std::size_t j = i + len;
            bool closed = false;
            while (j < n) {
                std::size_t l2 = 0;
                std::uint32_t c2 = decode_scalar(s, j, l2);
                j += l2;
                if (c2 == kGuillemetClose) {
                    closed = true;
                    break;
                }
            }
            if (closed) {
                push(TokenKind::Identifier, start, j);
                i = j;
            } else {
                push(TokenKind::Symbol, start, start + len);
                i = start + len;
            }
            continue;
        }
        if (is_id_first(c)) {
            std::size_t j = i + len;
            while (j < n) {
                std::size_t l2 = 0;
                std::uint32_t c2 = decode_scalar(s, j, l2);
                if (!is_id_rest(c2)) break;
                j += l2;
            }
            push(TokenKind::Identifier, start, j);
            i = j;
            continue;
        }
        if (c < 0x80 && is_ascii_digit(static_cast<char>(c))) {
            std::size_t j = i + 1;
            if (s[i] == '0' && j < n && (s[j] == 'x' || s[j] == 'X')) {
                ++j;
                while (j < n && is_hex_digit(s[j])) ++j;
            } else if (s[i] == '0' && j < n && (s[j] == 'b' || s[j] == 'o')) {
                ++j;
                while (j < n && is_ascii_digit(s[j])) ++j;
            } else {
                while (j < n && is_ascii_digit(s[j])) ++j;
                if (j + 1 < n && s[j] == '.' && is_ascii_digit(s[j + 1])) {
                    ++j;
                    while (j < n && is_ascii_digit(s[j])) ++j;
                }
            }
            push(TokenKind::Numeral, start, j);
            i = j;
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            bool closed = false;
            while (j < n) {
                char ch = s[j];
                if (ch == '\\' && j + 1 < n) {
                    j += 2;
                    continue;
                }
                ++j;
                if (ch == '"') {
                    closed = true;
                    break;
                }
            }
            if (!closed)
                throw LexError(LexErrorKind::UnterminatedStringLiteral, start,
                               "unterminated string literal");
            push(TokenKind::StringLiteral, start, j);
            i = j;
            continue;
        }
        if (c == '\'') {
            // Char literal only when the 'x' pattern closes; otherwise a
            // plain symbol (primes inside identifiers were consumed above).
            std::size_t j = i + 1;
            if (j < n) {
                std::size_t body = 0;
                if (s[j] == '\\' && j + 1 < n) {
                    body = 2;
                } else if (s[j] != '\'') {
                    decode_scalar(s, j, body);
                }
                if (body > 0 && j + body < n && s[j + body] == '\'') {
                    push(TokenKind::CharLiteral, start, j + body + 1);
                    i = j + body + 1;
                    continue;
                }
            }
            push(TokenKind::Symbol, start, start + 1);
            ++i;
            continue;
        }
        // Symbol: the two-character digraphs lex as one token.
        if (c < 0x80 && i + 1 < n) {
            char a = s[i];
            char b = s[i + 1];
            bool digraph = (a == ':' && b == '=') || (a == '=' && b == '>') ||
                           (a == '-' && b == '>') || (a == '<' && b == '-');
            if (digraph) {
                push(TokenKind::Symbol, start, start + 2);
                i += 2;
                continue;
            }
        }
        push(TokenKind::Symbol, start, start + len);
        i += len;
    }
    return tokens;
}

std::vector<Token> tokenize(const SourceText& src) { return tokenize_text(src.raw); }

std::vector<ForbiddenFinding> find_forbidden(const std::vector<Token>& tokens,
                                             const std::vector<std::string>& sorry_like) {
    std::vector<ForbiddenFinding> findings;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.kind == TokenKind::StringLiteral) continue;
        if (std::find(sorry_like.begin(), sorry_like.end(), t.text) != sorry_like.end()) {
            findings.push_back({ForbiddenKind::SorryToken, i});
        } else if (t.text == "axiom") {
            findings.push_back({ForbiddenKind::AxiomDecl, i});
        }
    }
    return findings;
}

std::vector<ForbiddenFinding> find_forbidden(const std::vector<Token>& tokens) {
    static const std::vector<std::string> kDefault = {"sorry", "sorryAx"};
    return find_forbidden(tokens, kDefault);
}

std::size_t significant_length(std::string_view text) {
    std::size_t count = 0;
    for (char c : text) {
        unsigned char b = static_cast<unsigned char>(c);
        if ((b & 0xC0) == 0x80) continue;  // UTF-8 continuation byte
        if (is_ws(c)) continue;
        ++count;
    }
    return count;
}

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Numeral: return "numeral";
        case TokenKind::StringLiteral: return "string_literal";
        case TokenKind::CharLiteral: return "char_literal";
        case TokenKind::Symbol: return "symbol";
    }
    return "unknown";
}

}  // namespace combibench::lean_text
