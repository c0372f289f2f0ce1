#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Language-aware text utilities over Lean 4 surface syntax. Nothing here
// elaborates or parses Lean properly; it only needs to be exact about
// comments, string literals and token boundaries so that candidate code can
// be compared against a statement template without being fooled by
// reformatting or comment tricks.
namespace combibench::lean_text {

enum class TextOrigin { Template, Candidate, Constructed };

struct SourceText {
    std::string raw;
    TextOrigin origin = TextOrigin::Candidate;
};

enum class TokenKind { Identifier, Numeral, StringLiteral, CharLiteral, Symbol };

struct Token {
    TokenKind kind = TokenKind::Symbol;
    std::string text;
    // Byte offsets into the sanitized source, [begin, end).
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class ForbiddenKind { SorryToken, AxiomDecl };

struct ForbiddenFinding {
    ForbiddenKind kind = ForbiddenKind::SorryToken;
    std::size_t token_index = 0;
};

enum class LexErrorKind { UnterminatedBlockComment, UnterminatedStringLiteral };

// Malformed surface syntax. Callers treat the offending sample as failed;
// there is deliberately no best-effort recovery.
class LexError : public std::runtime_error {
public:
    LexError(LexErrorKind kind, std::size_t offset, const std::string& message)
        : std::runtime_error(message), kind_(kind), offset_(offset) {}

    LexErrorKind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    LexErrorKind kind_;
    std::size_t offset_;
};

// One comment removed by strip_comments: bytes [raw_begin, raw_end) of the
// original text were replaced by a single space at sanitized_offset.
struct CommentSpan {
    std::size_t raw_begin = 0;
    std::size_t raw_end = 0;
    std::size_t sanitized_offset = 0;
    bool is_doc = false;
    std::string doc_text;  // contents without the /-- -/ delimiters
};

struct StripResult {
    std::string text;
    std::vector<CommentSpan> comments;
};

// Removes `--` line comments and nested `/- ... -/` blocks (doc comments
// `/-- ... -/` included), each replaced by one space. Comment syntax inside
// double-quoted string literals is left alone. Throws LexError on an
// unterminated block comment or string literal.
StripResult strip_comments_ex(std::string_view raw);
SourceText strip_comments(const SourceText& src);

// Maps a byte offset in the sanitized text back to the original text.
std::size_t to_raw_offset(const StripResult& strip, std::size_t sanitized_offset);

// Lexes comment-free source into tokens. Tokens partition all non-whitespace
// bytes; the digraphs `:=` `=>` `->` `<-` lex as one symbol token, every
// other symbol is a single scalar.
std::vector<Token> tokenize_text(std::string_view sanitized);
std::vector<Token> tokenize(const SourceText& src);

// Token-exact detection of `sorry`/`sorryAx` and `axiom`, skipping string
// literals. `sorry_like` overrides the default sorry deny-list.
std::vector<ForbiddenFinding> find_forbidden(const std::vector<Token>& tokens);
std::vector<ForbiddenFinding> find_forbidden(const std::vector<Token>& tokens,
                                             const std::vector<std::string>& sorry_like);

// Unicode scalar count after deleting spaces, tabs, newlines and carriage
// returns.
std::size_t significant_length(std::string_view text);

// True for space, tab, LF, CR.
bool is_insignificant_char(char c);

const char* token_kind_name(TokenKind kind);

}  // namespace combibench::lean_text
