#include "agfsync/core/text.hpp"

#include <algorithm>
#include <cctype>

namespace agfsync::core {

namespace {
inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
inline char lower(char c) { return char(std::tolower(static_cast<unsigned char>(c))); }
inline bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
}  // namespace

std::size_t word_count(std::string_view text) {
    std::size_t count = 0;
    bool in_word = false;
    for (char c : text) {
        if (is_space(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++count;
        }
    }
    return count;
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), lower);
    return out;
}

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    return std::string(text.substr(begin, end - begin));
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_space(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(c);
        }
    }
    return out;
}

std::string normalize_question(std::string_view question) {
    std::string s = collapse_whitespace(to_lower(question));
    while (!s.empty() && (s.back() == '?' || s.back() == '.' || s.back() == '!' || s.back() == ' ')) {
        s.pop_back();
    }
    return s;
}

std::string normalize_caption(std::string_view caption) {
    return collapse_whitespace(to_lower(caption));
}

std::string normalize_answer(std::string_view answer) {
    std::string out;
    out.reserve(answer.size());
    for (char c : answer) {
        if (is_punct(c)) continue;
        out.push_back(is_space(c) ? ' ' : lower(c));
    }
    return collapse_whitespace(out);
}

bool answer_is_yes(std::string_view answer) {
    std::string norm = normalize_answer(answer);
    if (norm == "yes") return true;
    return norm.rfind("yes ", 0) == 0;
}

std::string strip_code_fences(std::string_view reply) {
    std::string s = trim(reply);
    if (s.rfind("```", 0) != 0) return s;
    std::size_t first_nl = s.find('\n');
    if (first_nl == std::string::npos) return s;
    std::size_t closing = s.rfind("```");
    if (closing <= first_nl) return s;
    return trim(std::string_view(s).substr(first_nl + 1, closing - first_nl - 1));
}

std::string slugify(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (is_space(c)) {
            if (!out.empty() && out.back() != '_') out.push_back('_');
        } else if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(lower(c));
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

}  // namespace agfsync::core
