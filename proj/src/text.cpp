#include "ontoembed/text.hpp"

#include <cctype>

namespace ontoembed {

namespace {

inline bool is_letter(unsigned char c) { return std::isalpha(c) != 0; }
inline bool is_alnum(unsigned char c) { return std::isalnum(c) != 0; }
inline bool is_upper(unsigned char c) { return std::isupper(c) != 0; }
inline bool is_lower(unsigned char c) { return std::islower(c) != 0; }

}  // namespace

std::vector<std::string> camel_split(std::string_view word) {
    std::vector<std::string> parts;
    std::string current;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const unsigned char c = word[i];
        const bool boundary =
            !current.empty() && is_upper(c) &&
            (is_lower(static_cast<unsigned char>(current.back())) ||
             (i + 1 < word.size() && is_lower(static_cast<unsigned char>(word[i + 1]))));
        if (boundary) {
            parts.push_back(current);
            current.clear();
        }
        current.push_back(static_cast<char>(c));
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string chunk;
    auto flush = [&]() {
        if (chunk.empty()) return;
        for (auto& part : camel_split(chunk)) {
            bool pure_letters = true;
            for (char& ch : part) {
                if (!is_letter(static_cast<unsigned char>(ch))) {
                    pure_letters = false;
                    break;
                }
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            }
            if (pure_letters && !part.empty()) tokens.push_back(std::move(part));
        }
        chunk.clear();
    };
    for (char c : text) {
        if (is_alnum(static_cast<unsigned char>(c))) {
            chunk.push_back(c);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

}  // namespace ontoembed
