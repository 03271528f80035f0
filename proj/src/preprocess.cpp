#include "topicsent/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "topicsent/errors.hpp"

namespace topicsent {

namespace {

bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Apply fn to each whitespace-separated token; fn returns the replacement
// (empty string drops the token). Output tokens are joined by single spaces.
template <typename Fn>
std::string map_tokens(std::string_view s, Fn&& fn) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_ws(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_ws(s[j])) ++j;
        if (j > i) {
            std::string repl = fn(s.substr(i, j - i));
            if (!repl.empty()) {
                if (!out.empty()) out += ' ';
                out += repl;
            }
        }
        i = j;
    }
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

}  // namespace

TextCleaner::TextCleaner(std::unordered_set<std::string> stopwords,
                         std::vector<std::pair<std::string, std::string>> contractions)
    : stopwords_(std::move(stopwords)), contractions_(std::move(contractions)) {
    std::stable_sort(contractions_.begin(), contractions_.end(),
                     [](const auto& a, const auto& b) {
                         return a.first.size() > b.first.size();
                     });
}

TextCleaner TextCleaner::from_files(const std::string& stopwords_path,
                                    const std::string& contractions_path) {
    std::unordered_set<std::string> stops;
    std::ifstream sf(stopwords_path);
    if (!sf) throw DataError("cannot open stop-word list: " + stopwords_path);
    std::string line;
    while (std::getline(sf, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) stops.insert(line);
    }

    std::vector<std::pair<std::string, std::string>> contr;
    std::ifstream cf(contractions_path);
    if (!cf) throw DataError("cannot open contraction table: " + contractions_path);
    while (std::getline(cf, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        contr.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return TextCleaner(std::move(stops), std::move(contr));
}

std::string TextCleaner::lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string TextCleaner::strip_urls(std::string_view s) {
    // A token touching "http" anywhere is URL debris; drop it whole so no
    // remnant can resurface after the punctuation pass.
    return map_tokens(s, [](std::string_view tok) -> std::string {
        if (tok.find("http") != std::string_view::npos || starts_with(tok, "www.")) return {};
        return std::string(tok);
    });
}

std::string TextCleaner::strip_mentions(std::string_view s) {
    return map_tokens(s, [](std::string_view tok) -> std::string {
        if (!tok.empty() && tok.front() == '@') return {};
        return std::string(tok);
    });
}

std::string TextCleaner::strip_hashtags(std::string_view s) {
    return map_tokens(s, [](std::string_view tok) -> std::string {
        if (!tok.empty() && tok.front() == '#') return {};
        return std::string(tok);
    });
}

std::string TextCleaner::expand_contractions(std::string_view s) const {
    // Typographic apostrophes (U+2019) count as plain apostrophes here.
    std::string norm;
    norm.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x80 &&
            static_cast<unsigned char>(s[i + 2]) == 0x99) {
            norm += '\'';
            i += 2;
        } else {
            norm += s[i];
        }
    }
    return map_tokens(norm, [this](std::string_view tok) -> std::string {
        for (const auto& [key, expansion] : contractions_) {
            if (tok.size() < key.size()) continue;
            if (tok.substr(0, key.size()) != key) continue;
            // word boundary: the contraction must not continue with a letter
            if (tok.size() > key.size()) {
                char next = tok[key.size()];
                if ((next >= 'a' && next <= 'z') || next == '\'') continue;
            }
            std::string out = expansion;
            out += tok.substr(key.size());
            return out;
        }
        return std::string(tok);
    });
}

std::string TextCleaner::strip_punct_digits(std::string_view s) {
    // Everything outside [a-z] and whitespace becomes a separator. Digits go
    // too, keeping the vocabulary word-only. Multi-byte UTF-8 sequences are
    // left intact for the later non-ASCII pass.
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        unsigned char uc = static_cast<unsigned char>(c);
        if ((c >= 'a' && c <= 'z') || uc >= 0x80 || is_ws(c)) {
            out += c;
        } else {
            out += ' ';
        }
    }
    return map_tokens(out, [](std::string_view tok) { return std::string(tok); });
}

std::string TextCleaner::drop_short_tokens(std::string_view s) {
    return map_tokens(s, [](std::string_view tok) -> std::string {
        if (tok.size() < 2) return {};
        return std::string(tok);
    });
}

std::string TextCleaner::drop_stopwords(std::string_view s) const {
    return map_tokens(s, [this](std::string_view tok) -> std::string {
        if (stopwords_.count(std::string(tok))) return {};
        return std::string(tok);
    });
}

std::string TextCleaner::drop_non_ascii_tokens(std::string_view s) {
    return map_tokens(s, [](std::string_view tok) -> std::string {
        for (char c : tok) {
            if (static_cast<unsigned char>(c) >= 0x80) return {};
        }
        return std::string(tok);
    });
}

std::string TextCleaner::clean(std::string_view raw) const {
    std::string t = lowercase(raw);
    t = strip_urls(t);
    t = strip_mentions(t);
    t = strip_hashtags(t);
    t = expand_contractions(t);
    t = strip_punct_digits(t);
    t = drop_short_tokens(t);
    t = drop_stopwords(t);
    t = drop_non_ascii_tokens(t);
    return t;
}

std::vector<std::string> tokenize(std::string_view normalized) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < normalized.size()) {
        while (i < normalized.size() && is_ws(normalized[i])) ++i;
        std::size_t j = i;
        while (j < normalized.size() && !is_ws(normalized[j])) ++j;
        if (j > i) tokens.emplace_back(normalized.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace topicsent
