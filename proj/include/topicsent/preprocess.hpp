#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace topicsent {

struct TokenizedDoc {
    int doc_id = 0;
    std::vector<std::string> tokens;
    std::vector<int> token_ids;  // assigned by the corpus module
};

/// Tweet normalizer. clean() applies, in fixed order: lowercase, URL
/// removal, mention removal, hashtag removal, contraction expansion,
/// punctuation/digit removal, short-word removal (< 2 chars), stop-word
/// removal, non-ASCII token removal. The composition is idempotent. The
/// individual stages are public so each rule can be exercised on its own.
class TextCleaner {
public:
    TextCleaner(std::unordered_set<std::string> stopwords,
                std::vector<std::pair<std::string, std::string>> contractions);

    static TextCleaner from_files(const std::string& stopwords_path,
                                  const std::string& contractions_path);

    std::string clean(std::string_view raw) const;

    static std::string lowercase(std::string_view s);
    static std::string strip_urls(std::string_view s);
    static std::string strip_mentions(std::string_view s);
    static std::string strip_hashtags(std::string_view s);
    std::string expand_contractions(std::string_view s) const;
    static std::string strip_punct_digits(std::string_view s);
    static std::string drop_short_tokens(std::string_view s);
    std::string drop_stopwords(std::string_view s) const;
    static std::string drop_non_ascii_tokens(std::string_view s);

    const std::unordered_set<std::string>& stopwords() const { return stopwords_; }

private:
    std::unordered_set<std::string> stopwords_;
    // sorted by key length descending so the longest contraction wins
    std::vector<std::pair<std::string, std::string>> contractions_;
};

/// Whitespace split; preserves order and duplicates.
std::vector<std::string> tokenize(std::string_view normalized);

}  // namespace topicsent
