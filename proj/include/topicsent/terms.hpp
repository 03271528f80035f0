#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "topicsent/preprocess.hpp"

namespace topicsent {

enum class Pos { Noun, Verb, Adj, Adv, Other };

const char* pos_name(Pos pos);
Pos pos_from_name(std::string_view name);  // throws DataError on unknown tag

struct PosTaggedDoc {
    int doc_id = 0;
    std::vector<std::pair<std::string, Pos>> tagged;
};

struct TermSets {
    int doc_id = 0;
    std::vector<std::string> sentiment_terms;  // adjective/verb lemmas, deduplicated
    std::vector<std::string> aspect_terms;     // noun lemmas, deduplicated
};

/// Deterministic coarse tagger: exact lexicon lookup, then longest-suffix
/// rule, then NOUN.
class PosTagger {
public:
    PosTagger(std::unordered_map<std::string, Pos> lexicon,
              std::vector<std::pair<std::string, Pos>> suffix_rules);

    static PosTagger from_files(const std::string& lexicon_path,
                                const std::string& suffix_rules_path);

    Pos tag(std::string_view token) const;
    PosTaggedDoc tag_doc(const TokenizedDoc& doc) const;

private:
    std::unordered_map<std::string, Pos> lexicon_;
    std::vector<std::pair<std::string, Pos>> suffix_rules_;  // longest first
};

/// Rule-based lemmatizer. Verbs lose -ing/-ed/-s with doubled-consonant and
/// silent-e restoration, nouns lose plural endings, everything else passes
/// through. Never returns an empty string.
std::string lemmatize(std::string_view token, Pos pos);

/// Sentiment terms = ADJ/VERB lemmas in token order, deduplicated; aspect
/// terms = NOUN lemmas likewise. A lemma landing in both lists is kept in
/// sentiment_terms only.
TermSets extract_terms(const PosTaggedDoc& doc);

// Provenance record: which token position produced each emitted lemma.
struct TermProvenance {
    std::string lemma;
    int token_index = 0;
    bool sentiment = false;
};
std::vector<TermProvenance> extract_terms_traced(const PosTaggedDoc& doc);

}  // namespace topicsent
