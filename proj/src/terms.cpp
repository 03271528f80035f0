#include "topicsent/terms.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "topicsent/errors.hpp"

namespace topicsent {

const char* pos_name(Pos pos) {
    switch (pos) {
        case Pos::Noun: return "NOUN";
        case Pos::Verb: return "VERB";
        case Pos::Adj: return "ADJ";
        case Pos::Adv: return "ADV";
        case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

Pos pos_from_name(std::string_view name) {
    if (name == "NOUN") return Pos::Noun;
    if (name == "VERB") return Pos::Verb;
    if (name == "ADJ") return Pos::Adj;
    if (name == "ADV") return Pos::Adv;
    if (name == "OTHER") return Pos::Other;
    throw DataError("unknown POS tag: " + std::string(name));
}

PosTagger::PosTagger(std::unordered_map<std::string, Pos> lexicon,
                     std::vector<std::pair<std::string, Pos>> suffix_rules)
    : lexicon_(std::move(lexicon)), suffix_rules_(std::move(suffix_rules)) {
    std::stable_sort(suffix_rules_.begin(), suffix_rules_.end(),
                     [](const auto& a, const auto& b) {
                         return a.first.size() > b.first.size();
                     });
}

PosTagger PosTagger::from_files(const std::string& lexicon_path,
                                const std::string& suffix_rules_path) {
    auto read_tsv = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DataError("cannot open: " + path);
        std::vector<std::pair<std::string, std::string>> rows;
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            auto tab = line.find('\t');
            if (tab == std::string::npos) continue;
            rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
        }
        return rows;
    };

    std::unordered_map<std::string, Pos> lexicon;
    for (auto& [word, tag] : read_tsv(lexicon_path)) lexicon.emplace(word, pos_from_name(tag));

    std::vector<std::pair<std::string, Pos>> suffixes;
    for (auto& [suffix, tag] : read_tsv(suffix_rules_path))
        suffixes.emplace_back(suffix, pos_from_name(tag));

    return PosTagger(std::move(lexicon), std::move(suffixes));
}

Pos PosTagger::tag(std::string_view token) const {
    auto hit = lexicon_.find(std::string(token));
    if (hit != lexicon_.end()) return hit->second;
    for (const auto& [suffix, pos] : suffix_rules_) {
        // stem must keep at least two characters
        if (token.size() >= suffix.size() + 2 &&
            token.substr(token.size() - suffix.size()) == suffix) {
            return pos;
        }
    }
    return Pos::Noun;
}

PosTaggedDoc PosTagger::tag_doc(const TokenizedDoc& doc) const {
    PosTaggedDoc out;
    out.doc_id = doc.doc_id;
    out.tagged.reserve(doc.tokens.size());
    for (const auto& tok : doc.tokens) out.tagged.emplace_back(tok, tag(tok));
    return out;
}

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// doubled consonants produced by CVC doubling (run -> running); ll/ss/ff
// stay because words like fall or miss end doubled on their own
bool strippable_double(std::string_view s) {
    if (s.size() < 2) return false;
    char a = s[s.size() - 2], b = s[s.size() - 1];
    if (a != b) return false;
    switch (b) {
        case 'b': case 'd': case 'g': case 'm':
        case 'n': case 'p': case 'r': case 't':
            return true;
        default:
            return false;
    }
}

// consonant-vowel-consonant ending implies a dropped silent e (mak -> make)
bool cvc_ending(std::string_view s) {
    if (s.size() < 3) return false;
    char c1 = s[s.size() - 3], c2 = s[s.size() - 2], c3 = s[s.size() - 1];
    if (is_vowel(c1) || !is_vowel(c2) || is_vowel(c3)) return false;
    return c3 != 'w' && c3 != 'x' && c3 != 'y';
}

std::string strip_verb_suffix(std::string_view token) {
    std::string t(token);
    if (ends_with(t, "ing") && t.size() >= 5) {
        std::string stem = t.substr(0, t.size() - 3);
        if (strippable_double(stem)) return stem.substr(0, stem.size() - 1);
        if (cvc_ending(stem)) return stem + 'e';
        return stem;
    }
    if (ends_with(t, "ied") && t.size() >= 5) return t.substr(0, t.size() - 3) + 'y';
    if (ends_with(t, "ed") && t.size() >= 4) {
        std::string stem = t.substr(0, t.size() - 2);
        if (strippable_double(stem)) return stem.substr(0, stem.size() - 1);
        if (stem.size() < 3) return stem + 'e';
        if (cvc_ending(stem)) return stem + 'e';
        return stem;
    }
    if (ends_with(t, "ies") && t.size() >= 5) return t.substr(0, t.size() - 3) + 'y';
    if (ends_with(t, "sses")) return t.substr(0, t.size() - 2);
    if (ends_with(t, "es") && t.size() >= 4) {
        char before = t[t.size() - 3];
        if (before == 'x' || before == 'z' || before == 'o' ||
            ends_with(std::string_view(t).substr(0, t.size() - 2), "ch") ||
            ends_with(std::string_view(t).substr(0, t.size() - 2), "sh")) {
            return t.substr(0, t.size() - 2);
        }
        return t.substr(0, t.size() - 1);  // takes -> take
    }
    if (ends_with(t, "s") && t.size() >= 3 && !ends_with(t, "ss") && !ends_with(t, "us") &&
        !ends_with(t, "is")) {
        return t.substr(0, t.size() - 1);
    }
    return t;
}

std::string strip_noun_plural(std::string_view token) {
    std::string t(token);
    // a handful of -ves plurals worth getting right
    static const std::unordered_map<std::string, std::string> kIrregular = {
        {"shelves", "shelf"}, {"lives", "life"},   {"knives", "knife"},
        {"wives", "wife"},    {"leaves", "leaf"},  {"viruses", "virus"},
        {"men", "man"},       {"women", "woman"},  {"feet", "foot"},
    };
    auto hit = kIrregular.find(t);
    if (hit != kIrregular.end()) return hit->second;

    if (ends_with(t, "ies") && t.size() >= 5) return t.substr(0, t.size() - 3) + 'y';
    if (ends_with(t, "sses")) return t.substr(0, t.size() - 2);
    if (ends_with(t, "ses") && t.size() >= 5) {
        // case+s vs lens+es: a vowel before -ses means the stem keeps its e
        char before = t[t.size() - 4];
        if (is_vowel(before)) return t.substr(0, t.size() - 1);
        return t.substr(0, t.size() - 2);
    }
    if (ends_with(t, "es") && t.size() >= 4) {
        char before = t[t.size() - 3];
        if (before == 'x' || before == 'z' || before == 'o' ||
            ends_with(std::string_view(t).substr(0, t.size() - 2), "ch") ||
            ends_with(std::string_view(t).substr(0, t.size() - 2), "sh")) {
            return t.substr(0, t.size() - 2);
        }
        return t.substr(0, t.size() - 1);
    }
    if (ends_with(t, "s") && t.size() >= 3 && !ends_with(t, "ss") && !ends_with(t, "us") &&
        !ends_with(t, "is")) {
        return t.substr(0, t.size() - 1);
    }
    return t;
}

}  // namespace

std::string lemmatize(std::string_view token, Pos pos) {
    // common -ing forms whose stems the generic rules mangle
    static const std::unordered_map<std::string, std::string> kVerbExceptions = {
        {"being", "be"},           {"doing", "do"},         {"going", "go"},
        {"having", "have"},        {"saying", "say"},       {"seeing", "see"},
        {"visiting", "visit"},     {"opening", "open"},     {"listening", "listen"},
        {"happening", "happen"},   {"offering", "offer"},   {"ordering", "order"},
        {"entering", "enter"},     {"covering", "cover"},   {"delivering", "deliver"},
        {"remembering", "remember"}, {"considering", "consider"}, {"wondering", "wonder"},
        {"suffering", "suffer"},   {"travelling", "travel"}, {"traveling", "travel"},
        {"panicking", "panic"},    {"queueing", "queue"},   {"queuing", "queue"},
    };

    std::string result;
    switch (pos) {
        case Pos::Verb: {
            auto hit = kVerbExceptions.find(std::string(token));
            if (hit != kVerbExceptions.end()) return hit->second;
            result = strip_verb_suffix(token);
            break;
        }
        case Pos::Noun:
            result = strip_noun_plural(token);
            break;
        default:
            result = std::string(token);
            break;
    }
    if (result.empty()) return std::string(token);
    return result;
}

TermSets extract_terms(const PosTaggedDoc& doc) {
    TermSets out;
    out.doc_id = doc.doc_id;
    std::unordered_set<std::string> in_sentiment;
    std::unordered_set<std::string> in_aspect;

    for (const auto& [token, pos] : doc.tagged) {
        if (pos == Pos::Adj || pos == Pos::Verb) {
            std::string lemma = lemmatize(token, pos);
            if (in_sentiment.insert(lemma).second) out.sentiment_terms.push_back(std::move(lemma));
        }
    }
    for (const auto& [token, pos] : doc.tagged) {
        if (pos == Pos::Noun) {
            std::string lemma = lemmatize(token, pos);
            if (in_sentiment.count(lemma)) continue;  // sentiment wins the tie
            if (in_aspect.insert(lemma).second) out.aspect_terms.push_back(std::move(lemma));
        }
    }
    return out;
}

}  // namespace topicsent
