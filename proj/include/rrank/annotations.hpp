#pragma once
// Caption annotations: an id plus the verb-class and noun-class sets that
// drive the relevance function. Parsed from a small CSV dialect:
//
//   id,verb_class,noun_classes
//   c000001,3,7 9
//
// Class fields are space-separated non-negative integers (verb_class is
// usually a single value; multiple are accepted). Class sets are kept as
// sorted, deduplicated vectors.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace rrank {

struct CaptionAnnotation {
    std::string id;
    std::vector<int> verb_classes;  // sorted, unique, non-empty
    std::vector<int> noun_classes;  // sorted, unique, non-empty
};

enum class RelevanceMode {
    Full,            // 0.5 * (verb IoU + noun IoU)
    VerbFixedToOne,  // verb IoU pinned to 1
    NounFixedToOne,  // noun IoU pinned to 1
};

inline const char* to_string(RelevanceMode mode) {
    switch (mode) {
        case RelevanceMode::Full: return "full";
        case RelevanceMode::VerbFixedToOne: return "verb1";
        case RelevanceMode::NounFixedToOne: return "noun1";
    }
    return "full";
}

inline RelevanceMode relevance_mode_from_string(std::string_view s) {
    if (s == "full") return RelevanceMode::Full;
    if (s == "verb1") return RelevanceMode::VerbFixedToOne;
    if (s == "noun1") return RelevanceMode::NounFixedToOne;
    throw std::invalid_argument("unknown relevance mode '" + std::string(s) +
                                "' (expected full|verb1|noun1)");
}

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<int> parse_class_field(std::string_view field, std::size_t line,
                                          const char* name) {
    std::vector<int> classes;
    std::size_t pos = 0;
    while (pos < field.size()) {
        while (pos < field.size() && field[pos] == ' ') ++pos;
        if (pos >= field.size()) break;
        std::size_t end = field.find(' ', pos);
        if (end == std::string_view::npos) end = field.size();
        std::string_view token = field.substr(pos, end - pos);
        int value = 0;
        for (char c : token) {
            if (c < '0' || c > '9')
                throw ParseError(line, std::string("non-integer token '") + std::string(token) +
                                           "' in " + name);
            if (value > 214748363)
                throw ParseError(line, std::string("class id out of range in ") + name);
            value = value * 10 + (c - '0');
        }
        classes.push_back(value);
        pos = end;
    }
    if (classes.empty())
        throw ParseError(line, std::string("empty ") + name + " field");
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

}  // namespace detail

// Parses the whole CSV text. Throws ParseError (with the offending 1-based
// line number) on a bad header, wrong field count, malformed class token,
// empty class field, or duplicate id.
inline std::vector<CaptionAnnotation> parse_annotations(std::string_view csv_text) {
    std::vector<CaptionAnnotation> annotations;
    std::unordered_set<std::string> seen_ids;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos <= csv_text.size()) {
        if (pos == csv_text.size() && line_no > 0) break;
        std::size_t eol = csv_text.find('\n', pos);
        if (eol == std::string_view::npos) eol = csv_text.size();
        std::string_view raw = csv_text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        if (!saw_header) {
            if (raw != "id,verb_class,noun_classes")
                throw ParseError(line_no, "missing or malformed header "
                                          "(expected 'id,verb_class,noun_classes')");
            saw_header = true;
            continue;
        }
        if (raw.empty()) {
            if (pos >= csv_text.size()) break;  // single trailing newline
            throw ParseError(line_no, "empty line");
        }

        std::size_t c1 = raw.find(',');
        std::size_t c2 = (c1 == std::string_view::npos) ? std::string_view::npos
                                                        : raw.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            raw.find(',', c2 + 1) != std::string_view::npos)
            throw ParseError(line_no, "expected exactly 3 comma-separated fields");

        CaptionAnnotation ann;
        ann.id = std::string(raw.substr(0, c1));
        if (ann.id.empty()) throw ParseError(line_no, "empty id field");
        ann.verb_classes = detail::parse_class_field(raw.substr(c1 + 1, c2 - c1 - 1),
                                                     line_no, "verb_class");
        ann.noun_classes = detail::parse_class_field(raw.substr(c2 + 1), line_no,
                                                     "noun_classes");
        if (!seen_ids.insert(ann.id).second)
            throw ParseError(line_no, "duplicate id '" + ann.id + "'");
        annotations.push_back(std::move(ann));
    }
    if (!saw_header) throw ParseError(1, "missing header");
    return annotations;
}

inline std::string format_annotations_csv(const std::vector<CaptionAnnotation>& annotations) {
    std::string out = "id,verb_class,noun_classes\n";
    for (const auto& ann : annotations) {
        out += ann.id;
        out += ',';
        for (std::size_t i = 0; i < ann.verb_classes.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(ann.verb_classes[i]);
        }
        out += ',';
        for (std::size_t i = 0; i < ann.noun_classes.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(ann.noun_classes[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace rrank
